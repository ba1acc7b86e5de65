#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
SPDX-FileCopyrightText: Siemens AG, 2020 Gaurav Mishra <mishra.gaurav@siemens.com>

SPDX-License-Identifier: MIT
"""
__author__ = "Siemens AG"

import math
import itertools
from fractions import Fraction

import networkx as nx

from guest_to_host.exceptions import GraphError
from guest_to_host.exceptions import OreDegreeViolation

INFINITE = math.inf


class Graph:
    """
    Immutable simple undirected graph on vertices 0..n-1

    :ivar n: Number of vertices
    :ivar m: Number of edges
    """

    __slots__ = ("__n", "__adj", "__sorted", "__edges", "__nx")

    def __init__(self, n, edges=()):
        """
        Build the graph and validate the edge list.

        :param n: Number of vertices
        :type n: int
        :param edges: Iterable of vertex pairs
        :type edges: iterable
        :raises GraphError: On loops or ids out of range
        """
        if n < 0:
            raise GraphError(f"vertex count can not be negative, {n} passed")
        adj = [set() for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) outside 0..{n - 1}")
            adj[u].add(v)
            adj[v].add(u)
        self.__n = n
        self.__adj = tuple(frozenset(s) for s in adj)
        self.__sorted = tuple(tuple(sorted(s)) for s in adj)
        self.__edges = tuple(sorted((u, v) for u in range(n)
                                    for v in self.__sorted[u] if u < v))
        self.__nx = None

    @property
    def n(self):
        return self.__n

    @property
    def m(self):
        return len(self.__edges)

    @property
    def edges(self):
        """
        Edges as sorted (u, v) pairs with u < v
        """
        return self.__edges

    def vertices(self):
        return range(self.__n)

    def neighbors(self, v):
        """
        Neighbors of v in ascending id order
        """
        return self.__sorted[v]

    def neighbor_set(self, v):
        return self.__adj[v]

    def degree(self, v):
        return len(self.__adj[v])

    def degree_in(self, v, vertex_set):
        """
        Number of neighbors of v inside vertex_set, written deg(v, A)

        :param v: Vertex
        :param vertex_set: Set (or frozenset) of vertices
        :return: |N(v) & A|
        :rtype: int
        """
        if not isinstance(vertex_set, (set, frozenset)):
            vertex_set = set(vertex_set)
        return len(self.__adj[v] & vertex_set)

    def has_edge(self, u, v):
        return v in self.__adj[u]

    def degrees(self):
        return [len(s) for s in self.__adj]

    def min_degree(self):
        return min(self.degrees()) if self.__n else 0

    def max_degree(self):
        return max(self.degrees()) if self.__n else 0

    def common_neighbors(self, vertices, within=None):
        """
        Vertices adjacent to every vertex of ``vertices``, optionally
        restricted to ``within``
        """
        vertices = list(vertices)
        if not vertices:
            result = set(range(self.__n))
        else:
            result = set(self.__adj[vertices[0]])
            for v in vertices[1:]:
                result &= self.__adj[v]
        if within is not None:
            result &= set(within)
        return result

    def edges_between(self, x_set, y_set):
        """
        e(X, Y): edges with one end in X and the other in Y (X, Y disjoint)
        """
        y_set = set(y_set)
        return sum(len(self.__adj[x] & y_set) for x in x_set)

    def edges_inside(self, vertex_set):
        """
        e(G[A])
        """
        vertex_set = set(vertex_set)
        return sum(len(self.__adj[x] & vertex_set) for x in vertex_set) // 2

    def induced(self, vertex_set):
        """
        Induced subgraph G[A] relabelled to 0..|A|-1

        :return: (subgraph, list mapping new id -> old id)
        :rtype: tuple
        """
        old = sorted(vertex_set)
        index = {v: i for i, v in enumerate(old)}
        edges = [(index[u], index[v]) for u in old for v in self.__sorted[u]
                 if v in index and u < v]
        return Graph(len(old), edges), old

    def bipartite_view(self, x_set, y_set):
        """
        Edges of G[X, Y] as (x, y) pairs with x in X, y in Y
        """
        x_set, y_set = set(x_set), set(y_set)
        if x_set & y_set:
            raise GraphError("bipartite view needs disjoint sides")
        return [(x, y) for x in sorted(x_set) for y in self.__sorted[x]
                if y in y_set]

    def complement(self):
        return Graph(self.__n, [(u, v) for u, v in
                                itertools.combinations(range(self.__n), 2)
                                if v not in self.__adj[u]])

    def add_edges(self, edges):
        """
        New graph with the extra edges added
        """
        return Graph(self.__n, list(self.__edges) + list(edges))

    def add_vertices(self, count, edges=()):
        """
        New graph with ``count`` extra vertices (ids n..n+count-1)
        """
        return Graph(self.__n + count, list(self.__edges) + list(edges))

    def relabel(self, perm):
        """
        New graph where vertex v becomes perm[v]
        """
        return Graph(self.__n, [(perm[u], perm[v]) for u, v in self.__edges])

    def to_networkx(self):
        """
        networkx view of the graph; nodes inserted in ascending id order
        """
        if self.__nx is None:
            graph = nx.Graph()
            graph.add_nodes_from(range(self.__n))
            graph.add_edges_from(self.__edges)
            self.__nx = graph
        return self.__nx

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.__n == other.n and self.__edges == other.edges

    def __hash__(self):
        return hash((self.__n, self.__edges))

    def __repr__(self):
        return f"Graph(n={self.__n}, m={self.m})"


class ComponentKind:
    """
    Isomorphism type of a connected component

    :ivar tag: One of the TAGS
    :ivar length: Edge count for Path and Cycle, None otherwise
    """

    ISOLATED = "IsolatedVertex"
    EDGE = "Edge"
    PATH = "Path"
    CYCLE = "Cycle"
    CLAW = "Claw"
    STAR4 = "Star4"
    TRIANGLE = "TriangleComponent"
    OTHER = "Other"
    TAGS = (ISOLATED, EDGE, PATH, CYCLE, CLAW, STAR4, TRIANGLE, OTHER)

    __slots__ = ("tag", "length")

    def __init__(self, tag, length=None):
        if tag not in self.TAGS:
            raise GraphError(f"unknown component kind {tag}")
        self.tag = tag
        self.length = length

    def __eq__(self, other):
        if not isinstance(other, ComponentKind):
            return NotImplemented
        return (self.tag, self.length) == (other.tag, other.length)

    def __hash__(self):
        return hash((self.tag, self.length))

    def __repr__(self):
        if self.length is None:
            return self.tag
        return f"{self.tag}({self.length})"


def ore_degree(graph):
    """
    Ore-degree: max of deg(x)+deg(y) over edges xy; 0 when edgeless

    :param graph: Graph to measure
    :type graph: Graph
    :rtype: int
    """
    return max((graph.degree(u) + graph.degree(v) for u, v in graph.edges),
               default=0)


def delta2(graph):
    """
    Minimum of deg(x)+deg(y) over non-adjacent distinct pairs.

    :return: The minimum, or None when the graph is complete
    """
    best = None
    degrees = graph.degrees()
    for u, v in itertools.combinations(graph.vertices(), 2):
        if not graph.has_edge(u, v):
            value = degrees[u] + degrees[v]
            if best is None or value < best:
                best = value
    return best


def is_ore_bounded(graph, bound):
    return ore_degree(graph) <= bound


def require_ore_bounded(graph, bound):
    """
    Raise unless theta(graph) <= bound

    :raises OreDegreeViolation: With the heaviest edge as witness
    """
    heaviest = max(graph.edges, default=None,
                   key=lambda e: graph.degree(e[0]) + graph.degree(e[1]))
    if heaviest is not None:
        theta = graph.degree(heaviest[0]) + graph.degree(heaviest[1])
        if theta > bound:
            raise OreDegreeViolation(
                f"Ore-degree {theta} exceeds {bound} on edge {heaviest}",
                bound=bound, witness=heaviest)


def min_degree_holds(graph, numerator, denominator):
    """
    Integer-semantics check of delta(G) >= ceil(numerator * n / denominator)
    """
    need = -(-numerator * graph.n // denominator)
    return graph.min_degree() >= need


def _kind_of(graph, component):
    size = len(component)
    degrees = sorted(graph.degree(v) for v in component)
    edges = sum(degrees) // 2
    if size == 1:
        return ComponentKind(ComponentKind.ISOLATED)
    if size == 2:
        return ComponentKind(ComponentKind.EDGE)
    if edges == size - 1 and degrees[-1] <= 2:
        return ComponentKind(ComponentKind.PATH, size - 1)
    if edges == size and degrees[0] == 2 and degrees[-1] == 2:
        if size == 3:
            return ComponentKind(ComponentKind.TRIANGLE)
        return ComponentKind(ComponentKind.CYCLE, size)
    if edges == size - 1 and degrees[-1] == size - 1 and degrees[-2] == 1:
        if size == 4:
            return ComponentKind(ComponentKind.CLAW)
        if size == 5:
            return ComponentKind(ComponentKind.STAR4)
    return ComponentKind(ComponentKind.OTHER)


def components(graph):
    """
    Connected components as frozensets, ordered by their lowest vertex
    """
    parts = [frozenset(c) for c in nx.connected_components(graph.to_networkx())]
    return sorted(parts, key=min)


def classify_components(graph):
    """
    Classify every connected component by isomorphism type.

    :param graph: Graph to classify
    :type graph: Graph
    :return: List of (frozenset of vertices, ComponentKind) by lowest vertex
    :rtype: list
    """
    return [(part, _kind_of(graph, part)) for part in components(graph)]


def theta_structure(graph):
    """
    Structural regime of a guest by its Ore-degree. For theta <= 3 every
    component is an isolated vertex, an edge or a path of length 2; for
    theta = 4 every component is a path, a cycle or a claw.

    :return: dict with theta, regime and component census
    :raises OreDegreeViolation: When the component claims fail
    """
    theta = ore_degree(graph)
    census = {}
    kinds = classify_components(graph)
    for _, kind in kinds:
        census[repr(kind)] = census.get(repr(kind), 0) + 1
    if theta <= 3:
        allowed = {ComponentKind.ISOLATED, ComponentKind.EDGE}
        for part, kind in kinds:
            if kind.tag not in allowed and kind != ComponentKind(
                    ComponentKind.PATH, 2):
                raise OreDegreeViolation(
                    f"theta {theta} but component {kind} found",
                    bound=3, witness=min(part))
        regime = "theta<=3"
    elif theta == 4:
        allowed = {ComponentKind.ISOLATED, ComponentKind.EDGE,
                   ComponentKind.PATH, ComponentKind.CYCLE,
                   ComponentKind.TRIANGLE, ComponentKind.CLAW}
        for part, kind in kinds:
            if kind.tag not in allowed:
                raise OreDegreeViolation(
                    f"theta 4 but component {kind} found",
                    bound=4, witness=min(part))
        regime = "theta=4"
    else:
        regime = f"theta={theta}"
    return {"theta": theta, "regime": regime, "census": census}


def distance(graph, u, v):
    """
    Shortest-path edge count between u and v; INFINITE across components
    """
    for w in (u, v):
        if not 0 <= w < graph.n:
            raise GraphError(f"vertex {w} outside 0..{graph.n - 1}")
    try:
        return nx.shortest_path_length(graph.to_networkx(), u, v)
    except nx.NetworkXNoPath:
        return INFINITE


def ball(graph, v, radius):
    """
    Vertices at distance at most ``radius`` from v
    """
    return set(nx.single_source_shortest_path_length(
        graph.to_networkx(), v, cutoff=radius))


def density(graph, x_set, y_set):
    """
    Exact density e(X,Y)/(|X||Y|) of two disjoint nonempty vertex sets

    :rtype: Fraction
    :raises GraphError: On overlapping or empty sides
    """
    x_set, y_set = set(x_set), set(y_set)
    if not x_set or not y_set:
        raise GraphError("density needs two nonempty sides")
    if x_set & y_set:
        raise GraphError("density needs disjoint sides")
    return Fraction(graph.edges_between(x_set, y_set),
                    len(x_set) * len(y_set))


def complete_graph(n):
    return Graph(n, itertools.combinations(range(n), 2))


def empty_graph(n):
    return Graph(n)


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, {n} passed")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves):
    """
    K_{1,leaves} with center 0
    """
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_multipartite(*sizes):
    """
    Complete multipartite graph; parts occupy consecutive id ranges in the
    order given
    """
    bounds, start = [], 0
    for size in sizes:
        bounds.append(range(start, start + size))
        start += size
    edges = [(u, v) for a, b in itertools.combinations(bounds, 2)
             for u in a for v in b]
    return Graph(start, edges)


def disjoint_union(*graphs):
    """
    Disjoint union; the i-th graph is shifted past the previous ones
    """
    edges, offset = [], 0
    for graph in graphs:
        edges.extend((u + offset, v + offset) for u, v in graph.edges)
        offset += graph.n
    return Graph(offset, edges)
