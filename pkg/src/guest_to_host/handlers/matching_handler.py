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
import numpy as np

from guest_to_host.exceptions import InternalCheckFailure
from guest_to_host.exceptions import MatchingError

_SOURCE = -1
_SINK = -2


class BipartiteGraph:
    """
    Bipartite graph between a left side R and a right side S. Labels on
    either side can be any hashable value; sides may share labels.

    :ivar left: Left vertices in processing order
    :ivar right: Right vertices in processing order
    """

    def __init__(self, left, right, edges=()):
        """
        :param left: Left vertices
        :type left: iterable
        :param right: Right vertices
        :type right: iterable
        :param edges: (r, s) pairs with r on the left and s on the right
        :type edges: iterable
        :raises MatchingError: When an edge leaves the two sides
        """
        self.left = tuple(left)
        self.right = tuple(right)
        self.__left_index = {r: i for i, r in enumerate(self.left)}
        self.__right_index = {s: j for j, s in enumerate(self.right)}
        self.__left_adj = {r: [] for r in self.left}
        self.__right_adj = {s: [] for s in self.right}
        for r, s in edges:
            if r not in self.__left_index or s not in self.__right_index:
                raise MatchingError(f"edge ({r}, {s}) not between the sides")
            self.__left_adj[r].append(s)
            self.__right_adj[s].append(r)
        for r in self.left:
            self.__left_adj[r].sort(key=self.__right_index.__getitem__)
        for s in self.right:
            self.__right_adj[s].sort(key=self.__left_index.__getitem__)

    @property
    def edge_count(self):
        return sum(len(v) for v in self.__left_adj.values())

    def edges(self):
        for r in self.left:
            for s in self.__left_adj[r]:
                yield r, s

    def left_neighbors(self, r):
        return self.__left_adj[r]

    def right_neighbors(self, s):
        return self.__right_adj[s]

    def has_edge(self, r, s):
        return s in self.__left_adj.get(r, ())

    def neighborhood(self, left_subset):
        """
        N(A) on the right side for A a subset of the left side
        """
        result = set()
        for r in left_subset:
            result.update(self.__left_adj[r])
        return result

    def left_index(self, r):
        return self.__left_index[r]

    def right_index(self, s):
        return self.__right_index[s]


class HallViolator:
    """
    Certificate that a (proportional) Hall condition fails

    :ivar vertices: Left subset A with |N(A)| < q|A|
    :ivar load: The q that was tested
    :ivar neighborhood_size: |N(A)|
    """

    def __init__(self, vertices, load, neighborhood_size):
        self.vertices = frozenset(vertices)
        self.load = load
        self.neighborhood_size = neighborhood_size

    def __repr__(self):
        return (f"HallViolator({sorted(self.vertices, key=repr)}, "
                f"q={self.load}, |N|={self.neighborhood_size})")


class ProportionalMatching:
    """
    Assignment of every right vertex to a left neighbor with every left
    vertex receiving exactly ``load`` right vertices

    :ivar assignment: dict right vertex -> left vertex
    :ivar load: q; None for a near-proportional matching
    """

    def __init__(self, assignment, load):
        self.assignment = dict(assignment)
        self.load = load

    def preimages(self, r):
        return [s for s, owner in self.assignment.items() if owner == r]

    def loads(self):
        counts = {}
        for owner in self.assignment.values():
            counts[owner] = counts.get(owner, 0) + 1
        return counts

    def __len__(self):
        return len(self.assignment)


def max_matching(bipartite):
    """
    Maximum-cardinality matching by Hopcroft-Karp (BFS layering). Left
    vertices are fed in their stored order, so the result is deterministic.

    :param bipartite: Graph to match
    :type bipartite: BipartiteGraph
    :return: dict left vertex -> right vertex
    :rtype: dict
    """
    size = len(bipartite.left)
    graph = nx.Graph()
    graph.add_nodes_from(range(size + len(bipartite.right)))
    graph.add_edges_from((bipartite.left_index(r),
                          size + bipartite.right_index(s))
                         for r, s in bipartite.edges())
    raw = nx.bipartite.hopcroft_karp_matching(graph, top_nodes=range(size))
    return {bipartite.left[i]: bipartite.right[raw[i] - size]
            for i in range(size) if i in raw}


def _flow_network(bipartite, capacity):
    size = len(bipartite.left)
    network = nx.DiGraph()
    network.add_node(_SOURCE)
    for i in range(size):
        network.add_edge(_SOURCE, i, capacity=capacity)
    for r, s in bipartite.edges():
        network.add_edge(bipartite.left_index(r),
                         size + bipartite.right_index(s), capacity=1)
    for j in range(len(bipartite.right)):
        network.add_edge(size + j, _SINK, capacity=1)
    network.add_node(_SINK)
    return network


def hall_violator(bipartite, q):
    """
    Decide the proportional Hall condition |N(A)| >= q|A| for every left
    subset A. Equivalent to a left-saturating matching in the graph where
    each left vertex is blown up into q copies; solved as a max flow and
    the violator read off the minimum cut.

    :param bipartite: Graph to test
    :type bipartite: BipartiteGraph
    :param q: Load per left vertex
    :type q: int
    :return: None when the condition holds, else a HallViolator
    """
    if q < 1:
        raise MatchingError(f"load must be positive, {q} passed")
    if not bipartite.left:
        return None
    network = _flow_network(bipartite, q)
    value, (reachable, _) = nx.minimum_cut(network, _SOURCE, _SINK)
    if value >= q * len(bipartite.left):
        return None
    members = [bipartite.left[i] for i in range(len(bipartite.left))
               if i in reachable]
    return HallViolator(members, q, len(bipartite.neighborhood(members)))


def proportional_matching(bipartite, q):
    """
    Proportional matching with load q, or the Hall violator that rules it
    out.

    :param bipartite: Graph with |S| = q|R|
    :type bipartite: BipartiteGraph
    :param q: Load per left vertex
    :type q: int
    :rtype: ProportionalMatching or HallViolator
    :raises MatchingError: When |S| != q|R|
    """
    if len(bipartite.right) != q * len(bipartite.left):
        raise MatchingError(f"|S|={len(bipartite.right)} is not "
                            f"{q}*|R|={q * len(bipartite.left)}")
    size = len(bipartite.left)
    network = _flow_network(bipartite, q)
    value, flow = nx.maximum_flow(network, _SOURCE, _SINK)
    if value < len(bipartite.right):
        violator = hall_violator(bipartite, q)
        if violator is None:
            raise InternalCheckFailure("flow deficient but no Hall violator")
        return violator
    assignment = {}
    for i, r in enumerate(bipartite.left):
        for node, amount in flow[i].items():
            if amount > 0:
                assignment[bipartite.right[node - size]] = r
    matching = ProportionalMatching(assignment, q)
    verify_proportional(bipartite, matching)
    return matching


def near_proportional_matching(bipartite):
    """
    Assign every right vertex to a left neighbor so that each left vertex
    receives floor(|S|/|R|) or ceil(|S|/|R|) right vertices. Solved as a
    min-cost flow in which the first floor units into each left vertex are
    rewarded.

    :rtype: ProportionalMatching (load None) or HallViolator
    """
    size = len(bipartite.left)
    if size == 0:
        raise MatchingError("left side is empty")
    low = len(bipartite.right) // size
    high = -(-len(bipartite.right) // size)
    network = nx.DiGraph()
    extra = size + len(bipartite.right)
    for i in range(size):
        if low:
            network.add_edge(_SOURCE, i, capacity=low, weight=-1)
        if high > low:
            network.add_edge(_SOURCE, extra + i, capacity=high - low, weight=0)
            network.add_edge(extra + i, i, capacity=high - low, weight=0)
    for r, s in bipartite.edges():
        network.add_edge(bipartite.left_index(r),
                         size + bipartite.right_index(s), capacity=1, weight=0)
    for j in range(len(bipartite.right)):
        network.add_edge(size + j, _SINK, capacity=1, weight=0)
    network.add_node(_SINK)
    flow = nx.max_flow_min_cost(network, _SOURCE, _SINK)
    assignment = {}
    for i, r in enumerate(bipartite.left):
        for node, amount in flow.get(i, {}).items():
            if amount > 0:
                assignment[bipartite.right[node - size]] = r
    matching = ProportionalMatching(assignment, None)
    loads = matching.loads()
    if len(assignment) < len(bipartite.right) or \
            any(loads.get(r, 0) < low for r in bipartite.left):
        violator = hall_violator(bipartite, max(low, 1))
        if violator is not None:
            return violator
        raise MatchingError("right side can not be fully assigned")
    return matching


def verify_proportional(bipartite, matching):
    """
    Recheck a proportional matching edge by edge and load by load

    :raises InternalCheckFailure: On any missing edge, unassigned right
        vertex or wrong load
    """
    unassigned = set(bipartite.right) - set(matching.assignment)
    if unassigned:
        raise InternalCheckFailure("right vertices left unassigned",
                                   unassigned)
    for s, r in matching.assignment.items():
        if not bipartite.has_edge(r, s):
            raise InternalCheckFailure(f"({r}, {s}) is not an edge", {s})
    if matching.load is not None:
        loads = matching.loads()
        wrong = {r for r in bipartite.left
                 if loads.get(r, 0) != matching.load}
        if wrong:
            raise InternalCheckFailure(f"loads differ from {matching.load}",
                                       wrong)
    return True


def general_max_matching(graph, vertices=None):
    """
    Maximum-cardinality matching of a general graph (blossom algorithm)

    :param graph: Host graph
    :type graph: Graph
    :param vertices: Restrict to G[vertices] when given
    :return: Sorted list of (u, v) edges with u < v
    :rtype: list
    """
    nx_graph = graph.to_networkx()
    if vertices is not None:
        nx_graph = nx_graph.subgraph(sorted(vertices))
    matching = nx.max_weight_matching(nx_graph, maxcardinality=True)
    return sorted(tuple(sorted(edge)) for edge in matching)


class Lambda1:
    """
    Bipartite graph between the clusters of a reduced graph and all
    cluster pairs; W is adjacent to {U, U'} iff WU and WU' are edges.

    :ivar base: The reduced graph
    :ivar pairs: All 2-subsets (a, b), a < b, in lexicographic order
    :ivar bipartite: The BipartiteGraph view
    """

    def __init__(self, base):
        self.base = base
        self.pairs = tuple(itertools.combinations(range(base.n), 2))
        edges = [(w, pair) for pair in self.pairs
                 for w in sorted(base.neighbor_set(pair[0]) &
                                 base.neighbor_set(pair[1]))]
        self.bipartite = BipartiteGraph(range(base.n), self.pairs, edges)

    @property
    def ell(self):
        return self.base.n

    def pair_degree(self, pair):
        return len(self.bipartite.right_neighbors(pair))


class Lambda2:
    """
    Lambda1 with every pair replaced by ``copies`` copies (pair, t),
    t = 1..copies. For a pair with Lambda1 neighbors W_1 < ... < W_t the
    copy i <= t is adjacent to W_i only; the remaining copies are adjacent
    to all of W_1..W_t.

    :ivar base: The Lambda1 it was built from
    :ivar copies: Copies per pair
    :ivar bipartite: The BipartiteGraph view
    """

    def __init__(self, base, copies):
        self.base = base
        self.copies = copies
        right, edges = [], []
        for pair in base.pairs:
            owners = base.bipartite.right_neighbors(pair)
            for t in range(1, copies + 1):
                right.append((pair, t))
                if t <= len(owners):
                    edges.append((owners[t - 1], (pair, t)))
                else:
                    edges.extend((w, (pair, t)) for w in owners)
        self.bipartite = BipartiteGraph(range(base.ell), right, edges)


def copy_count(ell, mu):
    """
    Integer number of pair copies: max(ell, ceil(ell/mu))
    """
    return max(ell, math.ceil(ell / mu))


def build_lambda1(reduced):
    """
    Lambda1 of a reduced graph

    :param reduced: Reduced graph G_r
    :type reduced: Graph
    :rtype: Lambda1
    """
    return Lambda1(reduced)


def lambda1_matching(reduced, d):
    """
    Proportional matching in Lambda1 with q = (ell-1)/2.

    :param reduced: Reduced graph on an odd number of clusters
    :type reduced: Graph
    :param d: Density parameter of the degree bound (2/3 - 14d)ell
    :type d: float
    :rtype: ProportionalMatching or HallViolator
    :raises MatchingError: When ell is even
    """
    ell = reduced.n
    if ell % 2 == 0:
        raise MatchingError(f"ell(ell-1)/2 is not divisible by ell={ell}")
    return proportional_matching(build_lambda1(reduced).bipartite,
                                 (ell - 1) // 2)


def build_lambda2(lambda1, mu, copies=None):
    """
    Lambda2 with c = max(ell, ceil(ell/mu)) copies per pair unless given.

    :rtype: Lambda2
    :raises MatchingError: When c is below the largest pair degree
    """
    if copies is None:
        copies = copy_count(lambda1.ell, mu)
    top = max((lambda1.pair_degree(p) for p in lambda1.pairs), default=0)
    if copies < top or copies < 1:
        raise MatchingError(f"{copies} copies can not wire pair degree {top}")
    lambda2 = Lambda2(lambda1, copies)
    if len(lambda2.bipartite.right) != len(lambda1.pairs) * copies:
        raise InternalCheckFailure("copy count mismatch")
    return lambda2


def neighborhood_ratio_holds(lambda1, lambda2, subset, mu):
    """
    |N_L2(A)|/|S'| >= (1 - mu)|N_L1(A)|/|S| in exact arithmetic
    """
    total1 = len(lambda1.bipartite.right)
    total2 = len(lambda2.bipartite.right)
    if total1 == 0:
        return True
    left = Fraction(len(lambda2.bipartite.neighborhood(subset)), total2)
    right = (1 - Fraction(mu)) * Fraction(
        len(lambda1.bipartite.neighborhood(subset)), total1)
    return left >= right


def strong_proportional_matching(reduced, mu, seed=0, copies=None, samples=10):
    """
    Proportional matching in Lambda2 with q = |S'|/ell. The neighborhood
    ratio inequality between Lambda2 and Lambda1 is spot-checked on
    ``samples`` random cluster subsets.

    :rtype: ProportionalMatching or HallViolator
    :raises MatchingError: When |S'| is not divisible by ell
    :raises InternalCheckFailure: When a spot check fails
    """
    lambda1 = build_lambda1(reduced)
    lambda2 = build_lambda2(lambda1, mu, copies)
    total = len(lambda2.bipartite.right)
    if reduced.n == 0 or total % reduced.n:
        raise MatchingError(f"|S'|={total} not divisible by ell={reduced.n}")
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        mask = rng.random(reduced.n) < 0.5
        subset = [int(i) for i in np.flatnonzero(mask)]
        if subset and \
                not neighborhood_ratio_holds(lambda1, lambda2, subset, mu):
            raise InternalCheckFailure("neighborhood ratio check failed",
                                       set(subset))
    return proportional_matching(lambda2.bipartite, total // reduced.n)


def bipart_hall_regimes(reduced, d):
    """
    Exhaustive check of the four Hall regimes of Lambda1 for ell <= 12:
    every A has |N(A)| >= (ell-1)/2 |A|; |A| >= 0.4ell gives
    |N(A)| >= (2/3)(1-14d)|S|; |A| >= (2/3)(1-14d)ell gives
    |N(A)| >= 0.7|S|; |A| >= 0.7ell gives N(A) = S.

    :return: dict regime name -> (holds, counterexample or None)
    """
    ell = reduced.n
    if ell > 12:
        raise MatchingError(f"exhaustive regime check limited to ell <= 12")
    lambda1 = build_lambda1(reduced)
    masks = [sum(1 << w for w in lambda1.bipartite.right_neighbors(p))
             for p in lambda1.pairs]
    total = len(masks)
    shrink = Fraction(2, 3) * (1 - 14 * Fraction(d))
    regimes = {"arbitrary": [True, None], "0.4": [True, None],
               "2/3": [True, None], "0.7": [True, None]}

    def fail(name, subset):
        if regimes[name][0]:
            regimes[name] = [False, subset]

    for bits in range(1, 1 << ell):
        size = bin(bits).count("1")
        covered = sum(1 for mask in masks if mask & bits)
        subset = [w for w in range(ell) if bits >> w & 1]
        if 2 * covered < (ell - 1) * size:
            fail("arbitrary", subset)
        if 10 * size >= 4 * ell and covered < shrink * total:
            fail("0.4", subset)
        if size >= shrink * ell and 10 * covered < 7 * total:
            fail("2/3", subset)
        if 10 * size >= 7 * ell and covered < total:
            fail("0.7", subset)
    return {name: tuple(value) for name, value in regimes.items()}
