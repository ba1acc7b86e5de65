#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
SPDX-FileCopyrightText: Siemens AG, 2020 Gaurav Mishra <mishra.gaurav@siemens.com>

SPDX-License-Identifier: MIT
"""
__author__ = "Siemens AG"

import math
import itertools

import networkx as nx
import numpy as np

from guest_to_host.exceptions import InternalCheckFailure
from guest_to_host.exceptions import SearchBudgetExhausted
from guest_to_host.graph import ComponentKind
from guest_to_host.graph import classify_components
from guest_to_host.graph import delta2
from guest_to_host.graph import require_ore_bounded
from guest_to_host.handlers.matching_handler import BipartiteGraph
from guest_to_host.handlers.matching_handler import HallViolator
from guest_to_host.handlers.matching_handler import general_max_matching
from guest_to_host.handlers.matching_handler import hall_violator
from guest_to_host.handlers.matching_handler import max_matching
from guest_to_host.handlers.matching_handler import proportional_matching


class TriangleSet:
    """
    Pairwise vertex-disjoint triangles of a host

    :ivar triangles: Sorted vertex triples
    """

    def __init__(self, triangles=()):
        self.triangles = [tuple(sorted(t)) for t in triangles]

    def vertices(self):
        return {v for t in self.triangles for v in t}

    def add(self, triangle):
        self.triangles.append(tuple(sorted(triangle)))

    def verify(self, graph):
        """
        Check every triple spans a triangle and triples are disjoint

        :raises InternalCheckFailure: With the offending triple
        """
        seen = set()
        for triangle in self.triangles:
            a, b, c = triangle
            if not (graph.has_edge(a, b) and graph.has_edge(b, c)
                    and graph.has_edge(a, c)):
                raise InternalCheckFailure(f"{triangle} is not a triangle",
                                           set(triangle))
            if seen & set(triangle):
                raise InternalCheckFailure(f"{triangle} overlaps", set(triangle))
            seen.update(triangle)
        return True

    def __len__(self):
        return len(self.triangles)

    def __iter__(self):
        return iter(self.triangles)

    def __repr__(self):
        return f"TriangleSet({self.triangles})"


class Star:
    """
    K_{1,r} with its center and leaves
    """

    __slots__ = ("center", "leaves")

    def __init__(self, center, leaves):
        self.center = center
        self.leaves = tuple(sorted(leaves))

    def __repr__(self):
        return f"Star({self.center}; {self.leaves})"


class PathSquareLayout:
    """
    Order of the guest vertices such that every guest edge joins
    positions at most two apart

    :ivar order: Permutation of V(H)
    """

    def __init__(self, order):
        self.order = list(order)

    def position(self):
        return {v: i for i, v in enumerate(self.order)}

    def verify(self, guest):
        """
        :raises InternalCheckFailure: With the first edge spanning more
            than two positions
        """
        if sorted(self.order) != list(guest.vertices()):
            raise InternalCheckFailure("layout is not a permutation")
        where = self.position()
        for u, v in guest.edges:
            if abs(where[u] - where[v]) > 2:
                raise InternalCheckFailure(f"edge {(u, v)} spans "
                                           f"{abs(where[u] - where[v])}",
                                           {u, v})
        return True


def _twin_classes(graph, pool):
    open_key, closed_key = {}, {}
    for v in pool:
        nbrs = graph.neighbor_set(v) & pool
        open_key.setdefault(frozenset(nbrs), []).append(v)
    klass, next_id = {}, 0
    for members in open_key.values():
        if len(members) > 1:
            for v in members:
                klass[v] = next_id
            next_id += 1
        else:
            v = members[0]
            key = frozenset(graph.neighbor_set(v) & pool | {v})
            closed_key.setdefault(key, []).append(v)
    for members in closed_key.values():
        for v in members:
            klass[v] = next_id
        next_id += 1
    return klass, next_id


def triangle_factor(graph, vertices=None, budget=None):
    """
    Exact search for floor(n/3) disjoint triangles (on G[vertices] when
    given). Branches on the uncovered vertex of minimum residual degree;
    failed residual states are memoized up to twin symmetry.

    :param graph: Host graph
    :type graph: Graph
    :param vertices: Optional vertex subset to factor
    :param budget: Node budget, None for unbounded
    :return: TriangleSet, or None when no factor exists
    :raises SearchBudgetExhausted: When the budget runs out
    """
    pool = set(graph.vertices()) if vertices is None else set(vertices)
    klass, class_count = _twin_classes(graph, pool)
    failed = set()
    nodes = [0]
    chosen = []

    def signature(uncovered, skips):
        counts = [0] * class_count
        for v in uncovered:
            counts[klass[v]] += 1
        return tuple(counts), skips

    def search(uncovered, skips):
        nodes[0] += 1
        if budget is not None and nodes[0] > budget:
            raise SearchBudgetExhausted("triangle-factor", nodes[0])
        if len(uncovered) <= skips:
            return True
        key = signature(uncovered, skips)
        if key in failed:
            return False
        residual = {v: graph.neighbor_set(v) & uncovered for v in uncovered}
        if skips == 0 and any(len(n) < 2 for n in residual.values()):
            failed.add(key)
            return False
        pivot = min(uncovered, key=lambda v: (len(residual[v]), v))
        tried = set()
        nbrs = sorted(residual[pivot])
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1:]:
                if b not in residual[a]:
                    continue
                shape = tuple(sorted((klass[a], klass[b])))
                if shape in tried:
                    continue
                tried.add(shape)
                chosen.append((pivot, a, b))
                if search(uncovered - {pivot, a, b}, skips):
                    return True
                chosen.pop()
        if skips > 0:
            if search(uncovered - {pivot}, skips - 1):
                return True
        failed.add(key)
        return False

    if search(frozenset(pool), len(pool) % 3):
        result = TriangleSet(chosen)
        result.verify(graph)
        return result
    return None


def extend_matching_to_factor(graph, a_set, matching_edges):
    """
    Turn a perfect matching M of the non-A vertices into a triangle factor
    by matching every a in A to an M-edge whose both ends are adjacent to a.

    :param graph: Host graph
    :param a_set: Vertex set A
    :param matching_edges: Disjoint edges covering 2|A| vertices outside A
    :return: TriangleSet, or HallViolator on the A side when the auxiliary
        graph has no perfect matching
    :rtype: TriangleSet or HallViolator
    """
    a_list = sorted(a_set)
    edges = [tuple(sorted(e)) for e in matching_edges]
    covered = [v for e in edges for v in e]
    if len(set(covered)) != len(covered) or set(covered) & set(a_list):
        raise InternalCheckFailure("matching edges overlap each other or A")
    if len(covered) != 2 * len(a_list):
        raise InternalCheckFailure(f"{len(covered)} matched vertices for "
                                   f"{len(a_list)} A-vertices")
    aux = [(a, e) for a in a_list for e in edges
           if graph.has_edge(a, e[0]) and graph.has_edge(a, e[1])]
    bipartite = BipartiteGraph(a_list, edges, aux)
    matching = max_matching(bipartite)
    if len(matching) < len(a_list):
        return hall_violator(bipartite, 1)
    result = TriangleSet((a,) + e for a, e in matching.items())
    result.verify(graph)
    return result


def _degree_concentrated(graph, centers, leaves, epsilon):
    need_leaves = (0.5 + epsilon / 2) * len(leaves)
    need_centers = (0.5 + epsilon / 2) * len(centers)
    return all(graph.degree_in(v, leaves) >= need_leaves for v in centers) and \
        all(graph.degree_in(u, centers) >= need_centers for u in leaves)


def _exact_stars(graph, r):
    uncovered = set(graph.vertices())
    stars = []

    def search():
        if not uncovered:
            return True
        v = min(uncovered)
        free = sorted(graph.neighbor_set(v) & uncovered)
        for leaves in itertools.combinations(free, r):
            uncovered.difference_update((v,) + leaves)
            stars.append(Star(v, leaves))
            if search():
                return True
            stars.pop()
            uncovered.update((v,) + leaves)
        for center in free:
            others = sorted(graph.neighbor_set(center) & uncovered - {v})
            for leaves in itertools.combinations(others, r - 1):
                taken = (center, v) + leaves
                uncovered.difference_update(taken)
                stars.append(Star(center, (v,) + leaves))
                if search():
                    return True
                stars.pop()
                uncovered.update(taken)
        return False

    return stars if search() else None


def k1r_factor(graph, r, seed=0, epsilon=0.1, retries=20, exact_limit=24):
    """
    K_{1,r}-factor: random split into centers X and leaves Y with
    r|X| = |Y|, a degree concentration check, and a proportional matching
    from X to Y. Failed splits are retried with fresh randomness; after the
    retry budget small graphs are searched exactly.

    :param graph: Host graph
    :param r: Leaves per star
    :param seed: Seed of the splits
    :param epsilon: Concentration slack
    :param retries: Number of random splits
    :param exact_limit: Largest n searched exactly
    :return: List of Star, or None
    """
    n = graph.n
    if r < 1 or n % (r + 1):
        return None
    if n == 0:
        return []
    rng = np.random.default_rng(seed)
    count = n // (r + 1)
    for _ in range(retries):
        perm = [int(v) for v in rng.permutation(n)]
        centers, leaves = sorted(perm[:count]), sorted(perm[count:])
        if not _degree_concentrated(graph, set(centers), set(leaves), epsilon):
            continue
        bipartite = BipartiteGraph(centers, leaves,
                                   graph.bipartite_view(centers, leaves))
        result = proportional_matching(bipartite, r)
        if isinstance(result, HallViolator):
            continue
        stars = [Star(c, result.preimages(c)) for c in centers]
        return stars
    if r == 1:
        matching = general_max_matching(graph)
        if 2 * len(matching) == n:
            return [Star(u, (v,)) for u, v in matching]
        return None
    if n <= exact_limit:
        return _exact_stars(graph, r)
    return None


def _palmer(graph):
    n = graph.n
    seq = list(range(n))
    for _ in range(n * n + 1):
        gap = next((i for i in range(n)
                    if not graph.has_edge(seq[i], seq[(i + 1) % n])), None)
        if gap is None:
            return seq
        seq = seq[gap + 1:] + seq[:gap + 1]
        seq = [seq[-1]] + seq[:-1]
        # now seq[0], seq[1] is the gap
        found = None
        for j in range(2, n - 1):
            if graph.has_edge(seq[0], seq[j]) and \
                    graph.has_edge(seq[1], seq[j + 1]):
                found = j
                break
        if found is None:
            return None
        seq = [seq[0]] + seq[1:found + 1][::-1] + seq[found + 1:]
    return None


def hamilton_cycle(graph, budget=None):
    """
    Hamilton cycle: the rotation procedure for Ore graphs, exact
    backtracking otherwise. Disconnected graphs, graphs with a vertex of
    degree < 2 and unbalanced bipartite graphs are rejected at once.

    :param graph: Host graph
    :param budget: Node budget of the backtracking, None for unbounded
    :return: Vertex list in cycle order, or None
    :raises SearchBudgetExhausted: When the budget runs out
    """
    n = graph.n
    if n < 3 or graph.min_degree() < 2:
        return None
    nx_graph = graph.to_networkx()
    if not nx.is_connected(nx_graph):
        return None
    if nx.is_bipartite(nx_graph):
        left, right = nx.bipartite.sets(nx_graph)
        if len(left) != len(right):
            return None
    low = delta2(graph)
    if low is None or low >= n:
        cycle = _palmer(graph)
        if cycle is not None:
            return cycle
    path, visited, nodes = [0], {0}, [0]

    def viable():
        end = path[-1]
        for w in graph.vertices():
            if w in visited:
                continue
            free = sum(1 for x in graph.neighbor_set(w)
                       if x not in visited or x == end or x == 0)
            if free < 2:
                return False
        return True

    def extend():
        nodes[0] += 1
        if budget is not None and nodes[0] > budget:
            raise SearchBudgetExhausted("hamilton-cycle", nodes[0])
        if len(path) == n:
            return graph.has_edge(path[-1], 0)
        options = [w for w in graph.neighbors(path[-1]) if w not in visited]
        options.sort(key=lambda w: (sum(1 for x in graph.neighbor_set(w)
                                        if x not in visited), w))
        for w in options:
            path.append(w)
            visited.add(w)
            if viable() and extend():
                return True
            path.pop()
            visited.discard(w)
        return False

    return list(path) if extend() else None


def _cycle_order(guest, part):
    start = min(part)
    order, previous, current = [start], None, start
    while True:
        step = [w for w in guest.neighbors(current) if w != previous
                and w in part and w != start]
        if not step or step[0] in order:
            break
        previous, current = current, step[0]
        order.append(current)
    return order


def _path_order(guest, part):
    ends = [v for v in part if guest.degree(v) <= 1]
    start = min(ends) if ends else min(part)
    order, seen, current = [start], {start}, start
    while True:
        step = [w for w in guest.neighbors(current) if w not in seen]
        if not step:
            return order
        current = step[0]
        order.append(current)
        seen.add(current)


def layout_into_path_square(guest):
    """
    Lay a guest with theta <= 4 into the square of a path: components in
    order, paths consecutively, cycles in the zig-zag order
    c0, c1, c_{t-1}, c2, c_{t-2}, ..., claws with the center between
    its leaves.

    :param guest: Guest with theta <= 4
    :rtype: PathSquareLayout
    :raises OreDegreeViolation: When theta > 4
    :raises InternalCheckFailure: When the built layout fails its check
    """
    require_ore_bounded(guest, 4)
    order = []
    for part, kind in classify_components(guest):
        if kind.tag in (ComponentKind.CYCLE, ComponentKind.TRIANGLE):
            cyc = _cycle_order(guest, part)
            front, back = 1, len(cyc) - 1
            placed, take_front = [cyc[0]], True
            while front <= back:
                if take_front:
                    placed.append(cyc[front])
                    front += 1
                else:
                    placed.append(cyc[back])
                    back -= 1
                take_front = not take_front
            order.extend(placed)
        elif kind.tag == ComponentKind.CLAW:
            center = max(part, key=guest.degree)
            leaves = sorted(part - {center})
            order.extend([leaves[0], leaves[1], center, leaves[2]])
        else:
            order.extend(_path_order(guest, part))
    layout = PathSquareLayout(order)
    layout.verify(guest)
    return layout


def square_path_guaranteed(graph):
    """
    delta(G) >= (2n-1)/3, the degree bound that forces the square of a
    Hamilton path
    """
    return 3 * graph.min_degree() >= 2 * graph.n - 1


def square_path(graph, budget=None):
    """
    Exact search for an order v_1..v_n of V(G) with v_i v_{i+1} and
    v_i v_{i+2} edges, i.e. P_n^2 as a subgraph.

    :return: The order, or None
    :raises SearchBudgetExhausted: When the budget runs out
    """
    n = graph.n
    if n == 0:
        return []
    if n == 1:
        return [0]
    order, used, nodes = [], set(), [0]

    def options():
        if not order:
            return sorted(graph.vertices(),
                          key=lambda v: (graph.degree(v), v))
        if len(order) == 1:
            pool = graph.neighbor_set(order[-1]) - used
        else:
            pool = graph.neighbor_set(order[-1]) & \
                graph.neighbor_set(order[-2]) - used
        ahead = graph.neighbor_set(order[-1]) - used
        return sorted(pool, key=lambda v: (graph.degree_in(v, ahead), v))

    def extend():
        nodes[0] += 1
        if budget is not None and nodes[0] > budget:
            raise SearchBudgetExhausted("square-path", nodes[0])
        if len(order) == n:
            return True
        for v in options():
            order.append(v)
            used.add(v)
            if extend():
                return True
            order.pop()
            used.discard(v)
        return False

    return list(order) if extend() else None


def fictive_triangle_pipeline(reduced, d, budget=None):
    """
    Add at least ceil(6 d ell) fictive vertices to a reduced graph, each
    joined to every real vertex and to no other fictive vertex, find a
    triangle factor of the augmented graph and drop every triangle that
    touches a fictive vertex.

    The fictive count is rounded up to the next value making the augmented
    order divisible by 3. Every fictive triangle holds exactly one fictive
    and two real vertices, so exactly twice the fictive count of real
    vertices is discarded.

    :param reduced: Reduced graph on ell clusters
    :param d: Density parameter
    :param budget: Node budget of the factor search
    :return: (TriangleSet of real triangles, frozenset of discarded real
        vertices), or None when the augmented graph has no factor
    """
    ell = reduced.n
    if ell and ell % 3 == 0:
        direct = triangle_factor(reduced, budget=budget)
        if direct is not None:
            return direct, frozenset()
    extra = math.ceil(6 * d * ell)
    extra += -(ell + extra) % 3
    fictive = range(ell, ell + extra)
    edges = [(v, f) for f in fictive for v in range(ell)]
    augmented = reduced.add_vertices(extra, edges)
    factor = triangle_factor(augmented, budget=budget)
    if factor is None:
        return None
    real, discarded = TriangleSet(), set()
    for triangle in factor:
        if max(triangle) >= ell:
            discarded.update(v for v in triangle if v < ell)
        else:
            real.add(triangle)
    real.verify(reduced)
    if len(discarded) != 2 * extra or real.vertices() & discarded:
        raise InternalCheckFailure("fictive triangles must discard two real "
                                   "clusters each", discarded)
    return real, frozenset(discarded)
