#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
SPDX-FileCopyrightText: Siemens AG, 2020 Gaurav Mishra <mishra.gaurav@siemens.com>

SPDX-License-Identifier: MIT
"""
__author__ = "Siemens AG"

import math

import numpy as np

from guest_to_host.exceptions import InternalCheckFailure
from guest_to_host.exceptions import OreDegreeViolation
from guest_to_host.graph import Graph
from guest_to_host.graph import ComponentKind
from guest_to_host.graph import ball
from guest_to_host.graph import classify_components
from guest_to_host.graph import components
from guest_to_host.graph import require_ore_bounded
from guest_to_host.handlers.matching_handler import BipartiteGraph
from guest_to_host.handlers.matching_handler import hall_violator
from guest_to_host.handlers.matching_handler import max_matching

# Greedy extension order of the independent set by degree: degree-2
# vertices first, then leaves, isolated vertices, and the high-degree
# classes last.
_GREEDY_RANK = {2: 0, 1: 1, 0: 2, 3: 3, 4: 4}


class DegreeClasses:
    """
    Partition of V(H) by degree

    :ivar classes: Tuple (d0, d1, d2, d3, d4) of frozensets
    """

    def __init__(self, classes):
        self.classes = tuple(frozenset(c) for c in classes)

    def __getitem__(self, degree):
        return self.classes[degree]

    @property
    def d0(self):
        return self.classes[0]

    @property
    def d1(self):
        return self.classes[1]

    @property
    def d2(self):
        return self.classes[2]

    @property
    def d3(self):
        return self.classes[3]

    @property
    def d4(self):
        return self.classes[4]


class PathMember:
    """
    Member of the path system: a path x z_1..z_r y with x != y in D1 u D3
    and interior in D2, or a cycle x z_1..z_r x with x in D3, r >= 2

    :ivar vertices: Vertex sequence (cycles do not repeat x at the end)
    :ivar is_cycle: True for the cycle members
    """

    __slots__ = ("vertices", "is_cycle")

    def __init__(self, vertices, is_cycle):
        self.vertices = tuple(vertices)
        self.is_cycle = is_cycle

    @property
    def ends(self):
        if self.is_cycle:
            return (self.vertices[0],)
        return self.vertices[0], self.vertices[-1]

    def __eq__(self, other):
        return isinstance(other, PathMember) and \
            (self.vertices, self.is_cycle) == (other.vertices, other.is_cycle)

    def __hash__(self):
        return hash((self.vertices, self.is_cycle))

    def __lt__(self, other):
        return (self.vertices, self.is_cycle) < (other.vertices, other.is_cycle)

    def __repr__(self):
        kind = "cycle" if self.is_cycle else "path"
        return f"{kind}{self.vertices}"


class IhatSplit:
    """
    Greedy distance-5 subset of I - I1 - D0 and its three-way split

    :ivar vertices: The subset
    :ivar parts: Three frozensets differing in size by at most one
    :ivar seed: Seed of the split
    :ivar candidates: |I - I1 - D0|
    """

    def __init__(self, vertices, parts, seed, candidates):
        self.vertices = frozenset(vertices)
        self.parts = tuple(frozenset(p) for p in parts)
        self.seed = seed
        self.candidates = candidates


class HDecomposition:
    """
    Independent dominating set I of a guest and everything derived from it

    :ivar I: The independent set
    :ivar Iprime: One neighbor per D3 vertex taken from the D3 matching
    :ivar I1: Degree-2 members of I whose neighbors share a component of H-I
    :ivar I2: Degree-2 members of I whose neighbors lie in different ones
    :ivar ihat: IhatSplit
    :ivar components_minus_I: Components of H-I as vertex tuples in path order
    :ivar classes: DegreeClasses
    """

    def __init__(self, I, Iprime, I1, I2, ihat, components_minus_I, classes):
        self.I = frozenset(I)
        self.Iprime = frozenset(Iprime)
        self.I1 = frozenset(I1)
        self.I2 = frozenset(I2)
        self.ihat = ihat
        self.components_minus_I = list(components_minus_I)
        self.classes = classes

    @property
    def Ihat(self):
        return self.ihat.vertices

    @property
    def Ihat_parts(self):
        return self.ihat.parts

    def component_of(self):
        """
        dict vertex -> index into components_minus_I
        """
        owner = {}
        for index, part in enumerate(self.components_minus_I):
            for v in part:
                owner[v] = index
        return owner

    def to_dict(self):
        return {
            "I": sorted(self.I), "Iprime": sorted(self.Iprime),
            "I1": sorted(self.I1), "I2": sorted(self.I2),
            "Ihat": [sorted(p) for p in self.ihat.parts],
            "Ihat_seed": self.ihat.seed,
            "components_minus_I": [list(c) for c in self.components_minus_I]
        }


class TriangleExtremality:
    """
    Triangle census of a guest

    :ivar triangles: Sorted vertex triples, pairwise disjoint
    :ivar vdelta_prime: Vertices lying in a triangle
    :ivar vdelta: Vertices of triangles whose three vertices have degree 2
    :ivar triangle_count: Number of triangles
    :ivar nu_threshold: The nu used
    :ivar is_extreme: triangle_count >= (1-nu)n/3
    :ivar vdelta_bound_holds: |vdelta| >= n(1-7nu); None when not extreme
    """

    def __init__(self, triangles, vdelta_prime, vdelta, nu, is_extreme,
                 vdelta_bound_holds):
        self.triangles = list(triangles)
        self.vdelta_prime = frozenset(vdelta_prime)
        self.vdelta = frozenset(vdelta)
        self.triangle_count = len(self.triangles)
        self.nu_threshold = nu
        self.is_extreme = is_extreme
        self.vdelta_bound_holds = vdelta_bound_holds


def degree_classes(guest):
    """
    Split V(H) into D0..D4 by degree.

    :param guest: Guest graph
    :type guest: Graph
    :rtype: DegreeClasses
    :raises OreDegreeViolation: When some degree exceeds 4
    """
    classes = [set() for _ in range(5)]
    for v in guest.vertices():
        degree = guest.degree(v)
        if degree > 4:
            raise OreDegreeViolation(f"vertex {v} has degree {degree} > 4",
                                     bound=5, witness=v)
        classes[degree].add(v)
    return DegreeClasses(classes)


def star4_vertices(guest):
    """
    Vertices of the K_{1,4} components
    """
    found = set()
    for part, kind in classify_components(guest):
        if kind.tag == ComponentKind.STAR4:
            found |= part
    return found


def saturate(guest):
    """
    Add edges in lexicographic order among vertices outside K_{1,4}
    components while the Ore-degree stays at most 5. A single pass is
    maximal since degrees only grow.

    :param guest: Guest with theta <= 5
    :type guest: Graph
    :return: Saturated supergraph
    :rtype: Graph
    """
    require_ore_bounded(guest, 5)
    frozen = star4_vertices(guest)
    adj = [set(guest.neighbor_set(v)) for v in guest.vertices()]
    added = []

    def slack(v):
        # room left for v gaining one edge, neighbor-wise
        top = max((len(adj[w]) for w in adj[v]), default=0)
        return 5 - (len(adj[v]) + 1) - top

    order = [v for v in guest.vertices() if v not in frozen]
    for i, u in enumerate(order):
        if slack(u) < 0:
            continue
        for v in order[i + 1:]:
            if v in adj[u] or slack(v) < 0:
                continue
            if len(adj[u]) + len(adj[v]) + 2 > 5:
                continue
            if slack(u) < 0:
                break
            adj[u].add(v)
            adj[v].add(u)
            added.append((u, v))
    return guest.add_edges(added)


def is_saturated(guest):
    """
    True when no edge outside K_{1,4} components can be added with the
    Ore-degree staying at most 5
    """
    frozen = star4_vertices(guest)
    free = [v for v in guest.vertices() if v not in frozen]
    for i, u in enumerate(free):
        for v in free[i + 1:]:
            if guest.has_edge(u, v):
                continue
            du, dv = guest.degree(u) + 1, guest.degree(v) + 1
            if du + dv > 5:
                continue
            if any(du + guest.degree(w) > 5 for w in guest.neighbors(u)):
                continue
            if any(dv + guest.degree(w) > 5 for w in guest.neighbors(v)):
                continue
            return False
    return True


def _canonical(sequence, is_cycle):
    if is_cycle:
        head, rest = sequence[0], list(sequence[1:])
        forward = (head,) + tuple(rest)
        backward = (head,) + tuple(reversed(rest))
        return min(forward, backward)
    return min(tuple(sequence), tuple(reversed(sequence)))


def path_system(guest, classes=None):
    """
    All paths x z_1..z_r y (x != y in D1 u D3, interior in D2, r >= 0) and
    all cycles x z_1..z_r x (x in D3, r >= 2, rest in D2).

    :param guest: Guest with theta <= 5
    :type guest: Graph
    :return: Sorted list of PathMember
    :rtype: list
    """
    if classes is None:
        classes = degree_classes(guest)
    ends = classes.d1 | classes.d3
    found = set()
    for x in sorted(ends):
        for first in guest.neighbors(x):
            walk = [x]
            previous, current = x, first
            while current in classes.d2:
                walk.append(current)
                following = [w for w in guest.neighbors(current)
                             if w != previous]
                previous, current = current, following[0]
            if current == x:
                if len(walk) >= 3:
                    found.add(PathMember(_canonical(walk, True), True))
            elif current in ends:
                walk.append(current)
                found.add(PathMember(_canonical(walk, False), False))
    return sorted(found)


def d3_matching(guest, members, classes=None):
    """
    D3-saturating matching in the bipartite graph B(D3, path system) where
    x is adjacent to the members it is an end of.

    :return: dict D3 vertex -> PathMember
    :raises InternalCheckFailure: When a degree bound of B fails or B has
        no D3-saturating matching; carries the violator
    """
    if classes is None:
        classes = degree_classes(guest)
    d3 = sorted(classes.d3)
    edges = [(x, member) for member in members for x in set(member.ends)
             if x in classes.d3]
    bipartite = BipartiteGraph(d3, members, edges)
    for x in d3:
        if not 2 <= len(bipartite.left_neighbors(x)) <= 3:
            raise InternalCheckFailure(
                f"D3 vertex {x} has {len(bipartite.left_neighbors(x))} "
                f"path-system members", {x})
    for member in members:
        if len(bipartite.right_neighbors(member)) > 2:
            raise InternalCheckFailure(f"{member} has more than two D3 ends",
                                       {member})
    matching = max_matching(bipartite)
    if len(matching) < len(d3):
        violator = hall_violator(bipartite, 1)
        raise InternalCheckFailure("no D3-saturating matching",
                                   violator.vertices if violator else None)
    return matching


def _iprime(guest, matching):
    chosen = set()
    for x, member in matching.items():
        inside = [y for y in member.vertices if y != x and guest.has_edge(x, y)]
        chosen.add(min(inside))
    return chosen


def _components_minus(guest, independent):
    rest = [v for v in guest.vertices() if v not in independent]
    sub, old = guest.induced(rest)
    result = []
    for part in components(sub):
        vertices = [old[v] for v in part]
        ends = [v for v in vertices
                if sum(1 for w in guest.neighbors(v)
                       if w not in independent) <= 1]
        start = min(ends) if ends else min(vertices)
        ordered, seen, current = [start], {start}, start
        while True:
            step = [w for w in guest.neighbors(current)
                    if w not in independent and w not in seen]
            if not step:
                break
            current = step[0]
            ordered.append(current)
            seen.add(current)
        if len(ordered) != len(vertices):
            ordered = sorted(vertices)
        result.append(tuple(ordered))
    return result


def decomposition_conditions(guest, independent):
    """
    Independent predicates for the four decomposition conditions.

    :return: dict with keys independent, dominating, size, low_degree,
        short_paths, neighbor_rule, each a boolean
    """
    independent = set(independent)
    report = {}
    report["independent"] = all(
        not (guest.neighbor_set(v) & independent) for v in independent)
    report["dominating"] = all(
        v in independent or guest.neighbor_set(v) & independent
        for v in guest.vertices())
    report["size"] = 3 * len(independent) >= guest.n
    report["low_degree"] = all(guest.degree(v) <= 2 for v in independent)
    parts = _components_minus(guest, independent)
    short = True
    for part in parts:
        sub, _ = guest.induced(part)
        if len(part) > 3 or sub.m != len(part) - 1 or sub.max_degree() > 2:
            short = False
    report["short_paths"] = short
    owner = {}
    for index, part in enumerate(parts):
        for v in part:
            owner[v] = index
    rule = True
    for x in independent:
        if guest.degree(x) == 2:
            y1, y2 = guest.neighbors(x)
            if not guest.has_edge(y1, y2) and owner.get(y1) == owner.get(y2):
                rule = False
    report["neighbor_rule"] = rule
    return report


def split_i1_i2(guest, dec_or_set, parts=None):
    """
    Split the degree-2 members of I by whether both neighbors lie in the
    same component of H - I.

    :return: (I1, I2) as frozensets
    """
    if isinstance(dec_or_set, HDecomposition):
        independent = dec_or_set.I
        parts = dec_or_set.components_minus_I
    else:
        independent = frozenset(dec_or_set)
        if parts is None:
            parts = _components_minus(guest, independent)
    owner = {}
    for index, part in enumerate(parts):
        for v in part:
            owner[v] = index
    first, second = set(), set()
    for x in independent:
        if guest.degree(x) != 2:
            continue
        y1, y2 = guest.neighbors(x)
        if owner[y1] == owner[y2]:
            first.add(x)
        else:
            second.add(x)
    return frozenset(first), frozenset(second)


def ihat(guest, dec, nu=0.1, seed=0, classes=None):
    """
    Greedy subset of I - I1 - D0 with pairwise distance at least 5, split
    uniformly at random into three parts of near-equal size.

    :param guest: Guest graph
    :param dec: Decomposition (only I and I1 are read)
    :param nu: Triangular-extremality threshold, used for the size report
    :param seed: Seed of the split
    :rtype: IhatSplit
    """
    if classes is None:
        classes = degree_classes(guest)
    candidates = sorted(set(dec.I) - set(dec.I1) - classes.d0)
    blocked, chosen = set(), []
    for v in candidates:
        if v in blocked:
            continue
        chosen.append(v)
        blocked |= ball(guest, v, 4)
    rng = np.random.default_rng(seed)
    order = [chosen[i] for i in rng.permutation(len(chosen))]
    parts = [order[i::3] for i in range(3)]
    return IhatSplit(chosen, parts, seed, len(candidates))


def ihat_lower_bound(guest, split, nu):
    """
    The size guarantee nu*n/40 for guests that are not triangular extreme
    """
    return len(split.vertices) >= nu * guest.n / 40


def decompose(guest, nu=0.1, seed=0):
    """
    Independent dominating set I with deg <= 2 on I, H - I a union of
    paths of length at most 2, and for x in I with two non-adjacent
    neighbors those neighbors in different components of H - I.

    Start from I' (one neighbor of every D3 vertex, from the D3 matching),
    extend greedily to a maximal independent set, then swap x for its two
    neighbors while the neighbor rule fails.

    :param guest: Guest with theta <= 5
    :type guest: Graph
    :param nu: Threshold forwarded to the Ihat construction
    :param seed: Seed of the Ihat split
    :rtype: HDecomposition
    :raises OreDegreeViolation: When theta > 5
    :raises InternalCheckFailure: When a final condition check fails
    """
    require_ore_bounded(guest, 5)
    classes = degree_classes(guest)
    members = path_system(guest, classes)
    matching = d3_matching(guest, members, classes)
    iprime = _iprime(guest, matching)
    independent = set(iprime)
    order = sorted(guest.vertices(),
                   key=lambda v: (_GREEDY_RANK[guest.degree(v)], v))
    for v in order:
        if v not in independent and not guest.neighbor_set(v) & independent:
            independent.add(v)
    for _ in range(guest.n + 1):
        parts = _components_minus(guest, independent)
        owner = {}
        for index, part in enumerate(parts):
            for v in part:
                owner[v] = index
        swap = None
        for x in sorted(independent):
            if guest.degree(x) != 2 or x in iprime:
                continue
            y1, y2 = guest.neighbors(x)
            if not guest.has_edge(y1, y2) and owner[y1] == owner[y2]:
                swap = (x, y1, y2)
                break
        if swap is None:
            break
        x, y1, y2 = swap
        independent.discard(x)
        independent |= {y1, y2}
    report = decomposition_conditions(guest, independent)
    failed = [name for name, ok in report.items() if not ok]
    if failed and guest.n >= 3:
        raise InternalCheckFailure(f"decomposition conditions {failed} fail",
                                   set(independent))
    parts = _components_minus(guest, independent)
    first, second = split_i1_i2(guest, independent, parts)
    dec = HDecomposition(independent, iprime, first, second,
                         IhatSplit((), ((), (), ()), seed, 0), parts, classes)
    dec.ihat = ihat(guest, dec, nu, seed, classes)
    return dec


def triangles_of(guest):
    """
    All triangles as sorted triples, in lexicographic order
    """
    found = []
    for u, v in guest.edges:
        for w in sorted(guest.neighbor_set(u) & guest.neighbor_set(v)):
            if w > v:
                found.append((u, v, w))
    return found


def triangle_extremality(guest, nu=0.1):
    """
    Triangle census and nu-triangular extremality of a guest.

    :param guest: Guest with theta <= 5
    :param nu: Extremality threshold
    :rtype: TriangleExtremality
    :raises OreDegreeViolation: When two triangles share a vertex
    """
    found = triangles_of(guest)
    seen = {}
    for triangle in found:
        for v in triangle:
            if v in seen:
                raise OreDegreeViolation(
                    f"triangles {seen[v]} and {triangle} share vertex {v}",
                    bound=5, witness=v)
            seen[v] = triangle
    vdelta = set()
    for triangle in found:
        if all(guest.degree(v) == 2 for v in triangle):
            vdelta.update(triangle)
    extreme = 3 * len(found) >= (1 - nu) * guest.n
    bound = None
    if extreme:
        bound = len(vdelta) >= guest.n * (1 - 7 * nu)
    return TriangleExtremality(found, seen.keys(), vdelta, nu, extreme, bound)


def guest_remainder(guest, extremality):
    """
    H' = H - V_delta relabelled, with the map back to guest ids.

    :return: (subgraph, list new id -> guest id)
    """
    rest = [v for v in guest.vertices() if v not in extremality.vdelta]
    return guest.induced(rest)
