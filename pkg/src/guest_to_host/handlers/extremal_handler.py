#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
SPDX-FileCopyrightText: Siemens AG, 2020 Gaurav Mishra <mishra.gaurav@siemens.com>

SPDX-License-Identifier: MIT
"""
__author__ = "Siemens AG"

import math
import itertools

import numpy as np

from guest_to_host.exceptions import HypothesisViolation
from guest_to_host.exceptions import InternalCheckFailure
from guest_to_host.handlers.matching_handler import BipartiteGraph
from guest_to_host.handlers.matching_handler import general_max_matching
from guest_to_host.handlers.matching_handler import hall_violator
from guest_to_host.handlers.matching_handler import max_matching


class ExtremalityCertificate:
    """
    A size floor(n/k) vertex set with few internal edges

    :ivar k: Number of parts the host is compared against
    :ivar A: The sparse set
    :ivar internal_edges: e(G[A])
    :ivar eta: Threshold used
    :ivar exact: True when found by exhaustive search
    """

    def __init__(self, k, A, internal_edges, eta, exact):
        self.k = k
        self.A = frozenset(A)
        self.internal_edges = internal_edges
        self.eta = eta
        self.exact = exact

    @property
    def valid(self):
        return self.internal_edges <= self.eta * math.comb(len(self.A), 2)

    def to_dict(self):
        return {"k": self.k, "A": sorted(self.A),
                "internal_edges": self.internal_edges, "eta": self.eta,
                "exact": self.exact}


class MatchingClassification:
    """
    The edges of a maximum matching split into six groups by how the two
    unmatched vertices u and v see them

    :ivar matching: The maximum matching
    :ivar u: First unmatched vertex
    :ivar v: Second unmatched vertex
    :ivar groups: dict 1..6 -> list of matching edges
    """

    def __init__(self, matching, u, v, groups):
        self.matching = list(matching)
        self.u = u
        self.v = v
        self.groups = groups

    def count(self, index):
        return len(self.groups[index])

    def vertices(self, *indices):
        return {w for i in indices for e in self.groups[i] for w in e}

    def to_dict(self):
        return {"u": self.u, "v": self.v,
                "counts": {i: self.count(i) for i in range(1, 7)}}


class MatchingOrSplit:
    """
    Either a perfect matching or a balanced partition with few crossing
    edges

    :ivar matching: Perfect matching edges, or None
    :ivar V1: First half, or None
    :ivar V2: Second half, or None
    :ivar crossing: e(V1, V2) on the partition branch
    :ivar classification: MatchingClassification on the partition branch
    """

    def __init__(self, matching=None, V1=None, V2=None, crossing=None,
                 classification=None):
        self.matching = matching
        self.V1 = None if V1 is None else frozenset(V1)
        self.V2 = None if V2 is None else frozenset(V2)
        self.crossing = crossing
        self.classification = classification

    @property
    def is_perfect(self):
        return self.matching is not None


class SwitchResult:
    """
    Outcome of a switching preprocessor

    :ivar parts: Stabilized parts in input order
    :ivar switches: List of (kind, moved vertices) applied in order
    :ivar objective: Objective value before each switch and at the end
    """

    def __init__(self, parts, switches, objective):
        self.parts = tuple(frozenset(p) for p in parts)
        self.switches = list(switches)
        self.objective = list(objective)


class ExceptionalSets:
    """
    Named exceptional vertex sets of one case

    :ivar case_id: 1, 2 or 3
    :ivar sets: dict name -> frozenset, names like "A'", "B1''"
    :ivar claims: dict claim name -> bool, evaluated on this state
    """

    def __init__(self, case_id, sets, claims=None):
        self.case_id = case_id
        self.sets = {name: frozenset(value) for name, value in sets.items()}
        self.claims = dict(claims or {})

    def __getitem__(self, name):
        return self.sets.get(name, frozenset())

    def all_vertices(self):
        return set().union(*self.sets.values()) if self.sets else set()

    def sizes(self):
        return {name: len(value) for name, value in self.sets.items()}

    def all_empty(self):
        return not any(self.sets.values())


def _internal(graph, vertex_set):
    return graph.edges_inside(vertex_set)


def _swap_descent(graph, chosen, outside):
    """
    Best-improvement swaps between chosen and outside until no swap lowers
    e(G[chosen])
    """
    chosen, outside = set(chosen), set(outside)
    inside_deg = {v: graph.degree_in(v, chosen) for v in graph.vertices()}
    while True:
        best = None
        for x in sorted(chosen):
            for y in sorted(outside):
                gain = inside_deg[x] - (inside_deg[y] - graph.has_edge(x, y))
                if gain > 0 and (best is None or gain > best[0]):
                    best = (gain, x, y)
        if best is None:
            return chosen
        _, x, y = best
        chosen.discard(x)
        outside.discard(y)
        chosen.add(y)
        outside.add(x)
        for w in graph.neighbor_set(x):
            inside_deg[w] -= 1
        for w in graph.neighbor_set(y):
            inside_deg[w] += 1


def _greedy_sparse(graph, size):
    chosen = []
    pool = set(graph.vertices())
    while len(chosen) < size:
        v = min(pool, key=lambda w: (graph.degree_in(w, chosen),
                                     graph.degree(w), w))
        chosen.append(v)
        pool.discard(v)
    return set(chosen)


def sparsest_subset(graph, size, exact_limit=20, restarts=50, seed=0):
    """
    Size-``size`` vertex set with the fewest internal edges found: exact
    over all subsets when n <= exact_limit, otherwise the best of a greedy
    start and ``restarts`` random starts, each improved by swap descent.

    :return: (frozenset, internal edge count, exact flag)
    """
    n = graph.n
    if size <= 0:
        return frozenset(), 0, True
    if n <= exact_limit:
        best = None
        for subset in itertools.combinations(range(n), size):
            value = _internal(graph, subset)
            if best is None or value < best[1]:
                best = (subset, value)
                if value == 0:
                    break
        return frozenset(best[0]), best[1], True
    rng = np.random.default_rng(seed)
    starts = [_greedy_sparse(graph, size)]
    for _ in range(restarts):
        starts.append({int(v) for v in rng.permutation(n)[:size]})
    best = None
    for start in starts:
        chosen = _swap_descent(graph, start, set(graph.vertices()) - start)
        value = _internal(graph, chosen)
        if best is None or value < best[1]:
            best = (frozenset(chosen), value)
        if value == 0:
            break
    return best[0], best[1], False


def extremality_certificate(graph, k, eta, exact_limit=20, restarts=50,
                            seed=0):
    """
    Look for A with |A| = floor(n/k) and e(G[A]) <= eta * C(|A|, 2).

    :param graph: Host graph
    :param k: Number of parts, k >= 2
    :param eta: Density threshold
    :return: ExtremalityCertificate, or None when none was found
    """
    if k < 2 or graph.n < k:
        return None
    subset, internal, exact = sparsest_subset(graph, graph.n // k,
                                              exact_limit, restarts, seed)
    certificate = ExtremalityCertificate(k, subset, internal, eta, exact)
    if internal != _internal(graph, subset):
        raise InternalCheckFailure("internal edge count mismatch", subset)
    return certificate if certificate.valid else None


def _matched_partner(matching):
    partner = {}
    for a, b in matching:
        partner[a] = b
        partner[b] = a
    return partner


def classify_matching(graph, matching, u, v):
    """
    Split a maximum matching around two unmatched vertices u, v.

    Group 1: both ends adjacent to u. Group 2: one end adjacent to u, none
    to v. Group 3: both u and v see an end. Group 4: one end adjacent to
    v, none to u. Group 5: both ends adjacent to v. Group 6: untouched.

    :rtype: MatchingClassification
    """
    nu, nv = graph.neighbor_set(u), graph.neighbor_set(v)
    groups = {i: [] for i in range(1, 7)}
    for edge in matching:
        cu = sum(1 for w in edge if w in nu)
        cv = sum(1 for w in edge if w in nv)
        if cu and cv:
            groups[3].append(edge)
        elif cu == 2:
            groups[1].append(edge)
        elif cu == 1:
            groups[2].append(edge)
        elif cv == 2:
            groups[5].append(edge)
        elif cv == 1:
            groups[4].append(edge)
        else:
            groups[6].append(edge)
    return MatchingClassification(matching, u, v, groups)


def classification_claims(graph, classification, alpha):
    """
    Evaluate the four claims a classification satisfies under the
    minimum degree and non-extremality hypotheses.

    :return: dict claim -> bool
    """
    size = graph.n
    partner = _matched_partner(classification.matching)
    nu = graph.neighbor_set(classification.u)
    nv = graph.neighbor_set(classification.v)
    s2 = {w for e in classification.groups[2] for w in e if w in nu}
    s4 = {w for e in classification.groups[4] for w in e if w in nv}
    m_s2 = {partner[w] for w in s2}
    m_s4 = {partner[w] for w in s4}
    count = classification.count
    return {
        "no_edges_between_partners": graph.edges_between(m_s2, m_s4 - m_s2) == 0,
        "group6_small": count(6) <= alpha * size,
        "group3_empty": count(3) == 0,
        "groups24_small": count(2) + count(4) <= 2 * alpha * size,
    }


def matching_or_split(graph, mu, alpha):
    """
    Perfect matching of G1, or the partition V1, V2 with |V1| = |V2| = N/2
    and at most 3 alpha N^2 crossing edges built from a maximum matching.

    :param graph: G1 on an even number of vertices
    :param mu: Non-extremality parameter (reported only)
    :param alpha: Minimum degree slack, delta(G1) >= N/2 - alpha N
    :rtype: MatchingOrSplit
    :raises HypothesisViolation: When neither branch validates
    """
    size = graph.n
    if size % 2:
        raise HypothesisViolation(f"N = {size} is odd", {"N": size})
    matching = general_max_matching(graph)
    if 2 * len(matching) == size:
        return MatchingOrSplit(matching=matching)
    covered = {w for e in matching for w in e}
    unmatched = [w for w in graph.vertices() if w not in covered]
    diagnostics = {"N": size, "matching": len(matching),
                   "unmatched": unmatched, "mu": mu, "alpha": alpha}
    if len(unmatched) > 2:
        raise HypothesisViolation(
            f"{len(unmatched)} unmatched vertices, at most 2 allowed",
            diagnostics)
    u, v = unmatched
    classification = classify_matching(graph, matching, u, v)
    claims = classification_claims(graph, classification, alpha)
    diagnostics.update(classification.to_dict())
    diagnostics["claims"] = claims
    if not all(claims.values()):
        failed = sorted(name for name, ok in claims.items() if not ok)
        raise HypothesisViolation(f"classification claims {failed} fail",
                                  diagnostics)
    first = classification.vertices(1, 2) | {u}
    second = classification.vertices(4, 5) | {v}
    spare = sorted(classification.vertices(6))
    half = size // 2
    for side, other in ((first, second), (second, first)):
        while len(side) > half:
            w = max(side - {u, v}, key=lambda x: (graph.degree_in(x, other)
                                                  - graph.degree_in(x, side),
                                                  -x))
            side.discard(w)
            other.add(w)
    for w in spare:
        target = first if len(first) < half else second
        target.add(w)
    crossing = graph.edges_between(first, second)
    diagnostics["crossing"] = crossing
    if len(first) != half or len(second) != half or \
            crossing > 3 * alpha * size * size:
        raise HypothesisViolation("partition branch does not validate",
                                  diagnostics)
    return MatchingOrSplit(V1=first, V2=second, crossing=crossing,
                            classification=classification)


def _move_delta(graph, counts, part_of, moves):
    """
    Change of the number of edges inside parts when every v in ``moves``
    goes to part moves[v] simultaneously
    """
    moved = list(moves)
    delta = 0
    for s in moved:
        old, new = part_of[s], moves[s]
        stay_new = sum(1 for t in moved if t != s and part_of[t] == new
                       and graph.has_edge(s, t))
        stay_old = sum(1 for t in moved if t != s and part_of[t] == old
                       and graph.has_edge(s, t))
        delta += (counts[s][new] - stay_new) - (counts[s][old] - stay_old)
    for s, t in itertools.combinations(moved, 2):
        if graph.has_edge(s, t):
            delta += int(moves[s] == moves[t]) - int(part_of[s] == part_of[t])
    return delta


def _candidates(parts, circular):
    count = len(parts)
    for i, j in itertools.combinations(range(count), 2):
        for a in sorted(parts[i]):
            for b in sorted(parts[j]):
                yield "ordinary", {a: j, b: i}
    if circular and count == 3:
        for first, second, third in ((0, 1, 2), (0, 2, 1)):
            for a in sorted(parts[first]):
                for b in sorted(parts[second]):
                    for c in sorted(parts[third]):
                        yield "circular", {a: second, b: third, c: first}


def improving_switch(graph, parts, sign=-1, circular=False):
    """
    Best switch that moves the inside edge count in direction ``sign``
    (-1 lowers it, +1 raises it); ordinary switches are preferred over
    circular ones.

    :return: (kind, moves, gain) or None
    """
    parts = [set(p) for p in parts]
    part_of = {v: i for i, p in enumerate(parts) for v in p}
    counts = {v: [graph.degree_in(v, p) for p in parts] for v in part_of}
    best = None
    for kind, moves in _candidates(parts, circular):
        if best is not None and kind == "circular" and \
                best[0] == "ordinary":
            break
        gain = sign * _move_delta(graph, counts, part_of, moves)
        if gain > 0 and (best is None or gain > best[2]):
            best = (kind, moves, gain)
    return best


def _stabilize(graph, parts, sign, circular, objective):
    parts = [set(p) for p in parts]
    switches, values = [], [objective(parts)]
    for _ in range(graph.m + 1):
        found = improving_switch(graph, parts, sign, circular)
        if found is None:
            break
        kind, moves, _ = found
        for v, target in moves.items():
            for p in parts:
                p.discard(v)
            parts[target].add(v)
        switches.append((kind, tuple(sorted(moves))))
        values.append(objective(parts))
    return SwitchResult(parts, switches, values)


def preprocess1(graph, a_set, b_set):
    """
    Ordinary switches between A and B while e(A, B) grows.

    :rtype: SwitchResult with parts (A, B) and e(A, B) per step
    """
    return _stabilize(graph, (a_set, b_set), -1, False,
                      lambda p: graph.edges_between(p[0], p[1]))


def preprocess2(graph, b1_set, b2_set):
    """
    Ordinary switches between B1 and B2 while e(B1, B2) shrinks.

    :rtype: SwitchResult with parts (B1, B2) and e(B1, B2) per step
    """
    return _stabilize(graph, (b1_set, b2_set), 1, False,
                      lambda p: graph.edges_between(p[0], p[1]))


def preprocess3(graph, a_set, b_set, c_set):
    """
    Ordinary and circular switches among A, B, C while the number of
    edges between different parts grows.

    :rtype: SwitchResult with parts (A, B, C)
    """
    def crossing(parts):
        return graph.m - sum(graph.edges_inside(p) for p in parts)
    return _stabilize(graph, (a_set, b_set, c_set), -1, True, crossing)


def _case12_sets(graph, a_set, b_set, eta):
    n = graph.n
    root = 10 * math.sqrt(eta) * n
    a_prime = {v for v in a_set if 9 * graph.degree_in(v, b_set) < 4 * n}
    b_prime = {v for v in b_set if 9 * graph.degree_in(v, a_set) < 2 * n}
    a_second = {v for v in a_set - a_prime
                if graph.degree_in(v, b_set) <= 2 * n / 3 - root}
    b_second = {v for v in b_set - b_prime
                if graph.degree_in(v, a_set) <= n / 3 - root}
    return {"A'": a_prime, "B'": b_prime, "A''": a_second, "B''": b_second}


def _size_claims(graph, sets, a_set, eta):
    n = graph.n
    root = math.sqrt(eta)
    claims = {}
    if 18 * graph.edges_inside(a_set) <= eta * n * n:
        claims["A'_bound"] = len(sets["A'"]) <= eta * n
        claims["B'_bound"] = len(sets["B'"]) <= 3 * eta * n
        claims["A''_bound"] = len(sets["A''"]) <= root * n / 45
        claims["B''_bound"] = len(sets["B''"]) <= root * n / 30
    return claims


def exceptional_sets(graph, partition, case_id, eta=0.15, mu=0.3):
    """
    Exceptional vertices of a preprocessed partition.

    Case 1 takes (A, B), case 2 (A, B1, B2) and case 3 (A, B, C). With
    k = |A| the thresholds are 4n/9 and 2n/9 for A' and B', 2n/3 and n/3
    less 10 sqrt(eta) n for A'' and B'', k/3 and k - 10 sqrt(mu) k for the
    B_i sets and the three-block sets.

    :rtype: ExceptionalSets
    :raises InternalCheckFailure: When a host with delta >= 2n/3 breaks a
        claim that stability guarantees
    """
    n = graph.n
    parts = [frozenset(p) for p in partition]
    k = len(parts[0])
    dirac = 3 * graph.min_degree() >= 2 * n
    if case_id == 1:
        a_set, b_set = parts
        sets = _case12_sets(graph, a_set, b_set, eta)
        claims = _size_claims(graph, sets, a_set, eta)
        claims["A'B'"] = not (sets["A'"] and sets["B'"])
    elif case_id == 2:
        a_set, b1_set, b2_set = parts
        sets = _case12_sets(graph, a_set, b1_set | b2_set, eta)
        claims = _size_claims(graph, sets, a_set, eta)
        claims["A'B'"] = not (sets["A'"] and sets["B'"])
        low = k - 10 * math.sqrt(mu) * k
        for name, own in (("B1", b1_set), ("B2", b2_set)):
            prime = {v for v in own if 3 * graph.degree_in(v, own) < k}
            sets[name + "'"] = prime
            sets[name + "''"] = {v for v in own - prime
                                 if graph.degree_in(v, own) <= low}
        claims["B1'B2'"] = not (sets["B1'"] and sets["B2'"])
        claims["B'_disjoint"] = not (sets["B'"] & (sets["B1'"] | sets["B2'"]))
    elif case_id == 3:
        names = ("A", "B", "C")
        low = k - 10 * math.sqrt(mu) * k
        sets = {}
        for index, name in enumerate(names):
            own = parts[index]
            others = [parts[j] for j in range(3) if j != index]
            sets[name + "'"] = {v for v in own if any(
                3 * graph.degree_in(v, o) < k for o in others)}
            sets[name + "''"] = {v for v in own - sets[name + "'"] if any(
                graph.degree_in(v, o) <= low for o in others)}
        claims = {"one_block_clean": sum(1 for name in names
                                  if sets[name + "'"]) <= 2}
        for name in names:
            claims[name + "'_bound"] = len(sets[name + "'"]) <= mu * n / 2
    else:
        raise ValueError(f"case_id must be 1, 2 or 3, {case_id} passed")
    result = ExceptionalSets(case_id, sets, claims)
    if dirac and case_id in (1, 2) and not claims["A'B'"]:
        raise InternalCheckFailure("A' and B' both nonempty after switching",
                                   sets["A'"] | sets["B'"])
    if dirac and case_id == 2 and k >= 3 and not claims["B1'B2'"]:
        raise InternalCheckFailure("B1' and B2' both nonempty after switching",
                                   sets["B1'"] | sets["B2'"])
    return result


def b_prime_cover_matching(graph, a_set, b_prime):
    """
    Matching of G[B', A] saturating B'.

    :return: dict b -> a
    :raises HypothesisViolation: With the Hall violator when none exists
    """
    left = sorted(b_prime)
    right = sorted(a_set)
    bipartite = BipartiteGraph(left, right, graph.bipartite_view(left, right))
    matching = max_matching(bipartite)
    if len(matching) < len(left):
        violator = hall_violator(bipartite, 1)
        raise HypothesisViolation(
            "B' can not be matched into A",
            {"violator": sorted(violator.vertices),
             "neighborhood": violator.neighborhood_size})
    return dict(matching)
