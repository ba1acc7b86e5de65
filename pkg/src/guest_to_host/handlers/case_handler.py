#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
SPDX-FileCopyrightText: Siemens AG, 2020 Gaurav Mishra <mishra.gaurav@siemens.com>

SPDX-License-Identifier: MIT
"""
__author__ = "Siemens AG"

import sys

import networkx as nx

from guest_to_host.exceptions import HypothesisViolation
from guest_to_host.exceptions import InternalCheckFailure
from guest_to_host.exceptions import StepFailure
from guest_to_host.handlers.coloring_handler import equitable_3_coloring
from guest_to_host.handlers.extremal_handler import b_prime_cover_matching
from guest_to_host.handlers.extremal_handler import matching_or_split
from guest_to_host.handlers.extremal_handler import exceptional_sets
from guest_to_host.handlers.extremal_handler import extremality_certificate
from guest_to_host.handlers.extremal_handler import preprocess1
from guest_to_host.handlers.extremal_handler import preprocess2
from guest_to_host.handlers.extremal_handler import preprocess3
from guest_to_host.handlers.factor_handler import TriangleSet
from guest_to_host.handlers.factor_handler import extend_matching_to_factor
from guest_to_host.handlers.matching_handler import BipartiteGraph
from guest_to_host.handlers.matching_handler import HallViolator
from guest_to_host.handlers.matching_handler import max_matching
from guest_to_host.handlers.regularity_handler import is_super_regular
from guest_to_host.handlers.search_handler import guided_embed
from guest_to_host.handlers.search_handler import match_remaining
from guest_to_host.handlers.structure_handler import decompose
from guest_to_host.handlers.structure_handler import guest_remainder
from guest_to_host.handlers.structure_handler import triangle_extremality


class CaseState:
    """
    Bookkeeping of one run of a case algorithm

    :ivar case_id: 1, 2 or 3
    :ivar blocks: dict block name -> frozenset of host vertices
    :ivar vacant: dict block name -> set of host vertices not used yet
    :ivar snapshots: List of (step label, dict block name -> vacant count)
    :ivar placed: TriangleSet of host triangles used so far
    :ivar phi: Partial embedding, guest vertex -> host vertex
    :ivar queue: Guest triangle components not placed yet
    :ivar exceptional: ExceptionalSets, once computed
    :ivar trace: One line per placed triangle or vertex
    :ivar branch: Parity branch taken by the case 2 cover
    :ivar diagnostics: Free-form facts collected on the way
    """

    def __init__(self, case_id, host, blocks, queue, verbose=0):
        self.case_id = case_id
        self.host = host
        self.blocks = {name: frozenset(b) for name, b in blocks.items()}
        self.vacant = {name: set(b) for name, b in blocks.items()}
        self.snapshots = []
        self.placed = TriangleSet()
        self.phi = {}
        self.queue = list(queue)
        self.exceptional = None
        self.trace = []
        self.branch = None
        self.diagnostics = {}
        self.verbose = verbose
        self.snapshot("start")

    def note(self, level, message):
        if self.verbose >= level:
            print(f"[case {self.case_id}] {message}")

    def snapshot(self, label):
        self.snapshots.append((label, self.sizes()))

    def sizes(self):
        return {name: len(v) for name, v in self.vacant.items()}

    def block_of(self, v):
        for name, block in self.blocks.items():
            if v in block:
                return name
        return None

    def all_vacant(self):
        return set().union(*self.vacant.values())

    def is_vacant(self, v):
        name = self.block_of(v)
        return name is not None and v in self.vacant[name]

    def is_balanced(self, triangle):
        return sum(1 for v in triangle if v in self.blocks["A"]) == 1

    def is_crossing(self, triangle):
        names = {self.block_of(v) for v in triangle}
        if self.case_id == 2:
            return names == {"A", "B1", "B2"}
        return len(names) == 3

    def has_shape(self, triangle, shape):
        """
        balanced: exactly one A-vertex, and not crossing in case 2;
        crossing: one vertex per block; inner: no A-vertex
        """
        if shape == "crossing":
            return self.is_crossing(triangle)
        if shape == "inner":
            return not any(v in self.blocks["A"] for v in triangle)
        if self.case_id == 2 and self.is_crossing(triangle):
            return False
        return self.is_balanced(triangle)

    def take(self, triangle, step, shape):
        """
        Map the next guest triangle onto a vacant host triangle.

        :param shape: "balanced", "crossing" or "inner"
        :raises StepFailure: When no guest triangle is left
        :raises InternalCheckFailure: When the host triple is not a vacant
            triangle of the requested shape
        """
        triangle = tuple(sorted(triangle))
        a, b, c = triangle
        host = self.host
        if not (host.has_edge(a, b) and host.has_edge(a, c) and
                host.has_edge(b, c)):
            raise InternalCheckFailure(f"{triangle} is not a host triangle",
                                       set(triangle))
        if not all(self.is_vacant(v) for v in triangle):
            raise InternalCheckFailure(f"{triangle} is not vacant",
                                       set(triangle))
        if not self.has_shape(triangle, shape):
            raise InternalCheckFailure(f"{triangle} is not {shape}",
                                       set(triangle))
        if not self.queue:
            raise StepFailure(step, "no guest triangle left to place")
        guest_triangle = self.queue.pop(0)
        for x, v in zip(guest_triangle, triangle):
            self.phi[x] = v
        for v in triangle:
            self.vacant[self.block_of(v)].discard(v)
        self.placed.add(triangle)
        self.trace.append(f"{step}: triangle {guest_triangle} -> {triangle}")

    def place(self, x, v, step):
        if not self.is_vacant(v):
            raise InternalCheckFailure(f"host vertex {v} is not vacant", {v})
        self.phi[x] = v
        self.vacant[self.block_of(v)].discard(v)
        self.trace.append(f"{step}: vertex {x} -> {v}")


def _pick(candidates, avoid=()):
    """
    Lowest id candidate outside ``avoid``, else the lowest id overall
    """
    clean = [v for v in candidates if v not in avoid]
    pool = clean or list(candidates)
    return min(pool) if pool else None


def classify_case(host, config):
    """
    Decide which extremal case a host falls into.

    A is an (eta, 3)-certificate and B = V - A. Case 3 when G[B] has a
    (mu, 2)-certificate; otherwise B is bisected by switching and the
    halves decide: Case 2 when d(B1, B2) < mu, Case 1 otherwise.

    :return: (case_id, tuple of blocks), or None for a non-extremal host
    """
    certificate = extremality_certificate(host, 3, config.eta,
                                          config.exact_limit,
                                          config.restarts, config.seed)
    if certificate is None:
        return None
    a_set = certificate.A
    b_set = frozenset(host.vertices()) - a_set
    inner, ids = host.induced(sorted(b_set))
    half = extremality_certificate(inner, 2, config.mu, config.exact_limit,
                                   config.restarts, config.seed)
    if half is not None:
        b_part = frozenset(ids[v] for v in half.A)
        return 3, (a_set, b_part, b_set - b_part)
    b1_set, b2_set = bisect(host, b_set)
    if host.edges_between(b1_set, b2_set) < \
            config.mu * len(b1_set) * len(b2_set):
        return 2, (a_set, b1_set, b2_set)
    return 1, (a_set, b_set)


def bisect(host, b_set, hint=None):
    """
    Split B into halves of sizes floor(|B|/2) and ceil(|B|/2) with few
    edges between them: Kernighan-Lin from a start seeded by ``hint``,
    then stabilized by single switches.
    """
    ordered = sorted(b_set)
    size = len(ordered) // 2
    first = [v for v in ordered if hint is not None and v in hint][:size]
    for v in ordered:
        if len(first) >= size:
            break
        if v not in first:
            first.append(v)
    second = set(ordered) - set(first)
    if first and second:
        first, second = nx.community.kernighan_lin_bisection(
            host.to_networkx().subgraph(ordered), (set(first), second),
            seed=0)
    result = preprocess2(host, set(first), set(second))
    return result.parts


def _guest_parts(guest, nu):
    extremality = triangle_extremality(guest, nu)
    queue = [t for t in extremality.triangles
             if all(v in extremality.vdelta for v in t)]
    remainder, ids = guest_remainder(guest, extremality)
    return queue, remainder, ids


def _completion(state, a, b, side, avoid, step):
    """
    Third vertex of a triangle on edge ab taken from the vacant part of
    ``side``
    """
    host = state.host
    pool = host.neighbor_set(a) & host.neighbor_set(b) & state.vacant[side]
    pool = pool - {a, b}
    v = _pick(sorted(pool), avoid)
    if v is None:
        raise StepFailure(step, f"no common neighbor of {a} and {b} in "
                          f"vacant {side}", b)
    return v


def _cover_from_b(state, b, side, avoid, step):
    """
    Balanced triangle a, b, c with a in vacant A and c in vacant ``side``
    """
    host = state.host
    pool = host.neighbor_set(b) & state.vacant["A"]
    for a in sorted(pool, key=lambda x: (x in avoid, x)):
        common = host.neighbor_set(a) & host.neighbor_set(b) & \
            state.vacant[side]
        if common - {b}:
            break
    else:
        raise StepFailure(step, "no A-vertex completes a triangle", b)
    _finish_partner(state, b, a, side, avoid, step)


def _cover_from_a(state, a, sides, avoid, step):
    """
    Balanced triangle on a and an edge inside the vacant part of one of
    ``sides``
    """
    host = state.host
    for side in sides:
        pool = sorted(host.neighbor_set(a) & state.vacant[side])
        ranked = sorted(pool, key=lambda v: (v in avoid, v))
        for b in ranked:
            rest = host.neighbor_set(b) & set(pool)
            if rest:
                c = _pick(sorted(rest), avoid)
                state.take((a, b, c), step, "balanced")
                return
    raise StepFailure(step, "no edge inside the vacant neighborhood", a)


def cover_exceptional_case1(state, config, b_side="B"):
    """
    Steps 1 and 2 of Case 1: cover B' through a matching into A, then A'
    and A'' through edges inside their B-neighborhoods, then B'' through
    an ordinary A-vertex, all with balanced triangles.
    """
    host = state.host
    sets = state.exceptional
    avoid = sets.all_vertices()
    b_prime = [b for b in sorted(sets["B'"]) if state.is_vacant(b)]
    if b_prime:
        partners = b_prime_cover_matching(host, state.vacant["A"], b_prime)
        for b in b_prime:
            _finish_partner(state, b, partners[b], b_side, avoid, "step1")
    state.snapshot("step1")
    for a in sorted(sets["A'"] | sets["A''"]):
        if state.is_vacant(a):
            _cover_from_a(state, a, (b_side,), avoid, "step2")
    for b in sorted(sets["B''"]):
        if state.is_vacant(b):
            _cover_from_b(state, b, b_side, avoid | sets["A''"],
                          "step2")
    state.snapshot("step2")
    state.note(2, f"exceptional vertices covered, {len(state.placed)} "
                  "triangles placed")
    return state


def _finish_partner(state, b, a, side, avoid, step):
    c = _completion(state, a, b, side, avoid, step)
    state.take((a, b, c), step, "balanced")


def _place_path(state, length, side, used):
    host = state.host
    vacant_a = state.vacant["A"]
    free = state.vacant[side] - used

    def rank(v):
        return (-host.degree_in(v, vacant_a), v)

    for start in sorted(free, key=rank):
        path = [start]
        while len(path) < length:
            options = [w for w in host.neighbor_set(path[-1]) & free
                       if w not in path]
            if not options:
                break
            path.append(min(options, key=rank))
        if len(path) == length:
            return path
    return None


def embed_hprime_case1(state, hprime, ids, dec=None, b_side="B"):
    """
    Step 3 of Case 1: components of H' - I(H') go on vacant B-vertices of
    high A-degree as short paths, then I(H') is matched into vacant A onto
    common neighbors of the images.

    :param hprime: H' relabelled to 0..v(H')-1
    :param ids: New id -> guest id
    :param dec: HDecomposition of hprime, computed when omitted
    """
    if hprime.n == 0:
        state.diagnostics["h0"] = state.diagnostics["h1"] = 0
        state.snapshot("step3")
        return state
    if dec is None:
        dec = decompose(hprime)
    local, used = {}, set()
    for part in dec.components_minus_I:
        path = _place_path(state, len(part), b_side, used)
        if path is None:
            raise StepFailure("step3", "no vacant path for a component",
                              ids[part[0]])
        for x, v in zip(part, path):
            local[x] = v
            used.add(v)
    domains = {x: state.vacant["A"] for x in dec.I}
    extended = match_remaining(hprime, state.host, local, dec.I, domains)
    if extended is None:
        raise StepFailure("step3", "I(H') can not be matched into A")
    for x in sorted(extended):
        state.place(ids[x], extended[x], "step3")
    for u, v in hprime.edges:
        if not state.host.has_edge(extended[u], extended[v]):
            raise InternalCheckFailure("H' edge not preserved", {u, v})
    state.diagnostics["h0"] = len(dec.I)
    state.diagnostics["h1"] = hprime.n - len(dec.I)
    state.snapshot("step3")
    return state


def balance_case1(state, residue, b_sides=("B",), target=None):
    """
    Step 4 of Case 1: place (r + s)/3 triangles inside vacant B (inside
    ``target`` when B is split) so that 2|A(4)| = |B(4)| afterwards. The
    identity |B(3)| - 2|A(3)| = r + s with s = 2h0 - h1 is checked first.

    :param residue: r, i.e. |B| - 2|A| before any placement
    """
    target = target or b_sides[0]
    host = state.host
    s = 2 * state.diagnostics.get("h0", 0) - state.diagnostics.get("h1", 0)

    def gap():
        return sum(len(state.vacant[n]) for n in b_sides) - \
            2 * len(state.vacant["A"])

    state.diagnostics["r+s"] = residue + s
    if gap() != residue + s:
        raise InternalCheckFailure(f"|B(3)| - 2|A(3)| = {gap()}, expected "
                                   f"r + s = {residue + s}")
    if gap() % 3:
        raise InternalCheckFailure(f"r + s = {gap()} is not divisible by 3")
    if gap() < 0:
        raise StepFailure("step4", f"r + s = {gap()} is negative")
    vacant_a = state.vacant["A"]

    def rank(v):
        return (host.degree_in(v, vacant_a), v)

    for _ in range(gap() // 3):
        pool = state.vacant[target]
        found = None
        for u in sorted(pool, key=rank):
            nbrs = sorted(host.neighbor_set(u) & pool, key=rank)
            for i, v in enumerate(nbrs):
                closing = [w for w in nbrs[i + 1:] if host.has_edge(v, w)]
                if closing:
                    found = (u, v, closing[0])
                    break
            if found:
                break
        if found is None:
            raise StepFailure("step4", f"no triangle inside vacant {target}")
        state.take(found, "step4", "inner")
    if gap() != 0:
        raise InternalCheckFailure("2|A(4)| != |B(4)| after balancing")
    state.snapshot("step4")
    return state


def finish_case1(state, config, a_vacant=None, b_vacant=None):
    """
    Step 5: perfect matching of G[B(4)] from the matching branch of the
    dichotomy, extended to a triangle factor of G[A(4) + B(4)]; the
    remaining guest triangles go onto its triangles.
    """
    host = state.host
    a_vacant = set(state.vacant["A"] if a_vacant is None else a_vacant)
    b_vacant = set(state.vacant["B"] if b_vacant is None else b_vacant)
    if not b_vacant and not a_vacant:
        return state
    inner, ids = host.induced(sorted(b_vacant))
    try:
        result = matching_or_split(inner, config.mu, config.alpha)
    except HypothesisViolation as error:
        raise StepFailure("step5", f"matching dichotomy: {error}")
    if not result.is_perfect:
        raise StepFailure("step5", "G[B(4)] has no perfect matching")
    matching = [(ids[u], ids[v]) for u, v in result.matching]
    factor = extend_matching_to_factor(host, a_vacant, matching)
    if isinstance(factor, HallViolator):
        raise StepFailure("step5", "matching does not extend to a factor",
                          min(factor.vertices))
    for triangle in factor:
        state.take(triangle, "step5", "balanced")
    state.snapshot("step5")
    return state


def _prepare(guest, host, config, case_id, blocks):
    queue, remainder, ids = _guest_parts(guest, config.nu)
    state = CaseState(case_id, host, blocks, queue, config.verbose)
    state.diagnostics["remainder"] = (remainder, ids)
    return state


def case1_embed(guest, host, config, partition):
    """
    Case 1 end to end.

    :param partition: (A, B) from the classification
    :return: CaseState with a complete phi
    """
    switched = preprocess1(host, *partition)
    a_set, b_set = switched.parts
    state = _prepare(guest, host, config, 1, {"A": a_set, "B": b_set})
    state.diagnostics["switches"] = len(switched.switches)
    state.exceptional = exceptional_sets(host, (a_set, b_set), 1,
                                         config.eta, config.mu)
    state.note(2, f"{len(switched.switches)} switches, exceptional sizes "
                  f"{state.exceptional.sizes()}")
    residue = len(b_set) - 2 * len(a_set)
    cover_exceptional_case1(state, config)
    remainder, ids = state.diagnostics.pop("remainder")
    embed_hprime_case1(state, remainder, ids)
    balance_case1(state, residue)
    finish_case1(state, config)
    return state


def _crossing_for(state, b, other, avoid, step):
    """
    Crossing triangle through b: one vertex in ``other`` and one in A
    """
    host = state.host
    for c in sorted(host.neighbor_set(b) & state.vacant[other],
                    key=lambda v: (v in avoid, v)):
        common = host.neighbor_set(b) & host.neighbor_set(c) & \
            state.vacant["A"]
        if common:
            a = _pick(sorted(common), avoid)
            state.take((a, b, c), step, "crossing")
            return
    raise StepFailure(step, f"no crossing triangle through {b}", b)


def _side(state, v):
    return "B1" if v in state.blocks["B1"] else "B2"


def _other(side):
    return "B2" if side == "B1" else "B1"


def cover_b_prime_with_parity(state, q):
    """
    Cover B' with exactly q crossing and |B'| - q non-crossing balanced
    triangles, each B'-vertex using its partner from a matching into A.
    """
    host = state.host
    sets = state.exceptional
    avoid = sets.all_vertices()
    b_prime = [b for b in sorted(sets["B'"]) if state.is_vacant(b)]
    if not 0 <= q <= len(b_prime):
        raise StepFailure("cover-B'", f"q = {q} outside 0..{len(b_prime)}")
    if not b_prime:
        return state
    partners = b_prime_cover_matching(host, state.vacant["A"], b_prime)
    crossed = 0
    for b in b_prime:
        own = _side(state, b)
        a = partners[b]
        if crossed < q:
            common = host.neighbor_set(a) & host.neighbor_set(b) & \
                state.vacant[_other(own)]
            if common:
                state.take((a, b, _pick(sorted(common), avoid)), "cover-B'",
                           "crossing")
                crossed += 1
                continue
        _finish_partner(state, b, a, own, avoid, "cover-B'")
    if crossed < q:
        raise StepFailure("cover-B'", f"only {crossed} of {q} crossing "
                          "triangles found")
    return state


def cross_parity_fix(state):
    """
    Parity control of Case 2: B1' and B2' are covered by crossing
    triangles; one more crossing triangle is added, through B' when it is
    nonempty and through an edge between the halves otherwise, exactly
    when |B2| minus the crossing count is odd. Afterwards |B2(2)| is even.
    """
    host = state.host
    sets = state.exceptional
    avoid = sets.all_vertices()
    start_b2 = len(state.vacant["B2"])
    crossing = 0
    for name, own in (("B1'", "B1"), ("B2'", "B2")):
        for b in sorted(sets[name]):
            if state.is_vacant(b):
                _crossing_for(state, b, _other(own), avoid,
                              "cross_parity_fix")
                crossing += 1
    labels = ["odd" if start_b2 % 2 else "even"]
    labels.append("(i)" if crossing else "-")
    b_prime = [b for b in sets["B'"] if state.is_vacant(b)]
    extra = (start_b2 - crossing) % 2
    if extra and b_prime:
        cover_b_prime_with_parity(state, 1)
        labels.append("(ii)")
    else:
        cover_b_prime_with_parity(state, 0)
        if extra:
            tried = []
            for b in sorted(state.vacant["B1"], key=lambda v: (v in avoid, v)):
                if not host.neighbor_set(b) & state.vacant["B2"]:
                    continue
                try:
                    _crossing_for(state, b, "B2", avoid, "cross_parity_fix")
                    break
                except StepFailure:
                    tried.append(b)
            else:
                raise StepFailure("cross_parity_fix",
                                  "no crossing triangle on an edge between "
                                  f"B1 and B2, tried {tried}", tried)
            labels.append("(iii)")
    state.branch = " ".join(labels)
    if len(state.vacant["B2"]) % 2:
        raise InternalCheckFailure(f"|B2(2)| = {len(state.vacant['B2'])} "
                                   "is odd after the parity cover")
    state.snapshot("cross_parity_fix")
    state.note(2, f"parity branch {state.branch}")
    return state


def case2_embed(guest, host, config, partition):
    """
    Case 2 end to end.

    :param partition: (A, B1, B2) from the classification
    :return: CaseState with a complete phi
    """
    a_set, b1_hint, b2_hint = partition
    switched = preprocess1(host, a_set, b1_hint | b2_hint)
    a_set, b_set = switched.parts
    b1_set, b2_set = bisect(host, b_set, b1_hint)
    state = _prepare(guest, host, config, 2,
                     {"A": a_set, "B1": b1_set, "B2": b2_set})
    state.exceptional = exceptional_sets(host, (a_set, b1_set, b2_set), 2,
                                         config.eta, config.mu)
    sets = state.exceptional
    avoid = sets.all_vertices()
    state.note(2, f"exceptional sizes {sets.sizes()}")
    residue = len(b_set) - 2 * len(a_set)
    cross_parity_fix(state)
    for a in sorted(sets["A'"] | sets["A''"]):
        if state.is_vacant(a):
            _cover_from_a(state, a, ("B1", "B2"), avoid, "step3")
    for name in ("B''", "B1''", "B2''"):
        for b in sorted(sets[name]):
            if state.is_vacant(b):
                own = _side(state, b)
                _cover_from_b(state, b, own, avoid | sets["A''"],
                              "step3")
    state.snapshot("step3-cover")
    remainder, ids = state.diagnostics.pop("remainder")
    embed_hprime_case1(state, remainder, ids, b_side="B1")
    balance_case1(state, residue, ("B1", "B2"), "B1")
    b1_left, b2_left = state.vacant["B1"], state.vacant["B2"]
    if len(b1_left) % 2 or len(b2_left) % 2:
        raise InternalCheckFailure(f"|B1(4)| = {len(b1_left)}, |B2(4)| = "
                                   f"{len(b2_left)} must both be even")
    a_left = sorted(state.vacant["A"], key=lambda a: (
        host.degree_in(a, b2_left) - host.degree_in(a, b1_left), a))
    a1 = set(a_left[:len(b1_left) // 2])
    a2 = set(a_left[len(b1_left) // 2:])
    state.diagnostics["split"] = (len(a1), len(a2))
    finish_case1(state, config, a1, set(b1_left))
    finish_case1(state, config, a2, set(b2_left))
    return state


def _scarce_block(state, v, names):
    host = state.host
    return min((n for n in names if n != state.block_of(v)),
               key=lambda n: (host.degree_in(v, state.vacant[n]), n))


def case3_embed(guest, host, config, partition):
    """
    Case 3 end to end: cover the exceptional vertices by crossing
    triangles, color the rest of the guest equitably and place the color
    classes on the three vacant blocks by guided search.

    :param partition: (A, B, C) from the classification
    :return: CaseState with a complete phi
    """
    names = ("A", "B", "C")
    switched = preprocess3(host, *partition)
    blocks = dict(zip(names, switched.parts))
    state = _prepare(guest, host, config, 3, blocks)
    state.exceptional = exceptional_sets(host, switched.parts, 3,
                                         config.eta, config.mu)
    sets = state.exceptional
    avoid = sets.all_vertices()
    primes = sorted(v for n in names for v in sets[n + "'"])
    if primes:
        scarce = {v: _scarce_block(state, v, names) for v in primes}
        edges = [(v, w) for v in primes
                 for w in sorted(host.neighbor_set(v) &
                                 state.vacant[scarce[v]])]
        right = sorted({w for _, w in edges})
        partners = max_matching(BipartiteGraph(primes, right, edges))
        for v in primes:
            if not state.is_vacant(v):
                continue
            third = ({"A", "B", "C"} - {state.block_of(v), scarce[v]}).pop()
            w = partners.get(v)
            if w is None or not state.is_vacant(w):
                pool = host.neighbor_set(v) & state.vacant[scarce[v]]
                w = _pick(sorted(pool), avoid)
            if w is None:
                raise StepFailure("step1", "no neighbor in the scarce block",
                                  v)
            c = _completion(state, v, w, third, avoid, "step1")
            state.take((v, w, c), "step1", "crossing")
    state.snapshot("step1")
    for v in sorted(v for n in names for v in sets[n + "''"]):
        if state.is_vacant(v):
            own = state.block_of(v)
            first, second = sorted(set(names) - {own})
            pool = host.neighbor_set(v) & state.vacant[first]
            for w in sorted(pool, key=lambda x: (x in avoid, x)):
                common = host.neighbor_set(v) & host.neighbor_set(w) & \
                    state.vacant[second]
                if common:
                    state.take((v, w, _pick(sorted(common), avoid)), "step2",
                               "crossing")
                    break
            else:
                raise StepFailure("step2", "no crossing triangle", v)
    state.snapshot("step2")
    placed = set(state.phi)
    rest_ids = [x for x in guest.vertices() if x not in placed]
    rest, ids = guest.induced(rest_ids)
    coloring = equitable_3_coloring(rest)
    by_size = sorted(names, key=lambda n: (len(state.vacant[n]), n))
    if [len(state.vacant[n]) for n in by_size] != list(coloring.sizes()):
        raise StepFailure("step3", f"color classes {coloring.sizes()} do not "
                          f"fit vacant blocks {state.sizes()}")
    domains = {}
    for index, name in enumerate(by_size):
        for x in coloring.classes[index]:
            domains[x] = state.vacant[name]
    state.diagnostics["super_regular"] = {
        f"{p}{q}": is_super_regular(host, state.vacant[p], state.vacant[q],
                                    config.epsilon, 0.5)
        for p, q in (("A", "B"), ("A", "C"), ("B", "C"))
        if state.vacant[p] and state.vacant[q]}
    local = guided_embed(rest, host, domains, budget=config.search_budget)
    if local is None:
        raise StepFailure("step4", "no placement of the color classes")
    state.queue = []
    for x in sorted(local):
        state.place(ids[x], local[x], "step4")
    state.snapshot("step4")
    return state


def case_embed(guest, host, config, case=None):
    """
    Run the case algorithm chosen by ``classify_case`` (or forced by
    ``case``) and return its state.

    :raises StepFailure: When a step gets stuck
    :raises HypothesisViolation: When the host is not extremal
    """
    found = classify_case(host, config)
    if found is None:
        raise HypothesisViolation("host is not (eta, 3)-extremal",
                                  {"eta": config.eta})
    case_id, partition = found
    if case is not None and case != case_id:
        print(f"Forcing case {case} on a host classified as case {case_id}",
              file=sys.stderr)
        partition = _reshape(host, partition, case)
        case_id = case
    runner = {1: case1_embed, 2: case2_embed, 3: case3_embed}[case_id]
    state = runner(guest, host, config, partition)
    if len(state.phi) != guest.n:
        raise InternalCheckFailure("case algorithm left guest vertices "
                                   "unplaced",
                                   set(guest.vertices()) - set(state.phi))
    return state


def _reshape(host, partition, case_id):
    a_set = partition[0]
    b_set = frozenset().union(*partition[1:])
    if case_id == 1:
        return a_set, b_set
    first, second = bisect(host, b_set)
    return a_set, first, second
