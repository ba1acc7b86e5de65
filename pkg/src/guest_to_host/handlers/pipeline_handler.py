#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
SPDX-FileCopyrightText: Siemens AG, 2020 Gaurav Mishra <mishra.gaurav@siemens.com>

SPDX-License-Identifier: MIT
"""
__author__ = "Siemens AG"

import math
import time
import itertools

import networkx as nx
import numpy as np
from scipy import stats

from guest_to_host.config import EngineConfig
from guest_to_host.exceptions import InternalCheckFailure
from guest_to_host.exceptions import PipelineFailure
from guest_to_host.graph import Graph
from guest_to_host.graph import complete_graph
from guest_to_host.handlers.factor_handler import TriangleSet
from guest_to_host.handlers.factor_handler import fictive_triangle_pipeline
from guest_to_host.handlers.matching_handler import BipartiteGraph
from guest_to_host.handlers.matching_handler import HallViolator
from guest_to_host.handlers.matching_handler import build_lambda1
from guest_to_host.handlers.matching_handler import lambda1_matching
from guest_to_host.handlers.matching_handler import max_matching
from guest_to_host.handlers.matching_handler import near_proportional_matching
from guest_to_host.handlers.matching_handler import \
    strong_proportional_matching
from guest_to_host.handlers.search_handler import guided_embed
from guest_to_host.handlers.structure_handler import decompose

EXCEPTIONAL = -1

# C1: |L0| <= K1 d n
K1 = 15
# C4: at most K2 d m neighbors of L0 in any one cluster
K2 = 50


class ClusterWorld:
    """
    Synthetic reduced graph with cluster parameters

    :ivar reduced: Reduced graph on clusters 0..ell-1
    :ivar m: Cluster size
    :ivar d: Density parameter
    :ivar eps: Regularity parameter
    :ivar delta_buf: Buffer fraction per cluster
    :ivar c: Degree floor fraction of exceptional host vertices
    :ivar triangles: TriangleSet of the reduced graph covering every cluster
    :ivar v0_size: Number of exceptional host vertices
    :ivar discarded: Clusters folded into V0 by the triangle pipeline
    :ivar v0_degrees: numpy array (v0_size, ell), degree of each V0 vertex
        to each cluster
    :ivar cluster_degrees: List of numpy arrays (m, ell), degree of each
        cluster vertex to each cluster
    """

    def __init__(self, reduced, m, d, eps, delta_buf, c, triangles, v0_size,
                 discarded=(), seed=0, v0_degrees=None, cluster_degrees=None):
        if reduced.n == 0 or m < 1:
            raise PipelineFailure("world", "need at least one cluster of "
                                  "positive size")
        for triangle in triangles:
            for u, v in itertools.combinations(triangle, 2):
                if not reduced.has_edge(u, v):
                    raise InternalCheckFailure(f"{triangle} is not a reduced "
                                               "triangle", set(triangle))
        self.reduced = reduced
        self.m = m
        self.d = d
        self.eps = eps
        self.delta_buf = delta_buf
        self.c = c
        self.triangles = triangles
        self.v0_size = v0_size
        self.discarded = frozenset(discarded)
        self.seed = seed
        self.v0_degrees = v0_degrees
        self.cluster_degrees = cluster_degrees

    @property
    def ell(self):
        return self.reduced.n

    @property
    def n(self):
        return self.m * self.ell + self.v0_size

    def to_dict(self):
        return {"ell": self.ell, "m": self.m, "d": self.d, "eps": self.eps,
                "delta": self.delta_buf, "c": self.c, "n": self.n,
                "v0_size": self.v0_size, "discarded": sorted(self.discarded),
                "triangles": [list(t) for t in self.triangles]}


class AssignmentState:
    """
    Index assignment h of the guest plus its fictive vertices

    :ivar guest: Guest graph
    :ivar dec: HDecomposition of the guest
    :ivar ell: Number of clusters
    :ivar h: dict vertex -> cluster index or EXCEPTIONAL; fictive vertices
        carry ids guest.n, guest.n + 1, ...
    :ivar g: dict owner -> fictive vertex
    :ivar owner: dict fictive vertex -> owner
    :ivar component_triangle: dict component index -> reduced triangle
    :ivar buffers: dict cluster -> frozenset of buffer vertices
    :ivar psi0: dict L0 vertex -> V0 index
    :ivar removed: dict cluster -> R_i moved into L0
    :ivar moves: Deficit repair moves (vertex, from, to)
    :ivar swaps: Switching ledger (x, x', V0 index, cluster)
    """

    def __init__(self, guest, dec, ell):
        self.guest = guest
        self.dec = dec
        self.ell = ell
        self.h = {}
        self.g = {}
        self.owner = {}
        self.component_triangle = {}
        self.buffers = {}
        self.psi0 = {}
        self.removed = {}
        self.moves = []
        self.swaps = []
        self.i_fictive = frozenset()

    def is_fictive(self, x):
        return x >= self.guest.n

    def neighbors_plus(self, x):
        if self.is_fictive(x):
            return [self.owner[x]]
        nbrs = list(self.guest.neighbors(x))
        if x in self.g:
            nbrs.append(self.g[x])
        return nbrs

    def pair_of(self, x):
        """
        Sorted pair of indices h(N_{H+}(x)); None unless exactly two
        distinct indices occur
        """
        indices = {self.h[y] for y in self.neighbors_plus(x)}
        if len(indices) != 2 or EXCEPTIONAL in indices:
            return None
        return tuple(sorted(indices))

    def clusters(self):
        parts = [set() for _ in range(self.ell)]
        for x in self.guest.vertices():
            index = self.h.get(x)
            if index is not None and index >= 0:
                parts[index].add(x)
        return parts

    def L0(self):
        return {x for x in self.guest.vertices()
                if self.h.get(x) == EXCEPTIONAL}

    def sizes(self):
        return [len(p) for p in self.clusters()]


class ConditionReport:
    """
    Outcome of the condition predicates

    :ivar results: dict name -> (bool or None when unchecked, witness)
    """

    def __init__(self):
        self.results = {}

    def record(self, name, ok, witness=None):
        self.results[name] = (ok, witness)

    def failing(self):
        return sorted(name for name, (ok, _) in self.results.items()
                      if ok is False)

    def all_ok(self):
        return not self.failing()

    def to_dict(self):
        return {name: {"ok": ok, "witness": _plain(witness)}
                for name, (ok, witness) in sorted(self.results.items())}


class RemovalReport:
    """
    Exact-size removal sets per cluster

    :ivar removals: dict cluster -> sorted local vertex indices
    :ivar bad: dict cluster -> number of bad vertices found
    :ivar v0_bound: 3 eps n < |V0| < 15 d n
    """

    def __init__(self, removals, bad, v0_bound):
        self.removals = removals
        self.bad = bad
        self.v0_bound = v0_bound


class PipelineRun:
    """
    State, conditions and summary of one end-to-end pipeline run
    """

    def __init__(self, state, report, summary):
        self.state = state
        self.report = report
        self.summary = summary


def _plain(value):
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (np.integer,)):
        return int(value)
    return value


def random_reduced_graph(ell, rng, min_degree=None):
    """
    Random graph on ell vertices with minimum degree at least
    ceil(2 ell / 3): edges of the complete graph are dropped in random
    order while both ends keep enough degree.
    """
    if min_degree is None:
        min_degree = math.ceil(2 * ell / 3)
    degree = [ell - 1] * ell
    keep = []
    edges = list(complete_graph(ell).edges)
    for index in rng.permutation(len(edges)):
        u, v = edges[index]
        if degree[u] > min_degree and degree[v] > min_degree and \
                rng.random() < 0.5:
            degree[u] -= 1
            degree[v] -= 1
        else:
            keep.append((u, v))
    return Graph(ell, keep)


def build_cluster_world(ell=6, m=500, d=0.05, eps=0.005, delta_buf=0.02,
                        c=0.1, seed=0, v0_size=None, reduced=None):
    """
    Synthetic world: reduced graph with delta >= ceil(2 ell/3), its triangle
    factor from the fictive-vertex pipeline (discarded clusters are folded
    into V0), V0 of size ell * ceil(4 eps m) unless given, and random
    degree tables.

    :rtype: ClusterWorld
    :raises PipelineFailure: When the reduced graph has no usable factor
    """
    rng = np.random.default_rng(seed)
    if reduced is None:
        reduced = random_reduced_graph(ell, rng)
    found = fictive_triangle_pipeline(reduced, d)
    if found is None:
        raise PipelineFailure("world", "reduced graph has no triangle factor "
                              "after adding fictive clusters")
    triangles, discarded = found
    if v0_size is None:
        v0_size = reduced.n * math.ceil(4 * eps * m)
    v0_size += m * len(discarded)
    if discarded:
        kept = [v for v in reduced.vertices() if v not in discarded]
        reduced, ids = reduced.induced(kept)
        back = {old: new for new, old in enumerate(ids)}
        triangles = TriangleSet(tuple(back[v] for v in t) for t in triangles)
    ell = reduced.n
    v0_degrees = np.zeros((v0_size, ell), dtype=int)
    dense = math.ceil(2 * ell / 3)
    for row in range(v0_size):
        chosen = rng.permutation(ell)[:dense]
        v0_degrees[row] = rng.binomial(m, 0.05, ell)
        v0_degrees[row, chosen] = rng.binomial(m, 0.8, dense)
    cluster_degrees = []
    for i in range(ell):
        table = np.zeros((m, ell), dtype=int)
        for j in reduced.neighbors(i):
            table[:, j] = rng.binomial(m, d, m)
        cluster_degrees.append(table)
    return ClusterWorld(reduced, m, d, eps, delta_buf, c, triangles, v0_size,
                        discarded, seed, v0_degrees, cluster_degrees)


def _m1(world):
    """
    Proportional matching of Lambda1; near-proportional when ell is even
    """
    if world.ell % 2:
        matching = lambda1_matching(world.reduced, world.d)
    else:
        matching = near_proportional_matching(
            build_lambda1(world.reduced).bipartite)
    if isinstance(matching, HallViolator):
        raise PipelineFailure("M1", "Lambda1 fails the Hall condition",
                              sorted(matching.vertices))
    return matching


def _m2(world, mu, seed):
    matching = strong_proportional_matching(world.reduced, mu, seed)
    if isinstance(matching, HallViolator):
        raise PipelineFailure("M2", "Lambda2 fails the Hall condition",
                              sorted(matching.vertices))
    return matching


def assign_components(guest, dec, world, seed=0):
    """
    Every component of H - I goes onto a uniformly random triangle of the
    factor with a uniformly random role permutation; vertices of
    I - I2 - Ihat go onto a cluster of their component's triangle that
    none of their neighbors uses (isolated ones onto a random cluster).

    :rtype: AssignmentState
    """
    rng = np.random.default_rng(seed)
    triangles = list(world.triangles)
    if not triangles:
        raise PipelineFailure("assign", "triangle factor is empty")
    state = AssignmentState(guest, dec, world.ell)
    owner = dec.component_of()
    for index, part in enumerate(dec.components_minus_I):
        triangle = triangles[rng.integers(len(triangles))]
        perm = rng.permutation(3)
        state.component_triangle[index] = triangle
        for k, x in enumerate(part):
            state.h[x] = int(triangle[perm[k]])
    for x in sorted(dec.I - dec.I2 - dec.Ihat):
        nbrs = guest.neighbors(x)
        if not nbrs:
            triangle = triangles[rng.integers(len(triangles))]
            state.h[x] = int(triangle[rng.integers(3)])
            continue
        triangle = state.component_triangle[owner[nbrs[0]]]
        taken = {state.h[y] for y in nbrs}
        free = [v for v in triangle if v not in taken]
        if not free:
            raise InternalCheckFailure(f"no free cluster for {x}", {x})
        state.h[x] = int(free[rng.integers(len(free))])
    return state


def add_fictive(guest, dec, state, seed=0):
    """
    Give a fictive neighbor to every vertex of I2' (both neighbors on one
    cluster) and of Ihat with a single neighbor; each fictive vertex gets
    a uniformly random index other than its owner's neighbor index.
    """
    rng = np.random.default_rng(seed)
    i2_prime = {x for x in dec.I2
                if len({state.h[y] for y in guest.neighbors(x)}) == 1}
    leaves = {x for x in dec.Ihat if guest.degree(x) == 1}
    next_id = guest.n
    for x in sorted(i2_prime | leaves):
        taken = state.h[guest.neighbors(x)[0]]
        choices = [i for i in range(state.ell) if i != taken]
        f = next_id
        next_id += 1
        state.g[x] = f
        state.owner[f] = x
        state.h[f] = int(choices[rng.integers(len(choices))])
    state.i_fictive = frozenset(state.g)
    return state


def distribute_i2(state, m1):
    """
    (I2 + I_F) - Ihat1 follows M1: x goes to the cluster matched to the
    pair of its neighbor indices.

    :raises InternalCheckFailure: When the neighbor indices coincide
    """
    dec = state.dec
    ihat1 = dec.Ihat_parts[0]
    targets = (set(dec.I2) | set(state.g)) - ihat1
    for x in sorted(targets):
        pair = state.pair_of(x)
        if pair is None:
            raise InternalCheckFailure(f"neighbor indices of {x} do not form "
                                       "a pair", {x})
        state.h[x] = int(m1.assignment[pair])
    return state


def distribute_ihat1(state, m2, seed=0):
    """
    Every class Ihat1(i, j) is cut into c segments of near-equal size in a
    random order; segment t goes to the cluster matched to copy t.
    """
    rng = np.random.default_rng(seed)
    copies = max(t for _, t in m2.assignment)
    groups = {}
    for x in sorted(state.dec.Ihat_parts[0]):
        pair = state.pair_of(x)
        if pair is None:
            raise InternalCheckFailure(f"neighbor indices of {x} do not form "
                                       "a pair", {x})
        groups.setdefault(pair, []).append(x)
    for pair, members in sorted(groups.items()):
        order = [members[i] for i in rng.permutation(len(members))]
        for t, segment in enumerate(np.array_split(order, copies), start=1):
            for x in segment:
                state.h[int(x)] = int(m2.assignment[(pair, t)])
    return state


def _homomorphic_targets(state, reduced, x):
    taken = {state.h[y] for y in state.guest.neighbors(x)}
    if EXCEPTIONAL in taken:
        return []
    return [i for i in range(state.ell)
            if i not in taken and all(reduced.has_edge(i, j) for j in taken)]


def form_L0(state, world, seed=0):
    """
    Bring every cluster to exactly m vertices: deficits are filled by
    moving Ihat1 vertices out of surplus clusters onto clusters adjacent
    to all their neighbor indices, then a random R_i of Ihat1 n L_i of the
    remaining surplus is moved to L0.

    :raises PipelineFailure: When the guest size does not match or Ihat1
        runs out
    """
    guest = state.guest
    if guest.n != world.n:
        raise PipelineFailure("L0", f"guest has {guest.n} vertices, world "
                              f"needs {world.n}", guest.n)
    rng = np.random.default_rng(seed)
    ihat1 = state.dec.Ihat_parts[0]
    parts = state.clusters()
    for _ in range(guest.n):
        short = [i for i in range(state.ell) if len(parts[i]) < world.m]
        if not short:
            break
        target = short[0]
        moved = False
        donors = sorted(range(state.ell), key=lambda i: (-len(parts[i]), i))
        for source in donors:
            if len(parts[source]) <= world.m:
                break
            for x in sorted(parts[source] & ihat1):
                if target in _homomorphic_targets(state, world.reduced, x):
                    parts[source].discard(x)
                    parts[target].add(x)
                    state.h[x] = target
                    state.moves.append((x, source, target))
                    moved = True
                    break
            if moved:
                break
        if not moved:
            raise PipelineFailure("L0", f"cluster {target} can not be filled",
                                  target)
    for i in range(state.ell):
        surplus = len(parts[i]) - world.m
        pool = sorted(parts[i] & ihat1)
        if surplus > len(pool):
            raise PipelineFailure("L0", f"cluster {i} needs {surplus} Ihat1 "
                                  f"vertices, has {len(pool)}", i)
        chosen = [pool[k] for k in rng.permutation(len(pool))[:surplus]]
        state.removed[i] = frozenset(chosen)
        for x in chosen:
            state.h[x] = EXCEPTIONAL
    state.psi0 = {x: k for k, x in enumerate(sorted(state.L0()))}
    return state


def _c7_good(state, world, x, v):
    floor = world.c * world.m
    for y in state.guest.neighbors(x):
        j = state.h[y]
        if j >= 0 and world.v0_degrees[v, j] < floor:
            return False
    return True


def switching_c7(state, world, psi0=None, seed=0):
    """
    Every x in L0 whose image psi0(x) has fewer than c m neighbors in a
    cluster holding a neighbor of x trades places with an Ihat1 vertex x'
    of a cluster i adjacent to all neighbor indices of x, chosen so that
    psi0(x) suits x'.

    :return: The state; state.swaps is the ledger
    :raises PipelineFailure: When no candidate exists for some x
    """
    rng = np.random.default_rng(seed)
    if psi0 is not None:
        state.psi0 = dict(psi0)
    ihat1 = state.dec.Ihat_parts[0]
    for x in sorted(state.psi0):
        v = state.psi0[x]
        if _c7_good(state, world, x, v):
            continue
        options = _homomorphic_targets(state, world.reduced, x)
        options = [options[k] for k in rng.permutation(len(options))]
        done = False
        for i in options:
            pool = [y for y in sorted(ihat1) if state.h.get(y) == i and
                    _c7_good(state, world, y, v)]
            if pool:
                other = pool[rng.integers(len(pool))]
                state.h[x] = i
                state.h[other] = EXCEPTIONAL
                del state.psi0[x]
                state.psi0[other] = v
                state.swaps.append((x, other, v, i))
                done = True
                break
        if not done:
            raise PipelineFailure("switching", f"no switching partner for {x}",
                                  x)
    return state


def select_buffers(state, world, seed=0):
    """
    Pick delta m buffer vertices per cluster from Ihat2 by a max flow: each
    class S_{i,j} contributes 2 delta m / (ell - 1) vertices when ell is
    odd and that count is integral, any number otherwise.

    :raises PipelineFailure: On a non-integral delta m or too few Ihat2
        vertices
    """
    quota = world.delta_buf * world.m
    if abs(quota - round(quota)) > 1e-9:
        raise PipelineFailure("buffers", f"delta m = {quota} is not integral",
                              quota)
    quota = int(round(quota))
    state.buffers = {i: frozenset() for i in range(state.ell)}
    if quota == 0:
        return state
    per_pair = 2 * quota / (state.ell - 1) if state.ell > 1 else 0
    exact = state.ell % 2 == 1 and abs(per_pair - round(per_pair)) < 1e-9
    groups = {}
    for x in sorted(state.dec.Ihat_parts[1]):
        pair = state.pair_of(x)
        cluster = state.h.get(x)
        if pair is None or cluster is None or cluster < 0:
            continue
        groups.setdefault((pair, cluster), []).append(x)
    network = nx.DiGraph()
    totals = {}
    for (pair, _), members in groups.items():
        totals[pair] = totals.get(pair, 0) + len(members)
    for pair, total in totals.items():
        cap = int(round(per_pair)) if exact else total
        network.add_edge("s", ("pair", pair), capacity=cap)
    for (pair, cluster), members in groups.items():
        network.add_edge(("pair", pair), ("group", pair, cluster),
                         capacity=len(members))
        network.add_edge(("group", pair, cluster), ("cluster", cluster),
                         capacity=len(members))
    for i in range(state.ell):
        network.add_edge(("cluster", i), "t", capacity=quota)
    value, flow = nx.maximum_flow(network, "s", "t")
    if value < quota * state.ell:
        raise PipelineFailure("buffers", f"only {value} of "
                              f"{quota * state.ell} buffer vertices found",
                              value)
    rng = np.random.default_rng(seed)
    chosen = {i: set() for i in range(state.ell)}
    for (pair, cluster), members in sorted(groups.items()):
        amount = flow[("group", pair, cluster)][("cluster", cluster)]
        picks = rng.permutation(len(members))[:amount]
        chosen[cluster].update(members[k] for k in picks)
    state.buffers = {i: frozenset(v) for i, v in chosen.items()}
    return state


def _goodness_matching(state, world, i, e_rows, candidates):
    floor = (world.d - world.eps) * world.m
    table = world.cluster_degrees[i]
    edges = []
    for row in e_rows:
        for x in candidates:
            if all(table[row, state.h[y]] >= floor
                   for y in state.guest.neighbors(x) if state.h[y] >= 0):
                edges.append((row, x))
    matching = max_matching(BipartiteGraph(e_rows, candidates, edges))
    return matching


def check_conditions(state, world, e_sets=None, k3=100, eps_prime=None,
                     k1=K1, k2=K2):
    """
    Evaluate C1-C9 on a finished assignment. C8 and C9 need ``e_sets``
    (cluster -> local indices of leftover host vertices) and are reported
    as unchecked otherwise.

    :param k1: C1 bound, |L0| <= k1 d n
    :param k2: C4 bound on the L0-neighbors inside one cluster, k2 d m
    :param k3: C9 bound, at most k3 eps_prime m neighbors of the chosen
        vertices inside one cluster
    :param eps_prime: eps of the C9 bound, the world eps by default

    :rtype: ConditionReport
    """
    guest = state.guest
    reduced = world.reduced
    report = ConditionReport()
    parts = state.clusters()
    low = state.L0()
    ihat = state.dec.Ihat
    report.record("C1", len(low) == world.v0_size and
                  len(low) <= k1 * world.d * world.n,
                  {"L0": len(low), "V0": world.v0_size})
    report.record("C2", low <= ihat, low - ihat)
    clash = [(x, y) for x, y in guest.edges
             if state.h.get(x, EXCEPTIONAL) >= 0 and
             state.h.get(x) == state.h.get(y)]
    report.record("C3", not clash, clash[:1])
    near = set()
    for x in low:
        near.update(guest.neighbor_set(x))
    loads = [len(near & p) for p in parts]
    worst = max(range(state.ell), key=lambda i: loads[i])
    report.record("C4", loads[worst] <= k2 * world.d * world.m,
                  {"cluster": worst, "load": loads[worst]})
    quota = int(round(world.delta_buf * world.m))
    if state.buffers:
        buffer_all = set().union(*state.buffers.values())
        sizes_ok = all(len(state.buffers[i]) == quota and
                       state.buffers[i] <= (parts[i] & ihat)
                       for i in range(state.ell))
        reach = set()
        for x in buffer_all:
            reach.update(state.neighbors_plus(x))
        counts = [sum(1 for y in reach if state.h.get(y) == i)
                  for i in range(state.ell)]
        spread = max(counts) - min(counts)
        report.record("C5", sizes_ok and spread <= world.eps * world.m,
                      {"sizes": [len(state.buffers[i])
                                 for i in range(state.ell)],
                       "neighbors": counts})
    else:
        report.record("C5", None)
    broken = [(x, y) for x, y in guest.edges
              if state.h.get(x, EXCEPTIONAL) >= 0 and
              state.h.get(y, EXCEPTIONAL) >= 0 and
              not reduced.has_edge(state.h[x], state.h[y])]
    report.record("C6", not broken, broken[:1])
    if world.v0_degrees is not None and state.psi0:
        bad = [x for x, v in sorted(state.psi0.items())
               if not _c7_good(state, world, x, v)]
        report.record("C7", not bad, bad[:1])
    else:
        report.record("C7", None if low else True)
    if e_sets is None or world.cluster_degrees is None:
        report.record("C8", None)
        report.record("C9", None)
        return report
    eps_prime = world.eps if eps_prime is None else eps_prime
    buffer_all = set().union(*state.buffers.values()) if state.buffers \
        else set()
    chosen, missing = {}, None
    for i, rows in sorted(e_sets.items()):
        rows = sorted(rows)
        candidates = sorted((parts[i] & ihat) - buffer_all)
        matching = _goodness_matching(state, world, i, rows, candidates)
        if len(matching) < len(rows):
            missing = i
            break
        chosen[i] = set(matching.values())
    report.record("C8", missing is None, missing if missing is not None
                  else chosen)
    f_all = set().union(*chosen.values()) if chosen else set()
    reach = set()
    for x in f_all:
        reach.update(guest.neighbor_set(x))
    f_loads = [len(reach & p) for p in parts]
    report.record("C9", missing is None and
                  max(f_loads) <= k3 * eps_prime * world.m,
                  {"loads": f_loads})
    return report


def bad_vertex_removal(world, per_cluster_degrees, m1, seed=0):
    """
    Remove exactly ceil(4 eps m) vertices from every cluster so that no
    6 eps-bad vertex remains. A vertex of V_i is bad when it has fewer than
    (d - 6 eps) m neighbors in some cluster of at least |S_i|/2 of the
    pairs S_i matched to V_i.

    :param per_cluster_degrees: List of (m, ell) degree arrays
    :param m1: Matching of Lambda1
    :rtype: RemovalReport
    :raises PipelineFailure: When a cluster has too many bad vertices
    """
    rng = np.random.default_rng(seed)
    count = math.ceil(4 * world.eps * world.m)
    floor = (world.d - 6 * world.eps) * world.m
    removals, bad_counts = {}, {}
    for i in range(world.ell):
        pairs = m1.preimages(i)
        table = np.asarray(per_cluster_degrees[i])
        small = np.zeros(table.shape[0], dtype=int)
        for a, b in pairs:
            small += ((table[:, a] < floor) | (table[:, b] < floor))
        bad = [int(v) for v in np.flatnonzero(2 * small >= len(pairs))] \
            if pairs else []
        bad_counts[i] = len(bad)
        if len(bad) > count:
            raise PipelineFailure("bad-vertices", f"{len(bad)} bad vertices "
                                  f"in cluster {i}, at most {count} allowed",
                                  i)
        bad.sort(key=lambda v: (-small[v], v))
        rest = [int(v) for v in rng.permutation(table.shape[0])
                if int(v) not in bad]
        removals[i] = sorted(bad + rest[:count - len(bad)])
    v0_bound = 3 * world.eps * world.n < world.v0_size < 15 * world.d * \
        world.n
    return RemovalReport(removals, bad_counts, v0_bound)


def balance_deviation(state, n=None, ell=None):
    """
    max_k | |L_k| - n/ell | over real guest vertices
    """
    n = state.guest.n if n is None else n
    ell = state.ell if ell is None else ell
    return max(abs(size - n / ell) for size in state.sizes())


def _distribute(guest, dec, world, m1, m2, seed):
    state = assign_components(guest, dec, world, seed)
    add_fictive(guest, dec, state, seed + 1)
    distribute_i2(state, m1)
    distribute_ihat1(state, m2, seed + 2)
    return state


def run_pipeline(guest, world, config=None, seed=0, psi0=None, e_sets=None):
    """
    Every stage end to end: decomposition, M1 and M2, random assignment,
    fictive neighbors, both distributions, L0, switching, buffers and the
    condition report.

    :rtype: PipelineRun
    """
    config = config if config is not None else EngineConfig()
    timings = {}
    clock = time.perf_counter()
    dec = decompose(guest, config.nu, seed)
    m1 = _m1(world)
    m2 = _m2(world, config.mu, seed)
    timings["matchings"] = time.perf_counter() - clock
    clock = time.perf_counter()
    state = _distribute(guest, dec, world, m1, m2, seed)
    timings["distribution"] = time.perf_counter() - clock
    deviation = balance_deviation(state)
    before = state.sizes()
    clock = time.perf_counter()
    form_L0(state, world, seed + 3)
    switching_c7(state, world, psi0, seed + 4)
    select_buffers(state, world, seed + 5)
    timings["L0+buffers"] = time.perf_counter() - clock
    report = check_conditions(state, world, e_sets)
    if config.verbose > 0:
        print(f"Pipeline on ell={world.ell}, m={world.m}: deviation "
              f"{deviation:.1f}, {len(state.swaps)} switches, failing "
              f"{report.failing() or 'none'}")
    summary = {"deviation": deviation, "bound": 4 * guest.n ** 0.75,
               "sizes_before_L0": before, "swaps": len(state.swaps),
               "moves": len(state.moves), "fictive": len(state.g),
               "timings": timings}
    summary["sizes_after_L0"] = state.sizes()
    return PipelineRun(state, report, summary)


def _representatives(guest, dec):
    reps = {}
    if dec.components_minus_I:
        reps["component"] = dec.components_minus_I[0][0]
    if dec.I1:
        reps["I1"] = min(dec.I1)
    leaves = sorted(x for x in dec.I - dec.Ihat if guest.degree(x) == 1)
    if leaves:
        reps["leaf"] = leaves[0]
    i2 = sorted(dec.I2 - dec.Ihat)
    if i2:
        reps["I2"] = i2[0]
    if dec.Ihat_parts[0]:
        reps["Ihat1"] = min(dec.Ihat_parts[0])
    return reps


def marginal_uniformity(guest, world, trials=1000, seed=0, config=None):
    """
    Empirical distribution of h(x) over ``trials`` seeds for one
    representative of every vertex class, with a chi-square p-value
    against the uniform distribution.

    :return: dict class -> {"vertex", "counts", "pvalue"}
    """
    config = config if config is not None else EngineConfig()
    dec = decompose(guest, config.nu, seed)
    m1 = _m1(world)
    m2 = _m2(world, config.mu, seed)
    reps = _representatives(guest, dec)
    counts = {name: np.zeros(world.ell, dtype=int) for name in reps}
    for trial in range(trials):
        state = _distribute(guest, dec, world, m1, m2, seed + 3 * trial)
        for name, x in reps.items():
            counts[name][state.h[x]] += 1
    return {name: {"vertex": reps[name], "counts": counts[name].tolist(),
                   "pvalue": float(stats.chisquare(counts[name]).pvalue)}
            for name in reps}


def pair_independence(guest, world, pairs=None, trials=1000, seed=0,
                      config=None):
    """
    Joint frequency of h(y) = h(y') = i for guest vertex pairs far apart,
    against 1/ell^2 with a 5 sigma tolerance.

    :param pairs: (y, y') pairs; the first vertices of the first two
        components of H - I when omitted
    :return: list of dicts with the pair, per-cluster frequencies and the
        verdict
    """
    config = config if config is not None else EngineConfig()
    dec = decompose(guest, config.nu, seed)
    m1 = _m1(world)
    m2 = _m2(world, config.mu, seed)
    if pairs is None:
        parts = dec.components_minus_I
        pairs = [(parts[0][0], parts[1][0])] if len(parts) > 1 else []
    hits = {pair: np.zeros(world.ell, dtype=int) for pair in pairs}
    for trial in range(trials):
        state = _distribute(guest, dec, world, m1, m2, seed + 3 * trial)
        for y, z in pairs:
            if state.h[y] == state.h[z]:
                hits[(y, z)][state.h[y]] += 1
    expected = 1 / world.ell ** 2
    sigma = math.sqrt(expected * (1 - expected) / max(trials, 1))
    result = []
    for pair in pairs:
        freq = hits[pair] / max(trials, 1)
        result.append({"pair": pair, "frequencies": freq.tolist(),
                       "expected": expected, "sigma": sigma,
                       "within": bool(np.all(np.abs(freq - expected)
                                             <= 5 * sigma))})
    return result


def synthesize_host(world, seed=0, density=None):
    """
    Concrete host of a world: cluster i is ids i*m .. (i+1)*m - 1, V0 is
    the last v0_size ids; each reduced edge becomes a random bipartite
    graph of the given density, and V0 vertex k gets v0_degrees[k, j]
    random neighbors in cluster j.

    :rtype: Graph
    """
    rng = np.random.default_rng(seed)
    density = world.d if density is None else density
    m, ell = world.m, world.ell
    edges = []
    for i, j in world.reduced.edges:
        mask = rng.random((m, m)) < density
        for a, b in zip(*np.nonzero(mask)):
            edges.append((i * m + int(a), j * m + int(b)))
    for k in range(world.v0_size):
        v = ell * m + k
        for j in range(ell):
            deg = min(int(world.v0_degrees[k, j]), m) \
                if world.v0_degrees is not None else 0
            for b in rng.permutation(m)[:deg]:
                edges.append((v, j * m + int(b)))
    return Graph(world.n, edges)


def complete_from_world(guest, state, host, world, budget=None):
    """
    Finish the embedding by guided search with every guest vertex confined
    to its assigned cluster (L0 vertices to their psi0 image).

    :return: dict guest vertex -> host vertex, or None
    """
    m, ell = world.m, world.ell
    domains = {}
    for x in guest.vertices():
        index = state.h[x]
        if index == EXCEPTIONAL:
            domains[x] = [ell * m + state.psi0[x]] if x in state.psi0 else \
                list(range(ell * m, world.n))
        else:
            domains[x] = list(range(index * m, (index + 1) * m))
    return guided_embed(guest, host, domains, budget=budget)
