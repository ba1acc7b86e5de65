#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
SPDX-FileCopyrightText: Siemens AG, 2020 Gaurav Mishra <mishra.gaurav@siemens.com>

SPDX-License-Identifier: MIT
"""
__author__ = "Siemens AG"

import numpy as np

from guest_to_host.exceptions import SearchBudgetExhausted
from guest_to_host.handlers.matching_handler import BipartiteGraph
from guest_to_host.handlers.matching_handler import max_matching


def guided_embed(guest, host, domains=None, fixed=None, budget=None,
                 seed=None):
    """
    Backtracking search for an injective edge-preserving map of the guest
    into the host.

    The unassigned guest vertex with the fewest candidates goes next; its
    candidates are the unused host vertices of its domain adjacent to the
    images of all its assigned neighbors. Every assignment is followed by
    a forward check on the neighbors of the assigned vertex.

    :param guest: Guest graph
    :param host: Host graph
    :param domains: Optional dict guest vertex -> allowed host vertices
    :param fixed: Optional dict guest vertex -> host vertex kept as given
    :param budget: Node budget, None for unbounded
    :param seed: When given, candidates are tried in a seeded random order
    :return: dict guest vertex -> host vertex, or None when none exists
    :raises SearchBudgetExhausted: When the budget runs out
    """
    fixed = dict(fixed or {})
    rng = np.random.default_rng(seed) if seed is not None else None
    everything = frozenset(host.vertices())
    candidates = {}
    for x in guest.vertices():
        if x in fixed:
            continue
        pool = everything if domains is None or x not in domains \
            else frozenset(domains[x])
        need = guest.degree(x)
        candidates[x] = {v for v in pool if host.degree(v) >= need}
    phi = dict(fixed)
    used = set(phi.values())
    nodes = [0]

    def options(x):
        pool = candidates[x] - used
        for y in guest.neighbors(x):
            if y in phi:
                pool &= host.neighbor_set(phi[y])
                if not pool:
                    break
        return pool

    def forward_ok(x):
        for y in guest.neighbors(x):
            if y not in phi and not options(y):
                return False
        return True

    def search():
        nodes[0] += 1
        if budget is not None and nodes[0] > budget:
            raise SearchBudgetExhausted("guided-search", nodes[0])
        free = [x for x in candidates if x not in phi]
        if not free:
            return True
        best, best_pool = None, None
        for x in free:
            pool = options(x)
            if best is None or len(pool) < len(best_pool) or (
                    len(pool) == len(best_pool) and
                    guest.degree(x) > guest.degree(best)):
                best, best_pool = x, pool
                if not pool:
                    return False
        order = sorted(best_pool)
        if rng is not None:
            order = [order[i] for i in rng.permutation(len(order))]
        for v in order:
            phi[best] = v
            used.add(v)
            if forward_ok(best) and search():
                return True
            del phi[best]
            used.discard(v)
        return False

    for x, v in fixed.items():
        for y in guest.neighbors(x):
            if y in fixed and not host.has_edge(v, fixed[y]):
                return None
    return dict(phi) if search() else None


def match_remaining(guest, host, phi, vertices, domains=None):
    """
    Place pairwise non-adjacent guest vertices by one bipartite matching:
    x may go to any unused host vertex of its domain adjacent to the
    images of all its neighbors.

    :param phi: Partial embedding covering every neighbor of ``vertices``
    :param vertices: Independent guest vertices to place
    :param domains: Optional dict guest vertex -> allowed host vertices
    :return: Extended copy of phi, or None when no saturating matching exists
    """
    used = set(phi.values())
    free_host = [v for v in host.vertices() if v not in used]
    left = sorted(vertices)
    edges = []
    for x in left:
        pool = set(free_host)
        if domains is not None and x in domains:
            pool &= set(domains[x])
        for y in guest.neighbors(x):
            pool &= host.neighbor_set(phi[y])
        edges.extend((x, v) for v in sorted(pool))
    bipartite = BipartiteGraph(left, free_host, edges)
    matching = max_matching(bipartite)
    if len(matching) < len(left):
        return None
    extended = dict(phi)
    extended.update(matching)
    return extended
