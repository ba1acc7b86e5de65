#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
SPDX-FileCopyrightText: Siemens AG, 2020 Gaurav Mishra <mishra.gaurav@siemens.com>

SPDX-License-Identifier: MIT
"""
__author__ = "Siemens AG"

import math

from guest_to_host.graph import density


def pair_density(graph, a_set, b_set):
    """
    Density d(A, B) of a vertex pair as an exact fraction
    """
    return density(graph, a_set, b_set)


def low_degree_vertices(graph, a_set, b_set, d, eps):
    """
    Vertices x of A with deg(x, B) <= (d - eps)|B|

    :rtype: frozenset
    """
    b_set = frozenset(b_set)
    bound = (d - eps) * len(b_set)
    return frozenset(x for x in a_set if graph.degree_in(x, b_set) <= bound)


def regular_degree_check(graph, a_set, b_set, d, eps):
    """
    Degree form of regularity: at most eps|A| vertices of A have degree
    at most (d - eps)|B| into B, and symmetrically for B.
    """
    low_a = low_degree_vertices(graph, a_set, b_set, d, eps)
    low_b = low_degree_vertices(graph, b_set, a_set, d, eps)
    return len(low_a) <= eps * len(a_set) and len(low_b) <= eps * len(b_set)


def is_super_regular(graph, a_set, b_set, eps, delta):
    """
    Degree and density form of (eps, delta)-super-regularity: every a in A
    has at least delta|B| neighbors in B, every b in B at least delta|A|
    in A, and d(A, B) >= delta. eps-regularity itself is not certified.

    :param graph: Host graph
    :param a_set: First side
    :param b_set: Second side, disjoint from the first
    :param eps: Regularity parameter, carried for the report only
    :param delta: Degree and density floor
    :rtype: bool
    """
    a_set, b_set = frozenset(a_set), frozenset(b_set)
    if not a_set or not b_set:
        return False
    if any(graph.degree_in(a, b_set) < delta * len(b_set) for a in a_set):
        return False
    if any(graph.degree_in(b, a_set) < delta * len(a_set) for b in b_set):
        return False
    return pair_density(graph, a_set, b_set) >= delta


def super_regular_core(graph, a_set, b_set, eps, delta):
    """
    Greedily delete the vertex of smallest relative degree until the pair
    is super-regular, removing at most eps of either side.

    :return: (A', B') or None when the deletion allowance runs out
    """
    a_core, b_core = set(a_set), set(b_set)
    allowance_a = math.floor(eps * len(a_core))
    allowance_b = math.floor(eps * len(b_core))
    while a_core and b_core:
        if is_super_regular(graph, a_core, b_core, eps, delta):
            return frozenset(a_core), frozenset(b_core)
        worst_a = min(a_core, key=lambda x: (graph.degree_in(x, b_core), x))
        worst_b = min(b_core, key=lambda x: (graph.degree_in(x, a_core), x))
        ratio_a = graph.degree_in(worst_a, b_core) / len(b_core)
        ratio_b = graph.degree_in(worst_b, a_core) / len(a_core)
        if ratio_a <= ratio_b and allowance_a > 0:
            a_core.discard(worst_a)
            allowance_a -= 1
        elif allowance_b > 0:
            b_core.discard(worst_b)
            allowance_b -= 1
        elif allowance_a > 0:
            a_core.discard(worst_a)
            allowance_a -= 1
        else:
            return None
    return None


def reduced_min_degree_ok(reduced, d):
    """
    delta(G_r) >= (2/3 - 14d) ell
    """
    return reduced.min_degree() >= (2 / 3 - 14 * d) * reduced.n
