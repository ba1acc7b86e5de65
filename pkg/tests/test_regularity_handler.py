#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
SPDX-FileCopyrightText: Siemens AG, 2020 Gaurav Mishra <mishra.gaurav@siemens.com>

SPDX-License-Identifier: MIT
"""
__author__ = "Siemens AG"

from fractions import Fraction

from guest_to_host.graph import Graph
from guest_to_host.graph import complete_graph
from guest_to_host.graph import complete_multipartite
from guest_to_host.graph import path_graph
from guest_to_host.handlers import is_super_regular
from guest_to_host.handlers import pair_density
from guest_to_host.handlers import reduced_min_degree_ok
from guest_to_host.handlers import regular_degree_check
from guest_to_host.handlers import super_regular_core
from guest_to_host.handlers.regularity_handler import low_degree_vertices


def test_complete_pair_is_super_regular():
    pair = complete_multipartite(3, 3)
    assert pair_density(pair, {0, 1, 2}, {3, 4, 5}) == 1
    assert is_super_regular(pair, {0, 1, 2}, {3, 4, 5}, 0.1, 0.9)
    assert not is_super_regular(pair, set(), {3, 4, 5}, 0.1, 0.9)


def test_low_degree_vertices():
    path = path_graph(4)
    assert pair_density(path, {0, 2}, {1, 3}) == Fraction(3, 4)
    assert low_degree_vertices(path, {0, 2}, {1, 3}, 0.6, 0.05) == {0}
    assert not regular_degree_check(path, {0, 2}, {1, 3}, 0.6, 0.05)
    assert regular_degree_check(path, {0, 2}, {1, 3}, 0.3, 0.1)


def test_super_regular_core_drops_the_weak_vertex():
    edges = [(a, b) for a in range(1, 4) for b in range(4, 8)] + [(0, 4)]
    graph = Graph(8, edges)
    assert not is_super_regular(graph, range(4), range(4, 8), 0.25, 0.5)
    core = super_regular_core(graph, range(4), range(4, 8), 0.25, 0.5)
    assert core == (frozenset({1, 2, 3}), frozenset(range(4, 8)))
    assert super_regular_core(Graph(8), range(4), range(4, 8),
                              0.25, 0.5) is None


def test_reduced_min_degree():
    assert reduced_min_degree_ok(complete_graph(6), 0.01)
    assert not reduced_min_degree_ok(Graph(6), 0.01)
