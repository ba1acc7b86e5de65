#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
SPDX-FileCopyrightText: Siemens AG, 2020 Gaurav Mishra <mishra.gaurav@siemens.com>

SPDX-License-Identifier: MIT
"""
__author__ = "Siemens AG"

import itertools

import pytest

from guest_to_host.exceptions import InternalCheckFailure
from guest_to_host.exceptions import MatchingError
from guest_to_host.graph import Graph
from guest_to_host.graph import complete_graph
from guest_to_host.graph import cycle_graph
from guest_to_host.handlers import BipartiteGraph
from guest_to_host.handlers import HallViolator
from guest_to_host.handlers import ProportionalMatching
from guest_to_host.handlers import bipart_hall_regimes
from guest_to_host.handlers import build_lambda1
from guest_to_host.handlers import build_lambda2
from guest_to_host.handlers import copy_count
from guest_to_host.handlers import general_max_matching
from guest_to_host.handlers import hall_violator
from guest_to_host.handlers import lambda1_matching
from guest_to_host.handlers import max_matching
from guest_to_host.handlers import near_proportional_matching
from guest_to_host.handlers import proportional_matching
from guest_to_host.handlers import strong_proportional_matching
from guest_to_host.handlers import verify_proportional


def complete_bipartite(left, right):
    return BipartiteGraph(left, right, itertools.product(left, right))


def test_edges_must_join_the_sides():
    with pytest.raises(MatchingError):
        BipartiteGraph(["a"], [1], [("a", 2)])


def test_max_matching_is_maximum():
    bipartite = BipartiteGraph("abc", [1, 2, 3],
                               [("a", 1), ("b", 1), ("b", 2), ("c", 2)])
    found = max_matching(bipartite)
    assert len(found) == 2
    assert len(set(found.values())) == 2
    assert all(bipartite.has_edge(r, s) for r, s in found.items())


def test_proportional_matching_loads():
    bipartite = complete_bipartite(["a", "b"], [1, 2, 3, 4])
    found = proportional_matching(bipartite, 2)
    assert isinstance(found, ProportionalMatching)
    assert found.loads() == {"a": 2, "b": 2}
    assert verify_proportional(bipartite, found)


def test_proportional_matching_reports_violator():
    edges = [(0, s) for s in range(4)] + [(1, 0)]
    bipartite = BipartiteGraph([0, 1], range(4), edges)
    found = proportional_matching(bipartite, 2)
    assert isinstance(found, HallViolator)
    assert 1 in found.vertices
    assert found.neighborhood_size < 2 * len(found.vertices)
    assert hall_violator(complete_bipartite([0, 1], range(4)), 2) is None


def test_proportional_matching_needs_exact_sizes():
    with pytest.raises(MatchingError):
        proportional_matching(complete_bipartite([0, 1], range(5)), 2)
    with pytest.raises(MatchingError):
        hall_violator(complete_bipartite([0], [0]), 0)


def test_verify_catches_tampering():
    bipartite = BipartiteGraph([0, 1], [0, 1], [(0, 0), (1, 1)])
    with pytest.raises(InternalCheckFailure):
        verify_proportional(bipartite, ProportionalMatching({0: 1, 1: 0}, 1))
    with pytest.raises(InternalCheckFailure):
        verify_proportional(bipartite, ProportionalMatching({0: 0}, 1))


def test_near_proportional_matching():
    found = near_proportional_matching(complete_bipartite([0, 1, 2],
                                                          range(7)))
    assert len(found) == 7
    assert sorted(found.loads().values()) == [2, 2, 3]
    with pytest.raises(MatchingError):
        near_proportional_matching(BipartiteGraph([], [1]))


def test_lambda1_of_complete_graph():
    lambda1 = build_lambda1(complete_graph(5))
    assert len(lambda1.pairs) == 10
    assert all(lambda1.pair_degree(p) == 3 for p in lambda1.pairs)
    found = lambda1_matching(complete_graph(5), 0.01)
    assert found.load == 2
    for pair, cluster in found.assignment.items():
        assert cluster not in pair


def test_lambda1_matching_needs_odd_ell():
    with pytest.raises(MatchingError):
        lambda1_matching(complete_graph(6), 0.01)


def test_lambda2_copies():
    assert copy_count(6, 0.25) == 24
    assert copy_count(6, 0.5) == 12
    lambda1 = build_lambda1(complete_graph(5))
    lambda2 = build_lambda2(lambda1, 0.5)
    assert lambda2.copies == 10
    assert len(lambda2.bipartite.right) == 100
    with pytest.raises(MatchingError):
        build_lambda2(lambda1, 0.5, copies=2)


def test_strong_proportional_matching():
    found = strong_proportional_matching(complete_graph(5), 0.5, seed=1)
    assert isinstance(found, ProportionalMatching)
    assert found.load == 20
    assert set(found.loads().values()) == {20}
    for (pair, _), cluster in found.assignment.items():
        assert cluster not in pair


def test_general_matching():
    assert len(general_max_matching(cycle_graph(5))) == 2
    assert general_max_matching(cycle_graph(6), [0, 1, 2]) in \
        ([(0, 1)], [(1, 2)])


def test_hall_regimes():
    regimes = bipart_hall_regimes(complete_graph(5), 0.0)
    assert all(holds for holds, _ in regimes.values())
    empty = bipart_hall_regimes(Graph(5), 0.0)
    assert empty["arbitrary"] == (False, [0])
    with pytest.raises(MatchingError):
        bipart_hall_regimes(complete_graph(13), 0.0)
