#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
SPDX-FileCopyrightText: Siemens AG, 2020 Gaurav Mishra <mishra.gaurav@siemens.com>

SPDX-License-Identifier: MIT
"""
__author__ = "Siemens AG"

import pytest

from guest_to_host.exceptions import HypothesisViolation
from guest_to_host.graph import Graph
from guest_to_host.graph import complete_graph
from guest_to_host.graph import complete_multipartite
from guest_to_host.graph import path_graph
from guest_to_host.handlers import b_prime_cover_matching
from guest_to_host.handlers import classify_matching
from guest_to_host.handlers import exceptional_sets
from guest_to_host.handlers import extremality_certificate
from guest_to_host.handlers import improving_switch
from guest_to_host.handlers import matching_or_split
from guest_to_host.handlers import preprocess1
from guest_to_host.handlers import preprocess2
from guest_to_host.handlers import preprocess3
from guest_to_host.handlers import sparsest_subset

from conftest import matching
from conftest import triangles


def test_sparsest_subset_exact(k333):
    subset, internal, exact = sparsest_subset(k333, 3)
    assert subset == {0, 1, 2}
    assert internal == 0
    assert exact


def test_sparsest_subset_heuristic():
    host = complete_multipartite(8, 8, 8)
    subset, internal, exact = sparsest_subset(host, 8)
    assert subset == set(range(8))
    assert internal == 0
    assert not exact


def test_extremality_certificate(k333):
    certificate = extremality_certificate(k333, 3, 0.15)
    assert certificate.valid
    assert certificate.to_dict()["A"] == [0, 1, 2]
    assert extremality_certificate(complete_graph(9), 3, 0.15) is None
    assert extremality_certificate(k333, 1, 0.15) is None


def test_classify_matching():
    graph = Graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (4, 5)])
    found = classify_matching(graph, [(1, 2), (3, 4)], 0, 5)
    assert found.to_dict()["counts"] == {1: 1, 2: 0, 3: 0, 4: 1, 5: 0, 6: 0}
    assert found.vertices(1, 4) == {1, 2, 3, 4}


def test_matching_or_split_finds_perfect_matching(c6):
    found = matching_or_split(c6, 0.3, 0.03)
    assert found.is_perfect
    assert len(found.matching) == 3


def test_matching_or_split_partitions_two_triangles():
    found = matching_or_split(triangles(2), 0.3, 0.03)
    assert not found.is_perfect
    assert {found.V1, found.V2} == {frozenset({0, 1, 2}),
                                    frozenset({3, 4, 5})}
    assert found.crossing == 0


def test_matching_or_split_hypotheses():
    with pytest.raises(HypothesisViolation):
        matching_or_split(path_graph(5), 0.3, 0.03)
    with pytest.raises(HypothesisViolation) as info:
        matching_or_split(Graph(6), 0.3, 0.03)
    assert info.value.diagnostics["unmatched"] == list(range(6))


def test_improving_switch():
    found = improving_switch(matching(2), ({0, 1}, {2, 3}))
    assert found == ("ordinary", {0: 1, 2: 0}, 2)
    assert improving_switch(matching(2), ({0, 2}, {1, 3})) is None


def test_preprocessors_are_monotone():
    first = preprocess1(matching(2), {0, 1}, {2, 3})
    assert first.objective == [0, 2]
    assert len(first.switches) == 1
    second = preprocess2(matching(2), {0, 2}, {1, 3})
    assert second.objective[0] == 2
    assert second.objective[-1] == 0
    third = preprocess3(complete_multipartite(2, 2, 2), {0, 1}, {2, 3},
                        {4, 5})
    assert third.switches == []
    assert third.parts == (frozenset({0, 1}), frozenset({2, 3}),
                           frozenset({4, 5}))


def test_exceptional_sets_of_clean_partitions(k333):
    sets = exceptional_sets(k333, ({0, 1, 2}, {3, 4, 5}, {6, 7, 8}), 3)
    assert sets.all_empty()
    assert all(sets.claims.values())
    joined = Graph(9, [(a, b) for a in range(9) for b in range(max(a + 1, 3),
                                                                9)])
    sets = exceptional_sets(joined, ({0, 1, 2}, set(range(3, 9))), 1)
    assert sets.all_empty()
    assert sets.claims["A'B'"]
    assert sets["A'"] == frozenset()


def test_exceptional_sets_rejects_unknown_case(k333):
    with pytest.raises(ValueError):
        exceptional_sets(k333, ({0, 1, 2}, {3, 4, 5}), 4)


def test_b_prime_cover_matching():
    graph = Graph(4, [(0, 2), (1, 3)])
    assert b_prime_cover_matching(graph, {0, 1}, {2, 3}) == {2: 0, 3: 1}
    crowded = Graph(4, [(0, 2), (0, 3)])
    with pytest.raises(HypothesisViolation) as info:
        b_prime_cover_matching(crowded, {0, 1}, {2, 3})
    assert info.value.diagnostics["violator"] == [2, 3]
