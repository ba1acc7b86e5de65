#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
SPDX-FileCopyrightText: Siemens AG, 2020 Gaurav Mishra <mishra.gaurav@siemens.com>

SPDX-License-Identifier: MIT
"""
__author__ = "Siemens AG"

import pytest

from guest_to_host.exceptions import HypothesisViolation
from guest_to_host.exceptions import InternalCheckFailure
from guest_to_host.exceptions import StepFailure
from guest_to_host.graph import Graph
from guest_to_host.graph import complete_graph
from guest_to_host.handlers import CaseState
from guest_to_host.handlers import ExceptionalSets
from guest_to_host.handlers import bisect
from guest_to_host.handlers import case_embed
from guest_to_host.handlers import classify_case
from guest_to_host.handlers import cross_parity_fix
from guest_to_host.runner import verify

from conftest import triangles


@pytest.fixture
def joined_host():
    """
    Independent {0, 1, 2} joined to a K6 on 3..8
    """
    return Graph(9, [(a, b) for a in range(9)
                     for b in range(max(a + 1, 3), 9)])


@pytest.fixture
def split_host():
    """
    Independent {0..3} joined to two K4 on 4..7 and 8..11, which are
    linked by a perfect matching
    """
    edges = [(a, b) for a in range(4) for b in range(4, 12)]
    for block in (range(4, 8), range(8, 12)):
        edges += [(a, b) for a in block for b in block if a < b]
    edges += [(v, v + 4) for v in range(4, 8)]
    return Graph(12, edges)


def test_classify_case3(k333, config):
    assert classify_case(k333, config) == \
        (3, (frozenset({0, 1, 2}), frozenset({3, 4, 5}),
             frozenset({6, 7, 8})))


def test_classify_case1(joined_host, config):
    case_id, blocks = classify_case(joined_host, config)
    assert case_id == 1
    assert blocks == (frozenset({0, 1, 2}), frozenset(range(3, 9)))


def test_classify_case2(split_host, config):
    case_id, blocks = classify_case(split_host, config)
    assert case_id == 2
    assert blocks[0] == frozenset(range(4))
    assert {blocks[1], blocks[2]} == {frozenset(range(4, 8)),
                                      frozenset(range(8, 12))}


def test_non_extremal_host_is_unclassified(config):
    assert classify_case(complete_graph(9), config) is None


def test_bisect_separates_components():
    halves = bisect(triangles(2), set(range(6)))
    assert set(halves) == {frozenset({0, 1, 2}), frozenset({3, 4, 5})}


@pytest.mark.parametrize("host_name, guest", [
    ("k333", triangles(3)),
    ("joined_host", triangles(3)),
    ("split_host", triangles(4)),
])
def test_case_embed(host_name, guest, config, request):
    host = request.getfixturevalue(host_name)
    state = case_embed(guest, host, config)
    assert verify(guest, host, state.phi) == (True, None)
    assert state.snapshots[0][0] == "start"


def test_case_embed_needs_extremal_host(config):
    with pytest.raises(HypothesisViolation):
        case_embed(triangles(3), complete_graph(9), config)


def test_case_state_take(k333):
    state = CaseState(1, k333, {"A": {0, 1, 2}, "B": set(range(3, 9))},
                      [(0, 1, 2)])
    state.take((6, 0, 3), "start", "balanced")
    assert state.phi == {0: 0, 1: 3, 2: 6}
    assert state.sizes() == {"A": 2, "B": 4}
    with pytest.raises(InternalCheckFailure):
        state.take((0, 4, 7), "next", "balanced")
    with pytest.raises(InternalCheckFailure):
        state.take((1, 2, 4), "next", "balanced")
    with pytest.raises(StepFailure):
        state.take((1, 4, 7), "next", "balanced")
    with pytest.raises(InternalCheckFailure):
        state.place(5, 3, "next")


def parity_state(edges):
    """
    Case 2 state on A = {0}, B1 = {1, 2}, B2 = {3, 4, 5}, no exceptional
    vertices, so one crossing triangle is needed to make B2 even
    """
    host = Graph(6, edges)
    state = CaseState(2, host, {"A": {0}, "B1": {1, 2}, "B2": {3, 4, 5}},
                      [(0, 1, 2)])
    state.exceptional = ExceptionalSets(2, {})
    return state


def test_parity_fix_moves_past_stuck_candidate():
    state = parity_state([(1, 3), (0, 2), (2, 4), (0, 4)])
    cross_parity_fix(state)
    assert list(state.placed) == [(0, 2, 4)]
    assert state.vacant["B2"] == {3, 5}
    assert state.branch == "odd - (iii)"


def test_parity_fix_fails_after_every_candidate():
    state = parity_state([(1, 3), (0, 2), (2, 4)])
    with pytest.raises(StepFailure) as failure:
        cross_parity_fix(state)
    assert failure.value.vertex == [1, 2]
    assert len(state.placed) == 0
