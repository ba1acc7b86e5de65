#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
SPDX-FileCopyrightText: Siemens AG, 2020 Gaurav Mishra <mishra.gaurav@siemens.com>

SPDX-License-Identifier: MIT
"""
__author__ = "Siemens AG"

import math

import pytest

from guest_to_host.config import EngineConfig
from guest_to_host.exceptions import GraphError
from guest_to_host.exceptions import HypothesisViolation
from guest_to_host.exceptions import NoEmbeddingFound
from guest_to_host.exceptions import OreDegreeViolation
from guest_to_host.graph import Graph
from guest_to_host.graph import complete_graph
from guest_to_host.graph import complete_multipartite
from guest_to_host.graph import cycle_graph
from guest_to_host.graph import disjoint_union
from guest_to_host.graph import path_graph
from guest_to_host.runner import EmbedEngine
from guest_to_host.runner import GuestProfile
from guest_to_host.runner import embed
from guest_to_host.runner import gen_guest
from guest_to_host.runner import oracle_embed
from guest_to_host.runner import packing_bound_report
from guest_to_host.runner import verify

from conftest import brute_force_embeds
from conftest import matching
from conftest import random_dense_graph
from conftest import triangles


def pendant_triangle():
    """
    Triangle 0 1 2 with the extra edge 2-3: theta = 5
    """
    return Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


def forced(**kwargs):
    config = EngineConfig(**kwargs)
    config.enable_force()
    return config


def test_verify_names_the_violation(c6):
    path = path_graph(3)
    assert verify(path, c6, {0: 0, 1: 1, 2: 2}) == (True, None)
    assert verify(path, c6, {0: 0, 1: 1}) == (False, ("unmapped", 2))
    assert verify(path, c6, {0: 0, 1: 1, 2: 9}) == (False, ("range", 2))
    assert verify(path, c6, {0: 0, 1: 1, 2: 0}) == \
        (False, ("collision", (0, 2)))
    assert verify(path, c6, {0: 0, 1: 1, 2: 3}) == (False, ("edge", (1, 2)))


def test_low_theta_uses_hamilton_cycle(k333):
    guest = disjoint_union(matching(4), Graph(1))
    phi, report = embed(guest, k333)
    assert report.route == "<=3"
    assert report.verified
    assert verify(guest, k333, phi)[0]


def test_theta_four_uses_square_path(k333):
    phi, report = embed(cycle_graph(9), k333)
    assert report.route == "4"
    assert verify(cycle_graph(9), k333, phi)[0]


def test_non_extreme_guest_uses_decomposition(mixed_guest):
    host = complete_graph(18)
    phi, report = embed(mixed_guest, host)
    assert report.route == "5-nonextreme"
    assert verify(mixed_guest, host, phi)[0]


def test_extreme_guest_on_non_extremal_host():
    guest = disjoint_union(triangles(3), pendant_triangle())
    host = complete_graph(13)
    phi, report = embed(guest, host, EngineConfig(nu=0.3))
    assert report.route == "5-nonextremal-host"
    assert report.diagnostics["triangles"] == 4
    assert verify(guest, host, phi)[0]


def test_extreme_guest_on_extremal_host(k333):
    guest = disjoint_union(pendant_triangle(), complete_graph(3),
                           path_graph(2))
    phi, report = embed(guest, k333, EngineConfig(nu=0.4))
    assert report.route == "5-extreme-case3"
    assert verify(guest, k333, phi)[0]


def test_hypotheses_are_checked(c6):
    with pytest.raises(GraphError):
        embed(path_graph(2), c6)
    with pytest.raises(OreDegreeViolation):
        embed(complete_graph(4), complete_graph(4))
    with pytest.raises(HypothesisViolation):
        embed(matching(3), c6)


def test_forced_runs_fall_back():
    phi, report = embed(complete_graph(4), complete_graph(4), forced())
    assert report.route == "fallback"
    phi, report = embed(matching(2), path_graph(4), forced())
    assert report.route == "fallback"
    assert report.failures[0][0] == "<=3"
    assert verify(matching(2), path_graph(4), phi)[0]


def test_forced_run_without_embedding():
    with pytest.raises(NoEmbeddingFound):
        embed(matching(3), triangles(2), forced())
    config = forced()
    config.disable_fallback()
    with pytest.raises(NoEmbeddingFound):
        embed(matching(2), path_graph(4), config)


def test_trace_and_report(k333):
    config = EngineConfig()
    config.enable_trace()
    _, report = embed(cycle_graph(9), k333, config)
    assert len(report.trace) == 9
    document = report.to_dict()
    assert document["route"] == "4"
    assert document["verified"]
    assert [s["step"] for s in document["steps"]][0] == "hypotheses"


def test_update_case():
    engine = EmbedEngine()
    engine.update_case(2)
    engine.update_case(None)
    with pytest.raises(ValueError):
        engine.update_case(4)


@pytest.mark.parametrize("guest, host, found", [
    (triangles(2), complete_multipartite(4, 2), False),
    (cycle_graph(6), complete_graph(6), True),
    (triangles(2), complete_multipartite(2, 2, 2), True),
    (triangles(3), complete_multipartite(3, 4, 2), False),
    (path_graph(4), cycle_graph(5), True),
])
def test_oracle(guest, host, found):
    phi = oracle_embed(guest, host)
    assert (phi is not None) == found
    if found:
        assert verify(guest, host, phi)[0]


def test_oracle_agrees_with_brute_force(c6):
    for guest in (matching(3), path_graph(6), triangles(2)):
        assert (oracle_embed(guest, c6) is not None) == \
            brute_force_embeds(guest, c6)


def test_packing_bound_report():
    bound = packing_bound_report(triangles(2), complete_graph(6))
    assert bound["theta"] == 4
    assert bound["bound"] == 3
    assert bound["bound_holds"]
    assert bound["embedded"]


GUEST_MIXES = ({"edge": 1, "p2": 1, "path": 1, "cycle": 1},
               {"triangle": 2, "claw": 1, "edge": 1},
               {"star4": 1, "triangle": 1, "p2": 1},
               {"claw": 1, "cycle": 1, "star4": 1, "edge": 1})


def check_against_oracle(config, n, seed):
    guest = gen_guest(GuestProfile(n, GUEST_MIXES[seed % 4]), seed)
    host = random_dense_graph(n, math.ceil(2 * n / 3), seed)
    expected = oracle_embed(guest, host)
    engine = EmbedEngine(config)
    if expected is None:
        with pytest.raises(NoEmbeddingFound):
            engine.embed(guest, host)
    else:
        phi, _ = engine.embed(guest, host)
        assert verify(guest, host, phi)[0]


@pytest.mark.parametrize("seed", range(16))
def test_embed_agrees_with_oracle(config, seed):
    check_against_oracle(config, (6, 9)[seed % 2], seed)


@pytest.mark.slow
def test_embed_agrees_with_oracle_sweep(config):
    for seed in range(200):
        check_against_oracle(config, (6, 9)[seed % 2], seed)
