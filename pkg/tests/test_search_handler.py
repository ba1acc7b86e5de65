#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
SPDX-FileCopyrightText: Siemens AG, 2020 Gaurav Mishra <mishra.gaurav@siemens.com>

SPDX-License-Identifier: MIT
"""
__author__ = "Siemens AG"

import pytest

from guest_to_host.exceptions import SearchBudgetExhausted
from guest_to_host.graph import complete_multipartite
from guest_to_host.graph import path_graph
from guest_to_host.handlers import guided_embed
from guest_to_host.handlers import match_remaining

from conftest import triangles


def is_embedding(guest, host, phi):
    return sorted(phi) == list(guest.vertices()) and \
        len(set(phi.values())) == guest.n and \
        all(host.has_edge(phi[x], phi[y]) for x, y in guest.edges)


def test_guided_embed_finds_triangles(k333):
    guest = triangles(2)
    assert is_embedding(guest, k333, guided_embed(guest, k333))
    assert is_embedding(guest, k333, guided_embed(guest, k333, seed=7))


def test_guided_embed_reports_absence():
    assert guided_embed(triangles(2), complete_multipartite(4, 2)) is None


def test_guided_embed_budget(k333):
    with pytest.raises(SearchBudgetExhausted):
        guided_embed(triangles(2), k333, budget=1)


def test_guided_embed_respects_domains_and_fixed(k333):
    phi = guided_embed(path_graph(2), k333, domains={0: {0}})
    assert phi[0] == 0
    assert phi[1] in range(3, 9)
    assert guided_embed(path_graph(2), k333, fixed={0: 0, 1: 1}) is None
    phi = guided_embed(path_graph(3), k333, fixed={1: 4})
    assert phi[1] == 4
    assert is_embedding(path_graph(3), k333, phi)


def test_match_remaining(c6):
    phi = match_remaining(path_graph(3), c6, {1: 0}, [0, 2])
    assert phi[1] == 0
    assert {phi[0], phi[2]} == {1, 5}
    assert match_remaining(path_graph(3), c6, {1: 0}, [0, 2],
                           domains={0: {1}, 2: {1}}) is None
