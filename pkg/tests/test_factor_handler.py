#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
SPDX-FileCopyrightText: Siemens AG, 2020 Gaurav Mishra <mishra.gaurav@siemens.com>

SPDX-License-Identifier: MIT
"""
__author__ = "Siemens AG"

import math
from fractions import Fraction

import pytest

from guest_to_host.exceptions import InternalCheckFailure
from guest_to_host.exceptions import OreDegreeViolation
from guest_to_host.exceptions import SearchBudgetExhausted
from guest_to_host.graph import Graph
from guest_to_host.graph import complete_graph
from guest_to_host.graph import complete_multipartite
from guest_to_host.graph import cycle_graph
from guest_to_host.graph import delta2
from guest_to_host.graph import disjoint_union
from guest_to_host.graph import path_graph
from guest_to_host.graph import star_graph
from guest_to_host.handlers import PathSquareLayout
from guest_to_host.handlers import TriangleSet
from guest_to_host.handlers import extend_matching_to_factor
from guest_to_host.handlers import fictive_triangle_pipeline
from guest_to_host.handlers import hamilton_cycle
from guest_to_host.handlers import k1r_factor
from guest_to_host.handlers import layout_into_path_square
from guest_to_host.handlers import square_path
from guest_to_host.handlers import square_path_guaranteed
from guest_to_host.handlers import triangle_factor

from conftest import has_near_triangle_factor
from conftest import is_triangle_factor
from conftest import random_dense_graph
from conftest import random_graph
from conftest import random_ore_graph


def is_cycle(graph, order):
    return sorted(order) == list(graph.vertices()) and all(
        graph.has_edge(order[i], order[(i + 1) % len(order)])
        for i in range(len(order)))


def is_square_path(graph, order):
    return sorted(order) == list(graph.vertices()) and all(
        graph.has_edge(order[i], order[j])
        for i in range(len(order)) for j in (i + 1, i + 2) if j < len(order))


def test_triangle_factor_of_k333(k333):
    found = triangle_factor(k333)
    assert len(found) == 3
    assert is_triangle_factor(k333, found)


def test_tight_host_has_no_factor(tight_ch):
    assert triangle_factor(tight_ch) is None


def test_triangle_factor_skips_remainder():
    host = complete_graph(7)
    found = triangle_factor(host)
    assert len(found) == 2
    assert is_triangle_factor(host, found)


def test_triangle_factor_on_subset(k333):
    found = triangle_factor(k333, [0, 3, 6])
    assert found.triangles == [(0, 3, 6)]


def test_triangle_factor_budget(k333):
    with pytest.raises(SearchBudgetExhausted):
        triangle_factor(k333, budget=1)


def test_triangle_set_verify():
    with pytest.raises(InternalCheckFailure):
        TriangleSet([(0, 1, 2)]).verify(path_graph(3))
    with pytest.raises(InternalCheckFailure):
        TriangleSet([(0, 1, 2), (2, 3, 4)]).verify(complete_graph(5))


def test_extend_matching(k333):
    found = extend_matching_to_factor(k333, {0, 1, 2},
                                      [(3, 6), (4, 7), (5, 8)])
    assert is_triangle_factor(k333, found)
    with pytest.raises(InternalCheckFailure):
        extend_matching_to_factor(k333, {0, 1, 2}, [(3, 6)])


def test_star_factor():
    host = complete_graph(6)
    stars = k1r_factor(host, 2, seed=4)
    covered = [star.center for star in stars]
    covered += [leaf for star in stars for leaf in star.leaves]
    assert sorted(covered) == list(range(6))
    assert all(len(star.leaves) == 2 for star in stars)
    assert all(host.has_edge(star.center, leaf)
               for star in stars for leaf in star.leaves)


def test_star_factor_needs_divisibility_and_room():
    assert k1r_factor(complete_graph(7), 2) is None
    assert k1r_factor(complete_multipartite(4, 2), 1) is None
    stars = k1r_factor(cycle_graph(6), 1)
    assert len(stars) == 3


def test_hamilton_cycle(c6, k333):
    assert is_cycle(c6, hamilton_cycle(c6))
    assert is_cycle(k333, hamilton_cycle(k333))
    assert hamilton_cycle(path_graph(4)) is None
    assert hamilton_cycle(complete_multipartite(4, 2)) is None
    assert hamilton_cycle(disjoint_union(complete_graph(3),
                                         complete_graph(3))) is None


def test_layout_into_path_square():
    guest = disjoint_union(cycle_graph(6), star_graph(3), path_graph(4),
                           complete_graph(3))
    layout = layout_into_path_square(guest)
    assert layout.order[:6] == [0, 1, 5, 2, 4, 3]
    assert layout.order[6:10] == [7, 8, 6, 9]
    assert layout.verify(guest)


def test_layout_rejects_theta_five(mixed_guest):
    with pytest.raises(OreDegreeViolation):
        layout_into_path_square(mixed_guest)


def test_layout_verify_catches_long_edges():
    with pytest.raises(InternalCheckFailure):
        PathSquareLayout([0, 2, 3, 1]).verify(path_graph(4))


def test_square_path(k333, tight_ch, c6):
    assert is_square_path(k333, square_path(k333))
    assert square_path(c6) is None
    assert square_path(Graph(1)) == [0]
    assert square_path_guaranteed(k333)
    assert not square_path_guaranteed(tight_ch)


def test_fictive_pipeline_direct_factor():
    real, discarded = fictive_triangle_pipeline(complete_graph(6), 0.05)
    assert len(real) == 2
    assert discarded == frozenset()
    real, discarded = fictive_triangle_pipeline(complete_graph(9), 1 / 9)
    assert len(real) == 3
    assert discarded == frozenset()


def test_fictive_pipeline_edgeless_has_no_factor():
    assert fictive_triangle_pipeline(Graph(4), 0.15) is None
    assert fictive_triangle_pipeline(Graph(9), 0.1) is None


def test_fictive_pipeline_discards_two_per_fictive():
    reduced = complete_multipartite(3, 4, 2)
    assert triangle_factor(reduced) is None
    real, discarded = fictive_triangle_pipeline(reduced, Fraction(1, 18))
    assert len(discarded) == 6
    assert len(real) == 1
    assert real.verify(reduced)
    assert not real.vertices() & discarded
    assert real.vertices() | discarded == set(range(9))


def test_fictive_pipeline_rounds_to_divisible_order():
    real, discarded = fictive_triangle_pipeline(complete_graph(7), 0.04)
    assert len(real) == 1
    assert len(discarded) == 4
    assert real.vertices() | discarded == set(range(7))


@pytest.mark.parametrize("seed", range(60))
def test_triangle_factor_matches_exhaustive_search(seed):
    n = 3 + seed % 10
    graph = random_graph(n, 0.35 + 0.05 * (seed % 11), seed)
    found = triangle_factor(graph)
    assert (found is not None) == has_near_triangle_factor(graph)
    if found is not None:
        assert is_triangle_factor(graph, found)


@pytest.mark.slow
def test_triangle_factor_matches_exhaustive_search_sweep():
    for seed in range(600):
        n = 3 + seed % 10
        graph = random_graph(n, 0.3 + 0.6 * ((seed * 7) % 13) / 12, seed)
        found = triangle_factor(graph)
        assert (found is not None) == has_near_triangle_factor(graph)


@pytest.mark.parametrize("seed", range(20))
def test_hamilton_cycle_on_dirac_host(seed):
    n = 3 + seed % 14
    graph = random_dense_graph(n, math.ceil(n / 2), seed)
    assert 2 * graph.min_degree() >= n
    assert is_cycle(graph, hamilton_cycle(graph))


@pytest.mark.parametrize("seed", range(20))
def test_hamilton_cycle_on_ore_host(seed):
    n = 5 + seed % 12
    graph = random_ore_graph(n, seed)
    low = delta2(graph)
    assert low is None or low >= n
    assert is_cycle(graph, hamilton_cycle(graph))


@pytest.mark.slow
def test_hamilton_cycle_on_large_ore_hosts():
    for seed in range(40):
        graph = random_ore_graph(20 + seed, seed)
        assert is_cycle(graph, hamilton_cycle(graph))
