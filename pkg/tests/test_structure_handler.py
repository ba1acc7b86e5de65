#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
SPDX-FileCopyrightText: Siemens AG, 2020 Gaurav Mishra <mishra.gaurav@siemens.com>

SPDX-License-Identifier: MIT
"""
__author__ = "Siemens AG"

import itertools

import pytest

from guest_to_host.exceptions import OreDegreeViolation
from guest_to_host.graph import Graph
from guest_to_host.graph import complete_graph
from guest_to_host.graph import cycle_graph
from guest_to_host.graph import disjoint_union
from guest_to_host.graph import distance
from guest_to_host.graph import ore_degree
from guest_to_host.graph import path_graph
from guest_to_host.graph import star_graph
from guest_to_host.handlers import d3_matching
from guest_to_host.handlers import decompose
from guest_to_host.handlers import decomposition_conditions
from guest_to_host.handlers import degree_classes
from guest_to_host.handlers import guest_remainder
from guest_to_host.handlers import is_saturated
from guest_to_host.handlers import path_system
from guest_to_host.handlers import saturate
from guest_to_host.handlers import triangle_extremality
from guest_to_host.handlers.structure_handler import star4_vertices

from conftest import matching
from conftest import random_ore_guest
from conftest import triangles


def test_degree_classes_reject_degree_five():
    with pytest.raises(OreDegreeViolation):
        degree_classes(star_graph(5))
    classes = degree_classes(star_graph(3))
    assert classes.d3 == {0}
    assert classes.d1 == {1, 2, 3}


def test_path_system_of_claw():
    members = path_system(star_graph(3))
    assert [m.vertices for m in members] == [(0, 1), (0, 2), (0, 3)]
    assert not any(m.is_cycle for m in members)
    partners = d3_matching(star_graph(3), members)
    assert set(partners) == {0}


def test_saturation_keeps_theta_bounded():
    guest = disjoint_union(matching(2), Graph(2))
    saturated = saturate(guest)
    assert ore_degree(saturated) <= 5
    assert saturated.m > guest.m
    assert is_saturated(saturated)
    assert not is_saturated(guest)


def test_decompose_triangles():
    dec = decompose(triangles(2))
    assert dec.I == {0, 3}
    assert dec.components_minus_I == [(1, 2), (4, 5)]
    assert dec.I1 == {0, 3}
    assert dec.I2 == set()
    assert dec.Ihat == set()


def test_decompose_path_splits_by_components():
    guest = path_graph(5)
    dec = decompose(guest)
    assert dec.I == {1, 3}
    assert dec.I2 == {1, 3}
    assert dec.Ihat == {1}
    assert all(decomposition_conditions(guest, dec.I).values())


def test_decompose_claw_takes_leaves():
    dec = decompose(star_graph(3))
    assert dec.I == {1, 2, 3}
    assert len(dec.Iprime) == 1
    assert dec.components_minus_I == [(0,)]


@pytest.mark.parametrize("guest", [
    cycle_graph(7),
    disjoint_union(complete_graph(3), star_graph(3), star_graph(4),
                   path_graph(4), path_graph(2)),
    disjoint_union(cycle_graph(5), cycle_graph(4), path_graph(3)),
])
def test_decompose_satisfies_all_conditions(guest):
    dec = decompose(guest, seed=3)
    report = decomposition_conditions(guest, dec.I)
    assert all(report.values()), report
    assert set(dec.I1) | set(dec.I2) == {x for x in dec.I
                                         if guest.degree(x) == 2}
    assert sum(len(p) for p in dec.Ihat_parts) == len(dec.Ihat)


def test_ihat_members_are_far_apart():
    guest = path_graph(30)
    dec = decompose(guest)
    members = sorted(dec.Ihat)
    assert len(members) > 1
    assert all(b - a >= 5 for a, b in zip(members, members[1:]))


def test_conditions_name_the_failure():
    report = decomposition_conditions(cycle_graph(4), {0})
    assert not report["neighbor_rule"]
    assert not report["dominating"]
    report = decomposition_conditions(path_graph(5), {1, 2})
    assert not report["independent"]


def test_triangle_extremality():
    found = triangle_extremality(triangles(3))
    assert found.triangle_count == 3
    assert found.is_extreme
    assert found.vdelta_bound_holds
    sparse = triangle_extremality(disjoint_union(complete_graph(3),
                                                 path_graph(6)))
    assert not sparse.is_extreme
    assert sparse.vdelta_bound_holds is None


def test_shared_triangle_vertex_is_rejected():
    bowtie = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    with pytest.raises(OreDegreeViolation):
        triangle_extremality(bowtie)


def test_guest_remainder_drops_vdelta():
    guest = disjoint_union(complete_graph(3), path_graph(2))
    rest, ids = guest_remainder(guest, triangle_extremality(guest))
    assert ids == [3, 4]
    assert rest.edges == ((0, 1),)


def check_decomposition(guest, seed):
    dec = decompose(guest, seed=seed)
    assert all(decomposition_conditions(guest, dec.I).values())
    classes = degree_classes(guest)
    assert dec.I1 | dec.I2 == dec.I & classes.d2
    assert not dec.I1 & dec.I2
    assert dec.Ihat <= dec.I - dec.I1 - classes.d0
    for u, v in itertools.combinations(sorted(dec.Ihat), 2):
        assert distance(guest, u, v) >= 5
    sizes = sorted(len(part) for part in dec.Ihat_parts)
    assert sizes[-1] - sizes[0] <= 1
    assert set().union(*dec.Ihat_parts) == set(dec.Ihat)


@pytest.mark.parametrize("seed", range(40))
def test_decompose_random_guest(seed):
    guest = random_ore_guest(5 + seed % 20, seed)
    assert ore_degree(guest) <= 5
    check_decomposition(guest, seed)


@pytest.mark.slow
def test_decompose_thousand_random_guests():
    for seed in range(1000):
        check_decomposition(random_ore_guest(5 + seed % 40, seed), seed)


def check_saturation(guest):
    full = saturate(guest)
    assert set(guest.edges) <= set(full.edges)
    assert ore_degree(full) <= 5
    assert is_saturated(full)
    stars = star4_vertices(full)
    low = [v for v in full.vertices()
           if v not in stars and full.degree(v) <= 1]
    assert len(low) <= 2


@pytest.mark.parametrize("seed", range(30))
def test_saturate_random_guest(seed):
    check_saturation(random_ore_guest(6 + seed % 15, seed))


@pytest.mark.slow
def test_saturate_thousand_random_guests():
    for seed in range(1000):
        check_saturation(random_ore_guest(6 + seed % 40, seed))
