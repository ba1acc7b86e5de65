#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
SPDX-FileCopyrightText: Siemens AG, 2020 Gaurav Mishra <mishra.gaurav@siemens.com>

SPDX-License-Identifier: MIT
"""
__author__ = "Siemens AG"

import pytest

from guest_to_host.exceptions import GraphError
from guest_to_host.graph import ore_degree
from guest_to_host.handlers import triangle_extremality
from guest_to_host.runner import GuestProfile
from guest_to_host.runner import HostProfile
from guest_to_host.runner import gen_guest
from guest_to_host.runner import gen_host


def test_triangle_only_guest():
    guest = gen_guest(GuestProfile(30, triangular=1.0), seed=3)
    assert guest.n == 30
    assert guest.m == 30
    assert triangle_extremality(guest).triangle_count == 10


def test_mixed_guest_respects_theta():
    profile = GuestProfile(40, {"claw": 1, "triangle": 1, "cycle": 1,
                                "star4": 1})
    guest = gen_guest(profile, seed=11)
    assert guest.n == 40
    assert ore_degree(guest) <= 5


@pytest.mark.parametrize("args", [
    (5, {"hexagon": 1}),
    (5, {"edge": -1}),
    (5, {"edge": 0}),
    (5, {"edge": 1}, 1.5),
    (-1,),
])
def test_invalid_guest_profiles(args):
    with pytest.raises(GraphError):
        GuestProfile(*args)


def test_invalid_host_profiles():
    with pytest.raises(GraphError):
        HostProfile(9, "ring")
    with pytest.raises(GraphError):
        HostProfile(9, noise=2.0)


def test_tight_hosts():
    assert gen_host(HostProfile(9, "tight-CH")).min_degree() == 5
    assert gen_host(HostProfile(8, "tight-bipartite")).min_degree() == 3


@pytest.mark.parametrize("shape, n", [
    ("random-min-degree", 12),
    ("random-min-degree", 10),
    ("tripartite-extremal", 12),
    ("two-clique-B", 12),
    ("three-block", 15),
])
def test_hosts_reach_two_thirds(shape, n):
    host = gen_host(HostProfile(n, shape, noise=0.1), seed=2)
    assert host.n == n
    assert 3 * host.min_degree() >= 2 * n


def test_requested_min_degree():
    host = gen_host(HostProfile(12, min_degree=10), seed=1)
    assert host.min_degree() >= 10
    with pytest.raises(GraphError):
        gen_host(HostProfile(6, min_degree=6))


def test_host_size_errors():
    with pytest.raises(GraphError):
        gen_host(HostProfile(10, "three-block"))
    with pytest.raises(GraphError):
        gen_host(HostProfile(2))
    with pytest.raises(GraphError):
        gen_host(HostProfile(9, "tight-bipartite"))


def test_generation_is_seeded():
    profile = HostProfile(15, "tripartite-extremal", noise=0.2)
    assert gen_host(profile, seed=4) == gen_host(profile, seed=4)
    guests = GuestProfile(20, {"path": 1, "claw": 1})
    assert gen_guest(guests, seed=4) == gen_guest(guests, seed=4)
