#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
SPDX-FileCopyrightText: Siemens AG, 2020 Gaurav Mishra <mishra.gaurav@siemens.com>

SPDX-License-Identifier: MIT
"""
__author__ = "Siemens AG"

import numpy as np
import pytest

from guest_to_host.exceptions import InternalCheckFailure
from guest_to_host.exceptions import OreDegreeViolation
from guest_to_host.graph import complete_graph
from guest_to_host.graph import cycle_graph
from guest_to_host.graph import path_graph
from guest_to_host.handlers import EquitableColoring
from guest_to_host.handlers import equitable_3_coloring
from guest_to_host.runner import COMPONENT_KINDS
from guest_to_host.runner import GuestProfile
from guest_to_host.runner import gen_guest

from conftest import claws
from conftest import triangles


def test_mixed_guest_is_balanced(mixed_guest):
    coloring = equitable_3_coloring(mixed_guest)
    assert coloring.sizes() == (6, 6, 6)
    assert sorted(coloring.color_of) == list(range(18))


@pytest.mark.parametrize("guest", [
    cycle_graph(7), cycle_graph(8), path_graph(10), triangles(4), claws(3)
])
def test_coloring_is_proper_and_equitable(guest):
    coloring = equitable_3_coloring(guest)
    sizes = coloring.sizes()
    assert sizes[-1] - sizes[0] <= 1
    assert all(coloring.color_of[u] != coloring.color_of[v]
               for u, v in guest.edges)


def test_dense_guest_is_rejected():
    with pytest.raises(OreDegreeViolation):
        equitable_3_coloring(complete_graph(4))


def test_verify_reports_defects():
    with pytest.raises(InternalCheckFailure):
        EquitableColoring([{0, 1}, {2}, set()]).verify(path_graph(3))
    with pytest.raises(InternalCheckFailure):
        EquitableColoring([{0}, {1}, set()]).verify(path_graph(3))
    with pytest.raises(InternalCheckFailure):
        EquitableColoring([{0, 2, 4}, {1}, {3}]).verify(path_graph(5))


def random_mix_guest(seed, sizes=range(1, 40)):
    rng = np.random.default_rng(seed)
    weights = {kind: float(w) for kind, w in
               zip(COMPONENT_KINDS, rng.random(len(COMPONENT_KINDS)))}
    return gen_guest(GuestProfile(int(rng.choice(sizes)), weights), seed)


def check_coloring(guest):
    coloring = equitable_3_coloring(guest)
    coloring.verify(guest)
    sizes = coloring.sizes()
    assert sum(sizes) == guest.n
    assert max(sizes) - min(sizes) <= 1
    for u, v in guest.edges:
        assert coloring.color_of[u] != coloring.color_of[v]


@pytest.mark.parametrize("seed", range(30))
def test_random_catalogue_guest_is_balanced(seed):
    check_coloring(random_mix_guest(seed))


@pytest.mark.slow
def test_thousand_catalogue_guests_are_balanced():
    for seed in range(1000):
        check_coloring(random_mix_guest(seed, range(1, 120)))
