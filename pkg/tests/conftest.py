#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
SPDX-FileCopyrightText: Siemens AG, 2020 Gaurav Mishra <mishra.gaurav@siemens.com>

SPDX-License-Identifier: MIT
"""
__author__ = "Siemens AG"

import itertools

import numpy as np
import pytest

from guest_to_host.config import EngineConfig
from guest_to_host.graph import Graph
from guest_to_host.graph import complete_graph
from guest_to_host.graph import complete_multipartite
from guest_to_host.graph import cycle_graph
from guest_to_host.graph import disjoint_union
from guest_to_host.graph import path_graph
from guest_to_host.graph import star_graph
from guest_to_host.graph import write_edge_list


def triangles(count):
    """
    ``count`` disjoint triangles
    """
    return disjoint_union(*[complete_graph(3) for _ in range(count)])


def matching(count):
    """
    ``count`` disjoint edges
    """
    return disjoint_union(*[path_graph(2) for _ in range(count)])


def claws(count):
    return disjoint_union(*[star_graph(3) for _ in range(count)])


def brute_force_embeds(guest, host):
    """
    Reference answer by trying every injective map
    """
    for image in itertools.permutations(range(host.n), guest.n):
        if all(host.has_edge(image[x], image[y]) for x, y in guest.edges):
            return True
    return False


def is_triangle_factor(graph, found):
    covered = set()
    for a, b, c in found:
        if not (graph.has_edge(a, b) and graph.has_edge(b, c) and
                graph.has_edge(a, c)):
            return False
        if covered & {a, b, c}:
            return False
        covered |= {a, b, c}
    return len(covered) == 3 * (graph.n // 3)


def random_ore_guest(n, seed):
    """
    Random guest with theta <= 5: shuffled pairs are joined, each kept with
    a seeded probability, whenever the Ore-degree stays at most 5
    """
    rng = np.random.default_rng(seed)
    keep = rng.uniform(0.2, 1.0)
    adj = [set() for _ in range(n)]
    pairs = list(itertools.combinations(range(n), 2))
    for index in rng.permutation(len(pairs)):
        u, v = pairs[index]
        if rng.random() > keep:
            continue
        du, dv = len(adj[u]) + 1, len(adj[v]) + 1
        if du + dv > 5:
            continue
        if any(du + len(adj[w]) > 5 for w in adj[u]):
            continue
        if any(dv + len(adj[w]) > 5 for w in adj[v]):
            continue
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, [(u, v) for u in range(n) for v in adj[u] if u < v])


def random_graph(n, p, seed):
    rng = np.random.default_rng(seed)
    return Graph(n, [(u, v) for u, v in itertools.combinations(range(n), 2)
                     if rng.random() < p])


def random_dense_graph(n, min_degree, seed):
    """
    Complete graph thinned at random while every degree stays at least
    ``min_degree``
    """
    rng = np.random.default_rng(seed)
    adj = [set(range(n)) - {v} for v in range(n)]
    pairs = list(itertools.combinations(range(n), 2))
    for index in rng.permutation(len(pairs)):
        u, v = pairs[index]
        if len(adj[u]) > min_degree and len(adj[v]) > min_degree and \
                rng.random() < 0.7:
            adj[u].discard(v)
            adj[v].discard(u)
    return Graph(n, [(u, v) for u in range(n) for v in adj[u] if u < v])


def random_ore_graph(n, seed):
    """
    Complete graph thinned at random while deg(x) + deg(y) >= n holds for
    every non-adjacent pair
    """
    rng = np.random.default_rng(seed)
    adj = [set(range(n)) - {v} for v in range(n)]

    def removable(u, v):
        du, dv = len(adj[u]) - 1, len(adj[v]) - 1
        if du + dv < n:
            return False
        for w in range(n):
            if w in (u, v):
                continue
            if w not in adj[u] and du + len(adj[w]) < n:
                return False
            if w not in adj[v] and dv + len(adj[w]) < n:
                return False
        return True

    pairs = list(itertools.combinations(range(n), 2))
    for index in rng.permutation(len(pairs)):
        u, v = pairs[index]
        if removable(u, v):
            adj[u].discard(v)
            adj[v].discard(u)
    return Graph(n, [(u, v) for u in range(n) for v in adj[u] if u < v])


def has_near_triangle_factor(graph):
    """
    Reference answer: floor(n/3) disjoint triangles, by exhaustive search
    """
    def search(uncovered, skips):
        if len(uncovered) <= skips:
            return True
        v = min(uncovered)
        rest = uncovered - {v}
        if skips and search(rest, skips - 1):
            return True
        around = sorted(graph.neighbor_set(v) & rest)
        for a, b in itertools.combinations(around, 2):
            if graph.has_edge(a, b) and search(rest - {a, b}, skips):
                return True
        return False

    return search(frozenset(graph.vertices()), graph.n % 3)


@pytest.fixture
def config():
    return EngineConfig()


@pytest.fixture
def k333():
    return complete_multipartite(3, 3, 3)


@pytest.fixture
def tight_ch():
    """
    K_{3,4,2}: delta = 5 = 2n/3 - 1 and no triangle factor
    """
    return complete_multipartite(3, 4, 2)


@pytest.fixture
def mixed_guest():
    """
    Triangle, claw, K_{1,4}, P_3 path and an edge: theta = 5
    """
    return disjoint_union(complete_graph(3), star_graph(3), star_graph(4),
                          path_graph(4), path_graph(2))


@pytest.fixture
def c6():
    return cycle_graph(6)


@pytest.fixture
def edge_list_file(tmp_path):
    def write(graph, name="graph.el"):
        path = tmp_path / name
        write_edge_list(graph, str(path))
        return str(path)
    return write


@pytest.fixture
def empty():
    return Graph(0)
