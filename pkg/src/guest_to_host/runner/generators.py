#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
SPDX-FileCopyrightText: Siemens AG, 2020 Gaurav Mishra <mishra.gaurav@siemens.com>

SPDX-License-Identifier: MIT
"""
__author__ = "Siemens AG"

import math

import numpy as np

from guest_to_host.exceptions import GraphError
from guest_to_host.exceptions import InternalCheckFailure
from guest_to_host.graph import Graph
from guest_to_host.graph import complete_multipartite
from guest_to_host.graph import require_ore_bounded

COMPONENT_KINDS = ("edge", "p2", "path", "cycle", "triangle", "claw",
                   "star4")

HOST_SHAPES = ("random-min-degree", "tripartite-extremal", "two-clique-B",
               "three-block", "tight-CH", "tight-bipartite")


class GuestProfile:
    """
    Component mix of a generated guest

    :ivar n: Number of vertices
    :ivar weights: dict component kind -> nonnegative weight
    :ivar triangular: Fraction of the vertices placed in triangles first
    """

    def __init__(self, n, weights=None, triangular=0.0):
        if n < 0:
            raise GraphError(f"guest size can not be negative, {n} passed")
        weights = dict(weights) if weights else {"edge": 1.0}
        for kind, weight in weights.items():
            if kind not in COMPONENT_KINDS:
                raise GraphError(f"Unrecognized component kind {kind} passed")
            if weight < 0:
                raise GraphError(f"weight of {kind} is negative")
        if n > 0 and sum(weights.values()) <= 0 and triangular <= 0:
            raise GraphError("component weights are all zero")
        if not 0 <= triangular <= 1:
            raise GraphError(f"triangular fraction {triangular} not in [0, 1]")
        self.n = n
        self.weights = weights
        self.triangular = triangular

    def to_dict(self):
        return {"n": self.n, "weights": dict(self.weights),
                "triangular": self.triangular}


class HostProfile:
    """
    Shape of a generated host

    :ivar n: Number of vertices
    :ivar shape: One of HOST_SHAPES
    :ivar min_degree: Requested minimum degree of random-min-degree hosts
    :ivar noise: Edge probability of extra edges inside the sparse blocks
        (base density of random-min-degree hosts)
    :ivar planted: Number of planted exceptional vertices in block A
    """

    def __init__(self, n, shape="random-min-degree", min_degree=None,
                 noise=0.0, planted=0):
        if shape not in HOST_SHAPES:
            raise GraphError(f"Unrecognized host shape {shape} passed")
        if not 0 <= noise <= 1:
            raise GraphError(f"noise {noise} not in [0, 1]")
        self.n = n
        self.shape = shape
        self.min_degree = min_degree
        self.noise = noise
        self.planted = planted

    def to_dict(self):
        return {"n": self.n, "shape": self.shape,
                "min_degree": self.min_degree, "noise": self.noise,
                "planted": self.planted}


def _component(kind, size, start):
    ids = list(range(start, start + size))
    if kind in ("edge", "p2", "path"):
        return [(ids[i], ids[i + 1]) for i in range(size - 1)]
    if kind in ("cycle", "triangle"):
        return [(ids[i], ids[(i + 1) % size]) for i in range(size)]
    return [(ids[0], leaf) for leaf in ids[1:]]


def _size(kind, rng):
    fixed = {"edge": 2, "p2": 3, "triangle": 3, "claw": 4, "star4": 5}
    if kind in fixed:
        return fixed[kind]
    return int(rng.integers(4, 9))


def gen_guest(profile, seed=0):
    """
    Guest with the requested component mix, vertex ids shuffled.

    The triangular share is laid first; the rest is drawn by weight, and a
    draw larger than the vertices left becomes a path on what is left.

    :param profile: GuestProfile
    :param seed: Seed of the draw
    :rtype: Graph
    :raises OreDegreeViolation: When the realized guest has theta > 5
    """
    rng = np.random.default_rng(seed)
    kinds = [k for k in COMPONENT_KINDS if profile.weights.get(k, 0) > 0]
    total = sum(profile.weights[k] for k in kinds)
    probs = [profile.weights[k] / total for k in kinds]
    edges, used = [], 0
    for _ in range(int(profile.triangular * profile.n) // 3):
        edges.extend(_component("triangle", 3, used))
        used += 3
    while used < profile.n:
        left = profile.n - used
        if kinds:
            kind = kinds[rng.choice(len(kinds), p=probs)]
            size = _size(kind, rng)
        else:
            kind, size = "path", left
        if size > left:
            kind, size = "path", left
        edges.extend(_component(kind, size, used))
        used += size
    perm = rng.permutation(profile.n).tolist()
    guest = Graph(profile.n, edges).relabel(perm)
    require_ore_bounded(guest, 5)
    return guest


def _boost(adj, vertices, pool, target, rng):
    """
    Add edges from every vertex of ``vertices`` to the lowest-degree
    non-neighbors in ``pool`` until its degree reaches ``target``
    """
    for v in [vertices[i] for i in rng.permutation(len(vertices))]:
        while len(adj[v]) < target:
            options = [w for w in pool if w != v and w not in adj[v]]
            if not options:
                raise GraphError(f"minimum degree {target} is not reachable "
                                 f"at vertex {v}")
            noise = rng.random(len(options))
            best = min(range(len(options)),
                       key=lambda i: (len(adj[options[i]]), noise[i]))
            w = options[best]
            adj[v].add(w)
            adj[w].add(v)


def _random_edges(adj, vertices, p, rng):
    for i, u in enumerate(vertices):
        for w in vertices[i + 1:]:
            if rng.random() < p:
                adj[u].add(w)
                adj[w].add(u)


def _join(adj, left, right):
    for u in left:
        for w in right:
            adj[u].add(w)
            adj[w].add(u)


def _plant(adj, a_block, b_block, planted, rng):
    """
    The first ``planted`` vertices of A see all of A and only
    |B| - |A| + 1 random vertices of B.
    """
    keep = len(b_block) - len(a_block) + 1
    for v in a_block[:planted]:
        for w in a_block:
            if w != v:
                adj[v].add(w)
                adj[w].add(v)
        drop = [b_block[i] for i in rng.permutation(len(b_block))[keep:]]
        for w in drop:
            adj[v].discard(w)
            adj[w].discard(v)


def _to_graph(n, adj):
    return Graph(n, [(u, w) for u in range(n) for w in adj[u] if u < w])


def gen_host(profile, seed=0):
    """
    Host of the requested shape.

    random-min-degree: random graph boosted to the requested minimum
    degree (default ceil(2n/3)). tripartite-extremal: sparse A of size n/3
    joined to a dense B (Case 1). two-clique-B: B two cliques linked by a
    perfect matching (Case 2). three-block: complete tripartite with
    sparse noise (Case 3). tight-CH: K_{k,k+1,k-1}. tight-bipartite:
    K_{k+1,k-1}.

    :rtype: Graph
    :raises GraphError: When the size does not fit the shape or the degree
        request can not be met
    :raises InternalCheckFailure: When the result misses its advertised
        minimum degree
    """
    rng = np.random.default_rng(seed)
    n, shape = profile.n, profile.shape
    if n < 3:
        raise GraphError(f"host needs at least 3 vertices, {n} passed")
    if shape == "tight-bipartite":
        if n % 2:
            raise GraphError(f"tight-bipartite needs an even n, {n} passed")
        k = n // 2
        host = complete_multipartite(k + 1, k - 1)
        return _check(host, k - 1, shape, exact=True)
    if n % 3 and shape != "random-min-degree":
        raise GraphError(f"{shape} needs n divisible by 3, {n} passed")
    k = n // 3
    if shape == "tight-CH":
        host = complete_multipartite(k, k + 1, k - 1)
        return _check(host, 2 * k - 1, shape, exact=True)
    need = math.ceil(2 * n / 3)
    adj = [set() for _ in range(n)]
    everything = list(range(n))
    if shape == "random-min-degree":
        target = need if profile.min_degree is None else profile.min_degree
        if target > n - 1:
            raise GraphError(f"minimum degree {target} is impossible on "
                             f"{n} vertices")
        _random_edges(adj, everything, profile.noise, rng)
        _boost(adj, everything, everything, target, rng)
        return _check(_to_graph(n, adj), target, shape)
    a_block = list(range(k))
    b_block = list(range(k, n))
    _join(adj, a_block, b_block)
    _random_edges(adj, a_block, profile.noise, rng)
    if shape == "tripartite-extremal":
        _random_edges(adj, b_block, 0.6, rng)
    elif shape == "two-clique-B":
        b1, b2 = b_block[:k], b_block[k:]
        _random_edges(adj, b1, 1.0, rng)
        _random_edges(adj, b2, 1.0, rng)
        for u, w in zip(b1, b2):
            adj[u].add(w)
            adj[w].add(u)
    else:
        b1, b2 = b_block[:k], b_block[k:]
        _join(adj, b1, b2)
        _random_edges(adj, b1, profile.noise, rng)
        _random_edges(adj, b2, profile.noise, rng)
    if profile.planted:
        _plant(adj, a_block, b_block, min(profile.planted, k), rng)
    _boost(adj, b_block, b_block, need, rng)
    _boost(adj, a_block, b_block, need, rng)
    return _check(_to_graph(n, adj), need, shape)


def _check(host, degree, shape, exact=False):
    found = host.min_degree()
    if found < degree or (exact and found != degree):
        raise InternalCheckFailure(f"{shape} host has minimum degree {found}, "
                                   f"{degree} advertised")
    return host
