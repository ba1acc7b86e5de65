#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
SPDX-FileCopyrightText: Siemens AG, 2020 Gaurav Mishra <mishra.gaurav@siemens.com>

SPDX-License-Identifier: MIT
"""
__author__ = "Siemens AG"

import itertools

from guest_to_host.exceptions import ColoringFailure
from guest_to_host.exceptions import InternalCheckFailure
from guest_to_host.graph import ComponentKind
from guest_to_host.graph import classify_components
from guest_to_host.graph import require_ore_bounded


class EquitableColoring:
    """
    Proper 3-coloring with near-equal classes

    :ivar classes: (K1, K2, K3) as frozensets, |K1| <= |K2| <= |K3|
    :ivar color_of: dict vertex -> index of its class in ``classes``
    """

    def __init__(self, classes):
        ordered = sorted((frozenset(c) for c in classes),
                         key=lambda c: (len(c), min(c, default=-1)))
        self.classes = tuple(ordered)
        self.color_of = {v: i for i, c in enumerate(self.classes) for v in c}

    def sizes(self):
        return tuple(len(c) for c in self.classes)

    def verify(self, graph):
        """
        Check properness, coverage and balance.

        :raises InternalCheckFailure: With the offending edge or vertex
        """
        missing = set(graph.vertices()) - set(self.color_of)
        if missing:
            raise InternalCheckFailure("uncolored vertices", missing)
        for u, v in graph.edges:
            if self.color_of[u] == self.color_of[v]:
                raise InternalCheckFailure("monochromatic edge", (u, v))
        sizes = self.sizes()
        if sizes[-1] - sizes[0] > 1:
            raise InternalCheckFailure(f"class sizes {sizes} not equitable")


def _walk(graph, part):
    """
    Vertices of a path or cycle component in traversal order
    """
    start = min(part, key=lambda v: (graph.degree(v), v))
    order, seen, current = [start], {start}, start
    while len(order) < len(part):
        nxt = [w for w in graph.neighbors(current) if w not in seen]
        if not nxt:
            break
        current = nxt[0]
        seen.add(current)
        order.append(current)
    return order


def _pattern(length, is_cycle):
    colors = [i % 3 for i in range(length)]
    if is_cycle and length % 3 == 1:
        colors[-1] = 1
    elif is_cycle and length % 3 == 2:
        colors[-2:] = [1, 2]
    return colors


def _exhaustive(graph, part):
    """
    Most balanced proper 3-coloring of a small component
    """
    vertices = sorted(part)
    best = None
    for colors in itertools.product(range(3), repeat=len(vertices)):
        if colors and colors[0] != 0:
            break
        color = dict(zip(vertices, colors))
        if any(color[u] == color[v] for u in vertices
               for v in graph.neighbors(u) if v in color):
            continue
        counts = [colors.count(c) for c in range(3)]
        spread = max(counts) - min(counts)
        if best is None or spread < best[0]:
            best = (spread, color)
            if spread <= 1:
                break
    return None if best is None else best[1]


def _greedy(graph, part):
    color = {}
    for v in sorted(part, key=lambda w: (-graph.degree(w), w)):
        used = {color[w] for w in graph.neighbors(v) if w in color}
        free = [c for c in range(3) if c not in used]
        if not free:
            raise ColoringFailure(f"no free color at vertex {v}", v)
        color[v] = free[0]
    return color


def component_coloring(graph, part, kind, exact_limit=8):
    """
    Proper 3-coloring of one component with class counts differing by at
    most one wherever the component type allows it.

    :return: dict vertex -> color in 0..2
    """
    if kind.tag in (ComponentKind.PATH, ComponentKind.CYCLE,
                    ComponentKind.TRIANGLE, ComponentKind.EDGE,
                    ComponentKind.ISOLATED):
        order = _walk(graph, part)
        is_cycle = kind.tag in (ComponentKind.CYCLE, ComponentKind.TRIANGLE)
        return dict(zip(order, _pattern(len(order), is_cycle)))
    if kind.tag in (ComponentKind.CLAW, ComponentKind.STAR4):
        center = max(part, key=lambda v: (graph.degree(v), -v))
        leaves = sorted(part - {center})
        color = {center: 0}
        color.update((leaf, 1 + i % 2) for i, leaf in enumerate(leaves))
        return color
    if len(part) <= exact_limit:
        color = _exhaustive(graph, part)
        if color is not None:
            return color
    return _greedy(graph, part)


def _kempe_balance(graph, color, limit):
    """
    Move single vertices or swap two-colored chains from the largest class
    to the smallest until the spread is at most one.
    """
    for _ in range(limit):
        counts = [0, 0, 0]
        for c in color.values():
            counts[c] += 1
        big = max(range(3), key=lambda c: (counts[c], -c))
        small = min(range(3), key=lambda c: (counts[c], c))
        gap = counts[big] - counts[small]
        if gap <= 1:
            return True
        moved = False
        for v in sorted(v for v in color if color[v] == big):
            if all(color[w] != small for w in graph.neighbors(v)):
                color[v] = small
                moved = True
                break
        if moved:
            continue
        for v in sorted(v for v in color if color[v] == big):
            chain, stack = {v}, [v]
            while stack:
                x = stack.pop()
                for w in graph.neighbors(x):
                    if w not in chain and color[w] in (big, small):
                        chain.add(w)
                        stack.append(w)
            diff = sum(1 for x in chain if color[x] == big) - \
                sum(1 for x in chain if color[x] == small)
            if 0 < diff < gap:
                for x in chain:
                    color[x] = small if color[x] == big else big
                moved = True
                break
        if not moved:
            return False
    return False


def equitable_3_coloring(guest, exact_limit=8):
    """
    Equitable 3-coloring of a guest with Ore-degree at most 5.

    Every component gets a near-balanced coloring; components are then
    combined largest first, each one's color permutation chosen so that
    its heavier classes land on the currently lightest colors. Components
    that are not near-balanced are repaired by vertex moves and two-color
    chain swaps.

    :param guest: Guest graph
    :type guest: Graph
    :rtype: EquitableColoring
    :raises OreDegreeViolation: When theta(guest) > 5
    :raises ColoringFailure: When balancing gets stuck
    """
    require_ore_bounded(guest, 5)
    pieces = []
    for part, kind in classify_components(guest):
        pieces.append(component_coloring(guest, part, kind, exact_limit))
    pieces.sort(key=lambda c: (-len(c), min(c)))
    loads = [0, 0, 0]
    color = {}
    for piece in pieces:
        counts = [0, 0, 0]
        for c in piece.values():
            counts[c] += 1
        heavy = sorted(range(3), key=lambda c: (-counts[c], c))
        light = sorted(range(3), key=lambda c: (loads[c], c))
        perm = dict(zip(heavy, light))
        for v, c in piece.items():
            color[v] = perm[c]
            loads[perm[c]] += 1
    if max(loads) - min(loads) > 1 and \
            not _kempe_balance(guest, color, 4 * guest.n + 3):
        raise ColoringFailure(f"class sizes {sorted(loads)} can not be "
                              "balanced")
    classes = [{v for v in color if color[v] == c} for c in range(3)]
    result = EquitableColoring(classes)
    result.verify(guest)
    return result
