#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
SPDX-FileCopyrightText: Siemens AG, 2020 Gaurav Mishra <mishra.gaurav@siemens.com>

SPDX-License-Identifier: MIT

Edge-list text format::

    # optional comments
    p <n> <m>
    <u> <v>
    ...

Vertex ids are 0-based. The writer emits edges sorted with u < v.
"""
__author__ = "Siemens AG"

from guest_to_host.exceptions import EdgeListFormatError
from guest_to_host.exceptions import GraphError
from guest_to_host.graph.graph import Graph


def parse_edge_list(text):
    """
    Parse edge-list text into a Graph.

    :param text: Content in the edge-list format
    :type text: str
    :return: Parsed graph
    :rtype: Graph
    :raises EdgeListFormatError: On any malformed line or count mismatch
    """
    header = None
    edges = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if fields[0] != "p" or len(fields) != 3:
                raise EdgeListFormatError("expected header 'p <n> <m>'",
                                          line_no)
            try:
                header = (int(fields[1]), int(fields[2]))
            except ValueError:
                raise EdgeListFormatError("non-integer header", line_no)
            continue
        if len(fields) != 2:
            raise EdgeListFormatError(f"expected '<u> <v>', got '{line}'",
                                      line_no)
        try:
            edges.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise EdgeListFormatError(f"non-integer vertex in '{line}'",
                                      line_no)
    if header is None:
        raise EdgeListFormatError("missing header 'p <n> <m>'")
    n, m = header
    if len(edges) != m:
        raise EdgeListFormatError(f"header announces {m} edges, "
                                  f"{len(edges)} found")
    try:
        graph = Graph(n, edges)
    except GraphError as ex:
        raise EdgeListFormatError(str(ex))
    if graph.m != m:
        raise EdgeListFormatError("duplicate edges in input")
    return graph


def format_edge_list(graph, comments=()):
    """
    Render a Graph in the edge-list format.

    :param graph: Graph to write
    :type graph: Graph
    :param comments: Lines emitted as '# ...' before the header
    :type comments: iterable
    :rtype: str
    """
    lines = [f"# {c}" for c in comments]
    lines.append(f"p {graph.n} {graph.m}")
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(path):
    """
    Read a Graph from an edge-list file
    """
    with open(path, "r", encoding="UTF-8") as handle:
        return parse_edge_list(handle.read())


def write_edge_list(graph, path, comments=()):
    """
    Write a Graph to an edge-list file
    """
    with open(path, "w", encoding="UTF-8") as handle:
        handle.write(format_edge_list(graph, comments))
