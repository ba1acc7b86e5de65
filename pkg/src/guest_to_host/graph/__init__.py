#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
SPDX-FileCopyrightText: Siemens AG, 2020 Gaurav Mishra <mishra.gaurav@siemens.com>

SPDX-License-Identifier: MIT
"""
__author__ = "Siemens AG"

from .graph import Graph, ComponentKind, INFINITE
from .graph import ore_degree, delta2, is_ore_bounded, require_ore_bounded
from .graph import min_degree_holds, components, classify_components
from .graph import theta_structure, distance, ball, density
from .graph import complete_graph, empty_graph, path_graph, cycle_graph
from .graph import star_graph, complete_multipartite, disjoint_union
from .edge_list import parse_edge_list, format_edge_list
from .edge_list import read_edge_list, write_edge_list
