#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
SPDX-FileCopyrightText: Siemens AG, 2022 Gaurav Mishra <mishra.gaurav@siemens.com>

SPDX-License-Identifier: MIT
"""
__author__ = 'Siemens AG'

from .structure_handler import HDecomposition, DegreeClasses, PathMember
from .structure_handler import TriangleExtremality, degree_classes, saturate
from .structure_handler import is_saturated, path_system, d3_matching
from .structure_handler import decompose, decomposition_conditions, ihat
from .structure_handler import split_i1_i2, ihat_lower_bound, triangles_of
from .structure_handler import triangle_extremality, guest_remainder
from .matching_handler import BipartiteGraph, HallViolator
from .matching_handler import ProportionalMatching, Lambda1, Lambda2
from .matching_handler import max_matching, hall_violator
from .matching_handler import proportional_matching, verify_proportional
from .matching_handler import near_proportional_matching, copy_count
from .matching_handler import general_max_matching, build_lambda1
from .matching_handler import build_lambda2, lambda1_matching
from .matching_handler import neighborhood_ratio_holds
from .matching_handler import strong_proportional_matching
from .matching_handler import bipart_hall_regimes
from .factor_handler import TriangleSet, Star, PathSquareLayout
from .factor_handler import triangle_factor, extend_matching_to_factor
from .factor_handler import k1r_factor, hamilton_cycle
from .factor_handler import layout_into_path_square, square_path
from .factor_handler import square_path_guaranteed, fictive_triangle_pipeline
from .extremal_handler import ExtremalityCertificate, ExceptionalSets
from .extremal_handler import MatchingClassification, MatchingOrSplit
from .extremal_handler import SwitchResult, sparsest_subset
from .extremal_handler import extremality_certificate, classify_matching
from .extremal_handler import classification_claims, matching_or_split
from .extremal_handler import improving_switch, preprocess1, preprocess2
from .extremal_handler import preprocess3, exceptional_sets
from .extremal_handler import b_prime_cover_matching
from .coloring_handler import EquitableColoring, equitable_3_coloring
from .search_handler import guided_embed, match_remaining
from .regularity_handler import pair_density, is_super_regular
from .regularity_handler import regular_degree_check, super_regular_core
from .regularity_handler import reduced_min_degree_ok
from .case_handler import CaseState, classify_case, bisect, case_embed
from .case_handler import case1_embed, case2_embed, case3_embed
from .case_handler import cross_parity_fix
from .pipeline_handler import EXCEPTIONAL, ClusterWorld, AssignmentState
from .pipeline_handler import ConditionReport, PipelineRun
from .pipeline_handler import build_cluster_world, assign_components
from .pipeline_handler import add_fictive, distribute_i2, distribute_ihat1
from .pipeline_handler import form_L0, switching_c7, select_buffers
from .pipeline_handler import check_conditions, bad_vertex_removal
from .pipeline_handler import balance_deviation, run_pipeline
from .pipeline_handler import marginal_uniformity, pair_independence
from .pipeline_handler import synthesize_host, complete_from_world
