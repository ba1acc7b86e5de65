#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
SPDX-FileCopyrightText: Siemens AG, 2020 Gaurav Mishra <mishra.gaurav@siemens.com>

SPDX-License-Identifier: MIT
"""
__author__ = "Siemens AG"


class GuestToHostError(Exception):
    """
    Base class of every error raised by the package
    """


class GraphError(GuestToHostError):
    """
    Invalid vertex ids, overlapping or empty vertex sets
    """


class EdgeListFormatError(GraphError):
    """
    Malformed edge-list text

    :ivar line_no: 1-based line of the offending input (0 when unknown)
    """

    def __init__(self, message, line_no=0):
        if line_no:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class CorpusFormatError(EdgeListFormatError):
    """
    Malformed corpus line
    """


class OreDegreeViolation(GuestToHostError):
    """
    A guest exceeds the Ore-degree bound an operation requires

    :ivar bound: The bound that was required
    :ivar witness: Edge (u, v) or vertex proving the violation
    """

    def __init__(self, message, bound=None, witness=None):
        super().__init__(message)
        self.bound = bound
        self.witness = witness


class HypothesisViolation(GuestToHostError):
    """
    Hypotheses of a construction do not hold on the given instance

    :ivar diagnostics: Free-form dict describing what was observed
    """

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics if diagnostics is not None else {}


class StepFailure(GuestToHostError):
    """
    One step of a constructive route got stuck

    :ivar step: Name of the step
    :ivar vertex: Vertex the step could not handle, if any
    """

    def __init__(self, step, message, vertex=None):
        super().__init__(f"{step}: {message}")
        self.step = step
        self.vertex = vertex


class ColoringFailure(StepFailure):
    """
    Equitable coloring could not be balanced
    """

    def __init__(self, message, vertex=None):
        super().__init__("equitable-coloring", message, vertex)


class SearchBudgetExhausted(StepFailure):
    """
    A bounded exact search ran out of nodes before deciding

    :ivar nodes: Number of search nodes expanded
    """

    def __init__(self, step, nodes):
        super().__init__(step, f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes


class PipelineFailure(GuestToHostError):
    """
    A reduced-pipeline stage could not meet its precondition

    :ivar stage: Name of the stage
    :ivar witness: Offending cluster, vertex or count
    """

    def __init__(self, stage, message, witness=None):
        super().__init__(f"{stage}: {message}")
        self.stage = stage
        self.witness = witness


class InternalCheckFailure(GuestToHostError):
    """
    A built-in verifier rejected the output of a construction

    :ivar violator: The set (or item) the verifier tripped on
    """

    def __init__(self, message, violator=None):
        super().__init__(message)
        self.violator = violator


class MatchingError(GuestToHostError):
    """
    Size or divisibility precondition of a proportional matching fails
    """


class NoEmbeddingFound(GuestToHostError):
    """
    Every route, including the exact fallback, failed
    """
