#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
SPDX-FileCopyrightText: Siemens AG, 2020 Gaurav Mishra <mishra.gaurav@siemens.com>

SPDX-License-Identifier: MIT
"""
__author__ = "Siemens AG"

import math
import sys
import time

from networkx.algorithms import isomorphism

from guest_to_host.config import EngineConfig
from guest_to_host.exceptions import GraphError
from guest_to_host.exceptions import HypothesisViolation
from guest_to_host.exceptions import InternalCheckFailure
from guest_to_host.exceptions import MatchingError
from guest_to_host.exceptions import NoEmbeddingFound
from guest_to_host.exceptions import OreDegreeViolation
from guest_to_host.exceptions import PipelineFailure
from guest_to_host.exceptions import SearchBudgetExhausted
from guest_to_host.exceptions import StepFailure
from guest_to_host.graph import components
from guest_to_host.graph import min_degree_holds
from guest_to_host.graph import ore_degree
from guest_to_host.handlers import case_embed
from guest_to_host.handlers import classify_case
from guest_to_host.handlers import decompose
from guest_to_host.handlers import guest_remainder
from guest_to_host.handlers import guided_embed
from guest_to_host.handlers import hamilton_cycle
from guest_to_host.handlers import layout_into_path_square
from guest_to_host.handlers import match_remaining
from guest_to_host.handlers import square_path
from guest_to_host.handlers import triangle_extremality
from guest_to_host.handlers import triangle_factor

ORACLE_LIMIT = 10


def verify(guest, host, phi):
    """
    Check that phi is an injective edge-preserving map of the guest into
    the host.

    :param guest: Guest graph
    :param host: Host graph
    :param phi: dict guest vertex -> host vertex
    :return: (True, None) or (False, first violation) where the violation
        is ("unmapped", x), ("range", x), ("collision", (x, y)) or
        ("edge", (x, y))
    :rtype: tuple
    """
    seen = {}
    for x in guest.vertices():
        if x not in phi:
            return False, ("unmapped", x)
        v = phi[x]
        if not 0 <= v < host.n:
            return False, ("range", x)
        if v in seen:
            return False, ("collision", (seen[v], x))
        seen[v] = x
    for x, y in guest.edges:
        if not host.has_edge(phi[x], phi[y]):
            return False, ("edge", (x, y))
    return True, None


def _degrees_dominated(guest, host):
    mine = sorted(guest.degrees(), reverse=True)
    theirs = sorted(host.degrees(), reverse=True)
    return len(mine) <= len(theirs) and \
        all(a <= b for a, b in zip(mine, theirs))


def oracle_embed(guest, host):
    """
    Exhaustive subgraph monomorphism search (VF2) after a degree-sequence
    check. Complete for every size; meant for n <= 10.

    :return: dict guest vertex -> host vertex, or None
    """
    if guest.n > host.n or guest.m > host.m or \
            not _degrees_dominated(guest, host):
        return None
    matcher = isomorphism.GraphMatcher(host.to_networkx(), guest.to_networkx())
    found = next(matcher.subgraph_monomorphisms_iter(), None)
    if found is None:
        return None
    return {x: v for v, x in found.items()}


def packing_bound_report(guest, host):
    """
    Packing bound (floor(theta(H)/2) + 1)(Delta(complement of G) + 1)
    <= n + 1 next to the oracle's answer. Nothing is claimed either way.
    """
    theta = ore_degree(guest)
    complement_max = host.complement().max_degree() if host.n else 0
    bound = (theta // 2 + 1) * (complement_max + 1)
    found = oracle_embed(guest, host)
    return {"n": host.n, "theta": theta,
            "complement_max_degree": complement_max, "bound": bound,
            "bound_holds": bound <= host.n + 1,
            "embedded": found is not None}


class EngineReport:
    """
    What the engine did for one instance

    :ivar route: Route that produced the embedding
    :ivar steps: List of (step name, seconds)
    :ivar trace: Placement lines, filled when tracing
    :ivar failures: List of (route, message) for routes that gave up
    :ivar verified: Result of the final verification
    :ivar diagnostics: Route specific details
    """

    def __init__(self):
        self.route = None
        self.steps = []
        self.trace = []
        self.failures = []
        self.verified = False
        self.diagnostics = {}

    def timed(self, name, start):
        self.steps.append((name, time.perf_counter() - start))

    def to_dict(self):
        return {"route": self.route,
                "steps": [{"step": s, "seconds": round(t, 6)}
                          for s, t in self.steps],
                "failures": [{"route": r, "message": m}
                             for r, m in self.failures],
                "verified": self.verified,
                "diagnostics": self.diagnostics,
                "trace": list(self.trace)}


class EmbedEngine:
    """
    Dispatcher over the constructive routes with an exact fallback

    :ivar config: EngineConfig in use
    """

    def __init__(self, config=None):
        """
        Initializer for the class attributes.

        :param config: Engine configuration, defaults when None
        :type config: EngineConfig
        """
        self.__config = config if config is not None else EngineConfig()
        self.__case = None

    @property
    def config(self):
        return self.__config

    def update_case(self, case):
        """
        Force the extremal case used for triangular-extreme guests

        :param case: 1, 2, 3 or None for the classified case
        :type case: int
        """
        if case not in (None, 1, 2, 3):
            raise ValueError(f"Unrecognized case {case} passed")
        self.__case = case

    def __log(self, level, message):
        if self.__config.verbose >= level:
            print(message)

    def __trace(self, report, route, phi):
        if self.__config.trace:
            for x in sorted(phi):
                report.trace.append(f"{route}: {x} -> {phi[x]}")

    def check_hypotheses(self, guest, host):
        """
        Equal orders always; theta(H) <= 5 and delta(G) >= ceil(2n/3)
        unless forced, in which case violations are only reported.

        :raises GraphError: When the orders differ
        :raises OreDegreeViolation: When theta(H) > 5
        :raises HypothesisViolation: When the host degree is too small
        """
        if guest.n != host.n:
            raise GraphError(f"guest has {guest.n} vertices, host has "
                             f"{host.n}")
        theta = ore_degree(guest)
        problems = []
        if theta > 5:
            problems.append(OreDegreeViolation(
                f"theta(H) = {theta} exceeds 5", bound=5, witness=theta))
        if not min_degree_holds(host, 2, 3):
            need = math.ceil(2 * guest.n / 3)
            problems.append(HypothesisViolation(
                f"delta(G) = {host.min_degree()} is below {need}",
                {"min_degree": host.min_degree(), "required": need}))
        if problems and not self.__config.force:
            raise problems[0]
        for problem in problems:
            print(f"Warning: {problem}", file=sys.stderr)
        return theta

    def embed(self, guest, host):
        """
        Embed the guest into the host.

        Routes by theta(H): a Hamilton cycle for theta <= 3, a square path
        for theta = 4, and for theta = 5 the extremal cases, the
        non-extremal host placement or the decomposition guided search.
        A route that gets stuck is recorded and the exact fallback runs.

        :param guest: Guest graph
        :param host: Host graph of the same order
        :return: (phi, EngineReport)
        :raises NoEmbeddingFound: When every route and the fallback fail
        :raises InternalCheckFailure: When the result fails verification
        """
        report = EngineReport()
        start = time.perf_counter()
        theta = self.check_hypotheses(guest, host)
        report.timed("hypotheses", start)
        report.diagnostics["theta"] = theta
        phi = None
        if theta <= 5:
            phi = self.__run_route(guest, host, theta, report)
        if phi is None:
            if not self.__config.fallback:
                raise NoEmbeddingFound("constructive routes failed and the "
                                       "fallback is disabled")
            phi = self.__fallback(guest, host, report)
        start = time.perf_counter()
        ok, violation = verify(guest, host, phi)
        report.timed("verify", start)
        report.verified = ok
        if not ok:
            raise InternalCheckFailure(f"route {report.route} produced an "
                                       f"invalid map: {violation}",
                                       violation)
        self.__log(1, f"Embedded n={guest.n} via {report.route}")
        return phi, report

    def __run_route(self, guest, host, theta, report):
        if theta <= 3:
            route, runner = "<=3", self.hamilton_route
        elif theta == 4:
            route, runner = "4", self.square_path_route
        else:
            route, runner = None, self.theta5_route
        start = time.perf_counter()
        try:
            found = runner(guest, host, report)
        except (StepFailure, HypothesisViolation, MatchingError,
                PipelineFailure) as e:
            name = route or report.route or "5"
            report.failures.append((name, str(e)))
            report.timed(f"route {name}", start)
            self.__log(2, f"Route {name} failed: {e}")
            return None
        if route is not None:
            report.route = route
        report.timed(f"route {report.route}", start)
        return found

    def hamilton_route(self, guest, host, report):
        """
        Components (paths on at most three vertices) laid consecutively
        along a Hamilton cycle of the host.
        """
        cycle = hamilton_cycle(host, self.__config.search_budget)
        if cycle is None:
            raise StepFailure("hamilton", "host has no Hamilton cycle")
        order = []
        for part in components(guest):
            order.extend(_walk_path(guest, part))
        phi = {x: cycle[k] for k, x in enumerate(order)}
        self.__trace(report, "<=3", phi)
        return phi

    def square_path_route(self, guest, host, report):
        """
        Guest laid into P_n^2, composed with a square path of the host.
        """
        layout = layout_into_path_square(guest)
        order = square_path(host, self.__config.search_budget)
        if order is None:
            raise StepFailure("square-path", "host has no square path")
        phi = {x: order[k] for k, x in enumerate(layout.order)}
        self.__trace(report, "4", phi)
        return phi

    def theta5_route(self, guest, host, report):
        """
        Triangular extremality of the guest against (eta, 3)-extremality
        of the host.
        """
        config = self.__config
        extremality = triangle_extremality(guest, config.nu)
        report.diagnostics["triangles"] = extremality.triangle_count
        report.diagnostics["triangular_extreme"] = extremality.is_extreme
        if not extremality.is_extreme:
            report.route = "5-nonextreme"
            return self.decomposition_route(guest, host, report)
        found = classify_case(host, config)
        if found is None and self.__case is None:
            report.route = "5-nonextremal-host"
            return self.remainder_route(guest, host, extremality, report)
        case_id = self.__case or found[0]
        report.route = f"5-extreme-case{case_id}"
        self.__log(1, f"Host classified as case {found[0] if found else None}")
        state = case_embed(guest, host, config, self.__case)
        report.trace.extend(state.trace)
        report.diagnostics["case"] = {"branch": state.branch,
                                      "details": state.diagnostics}
        return dict(state.phi)

    def remainder_route(self, guest, host, extremality, report):
        """
        Place H' = H - V_delta by exact search, then cover the vacant
        vertices with a triangle factor taking the triangles of V_delta.
        Retried with a fresh search order on failure.
        """
        config = self.__config
        hprime, ids = guest_remainder(guest, extremality)
        triangles = [t for t in extremality.triangles
                     if all(v in extremality.vdelta for v in t)]
        for attempt in range(max(config.retries, 1)):
            placed = guided_embed(hprime, host, budget=config.search_budget,
                                  seed=config.seed + attempt)
            if placed is None:
                raise StepFailure("remainder", "H' does not embed")
            used = set(placed.values())
            vacant = [v for v in host.vertices() if v not in used]
            factor = triangle_factor(host, vacant, config.search_budget)
            if factor is None or len(factor.triangles) < len(triangles):
                self.__log(2, f"Vacant remainder has no factor, retry "
                              f"{attempt + 1}")
                continue
            phi = {ids[x]: v for x, v in placed.items()}
            for guest_triangle, host_triangle in zip(triangles,
                                                     factor.triangles):
                phi.update(zip(guest_triangle, host_triangle))
            report.diagnostics["remainder_attempts"] = attempt + 1
            self.__trace(report, "5-nonextremal-host", phi)
            return phi
        raise StepFailure("remainder", f"no factorable placement in "
                          f"{config.retries} attempts")

    def decomposition_route(self, guest, host, report):
        """
        Components of H - I placed by backtracking, then I completed by one
        bipartite matching onto vacant common neighborhoods.
        """
        config = self.__config
        dec = decompose(guest, config.nu, config.seed)
        core, ids = guest.induced(sorted(set(guest.vertices()) - dec.I))
        for attempt in range(max(config.retries, 1)):
            placed = guided_embed(core, host, budget=config.search_budget,
                                  seed=config.seed + attempt)
            if placed is None:
                raise StepFailure("decomposition", "H - I does not embed")
            partial = {ids[x]: v for x, v in placed.items()}
            phi = match_remaining(guest, host, partial, dec.I)
            if phi is not None:
                report.diagnostics["decomposition_attempts"] = attempt + 1
                self.__trace(report, "5-nonextreme", phi)
                return phi
            self.__log(2, f"I can not be completed, retry {attempt + 1}")
        raise StepFailure("decomposition", f"I not completed in "
                          f"{config.retries} attempts")

    def __fallback(self, guest, host, report):
        start = time.perf_counter()
        report.route = "fallback"
        self.__log(1, "Running the exact fallback")
        if guest.n <= ORACLE_LIMIT:
            phi = oracle_embed(guest, host)
        else:
            try:
                phi = guided_embed(guest, host,
                                   budget=20 * self.__config.search_budget)
            except SearchBudgetExhausted as e:
                report.timed("fallback", start)
                raise NoEmbeddingFound(f"fallback gave up: {e}")
        report.timed("fallback", start)
        if phi is None:
            raise NoEmbeddingFound("the guest is not a subgraph of the host")
        self.__trace(report, "fallback", phi)
        return phi


def _walk_path(graph, part):
    """
    Vertices of a path component from one end, any order otherwise
    """
    ends = sorted(v for v in part if graph.degree(v) <= 1)
    if not ends:
        return sorted(part)
    order, seen = [ends[0]], {ends[0]}
    while True:
        nxt = [w for w in graph.neighbors(order[-1]) if w not in seen]
        if not nxt:
            break
        seen.add(nxt[0])
        order.append(nxt[0])
    order.extend(sorted(set(part) - seen))
    return order


def embed(guest, host, config=None):
    """
    Convenience wrapper around EmbedEngine

    :return: (phi, EngineReport)
    """
    return EmbedEngine(config).embed(guest, host)
