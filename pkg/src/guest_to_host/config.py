#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
SPDX-FileCopyrightText: Siemens AG, 2020 Gaurav Mishra <mishra.gaurav@siemens.com>

SPDX-License-Identifier: MIT
"""
__author__ = "Siemens AG"


class EngineConfig:
    """
    Tunable constants and switches shared by every route of the engine

    :ivar eta: Extremality threshold of the host (A spans <= eta*C(|A|,2))
    :ivar mu: (mu,2)-extremality threshold of G[B] and the Case 1/2 cut
    :ivar nu: Triangular-extremality threshold of the guest
    :ivar alpha: Slack of the matching-or-partition dichotomy
    :ivar epsilon: Degree concentration slack of the K_{1,r}-factor split
    :ivar seed: Seed of every random choice
    :ivar force: Run even when the guarantee preconditions fail
    :ivar trace: Collect one trace line per placement
    :ivar verbose: Verbosity level (0-3)
    :ivar exact_limit: Largest n for exhaustive extremality search
    :ivar restarts: Local-search restarts for extremality certificates
    :ivar search_budget: Node budget of bounded exact searches
    :ivar retries: Retry budget of randomized splits
    :ivar fallback: Run the global exact search when a route fails
    """

    def __init__(self, eta=0.15, mu=0.3, nu=0.1, alpha=None, epsilon=0.1,
                 seed=0, force=False, trace=False, verbose=0):
        """
        Initializer for the class attributes.

        :param eta: Host extremality threshold
        :type eta: float
        :param mu: (mu,2)-extremality threshold
        :type mu: float
        :param nu: Guest triangular-extremality threshold
        :type nu: float
        :param alpha: Dichotomy slack, defaults to mu/10
        :type alpha: float
        :param epsilon: K_{1,r} split slack
        :type epsilon: float
        :param seed: Random seed
        :type seed: int
        :param force: Ignore failed guarantee preconditions
        :type force: boolean
        :param trace: Collect placement trace
        :type trace: boolean
        :param verbose: Verbosity level (0-3)
        :type verbose: int
        """
        self.__eta = self.__unit("eta", eta)
        self.__mu = self.__unit("mu", mu)
        self.__nu = self.__unit("nu", nu)
        self.__alpha = self.__unit("alpha", alpha) if alpha is not None \
            else self.__mu / 10
        self.__epsilon = self.__unit("epsilon", epsilon)
        self.__seed = int(seed)
        self.__force = bool(force)
        self.__trace = bool(trace)
        self.__verbose = int(verbose)
        self.__exact_limit = 20
        self.__restarts = 50
        self.__search_budget = 200000
        self.__retries = 20
        self.__fallback = True

    @staticmethod
    def __unit(name, value):
        value = float(value)
        if not 0 < value < 1:
            raise ValueError(f"{name} must lie in (0, 1), {value} passed")
        return value

    @property
    def eta(self):
        return self.__eta

    @property
    def mu(self):
        return self.__mu

    @property
    def nu(self):
        return self.__nu

    @property
    def alpha(self):
        return self.__alpha

    @property
    def epsilon(self):
        return self.__epsilon

    @property
    def seed(self):
        return self.__seed

    @property
    def force(self):
        return self.__force

    @property
    def trace(self):
        return self.__trace

    @property
    def verbose(self):
        return self.__verbose

    @property
    def exact_limit(self):
        return self.__exact_limit

    @property
    def restarts(self):
        return self.__restarts

    @property
    def search_budget(self):
        return self.__search_budget

    @property
    def retries(self):
        return self.__retries

    @property
    def fallback(self):
        return self.__fallback

    def update_thresholds(self, eta=None, mu=None, nu=None, alpha=None):
        """
        Update the extremality thresholds. Changing mu without alpha keeps
        alpha at mu/10.
        """
        if eta is not None:
            self.__eta = self.__unit("eta", eta)
        if nu is not None:
            self.__nu = self.__unit("nu", nu)
        if mu is not None:
            self.__mu = self.__unit("mu", mu)
            if alpha is None:
                self.__alpha = self.__mu / 10
        if alpha is not None:
            self.__alpha = self.__unit("alpha", alpha)

    def update_seed(self, seed):
        """
        Update the random seed

        :param seed: New seed
        :type seed: int
        """
        self.__seed = int(seed)

    def update_search_budget(self, budget):
        """
        Update the node budget of bounded searches

        :param budget: Positive node count
        :type budget: int
        """
        if budget < 1:
            raise ValueError(f"search budget must be positive, {budget} passed")
        self.__search_budget = int(budget)

    def update_retries(self, retries):
        """
        Update the retry budget of randomized splits
        """
        if retries < 0:
            raise ValueError(f"retries can not be negative, {retries} passed")
        self.__retries = int(retries)

    def update_exact_limit(self, limit):
        """
        Update the largest n searched exhaustively for extremality
        """
        self.__exact_limit = int(limit)

    def update_restarts(self, restarts):
        """
        Update the number of local-search restarts
        """
        if restarts < 1:
            raise ValueError(f"need at least one restart, {restarts} passed")
        self.__restarts = int(restarts)

    def update_verbose(self, verbose):
        """
        Update the verbosity level
        """
        self.__verbose = int(verbose)

    def enable_trace(self):
        """
        Update the flag to collect placement traces
        """
        self.__trace = True

    def enable_force(self):
        """
        Update the flag to ignore failed guarantee preconditions
        """
        self.__force = True

    def disable_fallback(self):
        """
        Update the flag to skip the global exact fallback
        """
        self.__fallback = False

    def to_dict(self):
        """
        Plain dict of every setting, for reports
        """
        return {
            "eta": self.__eta, "mu": self.__mu, "nu": self.__nu,
            "alpha": self.__alpha, "epsilon": self.__epsilon,
            "seed": self.__seed, "force": self.__force,
            "trace": self.__trace, "exact_limit": self.__exact_limit,
            "restarts": self.__restarts,
            "search_budget": self.__search_budget,
            "retries": self.__retries, "fallback": self.__fallback
        }
