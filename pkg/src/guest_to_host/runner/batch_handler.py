#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
SPDX-FileCopyrightText: Siemens AG, 2020 Gaurav Mishra <mishra.gaurav@siemens.com>

SPDX-License-Identifier: MIT
"""
__author__ = "Siemens AG"

import json
import time
from multiprocessing import Pool

import numpy as np
import psutil

from guest_to_host.config import EngineConfig
from guest_to_host.exceptions import CorpusFormatError
from guest_to_host.exceptions import GuestToHostError
from guest_to_host.exceptions import HypothesisViolation
from guest_to_host.exceptions import InternalCheckFailure
from guest_to_host.exceptions import NoEmbeddingFound
from guest_to_host.exceptions import OreDegreeViolation
from guest_to_host.runner.embed_handler import EmbedEngine
from guest_to_host.runner.generators import GuestProfile
from guest_to_host.runner.generators import HostProfile
from guest_to_host.runner.generators import gen_guest
from guest_to_host.runner.generators import gen_host

HYPOTHESIS_ERRORS = (OreDegreeViolation, HypothesisViolation,
                     NoEmbeddingFound)


class Instance:
    """
    One generated (guest, host) pair of a corpus

    :ivar instance_id: Position in the corpus
    :ivar guest: GuestProfile
    :ivar host: HostProfile
    :ivar seed: Seed of both generators
    """

    def __init__(self, instance_id, guest, host, seed):
        self.instance_id = instance_id
        self.guest = guest
        self.host = host
        self.seed = seed


def parse_mix(text):
    """
    "triangle:2,edge:1" -> {"triangle": 2.0, "edge": 1.0}; a bare kind
    gets weight 1
    """
    weights = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        kind, _, weight = item.partition(":")
        weights[kind.strip()] = float(weight) if weight else 1.0
    return weights


def parse_corpus(text):
    """
    Parse a corpus document. Every non-blank line not starting with '#'
    reads

        <count> host=<shape> n=<n> [delta=<d>] [noise=<p>] [planted=<k>]
            [guest=<kind:w,...>] [triangular=<f>] [seed=<s>]

    and expands to ``count`` instances with seeds s, s+1, ...

    :rtype: list of Instance
    :raises CorpusFormatError: On a malformed line
    """
    instances = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        try:
            count = int(tokens[0])
            fields = dict(t.split("=", 1) for t in tokens[1:])
            n = int(fields["n"])
            host = HostProfile(n, fields.get("host", "random-min-degree"),
                               int(fields["delta"]) if "delta" in fields
                               else None,
                               float(fields.get("noise", 0.0)),
                               int(fields.get("planted", 0)))
            guest = GuestProfile(n, parse_mix(fields.get("guest", "edge")),
                                 float(fields.get("triangular", 0.0)))
            seed = int(fields.get("seed", 0))
        except (ValueError, KeyError, IndexError, GuestToHostError) as e:
            raise CorpusFormatError(f"can not parse '{line}': {e}", line_no)
        for k in range(count):
            instances.append(Instance(len(instances), guest, host, seed + k))
    return instances


def run_instance(instance, config):
    """
    Generate and embed one instance.

    :return: Result row; ``status`` is ok, hypothesis or soundness
    :rtype: dict
    """
    row = {"id": instance.instance_id, "n": instance.host.n,
           "shape": instance.host.shape, "seed": instance.seed,
           "route": None, "verified": False, "status": "ok", "error": None}
    start = time.perf_counter()
    try:
        guest = gen_guest(instance.guest, instance.seed)
        host = gen_host(instance.host, instance.seed)
        _, report = EmbedEngine(config).embed(guest, host)
        row["route"] = report.route
        row["verified"] = report.verified
        row["failures"] = [r for r, _ in report.failures]
    except HYPOTHESIS_ERRORS as e:
        row["status"] = "hypothesis"
        row["error"] = str(e)
    except (InternalCheckFailure, GuestToHostError, OSError) as e:
        row["status"] = "soundness"
        row["error"] = str(e)
    row["seconds"] = time.perf_counter() - start
    row["rss"] = psutil.Process().memory_info().rss
    return row


def _run_packed(packed):
    return run_instance(*packed)


def default_workers():
    """
    Physical core count, 1 when unknown
    """
    return psutil.cpu_count(logical=False) or 1


class BatchResult:
    """
    Rows of a batch run ordered by instance id, with the aggregate

    :ivar rows: List of result rows
    :ivar summary: Aggregate statistics
    """

    def __init__(self, rows):
        self.rows = sorted(rows, key=lambda r: r["id"])
        self.summary = summarize(self.rows)

    def exit_code(self):
        """
        0 when everything verified, 1 on any soundness failure, 2 when only
        hypothesis violations occurred
        """
        statuses = {r["status"] for r in self.rows}
        if "soundness" in statuses:
            return 1
        if "hypothesis" in statuses:
            return 2
        return 0

    def to_json_lines(self):
        lines = [json.dumps(r, sort_keys=True) for r in self.rows]
        lines.append(json.dumps({"summary": self.summary}, sort_keys=True))
        return "\n".join(lines) + "\n"

    def to_table(self):
        header = f"{'id':>4} {'n':>4} {'shape':<20} {'route':<20} " \
                 f"{'status':<10} {'seconds':>8}"
        lines = [header, "-" * len(header)]
        for r in self.rows:
            lines.append(f"{r['id']:>4} {r['n']:>4} {r['shape']:<20} "
                         f"{str(r['route']):<20} {r['status']:<10} "
                         f"{r['seconds']:>8.3f}")
        s = self.summary
        lines.append("-" * len(header))
        lines.append(f"instances {s['count']}, verified {s['verified']}, "
                     f"success rate {s['success_rate']:.3f}")
        if s["count"]:
            lines.append(f"time median {s['median']:.3f}s, mean "
                         f"{s['mean']:.3f}s, max {s['max']:.3f}s, peak RSS "
                         f"{s['peak_rss'] / 1048576:.1f} MiB")
        for route, rate in sorted(s["routes"].items()):
            lines.append(f"route {route}: {rate['verified']}/{rate['count']}")
        return "\n".join(lines) + "\n"


def summarize(rows):
    """
    Median, mean and max instance time, success rate overall and per
    route, peak RSS and the memory still available
    """
    times = np.array([r["seconds"] for r in rows], dtype=float)
    verified = sum(1 for r in rows if r["verified"])
    routes = {}
    for r in rows:
        name = r["route"] or r["status"]
        entry = routes.setdefault(name, {"count": 0, "verified": 0})
        entry["count"] += 1
        entry["verified"] += int(r["verified"])
    return {"count": len(rows), "verified": verified,
            "success_rate": verified / len(rows) if rows else 1.0,
            "median": float(np.median(times)) if rows else 0.0,
            "mean": float(times.mean()) if rows else 0.0,
            "max": float(times.max()) if rows else 0.0,
            "peak_rss": max((r["rss"] for r in rows), default=0),
            "available_memory": psutil.virtual_memory().available,
            "routes": routes}


def batch_run(instances, config=None, workers=1, verbose=0):
    """
    Run every instance, across a worker pool when ``workers`` > 1. Results
    are merged by instance id.

    :rtype: BatchResult
    """
    config = config if config is not None else EngineConfig()
    packed = [(instance, config) for instance in instances]
    if workers > 1 and len(packed) > 1:
        with Pool(processes=workers) as pool:
            rows = list(pool.imap_unordered(_run_packed, packed))
    else:
        rows = [_run_packed(p) for p in packed]
    if verbose > 0:
        print(f"Ran {len(rows)} instances on {workers} worker(s)")
    return BatchResult(rows)
