#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
SPDX-FileCopyrightText: Siemens AG, 2020 Gaurav Mishra <mishra.gaurav@siemens.com>

SPDX-License-Identifier: MIT
"""
__author__ = "Siemens AG"

import json

import pytest

from guest_to_host.config import EngineConfig
from guest_to_host.exceptions import CorpusFormatError
from guest_to_host.runner import BatchResult
from guest_to_host.runner import Instance
from guest_to_host.runner import batch_run
from guest_to_host.runner import default_workers
from guest_to_host.runner import parse_corpus
from guest_to_host.runner import parse_mix
from guest_to_host.runner import GuestProfile
from guest_to_host.runner import HostProfile
from guest_to_host.runner import run_instance

CORPUS = """
# two random hosts and one tight one
2 host=random-min-degree n=9 guest=edge:1 seed=5
1 host=tight-CH n=9   # no guarantee here
"""


def row(instance_id, status, verified):
    return {"id": instance_id, "n": 9, "shape": "tight-CH", "seed": 0,
            "route": None, "verified": verified, "status": status,
            "error": None, "seconds": 0.1, "rss": 1024}


def test_parse_mix():
    assert parse_mix("triangle:2, edge") == {"triangle": 2.0, "edge": 1.0}
    assert parse_mix("") == {}


def test_parse_corpus():
    instances = parse_corpus(CORPUS)
    assert [i.instance_id for i in instances] == [0, 1, 2]
    assert [i.seed for i in instances] == [5, 6, 0]
    assert instances[0].guest.weights == {"edge": 1.0}
    assert instances[2].host.shape == "tight-CH"


@pytest.mark.parametrize("text, line_no", [
    ("x host=tight-CH n=9", 1),
    ("\n1 host=tight-CH", 2),
    ("1 host=hexagon n=9", 1),
    ("1 n=9 guest=ring:1", 1),
])
def test_parse_corpus_errors(text, line_no):
    with pytest.raises(CorpusFormatError) as info:
        parse_corpus(text)
    assert info.value.line_no == line_no


def test_run_instance_statuses():
    tight = Instance(0, GuestProfile(9), HostProfile(9, "tight-CH"), 0)
    found = run_instance(tight, EngineConfig())
    assert found["status"] == "hypothesis"
    assert not found["verified"]
    easy = Instance(1, GuestProfile(9), HostProfile(9), 3)
    found = run_instance(easy, EngineConfig())
    assert found["status"] == "ok"
    assert found["verified"]
    assert found["rss"] > 0


def test_exit_codes():
    assert BatchResult([row(0, "ok", True)]).exit_code() == 0
    assert BatchResult([row(0, "ok", True),
                        row(1, "hypothesis", False)]).exit_code() == 2
    assert BatchResult([row(1, "hypothesis", False),
                        row(0, "soundness", False)]).exit_code() == 1


def test_result_rendering():
    result = BatchResult([row(1, "hypothesis", False), row(0, "ok", True)])
    assert [r["id"] for r in result.rows] == [0, 1]
    assert result.summary["success_rate"] == 0.5
    assert "success rate 0.500" in result.to_table()
    lines = result.to_json_lines().splitlines()
    assert json.loads(lines[0])["id"] == 0
    assert json.loads(lines[-1])["summary"]["count"] == 2


def test_batch_run_in_parallel():
    instances = parse_corpus(CORPUS)
    result = batch_run(instances, workers=2)
    assert [r["id"] for r in result.rows] == [0, 1, 2]
    assert [r["status"] for r in result.rows] == ["ok", "ok", "hypothesis"]
    assert result.exit_code() == 2
    assert default_workers() >= 1
