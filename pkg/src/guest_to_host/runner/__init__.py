#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
SPDX-FileCopyrightText: Siemens AG, 2020 Gaurav Mishra <mishra.gaurav@siemens.com>

SPDX-License-Identifier: MIT
"""
__author__ = 'Siemens AG'

from .embed_handler import EmbedEngine, EngineReport, embed, verify
from .embed_handler import oracle_embed, packing_bound_report
from .generators import GuestProfile, HostProfile, gen_guest, gen_host
from .generators import COMPONENT_KINDS, HOST_SHAPES
from .batch_handler import Instance, BatchResult, parse_corpus, parse_mix
from .batch_handler import batch_run, run_instance, default_workers
