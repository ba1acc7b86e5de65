#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
SPDX-FileCopyrightText: Siemens AG, 2020 Gaurav Mishra <mishra.gaurav@siemens.com>

SPDX-License-Identifier: MIT
"""
__author__ = "Siemens AG"

import functools
import json
import re
import sys

import click
from pkg_resources import get_distribution

from guest_to_host.config import EngineConfig
from guest_to_host.exceptions import GuestToHostError
from guest_to_host.exceptions import HypothesisViolation
from guest_to_host.exceptions import MatchingError
from guest_to_host.exceptions import NoEmbeddingFound
from guest_to_host.exceptions import OreDegreeViolation
from guest_to_host.exceptions import PipelineFailure
from guest_to_host.graph import classify_components
from guest_to_host.graph import complete_multipartite
from guest_to_host.graph import delta2
from guest_to_host.graph import format_edge_list
from guest_to_host.graph import min_degree_holds
from guest_to_host.graph import ore_degree
from guest_to_host.graph import read_edge_list
from guest_to_host.graph import write_edge_list
from guest_to_host.handlers import HallViolator
from guest_to_host.handlers import build_cluster_world
from guest_to_host.handlers import classify_case
from guest_to_host.handlers import decompose
from guest_to_host.handlers import decomposition_conditions
from guest_to_host.handlers import exceptional_sets
from guest_to_host.handlers import extremality_certificate
from guest_to_host.handlers import hamilton_cycle
from guest_to_host.handlers import k1r_factor
from guest_to_host.handlers import lambda1_matching
from guest_to_host.handlers import layout_into_path_square
from guest_to_host.handlers import marginal_uniformity
from guest_to_host.handlers import near_proportional_matching
from guest_to_host.handlers import build_lambda1
from guest_to_host.handlers import run_pipeline
from guest_to_host.handlers import square_path
from guest_to_host.handlers import strong_proportional_matching
from guest_to_host.handlers import triangle_extremality
from guest_to_host.handlers import triangle_factor
from guest_to_host.runner import EmbedEngine
from guest_to_host.runner import GuestProfile
from guest_to_host.runner import HostProfile
from guest_to_host.runner import HOST_SHAPES
from guest_to_host.runner import batch_run
from guest_to_host.runner import default_workers
from guest_to_host.runner import gen_guest
from guest_to_host.runner import gen_host
from guest_to_host.runner import oracle_embed
from guest_to_host.runner import packing_bound_report
from guest_to_host.runner import parse_corpus
from guest_to_host.runner import parse_mix
from guest_to_host.runner import verify as verify_map
from guest_to_host.runner.generators import COMPONENT_KINDS

HYPOTHESIS_EXIT = 2
SOUNDNESS_EXIT = 1


class SizeList(click.ParamType):
    """
    Understand comma separated size lists like 3,4,2
    """
    name = "sizes"

    def convert(self, value, param, ctx):
        if isinstance(value, (list, tuple)):
            return list(value)
        if not re.match(r"^\d+(,\d+)*$", value.strip()):
            self.fail(f"{value} not in <int>,<int>,... format", param, ctx)
        sizes = [int(v) for v in value.strip().split(",")]
        if any(v < 1 for v in sizes):
            self.fail(f"sizes must be positive, {value} provided", param, ctx)
        return sizes


class ComponentMix(click.ParamType):
    """
    Understand component mix weights like triangle:2,edge:1
    """
    name = "mix"

    def convert(self, value, param, ctx):
        if isinstance(value, dict):
            return value
        try:
            weights = parse_mix(value)
        except ValueError:
            self.fail(f"{value} not in <kind>:<weight>,... format", param,
                      ctx)
        unknown = [k for k in weights if k not in COMPONENT_KINDS]
        if unknown:
            self.fail(f"unknown component kinds {unknown}, choose from "
                      f"{', '.join(COMPONENT_KINDS)}", param, ctx)
        if any(w < 0 for w in weights.values()):
            self.fail(f"weights must be nonnegative, {value} provided",
                      param, ctx)
        return weights


def engine_options(func):
    """
    Options shared by every command that runs the engine
    """
    options = [
        click.option("-v", "--verbose", help="increase output verbosity "
                     "(-vvv for more verbosity)", count=True, default=0),
        click.option("--seed", help="seed of every random choice", default=0,
                     show_default=True, type=click.INT,
                     envvar="GUEST2HOST_SEED"),
        click.option("--eta", help="host extremality threshold",
                     default=0.15, show_default=True,
                     type=click.FloatRange(0, 1, min_open=True,
                                           max_open=True)),
        click.option("--mu", help="(mu,2)-extremality threshold",
                     default=0.3, show_default=True,
                     type=click.FloatRange(0, 1, min_open=True,
                                           max_open=True)),
        click.option("--nu", help="guest triangular-extremality threshold",
                     default=0.1, show_default=True,
                     type=click.FloatRange(0, 1, min_open=True,
                                           max_open=True)),
        click.option("--budget", help="node budget of bounded searches",
                     default=200000, show_default=True,
                     type=click.IntRange(1, None)),
        click.option("--force", help="run even when the guarantee "
                     "preconditions fail", is_flag=True, default=False),
        click.option("--trace", help="print one line per placement",
                     is_flag=True, default=False),
        click.option("--no-fallback", "no_fallback", help="do not run the "
                     "exact fallback when a route fails", is_flag=True,
                     default=False),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def build_config(verbose, seed, eta, mu, nu, budget, force, trace,
                 no_fallback):
    config = EngineConfig(eta=eta, mu=mu, nu=nu, seed=seed, force=force,
                          trace=trace, verbose=verbose)
    config.update_search_budget(budget)
    if no_fallback:
        config.disable_fallback()
    return config


def reports_errors(func):
    """
    Map library errors onto exit codes: 2 for hypothesis violations, 1 for
    soundness failures and I/O errors
    """
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (OreDegreeViolation, HypothesisViolation, NoEmbeddingFound,
                PipelineFailure, MatchingError) as e:
            click.echo(f"Hypothesis violation: {e}", err=True)
            sys.exit(HYPOTHESIS_EXIT)
        except (GuestToHostError, OSError) as e:
            click.echo(f"Error: {e}", err=True)
            sys.exit(SOUNDNESS_EXIT)
    return wrapper


def _write(text, output):
    if output is None:
        click.echo(text, nl=False)
    else:
        with open(output, "w", encoding="UTF-8") as handle:
            handle.write(text)


@click.group(context_settings=dict(help_option_names=["-h", "--help"]))
@click.version_option(get_distribution("guest_to_host").version)
def main():
    """
    guest2host embeds graphs of Ore-degree at most 5 into hosts of minimum
    degree at least 2n/3 and checks every step it takes.
    """


@main.command()
@click.argument("kind", type=click.Choice(["guest", "host"]))
@click.option("-n", "--order", "n", help="number of vertices", required=True,
              type=click.IntRange(0, None))
@click.option("--mix", help="guest component weights", default="edge:1",
              show_default=True, type=ComponentMix())
@click.option("--triangular", help="share of guest vertices in triangles",
              default=0.0, show_default=True, type=click.FloatRange(0, 1))
@click.option("--shape", help="host shape", default="random-min-degree",
              show_default=True, type=click.Choice(HOST_SHAPES))
@click.option("--delta", help="minimum degree of random-min-degree hosts "
              "[default: ceil(2n/3)]", default=None, type=click.INT)
@click.option("--noise", help="edge probability inside sparse blocks",
              default=0.0, show_default=True, type=click.FloatRange(0, 1))
@click.option("--planted", help="planted exceptional vertices", default=0,
              show_default=True, type=click.IntRange(0, None))
@click.option("--parts", help="emit the complete multipartite host with "
              "these part sizes instead of a shape", default=None,
              type=SizeList())
@click.option("--seed", help="generator seed", default=0, show_default=True,
              type=click.INT, envvar="GUEST2HOST_SEED")
@click.option("-o", "--output", help="edge-list file to write [default: "
              "stdout]", default=None, type=click.Path(dir_okay=False,
                                                       writable=True))
@reports_errors
def gen(kind, n, mix, triangular, shape, delta, noise, planted, parts, seed,
        output):
    """
    Generate a guest or a host edge list.
    """
    if kind == "guest":
        if parts is not None:
            raise click.BadOptionUsage("parts", "--parts only applies to "
                                       "hosts")
        graph = gen_guest(GuestProfile(n, mix, triangular), seed)
        comment = f"guest n={n} mix={mix} seed={seed}"
    elif parts is not None:
        if sum(parts) != n:
            raise click.BadOptionUsage("parts", f"parts sum to {sum(parts)}, "
                                       f"not {n}")
        graph = complete_multipartite(*parts)
        comment = f"host parts={parts}"
    else:
        if delta is not None and shape != "random-min-degree":
            raise click.BadOptionUsage("delta", "--delta only applies to "
                                       "random-min-degree hosts")
        graph = gen_host(HostProfile(n, shape, delta, noise, planted), seed)
        comment = f"host n={n} shape={shape} seed={seed}"
    if output is None:
        click.echo(format_edge_list(graph, [comment]), nl=False)
    else:
        write_edge_list(graph, output, [comment])


@main.command()
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--eta", help="host extremality threshold", default=0.15,
              show_default=True, type=click.FloatRange(0, 1, min_open=True,
                                                       max_open=True))
@click.option("--nu", help="guest triangular-extremality threshold",
              default=0.1, show_default=True,
              type=click.FloatRange(0, 1, min_open=True, max_open=True))
@reports_errors
def analyze(graph_file, eta, nu):
    """
    Print degree statistics, the component census and extremality flags.
    """
    graph = read_edge_list(graph_file)
    theta = ore_degree(graph)
    pairs = delta2(graph)
    click.echo(f"n: {graph.n}")
    click.echo(f"m: {graph.m}")
    click.echo(f"min degree: {graph.min_degree()}")
    click.echo(f"max degree: {graph.max_degree()}")
    click.echo(f"theta: {theta}")
    click.echo(f"delta2: {pairs if pairs is not None else 'complete'}")
    census = {}
    for _, kind in classify_components(graph):
        census[repr(kind)] = census.get(repr(kind), 0) + 1
    for name, count in sorted(census.items()):
        click.echo(f"component {name}: {count}")
    click.echo(f"dirac: {min_degree_holds(graph, 1, 2)}")
    click.echo(f"ore: {pairs is None or pairs >= graph.n}")
    click.echo(f"corradi-hajnal: {min_degree_holds(graph, 2, 3)}")
    if theta <= 5:
        extremality = triangle_extremality(graph, nu)
        click.echo(f"triangles: {extremality.triangle_count}")
        click.echo(f"triangular extreme: {extremality.is_extreme}")
    certificate = extremality_certificate(graph, 3, eta) \
        if graph.n >= 3 else None
    if certificate is None:
        click.echo("(eta,3)-extremal: False")
    else:
        click.echo(f"(eta,3)-extremal: True ({certificate.internal_edges} "
                   f"edges inside {sorted(certificate.A)})")


@main.command(name="decompose")
@click.argument("guest_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--nu", help="guest triangular-extremality threshold",
              default=0.1, show_default=True,
              type=click.FloatRange(0, 1, min_open=True, max_open=True))
@click.option("--seed", help="seed of the Ihat split", default=0,
              show_default=True, type=click.INT, envvar="GUEST2HOST_SEED")
@reports_errors
def decompose_cmd(guest_file, nu, seed):
    """
    Print the independent-set decomposition of a guest as JSON.
    """
    guest = read_edge_list(guest_file)
    dec = decompose(guest, nu, seed)
    document = dec.to_dict()
    document["conditions"] = decomposition_conditions(guest, dec.I)
    click.echo(json.dumps(document, indent=2, sort_keys=True))


@main.command()
@click.argument("host_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--stars", help="find a K_{1,r}-factor with this r instead",
              default=None, type=click.IntRange(1, None))
@click.option("--budget", help="node budget of the search", default=200000,
              show_default=True, type=click.IntRange(1, None))
@click.option("--seed", help="seed of the star splits", default=0,
              show_default=True, type=click.INT, envvar="GUEST2HOST_SEED")
@reports_errors
def factor(host_file, stars, budget, seed):
    """
    Print a triangle factor as one triple per line, or Absent.
    """
    host = read_edge_list(host_file)
    if stars is not None:
        found = k1r_factor(host, stars, seed)
        if found is None:
            click.echo("Absent")
            return
        for star in found:
            click.echo(f"{star.center}: {' '.join(map(str, star.leaves))}")
        return
    found = triangle_factor(host, budget=budget)
    if found is None:
        click.echo("Absent")
        return
    for triangle in found.triangles:
        click.echo(" ".join(map(str, triangle)))


@main.command()
@click.argument("host_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--square", help="print a square path instead", is_flag=True,
              default=False)
@click.option("--budget", help="node budget of the search", default=200000,
              show_default=True, type=click.IntRange(1, None))
@reports_errors
def hamilton(host_file, square, budget):
    """
    Print a Hamilton cycle (or a square path) as a vertex sequence.
    """
    host = read_edge_list(host_file)
    order = square_path(host, budget) if square else \
        hamilton_cycle(host, budget)
    click.echo("Absent" if order is None else " ".join(map(str, order)))


@main.command()
@click.argument("guest_file", type=click.Path(exists=True, dir_okay=False))
@reports_errors
def layout(guest_file):
    """
    Print an order of a theta <= 4 guest inside the square of a path.
    """
    guest = read_edge_list(guest_file)
    click.echo(" ".join(map(str, layout_into_path_square(guest).order)))


@main.command()
@click.argument("host_file", type=click.Path(exists=True, dir_okay=False))
@engine_options
@reports_errors
def extremal(host_file, verbose, seed, eta, mu, nu, budget, force, trace,
             no_fallback):
    """
    Print the (eta,3)-certificate, the case partition and the exceptional
    set sizes, or non-extremal.
    """
    config = build_config(verbose, seed, eta, mu, nu, budget, force, trace,
                          no_fallback)
    host = read_edge_list(host_file)
    found = classify_case(host, config)
    if found is None:
        click.echo("non-extremal")
        return
    case_id, partition = found
    click.echo(f"case: {case_id}")
    for name, block in zip(("A", "B", "C") if case_id == 3 else
                           ("A", "B1", "B2") if case_id == 2 else ("A", "B"),
                           partition):
        click.echo(f"{name}: {' '.join(map(str, sorted(block)))}")
    sets = exceptional_sets(host, partition, case_id, config.eta, config.mu)
    click.echo(f"{'set':<8} {'size':>6}")
    for name, size in sorted(sets.sizes().items()):
        click.echo(f"{name:<8} {size:>6}")
    for name, ok in sorted(sets.claims.items()):
        click.echo(f"claim {name}: {ok}")


def _print_matching(matching):
    if isinstance(matching, HallViolator):
        click.echo(f"Hall violator: {sorted(matching.vertices)}")
        sys.exit(HYPOTHESIS_EXIT)
    for pair, cluster in sorted(matching.assignment.items()):
        click.echo(f"{pair} -> {cluster}")


@main.command(name="lambda1")
@click.argument("reduced_file", type=click.Path(exists=True, dir_okay=False))
@click.option("-d", "--density", help="density parameter d", default=0.01,
              show_default=True, type=click.FloatRange(0, 1))
@reports_errors
def lambda1_cmd(reduced_file, density):
    """
    Print the proportional matching of Lambda1 as pair -> cluster lines
    (near-proportional when the cluster count is even).
    """
    reduced = read_edge_list(reduced_file)
    if reduced.n % 2:
        matching = lambda1_matching(reduced, density)
    else:
        matching = near_proportional_matching(build_lambda1(reduced).bipartite)
    _print_matching(matching)


@main.command()
@click.argument("reduced_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--mu", help="copy parameter mu", default=0.3,
              show_default=True, type=click.FloatRange(0, 1, min_open=True,
                                                       max_open=True))
@click.option("--seed", help="seed of the spot checks", default=0,
              show_default=True, type=click.INT, envvar="GUEST2HOST_SEED")
@reports_errors
def propmatch(reduced_file, mu, seed):
    """
    Print the strong proportional matching of Lambda2 as
    (pair, copy) -> cluster lines.
    """
    reduced = read_edge_list(reduced_file)
    _print_matching(strong_proportional_matching(reduced, mu, seed))


@main.command()
@click.option("-l", "--ell", help="number of clusters", default=6,
              show_default=True, type=click.IntRange(3, None))
@click.option("-m", "--cluster-size", "m", help="cluster size", default=500,
              show_default=True, type=click.IntRange(1, None))
@click.option("-d", "--density", help="density parameter d", default=0.05,
              show_default=True, type=click.FloatRange(0, 1))
@click.option("--eps", help="regularity parameter", default=0.005,
              show_default=True, type=click.FloatRange(0, 1))
@click.option("--delta", help="buffer fraction per cluster", default=0.02,
              show_default=True, type=click.FloatRange(0, 1))
@click.option("--mix", help="guest component weights", default="path:1",
              show_default=True, type=ComponentMix())
@click.option("--trials", help="seeded runs for the uniformity statistics",
              default=0, show_default=True, type=click.IntRange(0, None))
@engine_options
@reports_errors
def pipeline(ell, m, density, eps, delta, mix, trials, verbose, seed, eta,
             mu, nu, budget, force, trace, no_fallback):
    """
    Run the cluster assignment pipeline on a synthetic world and print the
    condition report and balance statistics.
    """
    config = build_config(verbose, seed, eta, mu, nu, budget, force, trace,
                          no_fallback)
    world = build_cluster_world(ell, m, density, eps, delta, seed=seed)
    guest = gen_guest(GuestProfile(world.n, mix), seed)
    run = run_pipeline(guest, world, config, seed)
    summary = run.summary
    click.echo(f"clusters: {world.ell}, cluster size: {world.m}, "
               f"n: {world.n}, V0: {world.v0_size}")
    click.echo(f"deviation: {summary['deviation']:.2f} (bound "
               f"{summary['bound']:.2f})")
    click.echo(f"switches: {summary['swaps']}, moves: {summary['moves']}, "
               f"fictive: {summary['fictive']}")
    click.echo(f"{'condition':<10} {'ok':<6}")
    for name, entry in sorted(run.report.to_dict().items()):
        click.echo(f"{name:<10} {str(entry['ok']):<6}")
    if trials:
        stats = marginal_uniformity(guest, world, trials, seed, config)
        for name, entry in sorted(stats.items()):
            click.echo(f"uniformity {name}: p={entry['pvalue']:.4f}")
    if run.report.failing():
        sys.exit(SOUNDNESS_EXIT)


def _phi_lines(phi):
    return "".join(f"phi: {x} -> {phi[x]}\n" for x in sorted(phi))


@main.command()
@click.option("-H", "--guest", "guest_file", help="guest edge list",
              required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("-G", "--host", "host_file", help="host edge list",
              required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--case", help="extremal case for triangular-extreme guests",
              default="auto", show_default=True,
              type=click.Choice(["auto", "1", "2", "3"]))
@click.option("--report", help="write the JSON report here [default: "
              "stdout]", default=None,
              type=click.Path(dir_okay=False, writable=True))
@engine_options
@reports_errors
def embed(guest_file, host_file, case, report, verbose, seed, eta, mu, nu,
          budget, force, trace, no_fallback):
    """
    Embed a guest into a host and print the map with its report.
    """
    config = build_config(verbose, seed, eta, mu, nu, budget, force, trace,
                          no_fallback)
    guest = read_edge_list(guest_file)
    host = read_edge_list(host_file)
    engine = EmbedEngine(config)
    if case != "auto":
        engine.update_case(int(case))
    phi, outcome = engine.embed(guest, host)
    click.echo(_phi_lines(phi), nl=False)
    for line in outcome.trace:
        click.echo(f"trace: {line}")
    document = json.dumps(outcome.to_dict(), sort_keys=True)
    if report is None:
        click.echo(f"report: {document}")
    else:
        _write(document + "\n", report)


def read_phi(path):
    """
    Read "phi: u -> v" or "u v" lines into a dict
    """
    phi = {}
    pattern = re.compile(r"^(?:phi:)?\s*(\d+)\s*(?:->)?\s*(\d+)\s*$")
    with open(path, "r", encoding="UTF-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            line = line.strip()
            if not line or line.startswith("#") or \
                    line.startswith("report:") or line.startswith("trace:"):
                continue
            match = pattern.match(line)
            if not match:
                raise click.BadParameter(f"line {line_no}: '{line}' is not "
                                         "a map line", param_hint="PHI")
            phi[int(match.group(1))] = int(match.group(2))
    return phi


@main.command()
@click.option("-H", "--guest", "guest_file", help="guest edge list",
              required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("-G", "--host", "host_file", help="host edge list",
              required=True, type=click.Path(exists=True, dir_okay=False))
@click.argument("phi_file", type=click.Path(exists=True, dir_okay=False))
@reports_errors
def verify(guest_file, host_file, phi_file):
    """
    Check a map file against a guest and a host.
    """
    guest = read_edge_list(guest_file)
    host = read_edge_list(host_file)
    ok, violation = verify_map(guest, host, read_phi(phi_file))
    if ok:
        click.echo("verified")
        return
    click.echo(f"not verified: {violation[0]} {violation[1]}", err=True)
    sys.exit(SOUNDNESS_EXIT)


@main.command()
@click.option("-H", "--guest", "guest_file", help="guest edge list",
              required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("-G", "--host", "host_file", help="host edge list",
              required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--packing-bound", help="also report the packing bound",
              is_flag=True, default=False)
@reports_errors
def oracle(guest_file, host_file, packing_bound):
    """
    Exhaustive embedding search, meant for n <= 10.
    """
    guest = read_edge_list(guest_file)
    host = read_edge_list(host_file)
    if packing_bound:
        click.echo(json.dumps(packing_bound_report(guest, host),
                              sort_keys=True))
    phi = oracle_embed(guest, host)
    if phi is None:
        click.echo("Absent")
        return
    click.echo(_phi_lines(phi), nl=False)


@main.command()
@click.argument("corpus_file", type=click.Path(exists=True, dir_okay=False))
@click.option("-w", "--workers", help="worker processes [default: physical "
              "cores]", default=None, type=click.IntRange(1, None),
              envvar="GUEST2HOST_WORKERS")
@click.option("--json", "json_output", help="write JSON lines here",
              default=None, type=click.Path(dir_okay=False, writable=True))
@engine_options
@reports_errors
def bench(corpus_file, workers, json_output, verbose, seed, eta, mu, nu,
          budget, force, trace, no_fallback):
    """
    Run a corpus of generated instances and print the results table.
    """
    config = build_config(verbose, seed, eta, mu, nu, budget, force, trace,
                          no_fallback)
    with open(corpus_file, "r", encoding="UTF-8") as handle:
        instances = parse_corpus(handle.read())
    if workers is None:
        workers = default_workers()
    result = batch_run(instances, config, workers, verbose)
    click.echo(result.to_table(), nl=False)
    if json_output is not None:
        _write(result.to_json_lines(), json_output)
    sys.exit(result.exit_code())


if __name__ == "__main__":
    main()
