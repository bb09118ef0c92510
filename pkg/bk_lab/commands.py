#!/usr/bin/env python3
"""
The command line tools' bodies. Each cmd_* takes the tool's DictConfig and returns the process exit code:
0 success, 1 usage or input error, 2 bound violation found.
Data goes to cfg.output (standard output when unset), diagnostics go through logging.
"""

import contextlib
import json
import logging
import os
import sys
from typing import Dict, List

import hydra
from omegaconf import DictConfig

from bk_lab.coloring.brooks import brooks_color
from bk_lab.coloring.coloring import ImproperColoringError, PreconditionError, dsatur_color
from bk_lab.coloring.exact import EXACT_SOLVER_MAX_VERTICES, ScopeError, chromatic_number
from bk_lab.graphs.graph import Graph, GraphError
from bk_lab.graphs.graph6 import to_graph6
from bk_lab.graphs.structure import structure_summary
from bk_lab.kempe.palette import degree_floor
from bk_lab.kempe.tactics import DEFAULT_MAX_STATES, MIN_DELTA, bk_color
from bk_lab.utils.conf_utils import campaign_spec_from_cfg
from bk_lab.utils.data_utils import ingest_graph6_stream, load_graph, read_coloring_file
from bk_lab.verify.audit import audit_config
from bk_lab.verify.campaign import (
    MODE_STREAM,
    CampaignSpec,
    CampaignSpecError,
    format_summary,
    run_campaign,
    verify_graphs,
)
from bk_lab.verify.enumerate import IndependenceAtMost, enumerate_graphs

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_VIOLATION = 2

METHODS = ("exact", "bk", "brooks", "dsatur")


def _path(value: str) -> str:
    # hydra may have moved the working directory
    if value == "-":
        return value
    return hydra.utils.to_absolute_path(value)


def _input_path_or_inline(value: str) -> str:
    if not value:
        raise ValueError("input= is required (a graph6 file, '-' for standard input, or inline graph6)")
    resolved = _path(value)
    return resolved if resolved == "-" or os.path.exists(resolved) else value


@contextlib.contextmanager
def _output(cfg: DictConfig):
    path = cfg.get("output")
    if not path or path == "-":
        yield sys.stdout
        sys.stdout.flush()
        return
    with open(hydra.utils.to_absolute_path(path), "w", encoding="utf-8") as f:
        yield f


def _read_input_graphs(cfg: DictConfig):
    """:return: (graphs, number of malformed lines)"""
    value = _input_path_or_inline(cfg.get("input"))
    if value == "-" or os.path.exists(value):
        graphs, errors = [], 0
        for record in ingest_graph6_stream(value):
            if record.error is not None:
                logger.error("%s", record.error)
                errors += 1
            else:
                graphs.append(record.graph)
        return graphs, errors
    return [load_graph(value)], 0


def analyze(g: Graph) -> Dict:
    summary = structure_summary(g)
    delta = g.max_degree()
    chi = chromatic_number(g)[0] if g.n <= EXACT_SOLVER_MAX_VERTICES else None
    bound = max(delta - 1, summary.omega)
    hypothesis = summary.is_4k1_free and delta >= MIN_DELTA
    satisfied = None if chi is None else chi <= bound
    return {
        "graph6": to_graph6(g),
        "n": g.n,
        "edges": g.edge_count,
        "delta": delta,
        "alpha": summary.alpha,
        "omega": summary.omega,
        "chi": chi,
        "is_4k1_free": summary.is_4k1_free,
        "bound": bound,
        "holds": satisfied if hypothesis else None,
        "bound_satisfied": satisfied,
        "hypothesis": hypothesis,
        "below_degree_floor": degree_floor(g, delta - 1),
        "witness_independent_set": summary.witness_independent_set.to_list(),
        "witness_clique": summary.witness_clique.to_list(),
    }


def _write_records(out, records: List[Dict], fmt: str):
    if fmt == "json":
        out.write(json.dumps(records, sort_keys=True, indent=1) + "\n")
        return
    for record in records:
        out.write(" ".join("{}={}".format(k, json.dumps(v)) for k, v in record.items()) + "\n")


def cmd_analyze(cfg: DictConfig) -> int:
    try:
        graphs, errors = _read_input_graphs(cfg)
    except (GraphError, ValueError) as e:
        logger.error("%s", e)
        return EXIT_INPUT_ERROR
    records = [analyze(g) for g in graphs]
    with _output(cfg) as out:
        _write_records(out, records, cfg.format)
    logger.info("analyzed %d graphs, %d malformed lines", len(records), errors)
    return EXIT_INPUT_ERROR if errors else EXIT_OK


def color_graph(g: Graph, method: str, tactic_depth: int, max_states: int = DEFAULT_MAX_STATES):
    """:return: (coloring, traces)"""
    if method == "exact":
        return chromatic_number(g)[1], []
    if method == "dsatur":
        return dsatur_color(g), []
    if method == "brooks":
        return brooks_color(g), []
    if method == "bk":
        outcome = bk_color(g, tactic_depth, max_states)
        logger.info(
            "bk_color: %d colours, bound %d, outcome %s",
            outcome.coloring.num_colors,
            outcome.bound,
            outcome.tactic_outcome,
        )
        return outcome.coloring, outcome.traces
    raise ValueError("unknown method {!r}, expected one of {}".format(method, ", ".join(METHODS)))


def cmd_color(cfg: DictConfig) -> int:
    try:
        g = load_graph(_input_path_or_inline(cfg.input))
        coloring, traces = color_graph(
            g, cfg.method, cfg.tactic_depth, cfg.get("max_states") or DEFAULT_MAX_STATES
        )
    except PreconditionError as e:
        logger.error("%s refused: %s", cfg.method, e.reason)
        return EXIT_INPUT_ERROR
    except (GraphError, ScopeError, ValueError) as e:
        logger.error("%s", e)
        return EXIT_INPUT_ERROR

    with _output(cfg) as out:
        if cfg.format == "json":
            result = {"colors": coloring.num_colors, "coloring": coloring.to_list()}
            if cfg.trace:
                result["traces"] = [t.to_dict() for t in traces]
            out.write(json.dumps(result, sort_keys=True) + "\n")
        else:
            out.write("# colors: {}\n".format(coloring.num_colors))
            for v, color in enumerate(coloring.to_list()):
                out.write("{}: {}\n".format(v, color))
            if cfg.trace:
                for trace in traces:
                    for line in trace.to_lines():
                        out.write("# {}\n".format(line))
    return EXIT_OK


def cmd_verify(cfg: DictConfig) -> int:
    try:
        if cfg.get("input"):
            graphs, errors = _read_input_graphs(cfg)
            if errors:
                return EXIT_INPUT_ERROR
            spec = CampaignSpec(
                [],
                mode=MODE_STREAM,
                min_delta=cfg.min_delta,
                tactic_depth=cfg.tactic_depth,
                max_states=cfg.campaign.max_states,
                run_bk=cfg.campaign.run_bk,
                record_runtimes=cfg.campaign.record_runtimes,
            )
            report = verify_graphs(graphs, spec, jobs=cfg.jobs, progress=cfg.progress)
        else:
            spec = campaign_spec_from_cfg(cfg)
            checkpoint = hydra.utils.to_absolute_path(cfg.checkpoint) if cfg.get("checkpoint") else None
            report = run_campaign(spec, jobs=cfg.jobs, checkpoint=checkpoint, progress=cfg.progress)
    except (CampaignSpecError, ScopeError, GraphError) as e:
        logger.error("%s", e)
        return EXIT_INPUT_ERROR

    with _output(cfg) as out:
        out.write(report.to_json() if cfg.format == "json" else format_summary(report))
        out.write("\n")
    logger.info("campaign summary:\n%s", format_summary(report))
    if report.violations:
        logger.error("%d bound violations found", len(report.violations))
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_enumerate(cfg: DictConfig) -> int:
    if cfg.n is None:
        logger.error("n= is required")
        return EXIT_INPUT_ERROR
    pruning = IndependenceAtMost(cfg.alpha_max) if cfg.get("alpha_max") is not None else None
    count = 0
    try:
        with _output(cfg) as out:
            for g in enumerate_graphs(cfg.n, pruning):
                out.write(to_graph6(g) + "\n")
                count += 1
    except (ScopeError, ValueError) as e:
        logger.error("%s", e)
        return EXIT_INPUT_ERROR
    logger.info("%d graphs on %d vertices (pruning: %s)", count, cfg.n, pruning)
    return EXIT_OK


def cmd_audit(cfg: DictConfig) -> int:
    if cfg.center is None or not cfg.get("coloring_file"):
        logger.error("center= and coloring_file= are required")
        return EXIT_INPUT_ERROR
    try:
        g = load_graph(_input_path_or_inline(cfg.input))
        coloring = read_coloring_file(_path(cfg.coloring_file), g.n)
        audit = audit_config(g, coloring, cfg.center)
    except ImproperColoringError as e:
        logger.error("improper colouring: edge %s has both ends coloured %d", e.edge, e.color)
        return EXIT_INPUT_ERROR
    except (GraphError, ValueError) as e:
        logger.error("%s", e)
        return EXIT_INPUT_ERROR

    with _output(cfg) as out:
        if cfg.format == "json":
            out.write(json.dumps(audit.to_dict(), sort_keys=True, indent=1) + "\n")
        else:
            out.write("\n".join(audit.to_lines()) + "\n")
    return EXIT_OK
