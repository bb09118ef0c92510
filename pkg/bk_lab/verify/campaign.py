#!/usr/bin/env python3
"""
Verification campaigns: stream graphs (exhaustive enumeration or rejection sampling), check
chi(G) <= max(Delta-1, omega) exactly on each of them, run bk_color where the hypothesis applies and aggregate.
"""

import collections
import json
import logging
import os
import time
from functools import partial
from multiprocessing import Pool as ProcessPool
from typing import Dict, Iterable, Iterator, List, Optional

import jsonlines
import numpy as np
from filelock import FileLock, Timeout
from tqdm import tqdm

from bk_lab.coloring.exact import EXACT_SOLVER_MAX_VERTICES, chromatic_number
from bk_lab.graphs.graph import Graph
from bk_lab.graphs.graph6 import to_graph6
from bk_lab.graphs.structure import clique_number, is_4k1_free
from bk_lab.kempe.tactics import DEFAULT_MAX_STATES, DEFAULT_TACTIC_DEPTH, FAILED, MIN_DELTA, bk_color
from bk_lab.verify.enumerate import ENUMERATION_MAX_VERTICES, IndependenceAtMost, enumerate_graphs

logger = logging.getLogger(__name__)

CLASS_ALL = "all"
CLASS_4K1_FREE = "4k1_free"
CLASS_APEX = "4k1_free_with_apex"
CLASS_FILTERS = (CLASS_ALL, CLASS_4K1_FREE, CLASS_APEX)

MODE_EXHAUSTIVE = "exhaustive"
MODE_SAMPLE = "sample"
MODE_STREAM = "stream"
MODES = (MODE_EXHAUSTIVE, MODE_SAMPLE, MODE_STREAM)

SAMPLE_ATTEMPTS_PER_GRAPH = 1000


class CampaignSpecError(ValueError):
    pass


class CampaignSpec(
    collections.namedtuple(
        "CampaignSpec",
        [
            "n_values",
            "class_filter",
            "min_delta",
            "mode",
            "sample_count",
            "seed",
            "density",
            "tactic_depth",
            "max_states",
            "run_bk",
            "record_runtimes",
        ],
    )
):
    """
    Immutable description of a campaign; validated on construction.
    """

    __slots__ = ()

    def __new__(
        cls,
        n_values,
        class_filter: str = CLASS_4K1_FREE,
        min_delta: int = MIN_DELTA,
        mode: str = MODE_EXHAUSTIVE,
        sample_count: int = 0,
        seed: int = 0,
        density: float = 0.75,
        tactic_depth: int = DEFAULT_TACTIC_DEPTH,
        max_states: int = DEFAULT_MAX_STATES,
        run_bk: bool = True,
        record_runtimes: bool = False,
    ):
        if isinstance(n_values, int):
            n_values = (n_values,)
        spec = super().__new__(
            cls,
            tuple(int(n) for n in n_values),
            class_filter,
            int(min_delta),
            mode,
            int(sample_count),
            int(seed),
            float(density),
            int(tactic_depth),
            int(max_states),
            bool(run_bk),
            bool(record_runtimes),
        )
        spec._validate()
        return spec

    def _validate(self):
        if not self.n_values and self.mode != MODE_STREAM:
            raise CampaignSpecError("no vertex counts given")
        if self.class_filter not in CLASS_FILTERS:
            raise CampaignSpecError(
                "unknown class filter {!r}, expected one of {}".format(self.class_filter, ", ".join(CLASS_FILTERS))
            )
        if self.mode not in MODES:
            raise CampaignSpecError("unknown mode {!r}".format(self.mode))
        if self.tactic_depth < 0 or self.max_states < 1:
            raise CampaignSpecError("tactic_depth must be >= 0 and max_states >= 1")
        for n in self.n_values:
            if n < 0 or n > EXACT_SOLVER_MAX_VERTICES:
                raise CampaignSpecError("n={} is outside of the solver scope 0..{}".format(n, EXACT_SOLVER_MAX_VERTICES))
            if self.class_filter == CLASS_APEX and n < 1:
                raise CampaignSpecError("apex campaign needs n >= 1")
            if self.mode == MODE_EXHAUSTIVE and self.enumerated_order(n) > ENUMERATION_MAX_VERTICES:
                raise CampaignSpecError(
                    "exhaustive enumeration of {}-vertex graphs exceeds the enumeration scope of {} vertices".format(
                        self.enumerated_order(n), ENUMERATION_MAX_VERTICES
                    )
                )
        if self.mode == MODE_SAMPLE:
            if self.sample_count < 1:
                raise CampaignSpecError("sample mode needs sample_count >= 1")
            if not 0.0 < self.density < 1.0:
                raise CampaignSpecError("density must be in (0, 1), got {}".format(self.density))

    def enumerated_order(self, n: int) -> int:
        return n - 1 if self.class_filter == CLASS_APEX else n

    def to_dict(self) -> Dict:
        d = self._asdict()
        d["n_values"] = list(self.n_values)
        return dict(d)


def _random_graph(rng: np.random.Generator, n: int, density: float) -> Graph:
    upper = np.triu(rng.random((n, n)) < density, k=1)
    rows = []
    for v in range(n):
        row = 0
        for w in np.flatnonzero(upper[v] | upper[:, v]):
            row |= 1 << int(w)
        rows.append(row)
    return Graph._trusted(n, rows)


def sample_graphs(spec: CampaignSpec, n: int) -> Iterator[Graph]:
    """
    Rejection sampler: G(n, density) graphs (apexed G(n-1, density) for the apex class), accepted when they belong
    to the class and have max degree >= min_delta. Deterministic given (seed, n).
    """
    rng = np.random.default_rng([spec.seed, n])
    order = spec.enumerated_order(n)
    accepted = 0
    attempts = 0
    max_attempts = spec.sample_count * SAMPLE_ATTEMPTS_PER_GRAPH
    while accepted < spec.sample_count:
        if attempts >= max_attempts:
            logger.warning("sampler gave up at n=%d after %d attempts (%d accepted)", n, attempts, accepted)
            return
        attempts += 1
        g = _random_graph(rng, order, spec.density)
        if spec.class_filter == CLASS_APEX:
            g = g.add_apex()
        if g.max_degree() < spec.min_delta:
            continue
        if spec.class_filter != CLASS_ALL and not is_4k1_free(g):
            continue
        accepted += 1
        yield g
    logger.info("sampled %d graphs at n=%d in %d attempts", accepted, n, attempts)


def campaign_graphs(spec: CampaignSpec) -> Iterator[Graph]:
    if spec.mode == MODE_STREAM:
        raise CampaignSpecError("stream campaigns verify external graphs, use verify_graphs")
    for n in spec.n_values:
        if spec.mode == MODE_SAMPLE:
            yield from sample_graphs(spec, n)
        elif spec.class_filter == CLASS_APEX:
            for h in enumerate_graphs(n - 1, IndependenceAtMost(3)):
                yield h.add_apex()
        elif spec.class_filter == CLASS_4K1_FREE:
            yield from enumerate_graphs(n, IndependenceAtMost(3))
        else:
            yield from enumerate_graphs(n)


def verify_bound(g: Graph, spec: CampaignSpec) -> Dict:
    """
    Exact check of chi <= max(Delta-1, omega) on one graph. bk_color runs only when the hypothesis
    (4K1-free, Delta >= min_delta) holds. Outside it holds is None and bound_satisfied keeps the raw comparison.
    """
    start = time.perf_counter()
    delta = g.max_degree()
    omega, _ = clique_number(g)
    chi, _ = chromatic_number(g)
    free = is_4k1_free(g)
    hypothesis = free and delta >= spec.min_delta
    bound = max(delta - 1, omega)
    record = {
        "graph6": to_graph6(g),
        "n": g.n,
        "delta": delta,
        "omega": omega,
        "chi": chi,
        "bound": bound,
        "holds": chi <= bound if hypothesis else None,
        "bound_satisfied": chi <= bound,
        "is_4k1_free": free,
        "hypothesis": hypothesis,
        "violation": hypothesis and chi > bound,
        "tactic_outcome": None,
        "bk_colors": None,
        "bk_within_bound": None,
        "extension_attempts": 0,
        "extension_successes": 0,
        "launch_law_failures": 0,
    }
    if hypothesis and spec.run_bk:
        outcome = bk_color(g, spec.tactic_depth, spec.max_states, spec.min_delta)
        record["tactic_outcome"] = outcome.tactic_outcome
        record["bk_colors"] = outcome.coloring.num_colors
        record["bk_within_bound"] = outcome.within_bound
        record["extension_attempts"] = len(outcome.traces)
        record["extension_successes"] = sum(1 for t in outcome.traces if t.outcome != FAILED)
        record["launch_law_failures"] = sum(1 for e in outcome.extensions if e.launch_configuration is False)
    if spec.record_runtimes:
        record["runtime_ms"] = round((time.perf_counter() - start) * 1000.0, 3)
    return record


class VerificationReport(object):
    def __init__(self, spec: Optional[CampaignSpec], records: List[Dict]):
        self.spec = spec
        self.records = records
        self.aggregate = self._aggregate(records)

    @staticmethod
    def _aggregate(records: List[Dict]) -> Dict:
        attempts = sum(r["extension_attempts"] for r in records)
        successes = sum(r["extension_successes"] for r in records)
        outcomes = collections.Counter(r["tactic_outcome"] for r in records if r["tactic_outcome"] is not None)
        return {
            "graphs": len(records),
            "hypothesis_graphs": sum(1 for r in records if r["hypothesis"]),
            "holds": sum(1 for r in records if r["holds"] is True),
            "violations": [r["graph6"] for r in records if r["violation"]],
            "bk_runs": sum(outcomes.values()),
            "bk_outcomes": dict(sorted(outcomes.items())),
            "bk_out_of_bound": sum(1 for r in records if r["bk_within_bound"] is False),
            "extension_attempts": attempts,
            "extension_successes": successes,
            "tactic_success_rate": successes / attempts if attempts else None,
            "launch_law_failures": sum(r["launch_law_failures"] for r in records),
        }

    @property
    def violations(self) -> List[str]:
        return self.aggregate["violations"]

    def to_dict(self) -> Dict:
        return {
            "spec": self.spec.to_dict() if self.spec is not None else None,
            "records": self.records,
            "aggregate": self.aggregate,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=1)


def format_summary(report: VerificationReport) -> str:
    agg = report.aggregate
    rate = agg["tactic_success_rate"]
    rows = [
        ("graphs", agg["graphs"]),
        ("under hypothesis", agg["hypothesis_graphs"]),
        ("bound holds", agg["holds"]),
        ("violations", len(agg["violations"])),
        ("bk_color runs", agg["bk_runs"]),
    ]
    rows.extend(("  outcome " + name, count) for name, count in agg["bk_outcomes"].items())
    rows.extend(
        [
            ("bk_color out of bound", agg["bk_out_of_bound"]),
            ("extension attempts", agg["extension_attempts"]),
            ("tactic success rate", "n/a" if rate is None else "{:.4f}".format(rate)),
            ("launch law failures", agg["launch_law_failures"]),
        ]
    )
    width = max(len(name) for name, _ in rows)
    lines = ["{:<{}}  {}".format(name, width, value) for name, value in rows]
    lines.extend("VIOLATION {}".format(g6) for g6 in agg["violations"])
    return "\n".join(lines)


def _verify_all(graphs: Iterable[Graph], spec: CampaignSpec, jobs: int, progress: bool, done: Dict, writer=None):
    graphs = list(graphs)
    keys = [to_graph6(g) for g in graphs]
    todo = [g for g, key in zip(graphs, keys) if key not in done]
    logger.info("verifying %d graphs (%d already in checkpoint) with %d jobs", len(todo), len(graphs) - len(todo), jobs)

    worker = partial(verify_bound, spec=spec)
    if jobs > 1 and len(todo) > 1:
        processes = ProcessPool(processes=jobs)
        results = processes.imap(worker, todo, chunksize=max(1, min(64, len(todo) // (jobs * 4))))
    else:
        processes = None
        results = map(worker, todo)
    try:
        for record in tqdm(results, total=len(todo), disable=not progress):
            done[record["graph6"]] = record
            if writer is not None:
                writer.write(record)
            if record["violation"]:
                logger.error("bound violated on %s: chi=%d > %d", record["graph6"], record["chi"], record["bound"])
    finally:
        if processes is not None:
            processes.close()
            processes.join()
    return [done[key] for key in keys]


def verify_graphs(
    graphs: Iterable[Graph], spec: CampaignSpec, jobs: int = 1, progress: bool = False
) -> VerificationReport:
    """Verifies an external stream of graphs; class and mode of spec are ignored, min_delta and bk settings apply."""
    return VerificationReport(spec, _verify_all(graphs, spec, jobs, progress, {}))


def _load_checkpoint(path: str, spec: CampaignSpec) -> Dict:
    done = {}
    if not os.path.exists(path):
        return done
    with jsonlines.open(path, mode="r") as reader:
        for i, line in enumerate(reader):
            if i == 0:
                if line.get("spec") != spec.to_dict():
                    raise CampaignSpecError("checkpoint {} was written for a different campaign spec".format(path))
                continue
            done[line["graph6"]] = line
    logger.info("resuming from %s with %d records", path, len(done))
    return done


def run_campaign(
    spec: CampaignSpec, jobs: int = 1, checkpoint: str = None, progress: bool = False
) -> VerificationReport:
    """
    Deterministic given spec: records come out in stream order whatever the number of jobs, and records restored
    from a checkpoint are the ones a fresh run would compute.
    """
    graphs = campaign_graphs(spec)
    if checkpoint is None:
        return VerificationReport(spec, _verify_all(graphs, spec, jobs, progress, {}))

    try:
        with FileLock(checkpoint + ".lock", timeout=1):
            done = _load_checkpoint(checkpoint, spec)
            fresh = not os.path.exists(checkpoint) or os.path.getsize(checkpoint) == 0
            with jsonlines.open(checkpoint, mode="a", flush=True) as writer:
                if fresh:
                    writer.write({"spec": spec.to_dict()})
                records = _verify_all(graphs, spec, jobs, progress, done, writer)
    except Timeout:
        raise CampaignSpecError("checkpoint {} is locked by another campaign".format(checkpoint))
    return VerificationReport(spec, records)
