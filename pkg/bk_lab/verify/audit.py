#!/usr/bin/env python3
"""
Configuration auditor: literal evaluation of the structural predicates that hold around a vertex u of a
smallest counterexample, on a concrete colouring of G-u in launch configuration (k-1 unique colours A_i on N(u)
plus one pair X, Y sharing the remaining colour p).

For a vertex v, a j-vertex of v is a neighbour of v other than u coloured j.

  opening  every A_i has a j-vertex for every other unique colour j
  condA    for non-adjacent A_i, A_j there is no m with A_m the only m-vertex of both
  condB    non-adjacent A_i, A_j have at most two common neighbours among the A_k
  condC    every A_i is non-adjacent to at most three other A_k
  condC_inference  every A_i is adjacent to at least three other A_k
  caseI    at most two A_i are non-adjacent to both X and Y
  caseII   same statement as the opening, evaluated when all A_i are pairwise adjacent
  caseIII  X and Y each have a k-vertex for every unique colour k
  caseIV   X and Y are each adjacent to at least omega-5 of the A_i
  caseV    neither X nor Y is the only p-vertex of any A_i

condA..condC apply when some pair of unique vertices is non-adjacent (case_1), caseI..caseV when all of them are
pairwise adjacent (case_2); the predicates of the other case are reported as vacuous.
"""

import collections
import logging
from typing import Dict, List, Optional

from bk_lab.coloring.coloring import UNASSIGNED, Coloring
from bk_lab.graphs.graph import Graph
from bk_lab.graphs.structure import clique_number
from bk_lab.kempe.palette import PaletteProfile, is_launch_configuration, palette_profile
from bk_lab.utils.bits import iter_bits, popcount

logger = logging.getLogger(__name__)

NOT_APPLICABLE = "NOT_APPLICABLE"
CASE_1 = "case_1"
CASE_2 = "case_2"

CASE_1_PREDICATES = ("condA", "condB", "condC", "condC_inference")
CASE_2_PREDICATES = ("caseI", "caseII", "caseIII", "caseIV", "caseV")

Verdict = collections.namedtuple("Verdict", ["holds", "witness", "vacuous"])

HOLDS = Verdict(True, None, False)
VACUOUS = Verdict(True, None, True)


def _violated(*witness) -> Verdict:
    return Verdict(False, tuple(witness), False)


class ConfigAudit(object):
    def __init__(self, center: int, applicable: bool, reason: str = None, case: str = None, pair_color: int = None):
        self.center = center
        self.applicable = applicable
        self.reason = reason
        self.case = case
        self.pair_color = pair_color
        self.verdicts = collections.OrderedDict()  # type: Dict[str, Verdict]

    @property
    def all_hold(self) -> bool:
        return all(v.holds for v in self.verdicts.values())

    def to_dict(self) -> Dict:
        if not self.applicable:
            return {"center": self.center, "status": NOT_APPLICABLE, "reason": self.reason}
        return {
            "center": self.center,
            "status": "APPLICABLE",
            "case": self.case,
            "pair_color": self.pair_color,
            "verdicts": {
                name: {
                    "holds": v.holds,
                    "vacuous": v.vacuous,
                    "witness": list(v.witness) if v.witness is not None else None,
                }
                for name, v in self.verdicts.items()
            },
        }

    def to_lines(self) -> List[str]:
        if not self.applicable:
            return ["center {}: {} ({})".format(self.center, NOT_APPLICABLE, self.reason)]
        lines = ["center {}: {} pair colour {}".format(self.center, self.case, self.pair_color)]
        for name, v in self.verdicts.items():
            if v.vacuous:
                status = "vacuous"
            elif v.holds:
                status = "holds"
            else:
                status = "violated witness={}".format(list(v.witness))
            lines.append("  {:<16} {}".format(name, status))
        return lines


class _Configuration(object):
    def __init__(self, g: Graph, c: Coloring, u: int, profile: PaletteProfile):
        self.g = g
        self.c = c
        self.u = u
        self.uniques = profile.unique_vertices  # colour -> A_i
        (self.pair_color, pair), = profile.repeat_colors.items()
        self.x, self.y = pair.to_list()
        self.class_bits = {color: c.class_bits(color) for color in range(1, c.k + 1)}

    def colored_neighbors(self, v: int, j: int) -> int:
        """The j-vertices of v."""
        return self.g.adj[v] & ~(1 << self.u) & self.class_bits[j]

    def only_vertex(self, v: int, j: int) -> Optional[int]:
        bits = self.colored_neighbors(v, j)
        return bits.bit_length() - 1 if popcount(bits) == 1 else None

    def adjacent(self, v: int, w: int) -> bool:
        return bool(self.g.adj[v] >> w & 1)

    def nonadjacent_unique_pairs(self):
        colors = sorted(self.uniques)
        for a, i in enumerate(colors):
            for j in colors[a + 1 :]:
                if not self.adjacent(self.uniques[i], self.uniques[j]):
                    yield i, j


def _opening(cfg: _Configuration) -> Verdict:
    for i, a_i in sorted(cfg.uniques.items()):
        for j in sorted(cfg.uniques):
            if j != i and not cfg.colored_neighbors(a_i, j):
                return _violated(i, j)
    return HOLDS


def _cond_a(cfg: _Configuration) -> Verdict:
    for i, j in cfg.nonadjacent_unique_pairs():
        for m, a_m in sorted(cfg.uniques.items()):
            if m in (i, j):
                continue
            if cfg.only_vertex(cfg.uniques[i], m) == a_m and cfg.only_vertex(cfg.uniques[j], m) == a_m:
                return _violated(i, j, m)
    return HOLDS


def _cond_b(cfg: _Configuration) -> Verdict:
    for i, j in cfg.nonadjacent_unique_pairs():
        common = [
            k
            for k, a_k in sorted(cfg.uniques.items())
            if k not in (i, j) and cfg.adjacent(cfg.uniques[i], a_k) and cfg.adjacent(cfg.uniques[j], a_k)
        ]
        if len(common) > 2:
            return _violated(i, j, *common)
    return HOLDS


def _others(cfg: _Configuration, i: int, adjacent: bool) -> List[int]:
    a_i = cfg.uniques[i]
    return [k for k, a_k in sorted(cfg.uniques.items()) if k != i and cfg.adjacent(a_i, a_k) == adjacent]


def _cond_c(cfg: _Configuration) -> Verdict:
    for i in sorted(cfg.uniques):
        far = _others(cfg, i, adjacent=False)
        if len(far) > 3:
            return _violated(i, *far)
    return HOLDS


def _cond_c_inference(cfg: _Configuration) -> Verdict:
    for i in sorted(cfg.uniques):
        near = _others(cfg, i, adjacent=True)
        if len(near) < 3:
            return _violated(i, len(near))
    return HOLDS


def _case_i(cfg: _Configuration) -> Verdict:
    far = [
        i
        for i, a_i in sorted(cfg.uniques.items())
        if not cfg.adjacent(a_i, cfg.x) and not cfg.adjacent(a_i, cfg.y)
    ]
    if len(far) > 2:
        return _violated(*far)
    return HOLDS


def _case_iii(cfg: _Configuration) -> Verdict:
    for v in (cfg.x, cfg.y):
        for k in sorted(cfg.uniques):
            if not cfg.colored_neighbors(v, k):
                return _violated(v, k)
    return HOLDS


def _case_iv(cfg: _Configuration) -> Verdict:
    omega, _ = clique_number(cfg.g)
    needed = omega - 5
    unique_bits = 0
    for a_i in cfg.uniques.values():
        unique_bits |= 1 << a_i
    for v in (cfg.x, cfg.y):
        count = popcount(cfg.g.adj[v] & unique_bits)
        if count < needed:
            return _violated(v, count, needed)
    return HOLDS


def _case_v(cfg: _Configuration) -> Verdict:
    for v in (cfg.x, cfg.y):
        for i, a_i in sorted(cfg.uniques.items()):
            if cfg.only_vertex(a_i, cfg.pair_color) == v:
                return _violated(v, i)
    return HOLDS


def audit_config(g: Graph, c: Coloring, u: int) -> ConfigAudit:
    """
    :param c: proper total colouring of G-u; its palette size c.k plays the role of Delta-1. A colour on u itself
        is dropped, and when it was the top colour the palette shrinks to the largest colour on G-u.
    :return: NOT_APPLICABLE audit unless N(u) is in launch configuration, else every verdict
    """
    g._check_vertex(u)
    if c.n != g.n:
        raise ValueError("colouring has {} entries for a graph on {} vertices".format(c.n, g.n))
    centre = c.color(u)
    if centre != UNASSIGNED:
        rest = max((color for v, color in enumerate(c.assignment) if v != u), default=0)
        k = rest if c.k == centre and centre > rest else c.k
        logger.info("ignoring colour %d on centre %d, auditing with k=%d", centre, u, k)
        c = c.with_colors({u: UNASSIGNED}, k=k)
    profile = palette_profile(g, c, u)
    if not c.is_total(ignore=u):
        missing = [v for v in range(g.n) if v != u and c.color(v) == 0]
        raise ValueError("colouring of G-u leaves vertices {} uncoloured".format(missing))

    degree = popcount(g.adj[u])
    if not is_launch_configuration(profile, degree):
        if profile.missing_colors:
            reason = "colour {} is missing from N(u)".format(profile.missing_colors[0])
        else:
            reason = "N(u) has {} unique and {} repeat colours for degree {} and k={}".format(
                len(profile.unique_vertices), len(profile.repeat_colors), degree, c.k
            )
        return ConfigAudit(u, False, reason=reason)

    cfg = _Configuration(g, c, u, profile)
    case = CASE_1 if next(cfg.nonadjacent_unique_pairs(), None) is not None else CASE_2
    audit = ConfigAudit(u, True, case=case, pair_color=cfg.pair_color)
    audit.verdicts["opening"] = _opening(cfg)
    if case == CASE_1:
        audit.verdicts["condA"] = _cond_a(cfg)
        audit.verdicts["condB"] = _cond_b(cfg)
        audit.verdicts["condC"] = _cond_c(cfg)
        audit.verdicts["condC_inference"] = _cond_c_inference(cfg)
        for name in CASE_2_PREDICATES:
            audit.verdicts[name] = VACUOUS
    else:
        for name in CASE_1_PREDICATES:
            audit.verdicts[name] = VACUOUS
        audit.verdicts["caseI"] = _case_i(cfg)
        audit.verdicts["caseII"] = audit.verdicts["opening"]
        audit.verdicts["caseIII"] = _case_iii(cfg)
        audit.verdicts["caseIV"] = _case_iv(cfg)
        audit.verdicts["caseV"] = _case_v(cfg)
    logger.debug("audit at u=%d: %s", u, "all hold" if audit.all_hold else "violations")
    return audit
