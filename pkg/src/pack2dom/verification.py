"""Claim checking over graph corpora, with per-graph and aggregate reports.

Each graph gets a flag per claim: "pass", "fail", or "na" when the claim's
applicability filter does not hold (the filters are part of what is being
verified, so NA counts are reported rather than hidden).

Claims and their applicability filters:

========== ============================================== =====================
claim id   applicability                                  pass condition
========== ============================================== =====================
eq1        no isolated vertices                           gamma <= beta
eq2lo      connected                                      ceil(nu2/2) <= beta
eq2hi      connected, n >= 3                              beta <= nu2 - 1
eq3        connected, n >= 3                              gamma <= nu2 - 1
thm-main   connected, m > nu2, nu2 >= 5                   (gamma == nu2-1) iff
                                                          family recognition
lem-connected  connected, m > nu2, nu2 >= 5,              every maximum
           m <= edge bound                                2-packing inducing a
                                                          connected subgraph
                                                          forces gamma<=nu2-2
lem-forest connected, m > nu2, nu2 >= 5,                  no maximum 2-packing
           gamma == nu2-1, m <= edge bound                induces a cycle
prop-nu2-2 connected, m > nu2, (nu2 == 2 or beta == 1)    nu2 == 2 and beta == 1
prop-nu2-3 connected, m > nu2, nu2 == 3                   beta == 2
prop-nu2-4 connected, m > nu2, nu2 == 4                   beta <= 3
========== ============================================== =====================

Per-graph JSON-lines schema:
{"g6": str, "n": int, "m": int, "gamma": int, "beta": int, "alpha": int,
 "nu2": int, "family": {"s": int, "t": int} | null, "flags": {claim: status}}

A graph whose exact solvers exceed their bounds keeps null invariants and
all-NA flags; the survey continues.
"""
from __future__ import annotations

import json
import multiprocessing
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional

from .canon import canonical_g6
from .domination import beta_exact, gamma_exact
from .errors import BoundExceededError
from .family import FamilyParams, RecognitionResult, recognize
from .graph import Graph, classify_components, degree_profile, edge_subgraph
from .graph6 import parse_graph6, to_graph6
from .limits import NU2_BRUTEFORCE_MAX_EDGES, effective_bound
from .packing import enumerate_max_2packings, nu2_matching

PASS = "pass"
FAIL = "fail"
NA = "na"

CLAIMS = (
    "eq1",
    "eq2lo",
    "eq2hi",
    "eq3",
    "thm-main",
    "lem-connected",
    "lem-forest",
    "prop-nu2-2",
    "prop-nu2-3",
    "prop-nu2-4",
)

INVENTORIES = (
    "eq1-equality",
    "eq2lo-equality",
    "eq2hi-equality",
    "eq3-equality",
    "thm-equality-class",
    "small-nu2-equality",
    "star-gamma1-nu2-2",
    "nu2-3-gamma-2",
    "nu2-3-beta-2",
    "nu2-4-gamma-3",
    "nu2-4-beta-3",
)


@dataclass(frozen=True)
class Invariants:
    n: int
    m: int
    connected: bool
    max_degree: int
    min_degree: int
    nu2: int
    gamma: Optional[int]
    beta: Optional[int]
    alpha: Optional[int]


def compute_invariants(g: Graph) -> Invariants:
    """All exact invariants of one graph; solver-bound overruns yield None."""
    profile = degree_profile(g)
    nu2 = nu2_matching(g).nu2
    try:
        gamma = gamma_exact(g).gamma
        beta = beta_exact(g).beta
        alpha = g.n - beta
    except BoundExceededError:
        gamma = beta = alpha = None
    return Invariants(
        n=g.n,
        m=g.m,
        connected=g.is_connected(),
        max_degree=profile.max_degree,
        min_degree=profile.min_degree,
        nu2=nu2,
        gamma=gamma,
        beta=beta,
        alpha=alpha,
    )


def _verdict(condition: bool) -> str:
    return PASS if condition else FAIL


def check_inequalities(g: Graph, inv: Invariants) -> dict[str, str]:
    flags = {"eq1": NA, "eq2lo": NA, "eq2hi": NA, "eq3": NA}
    if inv.gamma is None or inv.beta is None:
        return flags
    if inv.n >= 1 and inv.min_degree >= 1:
        flags["eq1"] = _verdict(inv.gamma <= inv.beta)
    if inv.connected:
        flags["eq2lo"] = _verdict((inv.nu2 + 1) // 2 <= inv.beta)
        if inv.n >= 3:
            flags["eq2hi"] = _verdict(inv.beta <= inv.nu2 - 1)
            flags["eq3"] = _verdict(inv.gamma <= inv.nu2 - 1)
    return flags


def check_theorem_equality(
    g: Graph, inv: Invariants, fam: RecognitionResult | None = None
) -> str:
    """The main characterization: gamma = nu2 - 1 iff the graph is a family tree."""
    if inv.gamma is None or not inv.connected:
        return NA
    if inv.m <= inv.nu2 or inv.nu2 < 5:
        return NA
    if fam is None:
        fam = recognize(g)
    accepted = isinstance(fam, FamilyParams)
    return _verdict((inv.gamma == inv.nu2 - 1) == accepted)


def _lemma_applicable(inv: Invariants, edge_bound: int | None) -> bool:
    # nu2 >= 5 is part of both lemmas' scope; with nu2 <= 4 there are genuine
    # equality graphs (stars among them) whose maximum 2-packings induce
    # connected subgraphs.
    bound = effective_bound(
        NU2_BRUTEFORCE_MAX_EDGES if edge_bound is None else edge_bound
    )
    return (
        inv.connected
        and inv.gamma is not None
        and inv.m > inv.nu2
        and inv.nu2 >= 5
        and inv.m <= bound
    )


def check_lemma_connected_packing(
    g: Graph, inv: Invariants | None = None, edge_bound: int | None = None
) -> str:
    """A maximum 2-packing inducing a connected subgraph forces gamma <= nu2 - 2."""
    if inv is None:
        inv = compute_invariants(g)
    if not _lemma_applicable(inv, edge_bound):
        return NA
    assert inv.gamma is not None
    for packing in enumerate_max_2packings(g):
        kinds = classify_components(edge_subgraph(g, packing.edges))
        if len(kinds) == 1 and inv.gamma > inv.nu2 - 2:
            return FAIL
    return PASS


def check_lemma_forest(
    g: Graph, inv: Invariants | None = None, edge_bound: int | None = None
) -> str:
    """When gamma = nu2 - 1, no maximum 2-packing may induce a cycle component."""
    if inv is None:
        inv = compute_invariants(g)
    if not _lemma_applicable(inv, edge_bound) or inv.gamma != inv.nu2 - 1:
        return NA
    for packing in enumerate_max_2packings(g):
        kinds = classify_components(edge_subgraph(g, packing.edges))
        if any(kind.kind == "cycle" for kind in kinds):
            return FAIL
    return PASS


def check_small_nu2(g: Graph, inv: Invariants) -> dict[str, str]:
    flags = {"prop-nu2-2": NA, "prop-nu2-3": NA, "prop-nu2-4": NA}
    if inv.beta is None or not inv.connected or inv.m <= inv.nu2:
        return flags
    if inv.nu2 == 2 or inv.beta == 1:
        flags["prop-nu2-2"] = _verdict(inv.nu2 == 2 and inv.beta == 1)
    if inv.nu2 == 3:
        flags["prop-nu2-3"] = _verdict(inv.beta == 2)
    if inv.nu2 == 4:
        flags["prop-nu2-4"] = _verdict(inv.beta <= 3)
    return flags


# -- per-graph reports ---------------------------------------------------------


def graph_id(g: Graph) -> str:
    """Canonical graph6 id; falls back to the input labeling above the bound."""
    try:
        return canonical_g6(g)
    except BoundExceededError:
        return to_graph6(g)


def graph_report(
    g: Graph,
    gid: str | None = None,
    lemma_checks: bool = True,
    lemma_edge_bound: int | None = None,
) -> dict:
    """One graph's invariant record and claim flags (the JSON-lines schema)."""
    if gid is None:
        gid = graph_id(g)
    inv = compute_invariants(g)
    fam = recognize(g)
    flags = check_inequalities(g, inv)
    flags["thm-main"] = check_theorem_equality(g, inv, fam)
    if lemma_checks:
        flags["lem-connected"] = check_lemma_connected_packing(g, inv, lemma_edge_bound)
        flags["lem-forest"] = check_lemma_forest(g, inv, lemma_edge_bound)
    else:
        flags["lem-connected"] = NA
        flags["lem-forest"] = NA
    flags.update(check_small_nu2(g, inv))
    family_field = (
        {"s": fam.s, "t": fam.t} if isinstance(fam, FamilyParams) else None
    )
    return {
        "g6": gid,
        "n": g.n,
        "m": g.m,
        "gamma": inv.gamma,
        "beta": inv.beta,
        "alpha": inv.alpha,
        "nu2": inv.nu2,
        "family": family_field,
        "flags": flags,
    }


def _survey_worker(args: tuple[str, bool, int | None]) -> dict:
    gid, lemma_checks, lemma_edge_bound = args
    return graph_report(parse_graph6(gid), gid, lemma_checks, lemma_edge_bound)


# -- survey orchestration ------------------------------------------------------


@dataclass
class SurveyOptions:
    lemma_checks: bool = True
    lemma_edge_bound: int | None = None  # None = the brute-force default bound
    workers: int = 1
    jsonl_path: str | Path | None = None
    checkpoint_path: str | Path | None = None


@dataclass
class SurveyReport:
    corpus: str
    size: int
    duplicates_skipped: int
    totals: dict[str, dict[str, int]]
    counterexamples: dict[str, list[str]]
    inventories: dict[str, list[str]]
    reports: list[dict]

    @property
    def failures(self) -> int:
        return sum(t[FAIL] for t in self.totals.values())

    def summary_dict(self) -> dict:
        return {
            "corpus": self.corpus,
            "size": self.size,
            "duplicates_skipped": self.duplicates_skipped,
            "totals": self.totals,
            "counterexamples": self.counterexamples,
            "inventories": self.inventories,
        }

    def summary_json(self) -> str:
        return json.dumps(self.summary_dict(), sort_keys=True, indent=2) + "\n"


def report_line(report: dict) -> str:
    return json.dumps(report, sort_keys=True, separators=(",", ":"))


def write_jsonl(reports: Iterable[dict], path: str | Path) -> None:
    with Path(path).open("w", encoding="ascii", newline="\n") as handle:
        for report in reports:
            handle.write(report_line(report) + "\n")


def _load_checkpoint(path: Path) -> dict[str, dict]:
    done: dict[str, dict] = {}
    if path.is_file():
        with path.open("r", encoding="ascii") as handle:
            for line in handle:
                line = line.strip()
                if line:
                    record = json.loads(line)
                    done[record["g6"]] = record
    return done


def run_survey(stream, options: SurveyOptions | None = None) -> SurveyReport:
    """Check every claim on every graph of the stream.

    Deterministic given the stream content: reports are sorted by id before
    aggregation and writing, so worker completion order never shows.  With a
    checkpoint path, already-processed ids are skipped on a rerun and fresh
    results are appended as they complete.
    """
    opts = options or SurveyOptions()
    done: dict[str, dict] = {}
    checkpoint = Path(opts.checkpoint_path) if opts.checkpoint_path else None
    if checkpoint is not None:
        done = _load_checkpoint(checkpoint)

    seen: set[str] = set()
    duplicates = 0
    pending: list[str] = []
    for g in stream:
        gid = to_graph6(g) if stream.canonical else graph_id(g)
        if gid in seen:
            duplicates += 1
            continue
        seen.add(gid)
        if gid not in done:
            pending.append(gid)

    worker_args = [(gid, opts.lemma_checks, opts.lemma_edge_bound) for gid in pending]
    fresh: list[dict] = []
    sink = checkpoint.open("a", encoding="ascii", newline="\n") if checkpoint else None
    try:
        if opts.workers > 1 and len(worker_args) > 1:
            with multiprocessing.Pool(opts.workers) as pool:
                for report in pool.imap_unordered(_survey_worker, worker_args, chunksize=16):
                    fresh.append(report)
                    if sink:
                        sink.write(report_line(report) + "\n")
                        sink.flush()
        else:
            for args in worker_args:
                report = _survey_worker(args)
                fresh.append(report)
                if sink:
                    sink.write(report_line(report) + "\n")
                    sink.flush()
    finally:
        if sink:
            sink.close()

    for report in fresh:
        done[report["g6"]] = report
    reports = [done[gid] for gid in sorted(seen)]
    survey = _aggregate(stream.source, reports, duplicates)
    if opts.jsonl_path is not None:
        write_jsonl(reports, opts.jsonl_path)
    return survey


def _aggregate(corpus: str, reports: list[dict], duplicates: int) -> SurveyReport:
    totals = {claim: {PASS: 0, FAIL: 0, NA: 0} for claim in CLAIMS}
    counterexamples: dict[str, list[str]] = {claim: [] for claim in CLAIMS}
    inventories: dict[str, list[str]] = {name: [] for name in INVENTORIES}
    for r in reports:
        flags = r["flags"]
        gid = r["g6"]
        for claim in CLAIMS:
            status = flags[claim]
            totals[claim][status] += 1
            if status == FAIL:
                counterexamples[claim].append(gid)
        gamma, beta, nu2, m = r["gamma"], r["beta"], r["nu2"], r["m"]
        if gamma is None or beta is None:
            continue
        connected = flags["eq2lo"] != NA  # eq2lo is applicable exactly when connected
        if flags["eq1"] == PASS and gamma == beta:
            inventories["eq1-equality"].append(gid)
        if flags["eq2lo"] == PASS and (nu2 + 1) // 2 == beta:
            inventories["eq2lo-equality"].append(gid)
        if flags["eq2hi"] == PASS and beta == nu2 - 1:
            inventories["eq2hi-equality"].append(gid)
        if flags["eq3"] == PASS and gamma == nu2 - 1:
            inventories["eq3-equality"].append(gid)
        if flags["thm-main"] != NA and gamma == nu2 - 1:
            inventories["thm-equality-class"].append(gid)
        if connected and flags["thm-main"] == NA and gamma == nu2 - 1:
            inventories["small-nu2-equality"].append(gid)
        if connected and m > nu2:
            if gamma == 1 and nu2 == 2:
                inventories["star-gamma1-nu2-2"].append(gid)
            if nu2 == 3 and gamma == 2:
                inventories["nu2-3-gamma-2"].append(gid)
            if nu2 == 3 and beta == 2:
                inventories["nu2-3-beta-2"].append(gid)
            if nu2 == 4 and gamma == 3:
                inventories["nu2-4-gamma-3"].append(gid)
            if nu2 == 4 and beta == 3:
                inventories["nu2-4-beta-3"].append(gid)
    return SurveyReport(
        corpus=corpus,
        size=len(reports),
        duplicates_skipped=duplicates,
        totals=totals,
        counterexamples=counterexamples,
        inventories=inventories,
        reports=reports,
    )
