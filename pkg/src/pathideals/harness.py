"""Verification harness: regularity/matching checks over graphs and families.

Every report carries the graph's JSON serialization and the seed that
produced it, so any failure is reproducible in isolation. Batch reports are
ordered by instance index and serialize identically regardless of the
parallelism degree (timings are kept out of the serialized form for that
reason).
"""

from __future__ import annotations

import json
import os
import time
from collections import Counter
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Iterable

from .betti import DEFAULT_CAP, FieldSpec, GF2, betti_hochster, regularity, verify_ses_bound
from .errors import InputError, PathIdealsError
from .generators import SplitMix64, graph_from_rng, tree_from_rng, unicyclic_from_rng
from .graphs import Graph, classify, graph_from_json_obj, graph_to_json_obj, to_edge_list
from .ideals import add_monomial, colon, edge_colon_closed_form, path_ideal, vertex_colon_closed_form
from .matching import check_nu3_broom_drop, nu3

FAMILIES = ("tree", "unicyclic", "random")
WHICH_CHOICES = ("all", "lower", "tree", "unicyclic", "colon", "monotone", "ses", "broom")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    details: str = ""


@dataclass
class VerificationReport:
    graph: dict
    source: str
    classification: str
    n: int
    family: str | None = None
    seed: int | None = None
    index: int | None = None
    reg: int | None = None
    nu3: int | None = None
    defect: int | None = None
    checks: list[CheckResult] = field(default_factory=list)
    error: str | None = None
    elapsed: float | None = None

    @property
    def passed(self) -> bool:
        return not any(not c.passed for c in self.checks)

    def to_json_obj(self) -> dict:
        return {
            "graph": self.graph,
            "source": self.source,
            "classification": self.classification,
            "n": self.n,
            "family": self.family,
            "seed": self.seed,
            "index": self.index,
            "reg": self.reg,
            "nu3": self.nu3,
            "defect": self.defect,
            "checks": [
                {"name": c.name, "pass": c.passed, "details": c.details}
                for c in self.checks
            ],
            "error": self.error,
        }

    def json_line(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True, separators=(",", ":"))

    def csv_row(self) -> str:
        def cell(x):
            return "" if x is None else str(x)

        return ",".join(
            [
                cell(self.n),
                cell(self.family),
                cell(self.seed),
                cell(self.reg),
                cell(self.nu3),
                cell(self.defect),
                "pass" if self.passed and self.error is None else "fail",
            ]
        )


CSV_HEADER = "n,family,seed,reg,nu3,defect,pass"


def reports_to_jsonl(reports: Iterable[VerificationReport]) -> str:
    return "".join(r.json_line() + "\n" for r in reports)


def reports_to_csv(reports: Iterable[VerificationReport]) -> str:
    return CSV_HEADER + "\n" + "".join(r.csv_row() + "\n" for r in reports)


def _base_report(graph: Graph, source: str, **extra) -> VerificationReport:
    return VerificationReport(
        graph=graph_to_json_obj(graph),
        source=source,
        classification=classify(graph).kind,
        n=graph.n,
        **extra,
    )


def _with_invariants(report: VerificationReport, graph: Graph, field_: FieldSpec, cap: int) -> None:
    report.reg = regularity(path_ideal(graph, 3), field_, cap=cap)
    report.nu3 = nu3(graph)[0]
    report.defect = report.reg - 2 * report.nu3


# -- single-graph verifiers ------------------------------------------------------


def verify_lower_bound(
    graph: Graph, field_: FieldSpec = GF2, cap: int = DEFAULT_CAP, source: str = "graph"
) -> VerificationReport:
    """reg(R/I3) >= 2 nu3, for arbitrary graphs."""
    report = _base_report(graph, source)
    _with_invariants(report, graph, field_, cap)
    report.checks.append(
        CheckResult(
            "lower_bound",
            report.reg >= 2 * report.nu3,
            f"reg={report.reg} >= 2*nu3={2 * report.nu3}",
        )
    )
    return report


def verify_tree_equality(
    graph: Graph, field_: FieldSpec = GF2, cap: int = DEFAULT_CAP, source: str = "graph"
) -> VerificationReport:
    """reg(R/I3) == 2 nu3 for trees (and forests, component-wise additive)."""
    report = _base_report(graph, source)
    if report.classification not in ("tree", "forest"):
        raise InputError(f"tree equality check requires a tree/forest, got {report.classification}")
    _with_invariants(report, graph, field_, cap)
    report.checks.append(
        CheckResult(
            "tree_equality",
            report.defect == 0,
            f"reg={report.reg}, 2*nu3={2 * report.nu3}",
        )
    )
    return report


def verify_unicyclic_sandwich(
    graph: Graph, field_: FieldSpec = GF2, cap: int = DEFAULT_CAP, source: str = "graph"
) -> VerificationReport:
    """2 nu3 <= reg(R/I3) <= 2 nu3 + 2 for connected one-cycle non-cycle graphs."""
    report = _base_report(graph, source)
    if report.classification != "unicyclic":
        raise InputError(
            f"unicyclic sandwich check requires a non-cycle unicyclic graph, got {report.classification}"
        )
    _with_invariants(report, graph, field_, cap)
    report.checks.append(
        CheckResult("sandwich_lower", report.defect >= 0, f"defect={report.defect}")
    )
    report.checks.append(
        CheckResult("sandwich_upper", report.defect <= 2, f"defect={report.defect}")
    )
    return report


def verify_betti_monotonicity(
    graph: Graph,
    vertices: Iterable[int],
    field_: FieldSpec = GF2,
    cap: int = DEFAULT_CAP,
    source: str = "graph",
) -> VerificationReport:
    """Entrywise Betti monotonicity under induced subgraphs, plus regularity."""
    report = _base_report(graph, source)
    keep = sorted(set(vertices))
    sub, _ = graph.induced_subgraph(keep)
    table_g = betti_hochster(path_ideal(graph, 3), field_, cap=cap)
    table_h = betti_hochster(path_ideal(sub, 3), field_, cap=cap)
    report.reg = table_g.regularity()
    report.checks.append(
        CheckResult(
            "betti_monotone",
            table_h.entrywise_leq(table_g),
            f"subgraph on {len(keep)} vertices",
        )
    )
    report.checks.append(
        CheckResult(
            "regularity_monotone",
            table_h.regularity() <= table_g.regularity(),
            f"reg_sub={table_h.regularity()} <= reg={table_g.regularity()}",
        )
    )
    return report


def verify_colon_identities(
    graph: Graph, edge: tuple[int, int], source: str = "graph"
) -> VerificationReport:
    """Both colon decompositions of the 3-path ideal at an edge, exactly."""
    x, y = edge
    if not graph.has_edge(x, y):
        raise InputError(f"({x},{y}) is not an edge")
    report = _base_report(graph, source)
    ideal = path_ideal(graph, 3)
    lhs = colon(ideal, {x, y})
    rhs = edge_colon_closed_form(graph, x, y)
    report.checks.append(
        CheckResult("colon_by_edge", lhs == rhs, f"edge=({x},{y})")
    )
    with_edge = add_monomial(ideal, {x, y})
    for a, b in ((x, y), (y, x)):
        lhs2 = colon(with_edge, {a})
        rhs2 = vertex_colon_closed_form(graph, a, b)
        report.checks.append(
            CheckResult(f"colon_by_vertex_{a}", lhs2 == rhs2, f"edge=({a},{b})")
        )
    return report


def verify_ses_edges(
    graph: Graph,
    edges: Iterable[tuple[int, int]] | None = None,
    field_: FieldSpec = GF2,
    cap: int = DEFAULT_CAP,
    source: str = "graph",
) -> VerificationReport:
    """Short-exact-sequence regularity bound for edge monomials."""
    report = _base_report(graph, source)
    ideal = path_ideal(graph, 3)
    todo = list(edges) if edges is not None else list(graph.edges)
    failures = []
    for u, v in todo:
        ses = verify_ses_bound(ideal, {u, v}, field_, cap=cap)
        if not ses.holds:
            failures.append(((u, v), ses))
    detail = f"{len(todo)} edge(s) checked"
    if failures:
        detail += f"; first failure at {failures[0][0]}: {failures[0][1]}"
    report.checks.append(CheckResult("ses_bound", not failures, detail))
    return report


def verify_monotone_deletions(
    graph: Graph, field_: FieldSpec = GF2, cap: int = DEFAULT_CAP, source: str = "graph"
) -> VerificationReport:
    """Betti monotonicity for every single-vertex deletion of the graph."""
    report = _base_report(graph, source)
    table_g = betti_hochster(path_ideal(graph, 3), field_, cap=cap)
    report.reg = table_g.regularity()
    bad = []
    for v in range(graph.n):
        sub, _ = graph.induced_subgraph(w for w in range(graph.n) if w != v)
        table_h = betti_hochster(path_ideal(sub, 3), field_, cap=cap)
        if not table_h.entrywise_leq(table_g):
            bad.append(v)
    report.checks.append(
        CheckResult(
            "betti_monotone_deletions",
            not bad,
            f"{graph.n} deletions checked" + (f"; violated at {bad}" if bad else ""),
        )
    )
    return report


def verify_graph(
    graph: Graph,
    which: str = "all",
    field_: FieldSpec = GF2,
    cap: int = DEFAULT_CAP,
    source: str = "graph",
) -> list[VerificationReport]:
    """Run the selected checks on one explicit graph."""
    if which not in WHICH_CHOICES:
        raise InputError(f"unknown check selector {which!r}")
    kind = classify(graph).kind
    reports = []
    if which in ("all", "lower"):
        reports.append(verify_lower_bound(graph, field_, cap, source))
    if which == "tree" or (which == "all" and kind in ("tree", "forest")):
        reports.append(verify_tree_equality(graph, field_, cap, source))
    if which == "unicyclic" or (which == "all" and kind == "unicyclic"):
        reports.append(verify_unicyclic_sandwich(graph, field_, cap, source))
    if which in ("all", "colon"):
        for edge in graph.edges:
            reports.append(verify_colon_identities(graph, edge, source))
    if which in ("all", "ses"):
        reports.append(verify_ses_edges(graph, None, field_, cap, source))
    if which in ("all", "monotone"):
        reports.append(verify_monotone_deletions(graph, field_, cap, source))
    if which == "broom" or (
        which == "all"
        and kind == "tree"
        and any(len(graph.adj[v]) >= 2 for v in range(graph.n))
    ):
        drop = check_nu3_broom_drop(graph)
        report = _base_report(graph, source)
        report.nu3 = drop.nu3_graph
        report.checks.append(
            CheckResult(
                "broom_edge_drop",
                drop.holds,
                f"edge={drop.edge}, nu3_remainder={drop.nu3_remainder}, nu3={drop.nu3_graph}",
            )
        )
        reports.append(report)
    return reports


# -- randomized families -----------------------------------------------------------


@dataclass(frozen=True)
class BatchSpec:
    """Deterministic description of a randomized verification batch.

    Instance k uses n = n_lo + (k mod span) and the splitmix64 stream seeded
    with ``seed + k``; any extra draws (rejections, edge or subset picks)
    continue on the same stream.
    """

    family: str
    n_lo: int
    n_hi: int
    count: int
    seed: int
    field_: FieldSpec = GF2
    which: str = "family"
    cap: int = DEFAULT_CAP
    p_values: tuple[float, ...] = (0.2, 0.4)

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise InputError(f"unknown family {self.family!r}")
        if self.n_lo > self.n_hi:
            raise InputError("empty n range")
        minimum = {"tree": 1, "unicyclic": 4, "random": 1}[self.family]
        if self.n_lo < minimum:
            raise InputError(
                f"family {self.family!r} needs n >= {minimum}"
                + (" (smaller unicyclic graphs are all cycles)" if self.family == "unicyclic" else "")
            )

    def instance_n(self, k: int) -> int:
        return self.n_lo + k % (self.n_hi - self.n_lo + 1)


def generate_instance(spec: BatchSpec, k: int) -> tuple[Graph, SplitMix64]:
    """Instance k of the batch plus its still-live random stream."""
    n = spec.instance_n(k)
    rng = SplitMix64(spec.seed + k)
    if spec.family == "tree":
        return tree_from_rng(n, rng), rng
    if spec.family == "unicyclic":
        while True:
            graph = unicyclic_from_rng(n, rng)
            if classify(graph).kind == "unicyclic":
                return graph, rng
    p = spec.p_values[k % len(spec.p_values)]
    return graph_from_rng(n, p, rng), rng


def _default_which(spec: BatchSpec) -> str:
    if spec.which != "family":
        return spec.which
    return {"tree": "tree", "unicyclic": "unicyclic", "random": "lower"}[spec.family]


def run_instance(spec: BatchSpec, k: int) -> VerificationReport:
    started = time.perf_counter()
    graph, rng = generate_instance(spec, k)
    which = _default_which(spec)
    source = f"{spec.family} n={graph.n} seed={spec.seed + k}"
    try:
        if which == "tree":
            report = verify_tree_equality(graph, spec.field_, spec.cap, source)
        elif which == "unicyclic":
            report = verify_unicyclic_sandwich(graph, spec.field_, spec.cap, source)
        elif which == "lower":
            report = verify_lower_bound(graph, spec.field_, spec.cap, source)
        elif which == "colon":
            if spec.family == "random":
                p = spec.p_values[k % len(spec.p_values)]
                while not graph.edges:
                    graph = graph_from_rng(spec.instance_n(k), p, rng)
            if not graph.edges:
                report = _base_report(graph, source)
                report.checks.append(CheckResult("colon_by_edge", True, "no edges"))
            else:
                edge = graph.edges[rng.below(len(graph.edges))]
                report = verify_colon_identities(graph, edge, source)
        elif which == "ses":
            if not graph.edges:
                report = _base_report(graph, source)
                report.checks.append(CheckResult("ses_bound", True, "no edges"))
            else:
                edge = graph.edges[rng.below(len(graph.edges))]
                report = verify_ses_edges(graph, [edge], spec.field_, spec.cap, source)
        elif which == "monotone":
            subset = [v for v in range(graph.n) if rng.below(2) == 0]
            report = verify_betti_monotonicity(graph, subset, spec.field_, spec.cap, source)
        elif which == "broom":
            report = verify_graph(graph, "broom", spec.field_, spec.cap, source)[0]
        else:
            raise InputError(f"unknown batch check {which!r}")
    except PathIdealsError as exc:
        report = _base_report(graph, source)
        report.error = f"{type(exc).__name__}: {exc}"
    report.family = spec.family
    report.seed = spec.seed + k
    report.index = k
    report.elapsed = time.perf_counter() - started
    return report


def _pool_worker(args: tuple[BatchSpec, int]) -> VerificationReport:
    return run_instance(*args)


def run_batch(spec: BatchSpec, jobs: int = 1) -> list[VerificationReport]:
    """All instances of a batch, ordered by index regardless of parallelism."""
    tasks = [(spec, k) for k in range(spec.count)]
    if jobs <= 1:
        return [run_instance(*t) for t in tasks]
    with Pool(jobs) as pool:
        return pool.map(_pool_worker, tasks)


@dataclass
class DefectSummary:
    spec: BatchSpec
    reports: list[VerificationReport]
    histogram: dict[int, int]
    exemplars: dict[tuple[int, int], Graph]

    def histogram_csv(self) -> str:
        lines = ["defect,count"]
        lines += [f"{d},{c}" for d, c in sorted(self.histogram.items())]
        return "\n".join(lines) + "\n"


def classify_defects(spec: BatchSpec, jobs: int = 1) -> DefectSummary:
    """Run a family batch and aggregate the reg - 2*nu3 defect distribution.

    Keeps the first exemplar graph seen for every (n, defect) cell.
    """
    reports = run_batch(spec, jobs=jobs)
    histogram: Counter[int] = Counter()
    exemplars: dict[tuple[int, int], Graph] = {}
    for report in reports:
        if report.defect is None:
            continue
        histogram[report.defect] += 1
        key = (report.n, report.defect)
        if key not in exemplars:
            exemplars[key] = graph_from_json_obj(report.graph)
    return DefectSummary(spec, reports, dict(histogram), exemplars)


def write_exemplars(summary: DefectSummary, directory: str) -> list[str]:
    """Write one edge-list file per (n, defect) cell; returns the paths."""
    os.makedirs(directory, exist_ok=True)
    written = []
    for (n, defect), graph in sorted(summary.exemplars.items()):
        path = os.path.join(directory, f"{summary.spec.family}_n{n}_defect{defect}.txt")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(to_edge_list(graph))
        written.append(path)
    return written
