"""Exact 3-path induced matching number with certificates.

A family of vertex-disjoint 3-paths is induced when the subgraph spanned by
the covered vertices has exactly the 2s path edges and nothing else; the
check below uses that edge-count criterion directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError
from .graphs import Graph, Path3, classify, find_broom_vertex


@dataclass(frozen=True)
class MatchingCheck:
    ok: bool
    reason: str | None = None
    witness: tuple | None = None


@dataclass(frozen=True)
class MatchingCertificate:
    """A witnessed induced family of 3-paths proving a lower bound on nu3."""

    paths: tuple[Path3, ...]

    @property
    def size(self) -> int:
        return len(self.paths)

    @property
    def covered(self) -> frozenset[int]:
        return frozenset(v for p in self.paths for v in p)

    def to_json_obj(self) -> dict:
        return {"nu3": self.size, "paths": [list(p) for p in self.paths]}


def _validate_path(graph: Graph, path: Sequence[int]) -> Path3:
    if len(path) != 3:
        raise InputError(f"{tuple(path)} is not a 3-path (needs 3 vertices)")
    a, b, c = path
    if len({a, b, c}) != 3:
        raise InputError(f"{tuple(path)} has repeated vertices")
    if not (graph.has_edge(a, b) and graph.has_edge(b, c)):
        raise InputError(f"{tuple(path)} is not a path of the graph")
    return (a, b, c) if a < c else (c, b, a)


def is_induced_3path_matching(graph: Graph, paths: Iterable[Sequence[int]]) -> MatchingCheck:
    """Check vertex-disjointness and inducedness; report the first violation.

    Inducedness fails exactly when the covered set spans an edge that is not
    one of the paths' own edges (the count must be 2 per path).
    """
    canon = [_validate_path(graph, p) for p in paths]
    covered: set[int] = set()
    for p in canon:
        for v in p:
            if v in covered:
                return MatchingCheck(False, "shared vertex", (v,))
            covered.add(v)
    path_edges = set()
    for a, b, c in canon:
        path_edges.add((min(a, b), max(a, b)))
        path_edges.add((min(b, c), max(b, c)))
    for u, v in graph.edges_within(covered):
        if (u, v) not in path_edges:
            return MatchingCheck(False, "extra edge in covered set", (u, v))
    return MatchingCheck(True)


def nu3(graph: Graph) -> tuple[int, MatchingCertificate]:
    """Exact maximum induced 3-path matching, by branch and bound.

    Candidates are the chordless 3-paths in lexicographic order; the include
    branch is explored first and the bound is the number of unblocked
    vertices divided by 3, so the returned certificate is deterministic.
    """
    cands = [p for p in graph.three_paths() if not graph.has_edge(p[0], p[2])]
    vmasks = [sum(1 << v for v in p) for p in cands]
    blockers = []
    for p in cands:
        block = set(p)
        for v in p:
            block |= graph.adj[v]
        blockers.append(sum(1 << v for v in block))
    best_size = 0
    best: tuple[Path3, ...] = ()
    chosen: list[Path3] = []

    def search(start: int, blocked: int, free: int) -> None:
        nonlocal best_size, best
        if len(chosen) > best_size:
            best_size = len(chosen)
            best = tuple(chosen)
        if len(chosen) + free // 3 <= best_size:
            return
        for idx in range(start, len(cands)):
            if len(chosen) + min(free // 3, len(cands) - idx) <= best_size:
                return
            if vmasks[idx] & blocked:
                continue
            newly = blockers[idx] & ~blocked
            chosen.append(cands[idx])
            search(idx + 1, blocked | blockers[idx], free - newly.bit_count())
            chosen.pop()

    search(0, 0, graph.n)
    return best_size, MatchingCertificate(best)


@dataclass(frozen=True)
class MonotonicityReport:
    nu3_subgraph: int
    nu3_graph: int

    @property
    def holds(self) -> bool:
        return self.nu3_subgraph <= self.nu3_graph


def check_nu3_monotone(graph: Graph, vertices: Iterable[int]) -> MonotonicityReport:
    """nu3 of an induced subgraph never exceeds nu3 of the host graph."""
    sub, _ = graph.induced_subgraph(vertices)
    return MonotonicityReport(nu3(sub)[0], nu3(graph)[0])


@dataclass(frozen=True)
class BroomDropReport:
    """nu3 after deleting the closed neighborhood of the broom edge."""

    broom_vertex: int
    edge: tuple[int, int]
    nu3_remainder: int
    nu3_graph: int

    @property
    def holds(self) -> bool:
        return self.nu3_remainder <= self.nu3_graph - 1


def check_nu3_broom_drop(graph: Graph) -> BroomDropReport:
    """For a tree, deleting N[e] of the broom edge drops nu3 by at least one.

    The broom edge joins the broom vertex to its designated last neighbor
    (the only one allowed to be a non-leaf).
    """
    if classify(graph).kind != "tree":
        raise InputError("the broom-edge drop check requires a tree")
    v, neighbors = find_broom_vertex(graph)
    last = neighbors[-1]
    remainder = [
        w for w in range(graph.n) if w not in graph.closed_edge_neighborhood(v, last)
    ]
    sub, _ = graph.induced_subgraph(remainder)
    return BroomDropReport(v, (v, last), nu3(sub)[0], nu3(graph)[0])
