"""Independent brute-force oracles used only by the test suite.

These deliberately share no search logic with the package: cubic path
enumeration, subset enumeration for matchings straight from the definition,
and rational Gaussian elimination for matrix ranks.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from pathideals.graphs import Graph


def enumerate_3paths_brute(graph: Graph) -> list[tuple[int, int, int]]:
    """All canonical (a, b, c) with edges ab, bc, by cubic enumeration."""
    out = set()
    for a in range(graph.n):
        for b in range(graph.n):
            for c in range(graph.n):
                if len({a, b, c}) != 3:
                    continue
                if graph.has_edge(a, b) and graph.has_edge(b, c):
                    out.add((a, b, c) if a < c else (c, b, a))
    return sorted(out)


def nu3_brute(graph: Graph) -> int:
    """Maximum induced 3-path matching by subset enumeration.

    Checks every subset of the 3-path list up to floor(n/3) paths against
    the definition: pairwise disjoint and the covered set spans exactly
    2 * size edges. Guarded to small graphs.
    """
    assert graph.n <= 10, "brute-force oracle is guarded to n <= 10"
    paths = enumerate_3paths_brute(graph)
    best = 0
    for size in range(1, graph.n // 3 + 1):
        for combo in itertools.combinations(paths, size):
            vertices = [v for p in combo for v in p]
            if len(set(vertices)) != 3 * size:
                continue
            if len(graph.edges_within(set(vertices))) == 2 * size:
                best = size
                break
    return best


def rank_fraction(mat: list[list[int]]) -> int:
    """Rank over the rationals by plain Gaussian elimination with Fractions."""
    rows = [[Fraction(x) for x in row] for row in mat]
    if not rows or not rows[0]:
        return 0
    n_cols = len(rows[0])
    rank = 0
    for c in range(n_cols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pivot = rows[rank][c]
        rows[rank] = [x / pivot for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank
