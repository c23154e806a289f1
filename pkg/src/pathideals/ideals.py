"""Squarefree monomial ideals as antichains of vertex-id supports.

A squarefree monomial is just its support, a ``frozenset[int]`` inside an
ambient variable set ``{0..n-1}``; divisibility is subset containment. The
empty support is the monomial 1, so the unit ideal is ``{frozenset()}`` and
the zero ideal has no generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InputError
from .graphs import Graph

Monomial = frozenset[int]


def minimalize(gens: Iterable[Iterable[int]]) -> frozenset[Monomial]:
    """Unique minimal generating set: drop every support containing another."""
    supports = sorted({frozenset(g) for g in gens}, key=lambda g: (len(g), sorted(g)))
    keep: list[Monomial] = []
    for g in supports:
        if not any(h <= g for h in keep):
            keep.append(g)
    return frozenset(keep)


@dataclass(frozen=True)
class MonomialIdeal:
    """Squarefree monomial ideal; generators are minimalized on construction.

    Equality of instances is equality of ideals, since the minimal squarefree
    generating set is unique.
    """

    n: int
    gens: frozenset[Monomial]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InputError("ambient size must be nonnegative")
        gens = minimalize(self.gens)
        for g in gens:
            for v in g:
                if not (0 <= v < self.n):
                    raise InputError(f"variable {v} out of ambient range n={self.n}")
        object.__setattr__(self, "gens", gens)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return frozenset() in self.gens

    def contains(self, m: Iterable[int]) -> bool:
        support = frozenset(m)
        return any(g <= support for g in self.gens)

    def sorted_gens(self) -> list[tuple[int, ...]]:
        return sorted(tuple(sorted(g)) for g in self.gens)


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, frozenset())


def unit_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, frozenset({frozenset()}))


def colon(ideal: MonomialIdeal, m: Iterable[int]) -> MonomialIdeal:
    """(I : m) for a squarefree monomial m: strip m from every generator."""
    support = frozenset(m)
    for v in support:
        if not (0 <= v < ideal.n):
            raise InputError(f"variable {v} out of ambient range n={ideal.n}")
    return MonomialIdeal(ideal.n, frozenset(g - support for g in ideal.gens))


def add(left: MonomialIdeal, right: MonomialIdeal) -> MonomialIdeal:
    if left.n != right.n:
        raise InputError("ideal sum requires matching ambients")
    return MonomialIdeal(left.n, left.gens | right.gens)


def add_vars(ideal: MonomialIdeal, variables: Iterable[int]) -> MonomialIdeal:
    """I + the ideal generated by the given variables."""
    extra = frozenset(frozenset({v}) for v in variables)
    return MonomialIdeal(ideal.n, ideal.gens | extra)


def add_monomial(ideal: MonomialIdeal, m: Iterable[int]) -> MonomialIdeal:
    return MonomialIdeal(ideal.n, ideal.gens | {frozenset(m)})


# -- path ideals ---------------------------------------------------------------


def path_ideal(graph: Graph, t: int) -> MonomialIdeal:
    """Ideal generated by the vertex supports of all paths on t vertices."""
    return MonomialIdeal(graph.n, frozenset(frozenset(p) for p in graph.t_paths(t)))


def path_ideal_within(graph: Graph, vertices: Iterable[int], t: int) -> MonomialIdeal:
    """Path ideal of an induced subgraph, kept in the ambient of the host graph."""
    allowed = set(vertices)
    if t == 2:
        gens = [frozenset(e) for e in graph.edges_within(allowed)]
    elif t == 3:
        gens = [frozenset(p) for p in graph.three_paths_within(allowed)]
    else:
        raise InputError(f"t={t} unsupported; only t in {{2, 3}}")
    return MonomialIdeal(graph.n, frozenset(gens))


# -- closed forms for the two colon decompositions ------------------------------


def edge_colon_closed_form(graph: Graph, u: int, v: int) -> MonomialIdeal:
    """Graph-side construction of I3(G) : uv for an edge {u,v}.

    Built as the variables adjacent to the edge plus the 3-path ideal of the
    graph minus the closed edge neighborhood.
    """
    ne = graph.edge_neighborhood(u, v)
    rest = set(range(graph.n)) - graph.closed_edge_neighborhood(u, v)
    ideal = path_ideal_within(graph, rest, 3)
    return add_vars(ideal, ne)


def vertex_colon_closed_form(graph: Graph, x: int, y: int) -> MonomialIdeal:
    """Graph-side construction of (I3(G) + <xy>) : x for an edge {x,y}.

    Built as <y> plus the edge ideal of H plus the 3-path ideal of the graph
    minus the closed neighborhood of x, where H is the neighborhood edge set
    of x together with the complete graph on N(x) - {y}.
    """
    if not graph.has_edge(x, y):
        raise InputError(f"({x},{y}) is not an edge")
    h_edges = {frozenset(e) for e in graph.neighborhood_edge_set(x)}
    others = sorted(graph.neighbors(x) - {y})
    for i in range(len(others)):
        for k in range(i + 1, len(others)):
            h_edges.add(frozenset((others[i], others[k])))
    rest = set(range(graph.n)) - graph.closed_neighbors(x)
    gens = {frozenset({y})} | h_edges | path_ideal_within(graph, rest, 3).gens
    return MonomialIdeal(graph.n, frozenset(gens))


# -- Stanley-Reisner correspondence ---------------------------------------------


@dataclass(frozen=True)
class SimplicialComplex:
    """Simplicial complex on {0..n-1} presented by its minimal non-faces.

    A subset is a face iff it contains no minimal non-face. The void complex
    (no faces at all, minimal non-face = {}) is not representable here; it
    would correspond to the unit ideal, which is rejected upstream.
    """

    n: int
    min_nonfaces: frozenset[Monomial]

    def __post_init__(self) -> None:
        nonfaces = minimalize(self.min_nonfaces)
        if frozenset() in nonfaces:
            raise InputError("the void complex is not representable")
        for nf in nonfaces:
            for v in nf:
                if not (0 <= v < self.n):
                    raise InputError(f"vertex {v} out of range n={self.n}")
        object.__setattr__(self, "min_nonfaces", nonfaces)

    def is_face(self, subset: Iterable[int]) -> bool:
        s = frozenset(subset)
        return not any(nf <= s for nf in self.min_nonfaces)


def stanley_reisner(ideal: MonomialIdeal) -> SimplicialComplex:
    """Complex whose minimal non-faces are the generators of the ideal."""
    if ideal.is_unit:
        raise InputError("the unit ideal has no Stanley-Reisner complex")
    return SimplicialComplex(ideal.n, ideal.gens)


def nonface_ideal(complex_: SimplicialComplex) -> MonomialIdeal:
    """Inverse of stanley_reisner: the ideal of minimal non-faces."""
    return MonomialIdeal(complex_.n, complex_.min_nonfaces)


# -- serialization ---------------------------------------------------------------


def ideal_to_text(ideal: MonomialIdeal, labels: tuple[str, ...] | None = None) -> str:
    """One generator per line, variable tokens joined by '*' (1 for the unit)."""

    def token(v: int) -> str:
        return labels[v] if labels is not None else f"x{v + 1}"

    lines = []
    for gen in ideal.sorted_gens():
        lines.append("*".join(token(v) for v in gen) if gen else "1")
    return "\n".join(lines) + ("\n" if lines else "")


def ideal_to_json_obj(ideal: MonomialIdeal) -> list[list[int]]:
    return [list(g) for g in ideal.sorted_gens()]


def ideal_from_json_obj(n: int, obj: Iterable[Iterable[int]]) -> MonomialIdeal:
    return MonomialIdeal(n, frozenset(frozenset(int(v) for v in g) for g in obj))
