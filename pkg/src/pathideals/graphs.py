"""Finite simple graphs with the neighborhood and path operators used throughout.

Vertices are dense integer ids ``0..n-1``; display labels from input files are
kept separately and never enter any computation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from .errors import InputError, NoBroomVertexError

Edge = tuple[int, int]
Path3 = tuple[int, int, int]


def canon_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    Edges are stored canonically (``u < v``, sorted); the adjacency sets are
    derived once at construction. Instances are safe to share across workers.
    """

    n: int
    edges: tuple[Edge, ...]
    labels: tuple[str, ...] | None = None
    adj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InputError("vertex count must be nonnegative")
        canon: set[Edge] = set()
        for u, v in self.edges:
            if u == v:
                raise InputError(f"loop edge at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"edge ({u},{v}) out of range for n={self.n}")
            canon.add(canon_edge(u, v))
        object.__setattr__(self, "edges", tuple(sorted(canon)))
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise InputError("labels must have one entry per vertex")
            object.__setattr__(self, "labels", tuple(self.labels))
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "adj", tuple(frozenset(s) for s in adj))

    # -- basic accessors ---------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise InputError(f"vertex {v} out of range for n={self.n}")

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self.adj[u]

    def vertex_token(self, v: int) -> str:
        self._check_vertex(v)
        return self.labels[v] if self.labels is not None else str(v)

    # -- neighborhood operators --------------------------------------------

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self.adj[v]

    def closed_neighbors(self, v: int) -> frozenset[int]:
        return self.neighbors(v) | {v}

    def edge_neighborhood(self, u: int, v: int) -> frozenset[int]:
        """Vertices adjacent to the edge {u,v} but not on it."""
        if not self.has_edge(u, v):
            raise InputError(f"({u},{v}) is not an edge")
        return (self.adj[u] - {v}) | (self.adj[v] - {u})

    def closed_edge_neighborhood(self, u: int, v: int) -> frozenset[int]:
        return self.edge_neighborhood(u, v) | {u, v}

    def neighborhood_edge_set(self, x: int) -> frozenset[Edge]:
        """Edges {y,z} avoiding x such that x,y,z span a path on 3 vertices."""
        self._check_vertex(x)
        out = set()
        for u, v in self.edges:
            if x in (u, v):
                continue
            if u in self.adj[x] or v in self.adj[x]:
                out.add((u, v))
        return frozenset(out)

    # -- path enumeration ---------------------------------------------------

    def three_paths(self) -> list[Path3]:
        """All paths on 3 vertices, canonicalized as (a, b, c) with a < c."""
        return self.three_paths_within(range(self.n))

    def three_paths_within(self, vertices: Iterable[int]) -> list[Path3]:
        """Paths on 3 vertices using only the given vertex set."""
        allowed = set(vertices)
        for v in allowed:
            self._check_vertex(v)
        out: list[Path3] = []
        for b in sorted(allowed):
            nb = sorted(self.adj[b] & allowed)
            for i in range(len(nb)):
                for k in range(i + 1, len(nb)):
                    out.append((nb[i], b, nb[k]))
        out.sort()
        return out

    def t_paths(self, t: int) -> list[tuple[int, ...]]:
        """Paths on t vertices for t in {2, 3}; t=2 is the edge list."""
        if t == 2:
            return list(self.edges)
        if t == 3:
            return self.three_paths()
        raise InputError(f"t={t} unsupported; only t in {{2, 3}}")

    # -- subgraphs -----------------------------------------------------------

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Induced subgraph on the given vertices, with the old->new id map."""
        keep = sorted(set(vertices))
        for v in keep:
            self._check_vertex(v)
        remap = {old: new for new, old in enumerate(keep)}
        edges = [(remap[u], remap[v]) for u, v in self.edges if u in remap and v in remap]
        labels = tuple(self.labels[v] for v in keep) if self.labels is not None else None
        return Graph(len(keep), tuple(edges), labels), remap

    def delete(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph on the complement of the given vertex set."""
        drop = set(vertices)
        sub, _ = self.induced_subgraph(v for v in range(self.n) if v not in drop)
        return sub

    def edges_within(self, vertices: Iterable[int]) -> list[Edge]:
        keep = set(vertices)
        return [(u, v) for u, v in self.edges if u in keep and v in keep]

    # -- connectivity ----------------------------------------------------------

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for start in range(self.n):
            if seen[start]:
                continue
            stack, comp = [start], []
            seen[start] = True
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1


@dataclass(frozen=True)
class Classification:
    """Global shape of a graph, plus its unique cycle when there is one.

    ``kind`` is one of tree / forest / unicyclic / cycle / other. Unicyclic
    means connected with exactly one cycle but not itself a cycle graph.
    """

    kind: str
    cycle: tuple[int, ...] | None
    components: tuple[str, ...]


def _component_kind(graph: Graph, comp: list[int]) -> str:
    k = len(comp)
    m = len(graph.edges_within(comp))
    if m == k - 1:
        return "tree"
    if m == k:
        if all(len(graph.adj[v]) == 2 for v in comp):
            return "cycle"
        return "unicyclic"
    return "other"


def _unique_cycle(graph: Graph, comp: list[int]) -> tuple[int, ...]:
    """Cycle of a connected component with |E| = |V|, by peeling leaves."""
    degree = {v: len(graph.adj[v] & set(comp)) for v in comp}
    queue = [v for v in comp if degree[v] == 1]
    alive = set(comp)
    while queue:
        v = queue.pop()
        alive.discard(v)
        for w in graph.adj[v]:
            if w in alive:
                degree[w] -= 1
                if degree[w] == 1:
                    queue.append(w)
    start = min(alive)
    cycle = [start]
    prev, cur = None, start
    while True:
        nxt = min(w for w in graph.adj[cur] if w in alive and w != prev)
        if nxt == start:
            break
        cycle.append(nxt)
        prev, cur = cur, nxt
    return tuple(cycle)


def classify(graph: Graph) -> Classification:
    """Classify a graph as tree/forest/unicyclic/cycle/other.

    The cycle vertex list is attached when the graph is connected with
    exactly one cycle (walk starts at the smallest cycle vertex and moves
    toward its smallest cycle neighbor).
    """
    comps = graph.components()
    kinds = tuple(_component_kind(graph, c) for c in comps)
    if graph.n == 0:
        return Classification("forest", None, ())
    if len(comps) == 1:
        kind = kinds[0]
        cycle = _unique_cycle(graph, comps[0]) if kind in ("unicyclic", "cycle") else None
        return Classification(kind, cycle, kinds)
    kind = "forest" if all(k == "tree" for k in kinds) else "other"
    return Classification(kind, None, kinds)


def find_broom_vertex(graph: Graph) -> tuple[int, tuple[int, ...]]:
    """Vertex v of a tree with all neighbors but at most one being leaves.

    Returns (v, neighbors) with neighbors sorted ascending and the single
    allowed non-leaf (if any) placed last. Ties between candidate vertices
    are broken by smallest id.
    """
    if classify(graph).kind != "tree":
        raise InputError("broom vertex search requires a tree")
    for v in range(graph.n):
        nb = sorted(graph.adj[v])
        if len(nb) < 2:
            continue
        non_leaves = [u for u in nb if len(graph.adj[u]) > 1]
        if len(non_leaves) <= 1:
            leaves = [u for u in nb if len(graph.adj[u]) == 1]
            return v, tuple(leaves + non_leaves)
    raise NoBroomVertexError("tree has no vertex of degree >= 2")


# -- serialization ------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the 'u v' per-line edge format.

    Tokens are arbitrary; ids are assigned in first-appearance order.
    ``#`` starts a comment, blank lines are skipped.
    """
    ids: dict[str, int] = {}
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected 'u v', got {raw.strip()!r}")
        a, b = parts
        if a == b:
            raise InputError(f"line {lineno}: loop edge on {a!r}")
        u = ids.setdefault(a, len(ids))
        v = ids.setdefault(b, len(ids))
        edges.append(canon_edge(u, v))
    labels = tuple(sorted(ids, key=ids.get))
    return Graph(len(ids), tuple(edges), labels or None)


def to_edge_list(graph: Graph) -> str:
    lines = [f"{graph.vertex_token(u)} {graph.vertex_token(v)}" for u, v in graph.edges]
    return "\n".join(lines) + ("\n" if lines else "")


def graph_to_json_obj(graph: Graph) -> dict:
    obj: dict = {"n": graph.n, "edges": [[u, v] for u, v in graph.edges]}
    if graph.labels is not None:
        obj["labels"] = list(graph.labels)
    return obj


def graph_from_json_obj(obj: dict) -> Graph:
    try:
        n = int(obj["n"])
        edges = tuple((int(u), int(v)) for u, v in obj["edges"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed graph JSON: {exc}") from exc
    labels = obj.get("labels")
    return Graph(n, edges, tuple(labels) if labels is not None else None)


def parse_graph(text: str) -> Graph:
    """Parse either format: JSON if the payload starts with '{', else edge list."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from exc
        return graph_from_json_obj(obj)
    return parse_edge_list(text)


def load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())
