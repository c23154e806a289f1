"""Exact graded Betti numbers and regularity of squarefree monomial ideals.

Everything is computed for the quotient ring R/I (so beta_{0,0} = 1 and the
first syzygy layer counts the minimal generators of I). Two independent
routes are provided:

* ``betti_hochster`` sums reduced homology of induced subcomplexes of the
  Stanley-Reisner complex over vertex subsets, skipping subsets whose
  subcomplex is a cone (a vertex lying in no generator inside the subset).
* ``betti_koszul_oracle`` sums reduced homology of upper Koszul subcomplexes
  over squarefree degrees. It shares only the low-level rank routines with
  the main path and exists to cross-validate it.

Ranks are exact: bitset elimination over GF(2), modular elimination for odd
primes, and fraction-free (Bareiss) integer elimination for characteristic 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .errors import CapacityError, InputError
from .ideals import MonomialIdeal, SimplicialComplex, add_monomial, colon

NEG_INF = float("-inf")
DEFAULT_CAP = 22
ORACLE_CAP = 14
CAP_ENV_VAR = "PATHIDEALS_CAP"


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: characteristic 0 (rationals) or a prime p."""

    characteristic: int = 2

    def __post_init__(self) -> None:
        c = self.characteristic
        if c == 0:
            return
        if c < 2 or any(c % d == 0 for d in range(2, int(c**0.5) + 1)):
            raise InputError(f"characteristic must be 0 or a prime, got {c}")

    @property
    def token(self) -> str:
        return "q" if self.characteristic == 0 else f"gf{self.characteristic}"

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        t = text.strip().lower()
        if t in ("q", "0", "rational", "rationals"):
            return cls(0)
        if t.startswith("gf"):
            t = t[2:]
        try:
            p = int(t)
        except ValueError as exc:
            raise InputError(f"unrecognized field {text!r} (use q, gf2, gf3, ...)") from exc
        if p == 0:
            raise InputError(f"unrecognized field {text!r} (use q for characteristic 0)")
        return cls(p)


GF2 = FieldSpec(2)
GF3 = FieldSpec(3)
QQ = FieldSpec(0)


# -- exact rank kernels ---------------------------------------------------------


def rank_gf2_rows(rows: Iterable[int]) -> int:
    """Rank over GF(2) of rows given as int bitsets (linear-basis reduction)."""
    pivot_by_lead: dict[int, int] = {}
    for row in rows:
        cur = row
        while cur:
            lead = cur.bit_length() - 1
            piv = pivot_by_lead.get(lead)
            if piv is None:
                pivot_by_lead[lead] = cur
                break
            cur ^= piv
    return len(pivot_by_lead)


def rank_mod_p(mat: list[list[int]], p: int) -> int:
    """Rank over GF(p) by dense Gaussian elimination (p prime)."""
    if not mat or not mat[0]:
        return 0
    a = np.asarray(mat, dtype=np.int64) % p
    n_rows, n_cols = a.shape
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = (a[r] * pow(int(a[r, c]), p - 2, p)) % p
        below = np.nonzero(a[r + 1 :, c])[0] + (r + 1)
        if below.size:
            a[below] = (a[below] - np.outer(a[below, c], a[r])) % p
        r += 1
    return r


def rank_exact(mat: list[list[int]]) -> int:
    """Rank over the rationals via fraction-free (Bareiss) elimination.

    Pivots of absolute value 1 are preferred so intermediate entries stay
    small on the sparse +-1 boundary matrices this is used for.
    """
    if not mat or not mat[0]:
        return 0
    m = [[int(x) for x in row] for row in mat]
    n_rows, n_cols = len(m), len(m[0])
    rank, prev = 0, 1
    for col in range(n_cols):
        if rank == n_rows:
            break
        piv = None
        for i in range(rank, n_rows):
            a = m[i][col]
            if a:
                if abs(a) == 1:
                    piv = i
                    break
                if piv is None:
                    piv = i
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        prow = m[rank]
        pval = prow[col]
        for i in range(rank + 1, n_rows):
            row = m[i]
            a = row[col]
            for j in range(col + 1, n_cols):
                row[j] = (pval * row[j] - a * prow[j]) // prev
            row[col] = 0
        prev = pval
        rank += 1
    return rank


# -- reduced simplicial homology --------------------------------------------------


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _homology_dims_from_faces(faces: list[int], char: int) -> dict[int, int]:
    """Reduced homology dims of a complex given its nonempty faces as bitmasks.

    The empty face is always implicitly present. Conventions: the complex
    {empty set} has one dimension of homology in degree -1 and nothing else;
    anything with a vertex has zero homology in degree -1.
    """
    if not faces:
        return {-1: 1}
    by_dim: dict[int, list[int]] = {}
    for m in faces:
        by_dim.setdefault(m.bit_count() - 1, []).append(m)
    maxd = max(by_dim)
    ranks = [0] * (maxd + 2)
    ranks[0] = 1  # augmentation map has rank 1 once there is a vertex
    for d in range(1, maxd + 1):
        cols = {m: i for i, m in enumerate(by_dim[d - 1])}
        if char == 2:
            rows = []
            for face in by_dim[d]:
                bits = 0
                rest = face
                while rest:
                    low = rest & -rest
                    bits |= 1 << cols[face ^ low]
                    rest ^= low
                rows.append(bits)
            ranks[d] = rank_gf2_rows(rows)
        else:
            mat = []
            for face in by_dim[d]:
                row = [0] * len(cols)
                for k, v in enumerate(_bits(face)):
                    row[cols[face ^ (1 << v)]] = -1 if k & 1 else 1
                mat.append(row)
            ranks[d] = rank_exact(mat) if char == 0 else rank_mod_p(mat, char)
    dims = {}
    for d in range(maxd + 1):
        h = len(by_dim[d]) - ranks[d] - ranks[d + 1]
        if h:
            dims[d] = h
    return dims


def _nonempty_submasks(mask: int):
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


def reduced_homology_dims(
    complex_: SimplicialComplex, vertices: Iterable[int], field: FieldSpec = GF2
) -> list[int]:
    """Dims of reduced homology of the induced subcomplex, degrees -1..|W|-1."""
    w = sorted(set(vertices))
    for v in w:
        if not (0 <= v < complex_.n):
            raise InputError(f"vertex {v} out of range n={complex_.n}")
    wmask = sum(1 << v for v in w)
    nonfaces = [sum(1 << v for v in nf) for nf in complex_.min_nonfaces]
    faces = [
        s for s in _nonempty_submasks(wmask) if not any((g & s) == g for g in nonfaces)
    ]
    dims = _homology_dims_from_faces(faces, field.characteristic)
    return [dims.get(d, 0) for d in range(-1, len(w))]


# -- Betti tables -----------------------------------------------------------------


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers of R/I as sorted (i, j, beta) triples."""

    entries: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        cleaned = tuple(sorted((i, j, b) for i, j, b in self.entries if b))
        for i, j, b in cleaned:
            if i < 0 or j < 0 or b < 0:
                raise InputError(f"malformed Betti entry ({i},{j})={b}")
            if i == 0 and (j, b) != (0, 1):
                raise InputError("row i=0 must be exactly beta_{0,0}=1")
        if (0, 0, 1) not in cleaned:
            raise InputError("Betti table of R/I must contain beta_{0,0}=1")
        object.__setattr__(self, "entries", cleaned)

    @classmethod
    def from_dict(cls, entries: Mapping[tuple[int, int], int]) -> "BettiTable":
        return cls(tuple((i, j, b) for (i, j), b in entries.items()))

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {(i, j): b for i, j, b in self.entries}

    def get(self, i: int, j: int) -> int:
        return self.as_dict().get((i, j), 0)

    def regularity(self) -> int:
        return max(j - i for i, j, _ in self.entries)

    def projective_dimension(self) -> int:
        return max(i for i, _, _ in self.entries)

    def generator_degrees(self) -> dict[int, int]:
        """Degree histogram of the first syzygy layer (minimal generators of I)."""
        return {j: b for i, j, b in self.entries if i == 1}

    def entrywise_leq(self, other: "BettiTable") -> bool:
        mine, theirs = self.as_dict(), other.as_dict()
        return all(b <= theirs.get(key, 0) for key, b in mine.items())

    def to_json_obj(self, field: FieldSpec) -> dict:
        return {
            "betti": [[i, j, b] for i, j, b in self.entries],
            "reg": self.regularity(),
            "pd": self.projective_dimension(),
            "field": field.token,
        }

    def csv_text(self) -> str:
        lines = ["i,j,beta"] + [f"{i},{j},{b}" for i, j, b in self.entries]
        return "\n".join(lines) + "\n"

    def pretty(self) -> str:
        """Macaulay2-style triangle: row k = j - i, column i."""
        pd = self.projective_dimension()
        reg = self.regularity()
        grid = [["." for _ in range(pd + 1)] for _ in range(reg + 1)]
        totals = [0] * (pd + 1)
        for i, j, b in self.entries:
            grid[j - i][i] = str(b)
            totals[i] += b
        width = max(6, max(len(str(t)) for t in totals) + 1)
        head = " " * 7 + "".join(f"{i:>{width}}" for i in range(pd + 1))
        total = "total: " + "".join(f"{t:>{width}}" for t in totals)
        body = [
            f"{k:>5}: " + "".join(f"{cell:>{width}}" for cell in row)
            for k, row in enumerate(grid)
        ]
        return "\n".join([head, total, *body])


def _check_capacity(ideal: MonomialIdeal, cap: int) -> None:
    if ideal.n > cap:
        raise CapacityError(
            f"ambient n={ideal.n} exceeds the enumeration cap {cap}; "
            f"raise it with --cap or the {CAP_ENV_VAR} environment variable"
        )


def betti_hochster(
    ideal: MonomialIdeal,
    field: FieldSpec = GF2,
    prune: bool = True,
    cap: int = DEFAULT_CAP,
) -> BettiTable:
    """Betti table of R/I by summing homology of induced subcomplexes.

    With ``prune`` enabled, subsets containing a vertex that lies in no
    generator inside the subset are skipped (their subcomplex is a cone).
    """
    if ideal.is_unit:
        raise InputError("Betti table of the unit ideal is not defined")
    _check_capacity(ideal, cap)
    table: dict[tuple[int, int], int] = {(0, 0): 1}
    if ideal.is_zero:
        return BettiTable.from_dict(table)
    char = field.characteristic

    def accumulate(w_popcount: int, dims: dict[int, int]) -> None:
        for d, h in dims.items():
            i = w_popcount - 1 - d
            if i >= 1:
                table[(i, w_popcount)] = table.get((i, w_popcount), 0) + h

    if prune:
        used = sorted(set().union(*ideal.gens))
        pos = {v: k for k, v in enumerate(used)}
        gmasks = [sum(1 << pos[v] for v in g) for g in ideal.gens]
        masks = np.arange(1, 1 << len(used), dtype=np.int64)
        is_face = np.ones(masks.shape, dtype=bool)
        covered = np.zeros(masks.shape, dtype=np.int64)
        for g in gmasks:
            inside = (masks & g) == g
            is_face &= ~inside
            covered |= np.where(inside, np.int64(g), np.int64(0))
        faces = masks[is_face]
        survivors = sorted((int(w) for w in masks[covered == masks]),
                           key=lambda w: (w.bit_count(), w))
        for w in survivors:
            sel = faces[(faces & ~w) == 0]
            dims = _homology_dims_from_faces([int(f) for f in sel], char)
            accumulate(w.bit_count(), dims)
    else:
        gmasks = [sum(1 << v for v in g) for g in ideal.gens]
        for w in range(1, 1 << ideal.n):
            faces_w = [
                s
                for s in _nonempty_submasks(w)
                if not any((g & s) == g for g in gmasks)
            ]
            dims = _homology_dims_from_faces(faces_w, char)
            accumulate(w.bit_count(), dims)
    return BettiTable.from_dict(table)


# -- independent oracle: upper Koszul subcomplexes ---------------------------------


def _oracle_homology(faces: list[tuple[int, ...]], char: int) -> dict[int, int]:
    """Homology dims for the oracle; faces given as sorted vertex tuples.

    Deliberately separate from the main route: dense matrices with the
    (d-1)-faces as rows, sharing only the rank kernels.
    """
    nonempty = [f for f in faces if f]
    if not nonempty:
        return {-1: 1}
    by_dim: dict[int, list[tuple[int, ...]]] = {}
    for f in nonempty:
        by_dim.setdefault(len(f) - 1, []).append(f)
    maxd = max(by_dim)
    ranks = [0] * (maxd + 2)
    ranks[0] = 1
    for d in range(1, maxd + 1):
        row_index = {f: i for i, f in enumerate(sorted(by_dim[d - 1]))}
        mat = [[0] * len(by_dim[d]) for _ in row_index]
        for col, face in enumerate(sorted(by_dim[d])):
            for k in range(len(face)):
                facet = face[:k] + face[k + 1 :]
                mat[row_index[facet]][col] = -1 if k & 1 else 1
        ranks[d] = rank_exact(mat) if char == 0 else rank_mod_p(mat, char)
    dims = {}
    for d in range(maxd + 1):
        h = len(by_dim[d]) - ranks[d] - ranks[d + 1]
        if h:
            dims[d] = h
    return dims


def betti_koszul_oracle(
    ideal: MonomialIdeal, field: FieldSpec = GF2, cap: int = ORACLE_CAP
) -> BettiTable:
    """Betti table of R/I from upper Koszul subcomplexes, for cross-validation.

    For each squarefree degree b with x^b in I, the subcomplex has the faces
    S inside b with x^(b-S) still in I; its homology in degree d contributes
    to beta_{d+2, |b|}. Intended for small ambients only.
    """
    if ideal.is_unit:
        raise InputError("Betti table of the unit ideal is not defined")
    _check_capacity(ideal, cap)
    table: dict[tuple[int, int], int] = {(0, 0): 1}
    if ideal.is_zero:
        return BettiTable.from_dict(table)
    char = field.characteristic
    gmasks = [sum(1 << v for v in g) for g in ideal.gens]
    for b in range(1, 1 << ideal.n):
        if not any((g & b) == g for g in gmasks):
            continue
        faces = [
            tuple(_bits(s))
            for s in list(_nonempty_submasks(b)) + [0]
            if any((g & (b ^ s)) == g for g in gmasks)
        ]
        dims = _oracle_homology(faces, char)
        j = b.bit_count()
        for d, h in dims.items():
            table[(d + 2, j)] = table.get((d + 2, j), 0) + h
    return BettiTable.from_dict(table)


# -- regularity and the short-exact-sequence bound ---------------------------------


def regularity(
    ideal: MonomialIdeal,
    field: FieldSpec = GF2,
    prune: bool = True,
    cap: int = DEFAULT_CAP,
):
    """reg(R/I): max j - i over nonzero Betti entries; -inf for the unit ideal."""
    if ideal.is_unit:
        return NEG_INF
    return betti_hochster(ideal, field, prune=prune, cap=cap).regularity()


@dataclass(frozen=True)
class SesBoundReport:
    """The three regularities compared by the short-exact-sequence bound.

    For 0 -> R/(I:m)(-deg m) -> R/I -> R/(I + <m>) -> 0 the middle regularity
    is at most the max of the outer two (with the twist added on the left).
    """

    reg_quotient: float
    reg_colon_shifted: float
    reg_sum: float

    @property
    def holds(self) -> bool:
        return self.reg_quotient <= max(self.reg_colon_shifted, self.reg_sum)


def verify_ses_bound(
    ideal: MonomialIdeal,
    m: Iterable[int],
    field: FieldSpec = GF2,
    cap: int = DEFAULT_CAP,
) -> SesBoundReport:
    support = frozenset(m)
    if not support:
        raise InputError("the monomial must not be 1")
    reg_quotient = regularity(ideal, field, cap=cap)
    reg_colon = regularity(colon(ideal, support), field, cap=cap) + len(support)
    reg_sum = regularity(add_monomial(ideal, support), field, cap=cap)
    return SesBoundReport(reg_quotient, reg_colon, reg_sum)
