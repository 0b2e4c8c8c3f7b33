"""
Exact rational linear algebra.

Two layers live here. ``RatMatrix`` with ``rref``/``nullspace``/``rank``/``in_span``
is the small dense interface (lists of ``Fraction``). Underneath, ``Echelon``
keeps an incrementally grown row echelon form with sparse rows keyed by
orderable column labels; it is what the decomposition engine uses, because
the operator matrices arising there have a handful of nonzeros per column.

Vectors are columns; a matrix acts on a column vector from the left.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

Scalar = Fraction
SparseVec = Dict[Hashable, Fraction]


def as_scalar(x) -> Fraction:
    """Coerce an int/Fraction/'p/q' string to Fraction; floats are rejected."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not an exact rational: {x!r} ({type(x).__name__})")


class RatMatrix:
    """Dense matrix of exact rationals."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence], cols: Optional[int] = None):
        self.entries: Tuple[Tuple[Fraction, ...], ...] = tuple(
            tuple(as_scalar(x) for x in row) for row in entries
        )
        self.rows = len(self.entries)
        if cols is None:
            cols = len(self.entries[0]) if self.entries else 0
        self.cols = cols
        for row in self.entries:
            if len(row) != cols:
                raise ValueError("ragged matrix")

    @classmethod
    def zero(cls, rows: int, cols: int) -> "RatMatrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, size: int) -> "RatMatrix":
        return cls([[int(i == j) for j in range(size)] for i in range(size)], cols=size)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "RatMatrix":
        return cls([[col[i] for col in columns] for i in range(rows)], cols=len(columns))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.cols == other.cols and self.entries == other.entries

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"RatMatrix({self.rows}x{self.cols}: [{body}])"

    def column(self, j: int) -> List[Fraction]:
        return [row[j] for row in self.entries]

    def mul_vec(self, v: Sequence) -> List[Fraction]:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        v = [as_scalar(x) for x in v]
        return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in self.entries]


def _rref_rows(m: RatMatrix) -> Tuple[List[List[Fraction]], List[int]]:
    a = [list(row) for row in m.entries]
    pivots: List[int] = []
    r = 0
    for c in range(m.cols):
        piv = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return a, pivots


def rref(m: RatMatrix) -> RatMatrix:
    """Reduced row echelon form (pivots 1, zeros elsewhere in pivot columns)."""
    a, _ = _rref_rows(m)
    return RatMatrix(a, cols=m.cols)


def rank(m: RatMatrix) -> int:
    return len(_rref_rows(m)[1])


def nullspace(m: RatMatrix) -> List[List[Fraction]]:
    """Basis of the right kernel, one vector per free column."""
    a, pivots = _rref_rows(m)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for row, p in zip(a, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def in_span(v: Sequence, basis: Sequence[Sequence]) -> Tuple[bool, Optional[List[Fraction]]]:
    """Decide v ∈ span(basis); on success also return coefficients c with Σ c_i b_i = v."""
    v = [as_scalar(x) for x in v]
    if not basis:
        return (all(x == 0 for x in v), [] if all(x == 0 for x in v) else None)
    for b in basis:
        if len(b) != len(v):
            raise ValueError("vectors must have equal length")
    ok, coeffs = sparse_in_span(_dense_to_sparse(v), [_dense_to_sparse(b) for b in basis])
    if not ok:
        return False, None
    return True, [coeffs.get(i, Fraction(0)) for i in range(len(basis))]


def _dense_to_sparse(v: Sequence) -> SparseVec:
    return {i: as_scalar(x) for i, x in enumerate(v) if x != 0}


# ---------------------------------------------------------------------------
# sparse incremental machinery


def _axpy(w: SparseVec, c: Fraction, row: SparseVec) -> None:
    """w -= c * row, in place, dropping zeros."""
    for k, a in row.items():
        nv = w.get(k, 0) - c * a
        if nv:
            w[k] = nv
        else:
            w.pop(k, None)


class Echelon:
    """
    Row echelon form grown one vector at a time.

    Each stored row has pivot coefficient 1 at its smallest key. With
    ``track=True`` every row also remembers which combination of the inserted
    vectors it equals, which is how kernels and span coordinates are read off.
    Keys must be mutually comparable.
    """

    def __init__(self, track: bool = False):
        self.track = track
        self.rows: Dict[Hashable, SparseVec] = {}
        self.combos: Dict[Hashable, SparseVec] = {}
        self.count = 0

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: SparseVec, combo: Optional[SparseVec] = None) -> SparseVec:
        w = {k: a for k, a in v.items() if a}
        heap = [k for k in w if k in self.rows]
        heapq.heapify(heap)
        while heap:
            p = heapq.heappop(heap)
            c = w.get(p)
            if not c:
                continue
            row = self.rows[p]
            _axpy(w, c, row)
            if combo is not None:
                _axpy(combo, c, self.combos[p])
            for k in row:
                if k in w and k in self.rows and k != p:
                    heapq.heappush(heap, k)
        return w

    def add(self, v: SparseVec) -> Tuple[bool, Optional[SparseVec]]:
        """
        Insert v. Returns (True, None) if v was independent. For a dependent v
        with tracking on, returns (False, relation) where relation is a
        combination of inserted vectors (by insertion index) summing to zero.
        """
        idx = self.count
        self.count += 1
        combo = {idx: Fraction(1)} if self.track else None
        w = self.reduce(v, combo)
        if not w:
            return False, combo
        p = min(w)
        inv = 1 / Fraction(w[p])
        self.rows[p] = {k: a * inv for k, a in w.items()}
        if self.track:
            self.combos[p] = {k: a * inv for k, a in combo.items()}
        return True, None

    def contains(self, v: SparseVec) -> bool:
        return not self.reduce(v)


def sparse_rank(vectors: Iterable[SparseVec]) -> int:
    e = Echelon()
    for v in vectors:
        e.add(v)
    return e.rank


def sparse_kernel(columns: Sequence[SparseVec]) -> List[SparseVec]:
    """
    Kernel of the linear map whose j-th column is columns[j]. Returned vectors
    are sparse dicts over column indices; one per dependent column.
    """
    e = Echelon(track=True)
    out = []
    for col in columns:
        ok, rel = e.add(col)
        if not ok:
            out.append(rel)
    return out


def sparse_in_span(v: SparseVec, basis: Sequence[SparseVec]) -> Tuple[bool, Optional[SparseVec]]:
    e = Echelon(track=True)
    for b in basis:
        e.add(b)
    combo: SparseVec = {}
    w = e.reduce(v, combo)
    if w:
        return False, None
    # reduce() accumulated -Σ c_i b_i; flip the sign to get v = Σ c_i b_i
    return True, {k: -a for k, a in combo.items() if a}


def sparse_rref_basis(vectors: Sequence[SparseVec]) -> List[SparseVec]:
    """Canonical basis of span(vectors): fully reduced rows, pivot 1, sorted by pivot."""
    e = Echelon()
    for v in vectors:
        e.add(v)
    pivots = sorted(e.rows)
    rows = {p: dict(e.rows[p]) for p in pivots}
    for p in reversed(pivots):
        for q in pivots:
            if q != p and p in rows[q]:
                _axpy(rows[q], rows[q][p], rows[p])
    return [rows[p] for p in pivots]
