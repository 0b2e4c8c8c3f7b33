"""
Differential operators on S(E) built from the four primitive symbols
M_{x_i}, M_{η_i}, ∂_{x_i}, ∂_{η_i}.

A DiffOp is a linear combination of words; a word acts right to left. Words
are kept as written (no normal ordering), and operator identities are decided
by applying both sides to graded monomial bases.

Every primitive sends a monomial to a scalar multiple of a single monomial,
so a word does too. DiffOp caches the image of each monomial it has seen,
which makes repeated application across a degree basis cheap.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, NamedTuple, Optional, Tuple

from .ratlinalg import as_scalar
from .superpoly import SuperMonomial, SuperPoly, VarSpace, basis_of_degree

MUL_X, MUL_ETA, DEL_X, DEL_ETA = "mul_x", "mul_eta", "del_x", "del_eta"
KINDS = (MUL_X, MUL_ETA, DEL_X, DEL_ETA)
_SYMBOL = {MUL_X: "x", MUL_ETA: "e", DEL_X: "dx", DEL_ETA: "de"}


class PrimOp(NamedTuple):
    kind: str
    index: int

    @property
    def parity(self) -> int:
        return 1 if self.kind in (MUL_ETA, DEL_ETA) else 0

    @property
    def shift(self) -> int:
        return 1 if self.kind in (MUL_X, MUL_ETA) else -1

    def __str__(self):
        return f"{_SYMBOL[self.kind]}{self.index}"


def _popcount_below(mask: int, i: int) -> int:
    return bin(mask & ((1 << (i - 1)) - 1)).count("1")


def prim_act(p: PrimOp, c: Fraction, m: SuperMonomial) -> Tuple[Fraction, Optional[SuperMonomial]]:
    """Apply one primitive to c*m; returns (0, None) when the result vanishes."""
    i = p.index
    kind = p.kind
    if kind == MUL_X:
        e = list(m.even)
        e[i - 1] += 1
        return c, SuperMonomial(tuple(e), m.odd)
    if kind == DEL_X:
        k = m.even[i - 1]
        if not k:
            return Fraction(0), None
        e = list(m.even)
        e[i - 1] = k - 1
        return c * k, SuperMonomial(tuple(e), m.odd)
    bit = 1 << (i - 1)
    sign = -1 if _popcount_below(m.odd, i) & 1 else 1
    if kind == MUL_ETA:
        if m.odd & bit:
            return Fraction(0), None
        return c * sign, SuperMonomial(m.even, m.odd | bit)
    # DEL_ETA: odd left derivation
    if not m.odd & bit:
        return Fraction(0), None
    return c * sign, SuperMonomial(m.even, m.odd ^ bit)


Word = Tuple[PrimOp, ...]


class DiffOp:
    """Parity-homogeneous linear combination of primitive words."""

    __slots__ = ("space", "terms", "parity", "_cache")

    def __init__(self, space: VarSpace, terms: Optional[Dict[Word, object]] = None):
        self.space = space
        self.terms: Dict[Word, Fraction] = {}
        for w, c in (terms or {}).items():
            w = tuple(PrimOp(*p) for p in w)
            for p in w:
                if p.kind not in KINDS or not 1 <= p.index <= space.nvars:
                    raise ValueError(f"bad primitive {tuple(p)!r}")
            c = as_scalar(c)
            if c:
                self.terms[w] = self.terms.get(w, 0) + c
                if not self.terms[w]:
                    del self.terms[w]
        parities = {sum(p.parity for p in w) % 2 for w in self.terms}
        if len(parities) > 1:
            raise ValueError("operator is not parity-homogeneous")
        self.parity = parities.pop() if parities else 0
        self._cache: Dict[SuperMonomial, Dict[SuperMonomial, Fraction]] = {}

    # constructors -------------------------------------------------------
    @classmethod
    def prim(cls, space: VarSpace, kind: str, index: int, c=1) -> "DiffOp":
        return cls(space, {(PrimOp(kind, index),): c})

    @classmethod
    def scalar(cls, space: VarSpace, c) -> "DiffOp":
        return cls(space, {(): c})

    @classmethod
    def identity(cls, space: VarSpace) -> "DiffOp":
        return cls.scalar(space, 1)

    @classmethod
    def zero(cls, space: VarSpace) -> "DiffOp":
        return cls(space, {})

    # algebra ------------------------------------------------------------
    def _check(self, other: "DiffOp"):
        if not isinstance(other, DiffOp):
            raise TypeError("expected a DiffOp")
        if self.space != other.space:
            raise ValueError("operators live on different variable spaces")

    def __add__(self, other: "DiffOp") -> "DiffOp":
        self._check(other)
        t = dict(self.terms)
        for w, c in other.terms.items():
            t[w] = t.get(w, 0) + c
        return DiffOp(self.space, t)

    def __neg__(self) -> "DiffOp":
        return DiffOp(self.space, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "DiffOp") -> "DiffOp":
        return self + (-other)

    def scale(self, c) -> "DiffOp":
        c = as_scalar(c)
        return DiffOp(self.space, {w: a * c for w, a in self.terms.items()})

    def __rmul__(self, c) -> "DiffOp":
        return self.scale(c)

    def __matmul__(self, other: "DiffOp") -> "DiffOp":
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self.space == other.space and self.terms == other.terms

    def __hash__(self):
        return hash((self.space, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    @property
    def degree_shift(self) -> Optional[int]:
        """Uniform change of total degree, or None if words disagree."""
        shifts = {sum(p.shift for p in w) for w in self.terms}
        if len(shifts) == 1:
            return shifts.pop()
        return 0 if not shifts else None

    # action -------------------------------------------------------------
    def image(self, m: SuperMonomial) -> Dict[SuperMonomial, Fraction]:
        """op(m) as a term map (cached; do not mutate the result)."""
        r = self._cache.get(m)
        if r is not None:
            return r
        out: Dict[SuperMonomial, Fraction] = {}
        for w, c in self.terms.items():
            mono: Optional[SuperMonomial] = m
            for p in reversed(w):
                c, mono = prim_act(p, c, mono)
                if mono is None:
                    break
            if mono is None:
                continue
            v = out.get(mono, 0) + c
            if v:
                out[mono] = v
            else:
                out.pop(mono, None)
        self._cache[m] = out
        return out

    def apply_terms(self, terms: Dict[SuperMonomial, Fraction]) -> Dict[SuperMonomial, Fraction]:
        out: Dict[SuperMonomial, Fraction] = {}
        for m, c in terms.items():
            for mm, a in self.image(m).items():
                v = out.get(mm, 0) + c * a
                if v:
                    out[mm] = v
                else:
                    out.pop(mm, None)
        return out

    def __call__(self, p: SuperPoly) -> SuperPoly:
        return apply(self, p)

    def __repr__(self):
        if not self.terms:
            return "DiffOp(0)"
        parts = []
        for w, c in self.terms.items():
            word = "·".join(str(p) for p in w) or "1"
            parts.append(f"{c}*{word}")
        return "DiffOp(" + " + ".join(parts) + ")"


def apply(op: DiffOp, p: SuperPoly) -> SuperPoly:
    if op.space != p.space:
        raise ValueError("operator and polynomial live on different variable spaces")
    return SuperPoly._raw(p.space, op.apply_terms(p.terms))


def compose(a: DiffOp, b: DiffOp) -> DiffOp:
    """a∘b: apply b first, then a."""
    a._check(b)
    t: Dict[Word, Fraction] = {}
    for wa, ca in a.terms.items():
        for wb, cb in b.terms.items():
            w = wa + wb
            t[w] = t.get(w, 0) + ca * cb
    return DiffOp(a.space, t)


def supercommutator(a: DiffOp, b: DiffOp) -> DiffOp:
    """[a, b] = a∘b − (−1)^{|a||b|} b∘a."""
    a._check(b)
    sign = -1 if a.parity * b.parity else 1
    return compose(a, b) - compose(b, a).scale(sign)


def op_equal_on_degree(a: DiffOp, b: DiffOp, dmax: int) -> bool:
    a._check(b)
    for d in range(dmax + 1):
        for m in basis_of_degree(a.space, d):
            if a.image(m) != b.image(m):
                return False
    return True


def linear_combination(space: VarSpace, pairs: Iterable[Tuple[object, DiffOp]]) -> DiffOp:
    total = DiffOp.zero(space)
    for c, op in pairs:
        total = total + op.scale(c)
    return total


# shorthand constructors used throughout the algebra builders

def X(space: VarSpace, i: int) -> DiffOp:
    return DiffOp.prim(space, MUL_X, i)


def ETA(space: VarSpace, i: int) -> DiffOp:
    return DiffOp.prim(space, MUL_ETA, i)


def DX(space: VarSpace, i: int) -> DiffOp:
    return DiffOp.prim(space, DEL_X, i)


def DETA(space: VarSpace, i: int) -> DiffOp:
    return DiffOp.prim(space, DEL_ETA, i)
