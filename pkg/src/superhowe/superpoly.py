"""
The supersymmetric algebra S(E) on 2n+1 even variables x_1..x_{2n+1} and
2n+1 odd variables η_1..η_{2n+1}: a polynomial ring tensored with an
exterior algebra.

A monomial is stored canonically as (even exponent tuple, odd bitmask); bit
i-1 of the mask stands for η_i and the odd factors are always understood in
ascending index order. Any sign coming from reordering odd factors is pushed
into the coefficient, so two polynomials are equal iff their term maps are.

Text form (1-based, ``e`` for η)::

    x1 x3 e2 - x2 x3 e1 - x3^2 e3 - e1 e2 e3
    -3/2 * x1^2 x3 e1 e2
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from .ratlinalg import as_scalar


@dataclass(frozen=True)
class VarSpace:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")

    @property
    def nvars(self) -> int:
        return 2 * self.n + 1


class SuperMonomial(NamedTuple):
    even: Tuple[int, ...]
    odd: int  # bitmask, bit i-1 <-> eta_i

    @classmethod
    def make(cls, even: Sequence[int], odd_indices: Iterable[int] = ()) -> "SuperMonomial":
        mask = 0
        for i in odd_indices:
            bit = 1 << (i - 1)
            if mask & bit:
                raise ValueError(f"eta_{i} repeated")
            mask |= bit
        return cls(tuple(even), mask)

    @property
    def odd_indices(self) -> Tuple[int, ...]:
        out, m, i = [], self.odd, 1
        while m:
            if m & 1:
                out.append(i)
            m >>= 1
            i += 1
        return tuple(out)

    @property
    def degree(self) -> int:
        return sum(self.even) + bin(self.odd).count("1")

    @property
    def parity(self) -> int:
        return bin(self.odd).count("1") & 1

    def sort_key(self):
        """Basis order: odd index list lexicographically, then higher x_1, x_2, ... powers first."""
        return (self.odd_indices, tuple(-e for e in self.even))

    def to_text(self) -> str:
        parts = []
        for i, e in enumerate(self.even, start=1):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        parts.extend(f"e{i}" for i in self.odd_indices)
        return " ".join(parts) if parts else "1"


def _crossings(a: int, b: int) -> int:
    """Number of pairs (i in a, j in b) with i > j, for odd bitmasks."""
    count = 0
    while b:
        low = b & -b
        count += bin(a & ~((low << 1) - 1)).count("1")
        b ^= low
    return count


def mono_mul(a: SuperMonomial, b: SuperMonomial) -> Tuple[int, Optional[SuperMonomial]]:
    """Product of monomials as (sign, monomial); sign 0 (and None) when an η repeats."""
    if a.odd & b.odd:
        return 0, None
    sign = -1 if _crossings(a.odd, b.odd) & 1 else 1
    even = tuple(x + y for x, y in zip(a.even, b.even))
    return sign, SuperMonomial(even, a.odd | b.odd)


class SuperPoly:
    """Finite rational combination of SuperMonomials over a fixed VarSpace."""

    __slots__ = ("space", "terms")

    def __init__(self, space: VarSpace, terms: Optional[Dict[SuperMonomial, Fraction]] = None):
        self.space = space
        self.terms: Dict[SuperMonomial, Fraction] = {}
        if terms:
            nv = space.nvars
            for m, c in terms.items():
                if len(m.even) != nv or m.odd >> nv:
                    raise ValueError(f"monomial {m} does not live in {space}")
                c = as_scalar(c)
                if c:
                    self.terms[m] = c

    @classmethod
    def _raw(cls, space: VarSpace, terms: Dict[SuperMonomial, Fraction]) -> "SuperPoly":
        p = cls.__new__(cls)
        p.space = space
        p.terms = terms
        return p

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls, space: VarSpace) -> "SuperPoly":
        return cls._raw(space, {})

    @classmethod
    def one(cls, space: VarSpace, c=1) -> "SuperPoly":
        return cls(space, {SuperMonomial((0,) * space.nvars, 0): c})

    @classmethod
    def monomial(cls, space: VarSpace, m: SuperMonomial, c=1) -> "SuperPoly":
        return cls(space, {m: c})

    @classmethod
    def x(cls, space: VarSpace, i: int, power: int = 1) -> "SuperPoly":
        _check_index(space, i)
        even = [0] * space.nvars
        even[i - 1] = power
        return cls(space, {SuperMonomial(tuple(even), 0): 1})

    @classmethod
    def eta(cls, space: VarSpace, *indices: int) -> "SuperPoly":
        """η_{i_1} η_{i_2} ⋯ in the order given (sign applied), zero on repeats."""
        p = cls.one(space)
        for i in indices:
            _check_index(space, i)
            p = p * cls(space, {SuperMonomial((0,) * space.nvars, 1 << (i - 1)): 1})
        return p

    # structure ----------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[SuperMonomial, Fraction]]:
        return iter(self.terms.items())

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, SuperPoly):
            return NotImplemented
        return self.space == other.space and self.terms == other.terms

    def __hash__(self):
        return hash((self.space, frozenset(self.terms.items())))

    def coeff(self, m: SuperMonomial) -> Fraction:
        return self.terms.get(m, Fraction(0))

    def degrees(self) -> set:
        return {m.degree for m in self.terms}

    @property
    def degree(self) -> int:
        """Total degree of a homogeneous polynomial (0 for the zero polynomial)."""
        ds = self.degrees()
        if len(ds) > 1:
            raise ValueError("polynomial is not homogeneous")
        return ds.pop() if ds else 0

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def parity(self) -> int:
        ps = {m.parity for m in self.terms}
        if len(ps) > 1:
            raise ValueError("polynomial is not parity-homogeneous")
        return ps.pop() if ps else 0

    # arithmetic ---------------------------------------------------------
    def _check(self, other: "SuperPoly"):
        if self.space != other.space:
            raise ValueError("polynomials live in different variable spaces")

    def __add__(self, other: "SuperPoly") -> "SuperPoly":
        self._check(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            v = t.get(m, 0) + c
            if v:
                t[m] = v
            else:
                t.pop(m, None)
        return SuperPoly._raw(self.space, t)

    def __neg__(self) -> "SuperPoly":
        return SuperPoly._raw(self.space, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "SuperPoly") -> "SuperPoly":
        return self + (-other)

    def scale(self, c) -> "SuperPoly":
        c = as_scalar(c)
        if not c:
            return SuperPoly.zero(self.space)
        return SuperPoly._raw(self.space, {m: a * c for m, a in self.terms.items()})

    def __rmul__(self, c) -> "SuperPoly":
        return self.scale(c)

    def __mul__(self, other) -> "SuperPoly":
        if not isinstance(other, SuperPoly):
            return self.scale(other)
        self._check(other)
        t: Dict[SuperMonomial, Fraction] = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                s, m = mono_mul(a, b)
                if not s:
                    continue
                v = t.get(m, 0) + s * ca * cb
                if v:
                    t[m] = v
                else:
                    t.pop(m, None)
        return SuperPoly._raw(self.space, t)

    def __pow__(self, k: int) -> "SuperPoly":
        p = SuperPoly.one(self.space)
        for _ in range(k):
            p = p * self
        return p

    def leading(self) -> Tuple[SuperMonomial, Fraction]:
        """First term in basis order."""
        m = min(self.terms, key=SuperMonomial.sort_key)
        return m, self.terms[m]

    def normalized(self) -> "SuperPoly":
        """Scale so that the first coefficient in basis order is 1."""
        if not self.terms:
            return self
        return self.scale(1 / self.leading()[1])

    # text ---------------------------------------------------------------
    def to_text(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for m in sorted(self.terms, key=lambda m: (m.degree, m.sort_key())):
            c = self.terms[m]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = m.to_text()
            if mono == "1":
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a} * {mono}"
            out.append((sign, body))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    __str__ = to_text

    def __repr__(self):
        return f"SuperPoly(n={self.space.n}: {self.to_text()})"


def _check_index(space: VarSpace, i: int):
    if not 1 <= i <= space.nvars:
        raise ValueError(f"variable index {i} outside 1..{space.nvars}")


_TERM_SPLIT = re.compile(r"\s+([+-])\s+")
_FACTOR = re.compile(r"^(x|e)(\d+)(?:\^(\d+))?$")


def parse_poly(space: VarSpace, text: str) -> SuperPoly:
    """Inverse of SuperPoly.to_text (also accepts odd factors out of order)."""
    text = text.strip()
    if text == "0":
        return SuperPoly.zero(space)
    signs, bodies = ["+"], []
    if text.startswith("-"):
        signs[0] = "-"
        text = text[1:].lstrip()
    pieces = _TERM_SPLIT.split(text)
    bodies.append(pieces[0])
    for k in range(1, len(pieces), 2):
        signs.append(pieces[k])
        bodies.append(pieces[k + 1])
    total = SuperPoly.zero(space)
    for sign, body in zip(signs, bodies):
        if " * " in body:
            cs, mono = body.split(" * ", 1)
            c = Fraction(cs)
        elif re.fullmatch(r"\d+(/\d+)?", body):
            c, mono = Fraction(body), "1"
        else:
            c, mono = Fraction(1), body
        if sign == "-":
            c = -c
        term = SuperPoly.one(space, c)
        if mono != "1":
            for tok in mono.split():
                mt = _FACTOR.match(tok)
                if not mt:
                    raise ValueError(f"cannot parse factor {tok!r}")
                kind, idx, pw = mt.group(1), int(mt.group(2)), int(mt.group(3) or 1)
                if kind == "x":
                    term = term * SuperPoly.x(space, idx, pw)
                else:
                    if pw != 1:
                        raise ValueError("odd variables square to zero")
                    term = term * SuperPoly.eta(space, idx)
        total = total + term
    return total


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _subsets(nv: int, size: int, start: int = 1) -> Iterator[Tuple[int, ...]]:
    if size == 0:
        yield ()
        return
    for i in range(start, nv + 1):
        for rest in _subsets(nv, size - 1, i + 1):
            yield (i,) + rest


def basis_of_degree(space: VarSpace, d: int) -> List[SuperMonomial]:
    """All monomials of total degree d, in SuperMonomial.sort_key order."""
    if d < 0:
        return []
    nv = space.nvars
    out = []
    for b in range(0, min(d, nv) + 1):
        for odd in _subsets(nv, b):
            mask = sum(1 << (i - 1) for i in odd)
            for even in _compositions(d - b, nv):
                out.append(SuperMonomial(even, mask))
    out.sort(key=SuperMonomial.sort_key)
    return out


def dim_of_degree(space: VarSpace, d: int) -> int:
    nv = space.nvars
    return sum(comb(nv, b) * comb(d - b + nv - 1, nv - 1) for b in range(0, min(d, nv) + 1))


def coords(p: SuperPoly, basis: Sequence[SuperMonomial], index: Optional[Dict] = None) -> List[Fraction]:
    """Coordinate vector of p in an ordered monomial basis."""
    if index is None:
        index = {m: i for i, m in enumerate(basis)}
    v = [Fraction(0)] * len(basis)
    for m, c in p.terms.items():
        i = index.get(m)
        if i is None:
            raise ValueError(f"monomial {m.to_text()} is not in the basis (degree mismatch?)")
        v[i] = c
    return v


def from_coords(space: VarSpace, v: Sequence, basis: Sequence[SuperMonomial]) -> SuperPoly:
    return SuperPoly(space, {m: c for m, c in zip(basis, v) if c})
