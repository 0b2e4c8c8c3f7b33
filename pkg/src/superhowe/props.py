"""
Seeded random generators and the module invariants as executable properties.

Used by ``superhowe audit --seed`` and the acceptance suite; the pytest
property tests drive the same checks through hypothesis.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Dict, Optional, Tuple

from .diffops import DEL_ETA, DEL_X, MUL_ETA, MUL_X, DiffOp, PrimOp, apply, compose
from .liealg import build_gl_big, build_gl_small, build_osp22
from .ratlinalg import RatMatrix, nullspace, rank, rref
from .superpoly import SuperMonomial, SuperPoly, VarSpace, parse_poly


def random_scalar(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-6, 6) or 1, rng.randint(1, 4))


def random_monomial(sp: VarSpace, rng: random.Random, degree: int, parity: Optional[int] = None) -> SuperMonomial:
    nv = sp.nvars
    choices = [b for b in range(0, min(degree, nv) + 1) if parity is None or b % 2 == parity]
    if not choices:
        raise ValueError("no monomial of that degree and parity")
    b = rng.choice(choices)
    odd = rng.sample(range(1, nv + 1), b)
    even = [0] * nv
    for _ in range(degree - b):
        even[rng.randrange(nv)] += 1
    return SuperMonomial.make(even, odd)


def random_poly(sp: VarSpace, rng: random.Random, degree: int, terms: int = 3,
                parity: Optional[int] = None) -> SuperPoly:
    t: Dict[SuperMonomial, Fraction] = {}
    for _ in range(terms):
        m = random_monomial(sp, rng, degree, parity)
        t[m] = t.get(m, 0) + random_scalar(rng)
    return SuperPoly(sp, t)


def random_parity_poly(sp: VarSpace, rng: random.Random, dmax: int = 3) -> Tuple[SuperPoly, int]:
    parity = rng.randint(0, 1)
    d = rng.choice([d for d in range(dmax + 1) if parity == 0 or d >= 1])
    return random_poly(sp, rng, d, rng.randint(1, 4), parity), parity


def random_prim(sp: VarSpace, rng: random.Random) -> PrimOp:
    return PrimOp(rng.choice((MUL_X, MUL_ETA, DEL_X, DEL_ETA)), rng.randint(1, sp.nvars))


def random_op(sp: VarSpace, rng: random.Random, words: int = 2, length: int = 2) -> DiffOp:
    parity = rng.randint(0, 1)
    terms = {}
    while len(terms) < words:
        w = tuple(random_prim(sp, rng) for _ in range(rng.randint(0, length)))
        if sum(p.parity for p in w) % 2 == parity:
            terms[w] = random_scalar(rng)
    return DiffOp(sp, terms)


def random_matrix(rng: random.Random, max_size: int = 5) -> RatMatrix:
    r, c = rng.randint(1, max_size), rng.randint(1, max_size)
    density = rng.random()
    rows = [[random_scalar(rng) if rng.random() < density else 0 for _ in range(c)] for _ in range(r)]
    # sometimes force dependent rows
    if r > 1 and rng.random() < 0.5:
        k = random_scalar(rng)
        rows[-1] = [k * x for x in rows[0]]
    return RatMatrix(rows)


# ---------------------------------------------------------------------------
# properties: each returns True on success


def prop_supercommutative(sp: VarSpace, rng: random.Random) -> bool:
    p, a = random_parity_poly(sp, rng)
    q, b = random_parity_poly(sp, rng)
    return p * q == (q * p).scale(-1 if a * b else 1)


def prop_associative(sp: VarSpace, rng: random.Random) -> bool:
    p, q, r = (random_parity_poly(sp, rng)[0] for _ in range(3))
    return (p * q) * r == p * (q * r)


def prop_leibniz(sp: VarSpace, rng: random.Random) -> bool:
    kind = rng.choice((DEL_X, DEL_ETA))
    op = DiffOp.prim(sp, kind, rng.randint(1, sp.nvars))
    p, a = random_parity_poly(sp, rng)
    q, _ = random_parity_poly(sp, rng)
    sign = -1 if (op.parity and a) else 1
    return op(p * q) == op(p) * q + (p * op(q)).scale(sign)


def prop_degree_grading(sp: VarSpace, rng: random.Random) -> bool:
    osp = build_osp22(sp.n)
    gl, gs = build_gl_big(sp.n), build_gl_small(sp.n)
    d = rng.randint(0, 4)
    p = random_poly(sp, rng, d, rng.randint(1, 4))
    cases = [(osp["D12"], -2), (osp["D22"], -2), (osp["R12"], 2), (osp["R22"], 2),
             (osp["F11"], 0), (osp["F21"], 0), (gs["Z12"], 0), (rng.choice(list(gl.generators.values())), 0)]
    for op, shift in cases:
        r = op(p)
        if r and r.degrees() != {d + shift}:
            return False
        if op.degree_shift != shift:
            return False
    return True


def prop_compose(sp: VarSpace, rng: random.Random) -> bool:
    a, b = random_op(sp, rng), random_op(sp, rng)
    p, _ = random_parity_poly(sp, rng)
    return apply(compose(a, b), p) == a(b(p))


def prop_serialization(sp: VarSpace, rng: random.Random) -> bool:
    p = random_poly(sp, rng, rng.randint(0, 4), rng.randint(0, 5))
    return parse_poly(sp, p.to_text()).terms == p.terms


def prop_rref_idempotent(sp: VarSpace, rng: random.Random) -> bool:
    m = random_matrix(rng)
    r = rref(m)
    return rref(r) == r


def prop_nullspace(sp: VarSpace, rng: random.Random) -> bool:
    m = random_matrix(rng)
    ker = nullspace(m)
    return all(all(x == 0 for x in m.mul_vec(v)) for v in ker) and rank(m) + len(ker) == m.cols


PROPERTIES: Dict[str, Callable[[VarSpace, random.Random], bool]] = {
    "supercommutativity p·q = (−1)^{|p||q|} q·p": prop_supercommutative,
    "associativity": prop_associative,
    "Leibniz rule for ∂_x, ∂_η": prop_leibniz,
    "degree grading of D, R, F, ε, ζ": prop_degree_grading,
    "apply(a∘b) = apply(a)∘apply(b)": prop_compose,
    "serialization round trip": prop_serialization,
    "rref idempotent": prop_rref_idempotent,
    "nullspace and rank–nullity": prop_nullspace,
}


def run_random_properties(n: int, rng: random.Random, cases: int) -> Dict[str, Tuple[int, int]]:
    """(passed, total) per property; each property gets ``cases`` draws from one shared stream."""
    sp = VarSpace(n)
    out = {}
    for name, fn in PROPERTIES.items():
        good = sum(1 for _ in range(cases) if fn(sp, rng))
        out[name] = (good, cases)
    return out
