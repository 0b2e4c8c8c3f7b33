"""
Explicit highest weight vector families and the odd-reflection procedure.

Families (all 1-based, n fixed by the VarSpace):

    gamma_poly(I)       Σ_j (−1)^{j−1} x_{i_j} η(I ∖ i_j), with Γ(∅) = 0
    omega(d, k)         b + b′ highest weight vectors for gl(2n|1) × gl(1|1)
    omega_tilde(d, k)   the same after odd reflections, for b̃ + b′
    delta(k), s_vector  harmonic spo highest weight vectors in the exterior copy
    p_vector(d, k)      joint spo + k′ highest weight vectors of the harmonics

Signs are fixed exactly as the closed formulas are written; identities that
only hold up to a scalar are checked with ``proportional``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations
from math import factorial, prod
from typing import List, Optional, Sequence, Tuple

from .liealg import Weight, alpha, borel, build_gl_small, epsilon, is_hwv
from .ratlinalg import in_span
from .superpoly import SuperPoly, VarSpace

F = Fraction
FAMILIES = ("omega", "omega_tilde", "nu", "gamma_poly", "s", "delta", "p", "q")


class FamilyRangeError(ValueError):
    """Parameters outside the range on which a family is defined."""


def bar(i: int, n: int) -> int:
    return 2 * n + 1 - i


def bar_set(I: Sequence[int], n: int) -> Tuple[int, ...]:
    return tuple(sorted(bar(i, n) for i in I))


def interval(k: int) -> Tuple[int, ...]:
    """[k] = {1, ..., k}."""
    return tuple(range(1, k + 1))


def eta(sp: VarSpace, I: Sequence[int]) -> SuperPoly:
    """η(I) = η_{i_1} ⋯ η_{i_a} for I sorted ascending (η(∅) = 1)."""
    return SuperPoly.eta(sp, *sorted(I))


def gamma_poly(sp: VarSpace, I: Sequence[int]) -> SuperPoly:
    I = tuple(sorted(I))
    if len(set(I)) != len(I):
        raise ValueError("index set has repeats")
    total = SuperPoly.zero(sp)
    for j, i in enumerate(I):
        rest = I[:j] + I[j + 1:]
        term = SuperPoly.x(sp, i) * eta(sp, rest)
        total = total + (term if j % 2 == 0 else -term)
    return total


def column_det(matrix: Sequence[Sequence[SuperPoly]]) -> SuperPoly:
    """Column determinant Σ_σ sgn(σ) M_{σ(1),1} M_{σ(2),2} ⋯ M_{σ(a),a}, products taken left to right."""
    a = len(matrix)
    sp = matrix[0][0].space
    total = SuperPoly.zero(sp)
    for perm in permutations(range(a)):
        inv = sum(1 for i in range(a) for j in range(i + 1, a) if perm[i] > perm[j])
        term = SuperPoly.one(sp)
        for col, row in enumerate(perm):
            term = term * matrix[row][col]
            if not term:
                break
        if term:
            total = total + (term if inv % 2 == 0 else -term)
    return total


def gamma_matrix(sp: VarSpace, I: Sequence[int]) -> List[List[SuperPoly]]:
    """The a×a matrix with x_{i_r} in column 1 and η_{i_r} in each other column of row r."""
    I = sorted(I)
    a = len(I)
    return [[SuperPoly.x(sp, i)] + [SuperPoly.eta(sp, i)] * (a - 1) for i in I]


def gamma_via_det(sp: VarSpace, I: Sequence[int]) -> SuperPoly:
    a = len(I)
    return column_det(gamma_matrix(sp, I)).scale(F(1, factorial(a - 1)))


def _x1d(sp: VarSpace, d: int) -> SuperPoly:
    return SuperPoly.x(sp, 1, d)


def _check_dk(d: int, k: int):
    if d < 0 or k < 0:
        raise FamilyRangeError("d and k must be non-negative")


def nu(sp: VarSpace, k: int) -> SuperPoly:
    """ν_{n,k}: η([k]) for k ≤ 2n, η([2n]) x_{2n+1}^ℓ for k = 2n+ℓ."""
    n = sp.n
    if k < 0:
        raise FamilyRangeError("k must be non-negative")
    if k <= 2 * n:
        return eta(sp, interval(k))
    return eta(sp, interval(2 * n)) * SuperPoly.x(sp, 2 * n + 1, k - 2 * n)


def omega(sp: VarSpace, d: int, k: int) -> SuperPoly:
    _check_dk(d, k)
    n, N = sp.n, sp.nvars
    if k == 0:
        return _x1d(sp, d)
    if k <= 2 * n:
        return _x1d(sp, d) * gamma_poly(sp, interval(k))
    ell = k - 2 * n
    xN = lambda p: SuperPoly.x(sp, N, p)  # noqa: E731
    body = xN(ell) * gamma_poly(sp, interval(2 * n)) - (xN(ell - 1) * eta(sp, interval(N))).scale(ell)
    return _x1d(sp, d) * body


def omega_tilde(sp: VarSpace, d: int, k: int) -> SuperPoly:
    _check_dk(d, k)
    n, N = sp.n, sp.nvars
    if k <= n:
        return omega(sp, d, k)
    ell = k - n
    xN = lambda p: SuperPoly.x(sp, N, p)  # noqa: E731
    body = xN(ell) * gamma_poly(sp, interval(n)) - (
        xN(ell - 1) * SuperPoly.eta(sp, N) * eta(sp, interval(n))
    ).scale(ell)
    return _x1d(sp, d) * body


def omega_weights(n: int, d: int, k: int) -> Tuple[Weight, Weight]:
    """(b-weight, b′-weight) of ω_{d,k}."""
    if k == 0:
        return tuple(F(x) for x in [d] + [0] * (2 * n)), (F(d), F(0))
    m = min(k, 2 * n)
    lam = [d + 1] + [1] * (m - 1) + [0] * (2 * n - m) + [k - m]
    return tuple(F(x) for x in lam), (F(d + 1), F(k - 1))


def omega_tilde_weight(n: int, d: int, k: int) -> Weight:
    """b̃-weight λ̃_{d,k}."""
    if k == 0:
        lam = [d] + [0] * (2 * n)
    elif k <= n:
        lam = [d + 1] + [1] * (k - 1) + [0] * (2 * n + 1 - k)
    else:
        lam = [d + 1] + [1] * (n - 1) + [0] * n + [k - n]
    return tuple(F(x) for x in lam)


def tau_weight(n: int, d: int, k: int) -> Weight:
    """spo weight of ω̃_{d,k}."""
    if k == 0:
        return (F(d),) + (F(0),) * (n - 1)
    if k <= n:
        return tuple(F(x) for x in [d + 1] + [1] * (k - 1) + [0] * (n - k))
    return tuple(F(x) for x in [d + 1] + [1] * (n - 1))


# ---------------------------------------------------------------------------
# odd reflections


def odd_reflect(sp: VarSpace, v: SuperPoly, lam: Sequence, i: int) -> Tuple[SuperPoly, Weight]:
    """
    Pass from a b^{i−1}-highest weight vector to a b^i one, through the odd
    root δ_r − ε_1 with r = 2n+1−i.
    """
    n, N = sp.n, sp.nvars
    lam = tuple(F(x) for x in lam)
    ok, w = is_hwv(v, borel(n, i - 1))
    if not ok or w != lam:
        raise ValueError(f"input is not a b^{i - 1}-highest weight vector of weight {lam}")
    r = N - i
    if lam[r - 1] + lam[N - 1] == 0:
        out, new = v, lam
    else:
        out = epsilon(sp, N, r)(v)
        new = list(lam)
        new[r - 1] -= 1
        new[N - 1] += 1
        new = tuple(new)
    ok, w = is_hwv(out, borel(n, i))
    if not ok or w != new:
        raise AssertionError(f"odd reflection step {i} did not produce a b^{i}-highest weight vector")
    return out, new


def odd_reflection_chain(sp: VarSpace, v: SuperPoly, lam: Sequence) -> Tuple[SuperPoly, Weight]:
    for i in range(1, sp.n + 1):
        v, lam = odd_reflect(sp, v, lam, i)
    return v, lam


# ---------------------------------------------------------------------------
# harmonic vectors


def b_coeff(n: int, k: int, a: int) -> int:
    return prod(2 * (k - n - r) - 1 for r in range(a))


def _delta_sets(n: int, k: int, a: int):
    pool = range(2 * n - k + 2, n + 1)
    base = set(interval(2 * n + 1 - k))
    for I in combinations(pool, a):
        yield tuple(sorted(base | set(I) | set(bar_set(I, n))))


def delta(sp: VarSpace, k: int) -> SuperPoly:
    n, N = sp.n, sp.nvars
    if not n + 1 <= k <= 2 * n + 1:
        raise FamilyRangeError(f"Δ_k needs {n + 1} <= k <= {2 * n + 1}, got k={k}")
    total = SuperPoly.zero(sp)
    for a in range(k - n):
        xp = SuperPoly.x(sp, N, 2 * (k - n - a) - 1)
        inner = SuperPoly.zero(sp)
        for J in _delta_sets(n, k, a):
            inner = inner + eta(sp, J)
        total = total + (xp * inner).scale(b_coeff(n, k, a))
    return total


def s_vector(sp: VarSpace, k: int) -> SuperPoly:
    n = sp.n
    if not 0 <= k <= 2 * n + 1:
        raise FamilyRangeError(f"s_{{n,k}} needs 0 <= k <= {2 * n + 1}, got k={k}")
    if k <= n:
        return eta(sp, interval(k))
    return delta(sp, k)


def s_weight(n: int, k: int) -> Weight:
    m = min(k, 2 * n + 1 - k)
    return tuple(F(1) if i < m else F(0) for i in range(n))


def q_vector(sp: VarSpace, d: int, k: int) -> SuperPoly:
    """q_{d,k} = x_1^d s_{n,k}, an spo highest weight vector."""
    _check_dk(d, k)
    return _x1d(sp, d) * s_vector(sp, k)


def p_vector(sp: VarSpace, d: int, k: int) -> SuperPoly:
    """The closed formulas for p_{d,k}; p_{0,0} = 1 and, by convention here, p_{d,0} = x_1^d."""
    _check_dk(d, k)
    n, N = sp.n, sp.nvars
    if k > 2 * n + 1:
        raise FamilyRangeError(f"p_{{d,k}} needs k <= {2 * n + 1}, got k={k}")
    x1d = _x1d(sp, d)
    if k == 0:
        return x1d
    if k <= n:
        return x1d * gamma_poly(sp, interval(k))
    if k == n + 1:
        return x1d * (SuperPoly.x(sp, N) * gamma_poly(sp, interval(n))
                      - SuperPoly.eta(sp, N) * eta(sp, interval(n)))
    total = SuperPoly.zero(sp)
    eN = SuperPoly.eta(sp, N)
    for a in range(k - n):
        sets = list(_delta_sets(n, k, a))
        g = SuperPoly.zero(sp)
        e = SuperPoly.zero(sp)
        for J in sets:
            g = g + gamma_poly(sp, J)
            e = e + eta(sp, J)
        total = total + (SuperPoly.x(sp, N, 2 * (k - n - a) - 1) * g).scale(b_coeff(n, k, a))
        total = total - (SuperPoly.x(sp, N, 2 * (k - n - a) - 2) * eN * e).scale(b_coeff(n, k, a + 1))
    return x1d * total


def p_via_zeta(sp: VarSpace, d: int, k: int) -> SuperPoly:
    """x_1^d ζ_{1,2}(s_{n,k}) for k ≥ 1."""
    z12 = build_gl_small(sp.n)["Z12"]
    return _x1d(sp, d) * z12(s_vector(sp, k))


def p_weights(n: int, d: int, k: int) -> Tuple[Weight, Weight]:
    """(spo weight, F-weight) of p_{d,k}."""
    a = alpha(n)
    if k == 0:
        return tau_weight(n, d, 0), (F(d) + a, -a)
    if k <= n:
        return tau_weight(n, d, k), (d + 1 + a, k - 1 - a)
    kk = 2 * n + 1 - k
    if kk == 0:
        return (F(0),) * n, (d + 1 + a, 2 * n - a)
    return tau_weight(n, d, kk), (d + 1 + a, 2 * n - kk - a)


def proportional(u: SuperPoly, v: SuperPoly) -> Optional[Fraction]:
    """c with u = c·v when both are nonzero and parallel, else None."""
    if not u or not v:
        return None
    keys = sorted(set(u.terms) | set(v.terms), key=lambda m: (m.degree, m.sort_key()))
    ok, c = in_span([u.coeff(m) for m in keys], [[v.coeff(m) for m in keys]])
    return c[0] if ok else None


def family(sp: VarSpace, name: str, d: int = 0, k: int = 0) -> SuperPoly:
    """Dispatch by family name (used by the CLI)."""
    if name == "omega":
        return omega(sp, d, k)
    if name == "omega_tilde":
        return omega_tilde(sp, d, k)
    if name == "nu":
        return nu(sp, k)
    if name == "gamma_poly":
        if not 0 <= k <= 2 * sp.n:
            raise FamilyRangeError(f"Γ([k]) needs 0 <= k <= {2 * sp.n}")
        return gamma_poly(sp, interval(k))
    if name == "s":
        return s_vector(sp, k)
    if name == "delta":
        return delta(sp, k)
    if name == "p":
        return p_vector(sp, d, k)
    if name == "q":
        return q_vector(sp, d, k)
    raise FamilyRangeError(f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}")
