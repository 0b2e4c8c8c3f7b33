"""
Concrete generator sets for gl(2n|1), gl(1|1), osp(2|2) and spo(2n|1), all
realized as differential operators on S(E), together with Borel data and
weight extraction.

Index conventions: 1-based throughout. For gl(2n|1) the odd index is 2n+1.
The spo(2n|1) Cartan is h_i = ε_{i,i} − ε_{2n+1−i,2n+1−i}, i = 1..n.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .diffops import DETA, DX, ETA, X, DiffOp, linear_combination, supercommutator
from .superpoly import SuperPoly, VarSpace

Weight = Tuple[Fraction, ...]

GL_BIG, GL_SMALL, OSP22, SPO = "gl_big", "gl_small", "osp22", "spo"


@dataclass(frozen=True, eq=False)
class AlgebraSpec:
    label: str
    n: int
    generators: Dict[str, DiffOp]
    cartan: Tuple[DiffOp, ...]
    raising: Tuple[DiffOp, ...]
    lowering: Tuple[DiffOp, ...]
    cartan_names: Tuple[str, ...] = ()
    raising_names: Tuple[str, ...] = ()
    lowering_names: Tuple[str, ...] = ()
    parts: Dict[str, Tuple[str, ...]] = field(default_factory=dict)

    @property
    def space(self) -> VarSpace:
        return VarSpace(self.n)

    def __getitem__(self, name: str) -> DiffOp:
        return self.generators[name]

    def part(self, name: str) -> Tuple[DiffOp, ...]:
        return tuple(self.generators[g] for g in self.parts[name])

    def with_raising(self, names: Sequence[str], label: Optional[str] = None) -> "AlgebraSpec":
        """Same algebra, different positive system (used for the odd-reflection chain)."""
        return AlgebraSpec(
            label or self.label, self.n, self.generators, self.cartan,
            tuple(self.generators[g] for g in names), self.lowering,
            self.cartan_names, tuple(names), self.lowering_names, self.parts,
        )


def _make(label, n, gens, cartan, raising, lowering, parts=None) -> AlgebraSpec:
    spec = AlgebraSpec(
        label, n, gens,
        tuple(gens[g] for g in cartan), tuple(gens[g] for g in raising),
        tuple(gens[g] for g in lowering),
        tuple(cartan), tuple(raising), tuple(lowering), parts or {},
    )
    if os.environ.get("SUPERHOWE_DEBUG"):
        check_cartan_commutes(spec, 3)
    return spec


def check_cartan_commutes(spec: AlgebraSpec, dmax: int = 3) -> None:
    sp = spec.space
    zero = DiffOp.zero(sp)
    from .diffops import op_equal_on_degree

    for a in spec.cartan:
        for b in spec.cartan:
            if not op_equal_on_degree(supercommutator(a, b), zero, dmax):
                raise AssertionError(f"{spec.label}: Cartan operators do not commute")


# ---------------------------------------------------------------------------
# gl(2n|1) acting through ε_{i,j}


def epsilon(sp: VarSpace, i: int, j: int) -> DiffOp:
    N = sp.nvars
    if i < N and j < N:
        return X(sp, i) @ DX(sp, j) + ETA(sp, i) @ DETA(sp, j)
    if i == N and j == N:
        return X(sp, N) @ DX(sp, N) + ETA(sp, N) @ DETA(sp, N)
    if j == N:
        return ETA(sp, i) @ DX(sp, N) + X(sp, i) @ DETA(sp, N)
    return ETA(sp, N) @ DX(sp, j) + X(sp, N) @ DETA(sp, j)


def eps_name(i: int, j: int) -> str:
    return f"E{i},{j}"


@lru_cache(maxsize=None)
def build_gl_big(n: int) -> AlgebraSpec:
    sp = VarSpace(n)
    N = sp.nvars
    gens = {eps_name(i, j): epsilon(sp, i, j) for i in range(1, N + 1) for j in range(1, N + 1)}
    cartan = [eps_name(i, i) for i in range(1, N + 1)]
    raising = [eps_name(i, j) for i in range(1, N + 1) for j in range(i + 1, N + 1)]
    lowering = [eps_name(j, i) for i in range(1, N + 1) for j in range(i + 1, N + 1)]
    return _make(GL_BIG, n, gens, cartan, raising, lowering)


def borel_chain(n: int) -> List[Tuple[str, ...]]:
    """Raising-operator names of b^0 = b, b^1, ..., b^n = b̃."""
    N = 2 * n + 1
    current = [eps_name(i, j) for i in range(1, N + 1) for j in range(i + 1, N + 1)]
    chain = [tuple(current)]
    for i in range(1, n + 1):
        r = 2 * n + 1 - i
        current = [eps_name(N, r) if g == eps_name(r, N) else g for g in current]
        chain.append(tuple(current))
    return chain


def borel(n: int, i: int) -> AlgebraSpec:
    """gl(2n|1) with positive system b^i (b^0 = standard, b^n = b̃)."""
    if not 0 <= i <= n:
        raise ValueError(f"Borel index must lie in 0..{n}")
    return build_gl_big(n).with_raising(borel_chain(n)[i], label=f"{GL_BIG}[b^{i}]")


def build_gl_big_tilde(n: int) -> AlgebraSpec:
    return borel(n, n)


# ---------------------------------------------------------------------------
# gl(1|1) through ζ_{k,l}, and osp(2|2)


def _zeta(sp: VarSpace) -> Dict[str, DiffOp]:
    N = sp.nvars
    rng = range(1, N)
    z11 = linear_combination(sp, [(1, X(sp, t) @ DX(sp, t)) for t in rng]) + ETA(sp, N) @ DETA(sp, N)
    z22 = linear_combination(sp, [(1, ETA(sp, t) @ DETA(sp, t)) for t in rng]) + X(sp, N) @ DX(sp, N)
    z12 = linear_combination(sp, [(1, X(sp, t) @ DETA(sp, t)) for t in rng]) - ETA(sp, N) @ DX(sp, N)
    z21 = linear_combination(sp, [(1, ETA(sp, t) @ DX(sp, t)) for t in rng]) - X(sp, N) @ DETA(sp, N)
    return {"Z11": z11, "Z22": z22, "Z12": z12, "Z21": z21}


@lru_cache(maxsize=None)
def build_gl_small(n: int) -> AlgebraSpec:
    sp = VarSpace(n)
    return _make(GL_SMALL, n, _zeta(sp), ["Z11", "Z22"], ["Z12"], ["Z21"])


def alpha(n: int) -> Fraction:
    """Half the superdimension shift, (2n−1)/2."""
    return Fraction(2 * n - 1, 2)


def _pairing_ops(sp: VarSpace) -> Dict[str, DiffOp]:
    n, N = sp.n, sp.nvars
    d12 = DX(sp, N) @ DETA(sp, N)
    d22 = DX(sp, N) @ DX(sp, N)
    r12 = X(sp, N) @ ETA(sp, N)
    r22 = X(sp, N) @ X(sp, N)
    for i in range(1, n + 1):
        ib = 2 * n + 1 - i
        d12 = d12 + DX(sp, i) @ DETA(sp, ib) - DX(sp, ib) @ DETA(sp, i)
        d22 = d22 + (DETA(sp, i) @ DETA(sp, ib)).scale(2)
        r12 = r12 + ETA(sp, i) @ X(sp, ib) - ETA(sp, ib) @ X(sp, i)
        r22 = r22 + (ETA(sp, i) @ ETA(sp, ib)).scale(2)
    return {"D12": d12, "D22": d22, "R12": r12, "R22": r22}


@lru_cache(maxsize=None)
def build_osp22(n: int, shifted: bool = True) -> AlgebraSpec:
    """
    osp(2|2) = n′⁻ ⊕ k′ ⊕ n′⁺ with k′ = {F11, F22, F12, F21} ≅ gl(1|1).

    With shifted=False the Cartan is reported as (ζ11, ζ22) instead of
    (F11, F22) = (ζ11 + α, ζ22 − α).
    """
    sp = VarSpace(n)
    z = _zeta(sp)
    a = alpha(n)
    gens = {
        "F11": z["Z11"] + DiffOp.scalar(sp, a),
        "F22": z["Z22"] - DiffOp.scalar(sp, a),
        "F12": -z["Z12"],
        "F21": -z["Z21"],
        "Z11": z["Z11"],
        "Z22": z["Z22"],
    }
    gens.update(_pairing_ops(sp))
    cartan = ["F11", "F22"] if shifted else ["Z11", "Z22"]
    parts = {
        "k_prime": ("F11", "F22", "F12", "F21"),
        "k_prime_raising": ("F12",),
        "k_prime_lowering": ("F21",),
        "n_plus": ("D12", "D22"),
        "n_minus": ("R12", "R22"),
        "basis": ("F11", "F22", "F12", "F21", "D12", "D22", "R12", "R22"),
    }
    return _make(OSP22, n, gens, cartan, ["F12", "D12", "D22"], ["F21", "R12", "R22"], parts)


# ---------------------------------------------------------------------------
# spo(2n|1) inside gl(2n|1)


@lru_cache(maxsize=None)
def build_spo(n: int) -> AlgebraSpec:
    sp = VarSpace(n)
    N = 2 * n + 1
    eps = lambda i, j: epsilon(sp, i, j)  # noqa: E731
    gens: Dict[str, DiffOp] = {}
    cartan, raising, lowering = [], [], []

    for i in range(1, n + 1):
        name = f"H{i}"
        gens[name] = eps(i, i) - eps(N - i, N - i)
        cartan.append(name)
    # A block: E_ij − E_{2n+1−j, 2n+1−i}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            name = f"A{i},{j}"
            gens[name] = eps(i, j) - eps(N - j, N - i)
            (raising if i < j else lowering).append(name)
    # B and C blocks: one generator per orbit of (i, j) ↦ (n+1−j, n+1−i)
    seen = set()
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            key = min((i, j), (n + 1 - j, n + 1 - i))
            if key in seen:
                continue
            seen.add(key)
            i0, j0 = key
            i1, j1 = n + 1 - j0, n + 1 - i0
            b = eps(i0, n + j0)
            c = eps(n + i0, j0)
            if (i1, j1) != (i0, j0):
                b = b + eps(i1, n + j1)
                c = c + eps(n + i1, j1)
            gens[f"B{i0},{j0}"] = b
            gens[f"C{i0},{j0}"] = c
            raising.append(f"B{i0},{j0}")
            lowering.append(f"C{i0},{j0}")
    # odd part, x = e_k gives raising, y = e_k gives lowering
    for k in range(1, n + 1):
        gens[f"X{k}"] = eps(k, N) + eps(N, N - k)
        gens[f"Y{k}"] = eps(n + k, N) - eps(N, n + 1 - k)
        raising.append(f"X{k}")
        lowering.append(f"Y{k}")
    parts = {"even": tuple(g for g in gens if g[0] in "HABC"), "odd": tuple(g for g in gens if g[0] in "XY")}
    return _make(SPO, n, gens, cartan, raising, lowering, parts)


def build(label: str, n: int) -> AlgebraSpec:
    table = {GL_BIG: build_gl_big, GL_SMALL: build_gl_small, OSP22: build_osp22, SPO: build_spo}
    if label not in table:
        raise ValueError(f"unknown algebra {label!r}")
    return table[label](n)


# ---------------------------------------------------------------------------
# weights and highest weight vectors


def _eigenvalue(op: DiffOp, v: SuperPoly) -> Optional[Fraction]:
    hv = op(v)
    m, c = v.leading()
    lam = hv.coeff(m) / c
    if hv != v.scale(lam):
        return None
    return lam


def weight_of(v: SuperPoly, alg: AlgebraSpec) -> Optional[Weight]:
    """Simultaneous Cartan eigenvalues of v, or None when v is not a weight vector."""
    if not v:
        raise ValueError("the zero vector has no weight")
    out = []
    for h in alg.cartan:
        lam = _eigenvalue(h, v)
        if lam is None:
            return None
        out.append(lam)
    return tuple(out)


def is_hwv(v: SuperPoly, alg: AlgebraSpec) -> Tuple[bool, Optional[Weight]]:
    """True (with the weight) iff v is a weight vector killed by every raising operator."""
    if not v:
        return False, None
    if any(e(v) for e in alg.raising):
        return False, None
    w = weight_of(v, alg)
    return (w is not None), w


def is_joint_hwv(v: SuperPoly, *algs: AlgebraSpec) -> Tuple[bool, Optional[Tuple[Weight, ...]]]:
    weights = []
    for a in algs:
        ok, w = is_hwv(v, a)
        if not ok:
            return False, None
        weights.append(w)
    return True, tuple(weights)


def spo_weight_from_gl(lam: Sequence) -> Weight:
    """Restriction of a gl(2n|1) weight to the spo Cartan: τ_i = λ_i − λ_{2n+1−i}."""
    N = len(lam)
    n = (N - 1) // 2
    return tuple(Fraction(lam[i]) - Fraction(lam[N - 2 - i]) for i in range(n))


def format_weight(w: Sequence) -> str:
    return "(" + ",".join(str(Fraction(x)) for x in w) + ")"
