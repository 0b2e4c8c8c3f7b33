"""
Named verification suites. Each suite returns a list of Check records; the
CLI prints them and the acceptance tests assert on them.

Targets:
    A1      ω = ζ12(x1^d ν), b/b′ weights, ω̃ weights, Γ determinant identity
    A2      closed p_{d,k} formulas equal x1^d ζ12(s_{n,k}) and are joint HWVs
    T62     ω̃_{d,k} harmonic iff k ≤ n+1
    PLP     s_{n,k} harmonic spo highest weight vectors
    ODD     odd-reflection chain carries ω_{d,k} to ω̃_{d,k}
    GLGL    gl(2n|1) × gl(1|1) joint HWVs are the hooks
    HD      harmonic decomposition against the predicted table
    STRUCT  osp(2|2) closure, commutation of the dual pairs, shifts, direct sums
    PARITY  spo weights split between even and odd degrees
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, List, Sequence

from . import hwv
from .decompose import (
    AuditFailure, completeness_audit, decompose_range, direct_sum_audit, hook_partitions,
    joint_hwv_enumerate, parity_split, predicted_entries, sigma_gamma,
)
from .diffops import DiffOp, op_equal_on_degree, supercommutator
from .liealg import (
    alpha, build_gl_big, build_gl_small, build_osp22, build_spo, borel, format_weight, is_hwv,
    spo_weight_from_gl,
)
from .ratlinalg import sparse_in_span
from .superpoly import SuperPoly, VarSpace, basis_of_degree

TARGETS = ("A1", "A2", "T62", "PLP", "ODD", "GLGL", "HD", "STRUCT", "PARITY")


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}" + (f"  [{self.detail}]" if self.detail else "")


def suite_a1(ns: Sequence[int] = (1, 2, 3), dmax: int = 3) -> List[Check]:
    out = []
    for n in ns:
        sp = VarSpace(n)
        z12 = build_gl_small(n)["Z12"]
        gb, gs, bt = build_gl_big(n), build_gl_small(n), borel(n, n)
        ok_z = ok_w = ok_t = True
        for d in range(dmax + 1):
            for k in range(0, 2 * n + 4):
                w = hwv.omega(sp, d, k)
                if k > 0 and w != z12(SuperPoly.x(sp, 1, d) * hwv.nu(sp, k)):
                    ok_z = False
                lam, lam_p = hwv.omega_weights(n, d, k)
                if is_hwv(w, gb) != (True, lam) or is_hwv(w, gs) != (True, lam_p):
                    ok_w = False
                wt = hwv.omega_tilde(sp, d, k)
                if is_hwv(wt, bt) != (True, hwv.omega_tilde_weight(n, d, k)) or is_hwv(wt, gs) != (True, lam_p):
                    ok_t = False
        out.append(Check(f"n={n}: ω_{{d,k}} = ζ12(x1^d ν_{{n,k}}), d≤{dmax}, k≤{2 * n + 3}", ok_z))
        out.append(Check(f"n={n}: ω_{{d,k}} joint b+b′ HWV with stated weights", ok_w))
        out.append(Check(f"n={n}: ω̃_{{d,k}} joint b̃+b′ HWV with weights λ̃_{{d,k}}", ok_t))
    sp = VarSpace(max(2, max(ns)))
    ok = all(hwv.gamma_via_det(sp, I) == hwv.gamma_poly(sp, I)
             for a in range(1, 5) for I in [tuple(range(1, a + 1)), tuple(range(5 - a, 5))])
    out.append(Check("Γ(I) = det(M)/(|I|−1)! for |I| ≤ 4", ok))
    return out


def suite_a2(ns: Sequence[int] = (1, 2, 3), dmax: int = 3) -> List[Check]:
    out = []
    for n in ns:
        sp = VarSpace(n)
        spo, osp = build_spo(n), build_osp22(n)
        same = joint = True
        bad = []
        for d in range(dmax + 1):
            for k in range(1, 2 * n + 2):
                p = hwv.p_vector(sp, d, k)
                if p != hwv.p_via_zeta(sp, d, k):
                    same = False
                    bad.append((d, k))
                if k == 2 * n + 1 and d > 0:
                    continue
                sw, fw = hwv.p_weights(n, d, k)
                if is_hwv(p, spo) != (True, sw) or is_hwv(p, osp) != (True, fw):
                    joint = False
                    bad.append((d, k))
        out.append(Check(f"n={n}: closed p_{{d,k}} = x1^d ζ12(s_{{n,k}})", same, str(bad) if bad else ""))
        out.append(Check(f"n={n}: p_{{d,k}} joint spo + osp(2|2) HWV with predicted weights", joint))
        out.append(Check(f"n={n}: p_{{d,n+1}} = x1^d ζ12(Δ_{{n+1}}) exactly", hwv.p_vector(sp, 0, n + 1) == hwv.p_via_zeta(sp, 0, n + 1)))
        p1 = hwv.p_vector(sp, 2, 1)
        out.append(Check(f"n={n}: p_{{d,1}} = x1^{{d+1}} (and F12 q_{{d,1}} = −x1^{{d+1}})",
                         p1 == SuperPoly.x(sp, 1, 3) and osp["F12"](hwv.q_vector(sp, 2, 1)) == -p1))
    sp = VarSpace(1)
    vt = SuperPoly.x(sp, 1) * SuperPoly.x(sp, 3) * SuperPoly.eta(sp, 2) - SuperPoly.x(sp, 2) * SuperPoly.x(sp, 3) * SuperPoly.eta(sp, 1) \
        - SuperPoly.x(sp, 3, 2) * SuperPoly.eta(sp, 3) - SuperPoly.eta(sp, 1, 2, 3)
    c = hwv.proportional(hwv.p_vector(sp, 0, 3), vt)
    out.append(Check("n=1: p_{0,3} ∝ ṽ", c is not None, f"p_{{0,3}} = {c}·ṽ"))
    return out


def suite_t62(ns: Sequence[int] = (1, 2, 3), dmax: int = 3) -> List[Check]:
    out = []
    for n in ns:
        sp = VarSpace(n)
        osp = build_osp22(n)
        ok = True
        d12_ok = True
        for d in range(dmax + 1):
            for k in range(0, 2 * n + 4):
                w = hwv.omega_tilde(sp, d, k)
                harm = not osp["D12"](w) and not osp["D22"](w)
                if harm != (k <= n + 1):
                    ok = False
                ell = k - n
                if ell >= 2:
                    e = SuperPoly.x(sp, 1, d) * SuperPoly.x(sp, 2 * n + 1, ell - 2) * hwv.eta(sp, hwv.interval(n))
                    if osp["D12"](w) != e.scale(-ell * (ell - 1)):
                        d12_ok = False
        out.append(Check(f"n={n}: ω̃_{{d,k}} harmonic iff k ≤ n+1 (d≤{dmax})", ok))
        out.append(Check(f"n={n}: D12 ω̃_{{d,n+ℓ}} = −ℓ(ℓ−1) x1^d x_{{2n+1}}^{{ℓ−2}} η([n])", d12_ok))
    return out


def suite_plp(ns: Sequence[int] = (1, 2, 3), dmax: int = 3) -> List[Check]:
    out = []
    for n in ns:
        sp = VarSpace(n)
        osp, spo = build_osp22(n), build_spo(n)
        harm = all(not osp["D22"](hwv.s_vector(sp, k)) for k in range(2 * n + 2))
        wts = all(is_hwv(hwv.s_vector(sp, k), spo) == (True, hwv.s_weight(n, k)) for k in range(2 * n + 2))
        out.append(Check(f"n={n}: D22 s_{{n,k}} = 0 for 0 ≤ k ≤ {2 * n + 1}", harm))
        out.append(Check(f"n={n}: s_{{n,k}} spo HWV of weight (1_m, 0_{{n−m}})", wts))
    return out


def suite_odd(ns: Sequence[int] = (1, 2, 3), dmax: int = 3) -> List[Check]:
    out = []
    for n in ns:
        sp = VarSpace(n)
        spo = build_spo(n)
        ok = True
        tau_ok = True
        for d in range(dmax + 1):
            for k in range(0, 2 * n + 4):
                lam = hwv.omega_weights(n, d, k)[0]
                v, lam2 = hwv.odd_reflection_chain(sp, hwv.omega(sp, d, k), lam)
                if lam2 != hwv.omega_tilde_weight(n, d, k) or hwv.proportional(v, hwv.omega_tilde(sp, d, k)) is None:
                    ok = False
                wt = hwv.omega_tilde(sp, d, k)
                tau = hwv.tau_weight(n, d, k)
                if spo_weight_from_gl(lam2) != tau or is_hwv(wt, spo) != (True, tau):
                    tau_ok = False
        out.append(Check(f"n={n}: odd-reflection chain maps ω_{{d,k}} to ω̃_{{d,k}} up to scalar", ok))
        out.append(Check(f"n={n}: ω̃_{{d,k}} spo HWV of weight τ_{{d,k}} (restriction of λ̃)", tau_ok))
    return out


def suite_glgl(ns: Sequence[int] = (1, 2, 3), dmax: int = 5) -> List[Check]:
    out = []
    for n in ns:
        sp = VarSpace(n)
        gb, gs = build_gl_big(n), build_gl_small(n)
        for d in range(dmax + 1):
            got = joint_hwv_enumerate(n, d, gb, gs)
            lams = hook_partitions(d)
            exp = [sigma_gamma(n, lam) for lam in lams]
            ok = [(a, b) for _, a, b in got] == exp
            if ok:
                for (v, _, _), lam in zip(got, lams):
                    dd, k = (lam[0] - 1, len(lam)) if lam else (0, 0)
                    if hwv.proportional(v, hwv.omega(sp, dd, k)) is None:
                        ok = False
            out.append(Check(f"n={n} d={d}: joint b+b′ HWVs are the {len(lams)} hooks, each ∝ ω", ok,
                             f"found {len(got)}"))
    return out


def suite_hd(ns: Sequence[int] = (1, 2, 3), dmax: int = 6, reports: Dict = None) -> List[Check]:
    out = []
    for n in ns:
        try:
            reps = reports[n] if reports and n in reports else decompose_range(n, range(dmax + 1))
        except AuditFailure as exc:
            out.append(Check(f"n={n}: harmonic decomposition audits", False, str(exc)))
            continue
        for r in reps:
            got = [(e.spo_weight, e.partner_weight) for e in r.entries]
            exp = predicted_entries(n, r.degree)
            a = r.dim_audit
            ok = got == exp and a["sum_products"] == a["dim_harmonic"]
            out.append(Check(
                f"n={n} d={r.degree}: {len(got)} entries match prediction, Σ dim·dim = {a['sum_products']} = dim harmonic",
                ok, "" if ok else f"got {[(format_weight(x), format_weight(y)) for x, y in got]}"))
    return out


def _op_vector(op: DiffOp, dmax: int) -> Dict:
    v = {}
    for d in range(dmax + 1):
        for m in basis_of_degree(op.space, d):
            for mm, c in op.image(m).items():
                v[(m, mm)] = c
    return v


def osp22_closure(n: int, dmax: int = 3) -> List[Check]:
    osp = build_osp22(n)
    names = osp.parts["basis"]
    basis_vecs = [_op_vector(osp[g], dmax) for g in names]
    out = []
    bad = []
    for a, b in product(names, repeat=2):
        br = supercommutator(osp[a], osp[b])
        ok, coeffs = sparse_in_span(_op_vector(br, dmax), basis_vecs)
        if not ok:
            bad.append(f"[{a},{b}]")
    out.append(Check(f"n={n}: osp(2|2) brackets close on S^{{≤{dmax}}}", not bad, ", ".join(bad)))
    return out


def _commutes(a: DiffOp, b: DiffOp, dmax: int) -> bool:
    return op_equal_on_degree(supercommutator(a, b), DiffOp.zero(a.space), dmax)


def suite_struct(ns: Sequence[int] = (1, 2), dmax: int = 4, ds_dmax: int = 8) -> List[Check]:
    out = []
    for n in ns:
        sp = VarSpace(n)
        spo, osp, gb, gs = build_spo(n), build_osp22(n), build_gl_big(n), build_gl_small(n)
        out += osp22_closure(n, min(dmax, 3))
        bad = [(a, b) for a in spo.generators for b in osp.parts["basis"] if not _commutes(spo[a], osp[b], dmax)]
        out.append(Check(f"n={n}: [spo(2n|1), osp(2|2)] = 0 on S^{{≤{dmax}}}", not bad, str(bad[:3]) if bad else ""))
        bad = [(a, b) for a in gb.generators for b in gs.generators if not _commutes(gb[a], gs[b], dmax)]
        out.append(Check(f"n={n}: [gl(2n|1), gl(1|1)] = 0 on S^{{≤{dmax}}}", not bad, str(bad[:3]) if bad else ""))
        a = alpha(n)
        shift = (
            op_equal_on_degree(gs["Z11"] - osp["F11"], DiffOp.scalar(sp, -a), dmax)
            and op_equal_on_degree(gs["Z22"] - osp["F22"], DiffOp.scalar(sp, a), dmax)
            and op_equal_on_degree(gs["Z12"], -osp["F12"], dmax)
            and op_equal_on_degree(gs["Z21"], -osp["F21"], dmax)
        )
        out.append(Check(f"n={n}: ζ11−F11 = −α, ζ22−F22 = α, ζ12 = −F12, ζ21 = −F21 on S^{{≤{dmax}}}", shift))
        nplus = [_op_vector(o, dmax) for o in osp.part("n_plus")]
        ok = all(sparse_in_span(_op_vector(supercommutator(osp[k], osp[x]), dmax), nplus)[0]
                 for k in osp.parts["k_prime"] for x in osp.parts["n_plus"])
        out.append(Check(f"n={n}: [k′, n′⁺] ⊆ n′⁺", ok))
        for d in range(ds_dmax + 1):
            try:
                au = direct_sum_audit(n, d)
                out.append(Check(f"n={n} d={d}: dim S^d {au['dim_S']} = harmonic {au['dim_harmonic']} + n′⁻ image {au['dim_image']}, trivial intersection", True))
            except AuditFailure as exc:
                out.append(Check(f"n={n} d={d}: direct sum S^d = H ⊕ n′⁻S^{{d−2}}", False, str(exc)))
    return out


def suite_completeness(n: int, dmax: int) -> List[Check]:
    out = []
    for d in range(dmax + 1):
        try:
            au = completeness_audit(n, d)
            out.append(Check(f"n={n} d={d}: U(n′⁻)·harmonics spans S^d (rank {au['rank']} = {au['dim_S']}, relations {au['defect']})", True))
        except AuditFailure as exc:
            out.append(Check(f"n={n} d={d}: U(n′⁻)·harmonics spans S^d", False, str(exc)))
    return out


def suite_parity(n: int = 1, dmax: int = 9, reports=None) -> List[Check]:
    out = []
    try:
        rep = parity_split(n, dmax, reports)
    except AuditFailure as exc:
        return [Check(f"n={n}: no (weight, parity) pair repeats up to d={dmax}", False, str(exc))]
    out.append(Check(f"n={n}: no (weight, parity) pair repeats up to d={dmax}", True))
    occ = rep.occurrences
    zero = (Fraction(0),) * n
    out.append(Check(f"n={n}: weight {format_weight(zero)} at degrees 0 and {2 * n + 1}",
                     sorted(d for d, _ in occ.get(zero, [])) == [0, 2 * n + 1]))
    if n == 1:
        # weight (w) sits at degrees w and w+1, so both parities are visible only for w ≤ dmax−1
        for w in range(1, dmax):
            lst = occ.get((Fraction(w),), [])
            pars = sorted(p for _, p in lst)
            out.append(Check(f"n=1: ({w}) once in even and once in odd degree", pars == ["even", "odd"],
                             ", ".join(f"d={d}" for d, _ in sorted(lst))))
    return out


def run_target(target: str, n: int = None, dmax: int = None) -> List[Check]:
    """Run one suite. Without n the suite's default ranks are used; with n only that rank."""
    target = target.upper()
    if target not in TARGETS:
        raise KeyError(target)
    defaults = {
        "A1": ((1, 2, 3), 3), "A2": ((1, 2, 3), 3), "T62": ((1, 2, 3), 3), "PLP": ((1, 2, 3), 3),
        "ODD": ((1, 2, 3), 3), "GLGL": ((1, 2, 3), 5), "HD": ((1, 2), 6), "STRUCT": ((1, 2), 4),
        "PARITY": ((1,), 9),
    }
    ns, dm = defaults[target]
    if n is not None:
        ns = (n,)
    if dmax is not None:
        dm = dmax
    fn = {
        "A1": suite_a1, "A2": suite_a2, "T62": suite_t62, "PLP": suite_plp, "ODD": suite_odd,
        "GLGL": suite_glgl, "HD": suite_hd,
    }.get(target)
    if fn is not None:
        return fn(ns, dm)
    if target == "STRUCT":
        return suite_struct(ns, min(dm, 4), 8 if dmax is None else dmax)
    return [c for k in ns for c in suite_parity(k, dm)]
