"""
Brute-force decomposition of S^d(E).

Every Cartan operator used here is diagonal on monomials, so a joint
weight space is just a set of monomials. All kernels are computed one weight
slice at a time: for a slice, stack the images of its monomials under the
relevant operators and read off the kernel with the sparse echelon engine.

Main entry points:

    harmonic_basis(n, d)               basis of S^d(E)^{n′⁺}
    joint_hwv_enumerate(n, d, A, B)    joint highest weight vectors
    generate_module(v, ops)            span of v under repeated lowering
    decompose_harmonic(n, d)           DecompositionReport with audits
    parity_split(n, dmax)              spo weights tagged by degree parity
"""

from __future__ import annotations

import csv
import io
import json
import os
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .diffops import DiffOp
from .liealg import (
    AlgebraSpec, Weight, alpha, build_osp22, build_spo, format_weight, is_hwv,
)
from .ratlinalg import Echelon, sparse_kernel, sparse_rref_basis
from .superpoly import SuperMonomial, SuperPoly, VarSpace, basis_of_degree, dim_of_degree, parse_poly

SCHEMA_VERSION = 1


class AuditFailure(AssertionError):
    """A mathematical identity checked by an audit did not hold."""

    def __init__(self, identity: str, detail: str = ""):
        self.identity = identity
        self.detail = detail
        super().__init__(f"audit failed: {identity}" + (f" ({detail})" if detail else ""))


# ---------------------------------------------------------------------------
# graded bases and weight slicing


@lru_cache(maxsize=None)
def _basis(n: int, d: int) -> Tuple[SuperMonomial, ...]:
    return tuple(basis_of_degree(VarSpace(n), d))


@lru_cache(maxsize=None)
def _index(n: int, d: int) -> Dict[SuperMonomial, int]:
    return {m: i for i, m in enumerate(_basis(n, d))}


def diagonal_weight(m: SuperMonomial, cartan: Sequence[DiffOp]) -> Weight:
    out = []
    for h in cartan:
        img = h.image(m)
        if len(img) > 1 or (img and m not in img):
            raise ValueError("Cartan operator is not diagonal on monomials")
        out.append(img.get(m, Fraction(0)))
    return tuple(out)


def _algs_cartan(algs: Sequence[AlgebraSpec]) -> List[DiffOp]:
    return [h for a in algs for h in a.cartan]


def _split_weight(w: Weight, algs: Sequence[AlgebraSpec]) -> Tuple[Weight, ...]:
    out, pos = [], 0
    for a in algs:
        out.append(tuple(w[pos:pos + len(a.cartan)]))
        pos += len(a.cartan)
    return tuple(out)


def weight_slices(n: int, d: int, algs: Sequence[AlgebraSpec]) -> Dict[Weight, List[int]]:
    """Joint weight → ascending list of basis indices of S^d(E)."""
    cartan = _algs_cartan(algs)
    out: Dict[Weight, List[int]] = defaultdict(list)
    for i, m in enumerate(_basis(n, d)):
        out[diagonal_weight(m, cartan)].append(i)
    return dict(out)


@dataclass
class WeightSpaceBasis:
    degree: int
    weight: Tuple[Weight, ...]
    basis: List[SuperPoly]


def _to_poly(n: int, d: int, v: Dict[int, Fraction]) -> SuperPoly:
    basis = _basis(n, d)
    return SuperPoly._raw(VarSpace(n), {basis[i]: c for i, c in v.items()})


def _to_indexed(p: SuperPoly) -> Tuple[int, Dict[int, Fraction]]:
    d = p.degree
    idx = _index(p.space.n, d)
    return d, {idx[m]: c for m, c in p.terms.items()}


def _slice_kernel(n: int, d: int, idxs: Sequence[int], ops: Sequence[DiffOp]) -> List[Dict[int, Fraction]]:
    """Canonical basis (fully reduced, leading coordinate 1) of the joint kernel of ops on a slice."""
    basis = _basis(n, d)
    if not ops:
        return [{i: Fraction(1)} for i in idxs]
    cols = []
    for i in idxs:
        col: Dict = {}
        for j, op in enumerate(ops):
            for mm, c in op.image(basis[i]).items():
                col[(j, mm)] = c
        cols.append(col)
    ker = sparse_kernel(cols)
    if not ker:
        return []
    vecs = [{idxs[pos]: c for pos, c in v.items()} for v in ker]
    return sparse_rref_basis(vecs)


# ---------------------------------------------------------------------------
# harmonics


def _harmonic_algs(n: int) -> Tuple[AlgebraSpec, AlgebraSpec]:
    return build_spo(n), build_osp22(n)


@lru_cache(maxsize=None)
def harmonic_slices(n: int, d: int) -> Tuple[WeightSpaceBasis, ...]:
    """S^d(E)^{n′⁺} split along joint (spo, F) weights."""
    algs = _harmonic_algs(n)
    osp = algs[1]
    ops = osp.part("n_plus")
    out = []
    for w, idxs in sorted(weight_slices(n, d, algs).items()):
        ker = _slice_kernel(n, d, idxs, ops) if d >= 2 else [{i: Fraction(1)} for i in idxs]
        if ker:
            out.append(WeightSpaceBasis(d, _split_weight(w, algs), [_to_poly(n, d, v) for v in ker]))
    return tuple(out)


def harmonic_basis(n: int, d: int) -> List[SuperPoly]:
    if d < 0:
        raise ValueError("degree must be non-negative")
    return [p for s in harmonic_slices(n, d) for p in s.basis]


def harmonic_dim(n: int, d: int) -> int:
    return sum(len(s.basis) for s in harmonic_slices(n, d))


# ---------------------------------------------------------------------------
# joint highest weight vectors


def joint_hwv_enumerate(
    n: int,
    d: int,
    alg_a: AlgebraSpec,
    alg_b: AlgebraSpec,
    restrict_harmonic: bool = False,
) -> List[Tuple[SuperPoly, Weight, Weight]]:
    """
    Basis of the joint highest weight vectors in S^d(E) (or in its harmonic
    part), one weight slice at a time. Output is sorted by weight with each
    vector normalized to leading coefficient 1 in basis order.
    """
    algs = (alg_a, alg_b)
    ops = list(alg_a.raising) + list(alg_b.raising)
    if restrict_harmonic:
        ops += list(build_osp22(n).part("n_plus"))
    found = []
    for w, idxs in weight_slices(n, d, algs).items():
        for v in _slice_kernel(n, d, idxs, ops):
            wa, wb = _split_weight(w, algs)
            found.append((_to_poly(n, d, v), wa, wb))
    found.sort(key=lambda t: (tuple(-x for x in t[1]), tuple(-x for x in t[2])))
    return found


# ---------------------------------------------------------------------------
# module generation


def generate_module(
    v: SuperPoly,
    lowering: Sequence[DiffOp],
    degree_cap: Optional[int] = None,
    cartan: Optional[Sequence[DiffOp]] = None,
) -> List[SuperPoly]:
    """
    Basis of the span of all words in ``lowering`` applied to v, keeping
    only vectors of degree ≤ degree_cap. When ``cartan`` is given and every
    lowering operator is weight-homogeneous, echelon forms are kept per
    weight, which keeps the elimination local.
    """
    if not v:
        raise ValueError("cannot generate from the zero vector")
    sp = v.space

    def key(t: Dict[SuperMonomial, Fraction]):
        if cartan is None:
            return None
        return diagonal_weight(min(t), cartan)

    echelons: Dict = defaultdict(Echelon)
    out: List[SuperPoly] = []
    queue = [dict(v.terms)]
    while queue:
        t = queue.pop()
        if not t:
            continue
        if degree_cap is not None and next(iter(t)).degree > degree_cap:
            continue
        e = echelons[key(t)]
        ok, _ = e.add(t)
        if not ok:
            continue
        out.append(SuperPoly._raw(sp, t))
        for op in lowering:
            queue.append(op.apply_terms(t))
    return out


def spo_module_dim(v: SuperPoly) -> int:
    spo = build_spo(v.space.n)
    return len(generate_module(v, spo.lowering, cartan=spo.cartan))


def kprime_module_dim(v: SuperPoly) -> int:
    osp = build_osp22(v.space.n)
    return len(generate_module(v, osp.part("k_prime_lowering"), cartan=osp.cartan))


# ---------------------------------------------------------------------------
# reports


@dataclass
class IsotypicEntry:
    spo_weight: Weight
    partner_weight: Weight
    degree: int
    parity: str
    hwv: SuperPoly
    spo_dim: int
    partner_dim: int

    def to_dict(self) -> dict:
        return {
            "spo_weight": [str(x) for x in self.spo_weight],
            "partner_weight": [str(x) for x in self.partner_weight],
            "degree": self.degree,
            "parity": self.parity,
            "hwv": self.hwv.to_text(),
            "spo_dim": self.spo_dim,
            "partner_dim": self.partner_dim,
        }

    @classmethod
    def from_dict(cls, n: int, obj: dict) -> "IsotypicEntry":
        return cls(
            tuple(Fraction(x) for x in obj["spo_weight"]),
            tuple(Fraction(x) for x in obj["partner_weight"]),
            int(obj["degree"]),
            obj["parity"],
            parse_poly(VarSpace(n), obj["hwv"]),
            int(obj["spo_dim"]),
            int(obj["partner_dim"]),
        )


@dataclass
class DecompositionReport:
    n: int
    degree: int
    entries: List[IsotypicEntry]
    dim_audit: Dict[str, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "n": self.n,
            "degree": self.degree,
            "entries": [e.to_dict() for e in self.entries],
            "dim_audit": dict(self.dim_audit),
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "DecompositionReport":
        if obj.get("schema") != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema {obj.get('schema')!r}")
        n = int(obj["n"])
        return cls(n, int(obj["degree"]), [IsotypicEntry.from_dict(n, e) for e in obj["entries"]],
                   {k: int(v) for k, v in obj["dim_audit"].items()})


def reports_to_json(reports: Sequence[DecompositionReport]) -> str:
    return json.dumps({"schema": SCHEMA_VERSION, "reports": [r.to_dict() for r in reports]}, indent=2) + "\n"


def reports_from_json(text: str) -> List[DecompositionReport]:
    obj = json.loads(text)
    if obj.get("schema") != SCHEMA_VERSION:
        raise ValueError(f"unsupported report schema {obj.get('schema')!r}")
    return [DecompositionReport.from_dict(r) for r in obj["reports"]]


_COLUMNS = ("degree", "parity", "spo_weight", "partner_weight", "spo_dim", "partner_dim", "hwv")


def _rows(reports: Sequence[DecompositionReport]) -> List[List[str]]:
    rows = []
    for r in reports:
        for e in r.entries:
            rows.append([str(e.degree), e.parity, format_weight(e.spo_weight), format_weight(e.partner_weight),
                         str(e.spo_dim), str(e.partner_dim), e.hwv.to_text()])
    return rows


def reports_to_csv(reports: Sequence[DecompositionReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(_COLUMNS)
    w.writerows(_rows(reports))
    return buf.getvalue()


def reports_to_table(reports: Sequence[DecompositionReport]) -> str:
    header = list(_COLUMNS)
    rows = _rows(reports)
    widths = [max(len(x) for x in col) for col in zip(header, *rows)] if rows else [len(h) for h in header]
    lines = ["  ".join(h.ljust(wd) for h, wd in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * wd for wd in widths))
    for row in rows:
        lines.append("  ".join(x.ljust(wd) for x, wd in zip(row, widths)).rstrip())
    for r in reports:
        a = r.dim_audit
        lines.append(
            f"# d={r.degree}: dim S^d={a.get('dim_S')} harmonic={a.get('dim_harmonic')} "
            f"image={a.get('dim_image')} sum(spo_dim*partner_dim)={a.get('sum_products')}"
        )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# audits


def _bucket(vectors: Iterable[Dict[SuperMonomial, Fraction]], cartan: Sequence[DiffOp]):
    out = defaultdict(list)
    for t in vectors:
        if t:
            out[diagonal_weight(min(t), cartan)].append(t)
    return out


def direct_sum_audit(n: int, d: int) -> Dict[str, int]:
    """
    Check S^d = S^d(E)^{n′⁺} ⊕ (R12·S^{d−2} + R22·S^{d−2}) slice by slice.
    Returns the dimensions; raises AuditFailure when the identity fails.
    """
    osp = build_osp22(n)
    cartan = _algs_cartan(_harmonic_algs(n))
    dim_s = dim_of_degree(VarSpace(n), d)
    harm = defaultdict(list)
    for s in harmonic_slices(n, d):
        for p in s.basis:
            harm[diagonal_weight(min(p.terms), cartan)].append(p.terms)
    imgs = []
    if d >= 2:
        for m in _basis(n, d - 2):
            for op in osp.part("n_minus"):
                imgs.append(op.image(m))
    img_b = _bucket(imgs, cartan)
    dim_h = sum(len(v) for v in harm.values())
    dim_i = 0
    union = 0
    for w in set(harm) | set(img_b):
        e = Echelon()
        for t in img_b.get(w, []):
            e.add(t)
        dim_i += e.rank
        for t in harm.get(w, []):
            e.add(t)
        union += e.rank
    audit = {"dim_S": dim_s, "dim_harmonic": dim_h, "dim_image": dim_i, "rank_union": union}
    if union != dim_h + dim_i:
        raise AuditFailure("harmonics ∩ n′⁻S^{d−2} = 0", f"n={n} d={d} {audit}")
    if dim_s != dim_h + dim_i:
        raise AuditFailure("dim S^d = dim harmonic + dim n′⁻S^{d−2}", f"n={n} d={d} {audit}")
    return audit


def completeness_audit(n: int, d: int) -> Dict[str, int]:
    """
    Check that S^d(E) is spanned by R22^j H^{d−2j} and R22^j R12 H^{d−2j−2},
    with H the harmonics. The pieces need not be independent: "defect" counts
    the relations (nonzero once an atypical partner module stops being free).
    """
    osp = build_osp22(n)
    r12, r22 = osp["R12"], osp["R22"]
    cartan = _algs_cartan(_harmonic_algs(n))
    vecs = []
    expected = 0
    for j in range(d // 2 + 1):
        for extra, dd in ((False, d - 2 * j), (True, d - 2 * j - 2)):
            if dd < 0:
                continue
            for p in harmonic_basis(n, dd):
                t = p.terms
                if extra:
                    t = r12.apply_terms(t)
                for _ in range(j):
                    t = r22.apply_terms(t)
                vecs.append(t)
                expected += 1
    rank = 0
    for bucket in _bucket(vecs, cartan).values():
        e = Echelon()
        for t in bucket:
            e.add(t)
        rank += e.rank
    dim_s = dim_of_degree(VarSpace(n), d)
    audit = {"dim_S": dim_s, "generated": expected, "rank": rank, "defect": expected - rank}
    if rank != dim_s:
        raise AuditFailure("S^d = ⊕_j (R22^j H^{d−2j} ⊕ R22^j R12 H^{d−2j−2})", f"n={n} d={d} {audit}")
    return audit


# ---------------------------------------------------------------------------
# decomposition


def _parity(d: int) -> str:
    return "even" if d % 2 == 0 else "odd"


def decompose_harmonic(n: int, d: int, audit: bool = True) -> DecompositionReport:
    """One IsotypicEntry per joint spo + k′ highest weight vector of S^d(E)^{n′⁺}."""
    spo, osp = _harmonic_algs(n)
    ops = list(spo.raising) + list(osp.part("k_prime_raising"))
    idx = _index(n, d)
    result = []
    for s in harmonic_slices(n, d):
        sw, fw = s.weight
        # HWVs are the combinations of the slice basis killed by every raising operator
        vecs = [p.terms for p in s.basis]
        cols = []
        for t in vecs:
            col = {}
            for j, op in enumerate(ops):
                for mm, c in op.apply_terms(t).items():
                    col[(j, mm)] = c
            cols.append(col)
        combos = []
        for rel in sparse_kernel(cols):
            h: Dict[int, Fraction] = defaultdict(Fraction)
            for pos, c in rel.items():
                for m, a in vecs[pos].items():
                    h[idx[m]] += c * a
            combos.append({i: c for i, c in h.items() if c})
        for v in sparse_rref_basis(combos):
            hv = _to_poly(n, d, v)
            result.append(IsotypicEntry(sw, fw, d, _parity(d), hv, spo_module_dim(hv), kprime_module_dim(hv)))
    result.sort(key=lambda e: (tuple(-x for x in e.spo_weight), tuple(-x for x in e.partner_weight)))
    report = DecompositionReport(n, d, result)
    if audit:
        _fill_audit(report)
    return report


def _fill_audit(report: DecompositionReport) -> None:
    n, d = report.n, report.degree
    ds = direct_sum_audit(n, d)
    total = sum(e.spo_dim * e.partner_dim for e in report.entries)
    report.dim_audit = {
        "dim_S": ds["dim_S"],
        "dim_harmonic": ds["dim_harmonic"],
        "dim_image": ds["dim_image"],
        "sum_products": total,
    }
    if total != ds["dim_harmonic"]:
        raise AuditFailure("Σ spo_dim·partner_dim = dim S^d(E)^{n′⁺}", f"n={n} d={d} {report.dim_audit}")
    seen = set()
    for e in report.entries:
        ok, w = is_hwv(e.hwv, build_spo(n))
        ok2, w2 = is_hwv(e.hwv, build_osp22(n))
        if not (ok and ok2 and w == e.spo_weight and w2 == e.partner_weight):
            raise AuditFailure("entry vector is a joint highest weight vector", f"n={n} d={d}")
        key = (e.spo_weight, e.partner_weight)
        if key in seen:
            raise AuditFailure("multiplicity-free harmonic decomposition", f"n={n} d={d} weight {key}")
        seen.add(key)


def _decompose_job(args):
    n, d = args
    return decompose_harmonic(n, d)


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get("SUPERHOWE_THREADS", "1")))
    except ValueError:
        return 1


def decompose_range(n: int, degrees: Sequence[int], threads: Optional[int] = None) -> List[DecompositionReport]:
    """decompose_harmonic over several degrees, optionally across processes; output is ordered by degree."""
    threads = thread_count() if threads is None else threads
    degrees = sorted(degrees)
    if threads <= 1 or len(degrees) <= 1:
        return [decompose_harmonic(n, d) for d in degrees]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=threads) as ex:
        return list(ex.map(_decompose_job, [(n, d) for d in degrees]))


# ---------------------------------------------------------------------------
# predictions and parity


def predicted_entries(n: int, d: int) -> List[Tuple[Weight, Weight]]:
    """(spo weight, F weight) pairs the harmonic decomposition should contain at degree d."""
    a = alpha(n)
    F = Fraction
    out = []
    if d == 0:
        out.append(((F(0),) * n, (a, -a)))
    if d == 2 * n + 1:
        out.append(((F(0),) * n, (1 + a, 2 * n - a)))
    for k in range(1, n + 1):
        w = lambda dp: tuple(F(x) for x in [dp + 1] + [1] * (k - 1) + [0] * (n - k))  # noqa: E731
        dp = d - k
        if dp >= 0:
            out.append((w(dp), (dp + 1 + a, k - 1 - a)))
        dp = d - (2 * n + 1 - k)
        if dp >= 0:
            out.append((w(dp), (dp + 1 + a, 2 * n - k - a)))
    out.sort(key=lambda e: (tuple(-x for x in e[0]), tuple(-x for x in e[1])))
    return out


@dataclass
class ParityReport:
    n: int
    dmax: int
    occurrences: Dict[Weight, List[Tuple[int, str]]]

    def lines(self) -> List[str]:
        out = []
        for w in sorted(self.occurrences, key=lambda w: tuple(-x for x in w)):
            occ = ", ".join(f"d={d} {p}" for d, p in self.occurrences[w])
            out.append(f"{format_weight(w)}: {occ}")
        return out


def parity_split(n: int, dmax: int, reports: Optional[Sequence[DecompositionReport]] = None) -> ParityReport:
    """spo weights of harmonic joint HWVs up to dmax, tagged by degree parity; each (weight, parity) at most once."""
    if reports is None:
        reports = decompose_range(n, range(dmax + 1))
    occ: Dict[Weight, List[Tuple[int, str]]] = defaultdict(list)
    for r in reports:
        for e in r.entries:
            occ[e.spo_weight].append((e.degree, e.parity))
    for w, lst in occ.items():
        pars = [p for _, p in lst]
        for p in set(pars):
            if pars.count(p) > 1:
                raise AuditFailure("each (spo weight, parity) occurs at most once", f"weight {format_weight(w)} {lst}")
    return ParityReport(n, dmax, dict(occ))


def hook_partitions(d: int) -> List[Tuple[int, ...]]:
    if d == 0:
        return [()]
    return [(k,) + (1,) * (d - k) for k in range(d, 0, -1)]


def sigma_gamma(n: int, lam: Tuple[int, ...]) -> Tuple[Weight, Weight]:
    """Highest weights σ(λ), γ(λ) attached to a hook λ."""
    F = Fraction
    col = len(lam)
    first = lam[0] if lam else 0
    rows = list(lam[:2 * n]) + [0] * max(0, 2 * n - len(lam))
    sigma = tuple(F(x) for x in rows + [max(0, col - 2 * n)])
    gamma = (F(first), F(max(0, col - 1)))
    return sigma, gamma
