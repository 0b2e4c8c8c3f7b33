"""
The smallest case, n = 1: E = C^{2|1} ⊗ C^{1|1} has even variables x1, x2, x3
and odd variables e1, e2, e3.

We decompose the harmonics degree by degree and look at the one summand
that does not fit the generic two-row pattern.
"""

from superhowe import build_osp22, build_spo, decompose_harmonic, is_hwv, parse_poly, VarSpace
from superhowe.decompose import kprime_module_dim, spo_module_dim
from superhowe.liealg import format_weight

n = 1
print("degree  spo weight  x  osp(2|2) weight      dims")
for d in range(7):
    report = decompose_harmonic(n, d)
    for e in report.entries:
        sw = ",".join(map(str, e.spo_weight))
        pw = ",".join(map(str, e.partner_weight))
        print(f"{d:>6}  ({sw}){'':<8} x  ({pw}){'':<{14 - len(pw)}} {e.spo_dim} x {e.partner_dim}")
    audit = report.dim_audit
    print(f"        dim of harmonics {audit['dim_harmonic']} = Σ products {audit['sum_products']}")

# In degree 3 a copy of the trivial spo(2|1)-module shows up.
sp = VarSpace(1)
v = parse_poly(sp, "x1 x3 e2 - x2 x3 e1 - x3^2 e3 - e1 e2 e3")
print()
print("v =", v)
for label, alg in (("spo(2|1)", build_spo(1)), ("osp(2|2)", build_osp22(1))):
    ok, w = is_hwv(v, alg)
    print(f"{label} highest weight vector: {ok}, weight {format_weight(w)}")
print("spo module dimension:", spo_module_dim(v), "  gl(1|1) module dimension:", kprime_module_dim(v))

# The two generic highest weight vectors
for d in (4, 5):
    r = decompose_harmonic(n, d)
    print(f"d={d}:", " | ".join(str(e.hwv) for e in r.entries))
