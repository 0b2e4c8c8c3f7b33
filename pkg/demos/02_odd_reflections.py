"""
From gl(2n|1) x gl(1|1) highest weight vectors to spo(2n|1) ones.

ω_{d,k} is a highest weight vector for the standard Borel b of gl(2n|1).
spo(2n|1) sits inside a different Borel b̃, reached by n odd reflections.
Each step either keeps the vector or applies one odd root vector, and the
weight moves accordingly. Only some of the resulting ω̃_{d,k} are harmonic.
"""

from superhowe import VarSpace, build_osp22
from superhowe import hwv
from superhowe.liealg import format_weight, spo_weight_from_gl

n, d = 2, 1
sp = VarSpace(n)
osp = build_osp22(n)

for k in range(0, 2 * n + 3):
    v = hwv.omega(sp, d, k)
    lam, lam_small = hwv.omega_weights(n, d, k)
    steps = [format_weight(lam)]
    for i in range(1, n + 1):
        v, lam = hwv.odd_reflect(sp, v, lam, i)
        steps.append(format_weight(lam))
    harmonic = not osp["D12"](v) and not osp["D22"](v)
    scale = hwv.proportional(v, hwv.omega_tilde(sp, d, k))
    print(f"k={k}: b-weights " + " -> ".join(steps))
    print(f"      = {scale} * ω̃_{{{d},{k}}}, spo weight {format_weight(spo_weight_from_gl(lam))},"
          f" gl(1|1) weight {format_weight(lam_small)}, harmonic: {harmonic}")

print()
print(f"Harmonic exactly for k <= n+1 = {n + 1}. For larger k, D12 leaves a single monomial:")
for ell in (2, 3):
    print(f"  D12 ω̃_{{{d},{n + ell}}} =", osp["D12"](hwv.omega_tilde(sp, d, n + ell)))
