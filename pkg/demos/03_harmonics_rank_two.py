"""
n = 2: the full harmonic decomposition up to degree 5, with the
dimension bookkeeping that backs it.

S^d splits as harmonics ⊕ n′⁻·S^{d−2}. The harmonics split as a sum of
(spo module) ⊗ (gl(1|1) module), and U(n′⁻) applied to the harmonics spans
everything. Those spanning pieces are not always independent; the
relations count is printed too.
"""

import time

from superhowe.decompose import completeness_audit, decompose_range, direct_sum_audit
from superhowe.liealg import format_weight

n = 2
t0 = time.perf_counter()
reports = decompose_range(n, range(6))
for r in reports:
    ds = direct_sum_audit(n, r.degree)
    cp = completeness_audit(n, r.degree)
    print(f"d={r.degree}: dim S^d = {ds['dim_S']} = {ds['dim_harmonic']} harmonic + {ds['dim_image']} image;"
          f" spanning rank {cp['rank']}, relations {cp['defect']}")
    for e in r.entries:
        print(f"    {format_weight(e.spo_weight):<10} x {format_weight(e.partner_weight):<12}"
              f" dims {e.spo_dim:>3} x {e.partner_dim}   {e.hwv}")
print(f"({time.perf_counter() - t0:.1f}s)")
