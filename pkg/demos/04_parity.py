"""
Even and odd degrees carry the same spo(2|1)-modules with different partners.

For n = 1 every spo weight (w) with w ≥ 1 shows up twice among the
harmonics: once in degree w and once in degree w + 1. One of those degrees
is even and the other odd, so the supergroup element −Id (which acts by
(−1)^degree) tells the two copies apart.
"""

from superhowe.decompose import decompose_range, parity_split

dmax = 9
reports = decompose_range(1, range(dmax + 1))
split = parity_split(1, dmax, reports)
for line in split.lines():
    print(line)

partner = {}
for r in reports:
    for e in r.entries:
        partner[(e.spo_weight, e.parity)] = e.partner_weight
print()
for w in range(1, 5):
    key = (w,)
    even = partner.get((key, "even"))
    odd = partner.get((key, "odd"))
    show = lambda p: "(" + ",".join(map(str, p)) + ")"  # noqa: E731
    print(f"({w}): even partner {show(even)}, odd partner {show(odd)}")
