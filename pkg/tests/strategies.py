"""Hypothesis strategies shared by the property tests."""

from fractions import Fraction

from hypothesis import strategies as st

from superhowe.ratlinalg import RatMatrix
from superhowe.superpoly import SuperMonomial, SuperPoly, VarSpace

scalars = st.fractions(min_value=-8, max_value=8, max_denominator=6)
nonzero_scalars = scalars.filter(bool)


@st.composite
def monomials(draw, sp: VarSpace, max_degree: int = 3):
    nv = sp.nvars
    odd = draw(st.sets(st.integers(1, nv), max_size=min(nv, max_degree)))
    budget = max_degree - len(odd)
    even = draw(st.lists(st.integers(0, budget), min_size=nv, max_size=nv))
    while sum(even) > budget:
        i = max(range(nv), key=lambda j: even[j])
        even[i] -= 1
    return SuperMonomial.make(even, odd)


@st.composite
def polys(draw, sp: VarSpace, max_degree: int = 3, max_terms: int = 4):
    ms = draw(st.lists(monomials(sp, max_degree), max_size=max_terms))
    return SuperPoly(sp, {m: draw(nonzero_scalars) for m in ms})


@st.composite
def homogeneous_polys(draw, sp: VarSpace, degree: int, parity=None, max_terms: int = 4):
    """Polynomials of one degree and (optionally) one parity."""
    if parity is None:
        parity = draw(st.integers(0, 1))
    ms = draw(st.lists(monomials(sp, degree), min_size=1, max_size=max_terms))
    terms = {}
    for m in ms:
        k = len(m.odd_indices)
        if m.degree == degree and k % 2 == parity:
            terms[m] = draw(nonzero_scalars)
    return SuperPoly(sp, terms), parity


@st.composite
def parity_polys(draw, sp: VarSpace, max_degree: int = 3):
    """(poly, parity) with every term of that parity; degrees may be mixed."""
    parity = draw(st.integers(0, 1))
    ms = draw(st.lists(monomials(sp, max_degree), max_size=4))
    return SuperPoly(sp, {m: draw(nonzero_scalars) for m in ms if len(m.odd_indices) % 2 == parity}), parity


@st.composite
def matrices(draw, max_rows: int = 5, max_cols: int = 5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    entry = st.one_of(st.just(Fraction(0)), scalars)
    rows = draw(st.lists(st.lists(entry, min_size=c, max_size=c), min_size=r, max_size=r))
    return RatMatrix(rows)


spaces = st.sampled_from([VarSpace(1), VarSpace(2)])
