import random

from superhowe import props
from superhowe.superpoly import VarSpace


def test_all_properties_hold():
    res = props.run_random_properties(1, random.Random(5), 150)
    assert res and all(good == total for good, total in res.values())


def test_runs_are_reproducible():
    a = [props.random_poly(VarSpace(2), random.Random(11), 3).to_text() for _ in range(3)]
    b = [props.random_poly(VarSpace(2), random.Random(11), 3).to_text() for _ in range(3)]
    assert a == b


def test_generators_reach_odd_odd_pairs():
    # a wrong sign rule must be caught, so odd·odd pairs have to be drawn
    sp, rng = VarSpace(1), random.Random(0)
    caught = 0
    for _ in range(200):
        p, a = props.random_parity_poly(sp, rng)
        q, b = props.random_parity_poly(sp, rng)
        if p * q != q * p:
            caught += 1
    assert caught > 0


def test_random_monomial_respects_parity():
    rng = random.Random(3)
    for _ in range(100):
        m = props.random_monomial(VarSpace(2), rng, 4, parity=1)
        assert m.degree == 4 and m.parity == 1
