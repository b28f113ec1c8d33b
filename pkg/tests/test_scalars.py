from fractions import Fraction
from random import Random

import pytest

from cycdaha.scalars import (
    CycloField,
    CycloNumber,
    QQ,
    RatFunc1,
    RatFuncField,
    SamplingExhausted,
    binomial_fraction,
    cyclo_normalize,
    cyclotomic_polynomial,
    poly_divmod,
    ratfunc_simplify,
    sample_generic,
)


def test_cyclo_normalize_examples():
    # zeta_2 = -1
    assert cyclo_normalize([3, 5], 2).coeffs == (Fraction(-2),)
    # zeta_4^2 = -1
    assert cyclo_normalize([0, 0, 1, 0], 4).coeffs == (Fraction(-1), Fraction(0))
    # 1 + zeta_3 + zeta_3^2 = 0
    assert not cyclo_normalize([1, 1, 1], 3)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == [Fraction(-1), Fraction(1)]
    assert cyclotomic_polynomial(2) == [Fraction(1), Fraction(1)]
    assert cyclotomic_polynomial(3) == [Fraction(1), Fraction(1), Fraction(1)]
    assert cyclotomic_polynomial(4) == [Fraction(1), Fraction(0), Fraction(1)]
    assert cyclotomic_polynomial(6) == [Fraction(1), Fraction(-1), Fraction(1)]


def test_minimal_polynomial_of_zeta_vanishes():
    for l in (2, 3, 4, 5, 6, 8):
        z = CycloNumber.zeta(l)
        phi = cyclotomic_polynomial(l)
        acc = CycloNumber.from_rational(l, 0)
        for c in reversed(phi):
            acc = acc * z + c
        assert not acc
        assert z ** l == 1


def test_low_order_cyclotomics_match_rationals():
    # l = 1: zeta = 1; l = 2: zeta = -1
    for l, zval in ((1, Fraction(1)), (2, Fraction(-1))):
        z = CycloNumber.zeta(l)
        a = (z * 3 + 2) * (z - Fraction(1, 2))
        expected = (zval * 3 + 2) * (zval - Fraction(1, 2))
        assert a.rational_part() == expected


def _axiom_trials(dom, sampler, trials=1000, seed=3):
    rng = Random(seed)
    one = dom.one
    for _ in range(trials):
        a, b, c = sampler(rng), sampler(rng), sampler(rng)
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        if a:
            assert a * (one / a) == one


def test_field_axioms_rationals():
    _axiom_trials(
        QQ, lambda rng: Fraction(rng.randint(-20, 20), rng.randint(1, 12))
    )


def test_field_axioms_cyclotomic():
    dom = CycloField(3)

    def sampler(rng):
        return CycloNumber(
            3, [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(2)]
        )

    _axiom_trials(dom, sampler, trials=300)


def test_field_axioms_ratfunc():
    dom = RatFuncField("t")

    def sampler(rng):
        num = [Fraction(rng.randint(-4, 4)) for _ in range(rng.randint(1, 3))]
        den = [Fraction(rng.randint(-4, 4)) for _ in range(rng.randint(1, 2))] + [
            Fraction(1)
        ]
        return RatFunc1("t", num, den)

    _axiom_trials(dom, sampler, trials=150)


def test_ratfunc_simplify_examples():
    t = RatFunc1.variable("t")
    # (1 - t^3)/(1 - t) = 1 + t + t^2
    r = ratfunc_simplify([1, 0, 0, -1], [1, -1])
    assert r == 1 + t + t * t
    # (t^2 - 1)/(t - 1) = t + 1
    assert ratfunc_simplify([-1, 0, 1], [-1, 1]) == t + 1
    # (1 - t^4)/((1-t)(1-t^2)): the gcd is 1 - t^2, leaving (1 + t^2)/(1 - t);
    # cross-checked by long division of both numerator and denominator by
    # the gcd
    den = [1, -1, -1, 1]  # (1-t)(1-t^2)
    r = ratfunc_simplify([1, 0, 0, 0, -1], den)
    gcd = [Fraction(1), Fraction(0), Fraction(-1)]  # 1 - t^2
    qn, rn = poly_divmod([Fraction(1), 0, 0, 0, Fraction(-1)], gcd)
    qd, rd = poly_divmod([Fraction(c) for c in den], gcd)
    assert not rn and not rd
    assert r == RatFunc1("t", qn, qd)
    assert r == (1 + t ** 2) / (1 - t)


def test_ratfunc_zero_denominator_raises():
    with pytest.raises(ZeroDivisionError):
        ratfunc_simplify([1], [0])


def test_sample_generic_deterministic_and_valid():
    cons = [("nonzero", "q"), ("not_root_of_unity", "q", 24)]
    v1 = sample_generic(["q"], cons, seed=7)
    v2 = sample_generic(["q"], cons, seed=7)
    assert v1 == v2
    q = v1["q"]
    assert q != 0
    p = Fraction(1)
    for _ in range(24):
        p *= q
        assert p != 1


def test_sample_generic_difference_constraint():
    v = sample_generic(
        ["z1", "z2"], [("diff_not_integer", "z1", "z2", 10)], seed=1
    )
    assert (v["z1"] - v["z2"]).denominator != 1


def test_sample_generic_ratio_constraint_excludes_13_values():
    q = Fraction(5, 3)
    v = sample_generic(
        ["Z1", "Z2"],
        [("nonzero", "Z1"), ("nonzero", "Z2"),
         ("ratio_not_q_power", "Z1", "Z2", q, 6)],
        seed=3,
    )
    ratio = v["Z1"] / v["Z2"]
    excluded = [q ** p for p in range(-6, 7)]
    assert len(excluded) == 13
    for bad in excluded:
        assert ratio != bad


def test_sample_generic_exhaustion():
    # q nonzero and q equal to an integer power of itself beyond the window
    # is impossible: ratio of a value with itself is q^0 = 1 = (q)^0
    with pytest.raises(SamplingExhausted):
        sample_generic(
            ["x"],
            [("ratio_not_q_power", "x", "x", Fraction(2), 0)],
            seed=0,
            max_attempts=50,
        )


def test_generalized_binomials():
    a = Fraction(1, 2)
    assert binomial_fraction(a, 0) == 1
    assert binomial_fraction(a, 1) == a
    assert binomial_fraction(a, 2) == Fraction(-1, 8)
    assert binomial_fraction(-2, 2) == 3  # C(-2,2) = 3
    assert binomial_fraction(3, 5) == 0


def test_serialization_round_trips():
    z = CycloNumber(4, [Fraction(1, 2), Fraction(-3)])
    assert CycloNumber.from_json(z.to_json()) == z
    r = RatFunc1("t", [1, 2], [1, 0, 1])
    assert RatFunc1.from_json(r.to_json()) == r
