from fractions import Fraction

import pytest

from cycdaha.bow import (
    CIRCLE_CROSS,
    AlphaNotInjective,
    BowData,
    BowDiagram,
    check_bow,
    cobalanced_reduction_check,
    hw_diagram,
    hw_inverse,
    hw_round_trip_check,
    hw_transition,
    linkage_invariants,
    sample_bow,
    sample_cobalanced_segment,
)
from cycdaha.linalg import Matrix


def bow(dims, seed):
    return sample_bow(dims, Fraction(2), Fraction(3), Fraction(5, 2), seed)


def test_sampled_bow_certifies():
    b = bow((2, 2, 2), 11)
    r = check_bow(b)
    assert r["certified"] and r["S1"] and r["S2"]


def test_round_trips():
    for dims in ((1, 1, 1), (2, 2, 2)):
        for seed in (11, 12, 13, 14, 15):
            r = hw_round_trip_check(bow(dims, seed))
            assert r["ok"], (dims, seed, r)


def test_transition_dimension_count():
    b = bow((2, 2, 2), 11)
    new = hw_transition(b)
    assert new.dims == (2, 3, 2)  # d1 + d3 + 1 - d2
    back = hw_inverse(new)
    assert back.dims == b.dims


def test_degenerate_middle_space():
    b0 = BowData(
        CIRCLE_CROSS, (1, 0, 1), Fraction(2), Fraction(3), Fraction(5, 2),
        C=Matrix.zero(0, 1), D=Matrix.zero(1, 0), A=Matrix.zero(1, 0),
        a=Matrix([[1]]), b=Matrix.zero(1, 0),
        B1=Matrix([[6]]), B2=Matrix.zero(0, 0), B3=Matrix([[1]]),
    )
    assert check_bow(b0)["certified"]
    assert hw_round_trip_check(b0)["ok"]


def test_unstable_data_detected_with_witness():
    b = bow((1, 1, 1), 11)
    broken = BowData(
        CIRCLE_CROSS, b.dims, b.t, b.Z, b.Zp, b.C, b.D,
        Matrix.zero(1, 1), b.a, Matrix.zero(1, 1), b.B1, b.B2, b.B2,
    )
    r = check_bow(broken)
    assert not r["S1"]
    assert r["S1_witness"]
    with pytest.raises(Exception):
        hw_transition(broken)


def test_alpha_injectivity_guard():
    # alpha = [D; A; b] fails injectivity when all three vanish on V2
    b = bow((1, 1, 1), 12)
    broken = BowData(
        CIRCLE_CROSS, b.dims, b.t, b.Z, b.Zp, b.C, Matrix.zero(1, 1),
        Matrix.zero(1, 1), b.a, Matrix.zero(1, 1), b.B1, b.B2, b.B3,
    )
    with pytest.raises((AlphaNotInjective, Exception)):
        hw_transition(broken)


def test_linkage_invariants_preserved():
    for dims in ((1, 1, 1), (2, 2, 2), (1, 2, 2)):
        diag = BowDiagram([0, *dims, 0], ["x", "o", "x", "x"])
        diag2 = hw_diagram(diag, 1)
        assert linkage_invariants(diag) == linkage_invariants(diag2)
        assert diag2.dims[2] == dims[0] + dims[2] + 1 - dims[1]


def test_single_cross_circular_diagram_invariant_is_level():
    # the balanced one-cross l-circle diagram carries invariant [l],
    # matching the level of the multiplicative quiver variety it realizes
    for N in (1, 2, 3):
        for l in (1, 2, 3, 4):
            d = BowDiagram([N] * (l + 1), ["x"] + ["o"] * l, circular=True)
            assert linkage_invariants(d) == [l]


def test_cobalanced_segment_identities():
    for n in (1, 2, 3):
        for seed in (5, 7):
            data = sample_cobalanced_segment(n, seed=seed)
            r = cobalanced_reduction_check(data)
            assert r["chain_identity"]
            assert r["telescoping"]
            assert r["loops_invertible"]


def test_bow_json_round_trip():
    b = bow((2, 2, 2), 11)
    b2 = BowData.from_json(b.to_json())
    assert b2.C == b.C and b2.B3 == b.B3 and b2.dims == b.dims
    assert check_bow(b2)["certified"]
