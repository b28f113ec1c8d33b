import pytest

from cycdaha.algebra import (
    UnknownFamily,
    basis_monomials,
    catalog,
    cd11_instance,
    independence_check,
    involution_image,
    jucys_murphy_consistency,
    sample_rep,
    verify_family,
    verify_involution,
)
from cycdaha.ops import Gen, OperatorExpr, op_equal_on_box


def test_catalog_counts():
    assert catalog("daha").count == 12
    assert catalog("deg-cyc").count == 11
    names = catalog("cyc-daha").schema_names()
    assert len(names) == 19
    assert names[:9] == ["R1", "R2", "R3", "R4", "R5", "R6", "R7", "R11", "R12"]
    assert names[9:] == [f"cd{i}" for i in range(1, 11)]
    assert catalog("lastrel").count == 1
    with pytest.raises(UnknownFamily):
        catalog("nope")


def test_lastrel_catalog_content():
    rep = sample_rep("l1", 2, 1, seed=1)
    (inst,) = catalog("lastrel").instances(rep)
    assert inst.name == "lastrel"
    assert op_equal_on_box(rep, inst.lhs, inst.rhs, 2)["result"]


def test_deg_daha_contains_pi_y_relation():
    rep = sample_rep("deg-daha", 2, seed=1)
    names = [i.name for i in catalog("deg-daha").instances(rep)]
    assert "pi-yN" in names  # pi y_N = (y_1 - hbar) pi
    assert "pi-word" in names and "s0-word" in names
    assert "secrel" in names  # [y_2, X_1] = k X_1 s_1


@pytest.mark.parametrize("family,N,l", [
    ("daha", 2, 0), ("daha", 3, 0),
    ("deg-daha", 2, 0), ("deg-daha", 3, 0),
    ("deg-cyc", 2, 1), ("deg-cyc", 2, 2), ("deg-cyc", 3, 1), ("deg-cyc", 3, 2),
    ("l1", 2, 1), ("l1", 3, 1),
    ("lastrel", 2, 1), ("lastrel", 3, 1),
])
def test_families_verify_box(family, N, l):
    for seed in (1, 2, 3):
        rep = sample_rep(family, N, l, seed=seed)
        r = verify_family(rep, family, "box", box_radius=2)
        fails = [x for x in r["relations"] if x["status"] != "pass"]
        assert r["all_pass"], fails[:3]


@pytest.mark.parametrize("N,l", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_cyc_daha_randomized(N, l):
    rep = sample_rep("cyc-daha", N, l, seed=5)
    r = verify_family(rep, "cyc-daha", "random", trials=5, seed=7)
    fails = [x for x in r["relations"] if x["status"] != "pass"]
    assert r["all_pass"], fails[:3]


@pytest.mark.parametrize("l", [1, 2])
def test_cyc_daha_box_mode(l):
    for seed in (1, 2, 3):
        rep = sample_rep("cyc-daha", 2, l, seed=seed)
        r = verify_family(rep, "cyc-daha", "box", box_radius=2)
        fails = [x for x in r["relations"] if x["status"] != "pass"]
        assert r["all_pass"], fails[:3]


def test_cyc_daha_box_mode_rank_three():
    rep = sample_rep("cyc-daha", 3, 2, seed=4)
    r = verify_family(rep, "cyc-daha", "box", box_radius=1)
    fails = [x for x in r["relations"] if x["status"] != "pass"]
    assert r["all_pass"], fails[:3]


def test_cd11_phi_image_of_cd10():
    rep = sample_rep("cyc-daha", 2, 2, seed=5)
    inst = cd11_instance(rep)
    assert op_equal_on_box(rep, inst.lhs, inst.rhs, 2)["result"]


def test_jucys_murphy_consistency():
    for N in (2, 3, 4):
        rep = sample_rep("daha", N, seed=1)
        assert jucys_murphy_consistency(rep, box_radius=1 if N == 4 else 2)["result"]


@pytest.mark.parametrize("family,N,l", [
    ("l1", 2, 1), ("l1", 3, 1),
    ("deg-cyc", 2, 1), ("deg-cyc", 2, 2),
    ("cyc-daha", 2, 1), ("cyc-daha", 2, 2),
])
def test_involutions(family, N, l):
    rep = sample_rep(family, N, l, seed=3)
    r = verify_involution(rep, family)
    fails = [x for x in r["relations"] if x["status"] == "fail"]
    assert r["all_pass"], fails[:3]


def test_cherednik_involution_images():
    rep = sample_rep("daha", 2, seed=1)
    img, rep2 = involution_image("daha-cherednik", OperatorExpr.gen("Y", 1), rep)
    assert img == OperatorExpr.gen("X^-1", 1)
    img2, _ = involution_image("daha-cherednik", img, rep2)
    assert img2 == OperatorExpr.gen("Y", 1)
    assert rep2.params["q"] == 1 / rep.params["q"]


def test_phi_involution_images():
    rep = sample_rep("cyc-daha", 2, 1, seed=3)
    img, rep2 = involution_image("cyc-daha", OperatorExpr.gen("X", 1), rep)
    assert img == OperatorExpr.gen("Dl", 1)
    # phi(phi(T_1)) = T_1 syntactically
    timg, _ = involution_image("cyc-daha", OperatorExpr.gen("T", 1), rep)
    t2, _ = involution_image("cyc-daha", timg, rep2)
    assert t2 == OperatorExpr.gen("T", 1)


def test_basis_monomials_xd_missing():
    out = basis_monomials("MX_MD_missing", 1, 1, {"X": 2, "D": 2})
    labels = sorted(lab for _, lab in out)
    assert labels == [(-2,), (-1,), (0,), (1,), (2,)]
    assert len(out) == 5
    # per-index exclusivity: no word contains both X_i and D_i
    for expr, _ in out:
        for word in expr.terms:
            tags = {(g.tag, g.i) for g in word}
            assert not ({("X", 1), ("Dl", 1)} <= tags)


def test_basis_monomials_xysd_degree_zero():
    out = basis_monomials("MX_My_s_MD", 2, 1, {"X": 0, "D": 0})
    # y-cap is l - 1 = 0, so only the permutation part remains: {1, s_1}
    assert len(out) == 2
    words = sorted(tuple(w) for expr, _ in out for w in expr.terms)
    assert words == [(), (Gen("s", 1),)]


def test_basis_monomials_hecke_shape_count():
    out = basis_monomials("MX_MY_Ts_MD", 1, 2, {"X": 1, "Y": 1, "D": 1})
    # N = 1: X-exponent in {0,1}, Y-exponent in {0,1}, trivial group, D in {0,1}
    assert len(out) == 8
    # brute-force count 3*2*1*2 with the X cap raised to 2
    out = basis_monomials("MX_MY_Ts_MD", 1, 2, {"X": 2, "Y": 1, "D": 1})
    assert len(out) == 12
    # the Y cap never exceeds l - 1
    out = basis_monomials("MX_MY_Ts_MD", 1, 1, {"X": 1, "Y": 5, "D": 1})
    assert len(out) == 4


def test_independence_check_examples():
    rep = sample_rep("l1", 1, 1, seed=1)
    exprs = [
        OperatorExpr.one(),
        OperatorExpr.gen("X", 1),
        OperatorExpr.gen("Dl", 1),
    ]
    probes = [rep.one(), rep.var(1), rep.var(1) ** 2]
    r = independence_check(rep, exprs, probes)
    assert r["rank"] == 3 and r["independent"]
    r2 = independence_check(rep, exprs + [OperatorExpr.gen("X", 1)], probes)
    assert r2["rank"] == 3 and not r2["independent"]


def test_independence_of_degenerate_pbw_monomials():
    # the degenerate shape X^a y^b w D^c at N=2, l=1 (y-cap 0)
    rep = sample_rep("deg-cyc", 2, 1, seed=2)
    out = basis_monomials("MX_My_s_MD", 2, 1, {"X": 1, "D": 1})
    exprs = [e for e, _ in out]
    probes = [
        rep.monomial((a, b)) for a in range(0, 7) for b in range(0, 7)
    ]
    r = independence_check(rep, exprs, probes)
    assert r["count"] == 32
    assert r["independent"], r


def test_independence_of_pbw_monomials():
    rep = sample_rep("l1", 2, 1, seed=2)
    out = basis_monomials("MX_MY_Ts_MD", 2, 1, {"X": 1, "Y": 0, "D": 1})
    exprs = [e for e, _ in out]
    probes = [rep.monomial(e) for e in
              [(0, 0), (1, 0), (0, 1), (1, 1), (2, 0), (0, 2), (2, 1), (1, 2),
               (2, 2), (3, 0), (0, 3), (3, 1), (1, 3), (3, 2), (2, 3), (3, 3),
               (4, 0), (0, 4), (4, 1), (1, 4), (4, 2), (2, 4), (4, 3), (3, 4),
               (4, 4), (5, 5), (5, 0), (0, 5), (5, 1), (1, 5), (5, 2), (2, 5)]]
    r = independence_check(rep, exprs, probes)
    assert r["independent"], r
