"""Bow-variety segments and the Hanany-Witten transition.

A bow segment holds three spaces V1, V2, V3 joined by one two-way pair
(the "circle": C, D) and one framed triangle (the "cross": A, a, b), with a
loop on each space.  Two orientations occur:

* CIRCLE_CROSS:  V1 <--C/D--> V2 --A,a,b--> V3, equations
      B1 = t Z (1 + D C)^-1,   B2 = Z' (1 + C D)^-1,
      B3 A - A B2 + a b = 0,
  stability (S1): no nonzero B2-stable subspace of ker A  cap  ker b,
  stability (S2): no proper B3-stable subspace containing im A + im a.

* CROSS_CIRCLE:  V1 --A,a,b--> V2 <--C/D--> V3, equations
      B2 = t Z (1 + D C)^-1,   B3 = Z' (1 + C D)^-1,
      B2 A - A B1 + a b = 0,
  (S1) on V1 with B1, (S2) on V2 with B2.

The Hanany-Witten transition maps one orientation to the other through the
cokernel of alpha = [D; A; b], preserving the defining equations, the
stability conditions and the linkage invariants; the inverse reconstructs
the original data from the kernel of the projection, and the round trip is
verified through an explicit intertwiner.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random

from .linalg import Matrix, span_closure

CIRCLE_CROSS = "circle-cross"
CROSS_CIRCLE = "cross-circle"


class AlphaNotInjective(Exception):
    pass


class InconsistentEquations(Exception):
    pass


class SamplingExhausted(Exception):
    pass


@dataclass
class BowData:
    """One bow segment; dims = (dim V1, dim V2, dim V3).

    In CIRCLE_CROSS orientation: C: V1->V2, D: V2->V1, A: V2->V3,
    a: C->V3 (column), b: V2->C (row).
    In CROSS_CIRCLE orientation: A: V1->V2, a: C->V2, b: V1->C,
    C: V2->V3, D: V3->V2.
    """

    orientation: str
    dims: tuple
    t: Fraction
    Z: Fraction
    Zp: Fraction
    C: Matrix
    D: Matrix
    A: Matrix
    a: Matrix
    b: Matrix
    B1: Matrix
    B2: Matrix
    B3: Matrix

    def to_json(self):
        out = {
            "orientation": self.orientation,
            "dims": list(self.dims),
            "t": str(self.t),
            "Z": str(self.Z),
            "Zp": str(self.Zp),
        }
        for name in ("C", "D", "A", "a", "b", "B1", "B2", "B3"):
            out[name] = getattr(self, name).to_json()
        return out

    @classmethod
    def from_json(cls, data):
        return cls(
            orientation=data["orientation"],
            dims=tuple(data["dims"]),
            t=Fraction(data["t"]),
            Z=Fraction(data["Z"]),
            Zp=Fraction(data["Zp"]),
            **{
                k: Matrix.from_json(data[k])
                for k in ("C", "D", "A", "a", "b", "B1", "B2", "B3")
            },
        )


def _largest_stable_subspace(inside_kernels, op):
    """Largest op-stable subspace contained in the intersection of the
    kernels of the given matrices (decreasing fixed-point iteration).

    Returns a list of independent column vectors (empty = zero subspace).
    """
    if not inside_kernels:
        raise ValueError("need at least one kernel constraint")
    stacked = inside_kernels[0]
    for m in inside_kernels[1:]:
        stacked = stacked.vstack(m)
    basis = stacked.kernel_basis()
    while basis:
        # W_next = W cap op^-1(W): solve for v in W with op v in W
        span = Matrix([[v.rows[i][0] for v in basis] for i in range(basis[0].m)])
        img = op * span
        # op v in W  <=>  img coefficients solvable: find kernel of the
        # composite map W -> ambient/W
        comp = span.left_kernel_matrix()
        if comp.m == 0:
            break  # W is the whole space and op-stable
        rows = comp * img
        coeff_kernel = rows.kernel_basis()
        new_basis = [span * c for c in coeff_kernel]
        if len(new_basis) == len(basis):
            break
        basis = new_basis
    return basis


def _smallest_stable_containing(seed_columns, op):
    """Smallest op-stable subspace containing the given column spans."""
    seeds = []
    for m in seed_columns:
        for j in range(m.n):
            col = Matrix.column([m.rows[i][j] for i in range(m.m)])
            if not col.is_zero():
                seeds.append(col)
    return span_closure(seeds, [op])


def check_bow(bow):
    """Exact equation residuals plus the two stability conditions."""
    d1, d2, d3 = bow.dims
    res = []
    ok = True
    if bow.orientation == CIRCLE_CROSS:
        IA = Matrix.identity(d1)
        IB = Matrix.identity(d2)
        e1 = bow.B1 * (IA + bow.D * bow.C) - IA * (bow.t * bow.Z)
        e2 = bow.B2 * (IB + bow.C * bow.D) - IB * bow.Zp
        e3 = bow.B3 * bow.A - bow.A * bow.B2 + bow.a * bow.b
        s1_space = _largest_stable_subspace([bow.A, bow.b], bow.B2)
        s2_space = _smallest_stable_containing([bow.A, bow.a], bow.B3)
        s2_ok = len(s2_space) == d3
    else:
        IB = Matrix.identity(d2)
        IC = Matrix.identity(d3)
        e1 = bow.B2 * (IB + bow.D * bow.C) - IB * (bow.t * bow.Z)
        e2 = bow.B3 * (IC + bow.C * bow.D) - IC * bow.Zp
        e3 = bow.B2 * bow.A - bow.A * bow.B1 + bow.a * bow.b
        s1_space = _largest_stable_subspace([bow.A, bow.b], bow.B1)
        s2_space = _smallest_stable_containing([bow.A, bow.a], bow.B2)
        s2_ok = len(s2_space) == d2
    for name, e in (("loop-left", e1), ("loop-right", e2), ("cross", e3)):
        res.append({"equation": name, "zero": e.is_zero()})
        ok &= e.is_zero()
    s1_ok = len(s1_space) == 0
    return {
        "certified": ok and s1_ok and s2_ok,
        "equations_ok": ok,
        "residuals": res,
        "S1": s1_ok,
        "S1_witness": [v.to_json() for v in s1_space] if not s1_ok else None,
        "S2": s2_ok,
    }


def sample_bow(dims, t, Z, Zp, seed, max_attempts=400):
    """A certified stable CIRCLE_CROSS bow with square A (needs d2 == d3)."""
    d1, d2, d3 = dims
    if d2 != d3:
        raise ValueError("sampler requires dim V2 == dim V3")
    t, Z, Zp = Fraction(t), Fraction(Z), Fraction(Zp)
    rng = Random(seed)
    I1 = Matrix.identity(d1)
    I2 = Matrix.identity(d2)
    for _ in range(max_attempts):
        C = Matrix.random(rng, d2, d1)
        D = Matrix.random(rng, d1, d2)
        if not (I1 + D * C).is_invertible():
            continue
        B1 = (I1 + D * C).inverse() * (t * Z)
        B2 = (I2 + C * D).inverse() * Zp
        A = Matrix.random(rng, d3, d2)
        a = Matrix.random(rng, d3, 1)
        b = Matrix.random(rng, 1, d2)
        if not A.is_invertible():
            continue
        B3 = (A * B2 - a * b) * A.inverse()
        if not B3.is_invertible():
            continue
        bow = BowData(CIRCLE_CROSS, tuple(dims), t, Z, Zp, C, D, A, a, b, B1, B2, B3)
        if check_bow(bow)["certified"]:
            return bow
    raise SamplingExhausted("no stable certified bow found")


def hw_transition(bow):
    """The Hanany-Witten transition CIRCLE_CROSS -> CROSS_CIRCLE.

    Builds alpha = [D; A; b] : V2 -> V1 + V3 + C, checks injectivity, forms
    the cokernel V2n, and assembles the new maps.  The internal identity
    alpha_n = alpha C B1 is asserted entrywise, as are the new defining
    equations and stability conditions.
    """
    if bow.orientation != CIRCLE_CROSS:
        raise ValueError("transition starts from the circle-cross orientation")
    rep = check_bow(bow)
    if not rep["certified"]:
        raise InconsistentEquations("input bow not certified")
    d1, d2, d3 = bow.dims
    t, Z, Zp = bow.t, bow.Z, bow.Zp
    alpha = bow.D.vstack(bow.A, bow.b)
    if alpha.rank() < d2:
        raise AlphaNotInjective("alpha = [D; A; b] is not injective")
    beta = (bow.A * bow.B2 * bow.C).hstack(
        bow.B3 - Matrix.scalar(d3, Zp), bow.a
    )
    if not (beta * alpha).is_zero():
        raise InconsistentEquations("betaALPHA != 0")
    proj = alpha.left_kernel_matrix()  # rows span the cokernel
    d2n = proj.m
    assert d2n == d1 + d3 + 1 - d2
    An = proj.submatrix(range(d2n), range(d1))
    Dn = proj.submatrix(range(d2n), range(d1, d1 + d3))
    an = proj.submatrix(range(d2n), range(d1 + d3, d1 + d3 + 1))
    bn = bow.b * bow.C * bow.B1
    # Cn induced from -B3^-1 beta: Cn . proj = -B3^-1 beta
    target = bow.B3.inverse() * beta * Fraction(-1)
    Cn = (proj.T).solve_right(target.T).T
    if Cn * proj != target:
        raise InconsistentEquations("Cn does not descend")
    one_plus_CnDn = Matrix.identity(d3) + Cn * Dn
    if one_plus_CnDn != Matrix.scalar(d3, Zp) * bow.B3.inverse():
        raise InconsistentEquations("1 + Cn Dn != Z' B3^-1")
    B2n = (Matrix.identity(d2n) + Dn * Cn).inverse() * (t * Z)
    # internal identity: alpha_n = alpha C B1, entrywise
    alpha_n = (Matrix.scalar(d1, t * Z) - bow.B1).vstack(
        (Cn * B2n * An) * Fraction(-1), bn
    )
    if alpha_n != alpha * bow.C * bow.B1:
        raise InconsistentEquations("alpha_n != alpha C B1")
    new = BowData(
        CROSS_CIRCLE,
        (d1, d2n, d3),
        t,
        Z,
        Zp,
        Cn,
        Dn,
        An,
        an,
        bn,
        bow.B1,
        B2n,
        bow.B3,
    )
    new_rep = check_bow(new)
    if not new_rep["certified"]:
        raise InconsistentEquations("transitioned bow fails certification")
    return new


def hw_inverse(bow):
    """The inverse transition CROSS_CIRCLE -> CIRCLE_CROSS.

    V2 is recovered as ker of beta_n = [A, D, a]; the maps are restrictions
    of the three projections, a = -B3 C a_n, C = alpha_n B1^-1 expressed in
    kernel coordinates, and B2 = Z'(1 + C D)^-1.
    """
    if bow.orientation != CROSS_CIRCLE:
        raise ValueError("inverse starts from the cross-circle orientation")
    rep = check_bow(bow)
    if not rep["certified"]:
        raise InconsistentEquations("input bow not certified")
    d1, d2n, d3 = bow.dims
    t, Z, Zp = bow.t, bow.Z, bow.Zp
    beta_n = bow.A.hstack(bow.D, bow.a)
    kern = beta_n.kernel_basis()
    d2 = len(kern)
    if d2 != d1 + d3 + 1 - d2n:
        raise InconsistentEquations("kernel dimension mismatch")
    K = Matrix([[v.rows[i][0] for v in kern] for i in range(d1 + d3 + 1)])
    D = K.submatrix(range(d1), range(d2))
    A = K.submatrix(range(d1, d1 + d3), range(d2))
    b = K.submatrix(range(d1 + d3, d1 + d3 + 1), range(d2))
    a = bow.B3 * bow.C * bow.a * Fraction(-1)
    alpha_n = (Matrix.scalar(d1, t * Z) - bow.B1).vstack(
        (bow.C * bow.B2 * bow.A) * Fraction(-1), bow.b
    )
    C = K.solve_right(alpha_n * bow.B1.inverse())
    B2 = (Matrix.identity(d2) + C * D).inverse() * Zp
    B1 = bow.B1
    B3 = bow.B3
    out = BowData(
        CIRCLE_CROSS, (d1, d2, d3), t, Z, Zp, C, D, A, a, b, B1, B2, B3
    )
    out_rep = check_bow(out)
    if not out_rep["certified"]:
        raise InconsistentEquations("inverse-transitioned bow fails certification")
    return out


def hw_round_trip_check(bow):
    """transition then inverse, with the identification on V2 made explicit.

    The recovered segment's V2 is ker(beta_n) with basis columns K; the
    intertwiner g solves K g = alpha and must match all five maps and B2.
    """
    new = hw_transition(bow)
    back = hw_inverse(new)
    if back.dims != bow.dims:
        return {"ok": False, "reason": "dimension mismatch"}
    alpha = bow.D.vstack(bow.A, bow.b)
    beta_n = new.A.hstack(new.D, new.a)
    kern = beta_n.kernel_basis()
    K = Matrix(
        [[v.rows[i][0] for v in kern] for i in range(sum(bow.dims) - bow.dims[1] + 1)]
    )
    try:
        g = K.solve_right(alpha)
    except ValueError:
        return {"ok": False, "reason": "alpha does not land in ker(beta_n)"}
    checks = {
        "g_invertible": g.is_invertible(),
        "D": back.D * g == bow.D,
        "A": back.A * g == bow.A,
        "b": back.b * g == bow.b,
        "C": back.C == g * bow.C,
        "a": back.a == bow.a,
        "B2": back.B2 * g == g * bow.B2,
        "B1": back.B1 == bow.B1,
        "B3": back.B3 == bow.B3,
    }
    return {"ok": all(checks.values()), "checks": checks, "new": new, "back": back}


# ---------------------------------------------------------------------------
# linkage invariants on whole diagrams

@dataclass
class BowDiagram:
    """Combinatorial skeleton: dims across edges, each edge 'x' or 'o'."""

    dims: list
    edges: list
    circular: bool = False

    def __post_init__(self):
        expected = len(self.edges) + (0 if self.circular else 1)
        if len(self.dims) != expected:
            raise ValueError("dims/edges length mismatch")


def linkage_invariants(diagram):
    """N(x_i, x_{i+1}) = N_{x_i} - N_{x_{i+1}} + #circles between, where
    N_x = dim(left) - dim(right) at the cross.  Invariant under the
    Hanany-Witten transition."""
    crosses = []
    for idx, e in enumerate(diagram.edges):
        if e == "x":
            left = diagram.dims[idx]
            right = diagram.dims[(idx + 1) % len(diagram.dims)]
            crosses.append((idx, left - right))
    out = []
    n_edges = len(diagram.edges)
    pairs = list(zip(crosses, crosses[1:]))
    if diagram.circular and len(crosses) >= 1:
        pairs.append((crosses[-1], (crosses[0][0] + n_edges, crosses[0][1])))
    for (i1, n1), (i2, n2) in pairs:
        circles = 0
        for k in range(i1 + 1, i2):
            if diagram.edges[k % n_edges] == "o":
                circles += 1
        out.append(n1 - n2 + circles)
    return out


def hw_diagram(diagram, cross_edge):
    """The combinatorial effect of one transition: swap an adjacent
    (circle, cross) pair and replace the middle dimension by
    d_left + d_right + 1 - d_mid."""
    dims = list(diagram.dims)
    edges = list(diagram.edges)
    i = cross_edge
    if edges[i] == "o" and edges[i + 1] == "x":
        d1, d2, d3 = dims[i], dims[i + 1], dims[i + 2]
        dims[i + 1] = d1 + d3 + 1 - d2
        edges[i], edges[i + 1] = "x", "o"
    elif edges[i] == "x" and edges[i + 1] == "o":
        d1, d2, d3 = dims[i], dims[i + 1], dims[i + 2]
        dims[i + 1] = d1 + d3 + 1 - d2
        edges[i], edges[i + 1] = "o", "x"
    else:
        raise ValueError("need an adjacent circle/cross pair")
    return BowDiagram(dims, edges, diagram.circular)


# ---------------------------------------------------------------------------
# cobalanced two-cross segment (reduction toward a multiplicative quiver variety)

def sample_cobalanced_segment(n, seed, t=Fraction(2), Z2=Fraction(3),
                              Z4=Fraction(5, 2), max_attempts=300):
    """Random certified data on V1 -o- V2 -x- V3 -x- V4 -o- V5 with
    dim V2 = dim V3 = dim V4 = n and the crosses normalized to A = id:

        B2 = Z2 (1 + C1 D1)^-1,   B3 = B2 - a3 b2,
        B4 = B3 - a4 b3,          B4 = t Z4 (1 + D4 C4)^-1.

    Returns the data dict; the last equation is solved for D4 with C4 = id.
    """
    rng = Random(seed)
    I = Matrix.identity(n)
    for _ in range(max_attempts):
        C1 = Matrix.random(rng, n, n)
        D1 = Matrix.random(rng, n, n)
        if not (I + C1 * D1).is_invertible():
            continue
        B2 = (I + C1 * D1).inverse() * Z2
        a3 = Matrix.random(rng, n, 1)
        b2 = Matrix.random(rng, 1, n)
        a4 = Matrix.random(rng, n, 1)
        b3 = Matrix.random(rng, 1, n)
        B3 = B2 - a3 * b2
        B4 = B3 - a4 * b3
        if not (B3.is_invertible() and B4.is_invertible()):
            continue
        C4 = I
        D4 = B4.inverse() * (t * Z4) - I
        return {
            "n": n,
            "t": t,
            "Z2": Z2,
            "Z4": Z4,
            "C1": C1,
            "D1": D1,
            "B2": B2,
            "B3": B3,
            "B4": B4,
            "a3": a3,
            "b2": b2,
            "a4": a4,
            "b3": b3,
            "C4": C4,
            "D4": D4,
        }
    raise SamplingExhausted("no cobalanced segment sampled")


def cobalanced_reduction_check(data):
    """Verify the factorized chain identity

        1 + C1 D1 = t^-2 ... wait -- exactly:
        1 + C1 D1 = Z2 B2^-1,  B2 = B3 + a3 b2,  B3 = B4 + a4 b3,
        B4^-1 = (t Z4)^-1 (1 + D4 C4)

    combine to
        1 + C1 D1 = t^-1 Z4^-1 Z2 (1 + B3^-1 a3 b2)^-1 (1 + B4^-1 a4 b3)^-1
                    (1 + D4 C4),

    together with the rank-one telescoping repackaging of the two framings.
    """
    n = data["n"]
    I = Matrix.identity(n)
    lhs = I + data["C1"] * data["D1"]
    f1 = (I + data["B3"].inverse() * data["a3"] * data["b2"]).inverse()
    f2 = (I + data["B4"].inverse() * data["a4"] * data["b3"]).inverse()
    rhs = (
        f1
        * f2
        * (I + data["D4"] * data["C4"])
        * (data["Z2"] / (data["t"] * data["Z4"]))
    )
    chain_ok = lhs == rhs
    # framing repackaging: (1 + B4^-1 a4 b3)(1 + B3^-1 a3 b2)
    #   = 1 + [a~3 a~4][b2; b3]
    ta3 = (I + data["B4"].inverse() * data["a4"] * data["b3"]) * (
        data["B3"].inverse() * data["a3"]
    )
    ta4 = data["B4"].inverse() * data["a4"]
    lhs2 = (I + data["B4"].inverse() * data["a4"] * data["b3"]) * (
        I + data["B3"].inverse() * data["a3"] * data["b2"]
    )
    rhs2 = I + ta3 * data["b2"] + ta4 * data["b3"]
    telescoping_ok = lhs2 == rhs2
    # cobalanced stability forces the (normalized) cross maps invertible;
    # here A = id by construction, so check the derived loops instead
    return {
        "chain_identity": chain_ok,
        "telescoping": telescoping_ok,
        "loops_invertible": data["B3"].is_invertible() and data["B4"].is_invertible(),
    }
