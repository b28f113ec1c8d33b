"""Exact matrix realization of multiplicative quiver varieties on the cyclic
quiver with a Calogero-Moser vertex, the associated quadruple variety, the
product formulas linking them, and Van den Bergh / fusion moment maps.

Points are matrices over the rationals; every certification is an exact
residual check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random

from .linalg import (
    Matrix,
    algebra_closure_dim,
    rational_eigenvalues,
    span_closure,
)


class SamplingExhausted(Exception):
    pass


class UncertifiedInput(Exception):
    pass


class XNotInvertible(Exception):
    pass


class SingularFactor(Exception):
    pass


@dataclass
class QuiverPoint:
    """Cyclic-quiver data: X[i]: V_{i+2} -> V_{i+1} and D[i]: V_{i+1} -> V_{i+2}
    (0-based lists of length l, indices mod l), with scalars Z_1..Z_l, t and
    the twist T acting on V_1."""

    l: int
    N: int
    Z: tuple
    t: Fraction
    X: list
    D: list
    T: Matrix

    def to_json(self):
        return {
            "l": self.l,
            "N": self.N,
            "Z": [str(z) for z in self.Z],
            "t": str(self.t),
            "X": [m.to_json() for m in self.X],
            "D": [m.to_json() for m in self.D],
            "T": self.T.to_json(),
        }

    @classmethod
    def from_json(cls, data):
        l, N = data["l"], data["N"]
        Z = tuple(Fraction(z) for z in data["Z"])
        X = [Matrix.from_json(m) for m in data["X"]]
        D = [Matrix.from_json(m) for m in data["D"]]
        if "T" in data:
            T = Matrix.from_json(data["T"])
        else:
            # T is determined by the closing relation
            I = Matrix.identity(N)
            T = (I + X[0] * D[0]).inverse() * (I + D[l - 1] * X[l - 1]) * (
                Z[l - 1] / Z[0]
            )
        return cls(
            l=l,
            N=N,
            Z=Z,
            t=Fraction(data["t"]),
            X=X,
            D=D,
            T=T,
        )


@dataclass
class Quadruple:
    """Matrices (X, D, Y, T) with scalars Z_1..Z_l, t."""

    l: int
    N: int
    Z: tuple
    t: Fraction
    X: Matrix
    D: Matrix
    Y: Matrix
    T: Matrix

    def to_json(self):
        return {
            "l": self.l,
            "N": self.N,
            "Z": [str(z) for z in self.Z],
            "t": str(self.t),
            "X": self.X.to_json(),
            "D": self.D.to_json(),
            "Y": self.Y.to_json(),
            "T": self.T.to_json(),
        }


def _eye(N):
    return Matrix.identity(N)


def check_point(p):
    """Exact residuals of the chain and closing equations; also reports
    whether T lies in the special conjugacy class diag(t^-1,..,t^-1,t^(N-1))."""
    residuals = []
    ok = True
    I = _eye(p.N)
    for i in range(1, p.l):
        # Z_{i+1}(1 + X_{i+1} D_{i+1}) = Z_i (1 + D_i X_i), 0-based i
        lhs = (I + p.X[i] * p.D[i]) * p.Z[i]
        rhs = (I + p.D[i - 1] * p.X[i - 1]) * p.Z[i - 1]
        res = lhs - rhs
        residuals.append({"equation": f"chain[{i + 1}]", "zero": res.is_zero()})
        ok &= res.is_zero()
    lhs = (I + p.X[0] * p.D[0]) * p.Z[0] * p.T
    rhs = (I + p.D[p.l - 1] * p.X[p.l - 1]) * p.Z[p.l - 1]
    res = lhs - rhs
    residuals.append({"equation": "closing", "zero": res.is_zero()})
    ok &= res.is_zero()

    tclass = (p.T - I * (1 / p.t)) * (p.T - I * (p.t ** (p.N - 1)))
    in_class = tclass.is_zero() if p.N > 1 else (p.T == I)
    return {"certified": ok, "residuals": residuals, "T_in_special_class": in_class}


def psi(p, *, require_certified=True):
    """Collapse a quiver point to the quadruple (X, D, Y, T).

    X = X_1 X_2 ... X_l, D = D_l ... D_1, Y = Z_1 (1 + X_1 D_1); the
    quadruple equations are verified as a postcondition.
    """
    if require_certified and not check_point(p)["certified"]:
        raise UncertifiedInput("psi needs a certified point")
    X = _eye(p.N)
    for m in p.X:
        X = X * m
    # D_l ... D_1 with D_l leftmost
    D = p.D[p.l - 1]
    for i in range(p.l - 2, -1, -1):
        D = D * p.D[i]
    Y = (_eye(p.N) + p.X[0] * p.D[0]) * p.Z[0]
    quad = Quadruple(p.l, p.N, p.Z, p.t, X, D, Y, p.T)
    rep = check_quadruple(quad)
    if require_certified and not rep["certified"]:
        raise AssertionError("psi image fails the quadruple equations")
    return quad


def check_quadruple(q):
    """Exact residuals of the quadruple equations and invertibility of Y."""
    I = _eye(q.N)
    prod_plus = I
    prod_minus = I
    for z in q.Z:
        prod_plus = prod_plus * (q.Y * (1 / z) - I)
    YT = q.Y * q.T
    for z in q.Z:
        prod_minus = prod_minus * (YT * (1 / z) - I)
    r1 = q.X * q.D - prod_plus
    r2 = q.D * q.X - prod_minus
    r3 = q.Y * q.X - q.X * YT
    r4 = YT * q.D - q.D * q.Y
    ok = r1.is_zero() and r2.is_zero() and r3.is_zero() and r4.is_zero()
    inv = q.Y.is_invertible()
    return {
        "certified": ok and inv,
        "residuals": [
            {"equation": "XD", "zero": r1.is_zero()},
            {"equation": "DX", "zero": r2.is_zero()},
            {"equation": "YX=XYT", "zero": r3.is_zero()},
            {"equation": "YTD=DY", "zero": r4.is_zero()},
        ],
        "Y_invertible": inv,
    }


def product_formulas(p):
    """L_+ = Z_1...Z_l X D = prod (Y - Z_i) and
    L_- = Z_1...Z_l D X = prod (Y T - Z_i), checked exactly."""
    quad = psi(p)
    I = _eye(p.N)
    zprod = Fraction(1)
    for z in p.Z:
        zprod *= z
    Lplus = quad.X * quad.D * zprod
    Lminus = quad.D * quad.X * zprod
    rp = I
    rm = I
    YT = quad.Y * quad.T
    for z in p.Z:
        rp = rp * (quad.Y - I * z)
        rm = rm * (YT - I * z)
    return {
        "Lplus_matches": Lplus == rp,
        "Lminus_matches": Lminus == rm,
    }


def sample_chain(l, N, Z, seed, t=None, max_attempts=200):
    """A certified random point: draw invertible X_i and D_1, solve the
    chain equations for D_2..D_l, and read T off the closing equation.

    T is derived, not necessarily in the special conjugacy class; the
    caller can inspect check_point()['T_in_special_class'].
    """
    Z = tuple(Fraction(z) for z in Z)
    if len(Z) != l or any(z == 0 for z in Z):
        raise ValueError("need l nonzero scalars Z")
    rng = Random(seed)
    I = _eye(N)
    for _ in range(max_attempts):
        X = [Matrix.random(rng, N, N) for _ in range(l)]
        if any(not m.is_invertible() for m in X):
            continue
        D = [Matrix.random(rng, N, N)]
        ok = True
        for i in range(1, l):
            rhs = (I + D[i - 1] * X[i - 1]) * (Z[i - 1] / Z[i]) - I
            D.append(X[i].inverse() * rhs)
        M = I + X[0] * D[0]
        if not M.is_invertible():
            continue
        T = M.inverse() * (I + D[l - 1] * X[l - 1]) * (Z[l - 1] / Z[0])
        tval = Fraction(t) if t is not None else Fraction(2)
        point = QuiverPoint(l, N, Z, tval, X, D, T)
        if check_point(point)["certified"]:
            return point
    raise SamplingExhausted("could not sample a certified point")


def lift_open_locus(q, *, require_certified=True):
    """Lift a quadruple with invertible X back to a quiver point:
    X_i = 1 for i < l, X_l = X, D_i = Z_i^-1 Y - 1 for i < l and
    D_l = X^-1 (Z_l^-1 Y - 1); the result is re-certified and satisfies
    psi(lift(q)) = q."""
    if require_certified and not check_quadruple(q)["certified"]:
        raise UncertifiedInput("lift needs a certified quadruple")
    if not q.X.is_invertible():
        raise XNotInvertible("the open-locus lift needs invertible X")
    I = _eye(q.N)
    X = [I for _ in range(q.l - 1)] + [q.X]
    D = [q.Y * (1 / q.Z[i]) - I for i in range(q.l - 1)]
    D.append(q.X.inverse() * (q.Y * (1 / q.Z[q.l - 1]) - I))
    point = QuiverPoint(q.l, q.N, q.Z, q.t, X, D, q.T)
    rep = check_point(point)
    if not rep["certified"]:
        raise AssertionError("open-locus lift fails the chain equations")
    back = psi(point)
    if not (back.X == q.X and back.D == q.D and back.Y == q.Y and back.T == q.T):
        raise AssertionError("psi does not round-trip the lift")
    return point


def irreducibility_check(q):
    """Decide whether (X, D, Y, T) act irreducibly on C^N.

    The verdict uses the span closure of the unital matrix algebra
    generated by the quadruple (Burnside: irreducible iff the algebra is
    all of N x N matrices), which is exact and complete over any field of
    characteristic zero.  On a reducible quadruple an invariant-subspace
    witness is searched for through rational eigenvectors of Y; the witness
    may be None when no invariant subspace is defined over Q.
    """
    gens = [q.X, q.D, q.Y, q.T]
    dim = algebra_closure_dim(gens)
    irreducible = dim == q.N * q.N
    witness = None
    if not irreducible:
        for lam in rational_eigenvalues(q.Y):
            for v in (q.Y - Matrix.scalar(q.N, lam)).kernel_basis():
                closure = span_closure([v], gens)
                if 0 < len(closure) < q.N:
                    witness = [c.to_json() for c in closure]
                    break
            if witness:
                break
    return {"irreducible": irreducible, "algebra_dim": dim, "witness": witness}


# ---------------------------------------------------------------------------
# Van den Bergh pairs and fusion

def vdb_moment(X, Y):
    """Group-valued moment map ((1 + YX)^-1, 1 + XY) of a pair
    X: V -> W, Y: W -> V with det(1 + XY) != 0."""
    # X: V -> W is a (dim W x dim V) matrix; YX acts on V, XY on W
    one_plus_yx = _eye(X.n) + Y * X
    one_plus_xy = _eye(X.m) + X * Y
    if not one_plus_xy.is_invertible() or not one_plus_yx.is_invertible():
        raise SingularFactor("1 + XY must be invertible")
    return one_plus_yx.inverse(), one_plus_xy


def fusion_moment(arrow_pairs, framing_pairs):
    """Moment-map factor at one vertex: the ordered product
    prod (1 + C_h C_h*)^{eps(h)} over arrows times prod (1 + a_j b_j) over
    framing lines.

    arrow_pairs: list of (C, Cstar, eps) with eps = +1 or -1;
    framing_pairs: list of (a, b) with a a column and b a row.
    """
    size = None
    for C, Cs, _ in arrow_pairs:
        size = (C * Cs).m
        break
    if size is None and framing_pairs:
        a, b = framing_pairs[0]
        size = a.m
    out = _eye(size)
    for C, Cs, eps in arrow_pairs:
        f = _eye(size) + C * Cs
        if eps < 0:
            if not f.is_invertible():
                raise SingularFactor("non-invertible fusion factor")
            f = f.inverse()
        out = out * f
    for a, b in framing_pairs:
        out = out * (_eye(size) + a * b)
    return out


def telescoped_framing(framing_pairs):
    """The re-packaged framing (a~_j, b~_j) with
    a~_j = (1 + a_1 b_1)...(1 + a_{j-1} b_{j-1}) a_j and b~_j = b_j,
    satisfying 1 + sum a~_j b~_j = prod (1 + a_j b_j)."""
    if not framing_pairs:
        raise ValueError("need at least one framing pair")
    n = framing_pairs[0][0].m
    I = _eye(n)
    prefix = I
    tilded = []
    for a, b in framing_pairs:
        tilded.append((prefix * a, b))
        prefix = prefix * (I + a * b)
    total = I
    for ta, tb in tilded:
        total = total + ta * tb
    identity_holds = total == prefix
    return tilded, identity_holds


def moment_equivariance_check(X, Y, g, h):
    """Conjugating X -> hXg^-1, Y -> gYh^-1 conjugates the two moment
    components by g and h respectively."""
    mu1, mu2 = vdb_moment(X, Y)
    Xc = h * X * g.inverse()
    Yc = g * Y * h.inverse()
    nu1, nu2 = vdb_moment(Xc, Yc)
    return nu1 == g * mu1 * g.inverse() and nu2 == h * mu2 * h.inverse()
