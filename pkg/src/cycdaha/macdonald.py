"""The commuting-operator layer: conjugated Y-operators Y_i(f), the finite
Hecke symmetrizer, the first Macdonald difference operator, and the
symmetric Hamiltonians built from elementary symmetric functions of the
commuting families.

The displayed difference operators have rational coefficients in X; they
are evaluated by clearing a common Vandermonde-type denominator and
dividing exactly at the end, so everything stays inside the Laurent ring.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .laurent import LaurentPoly, NotDivisible
from .ops import Gen, OperatorExpr, op_equal_on_box, word_product
from .scalars import QQ


class InputNotSymmetric(Exception):
    pass


class BadParameter(Exception):
    pass


# ---------------------------------------------------------------------------
# Hecke symmetrizer

def _permutation_words(N):
    """All of S_N as pairs (length, word of adjacent indices), via BFS."""
    start = tuple(range(1, N + 1))
    seen = {start: ()}
    frontier = [start]
    while frontier:
        new = []
        for perm in frontier:
            word = seen[perm]
            for i in range(1, N):
                q = list(perm)
                q[i - 1], q[i] = q[i], q[i - 1]
                q = tuple(q)
                if q not in seen:
                    seen[q] = word + (i,)
                    new.append(q)
        frontier = new
    return [(len(w), w) for w in seen.values()]


def hecke_symmetrizer_expr(rep):
    """e = (sum_w tb^len(w) T_w) / (sum_w t^len(w)) as an OperatorExpr.

    Normalized so that T_i e = tb * e = e T_i and e^2 = e; fixes symmetric
    polynomials.  Raises BadParameter when sum_w t^len(w) vanishes.
    """
    tb = rep.params["tb"]
    t = rep.params["t"]
    total = rep.dom.zero
    expr = OperatorExpr.zero()
    for length, word in _permutation_words(rep.N):
        total = total + t ** length
        expr = expr + OperatorExpr.word([Gen("T", i) for i in word], tb ** length)
    if not total:
        raise BadParameter("Hecke symmetrizer undefined: sum_w t^l(w) = 0")
    return (1 / total) * expr


def hecke_symmetrize(rep, p):
    """Apply the finite Hecke symmetrizer to a Laurent polynomial."""
    return rep.apply(hecke_symmetrizer_expr(rep), p)


# ---------------------------------------------------------------------------
# rational-coefficient difference operators

def _vandermonde(N, dom):
    out = LaurentPoly.one(N, dom)
    for a in range(1, N + 1):
        for b in range(a + 1, N + 1):
            out = out * (LaurentPoly.variable(N, a, dom) - LaurentPoly.variable(N, b, dom))
    return out


def _cofactor(N, j, dom):
    """Vandermonde of all variables except X_j, with the sign such that
    prod_{i != j} (X_i - X_j) * cofactor * sign = full Vandermonde."""
    out = LaurentPoly.one(N, dom)
    for a in range(1, N + 1):
        for b in range(a + 1, N + 1):
            if j in (a, b):
                continue
            out = out * (LaurentPoly.variable(N, a, dom) - LaurentPoly.variable(N, b, dom))
    return out


def apply_macdonald_operator(N, q, t, p, dom=QQ, subtract_one=False, cyclotomic_shift=False):
    """Apply M = sum_j prod_{i != j} (X_i - t X_j)/(X_i - X_j) * shift_j.

    shift_j is tau_j (X_j -> q X_j); with subtract_one the factor becomes
    (1/X_j)(tau_j - 1) instead, which is the level-one Hamiltonian.
    Raises NotDivisible when the result is not a Laurent polynomial (it
    always is on symmetric inputs, and on q-deformed quasiinvariants at
    t = q^-m).
    """
    q = dom.coerce(q)
    t = dom.coerce(t)
    if p.N != N:
        raise ValueError("rank mismatch")
    vand = _vandermonde(N, dom)
    total = LaurentPoly.zero(N, dom)
    for j in range(1, N + 1):
        numer = LaurentPoly.one(N, dom)
        Xj = LaurentPoly.variable(N, j, dom)
        for i in range(1, N + 1):
            if i == j:
                continue
            numer = numer * (LaurentPoly.variable(N, i, dom) - Xj * t)
        shifted = p.scale_var(j, q)
        if subtract_one:
            shifted = (shifted - p).shift(tuple(-1 if v == j - 1 else 0 for v in range(N)))
        sign = Fraction(-1) ** (N - j)
        total = total + numer * _cofactor(N, j, dom) * shifted * sign
    return total.exact_divide(vand)


def macdonald_M1(rep, p):
    """The first Macdonald operator on a symmetric Laurent polynomial."""
    if not p.is_symmetric():
        raise InputNotSymmetric("macdonald_M1 requires symmetric input")
    return apply_macdonald_operator(
        rep.N, rep.params["q"], rep.params["t"], p, rep.dom
    )


def M1_l1(rep, p):
    """The level-one Hamiltonian: sum_j prod((X_i-tX_j)/(X_i-X_j)) X_j^-1 (tau_j - 1)."""
    if not p.is_symmetric():
        raise InputNotSymmetric("M1_l1 requires symmetric input")
    return apply_macdonald_operator(
        rep.N, rep.params["q"], rep.params["t"], p, rep.dom, subtract_one=True
    )


# ---------------------------------------------------------------------------
# the commuting families

def y_f(rep, i, f_coeffs):
    """Y_i(f) = Y_i T_{i-1}^-1...T_1^-1 f(X_1^-1) T_1...T_{i-1}.

    f_coeffs are the coefficients of f, low-degree first; f(X_1^-1) expands
    as a polynomial in X_1^-1.
    """
    if all(not c for c in f_coeffs[1:]):
        # constant f: the conjugators cancel
        return OperatorExpr.word([Gen("Y", i)], f_coeffs[0] if f_coeffs else 0)
    fX = OperatorExpr.zero()
    for d, c in enumerate(f_coeffs):
        if not c:
            continue
        fX = fX + OperatorExpr.word([Gen("X^-1", 1)] * d, c)
    left = tuple([Gen("Y", i)] + [Gen("T^-1", r) for r in range(i - 1, 0, -1)])
    right = tuple(Gen("T", r) for r in range(1, i))
    return OperatorExpr.word(left) * fX * OperatorExpr.word(right)


def dunkl_family(rep):
    """The commuting q-Dunkl operators D_i^(l) as expressions."""
    return [OperatorExpr.gen("Dl", i) for i in range(1, rep.N + 1)]


def y_family(rep, f_coeffs):
    return [y_f(rep, i, f_coeffs) for i in range(1, rep.N + 1)]


def elementary_symmetric(exprs, r):
    """e_r of a list of pairwise commuting operator expressions."""
    out = OperatorExpr.zero()
    for subset in itertools.combinations(exprs, r):
        out = out + word_product(list(subset))
    return out


def poly_from_roots(roots, dom=QQ):
    """Coefficients (low-first) of prod (X - Z_i)."""
    coeffs = [dom.coerce(1)]
    for z in roots:
        z = dom.coerce(z)
        new = [dom.coerce(0)] * (len(coeffs) + 1)
        for d, c in enumerate(coeffs):
            new[d + 1] = new[d + 1] + c
            new[d] = new[d] - c * z
        coeffs = new
    return coeffs


class SymmetricOperator:
    """An operator expression with a box-checked symmetry-preservation flag."""

    def __init__(self, rep, expr, name=""):
        self.rep = rep
        self.expr = expr
        self.name = name
        self.certified = False

    def apply(self, p):
        return self.rep.apply(self.expr, p)

    def certify(self, maxdeg=3):
        """Check that symmetric inputs map to symmetric outputs."""
        for p in symmetric_basis(self.rep, maxdeg):
            if not self.apply(p).is_symmetric():
                self.certified = False
                return False
        self.certified = True
        return True


def symmetric_basis(rep, maxdeg, dom=None):
    """Monomial symmetric polynomials m_lambda with |lambda| <= maxdeg."""
    dom = dom or rep.dom
    N = rep.N
    out = [LaurentPoly.one(N, dom)]
    for total in range(1, maxdeg + 1):
        for lam in _partitions_at_most(total, N):
            mono = {}
            for perm in set(itertools.permutations(lam + (0,) * (N - len(lam)))):
                mono[perm] = dom.coerce(1)
            out.append(LaurentPoly(N, dom, mono))
    return out


def _partitions_at_most(n, max_parts):
    """Partitions of n with at most max_parts parts."""
    def gen(n, largest, parts):
        if n == 0:
            yield ()
            return
        if parts == 0:
            return
        for first in range(min(n, largest), 0, -1):
            for rest in gen(n - first, first, parts - 1):
                yield (first,) + rest

    return list(gen(n, n, max_parts))


def hamiltonian(rep, r, f_coeffs, dual=False, check_commuting=True):
    """The symmetric Hamiltonian e_r of the commuting family, times the
    Hecke symmetrizer.

    dual=False builds e_r(Y_1(f),...,Y_N(f)) e; dual=True builds the
    involution-side family e_r(D_1,...,D_N) e from the q-Dunkl operators
    (whose f is fixed by the representation's Z parameters).  Commutativity
    of the family is asserted on a small box first.
    """
    if not 1 <= r <= rep.N:
        raise ValueError("need 1 <= r <= N")
    family = dunkl_family(rep) if dual else y_family(rep, f_coeffs)
    if check_commuting:
        for a, b in itertools.combinations(family, 2):
            res = op_equal_on_box(rep, a * b, b * a, 1)
            if not res["result"]:
                raise AssertionError(
                    "family is not commuting; aborting Hamiltonian assembly"
                )
    expr = elementary_symmetric(family, r) * hecke_symmetrizer_expr(rep)
    return SymmetricOperator(rep, expr, name=f"M_{r}{'(dual)' if dual else ''}")
