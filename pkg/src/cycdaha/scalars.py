"""Exact coefficient domains shared by every other module.

Three fields are supported as coefficient domains for Laurent polynomials:

* QQ          -- rationals, represented by fractions.Fraction;
* CycloField  -- Q(zeta_l), elements reduced mod the l-th cyclotomic
                 polynomial in the power basis;
* RatFuncField -- univariate rational functions Q(t) in one named
                  parameter, stored gcd-reduced with monic denominator.

Plus deterministic "generic parameter" sampling with explicit excluded-value
constraints, re-checked exactly after sampling.
"""

from __future__ import annotations

import math
from fractions import Fraction
from random import Random


class SamplingExhausted(Exception):
    """Raised when constraint-compatible parameters could not be sampled."""


# ---------------------------------------------------------------------------
# rationals

def parse_rational(s):
    """Parse 'p/q' or 'p' into a Fraction."""
    return Fraction(str(s).strip())


def format_rational(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# dense univariate polynomials over Fraction (helpers for RatFunc1 and
# cyclotomic arithmetic).  Coefficient lists are low-degree first with no
# trailing zeros; [] is the zero polynomial.

def poly_trim(c):
    c = list(c)
    while c and not c[-1]:
        c.pop()
    return c


def poly_add(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return poly_trim(out)


def poly_neg(a):
    return [-x for x in a]


def poly_sub(a, b):
    return poly_add(a, poly_neg(b))


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return poly_trim(out)


def poly_divmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = [Fraction(x) for x in a]
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    lead = Fraction(b[-1])
    while len(a) >= len(b) and poly_trim(a):
        a = poly_trim(a)
        if len(a) < len(b):
            break
        k = len(a) - len(b)
        c = a[-1] / lead
        q[k] = c
        for i, y in enumerate(b):
            a[k + i] -= c * y
        a = a[:-1]
    return poly_trim(q), poly_trim(a)


def poly_gcd(a, b):
    a, b = poly_trim(a), poly_trim(b)
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if a:
        lead = a[-1]
        a = [x / lead for x in a]
    return a


def poly_eval(a, x):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


# ---------------------------------------------------------------------------
# cyclotomic polynomials and Q(zeta_l)

def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


_CYCLO_CACHE = {}


def cyclotomic_polynomial(l):
    """Coefficients of the l-th cyclotomic polynomial, low-degree first."""
    if l in _CYCLO_CACHE:
        return _CYCLO_CACHE[l]
    # x^l - 1 divided by the product of Phi_d for proper divisors d
    num = [Fraction(-1)] + [Fraction(0)] * (l - 1) + [Fraction(1)]
    for d in _divisors(l):
        if d == l:
            continue
        num, rem = poly_divmod(num, cyclotomic_polynomial(d))
        assert not rem
    _CYCLO_CACHE[l] = num
    return num


def euler_phi(l):
    return len(cyclotomic_polynomial(l)) - 1


class CycloNumber:
    """Element of Q(zeta_l) in the power basis 1, z, ..., z^(phi(l)-1)."""

    __slots__ = ("l", "coeffs")

    def __init__(self, l, coeffs, _reduced=False):
        self.l = l
        if _reduced:
            self.coeffs = tuple(coeffs)
        else:
            self.coeffs = self._reduce(l, [Fraction(c) for c in coeffs])

    @staticmethod
    def _reduce(l, coeffs):
        phi = cyclotomic_polynomial(l)
        deg = len(phi) - 1
        coeffs = list(coeffs)
        if len(coeffs) > deg:
            _, coeffs = poly_divmod(coeffs, phi)
        coeffs = poly_trim(coeffs)
        coeffs += [Fraction(0)] * (deg - len(coeffs))
        return tuple(coeffs)

    @classmethod
    def zeta(cls, l, power=1):
        power %= l
        c = [Fraction(0)] * (power + 1)
        c[power] = Fraction(1)
        return cls(l, c)

    @classmethod
    def from_rational(cls, l, x):
        return cls(l, [Fraction(x)])

    def _coerce(self, other):
        if isinstance(other, CycloNumber):
            if other.l != self.l:
                raise ValueError(f"mixed cyclotomic orders {self.l} and {other.l}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNumber.from_rational(self.l, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloNumber(self.l, poly_add(self.coeffs, o.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber(self.l, [-c for c in self.coeffs], _reduced=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloNumber(self.l, poly_sub(self.coeffs, o.coeffs))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloNumber(self.l, poly_mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def inverse(self):
        """Inverse mod Phi_l by the extended Euclidean algorithm."""
        if not self:
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        phi = cyclotomic_polynomial(self.l)
        r0, r1 = phi, poly_trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, poly_sub(s0, poly_mul(q, s1))
        # r1 is a nonzero constant
        c = r1[0]
        inv = [x / c for x in s1]
        return CycloNumber(self.l, inv)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = CycloNumber.from_rational(self.l, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.l, self.coeffs))

    def rational_part(self):
        """The element as a Fraction; raises if it is not rational."""
        if any(self.coeffs[1:]):
            raise ValueError("not a rational element")
        return self.coeffs[0]

    def to_json(self):
        return {"l": self.l, "coeffs": [format_rational(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data):
        return cls(data["l"], [parse_rational(c) for c in data["coeffs"]])

    def __repr__(self):
        return f"CycloNumber(l={self.l}, {list(self.coeffs)})"


def cyclo_normalize(raw, l):
    """Reduce a raw coefficient vector mod Phi_l into canonical form."""
    if l < 1:
        raise ValueError("order must be >= 1")
    return CycloNumber(l, raw)


# ---------------------------------------------------------------------------
# univariate rational functions

class RatFunc1:
    """Rational function in one named parameter over Q, stored reduced."""

    __slots__ = ("var", "num", "den")

    def __init__(self, var, num, den=(Fraction(1),), _reduced=False):
        self.var = var
        if _reduced:
            self.num = tuple(num)
            self.den = tuple(den)
            return
        num = poly_trim([Fraction(c) for c in num])
        den = poly_trim([Fraction(c) for c in den])
        if not den:
            raise ZeroDivisionError("zero denominator")
        if num:
            g = poly_gcd(num, den)
            if len(g) > 1:
                num = poly_divmod(num, g)[0]
                den = poly_divmod(den, g)[0]
        else:
            den = [Fraction(1)]
        lead = den[-1]
        if lead != 1:
            num = [c / lead for c in num]
            den = [c / lead for c in den]
        self.num = tuple(num)
        self.den = tuple(den)

    @classmethod
    def variable(cls, var):
        return cls(var, [0, 1])

    @classmethod
    def const(cls, var, x):
        return cls(var, [Fraction(x)])

    def _coerce(self, other):
        if isinstance(other, RatFunc1):
            if other.var != self.var:
                raise ValueError(f"mixed parameters {self.var!r} and {other.var!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc1.const(self.var, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        num = poly_add(poly_mul(self.num, o.den), poly_mul(o.num, self.den))
        return RatFunc1(self.var, num, poly_mul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc1(self.var, [-c for c in self.num], self.den, _reduced=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc1(self.var, poly_mul(self.num, o.num), poly_mul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc1(self.var, poly_mul(self.num, o.den), poly_mul(self.den, o.num))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n):
        if n < 0:
            return (RatFunc1.const(self.var, 1) / self) ** (-n)
        out = RatFunc1.const(self.var, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.var, self.num, self.den))

    def to_json(self):
        return {
            "var": self.var,
            "num": [format_rational(c) for c in self.num],
            "den": [format_rational(c) for c in self.den],
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            data["var"],
            [parse_rational(c) for c in data["num"]],
            [parse_rational(c) for c in data["den"]],
        )

    def __repr__(self):
        return f"RatFunc1({self.var!r}, {list(self.num)}, {list(self.den)})"


def ratfunc_simplify(num, den, var="t"):
    """gcd-reduce num/den into a RatFunc1 with monic denominator."""
    return RatFunc1(var, num, den)


# ---------------------------------------------------------------------------
# coefficient domains

class Domain:
    """Descriptor for a coefficient field: coercion plus 0 and 1."""

    name = "abstract"

    def coerce(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def scalar_to_json(self, x):
        raise NotImplementedError

    def scalar_from_json(self, data):
        raise NotImplementedError

    def __repr__(self):
        return self.name


class RationalField(Domain):
    name = "QQ"

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return parse_rational(x)
        if isinstance(x, CycloNumber):
            return x.rational_part()
        raise TypeError(f"cannot coerce {x!r} into QQ")

    def scalar_to_json(self, x):
        return format_rational(x)

    def scalar_from_json(self, data):
        return parse_rational(data)


class CycloField(Domain):
    def __init__(self, l):
        self.l = l
        self.name = f"QQ(zeta_{l})"

    def coerce(self, x):
        if isinstance(x, CycloNumber):
            if x.l != self.l:
                raise TypeError(f"cyclotomic order mismatch: {x.l} vs {self.l}")
            return x
        if isinstance(x, (int, Fraction)):
            return CycloNumber.from_rational(self.l, x)
        if isinstance(x, str):
            return CycloNumber.from_rational(self.l, parse_rational(x))
        raise TypeError(f"cannot coerce {x!r} into {self.name}")

    @property
    def zeta(self):
        return CycloNumber.zeta(self.l)

    def scalar_to_json(self, x):
        return self.coerce(x).to_json()

    def scalar_from_json(self, data):
        return CycloNumber.from_json(data)


class RatFuncField(Domain):
    def __init__(self, var="t"):
        self.var = var
        self.name = f"QQ({var})"

    def coerce(self, x):
        if isinstance(x, RatFunc1):
            if x.var != self.var:
                raise TypeError(f"parameter mismatch: {x.var} vs {self.var}")
            return x
        if isinstance(x, (int, Fraction)):
            return RatFunc1.const(self.var, x)
        if isinstance(x, str):
            return RatFunc1.const(self.var, parse_rational(x))
        raise TypeError(f"cannot coerce {x!r} into {self.name}")

    @property
    def gen(self):
        return RatFunc1.variable(self.var)

    def scalar_to_json(self, x):
        return self.coerce(x).to_json()

    def scalar_from_json(self, data):
        return RatFunc1.from_json(data)


QQ = RationalField()


# ---------------------------------------------------------------------------
# generic parameter sampling

_SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113]


def _check_constraint(con, values):
    kind = con[0]
    if kind == "nonzero":
        return values[con[1]] != 0
    if kind == "not_root_of_unity":
        _, name, order = con
        x = values[name]
        if x == 0:
            return False
        p = Fraction(1)
        for _ in range(order):
            p *= x
            if p == 1:
                return False
        return True
    if kind == "diff_not_integer":
        _, n1, n2, window = con
        d = values[n1] - values[n2]
        return d.denominator != 1
    if kind == "ratio_not_q_power":
        _, n1, n2, q, window = con
        if isinstance(q, str):
            q = values[q]
        x, y = values[n1], values[n2]
        if y == 0:
            return False
        r = Fraction(x, 1) / y
        for p in range(-window, window + 1):
            if r == Fraction(q) ** p:
                return False
        return True
    raise ValueError(f"unknown constraint {kind!r}")


def sample_generic(names, constraints, seed, max_attempts=2000):
    """Deterministically sample named rationals satisfying every constraint.

    names: iterable of parameter names to draw; constraints: list of tuples
    ('nonzero', name), ('not_root_of_unity', name, M),
    ('diff_not_integer', n1, n2, W), ('ratio_not_q_power', n1, n2, q, W).
    Same seed reproduces the same tuple; every constraint is re-checked
    exactly before returning.
    """
    rng = Random(seed)
    names = list(names)
    for _ in range(max_attempts):
        values = {}
        for name in names:
            p = rng.choice(_SMALL_PRIMES)
            q = rng.choice(_SMALL_PRIMES)
            while q == p:
                q = rng.choice(_SMALL_PRIMES)
            sign = rng.choice([1, 1, 1, -1])
            values[name] = Fraction(sign * p, q)
        if all(_check_constraint(c, values) for c in constraints):
            return values
    raise SamplingExhausted(
        f"no assignment for {names} met {len(constraints)} constraints "
        f"in {max_attempts} attempts"
    )


def z_from_c(c, l, hbar=Fraction(1)):
    """Change of variables between the two cyclotomic parameter systems:

        z_i = (1/l) * (hbar*(l - i) + sum_j c_j zeta^{ij}),   i = 1..l.

    c are the wreath-product weights c_0..c_{l-1}; the z_i live in Q(zeta_l)
    and are returned as CycloNumbers (rational for l <= 2 or for
    conjugation-symmetric c).
    """
    if len(c) != l:
        raise ValueError("need l weights c_0..c_{l-1}")
    zeta = CycloNumber.zeta(l)
    out = []
    for i in range(1, l + 1):
        acc = CycloNumber.from_rational(l, Fraction(hbar) * (l - i))
        for j, cj in enumerate(c):
            acc = acc + zeta ** (i * j) * Fraction(cj)
        out.append(acc * Fraction(1, l))
    return tuple(out)


def binomial_fraction(a, r):
    """Generalized binomial coefficient C(a, r) for a rational (or integer) a."""
    if r < 0:
        return Fraction(0)
    num = Fraction(1)
    a = Fraction(a)
    for i in range(r):
        num *= a - i
    return num / math.factorial(r)
