"""Dense univariate polynomials with exact coefficients.

A Poly stores its coefficients constant-term first, with no trailing
zeros (the zero polynomial is the empty tuple). Coefficients are
`fractions.Fraction` by default; any field-like object implementing the
arithmetic operators (number field elements do) can be used instead, and
the same gcd / resultant / interpolation code runs over either.

All arithmetic is exact; nothing in this module touches floating point.
"""

from __future__ import annotations

import functools
from fractions import Fraction

from .arith import divisors, euler_phi, factorint, is_prime
from .errors import CapacityError

#: factor_over_Q refuses inputs above this degree unless told otherwise;
#: recombination is exponential in the worst case and must fail loudly.
DEFAULT_POLY_CAP = 64


def _normalize(coeffs) -> tuple:
    cs = list(coeffs)
    field = None
    for c in cs:
        if hasattr(c, "field"):
            field = c.field
            break
    if field is None:
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in cs]
    else:
        cs = [c if hasattr(c, "field") else field.coerce(c) for c in cs]
    while cs and not cs[-1]:
        cs.pop()
    return tuple(cs)


class Poly:
    """Immutable dense polynomial; ``Poly([1, 0, 1])`` is ``x^2 + 1``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _normalize(coeffs))

    def __setattr__(self, *a):
        raise AttributeError("Poly is immutable")

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def x(degree: int = 1, coeff=1) -> "Poly":
        """coeff * x**degree."""
        return Poly([0] * degree + [coeff])

    @staticmethod
    def const(c) -> "Poly":
        return Poly([c])

    # -- structure ------------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self):
        """Leading coefficient; raises on the zero polynomial."""
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly('{self}')"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if isinstance(c, Fraction):
                neg = c < 0
                mag = -c if neg else c
                coeff = "" if (mag == 1 and i > 0) else str(mag)
            else:
                neg = False
                coeff = f"({c})" if i > 0 else str(c)
            term = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            sep = "*" if coeff and term and not coeff.startswith("(") else ""
            body = coeff + sep + term if coeff else term
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    # -- ring operations -------------------------------------------------------

    def _wrap_scalar(self, s):
        if isinstance(s, Poly):
            return s
        if isinstance(s, (int, Fraction)) or hasattr(s, "field"):
            return Poly([s])
        return None

    def __add__(self, other):
        other = self._wrap_scalar(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._wrap_scalar(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, (int, Fraction)) or hasattr(other, "field"):
                return Poly([c * other for c in self.coeffs])
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __divmod__(self, other: "Poly"):
        """Euclidean division; coefficient field must support division."""
        if not isinstance(other, Poly):
            other = self._wrap_scalar(other)
        if other is None or other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return Poly(), self
        rem = list(self.coeffs)
        dlc = other.lc
        dd = other.degree
        q = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if not c:
                continue
            f = c / dlc
            q[i - dd] = f
            rem[i] = c - c  # exact zero of the right type
            for j, b in enumerate(other.coeffs[:-1]):
                rem[i - dd + j] = rem[i - dd + j] - f * b
        return Poly(q), Poly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    # -- calculus & evaluation -------------------------------------------------

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        """Evaluate by Horner; x may be a scalar, field element or Poly."""
        if self.is_zero:
            return Fraction(0) * x if isinstance(x, (int, Fraction)) else 0 * x
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def shift_arg(self, c) -> "Poly":
        """p(x + c), by the Ruffini-Horner scheme."""
        cs = list(self.coeffs)
        n = len(cs)
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                cs[j] = cs[j] + c * cs[j + 1]
        return Poly(cs)

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        lc = self.lc
        if isinstance(lc, Fraction) and lc == 1:
            return self
        return Poly([c / lc for c in self.coeffs])

    def is_integer(self) -> bool:
        """True when every coefficient is a Fraction with denominator 1."""
        return all(isinstance(c, Fraction) and c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> list[int]:
        if not self.is_integer():
            raise ValueError("polynomial has non-integer coefficients")
        return [int(c) for c in self.coeffs]


# -- gcd / resultant / discriminant ---------------------------------------------


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over the coefficient field; gcd(a, 0) = monic(a)."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """(g, s, t) with s*a + t*b = g, g monic (or zero)."""
    r0, r1 = a, b
    s0, s1 = Poly([1]), Poly()
    t0, t1 = Poly(), Poly([1])
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero:
        return r0, s0, t0
    lc = r0.lc
    inv = 1 / lc
    return r0 * inv, s0 * inv, t0 * inv


def resultant(a: Poly, b: Poly):
    """Res(a, b) by the Euclidean recursion with the standard sign rule."""
    if a.is_zero or b.is_zero:
        raise ValueError("resultant of a zero polynomial")
    sign_flip = False
    acc = None  # multiplicative accumulator, lazily typed

    def mul_acc(v):
        nonlocal acc
        acc = v if acc is None else acc * v

    while True:
        if a.degree == 0:
            mul_acc(a.lc ** b.degree)
            break
        if b.degree == 0:
            mul_acc(b.lc ** a.degree)
            break
        r = a % b
        if r.is_zero:
            return (a.lc - a.lc) if not isinstance(a.lc, Fraction) else Fraction(0)
        if (a.degree * b.degree) % 2 == 1:
            sign_flip = not sign_flip
        mul_acc(b.lc ** (a.degree - r.degree))
        a, b = b, r
    return -acc if sign_flip else acc


def discriminant(f: Poly):
    """(-1)^{n(n-1)/2} Res(f, f') / lc(f); degree-1 polynomials give 1."""
    if f.degree < 1:
        raise ValueError("discriminant needs degree >= 1")
    if f.degree == 1:
        return Fraction(1)
    res = resultant(f, f.derivative())
    sign = -1 if (f.degree * (f.degree - 1) // 2) % 2 else 1
    return sign * res / f.lc


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm (characteristic 0): [(monic squarefree part, multiplicity)]."""
    f = f.monic()
    if f.degree < 1:
        return []
    u = poly_gcd(f, f.derivative())
    v = f // u
    w = f.derivative() // u
    out = []
    i = 1
    while v.degree > 0:
        z = w - v.derivative()
        h = poly_gcd(v, z)
        if h.degree > 0:
            out.append((h, i))
        v = v // h
        w = z // h
        i += 1
    return out


def lagrange_interpolate(points: list[tuple], one) -> Poly:
    """The unique polynomial through ``points`` [(x_i, y_i)].

    ``one`` is the multiplicative unit of the coefficient field (used to
    coerce the integer nodes); nodes must be distinct.
    """
    result = Poly()
    for i, (xi, yi) in enumerate(points):
        if not yi:
            continue
        num = Poly([one])
        den = one
        for j, (xj, _) in enumerate(points):
            if i == j:
                continue
            num = num * Poly([-(xj * one), one])
            den = den * ((xi - xj) * one)
        result = result + num * (yi / den)
    return result


# -- cyclotomic polynomials -------------------------------------------------------


@functools.lru_cache(maxsize=None)
def cyclotomic(m: int) -> Poly:
    """The m-th cyclotomic polynomial, via x^m - 1 = prod_{d|m} Phi_d."""
    if m < 1:
        raise ValueError("cyclotomic needs m >= 1")
    if m == 1:
        return Poly([-1, 1])
    result = Poly([-1] + [0] * (m - 1) + [1])
    for d in divisors(m):
        if d < m:
            q, r = divmod(result, cyclotomic(d))
            assert r.is_zero
            result = q
    assert result.degree == euler_phi(m)
    return result


# -- p-adic valuation ---------------------------------------------------------------


def nu(p: int, q) -> int:
    """Exact p-adic valuation of a nonzero rational."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    q = Fraction(q)
    if q == 0:
        raise ValueError("valuation of 0 is undefined")

    def _val(n: int) -> int:
        v = 0
        while n % p == 0:
            n //= p
            v += 1
        return v

    return _val(q.numerator) - _val(q.denominator)


def check_poly_cap(degree: int, cap: int, what: str = "factorization") -> None:
    if degree > cap:
        raise CapacityError(
            f"{what} degree {degree} exceeds the polynomial cap {cap}",
            needed=degree,
            cap=cap,
        )
