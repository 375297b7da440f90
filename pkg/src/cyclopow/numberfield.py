"""Number fields K = Q[x]/(f) and single-step relative extensions L = K[y]/(g).

A field is a shareable immutable handle; elements are coordinate vectors
over the base in the power basis 1, theta, ..., theta^(d-1), reduced
modulo the defining polynomial after every multiplication. The rationals
themselves are representable as the degree-1 field over Q defined by x,
so every operation treats Q uniformly.

Factoring over K uses Trager's method: shift by a multiple of the
generator until the norm (a resultant, computed here by evaluation and
Lagrange interpolation) is squarefree, factor the norm over the base, and
recover the K-factors by gcd.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import CapacityError, ReducibleError
from .factorq import factor_over_Q
from .polyarith import (
    DEFAULT_POLY_CAP,
    Poly,
    check_poly_cap,
    lagrange_interpolate,
    poly_gcd,
    poly_xgcd,
    resultant,
    squarefree_decomposition,
)

#: ceiling on the absolute degree of any constructed field tower
DEFAULT_DEGREE_CAP = 64


class NumberField:
    """Handle for Q[x]/(f) or, with a base, K[y]/(g). Immutable after creation."""

    def __init__(self, defining_poly: Poly, base: "NumberField | None" = None, *, _verified=False):
        if not _verified:
            raise TypeError("construct fields through make_field()")
        self.defining_poly = defining_poly
        self.base = base
        self.degree = defining_poly.degree
        self.absolute_degree = self.degree * (base.absolute_degree if base else 1)
        self._has_i: bool | None = None
        self._split_cache: dict[int, tuple] = {}
        self._dedekind_cache: dict[int, bool] = {}

    # -- element construction ---------------------------------------------------

    def zero(self) -> "NFElement":
        return self.coerce(0)

    def one(self) -> "NFElement":
        return self.coerce(1)

    def base_zero(self):
        return Fraction(0) if self.base is None else self.base.zero()

    def base_one(self):
        return Fraction(1) if self.base is None else self.base.one()

    def gen(self) -> "NFElement":
        """The class of x (resp. y): the power-basis generator."""
        coords = [self.base_zero()] * self.degree
        if self.degree == 1:
            # x is a root of the degree-1 defining poly: gen = -constant term
            coords[0] = -self.defining_poly.coeffs[0]
        else:
            coords[1] = self.base_one()
        return NFElement(self, tuple(coords))

    def element(self, coords) -> "NFElement":
        cs = [self._coerce_base(c) for c in coords]
        if len(cs) > self.degree:
            raise ValueError("coordinate vector longer than the field degree")
        cs += [self.base_zero()] * (self.degree - len(cs))
        return NFElement(self, tuple(cs))

    def _coerce_base(self, c):
        if self.base is None:
            return Fraction(c)
        return self.base.coerce(c)

    def from_base(self, b) -> "NFElement":
        """Embed an element of the base field (constant coordinate)."""
        b = self._coerce_base(b)
        coords = [b] + [self.base_zero()] * (self.degree - 1)
        return NFElement(self, tuple(coords))

    def coerce(self, v) -> "NFElement":
        """Coerce rationals, ints, and elements of any ancestor field into self."""
        if isinstance(v, NFElement):
            if v.field is self:
                return v
            if self.base is not None:
                return self.from_base(self.base.coerce(v))
            raise ValueError(f"cannot coerce element of {v.field} into {self}")
        if isinstance(v, (int, Fraction)):
            return self.from_base(self._coerce_base(v))
        raise TypeError(f"cannot coerce {v!r} into a field element")

    def ancestors(self) -> list["NumberField"]:
        out = []
        k = self.base
        while k is not None:
            out.append(k)
            k = k.base
        return out

    def __repr__(self):
        tower = f" over {self.base!r}" if self.base is not None else ""
        return f"NumberField({self.defining_poly}{tower})"


class NFElement:
    """Element of a NumberField as an exact coordinate vector over the base."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords: tuple):
        self.field = field
        self.coords = coords

    # -- plumbing ---------------------------------------------------------------

    def _other(self, v):
        if isinstance(v, NFElement):
            if v.field is self.field:
                return v
            if v.field in self.field.ancestors():
                return self.field.coerce(v)
            return None
        if isinstance(v, (int, Fraction)):
            return self.field.coerce(v)
        return None

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented if not isinstance(other, NFElement) else False
        return self.coords == o.coords

    def __hash__(self):
        return hash((id(self.field), self.coords))

    def __repr__(self):
        return f"<{self} in {self.field.defining_poly}>"

    def __str__(self):
        names = "abcdefgh"
        depth = len(self.field.ancestors())
        sym = names[depth % len(names)]
        parts = []
        for i, c in enumerate(self.coords):
            if not c:
                continue
            cs = str(c)
            if isinstance(c, NFElement):
                cs = f"({cs})"
            term = "" if i == 0 else (sym if i == 1 else f"{sym}^{i}")
            parts.append(cs + ("*" if term and cs else "") + term if term else cs)
        return " + ".join(parts) if parts else "0"

    # -- arithmetic ---------------------------------------------------------------

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return NFElement(self.field, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return NFElement(self.field, tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        prod = Poly(self.coords) * Poly(o.coords)
        red = prod % self.field.defining_poly
        coords = list(red.coeffs) + [self.field.base_zero()] * (self.field.degree - len(red.coeffs))
        return NFElement(self.field, tuple(coords))

    __rmul__ = __mul__

    def inverse(self) -> "NFElement":
        if not self:
            raise ZeroDivisionError("inverse of zero field element")
        g, s, _ = poly_xgcd(Poly(self.coords), self.field.defining_poly)
        if g.degree != 0:
            raise ArithmeticError("defining polynomial is not irreducible")  # cannot happen for verified fields
        inv = s % self.field.defining_poly
        coords = list(inv.coeffs) + [self.field.base_zero()] * (self.field.degree - len(inv.coeffs))
        return NFElement(self.field, tuple(coords))

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.field.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result


# -- linearization helpers -----------------------------------------------------------


def flatten(x) -> tuple[Fraction, ...]:
    """Rational coordinates of x in the absolute power-product basis."""
    if isinstance(x, Fraction):
        return (x,)
    out: list[Fraction] = []
    for c in x.coords:
        out.extend(flatten(c))
    return tuple(out)


def element_key(x) -> tuple:
    """Total-order key for elements; used for canonical root/factor ordering."""
    return flatten(x) if isinstance(x, NFElement) else (Fraction(x),)


def poly_key(f: Poly) -> tuple:
    return (f.degree, tuple(element_key(c) for c in f.coeffs))


def kpoly(K: NumberField, coeffs) -> Poly:
    """Polynomial over K with every coefficient coerced into K."""
    if isinstance(coeffs, Poly):
        coeffs = coeffs.coeffs
    return Poly([K.coerce(c) for c in coeffs])


# -- field construction ---------------------------------------------------------------


def make_field(
    f,
    base: NumberField | None = None,
    *,
    degree_cap: int = DEFAULT_DEGREE_CAP,
    poly_cap: int = DEFAULT_POLY_CAP,
) -> NumberField:
    """Construct a verified field K = (base or Q)[x]/(f).

    f must be monic (integer coefficients when absolute) and is proved
    irreducible by factorization; a reducible f raises ReducibleError
    carrying a witness factor.
    """
    if base is None:
        f = Poly(f.coeffs if isinstance(f, Poly) else f)
        if f.degree < 1:
            raise ValueError("defining polynomial must have degree >= 1")
        if f.lc != 1:
            raise ValueError(f"defining polynomial must be monic, got lc = {f.lc}")
        if not f.is_integer():
            raise ValueError("absolute defining polynomial must have integer coefficients")
    else:
        f = kpoly(base, f)
        if f.degree < 1:
            raise ValueError("defining polynomial must have degree >= 1")
        if not (f.lc == 1):
            raise ValueError("defining polynomial must be monic")
    abs_degree = f.degree * (base.absolute_degree if base else 1)
    if abs_degree > degree_cap:
        raise CapacityError(
            f"absolute degree {abs_degree} exceeds the degree cap {degree_cap}",
            needed=abs_degree,
            cap=degree_cap,
        )
    if base is None:
        factors = factor_over_Q(f, poly_cap)
    else:
        factors = factor_over_K(f, base, poly_cap=poly_cap)
    if len(factors) != 1 or factors[0][1] != 1:
        witness = factors[0][0]
        raise ReducibleError(f"defining polynomial is reducible; witness factor {witness}", witness)
    return NumberField(f, base, _verified=True)


def _trusted_field(f: Poly, base: NumberField | None, degree_cap: int = DEFAULT_DEGREE_CAP) -> NumberField:
    """Internal: wrap a polynomial already known to be irreducible."""
    abs_degree = f.degree * (base.absolute_degree if base else 1)
    if abs_degree > degree_cap:
        raise CapacityError(
            f"absolute degree {abs_degree} exceeds the degree cap {degree_cap}",
            needed=abs_degree,
            cap=degree_cap,
        )
    return NumberField(f, base, _verified=True)


def rationals() -> NumberField:
    """Q presented as the degree-1 field Q[x]/(x)."""
    return _trusted_field(Poly([0, 1]), None)


# -- norms and minimal polynomials ------------------------------------------------------


def norm(alpha: NFElement):
    """Norm to the immediate base field: Res(f, coordinate polynomial)."""
    if not alpha:
        return alpha.field.base_zero()
    return resultant(alpha.field.defining_poly, Poly(alpha.coords))


def _min_poly_from_vectors(powers_of, vectorize, dim, zero, one):
    rows: list[tuple[int, list, list]] = []
    power = powers_of.field.one()
    for k in range(dim + 1):
        vec = list(vectorize(power))
        combo = [zero] * k + [one]
        for piv, row, cmb in rows:
            c = vec[piv]
            if c:
                vec = [v - c * r for v, r in zip(vec, row)]
                width = max(len(combo), len(cmb))
                combo = [
                    (combo[i] if i < len(combo) else zero) - c * (cmb[i] if i < len(cmb) else zero)
                    for i in range(width)
                ]
        piv = next((i for i, v in enumerate(vec) if v), None)
        if piv is None:
            return Poly(combo)
        inv = one / vec[piv]
        rows.append((piv, [v * inv for v in vec], [c * inv for c in combo]))
        power = power * powers_of
    raise ArithmeticError("no linear dependence found below the field dimension")  # unreachable


def min_poly(alpha: NFElement) -> Poly:
    """Monic minimal polynomial of alpha over the immediate base field."""
    K = alpha.field
    return _min_poly_from_vectors(alpha, lambda e: e.coords, K.degree, K.base_zero(), K.base_one())


def absolute_min_poly(alpha: NFElement) -> Poly:
    """Monic minimal polynomial of alpha over Q, through the whole tower."""
    return _min_poly_from_vectors(
        alpha, flatten, alpha.field.absolute_degree, Fraction(0), Fraction(1)
    )


# -- Trager factorization over K -----------------------------------------------------------


def _interpolation_nodes():
    yield 0
    for k in itertools.count(1):
        yield k
        yield -k


def _norm_to_base(g: Poly, K: NumberField) -> Poly:
    """Norm of g in K[X] down to base[X], by evaluation/interpolation of Res_y."""
    f = K.defining_poly
    n = K.degree * g.degree
    one_b = K.base_one()
    points = []
    for a in itertools.islice(_interpolation_nodes(), n + 1):
        apow = 1
        h = Poly()
        for c in g.coeffs:
            h = h + Poly(c.coords) * (apow * one_b)
            apow *= a
        val = resultant(f, h) if not h.is_zero else K.base_zero()
        points.append((a * one_b, val))
    return lagrange_interpolate(points, one_b)


def _trager_squarefree(g: Poly, K: NumberField, poly_cap: int) -> list[Poly]:
    """Irreducible monic factors of a monic squarefree g over K."""
    if g.degree <= 1:
        return [g]
    theta = K.gen()
    for s in itertools.count(0):
        shifted = g.shift_arg(theta * (-s)) if s else g
        n = _norm_to_base(shifted, K)
        if poly_gcd(n, n.derivative()).degree == 0:
            break
    if K.base is None:
        norm_factors = factor_over_Q(n, poly_cap)
    else:
        norm_factors = factor_over_K(n, K.base, poly_cap=poly_cap)
    if len(norm_factors) == 1:
        return [g]
    out = []
    for h, mult in norm_factors:
        assert mult == 1, "norm was squarefree"
        u = poly_gcd(shifted, kpoly(K, h))
        assert u.degree > 0
        out.append(u.shift_arg(theta * s).monic() if s else u)
    return out


def factor_over_K(g, K: NumberField, *, poly_cap: int = DEFAULT_POLY_CAP) -> list[tuple[Poly, int]]:
    """Factor g in K[X] into monic irreducibles with multiplicities.

    Deterministic: the Trager shift is the smallest s >= 0 with squarefree
    norm, and factors are sorted by (degree, coefficient sequence).
    """
    if K.base is None and K.degree == 1:
        return _factor_over_trivial(g, K, poly_cap)
    g = kpoly(K, g)
    if g.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    check_poly_cap(K.absolute_degree * g.degree, poly_cap, "norm")
    if g.degree == 0:
        return []
    out: list[tuple[Poly, int]] = []
    for part, mult in squarefree_decomposition(g):
        for irr in _trager_squarefree(part, K, poly_cap):
            out.append((irr, mult))
    out.sort(key=lambda t: poly_key(t[0]))
    return out


def _factor_over_trivial(g, K: NumberField, poly_cap: int) -> list[tuple[Poly, int]]:
    """K is a degree-1 absolute field: factor over Q and dress the result up."""
    g = kpoly(K, g)
    if g.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    q = Poly([c.coords[0] for c in g.coeffs])
    return [(kpoly(K, fac), mult) for fac, mult in factor_over_Q(q, poly_cap)]


def contains_root(g, K: NumberField, *, poly_cap: int = DEFAULT_POLY_CAP) -> list[NFElement]:
    """All roots of g lying in K, in canonical (descending coordinate) order."""
    factors = factor_over_K(g, K, poly_cap=poly_cap)
    return [-fac.coeffs[0] for fac, _ in factors if fac.degree == 1]


def has_i(K: NumberField, *, poly_cap: int = DEFAULT_POLY_CAP) -> bool:
    """True iff X^2 + 1 has a root in K."""
    if K._has_i is None:
        K._has_i = bool(contains_root(Poly([1, 0, 1]), K, poly_cap=poly_cap))
    return K._has_i


def descend(beta: NFElement, K: NumberField) -> NFElement | None:
    """The element of K equal to beta, when beta's reduced coordinates allow it."""
    L = beta.field
    if L.base is not K:
        raise ValueError("descend target must be the immediate base field")
    if any(beta.coords[1:]):
        return None
    return beta.coords[0]


def embed(x, L: NumberField) -> NFElement:
    """Coerce x (rational or element of an ancestor field) into L."""
    return L.coerce(x)
