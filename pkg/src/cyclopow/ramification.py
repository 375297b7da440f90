"""Prime splitting, Dedekind's maximality test, field discriminants, epsilon invariants.

Splitting a rational prime p through the equation order Z[theta] is only
sound when Z[theta] is p-maximal; every operation here checks that with
Dedekind's criterion first and raises NotMaximalOrderError instead of
guessing. There is deliberately no round-2 fallback.

epsilon_odd(p, K) is the gcd of the ramification indices of the K-primes
above an odd p. epsilon_two works in K(i): the primes above 2 there all
have even ramification index over 2 (they ramify through 1+i, which has
e = 2 over 2), and the gcd of e/2 is the invariant. K(i) is handled
through a deterministic search for an absolute model whose equation order
is provably 2-maximal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import modp
from .arith import factorint
from .errors import NotMaximalOrderError
from .numberfield import (
    NFElement,
    NumberField,
    _trusted_field,
    absolute_min_poly,
    contains_root,
    has_i,
    make_field,
)
from .polyarith import DEFAULT_POLY_CAP, Poly, discriminant


@dataclass(frozen=True)
class PrimeSplit:
    """Splitting data of p in K: one (e, f) pair per prime above p."""

    prime: int
    pairs: tuple[tuple[int, int], ...]  # (ramification index, residue degree)

    @property
    def degree_sum(self) -> int:
        return sum(e * f for e, f in self.pairs)

    def ramifies(self) -> bool:
        return any(e > 1 for e, _ in self.pairs)


@dataclass(frozen=True)
class DiscriminantData:
    poly_disc: int
    field_disc: int
    index_squared: int


def _int_defining_poly(K: NumberField) -> list[int]:
    if K.base is not None:
        raise ValueError("operation needs an absolute field (base = Q)")
    return K.defining_poly.int_coeffs()


def dedekind_p_maximal(f: Poly, p: int) -> bool:
    """Dedekind's criterion: is Z[x]/(f) maximal at p?

    Factor f mod p as prod g_i^{e_i}; with g = prod g_i, h = f/g mod p
    (lifted), and F = (g*h - f)/p, the order is p-maximal iff
    gcd(F, g, h) = 1 in F_p[x].
    """
    if f.lc != 1 or not f.is_integer():
        raise ValueError("Dedekind's test needs a monic integer polynomial")
    fz = f.int_coeffs()
    factors = modp.factor(fz, p)
    g = [1]
    h = [1]
    for gi, e in factors:
        g = modp.mul(g, gi, p)
        if e > 1:
            h = modp.mul(h, _pow_plain(gi, e - 1, p), p)
    gh = _int_mul_list(g, h)
    diff = [(a - b) for a, b in _zip_pad(gh, fz)]
    assert all(c % p == 0 for c in diff), "g*h == f mod p by construction"
    F = [c // p for c in diff]
    d1 = modp.gcd(g, h, p)
    d2 = modp.gcd(d1, modp.normalize(F, p), p)
    return modp.deg(d2) == 0


def _pow_plain(a: list[int], e: int, p: int) -> list[int]:
    out = [1]
    for _ in range(e):
        out = modp.mul(out, a, p)
    return out


def _int_mul_list(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _zip_pad(a: list[int], b: list[int]):
    n = max(len(a), len(b))
    return [((a[i] if i < len(a) else 0), (b[i] if i < len(b) else 0)) for i in range(n)]


def _dedekind_cached(K: NumberField, p: int) -> bool:
    if p not in K._dedekind_cache:
        K._dedekind_cache[p] = dedekind_p_maximal(K.defining_poly, p)
    return K._dedekind_cache[p]


def field_discriminant(K: NumberField) -> DiscriminantData:
    """The field discriminant of an absolute K, when provable via Dedekind.

    Succeeds exactly when Z[theta] is p-maximal at every p with
    p^2 | disc(f); then the index is 1 and disc(f) is the field
    discriminant. Raises NotMaximalOrderError(p) otherwise.
    """
    _int_defining_poly(K)
    disc = discriminant(K.defining_poly)
    assert isinstance(disc, Fraction) and disc.denominator == 1
    d = int(disc)
    for p, e in factorint(d).items():
        if e >= 2 and not _dedekind_cached(K, p):
            raise NotMaximalOrderError(p, "field discriminant not provable")
    return DiscriminantData(poly_disc=d, field_disc=d, index_squared=1)


def split_prime(p: int, K: NumberField) -> PrimeSplit:
    """Splitting of p in K by factoring f mod p; requires p-maximality."""
    if p in K._split_cache:
        return K._split_cache[p]
    fz = _int_defining_poly(K)
    if not _dedekind_cached(K, p):
        raise NotMaximalOrderError(p, "prime splitting through Z[theta] would be unsound")
    pairs = tuple(sorted((e, modp.deg(g)) for g, e in modp.factor(fz, p)))
    split = PrimeSplit(prime=p, pairs=pairs)
    assert split.degree_sum == K.degree, "sum e_i f_i must equal the degree"
    K._split_cache[p] = split
    return split


def epsilon_odd(p: int, K: NumberField) -> int:
    """gcd of the ramification indices of the K-primes above an odd p."""
    if p < 3:
        raise ValueError("epsilon_odd needs an odd prime")
    split = split_prime(p, K)
    g = 0
    for e, _ in split.pairs:
        g = gcd(g, e)
    return g


# -- the K(i) absolute model -------------------------------------------------------


def _i_model_candidates(L: NumberField, theta: NFElement, z: NFElement):
    """Deterministic generator stream for primitive elements of L = K(i).

    First the plain theta + c*z family, then a fixed grid of integral
    half-denominator combinations (needed e.g. when K(i) is the 8th
    cyclotomic field, where no Z-combination of theta and i generates a
    2-maximal order).
    """
    for c in range(1, 9):
        yield theta + z * c
    half = Fraction(1, 2)
    for a in (1, 2):
        for b in (0, 1, -1, 2, -2):
            for c in (0, 1, -1, 2, -2):
                for d in (0, 1):
                    yield (theta * a + theta * z * b + z * c + d) * half
    for a in (1, 2, 3):
        for c in (1, -1, 2, -2, 3, -3):
            yield theta * a * z + z * c
    for a in (1, 2):
        for c in (1, 2, 3):
            yield theta + theta * z * a + z * c


def absolute_i_model(K: NumberField, *, poly_cap: int = DEFAULT_POLY_CAP) -> NumberField:
    """An absolute field isomorphic to K(i) whose order is provably 2-maximal.

    Returns K itself when i is already in K. Any candidate gamma living in
    the tower K[y]/(y^2+1) whose minimal polynomial has full degree is a
    correct model; Dedekind at 2 then certifies that splitting 2 through
    it is sound. Deterministic first-hit search; raises
    NotMaximalOrderError(2) if the whole candidate family fails.
    """
    if K.base is not None:
        raise ValueError("absolute_i_model needs an absolute field")
    if has_i(K, poly_cap=poly_cap):
        return K
    L = _trusted_field(Poly([1, 0, 1]), K, degree_cap=4 * K.absolute_degree)
    theta = L.from_base(K.gen())
    z = L.gen()
    full = 2 * K.degree
    for gamma in _i_model_candidates(L, theta, z):
        m = absolute_min_poly(gamma)
        if m.degree != full or not m.is_integer():
            continue
        if dedekind_p_maximal(m, 2):
            return _trusted_field(m, None, degree_cap=full)
    raise NotMaximalOrderError(2, "no 2-maximal absolute model of K(i) found")


def epsilon_two(K: NumberField, *, poly_cap: int = DEFAULT_POLY_CAP) -> int:
    """gcd over primes P of K(i) above 2 of e_{P/2} / 2.

    Every such e_{P/2} is even because the prime 1+i of Q(i) has e = 2
    over 2 and e_{P/2} = 2 * e_{P/(1+i)}; dividing by 2 recovers the gcd
    of the ramification indices over 1+i.
    """
    model = absolute_i_model(K, poly_cap=poly_cap)
    split = split_prime(2, model)
    g = 0
    for e, _ in split.pairs:
        if e % 2:
            raise ArithmeticError("prime above 2 in K(i) with odd ramification index")
        g = gcd(g, e // 2)
    return g
