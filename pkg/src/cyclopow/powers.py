"""n-th power detection in a number field and the binomial irreducibility test.

Roots are found by factoring X^p - alpha (never by numeric approximation),
extracted prime by prime with backtracking: when the field contains p-th
roots of unity a power has several p-th roots and the branches matter.
The witness returned is the first success in canonical root order, i.e.
the lexicographically least chain under the fixed element order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import euler_phi, factorint
from .numberfield import NFElement, NumberField, contains_root, element_key
from .polyarith import DEFAULT_POLY_CAP, Poly, cyclotomic


@dataclass(frozen=True)
class PowerWitness:
    base: NFElement
    exponent: int
    root: NFElement | None

    def __bool__(self) -> bool:
        return self.root is not None


def pth_roots(alpha: NFElement, p: int, K: NumberField, *, poly_cap: int = DEFAULT_POLY_CAP) -> list[NFElement]:
    """All p-th roots of alpha lying in K, canonically ordered."""
    alpha = K.coerce(alpha)
    if not alpha:
        raise ValueError("pth_roots needs a nonzero element")
    binom = Poly([-alpha] + [K.zero()] * (p - 1) + [K.one()])
    return contains_root(binom, K, poly_cap=poly_cap)


def is_nth_power(alpha, n: int, K: NumberField, *, poly_cap: int = DEFAULT_POLY_CAP) -> PowerWitness:
    """Witness for alpha in K^n; root is present iff alpha is an n-th power.

    n is split into primes in increasing order with multiplicity; at each
    step every p-th root is tried in canonical order (depth first), so the
    returned root is the lexicographically least successful chain.
    """
    alpha = K.coerce(alpha)
    if not alpha:
        raise ValueError("is_nth_power needs a nonzero element")
    if n < 1:
        raise ValueError("exponent must be positive")
    steps: list[int] = []
    for p, e in factorint(n).items():
        steps.extend([p] * e)

    def walk(current: NFElement, idx: int) -> NFElement | None:
        if idx == len(steps):
            return current
        for root in pth_roots(current, steps[idx], K, poly_cap=poly_cap):
            found = walk(root, idx + 1)
            if found is not None:
                return found
        return None

    return PowerWitness(base=alpha, exponent=n, root=walk(alpha, 0))


def in_minus4K4(alpha, K: NumberField, *, poly_cap: int = DEFAULT_POLY_CAP) -> bool:
    """True iff alpha lies in -4*K^4, tested as -alpha/4 in K^4."""
    alpha = K.coerce(alpha)
    if not alpha:
        raise ValueError("in_minus4K4 needs a nonzero element")
    from fractions import Fraction

    return bool(is_nth_power(alpha * Fraction(-1, 4), 4, K, poly_cap=poly_cap))


def binomial_irreducible(alpha, n: int, K: NumberField, *, poly_cap: int = DEFAULT_POLY_CAP) -> bool:
    """Irreducibility of X^n - alpha by the classical binomial criterion.

    Irreducible iff alpha is not a p-th power for any prime p | n and, when
    4 | n, additionally alpha is not in -4*K^4. For n = 1 this is True.
    """
    alpha = K.coerce(alpha)
    if not alpha:
        raise ValueError("binomial_irreducible needs a nonzero element")
    if n < 1:
        raise ValueError("exponent must be positive")
    if n == 1:
        return True
    for p in factorint(n):
        if is_nth_power(alpha, p, K, poly_cap=poly_cap):
            return False
    if n % 4 == 0 and in_minus4K4(alpha, K, poly_cap=poly_cap):
        return False
    return True


def root_of_unity_level(p: int, L: NumberField, *, poly_cap: int = DEFAULT_POLY_CAP) -> int:
    """The largest l >= 0 with a primitive p^l-th root of unity in L.

    zeta_1 = 1 gives l >= 0 always, and zeta_2 = -1 gives l >= 1 for p = 2.
    Containment of zeta_{p^k} requires phi(p^k) | [L:Q], which bounds the
    search and guarantees termination.
    """
    level = 1 if p == 2 else 0
    k = level + 1
    while True:
        if L.absolute_degree % euler_phi(p**k) != 0:
            return level
        if not contains_root(cyclotomic(p**k), L, poly_cap=poly_cap):
            return level
        level = k
        k += 1
