"""Irreducible factorization over the rationals (Zassenhaus).

Pipeline: squarefree decomposition (Yun), factorization modulo a good
prime (Cantor-Zassenhaus), quadratic Hensel lifting up to a Mignotte-style
coefficient bound, then naive subset recombination. Fully exact and
deterministic; the good prime is the smallest prime not dividing
lc(f)*disc(f), and factors are emitted sorted by (degree, coefficient
sequence).

Recombination is exponential in the worst case, which is why degrees above
the configured cap are a hard CapacityError rather than a long silence.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from . import modp
from .arith import is_prime, next_prime
from .errors import CapacityError
from .polyarith import DEFAULT_POLY_CAP, Poly, check_poly_cap, squarefree_decomposition


def _primitive_int(f: Poly) -> list[int]:
    """Scale a nonzero rational polynomial to a primitive integer list, lc > 0."""
    den = math.lcm(*(c.denominator for c in f.coeffs))
    ints = [int(c * den) for c in f.coeffs]
    g = math.gcd(*ints)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _int_disc(g: list[int]) -> int:
    d = Poly(g)
    from .polyarith import discriminant

    disc = discriminant(d)
    assert disc.denominator == 1
    return int(disc)


def _good_prime(g: list[int]) -> int:
    """Smallest prime dividing neither lc(g) nor disc(g)."""
    bad = abs(g[-1] * _int_disc(g))
    p = 2
    while bad % p == 0:
        p = next_prime(p)
    return p


def _l2_bound(g: list[int]) -> int:
    """Integer upper bound on |coeffs| of lc(g) * (any monic rational factor of g)."""
    norm_sq = sum(c * c for c in g)
    root = math.isqrt(norm_sq)
    if root * root < norm_sq:
        root += 1
    return abs(g[-1]) * (1 << len(g)) * root


def _centered(a: list[int], m: int) -> list[int]:
    half = m // 2
    return modp.trim([((c + half) % m) - half for c in a])


def _hensel_step(f, g, h, s, t, m):
    """One quadratic lift: from f=g*h, s*g+t*h=1 (mod m) to the same mod m^2.

    h is monic and stays monic; g carries the leading coefficient.
    """
    m2 = m * m
    e = modp.sub(modp.normalize(f, m2), modp.mul(g, h, m2), m2)
    q, r = modp.divmod_monic(modp.mul(s, e, m2), h, m2)
    g_new = modp.add(g, modp.add(modp.mul(t, e, m2), modp.mul(q, g, m2), m2), m2)
    h_new = modp.add(h, r, m2)
    b = modp.sub(modp.add(modp.mul(s, g_new, m2), modp.mul(t, h_new, m2), m2), [1], m2)
    c, d = modp.divmod_monic(modp.mul(s, b, m2), h_new, m2)
    s_new = modp.sub(s, d, m2)
    t_new = modp.sub(t, modp.add(modp.mul(t, b, m2), modp.mul(c, g_new, m2), m2), m2)
    return g_new, h_new, s_new, t_new


def _lift_tree(f: list[int], facs: list[list[int]], p: int, target: int) -> list[list[int]]:
    """Lift f = lc(f) * prod(facs) from mod p to mod target (a power of p)."""
    if len(facs) == 1:
        return [modp.normalize(f, target)]
    k = len(facs) // 2
    g = [f[-1] % p]
    for fac in facs[:k]:
        g = modp.mul(g, fac, p)
    h = [1]
    for fac in facs[k:]:
        h = modp.mul(h, fac, p)
    one, s, t = modp.xgcd(g, h, p)
    assert one == [1], "modular factors must be pairwise coprime"
    m = p
    while m < target:
        g, h, s, t = _hensel_step(modp.normalize(f, m * m), g, h, s, t, m)
        m *= m
    return _lift_tree(g, facs[:k], p, target) + _lift_tree(h, facs[k:], p, target)


def _factor_squarefree_q(f: Poly) -> list[Poly]:
    """Monic irreducible factors of a monic squarefree rational polynomial."""
    if f.degree == 1:
        return [f]
    g = _primitive_int(f)
    p = _good_prime(g)
    mod_factors = modp.factor_squarefree(modp.scale(g, pow(g[-1] % p, -1, p), p), p)
    if len(mod_factors) == 1:
        return [f.monic()]

    bound = _l2_bound(g)
    target = p
    while target <= 2 * bound:
        target *= target
    lifted = [_centered(modp.scale(h, pow(h[-1], -1, target), target), target)
              for h in _lift_tree(g, mod_factors, p, target)]

    results: list[Poly] = []
    pending = list(range(len(lifted)))
    remaining = g
    size = 1
    while 2 * size <= len(pending):
        progressed = False
        for combo in itertools.combinations(pending, size):
            prod = [remaining[-1] % target]
            for i in combo:
                prod = modp.mul(prod, lifted[i], target)
            cand = _centered(prod, target)
            if not cand or (cand[0] != 0 and (remaining[0] * remaining[-1]) % cand[0] != 0):
                continue
            cg = math.gcd(*cand)
            cand = [c // cg for c in cand]
            if cand[-1] < 0:
                cand = [-c for c in cand]
            q, r = divmod(Poly(remaining), Poly(cand))
            if not r.is_zero:
                continue
            results.append(Poly(cand).monic())
            remaining = _primitive_int(q)
            pending = [i for i in pending if i not in combo]
            progressed = True
            break
        if not progressed:
            size += 1
    if len(remaining) > 1:
        results.append(Poly(remaining).monic())
    return results


def factor_over_Q(f: Poly, cap: int = DEFAULT_POLY_CAP) -> list[tuple[Poly, int]]:
    """Complete factorization of nonzero f into monic irreducibles over Q.

    Returns [(monic irreducible, multiplicity)] sorted by degree then by
    coefficient sequence; f equals lc(f) times the product. Degrees above
    ``cap`` raise CapacityError.
    """
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    check_poly_cap(f.degree, cap)
    if f.degree == 0:
        return []
    out: list[tuple[Poly, int]] = []
    for part, mult in squarefree_decomposition(f):
        for irr in _factor_squarefree_q(part):
            out.append((irr, mult))
    out.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    return out


def is_irreducible_q(f: Poly, cap: int = DEFAULT_POLY_CAP) -> bool:
    if f.degree < 1:
        return False
    factors = factor_over_Q(f, cap)
    return len(factors) == 1 and factors[0][1] == 1


__all__ = ["factor_over_Q", "is_irreducible_q", "DEFAULT_POLY_CAP", "CapacityError", "is_prime"]
