"""Polynomial arithmetic over Z/m on plain int lists (constant term first).

Internal module: this backs the rational factorization (Cantor-Zassenhaus
mod p, Hensel lifting mod p^k) and Dedekind's test. It is deliberately not
part of the public API.
"""

from __future__ import annotations

import random


def trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def normalize(a, m: int) -> list[int]:
    return trim([c % m for c in a])


def deg(a: list[int]) -> int:
    return len(a) - 1


def add(a, b, m):
    n = max(len(a), len(b))
    return trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % m for i in range(n)])


def sub(a, b, m):
    n = max(len(a), len(b))
    return trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % m for i in range(n)])


def mul(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim([c % m for c in out])


def scale(a, k, m):
    return trim([c * k % m for c in a])


def divmod_monic(a, b, m):
    """Division by a divisor with unit leading coefficient mod m."""
    if not b:
        raise ZeroDivisionError
    inv_lc = pow(b[-1], -1, m)
    rem = [c % m for c in a]
    db = deg(b)
    if deg(rem) < db:
        return [], trim(rem)
    q = [0] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i] % m
        if c == 0:
            continue
        f = c * inv_lc % m
        q[i - db] = f
        for j in range(db + 1):
            rem[i - db + j] = (rem[i - db + j] - f * b[j]) % m
    return trim(q), trim(rem)


def monic(a, p):
    if not a:
        return a
    return scale(a, pow(a[-1], -1, p), p)


def gcd(a, b, p):
    """Monic gcd over the field F_p."""
    a, b = normalize(a, p), normalize(b, p)
    while b:
        a, b = b, divmod_monic(a, b, p)[1]
    return monic(a, p)


def xgcd(a, b, p):
    """(g, s, t) over F_p with s*a + t*b = g, g monic."""
    r0, s0, t0 = normalize(a, p), [1], []
    r1, s1, t1 = normalize(b, p), [], [1]
    while r1:
        q, r = divmod_monic(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if not r0:
        return [], s0, t0
    inv = pow(r0[-1], -1, p)
    return scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)


def pow_mod(a, e: int, f, p):
    """a**e mod f over F_p (f monic)."""
    result = [1]
    base = divmod_monic(a, f, p)[1]
    while e:
        if e & 1:
            result = divmod_monic(mul(result, base, p), f, p)[1]
        base = divmod_monic(mul(base, base, p), f, p)[1]
        e >>= 1
    return result


def derivative(a, p):
    return trim([i * c % p for i, c in enumerate(a)][1:])


def _frobenius_root(a, p):
    """For a = g(x^p) over F_p, return g (valid since c^p = c in F_p)."""
    return trim([a[i] for i in range(0, len(a), p)])


def squarefree_parts(f, p) -> list[tuple[list[int], int]]:
    """Characteristic-p squarefree decomposition of monic f: [(part, mult)]."""
    out: dict[int, list[int]] = {}

    def accumulate(g, scale_mult):
        # classic Yun-style loop, valid because gcd(g, g') here is char-p aware
        c = gcd(g, derivative(g, p), p)
        w = divmod_monic(g, c, p)[0]
        i = 1
        while deg(w) > 0:
            y = gcd(w, c, p)
            z = divmod_monic(w, y, p)[0]
            if deg(z) > 0:
                key = i * scale_mult
                out[key] = mul(out.get(key, [1]), z, p) if key in out else z
            w = y
            c = divmod_monic(c, y, p)[0]
            i += 1
        if deg(c) > 0:
            accumulate(_frobenius_root(c, p), scale_mult * p)

    accumulate(monic(f, p), 1)
    return sorted(out.items(), key=lambda kv: kv[0])  # [(mult, part)] -> fix order below


def squarefree_decomposition(f, p) -> list[tuple[list[int], int]]:
    """[(monic squarefree part, multiplicity)] of monic f over F_p."""
    return [(part, mult) for mult, part in squarefree_parts(f, p)]


def _ddf(f, p) -> list[tuple[list[int], int]]:
    """Distinct-degree factorization of squarefree monic f: [(product, degree)]."""
    out = []
    h = [0, 1]
    d = 0
    while deg(f) > 2 * (d + 1) - 1 and deg(f) > 0:
        d += 1
        h = pow_mod(h, p, f, p)
        g = gcd(sub(h, [0, 1], p), f, p)
        if deg(g) > 0:
            out.append((g, d))
            f = divmod_monic(f, g, p)[0]
            h = divmod_monic(h, f, p)[1] if deg(f) > 0 else h
    if deg(f) > 0:
        out.append((f, deg(f)))
    return out


def _edf(f, d: int, p, rng: random.Random) -> list[list[int]]:
    """Equal-degree (Cantor-Zassenhaus) split of squarefree monic f into degree-d irreducibles."""
    n = deg(f)
    if n == d:
        return [f]
    while True:
        u = trim([rng.randrange(p) for _ in range(n)])
        if deg(u) < 1:
            continue
        if p == 2:
            # trace map onto F_2
            t = u
            acc = u
            for _ in range(d - 1):
                t = pow_mod(t, 2, f, p)
                acc = add(acc, t, p)
            g = gcd(acc, f, p)
        else:
            w = pow_mod(u, (p**d - 1) // 2, f, p)
            g = gcd(sub(w, [1], p), f, p)
        if 0 < deg(g) < n:
            rest = divmod_monic(f, g, p)[0]
            return _edf(g, d, p, rng) + _edf(rest, d, p, rng)


def _seed_for(f, p) -> int:
    s = p
    for c in f:
        s = (s * 1_000_003 + c + 7) % (1 << 61)
    return s


def factor_squarefree(f, p) -> list[list[int]]:
    """Monic irreducible factors of squarefree monic f over F_p, canonically sorted."""
    rng = random.Random(_seed_for(f, p))
    out = []
    for g, d in _ddf(monic(f, p), p):
        out.extend(_edf(g, d, p, rng))
    out.sort(key=lambda h: (deg(h), h))
    return out


def factor(f, p) -> list[tuple[list[int], int]]:
    """Full factorization of nonzero f over F_p as [(monic irreducible, multiplicity)]."""
    f = normalize(f, p)
    if not f:
        raise ZeroDivisionError("factor of zero polynomial")
    out = []
    for part, mult in squarefree_decomposition(f, p):
        for irr in factor_squarefree(part, p):
            out.append((irr, mult))
    out.sort(key=lambda t: (deg(t[0]), t[0]))
    return out
