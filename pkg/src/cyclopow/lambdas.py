"""Distinguished primes and the three power-descent constants of a field.

For a number field K the constant comes in three forms: the exact product
over distinguished primes (lambda_exact), a bound depending only on the
degree (lambda_degree), and a bound from the field discriminant
(lambda_disc). An odd prime p is distinguished when p-1 divides the gcd
of its ramification indices; the exact constant is

    4^{lambda_2} * prod over distinguished p of p^{lambda_p},

with lambda_p = nu_p(eps_p) + 1 and lambda_2 = nu_2(eps_2) + 3, and 4
replaceable by 2 when i is in K.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arith import factorint, primes_upto
from .errors import NotMaximalOrderError, PrecisionError
from .intervals import log_interval
from .numberfield import NumberField, has_i
from .polyarith import DEFAULT_POLY_CAP, discriminant, nu
from .ramification import epsilon_odd, epsilon_two, field_discriminant

DEFAULT_PRECISION_BITS = 4096


def candidate_distinguished_primes(K: NumberField) -> list[int]:
    """Odd primes dividing disc(f): a finite sound superset of the ramified ones."""
    disc = discriminant(K.defining_poly)
    assert isinstance(disc, Fraction) and disc.denominator == 1
    return [p for p in factorint(int(disc)) if p % 2 == 1]


def is_distinguished(p: int, K: NumberField) -> bool:
    """True iff (p-1) divides the gcd of the ramification indices above p."""
    if p < 3:
        raise ValueError("distinguished primes are odd")
    return epsilon_odd(p, K) % (p - 1) == 0


def lambda_p(p: int, K: NumberField, *, poly_cap: int = DEFAULT_POLY_CAP) -> int:
    """The exponent contributed by p: nu_p(eps_p)+1 if distinguished, nu_2(eps_2)+3 at 2, else 0."""
    if p == 2:
        return nu(2, epsilon_two(K, poly_cap=poly_cap)) + 3
    if p in candidate_distinguished_primes(K) and is_distinguished(p, K):
        return nu(p, epsilon_odd(p, K)) + 1
    return 0


def lambda_exact(K: NumberField, i_variant: bool = False, *, poly_cap: int = DEFAULT_POLY_CAP) -> int:
    """The exact constant 4^{lambda_2} * prod p^{lambda_p} (2^{lambda_2} with i_variant)."""
    if i_variant and not has_i(K, poly_cap=poly_cap):
        raise ValueError("the i-variant constant requires i in K")
    two = 2 if i_variant else 4
    result = two ** lambda_p(2, K, poly_cap=poly_cap)
    for p in candidate_distinguished_primes(K):
        if is_distinguished(p, K):
            result *= p ** (nu(p, epsilon_odd(p, K)) + 1)
    return result


def lambda_degree(d: int) -> int:
    """The degree-only bound, evaluated in exact integer arithmetic.

    64 * 4^{floor(log2 d)} * prod over odd primes p <= d+1 of p^{k_p+1},
    where k_p is the largest k with p^k * (p-1) <= d.
    """
    if d < 1:
        raise ValueError("lambda_degree needs d >= 1")
    k2 = 0
    power = 2
    while power <= d:
        k2 += 1
        power *= 2
    result = 64 * 4**k2
    for p in primes_upto(d + 1):
        if p == 2:
            continue
        k = 0
        while p ** (k + 1) * (p - 1) <= d:
            k += 1
        result *= p ** (k + 1)
    return result


def degree_estimate_holds(d: int, *, max_bits: int = DEFAULT_PRECISION_BITS) -> bool:
    """Certified check that ln(lambda_degree(d)) <= d + 9d/ln(d+1).

    Decided with rational interval arithmetic; returns True/False only
    when the inequality is separated at some precision, and raises
    PrecisionError if max_bits is reached without separation.
    """
    if d < 1:
        raise ValueError("degree_estimate_holds needs d >= 1")
    big = lambda_degree(d)
    bits = 64
    while bits <= max_bits:
        left = log_interval(big, bits)
        lnd = log_interval(d + 1, bits)
        rhs_lo = d + Fraction(9 * d) / lnd.hi
        rhs_hi = d + Fraction(9 * d) / lnd.lo
        if left.hi <= rhs_lo:
            return True
        if left.lo > rhs_hi:
            return False
        bits *= 2
    raise PrecisionError(f"could not separate the estimate for d={d} at {max_bits} bits")


def lambda_disc(K: NumberField, i_variant: bool = False, *, poly_cap: int = DEFAULT_POLY_CAP) -> int:
    """The discriminant bound 64*|D_K| (2*|D_K| with i_variant)."""
    if i_variant and not has_i(K, poly_cap=poly_cap):
        raise ValueError("the i-variant constant requires i in K")
    dd = field_discriminant(K)
    return (2 if i_variant else 64) * abs(dd.field_disc)


@dataclass
class LambdaReport:
    """Everything the toolkit can prove about one field's constants."""

    field_label: str
    degree: int
    field_disc: int | None = None
    distinguished: list[tuple[int, int, int]] = field(default_factory=list)  # (p, eps_p, lambda_p)
    epsilon2: int | None = None
    lambda2: int | None = None
    lambda_exact: int | None = None
    lambda_exact_i_variant: int | None = None
    lambda_degree: int = 0
    lambda_disc: int | None = None
    lambda_disc_i_variant: int | None = None
    flags: dict = field(default_factory=dict)
    errors: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "field_label": self.field_label,
            "degree": self.degree,
            "field_disc": self.field_disc,
            "distinguished": [list(t) for t in self.distinguished],
            "epsilon2": self.epsilon2,
            "lambda2": self.lambda2,
            "lambda_exact": self.lambda_exact,
            "lambda_exact_i_variant": self.lambda_exact_i_variant,
            "lambda_degree": self.lambda_degree,
            "lambda_disc": self.lambda_disc,
            "lambda_disc_i_variant": self.lambda_disc_i_variant,
            "flags": dict(sorted(self.flags.items())),
            "errors": dict(sorted(self.errors.items())),
        }


def build_report(
    K: NumberField,
    label: str | None = None,
    *,
    expected_disc: int | None = None,
    poly_cap: int = DEFAULT_POLY_CAP,
) -> LambdaReport:
    """Assemble a full per-field report; NotMaximalOrder failures become markers."""
    report = LambdaReport(
        field_label=label if label is not None else str(K.defining_poly),
        degree=K.absolute_degree,
        lambda_degree=lambda_degree(K.absolute_degree),
    )
    try:
        report.field_disc = field_discriminant(K).field_disc
    except NotMaximalOrderError as e:
        report.errors["field_disc"] = str(e)

    odd_ok = True
    for p in candidate_distinguished_primes(K):
        try:
            eps = epsilon_odd(p, K)
        except NotMaximalOrderError as e:
            report.errors[f"epsilon_{p}"] = str(e)
            odd_ok = False
            continue
        if eps % (p - 1) == 0:
            report.distinguished.append((p, eps, nu(p, eps) + 1))

    try:
        report.epsilon2 = epsilon_two(K, poly_cap=poly_cap)
        report.lambda2 = nu(2, report.epsilon2) + 3
    except NotMaximalOrderError as e:
        report.errors["epsilon2"] = str(e)

    if odd_ok and report.lambda2 is not None:
        odd_part = 1
        for p, _, lam in report.distinguished:
            odd_part *= p**lam
        report.lambda_exact = 4**report.lambda2 * odd_part
        if has_i(K, poly_cap=poly_cap):
            report.lambda_exact_i_variant = 2**report.lambda2 * odd_part

    if report.field_disc is not None:
        report.lambda_disc = 64 * abs(report.field_disc)
        if has_i(K, poly_cap=poly_cap):
            report.lambda_disc_i_variant = 2 * abs(report.field_disc)

    flags = report.flags
    if report.lambda_exact is not None and report.lambda_disc is not None:
        flags["exact_divides_disc"] = report.lambda_disc % report.lambda_exact == 0
    if report.lambda_exact is not None:
        flags["exact_divides_degree"] = report.lambda_degree % report.lambda_exact == 0
    if report.lambda_exact_i_variant is not None and report.lambda_disc_i_variant is not None:
        flags["i_variant_divides_disc"] = (
            report.lambda_disc_i_variant % report.lambda_exact_i_variant == 0
        )
    if report.field_disc is not None:
        flags["distinguished_divide_disc"] = all(
            report.field_disc % p == 0 for p, _, _ in report.distinguished
        )
    if expected_disc is not None:
        flags["expected_disc_match"] = (
            report.field_disc == expected_disc if report.field_disc is not None else None
        )
    return report
