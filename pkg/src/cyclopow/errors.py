"""Exception types shared across the toolkit.

Errors are loud by design: the toolkit never silently truncates a
computation or reports an unproven quantity.
"""


class CapacityError(Exception):
    """A computation would exceed a configured degree cap."""

    def __init__(self, message: str, *, needed: int | None = None, cap: int | None = None):
        super().__init__(message)
        self.needed = needed
        self.cap = cap


class NotMaximalOrderError(Exception):
    """Dedekind's test failed at p: the equation order is not provably p-maximal.

    Splitting primes through a non-maximal order would be unsound, so
    operations that depend on it refuse to run instead of guessing.
    """

    def __init__(self, prime: int, context: str = ""):
        msg = f"order not provably maximal at p={prime}"
        if context:
            msg += f" ({context})"
        super().__init__(msg)
        self.prime = prime


class ReducibleError(ValueError):
    """A polynomial that must be irreducible has a proper factor (the witness)."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class PrecisionError(Exception):
    """Interval arithmetic could not separate two sides at the precision limit."""
