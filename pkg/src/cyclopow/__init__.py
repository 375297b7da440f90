"""cyclopow: exact arithmetic for power containment in cyclotomic extensions.

The toolkit computes, for a number field K, the constant that makes
"a big power in a cyclotomic extension of K" descend to "a power in K",
in three forms (exact product over distinguished primes, a degree-only
bound, a discriminant bound), and verifies the underlying containment
statements on concrete desk-scale instances by explicit construction of
the extensions involved.
"""

__version__ = "0.1.0"
