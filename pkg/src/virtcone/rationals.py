"""Exact rational scalars.

All coefficients in the computation path are exact rationals; gmpy2's mpq
is used when available, with fractions.Fraction as a pure-Python fallback.
Both keep denominators positive and fractions reduced.
"""

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover
    from fractions import Fraction as Q  # type: ignore[assignment]

QLike = object


def rat(num, den=1):
    """Build a rational from integers or a 'a/b' string."""
    if isinstance(num, str):
        if "/" in num:
            a, b = num.split("/")
            return Q(int(a), int(b))
        return Q(int(num))
    return Q(num, den)


def rat_str(q) -> str:
    """Lossless string form, 'a' or 'a/b' with b > 0."""
    return str(q)
