"""Exact rational arithmetic helpers.

All numeric work in this package is done with exact rationals: arbitrary
precision integers for numerator and denominator, always in lowest terms with
a positive denominator.  gmpy2's ``mpq`` provides that contract and is much
faster on huge operands; ``fractions.Fraction`` is the drop-in fallback.
"""

from __future__ import annotations

import re

try:
    from gmpy2 import mpq as Rat
    from gmpy2 import mpz as _Int

    BACKEND = "gmpy2"
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as Rat

    _Int = int
    BACKEND = "fractions"

__all__ = [
    "Rat",
    "BACKEND",
    "rat",
    "parse_rational",
    "format_rational",
    "is_integer",
    "min_power_at_least",
    "max_power_at_most",
]

ZERO = Rat(0)
ONE = Rat(1)

_INT_RE = re.compile(r"[+-]?\d+")


def rat(num, den=1):
    """Build an exact rational; rejects a zero denominator."""
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    return Rat(num, den)


def parse_rational(text: str, *, lenient: bool = False):
    """Parse the canonical ``p/q`` form.

    With ``lenient`` a bare integer is also accepted (used for command line
    arguments; the file codec is strict).
    """
    s = text.strip()
    if "/" in s:
        parts = s.split("/")
        if len(parts) != 2:
            raise ValueError(f"malformed rational {text!r}")
        p_str, q_str = parts
    else:
        if not lenient:
            raise ValueError(f"malformed rational {text!r} (expected p/q)")
        p_str, q_str = s, "1"
    p_str, q_str = p_str.strip(), q_str.strip()
    if not (_INT_RE.fullmatch(p_str) and _INT_RE.fullmatch(q_str)):
        raise ValueError(f"malformed rational {text!r}")
    # _Int instead of int(): certified instances carry operands far past
    # CPython's int-from-string digit cap
    p = _Int(p_str)
    q = _Int(q_str)
    if q == 0:
        raise ValueError(f"zero denominator in rational {text!r}")
    return Rat(p, q)


def format_rational(r) -> str:
    """Canonical ``p/q`` output, lowest terms, positive denominator."""
    return f"{r.numerator}/{r.denominator}"


def is_integer(r) -> bool:
    return r.denominator == 1


def min_power_at_least(base, target) -> int:
    """Smallest k >= 0 with base**k >= target.  Requires base > 1.

    This is the exact integer ceil of log_base(target) for target >= 1;
    no floating point logarithms are involved.
    """
    base = Rat(base)
    target = Rat(target)
    if base <= 1:
        raise ValueError("base must exceed 1")
    if target <= 1:
        return 0
    # exponential search for an upper bracket
    hi = 1
    p = base
    while p < target:
        hi *= 2
        p = p * p
    lo = hi // 2  # base**lo < target (or lo == 0)
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if base ** mid >= target:
            hi = mid
        else:
            lo = mid
    return hi


def max_power_at_most(base, limit) -> int:
    """Largest d >= 0 with base**d <= limit.  Requires base > 1, limit >= 1."""
    base = Rat(base)
    limit = Rat(limit)
    if base <= 1:
        raise ValueError("base must exceed 1")
    if limit < 1:
        raise ValueError("limit must be at least 1")
    if base > limit:
        return 0
    hi = 1
    p = base
    while p <= limit:
        hi *= 2
        p = base ** hi
    lo = hi // 2  # base**lo <= limit
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if base ** mid <= limit:
            lo = mid
        else:
            hi = mid
    return lo
