"""Exact rational scalars: the ground field of the workbench.

Scalars are arbitrary-precision rationals in canonical reduced form
(positive denominator, gcd(|p|, q) = 1, zero is 0/1).  Values with
denominator 1 are plain Python ints; everything else is a rational from
gmpy2 (when installed) or fractions.Fraction.  The two are hash- and
equality-compatible, so mixed arithmetic is safe and exact.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

try:
    from gmpy2 import mpq as _ratio
except ImportError:  # pragma: no cover - exercised only without gmpy2
    _ratio = Fraction

Scalar = Rational  # ints, Fractions and gmpy2.mpq all qualify

_SCALAR_RE = re.compile(r"-?\d+(/\d+)?\Z")


class ScalarError(ValueError):
    """Malformed or non-canonical scalar text."""


def scalar(numerator, denominator=1) -> Scalar:
    """Exact rational p/q, normalized to int when the reduced q is 1."""
    if denominator == 1 and isinstance(numerator, int):
        return numerator
    value = _ratio(numerator, denominator)
    if value.denominator == 1:
        return int(value)
    return value


def as_scalar(value) -> Scalar:
    """Coerce an int / Fraction / mpq / scalar string to canonical form."""
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, Rational):
        return scalar(value.numerator, value.denominator)
    raise ScalarError(f"not an exact rational: {value!r}")


def render_scalar(value: Scalar) -> str:
    """Canonical text form: "p" for integers, "p/q" otherwise."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_scalar(text: str) -> Scalar:
    """Parse canonical scalar text; reject anything not in reduced form.

    Acceptance rule: the text must equal the canonical rendering of its
    value, so "2/4", "2/1", "+1", "-0" and "1/-2" are all errors.
    """
    if not isinstance(text, str) or not _SCALAR_RE.match(text):
        raise ScalarError(f"malformed scalar string: {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ScalarError(f"zero denominator: {text!r}")
        value = scalar(int(num), int(den))
    else:
        value = int(text)
    if render_scalar(value) != text:
        raise ScalarError(f"scalar not in canonical reduced form: {text!r}")
    return value
