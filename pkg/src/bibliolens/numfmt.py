"""Deterministic numeric conventions used across the toolkit.

Analyses keep full precision; these helpers produce the display forms:
percentages rounded half-up to two decimals, impact factors truncated
(not rounded) to three decimals, and expected counts rounded half-up to
the nearest integer.
"""

from __future__ import annotations

from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction


def round_half_up(x: float | Fraction) -> int:
    """Round to the nearest integer, halves away from zero."""
    if isinstance(x, Fraction):
        d = Decimal(x.numerator) / Decimal(x.denominator)
    else:
        d = Decimal(repr(float(x)))
    return int(d.quantize(Decimal("1"), rounding=ROUND_HALF_UP))


def percent(num: int, den: int) -> float:
    """Full-precision percentage; 0.0 when the denominator is zero."""
    return 100.0 * num / den if den else 0.0


def percent_display(num: int, den: int, places: int = 2) -> str:
    """Percentage rounded half-up to `places` decimals, as a string."""
    if den == 0:
        return format(Decimal(0), f".{places}f")
    q = Decimal(1).scaleb(-places)
    d = (Decimal(num) * 100 / Decimal(den)).quantize(q, rounding=ROUND_HALF_UP)
    return format(d, f".{places}f")


def ratio_display_truncated(num: int, den: int, places: int = 3) -> str:
    """Quotient truncated toward zero at `places` decimals, as a string.

    Uses integer arithmetic so the truncation is exact: 89/235 -> "0.378".
    """
    if den == 0:
        raise ZeroDivisionError("ratio with zero denominator")
    scale = 10 ** places
    whole, frac = divmod(abs(num) * scale // den, scale)
    sign = "-" if (num < 0) != (den < 0) and whole + frac > 0 else ""
    return f"{sign}{whole}.{frac:0{places}d}"
