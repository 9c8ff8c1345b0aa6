"""Action values: exact rational multiples of pi, with a float escape hatch."""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import total_ordering
from typing import Optional, Union

Number = Union[int, Fraction, float]

_PI_RE = re.compile(r"^\s*([+-]?[0-9./]*)\s*\*?\s*pi\s*$", re.IGNORECASE)


@total_ordering
class ActionValue:
    """Either ``coeff * pi`` with ``coeff`` an exact Fraction, or a plain float.

    Comparisons between two exact values are exact. Anything involving a
    float value compares numerically.
    """

    __slots__ = ("coeff", "real")

    def __init__(self, coeff: Optional[Fraction] = None, real: Optional[float] = None):
        if (coeff is None) == (real is None):
            raise ValueError("ActionValue needs exactly one of coeff, real")
        if real is not None and not math.isfinite(real):
            raise ValueError("action must be finite; use None for an unbounded window end")
        object.__setattr__(self, "coeff", None if coeff is None else Fraction(coeff))
        object.__setattr__(self, "real", None if real is None else float(real))

    def __setattr__(self, name, value):
        raise AttributeError("ActionValue is immutable")

    @classmethod
    def pi(cls, q: Union[int, Fraction, str]) -> "ActionValue":
        return cls(coeff=Fraction(q))

    @classmethod
    def from_float(cls, x: float) -> "ActionValue":
        return cls(real=x)

    @property
    def exact(self) -> bool:
        return self.coeff is not None

    def __float__(self) -> float:
        return float(self.coeff) * math.pi if self.exact else self.real

    def __eq__(self, other):
        if not isinstance(other, ActionValue):
            return NotImplemented
        if self.exact and other.exact:
            return self.coeff == other.coeff
        return float(self) == float(other)

    def __lt__(self, other):
        if not isinstance(other, ActionValue):
            return NotImplemented
        if self.exact and other.exact:
            return self.coeff < other.coeff
        return float(self) < float(other)

    def __hash__(self):
        return hash(float(self))

    def __add__(self, other):
        if not isinstance(other, ActionValue):
            return NotImplemented
        if self.exact and other.exact:
            return ActionValue(coeff=self.coeff + other.coeff)
        return ActionValue(real=float(self) + float(other))

    def __neg__(self):
        return ActionValue(coeff=-self.coeff) if self.exact else ActionValue(real=-self.real)

    def __sub__(self, other):
        if not isinstance(other, ActionValue):
            return NotImplemented
        return self + (-other)

    def scale(self, k: Number) -> "ActionValue":
        if self.exact and not isinstance(k, float):
            return ActionValue(coeff=self.coeff * k)
        return ActionValue(real=float(self) * k)

    def __repr__(self):
        return f"ActionValue({self})"

    def __str__(self):
        if not self.exact:
            return repr(self.real)
        if self.coeff == 0:
            return "0"
        return f"{self.coeff}*pi"

    def to_json(self) -> dict:
        if self.exact:
            return {"exact": True, "pi_coeff": str(self.coeff), "decimal": float(self)}
        return {"exact": False, "decimal": self.real}


def parse_rational(text: str) -> Fraction:
    """Parse ``"3/2"``, ``"1.5"`` or ``"2"`` as an exact Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def parse_action(text: str) -> Optional[ActionValue]:
    """Parse a command-line action.

    ``"3/2pi"``, ``"3/2*pi"``, ``"0.9pi"``, ``"pi"`` give exact values;
    a bare decimal such as ``"2.83"`` gives an inexact float value;
    ``"inf"``/``"-inf"`` give None (an unbounded window end).
    """
    s = text.strip()
    if s.lower() in ("inf", "+inf", "-inf", "infinity", "-infinity"):
        return None
    m = _PI_RE.match(s)
    if m:
        c = m.group(1)
        if c in ("", "+"):
            return ActionValue.pi(1)
        if c == "-":
            return ActionValue.pi(-1)
        return ActionValue(coeff=parse_rational(c))
    if "/" in s:
        raise ValueError(f"rational actions need a pi suffix: {text!r}")
    try:
        return ActionValue(real=float(s))
    except ValueError as exc:
        raise ValueError(f"cannot parse action {text!r}") from exc


def parse_real(text: str) -> float:
    """Numeric value of a string that may carry a ``pi`` suffix."""
    a = parse_action(text)
    if a is None:
        raise ValueError(f"expected a finite number, got {text!r}")
    return float(a)
