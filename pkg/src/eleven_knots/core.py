"""Foundational value types: Schubert forms, positions on the parameter circle,
basepoint tables and the identification of boundary copies.

Positions live on the circle [0, L) with L = 2n + 4. They are integers or
half-integers, so the pipeline stores them as *doubled* integers
(``twice_value``) and does all arithmetic modulo 2L. Nothing in the
pipeline uses floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import InvalidInputError, StructuralInconsistencyError

Number = Union[int, Fraction, "Position"]


@dataclass(frozen=True, order=True)
class SchubertForm:
    """The integer 4-tuple S(r, s, t, rho) of a (1,1) knot."""

    r: int
    s: int
    t: int
    rho: int

    def __post_init__(self) -> None:
        for name in ("r", "s", "t", "rho"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise InvalidInputError(f"{name} must be an integer, got {value!r}", field=name)
        for name in ("r", "s", "t"):
            if getattr(self, name) < 0:
                raise InvalidInputError(
                    f"{name} must be non-negative, got {getattr(self, name)}", field=name
                )

    @classmethod
    def parse(cls, text: str) -> "SchubertForm":
        """Parse ``"r,s,t,rho"``; raises InvalidInputError on malformed text."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 4:
            raise InvalidInputError(f"expected four comma-separated integers, got {text!r}")
        try:
            values = [int(p) for p in parts]
        except ValueError:
            raise InvalidInputError(f"expected four comma-separated integers, got {text!r}") from None
        return cls(*values)

    @property
    def trivial_candidate(self) -> bool:
        """rho = 0 forms are never nontrivial knots."""
        return self.rho == 0

    @property
    def strand_count(self) -> int:
        """N = 2r + s + t + 1."""
        return 2 * self.r + self.s + self.t + 1

    @property
    def rotation(self) -> Fraction:
        """The rotation 2*pi*rho/N, returned as the fraction rho/N of a full turn."""
        return Fraction(self.rho, self.strand_count)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.r, self.s, self.t, self.rho)

    def __str__(self) -> str:
        return f"S({self.r},{self.s},{self.t},{self.rho})"


@dataclass(frozen=True, order=True)
class Position:
    """A point of the parameter circle, stored as twice its value."""

    twice_value: int

    @classmethod
    def of(cls, value: Number | str | float) -> "Position":
        """Build from an int, Fraction, half-integer float or decimal string."""
        if isinstance(value, Position):
            return value
        if isinstance(value, str):
            value = Fraction(value)
        doubled = Fraction(value) * 2
        if doubled.denominator != 1:
            raise InvalidInputError(f"{value!r} is not an integer or half-integer")
        return cls(int(doubled))

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice_value, 2)

    @property
    def is_integer(self) -> bool:
        return self.twice_value % 2 == 0

    def __str__(self) -> str:
        return format_doubled(self.twice_value)


def format_doubled(x2: int) -> str:
    """Render a doubled integer as ``"13"`` or ``"13.5"``."""
    return str(x2 // 2) if x2 % 2 == 0 else f"{x2 // 2}.5"


def from_doubled(x2: int) -> int | Fraction:
    return x2 // 2 if x2 % 2 == 0 else Fraction(x2, 2)


def _as_fraction(x: Number) -> Fraction:
    if isinstance(x, Position):
        return x.value
    return Fraction(x)


BASEPOINT_NAMES = ("y1", "y2", "x1", "y3", "y4", "x2")


@dataclass(frozen=True)
class Basepoints:
    """Integer positions of the six basepoint copies on the boundary of P."""

    y1: int
    y2: int
    x1: int
    y3: int
    y4: int
    x2: int
    L: int
    n: int

    def as_tuple(self) -> tuple[int, int, int, int, int, int]:
        return (self.y1, self.y2, self.x1, self.y3, self.y4, self.x2)

    def named(self) -> dict[str, int]:
        return dict(zip(BASEPOINT_NAMES, self.as_tuple()))

    @property
    def y_copies(self) -> tuple[int, int, int, int]:
        return (self.y1, self.y2, self.y3, self.y4)

    @property
    def x_copies(self) -> tuple[int, int]:
        return (self.x1, self.x2)

    def glue_scaled(self, v: int, k: int) -> int:
        """Continuous gluing of P's edges on a coordinate scaled by ``k``.

        The lambda edges (y1,y2) and (y3,y4) are matched by x -> y1+y4-x and
        the mu edges (y2,y3) and (y4,L) by x -> y3+y4-x. ``v`` must lie in
        the interior of an edge or be one of x1, x2 (which swap).
        """
        y1, y2, _, y3, y4, _ = (k * p for p in self.as_tuple())
        M = k * self.L
        v %= M
        if y1 < v < y2 or y3 < v < y4:
            return (y1 + y4 - v) % M
        if y2 < v < y3 or y4 < v < M:
            return (y3 + y4 - v) % M
        raise ValueError(f"{v}/{k} is a y-copy; the gluing is not a function there")

    def glue2(self, x2: int) -> int:
        """Continuous gluing on doubled coordinates."""
        return self.glue_scaled(x2, 2)


def basepoints(form: SchubertForm, n: int) -> Basepoints:
    """Integer representatives of y1, y2, x1, y3, y4, x2 for a form with n arcs."""
    r, s, t, rho = form.as_tuple()
    if rho < -r:
        values = (0, -rho, 2 * r + s - rho + 1, 4 * r + s + t - rho + 2,
                  4 * r + s + t - 2 * rho + 2, 6 * r + s + 2 * t - 2 * rho + 3)
    else:
        values = (0, 2 * r + rho + 1, 4 * r + s + rho + 2, 6 * r + s + t + rho + 3,
                  8 * r + s + t + 2 * rho + 4, 10 * r + s + 2 * t + 2 * rho + 5)
    L = 2 * n + 4
    chain = values + (L,)
    if any(a >= b for a, b in zip(chain, chain[1:])):
        raise StructuralInconsistencyError(
            f"basepoints {values} are not strictly increasing inside [0, {L})",
            form=list(form.as_tuple()), basepoints=list(values), L=L,
        )
    return Basepoints(*values, L=L, n=n)


def interval_member(x: Number, a: Number, b: Number, L: int) -> bool:
    """True iff x lies in the open clockwise interval (a, b) of the circle of length L.

    When a = b the interval is empty. For b < a it is {x : x > a or x < b}.
    """
    x, a, b = _as_fraction(x), _as_fraction(a), _as_fraction(b)
    return 0 < (x - a) % L < (b - a) % L


def in_interval2(x2: int, a2: int, b2: int, M: int) -> bool:
    """interval_member on doubled coordinates (M = 2L)."""
    return 0 < (x2 - a2) % M < (b2 - a2) % M


def identified_copies(p: Number, bp: Basepoints) -> set:
    """All boundary positions naming the same point of the torus as ``p``."""
    x2 = Position.of(_as_fraction(p) % bp.L).twice_value
    if x2 in [2 * y for y in bp.y_copies]:
        return set(bp.y_copies)
    if x2 in (2 * bp.x1, 2 * bp.x2):
        return {bp.x1, bp.x2}
    return {from_doubled(x2), from_doubled(bp.glue2(x2))}


@dataclass(frozen=True)
class IntersectionNumbers:
    """Counts (a, b, c, d) of an attaching sequence against the boundary of P."""

    a: int
    b: int
    c: int
    d: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)


@dataclass(frozen=True)
class HSForm:
    """Heegaard diagram Schubert form HS(r', s', t', rho')."""

    rp: int
    sp: int
    tp: int
    rhop: int

    @property
    def is_valid(self) -> bool:
        return min(self.rp, self.sp, self.tp) >= 0

    @property
    def intersection_count(self) -> int:
        """2r' + s' + t', the number of alpha-beta crossings it predicts."""
        return 2 * self.rp + self.sp + self.tp

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.rp, self.sp, self.tp, self.rhop)

    def __str__(self) -> str:
        return f"HS({self.rp},{self.sp},{self.tp},{self.rhop})"
