"""Intersection numbers, the HS form, parameter conversions and the Alexander polynomial."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .attach import AttachingSequence, Diagram
from .core import Basepoints, HSForm, IntersectionNumbers, SchubertForm
from .diagram import BETA, ChordDiagram, alpha_beta_crossings
from .errors import (
    DegenerateError,
    FormulaInconsistencyError,
    NormalizationError,
    PipelineError,
    UnsupportedInputError,
)
from .tracks import classify_track, extension_measure, measure_to_hs

__all__ = [
    "AlexanderPolynomial", "CMForm", "HSForm", "IntersectionNumbers", "RasmussenForm",
    "alexander_polynomial", "hs_form", "intersection_numbers", "theorem_case", "to_cm", "to_rasmussen",
]


def intersection_numbers(beta: AttachingSequence, bp: Basepoints) -> IntersectionNumbers:
    """(a, b, c, d): beta's crossings with the boundary edges of P.

    a counts consecutive terms c_j in (y2, y3) with c_{j+1} in (y4, L), i.e.
    arcs that leave and re-enter through the same mu edge.
    """
    y1, y2, x1, y3, y4, x2 = (2 * v for v in bp.as_tuple())
    M = 2 * bp.L
    g = beta.terms
    m = len(g)
    a = b = c = d = 0
    for j, v in enumerate(g):
        if y2 < v < y3 and y4 < g[(j + 1) % m] < M:
            a += 1
        if y2 < v < x1 or x2 < v < M:
            b += 1
        elif x1 < v < y3 or y4 < v < x2:
            c += 1
        elif y1 < v < y2 or y3 < v < y4:
            d += 1
    return IntersectionNumbers(a, b, c, d)


def theorem_case(form: SchubertForm, inums: IntersectionNumbers) -> str:
    """Which of the five HS cases applies: "i" to "v", or "" when none does."""
    r, s, t, rho = form.as_tuple()
    a, b, c, _ = inums.as_tuple()
    if (s != 0 and t != 0) or (2 * a <= b and 2 * a <= c):
        return "i"
    if s == 0 < t and 2 * a > b:
        return "ii"
    if s > 0 == t and 2 * a > c:
        return "iii"
    if s == 0 == t and 2 * a > c >= b:
        return "iv"
    if s == 0 == t and 2 * a > b > c:
        return "v"
    return ""


def _closed_form(form: SchubertForm, inums: IntersectionNumbers, case: str) -> tuple[int, int, int, int]:
    r, rho = form.r, form.rho
    a, b, c, d = inums.as_tuple()
    low = rho < -r
    if case == "i":
        return (a, b - 2 * a, c - 2 * a, -d) if low else (a, b - 2 * a, c - 2 * a, d - 2 * a)
    if case == "ii":
        return (b - a, c - 2 * a, 2 * a - b, 2 * a - 2 * b - d if low else -2 * b + d)
    if case == "iii":
        return (c - a, 2 * a - c, b - 2 * a, a - c - d if low else d)
    mod = abs(b - c)
    if case == "iv":
        if low:
            x = (b - 2 * a) % mod
            return (c - a, b - c - x, x, 2 * a - c - d - x)
        x = (2 * a - c) % mod
        return (c - a, x, b - c - x, -b + d + x)
    if low:
        x = (2 * a - b) % mod
        return (b - a, c - b - x, x, 2 * a - 2 * b + c - d - x)
    if rho < 0:
        x = (2 * a - b) % mod
        return (b - a, c - b - x, x, -b + d + x)
    x = (b - 2 * a) % mod
    return (b - a, x, c - b - x, -b + d + x)


def hs_form(form: SchubertForm, inums: IntersectionNumbers) -> HSForm:
    """HS(r', s', t', rho') from the closed forms, cross-checked on the extended track route."""
    if form.trivial_candidate:
        raise UnsupportedInputError("rho = 0: the HS cases need a nontrivial form", form=list(form.as_tuple()))
    case = theorem_case(form, inums)
    if not case:
        raise UnsupportedInputError("no HS case applies", form=list(form.as_tuple()),
                                    inums=list(inums.as_tuple()))
    route = _track_route(form, inums)
    if case in ("iv", "v") and inums.b == inums.c:
        # the modulus |b - c| vanishes; only the track route can answer
        if route is None:
            raise UnsupportedInputError(f"case {case} with b = c and no measure on the extended track",
                                        form=list(form.as_tuple()), inums=list(inums.as_tuple()))
        return route
    hs = HSForm(*_closed_form(form, inums, case))
    if not hs.is_valid:
        raise FormulaInconsistencyError(f"case {case} gives {hs} with a negative weight", case=case,
                                        candidate=list(hs.as_tuple()),
                                        track_route=route and list(route.as_tuple()),
                                        inums=list(inums.as_tuple()))
    if route is not None and route != hs:
        raise FormulaInconsistencyError(f"case {case} gives {hs} but the track route gives {route}",
                                        case=case, candidate=list(hs.as_tuple()),
                                        track_route=list(route.as_tuple()), inums=list(inums.as_tuple()))
    return hs


def _track_route(form: SchubertForm, inums: IntersectionNumbers) -> HSForm | None:
    """classify_track then measure_to_hs, when the track is extended and its measure is known."""
    try:
        desc = classify_track(form, inums)
        if desc.family == "Sigma":
            return None
        v = extension_measure(form, inums, desc)
        if v is None:
            return None
        return measure_to_hs(desc, v, form)
    except PipelineError:
        return None


@dataclass(frozen=True)
class RasmussenForm:
    p: int
    q: int
    r: int
    s: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.p, self.q, self.r, self.s)

    def __str__(self) -> str:
        return f"K({self.p},{self.q},{self.r},{self.s})"


@dataclass(frozen=True)
class CMForm:
    a: int
    b: int
    c: int
    r: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.r)

    def __str__(self) -> str:
        return f"CM({self.a},{self.b},{self.c},{self.r})"


def to_rasmussen(hs: HSForm) -> RasmussenForm:
    p = hs.intersection_count
    if p <= 0:
        raise DegenerateError(f"{hs} has 2r'+s'+t' = 0", hs=list(hs.as_tuple()))
    return RasmussenForm(p, hs.rp, hs.sp, (-hs.rhop) % p)


def to_cm(hs: HSForm) -> CMForm:
    return CMForm(hs.rp, hs.sp, hs.tp, hs.rhop - hs.sp)


class AlexanderPolynomial:
    """Laurent polynomial stored as exponent -> nonzero coefficient."""

    def __init__(self, coefficients: Mapping[int, int]) -> None:
        self.coefficients = {e: c for e, c in sorted(coefficients.items()) if c}

    def __eq__(self, other: object) -> bool:
        if isinstance(other, AlexanderPolynomial):
            return self.coefficients == other.coefficients
        if isinstance(other, Mapping):
            return self.coefficients == {e: c for e, c in other.items() if c}
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self.coefficients.items()))

    def __call__(self, t) -> object:
        return sum(c * t ** e for e, c in self.coefficients.items())

    @property
    def is_symmetric(self) -> bool:
        return all(self.coefficients.get(-e) == c for e, c in self.coefficients.items())

    @property
    def degree(self) -> int:
        return max(self.coefficients, default=0)

    def as_pairs(self) -> list[list[int]]:
        return [[e, c] for e, c in self.coefficients.items()]

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for e, c in sorted(self.coefficients.items(), reverse=True):
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"AlexanderPolynomial({self})"


def alexander_polynomial(d: Diagram, cd: ChordDiagram) -> AlexanderPolynomial:
    """Signed census of alpha-beta crossings graded by a reference arc from y to x.

    The grading steps when beta passes through the mu edge inside the arc
    (y2, x1) u (x2, L); the constant ``kappa`` subtracted at each mu crossing
    makes the total change around beta zero, so the grading is well defined.
    """
    bp = d.basepoints
    y2, x1, y3, y4, x2 = 2 * bp.y2, 2 * bp.x1, 2 * bp.y3, 2 * bp.y4, 2 * bp.x2
    M = 2 * bp.L
    terms = cd.beta_terms

    def mu_sign(c: int) -> int:
        return 1 if y2 < c < y3 else -1 if y4 < c < M else 0

    def in_arc(c: int) -> int:
        return 1 if (y2 < c < x1 or x2 < c < M) else 0

    total_mu = sum(mu_sign(c) for c in terms)
    kappa = sum(mu_sign(c) * in_arc(c) for c in terms) * total_mu
    grades = [0] * len(terms)
    for k in range(1, len(terms)):
        grades[k] = grades[k - 1] + mu_sign(terms[k]) * (in_arc(terms[k]) - kappa)
    alpha = cd.alpha
    lo, hi = alpha.tail.key, alpha.head.key
    beta = cd.by_role(BETA)
    raw: dict[int, int] = {}
    for k in alpha_beta_crossings(cd):
        sign = 1 if lo < beta[k].tail.key < hi else -1
        raw[grades[k]] = raw.get(grades[k], 0) + sign
    raw = {e: c for e, c in raw.items() if c}
    if not raw:
        raise NormalizationError("all generators cancel", form=list(d.form.as_tuple()))
    lo_e, hi_e = min(raw), max(raw)
    if (lo_e + hi_e) % 2:
        raise NormalizationError("no unit shift makes the polynomial symmetric",
                                 raw=sorted(raw.items()))
    shift = (lo_e + hi_e) // 2
    poly = {e - shift: c for e, c in raw.items()}
    if any(poly.get(-e) != c for e, c in poly.items()):
        raise NormalizationError("polynomial is not symmetric", raw=sorted(raw.items()))
    value = sum(poly.values())
    if value == -1:
        poly = {e: -c for e, c in poly.items()}
    elif value != 1:
        raise NormalizationError(f"polynomial evaluates to {value} at t = 1", raw=sorted(raw.items()))
    return AlexanderPolynomial(poly)
