"""Attaching sequences, finger moves and reduction: building beta arc by arc."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import accumulate
from typing import Sequence

from .bridge import BridgeSequence, Involution, bridge_sequence, gluing_involution
from .core import Basepoints, Position, SchubertForm, format_doubled, from_doubled
from .errors import DegenerateCurveError, PreconditionError
from .tracks import LITERAL, Convention


def _canonical_rotation(terms: tuple[int, ...]) -> tuple[int, ...]:
    if not terms:
        return terms
    return min(terms[i:] + terms[:i] for i in range(len(terms)))


@dataclass(frozen=True, eq=False)
class AttachingSequence:
    """Cyclic list of half-integer slots, stored doubled (so every term is odd)."""

    terms: tuple[int, ...]

    def __post_init__(self) -> None:
        for t in self.terms:
            if t % 2 != 1:
                raise PreconditionError(f"attaching sequence term {format_doubled(t)} is not a half-integer")

    @classmethod
    def of(cls, values: Sequence) -> "AttachingSequence":
        return cls(tuple(Position.of(v).twice_value for v in values))

    @property
    def values(self) -> list:
        return [from_doubled(t) for t in self.terms]

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AttachingSequence):
            return NotImplemented
        return _canonical_rotation(self.terms) == _canonical_rotation(other.terms)

    def __hash__(self) -> int:
        return hash(_canonical_rotation(self.terms))

    def __str__(self) -> str:
        return "(" + ",".join(format_doubled(t) for t in self.terms) + ")"


@dataclass(frozen=True)
class PartialBridge:
    """Boundary points (doubled) lying on the first ``stage`` bridge arcs or on y."""

    stage: int
    boundary_points: frozenset


def partial_bridge(bridge: BridgeSequence, stage: int) -> PartialBridge:
    """T_i: the y copies, the endpoints of arcs 1..i, and every copy of those endpoints."""
    bp = bridge.basepoints
    psi = bridge.psi._map
    pts = {2 * y for y in bp.y_copies}
    for a, b in bridge.arcs[:stage]:
        for e in (2 * a, 2 * b):
            pts.add(e)
            if e in psi:
                pts.add(psi[e])
            elif e == 2 * bp.x1:
                pts.add(2 * bp.x2)
            elif e == 2 * bp.x2:
                pts.add(2 * bp.x1)
    return PartialBridge(stage, frozenset(pts))


def finger_move(gamma: AttachingSequence, a, b, psi: Involution, L: int) -> AttachingSequence:
    """Push gamma off the bridge arc from a to b.

    Each term whose arc crosses (a, b) is followed by the two slots on either
    side of b, in the order that keeps the curve simple.
    """
    M = 2 * L
    A, B = Position.of(a).twice_value % M, Position.of(b).twice_value % M
    return AttachingSequence(tuple(_finger(gamma.terms, A, B, psi._map, M)))


def _finger(g: Sequence[int], A: int, B: int, psi: dict, M: int) -> list[int]:
    out: list[int] = []
    m = len(g)
    before, after = psi[(B - 1) % M], psi[(B + 1) % M]
    width = (B - A) % M
    for j, c in enumerate(g):
        h = psi[g[(j + 1) % m]]
        c_in = 0 < (c - A) % M < width
        h_in = 0 < (h - A) % M < width
        # slots are odd and A, B even, so "not inside (A, B)" means inside (B, A)
        if c_in and not h_in:
            out += (c, before, (B + 1) % M)
        elif h_in and not c_in:
            out += (c, after, (B - 1) % M)
        else:
            out.append(c)
    return out


def reduce(gamma: AttachingSequence, T: PartialBridge, psi: Involution) -> AttachingSequence:
    """Delete inessential pairs, first one found in scan order, until none is left."""
    return AttachingSequence(tuple(_reduce(list(gamma.terms), _gaps(T.boundary_points, psi.M), psi._map)))


def _gaps(T, M: int) -> list[int]:
    """gap[x]: how many points of T lie at or below x.

    Slots are odd and T is even, so the open arcs (c, h) and (h, c) avoid T
    on one side exactly when c and h sit in the same gap between T points;
    this relies on y1 = 0 belonging to T.
    """
    marks = [0] * M
    for x in T:
        marks[x % M] = 1
    return list(accumulate(marks))


def _reduce(g: list[int], gap: list[int], psi: dict) -> list[int]:
    j = 0
    while g:
        m = len(g)
        hit = None
        for i in range(j, m):
            if gap[g[i]] == gap[psi[g[(i + 1) % m]]]:
                hit = i
                break
        if hit is None:
            return g
        if m == 1:
            return []
        k = (hit + 1) % m
        if k == 0:
            del g[hit]
            del g[0]
            j = 0
        else:
            del g[hit:hit + 2]
            # earlier pairs are untouched, so the scan resumes just before the gap
            j = max(hit - 1, 0)
    return g


def alpha_position2(form: SchubertForm) -> int:
    """Doubled position of alpha: -rho - 1/2 if rho < -r, else 2r + rho + 1/2."""
    if form.rho < -form.r:
        return -2 * form.rho - 1
    return 4 * form.r + 2 * form.rho + 1


def initial_beta2(form: SchubertForm) -> int:
    """Doubled position of beta_0: -rho + 1/2 if rho < -r, else 2r + rho + 3/2."""
    if form.rho < -form.r:
        return -2 * form.rho + 1
    return 4 * form.r + 2 * form.rho + 3


@dataclass(frozen=True)
class Diagram:
    """Genus-1 doubly-pointed Heegaard diagram built from a Schubert form."""

    form: SchubertForm
    basepoints: Basepoints
    alpha: Position
    beta: AttachingSequence
    bridge: BridgeSequence
    stages: tuple = field(default=(), compare=False)
    psi_ext: Involution | None = field(default=None, compare=False, repr=False)

    def stage(self, i: int) -> AttachingSequence:
        """beta_i; only available when the diagram was built with stages."""
        if not self.stages:
            raise PreconditionError("diagram was built without stages")
        return self.stages[i]


def construct_diagram(form: SchubertForm, convention: Convention = LITERAL,
                      keep_stages: bool = False, bridge: BridgeSequence | None = None) -> Diagram:
    """beta_0, then a finger move and reduction for each bridge arc in order."""
    bridge = bridge or bridge_sequence(form, convention)
    bp = bridge.basepoints
    psi = gluing_involution(bp, extended=True)
    pmap, M = psi._map, psi.M
    g = [initial_beta2(form) % M]
    history = [AttachingSequence(tuple(g))] if keep_stages else []
    T = {2 * y for y in bp.y_copies}
    for i, (a, b) in enumerate(bridge.arcs, start=1):
        A, B = 2 * a, 2 * b
        for e in (A, B):
            T.add(e)
            if e in pmap:
                T.add(pmap[e])
            elif e == 2 * bp.x1:
                T.add(2 * bp.x2)
            elif e == 2 * bp.x2:
                T.add(2 * bp.x1)
        g = _reduce(_finger(g, A, B, pmap, M), _gaps(T, M), pmap)
        if not g:
            raise DegenerateCurveError(f"beta became empty after arc {i}",
                                       form=list(form.as_tuple()), arc=[a, b])
        if keep_stages:
            history.append(AttachingSequence(tuple(g)))
    beta = AttachingSequence(tuple(g))
    return Diagram(form, bp, Position(alpha_position2(form) % M), beta, bridge,
                   tuple(history), psi)
