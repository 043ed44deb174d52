"""Independent geometric check: realize bridge, beta and alpha as chords in P.

Boundary points are keyed by ``(q, rank)`` where ``q`` is the position in
quarter units. Bridge endpoints and the alpha endpoints have rank 0; the
several beta endpoints sharing a half-integer slot get ranks 1..K, in the
order fixed by ``_resolve_slots``. Sorting keys gives the clockwise order, so
two chords cross iff their endpoint ranks interleave.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .attach import AttachingSequence, Diagram
from .bridge import gluing_involution
from .core import Basepoints
from .errors import RealizationError

BRIDGE, BETA, ALPHA = "bridge", "beta", "alpha"


@dataclass(frozen=True, order=True)
class BoundaryPoint:
    """Exact point of the boundary of P: quarter-unit base ``q`` plus a rank inside its slot."""

    q: int
    rank: int = 0
    count: int = 0

    @property
    def value(self) -> Fraction:
        if self.count == 0:
            return Fraction(self.q, 4)
        return Fraction(self.q, 4) - Fraction(1, 4) + Fraction(self.rank, 2 * (self.count + 1))

    @property
    def key(self) -> tuple[int, int]:
        return (self.q, self.rank)


@dataclass(frozen=True)
class Chord:
    tail: BoundaryPoint
    head: BoundaryPoint
    role: str


@dataclass(frozen=True)
class ChordDiagram:
    L: int
    basepoints: Basepoints
    chords: tuple
    beta_terms: tuple

    def by_role(self, role: str) -> list[Chord]:
        return [c for c in self.chords if c.role == role]

    @property
    def alpha(self) -> Chord:
        return self.by_role(ALPHA)[0]


def alpha_chord(bp: Basepoints) -> Chord:
    """alpha as the chord from y2 - 1/4 to its glued copy y3 + 1/4."""
    return Chord(BoundaryPoint(4 * bp.y2 - 1), BoundaryPoint(4 * bp.y3 + 1), ALPHA)


def realize(d: Diagram, stage: int | None = None, beta: AttachingSequence | None = None) -> ChordDiagram:
    """Chord model of the diagram, or of stage ``stage`` (its beta and partial bridge)."""
    bp = d.basepoints
    psi = d.psi_ext or gluing_involution(bp, extended=True)
    if beta is None:
        beta = d.beta if stage is None else d.stage(stage)
    arcs = d.bridge.arcs if stage is None else d.bridge.arcs[:stage]
    terms = beta.terms
    pts = _resolve_slots(terms, psi._map, psi.M)
    m = len(terms)
    chords = [Chord(BoundaryPoint(4 * a), BoundaryPoint(4 * b), BRIDGE) for a, b in arcs]
    chords += [Chord(pts[(k, 0)], pts[((k + 1) % m, 1)], BETA) for k in range(m)]
    chords.append(alpha_chord(bp))
    return ChordDiagram(bp.L, bp, tuple(chords), tuple(terms))


def _resolve_slots(terms: Sequence[int], psi: dict, M: int) -> dict:
    """Place every beta endpoint. (k, 0) is the tail of chord k, (k, 1) the head of chord k-1.

    Both ends of one chord in the same slot, or two strands that never diverge,
    mean the sequence is not a simple closed curve.
    """
    m = len(terms)
    if m == 0:
        raise RealizationError("empty attaching sequence")
    # endpoint 2k is the tail of chord k, 2k + 1 the head of chord k - 1
    N = 2 * m
    slot = [0] * N
    for k, c in enumerate(terms):
        slot[2 * k] = c
        slot[2 * k + 1] = psi[c]
    far = [0] * N
    for k in range(m):
        far[2 * k] = 2 * ((k + 1) % m) + 1
        far[2 * k + 1] = 2 * ((k - 1) % m)
    for k in range(m):
        if slot[2 * k] == slot[far[2 * k]]:
            raise RealizationError(f"beta chord {k} has both ends in one slot", chord=k)

    # Following the curve from an endpoint: cross its chord to the far end,
    # then step through the glued edge (far end xor 1). An endpoint's "word"
    # lists the clockwise distance from each slot visited to the far end of
    # the chord leaving it. Within a slot, strands are ordered by word, larger
    # distance first; this is the nested-strand order. Words are ranked by
    # prefix doubling, with the slot leading the key so that all ranks
    # distinct means no ties inside any slot.
    succ = [f ^ 1 for f in far]
    rank = _dense([slot[i] * M + (M - 1 - (slot[far[i]] - slot[i]) % M) for i in range(N)])
    span = 1
    while span < N and len(set(rank)) < N:
        rank = _dense([rank[i] * N + rank[succ[i]] for i in range(N)])
        succ = [succ[j] for j in succ]
        span *= 2
    groups: dict[int, list] = {}
    for i in range(N):
        groups.setdefault(slot[i], []).append((rank[i], i))
    pts = {}
    for S, lst in groups.items():
        lst.sort()
        K = len(lst)
        for j, (r, i) in enumerate(lst):
            if j and lst[j - 1][0] == r:
                a = lst[j - 1][1]
                raise RealizationError("two beta strands run parallel forever",
                                       strands=[[a // 2, a % 2], [i // 2, i % 2]])
            pts[(i // 2, i % 2)] = BoundaryPoint(2 * S, j + 1, K)
    return pts


def _dense(keys: list[int]) -> list[int]:
    """Replace keys by their rank among the distinct values."""
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def _ranked(chords: Sequence[Chord]) -> list[tuple[int, int]]:
    """Chords as (lo, hi) indices into the sorted list of all their endpoints."""
    ends = [((c.tail.q, c.tail.rank), (c.head.q, c.head.rank)) for c in chords]
    keys = sorted({e for pair in ends for e in pair})
    idx = {k: i for i, k in enumerate(keys)}
    if len(keys) != 2 * len(chords):
        raise RealizationError("two chords share an endpoint")
    out = []
    for t, h in ends:
        a, b = idx[t], idx[h]
        out.append((a, b) if a < b else (b, a))
    return out


def count_crossings(chords: Sequence[Chord]) -> int:
    """Number of interleaving pairs, in O(N log N).

    A chord (a, b) crosses (c, d) with c in (a, b) iff d > b, so crossings
    are the left endpoints inside each chord minus the chords nested in it.
    """
    spans = _ranked(chords)
    N = 2 * len(spans)
    is_left = [0] * (N + 1)
    for a, _ in spans:
        is_left[a] = 1
    prefix = [0] * (N + 1)
    for i in range(N):
        prefix[i + 1] = prefix[i] + is_left[i]
    tree = [0] * (N + 1)

    def add(i: int) -> None:
        i += 1
        while i <= N:
            tree[i] += 1
            i += i & -i

    def upto(i: int) -> int:
        # inserted lefts with index < i
        s = 0
        while i > 0:
            s += tree[i]
            i -= i & -i
        return s

    total = 0
    for a, b in sorted(spans, key=lambda s: s[1]):
        inside = prefix[b] - prefix[a + 1]
        nested = upto(b) - upto(a + 1)
        total += inside - nested
        add(a)
    return total


def is_noncrossing(chords: Sequence[Chord]) -> bool:
    """Stack test: chords nest properly iff every close matches the latest open."""
    spans = _ranked(chords)
    closer = {}
    for i, (a, b) in enumerate(spans):
        closer[a] = (i, True)
        closer[b] = (i, False)
    stack: list[int] = []
    for pos in range(2 * len(spans)):
        i, opening = closer[pos]
        if opening:
            stack.append(i)
        elif not stack or stack.pop() != i:
            return False
    return True


@dataclass
class EmbeddingReport:
    beta_crossings: int
    bridge_crossings: int
    beta_bridge_crossings: int
    closed: bool
    homology: tuple[int, int]
    stage: int | None = None
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (self.beta_crossings == 0 and self.bridge_crossings == 0
                and self.beta_bridge_crossings == 0 and self.closed
                and self.homology[0] == 0 and abs(self.homology[1]) == 1)

    def failures(self) -> list[str]:
        out = []
        if self.beta_crossings:
            out.append(f"beta crosses itself {self.beta_crossings} times")
        if self.bridge_crossings:
            out.append(f"bridge crosses itself {self.bridge_crossings} times")
        if self.beta_bridge_crossings:
            out.append(f"beta crosses the bridge {self.beta_bridge_crossings} times")
        if not self.closed:
            out.append("beta chords do not close up into one curve")
        if self.homology[0] != 0 or abs(self.homology[1]) != 1:
            out.append(f"beta has homology {self.homology}, expected (0, +-1)")
        return out

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "beta_crossings": self.beta_crossings,
            "bridge_crossings": self.bridge_crossings,
            "beta_bridge_crossings": self.beta_bridge_crossings,
            "closed": self.closed,
            "homology": list(self.homology),
        }


def homology_class(terms: Sequence[int], bp: Basepoints) -> tuple[int, int]:
    """Signed crossings of beta with the lambda and mu identification circles."""
    y1, y2, _, y3, y4, _ = (2 * v for v in bp.as_tuple())
    M = 2 * bp.L
    lam = mu = 0
    for c in terms:
        if y1 < c < y2:
            lam += 1
        elif y3 < c < y4:
            lam -= 1
        elif y2 < c < y3:
            mu += 1
        elif y4 < c < M:
            mu -= 1
    return lam, mu


def _closes(cd: ChordDiagram, psi: dict) -> bool:
    """Follow head -> glued copy -> next tail; a single cycle through every beta chord."""
    beta = cd.by_role(BETA)
    tails = {c.tail.key: k for k, c in enumerate(beta)}
    k, visited = 0, 0
    for _ in range(len(beta)):
        h = beta[k].head
        # gluing reverses the edge, so rank i of K maps to rank K + 1 - i
        image = (2 * psi[h.q // 2], h.count + 1 - h.rank)
        nxt = tails.get(image)
        visited += 1
        if nxt is None:
            return False
        k = nxt
        if k == 0:
            break
    return k == 0 and visited == len(beta)


def validate_embedding(cd: ChordDiagram, d: Diagram, stage: int | None = None) -> EmbeddingReport:
    """Crossing counts, closure and homology of the realized beta."""
    psi = (d.psi_ext or gluing_involution(d.basepoints, extended=True))._map
    beta = cd.by_role(BETA)
    bridge = cd.by_role(BRIDGE)
    if is_noncrossing(beta + bridge):
        cb = cr = both = 0
    else:
        cb = count_crossings(beta)
        cr = count_crossings(bridge)
        both = count_crossings(beta + bridge) - cb - cr
    return EmbeddingReport(cb, cr, both, _closes(cd, psi), homology_class(cd.beta_terms, cd.basepoints), stage)


def alpha_beta_crossings(cd: ChordDiagram) -> list[int]:
    """Indices of beta chords that cross alpha, in beta order."""
    alpha = cd.alpha
    lo, hi = sorted((alpha.tail.key, alpha.head.key))
    out = []
    for k, c in enumerate(cd.by_role(BETA)):
        t, h = (c.tail.q, c.tail.rank), (c.head.q, c.head.rank)
        if t in (lo, hi) or h in (lo, hi):
            raise RealizationError("beta touches alpha at an endpoint", chord=k)
        if (lo < t < hi) != (lo < h < hi):
            out.append(k)
    return out


def count_alpha_beta(cd: ChordDiagram) -> int:
    return len(alpha_beta_crossings(cd))
