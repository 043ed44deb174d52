"""Measured train tracks.

Two layers live here:

* a combinatorial kernel (``TrackGraph``, ``Measure``, ``apply_move``) that
  implements slides, splits and folds on tracks with stops, and
* the closed-form measures used by the pipeline: the Schubert measure
  (r, s, t, |rho|, 1), the folded measure w' with its rainbow centers,
  classification of the track carrying beta, and the conversion of a measure
  on an extended track into a Heegaard diagram Schubert form.

Branch ends are identified by ``(branch_id, 0 | 1)``. A switch has one large
slot ``"L"`` and two small slots ``"l"`` and ``"r"``, ordered left to right
when facing from the large branch toward the small ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .core import Basepoints, HSForm, IntersectionNumbers, SchubertForm, basepoints
from .errors import (
    CaseInconsistencyError,
    ClassificationFailureError,
    DegenerateModulusError,
    FormulaInconsistencyError,
    MeasureNotCarriedError,
    PreconditionError,
    UnsupportedInputError,
)

End = tuple  # (branch_id, 0 | 1)

SLOTS = ("L", "l", "r")


@dataclass(frozen=True)
class TrackGraph:
    """Combinatorics of a train track with stops.

    ``switches[sid] = (large_end, left_end, right_end)`` and
    ``stops[label] = end``. Every branch end appears exactly once.
    """

    branches: tuple
    switches: Mapping[str, tuple]
    stops: Mapping[str, End] = field(default_factory=dict)

    def __post_init__(self) -> None:
        seen: dict = {}
        for sid, ends in self.switches.items():
            if len(ends) != 3:
                raise PreconditionError(f"switch {sid} must have three branch ends", switch=sid)
            for slot, end in zip(SLOTS, ends):
                if end in seen:
                    raise PreconditionError(f"branch end {end} attached twice", end=list(end))
                seen[end] = ("switch", sid, slot)
        for label, end in self.stops.items():
            if end in seen:
                raise PreconditionError(f"branch end {end} attached twice", end=list(end))
            seen[end] = ("stop", label)
        expected = {(b, i) for b in self.branches for i in (0, 1)}
        if set(seen) != expected:
            missing = sorted(map(str, expected - set(seen)))
            raise PreconditionError("every branch end must be attached exactly once", missing=missing)
        object.__setattr__(self, "_where", seen)

    def where(self, end: End) -> tuple:
        """("switch", sid, slot) or ("stop", label)."""
        return self._where[end]

    def end_at(self, sid: str, slot: str) -> End:
        return self.switches[sid][SLOTS.index(slot)]


@dataclass(frozen=True)
class Measure:
    """Transverse measure: non-negative integer weight per branch."""

    weights: Mapping

    def __post_init__(self) -> None:
        for b, w in self.weights.items():
            if w < 0:
                raise MeasureNotCarriedError(f"branch {b} has negative weight {w}", branch=str(b))

    def __getitem__(self, branch) -> int:
        return self.weights[branch]


def check_switch_conditions(track: TrackGraph, m: Measure) -> bool:
    """True iff weight(large) = weight(left) + weight(right) at every switch."""
    w = m.weights
    for large, left, right in track.switches.values():
        if w[large[0]] != w[left[0]] + w[right[0]]:
            return False
    return True


class _Builder:
    """Mutable copy of a track used while rewiring a move."""

    def __init__(self, track: TrackGraph, m: Measure) -> None:
        self.branches = list(track.branches)
        self.switches = {sid: list(ends) for sid, ends in track.switches.items()}
        self.stops = dict(track.stops)
        self.weights = dict(m.weights)

    def put(self, sid: str, large: End, left: End, right: End) -> None:
        self.switches[sid] = [large, left, right]

    def build(self) -> tuple[TrackGraph, Measure]:
        switches = {sid: tuple(ends) for sid, ends in self.switches.items()}
        return TrackGraph(tuple(self.branches), switches, dict(self.stops)), Measure(self.weights)


def _switch_ends(track: TrackGraph, branch) -> tuple:
    w0, w1 = track.where((branch, 0)), track.where((branch, 1))
    if w0[0] != "switch" or w1[0] != "switch":
        raise PreconditionError(f"branch {branch} ends at a stop", branch=str(branch))
    if w0[1] == w1[1]:
        raise PreconditionError(f"branch {branch} is a loop at one switch", branch=str(branch))
    return w0, w1


def apply_move(track: TrackGraph, measure: Measure, move: str, branch) -> tuple[TrackGraph, Measure]:
    """Apply ``slide``, ``split_left``, ``split_right``, ``fold_left`` or ``fold_right``.

    Returns a new (graph, measure) pair; inputs are not modified. Branch and
    switch identifiers are reused, so a split followed by the matching fold
    restores the original exactly.
    """
    if move == "slide":
        return _slide(track, measure, branch)
    if move in ("split_left", "split_right"):
        return _split(track, measure, branch, move == "split_left")
    if move in ("fold_left", "fold_right"):
        return _fold(track, measure, branch, move == "fold_left")
    raise PreconditionError(f"unknown move {move!r}", move=move)


def _slide(track: TrackGraph, m: Measure, e) -> tuple[TrackGraph, Measure]:
    w0, w1 = _switch_ends(track, e)
    slots = {w0[2], w1[2]}
    if "L" not in slots or slots == {"L"}:
        raise PreconditionError(f"slide needs a mixed branch, {e} is not", branch=str(e))
    (u, v) = (w0, w1) if w1[2] == "L" else (w1, w0)
    e_u = (e, 0) if w0 is u else (e, 1)
    e_v = (e, 1) if w0 is u else (e, 0)
    U, V = u[1], v[1]
    x, ul, ur = track.switches[U]
    _, pl, pr = track.switches[V]
    b = _Builder(track, m)
    if u[2] == "l":
        y = ur
        b.put(U, x, pl, e_u)
        b.put(V, e_v, pr, y)
        b.weights[e] = m[pr[0]] + m[y[0]]
    else:
        y = ul
        b.put(U, x, e_u, pr)
        b.put(V, e_v, y, pl)
        b.weights[e] = m[y[0]] + m[pl[0]]
    return b.build()


def _split(track: TrackGraph, m: Measure, e, left: bool) -> tuple[TrackGraph, Measure]:
    w0, w1 = _switch_ends(track, e)
    if w0[2] != "L" or w1[2] != "L":
        raise PreconditionError(f"split needs a large branch, {e} is not", branch=str(e))
    U, V = w0[1], w1[1]
    _, a, bb = track.switches[U]
    _, d, c = track.switches[V]
    w2, w3 = m[a[0]], m[c[0]]
    b = _Builder(track, m)
    if left:
        if w2 < w3:
            raise MeasureNotCarriedError(
                f"split_left needs w2 >= w3, got ({w2}, {w3})", branch=str(e), w2=w2, w3=w3)
        b.put(U, a, (e, 0), c)
        b.put(V, d, (e, 1), bb)
        b.weights[e] = w2 - w3
    else:
        if w3 < w2:
            raise MeasureNotCarriedError(
                f"split_right needs w3 >= w2, got ({w2}, {w3})", branch=str(e), w2=w2, w3=w3)
        b.put(U, bb, d, (e, 0))
        b.put(V, c, a, (e, 1))
        b.weights[e] = w3 - w2
    return b.build()


def _fold(track: TrackGraph, m: Measure, e, left: bool) -> tuple[TrackGraph, Measure]:
    w0, w1 = _switch_ends(track, e)
    want = "l" if left else "r"
    if w0[2] != want or w1[2] != want:
        raise PreconditionError(
            f"fold_{'left' if left else 'right'} needs both ends of {e} in slot {want!r}",
            branch=str(e))
    U, V = w0[1], w1[1]
    b = _Builder(track, m)
    if left:
        a, _, c = track.switches[U]
        d, _, bb = track.switches[V]
    else:
        bb, d, _ = track.switches[U]
        c, a, _ = track.switches[V]
    b.put(U, (e, 0), a, bb)
    b.put(V, (e, 1), d, c)
    b.weights[e] = m[a[0]] + m[bb[0]]
    return b.build()


def legal_moves(track: TrackGraph, m: Measure) -> list[tuple[str, object]]:
    """Every (move, branch) pair whose shape and weight preconditions hold."""
    out = []
    for e in track.branches:
        w0, w1 = track.where((e, 0)), track.where((e, 1))
        if w0[0] != "switch" or w1[0] != "switch" or w0[1] == w1[1]:
            continue
        slots = (w0[2], w1[2])
        if slots.count("L") == 1:
            out.append(("slide", e))
        elif slots == ("L", "L"):
            a = track.end_at(w0[1], "l")
            c = track.end_at(w1[1], "r")
            if m[a[0]] >= m[c[0]]:
                out.append(("split_left", e))
            if m[c[0]] >= m[a[0]]:
                out.append(("split_right", e))
        elif slots == ("l", "l"):
            out.append(("fold_left", e))
        elif slots == ("r", "r"):
            out.append(("fold_right", e))
    return out


def carried_track(chords: Sequence[tuple[int, int]], bp: Basepoints, scale: int) -> tuple[TrackGraph, Measure, list]:
    """Collapse a chord system in P into a measured train track.

    ``chords`` are endpoint pairs on the boundary of P in coordinates scaled by
    ``scale`` (2 for doubled positions). Parallel chords (adjacent at both ends
    with no basepoint in between) form one branch; the strands crossing each
    glued edge pair form a tie branch; chord endpoints sitting on a basepoint
    become stops. Returns the graph, its counting measure and the parallel
    classes (lists of chord indices), largest first.
    """
    M = scale * bp.L
    corners = {scale * p: name for name, p in bp.named().items()}
    ends: dict[int, tuple[int, int]] = {}
    for k, (a, b) in enumerate(chords):
        for side, p in ((0, a % M), (1, b % M)):
            if p in ends:
                raise PreconditionError("chord endpoints must be distinct", point=p)
            ends[p] = (k, side)
    marks = sorted(set(ends) | set(corners))
    nxt = {marks[i]: marks[(i + 1) % len(marks)] for i in range(len(marks))}

    parent = list(range(len(chords)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for p, (k, side) in ends.items():
        q = nxt[p]
        if q in corners and q not in ends:
            continue
        if q not in ends:
            continue
        k2, _ = ends[q]
        a, b = chords[k][1 - side] % M, chords[k2][1 - ends[q][1]] % M
        if nxt[b] == a and k2 != k and not (a in corners and a not in ends):
            parent[find(k)] = find(k2)
    groups: dict[int, list[int]] = {}
    for k in range(len(chords)):
        groups.setdefault(find(k), []).append(k)
    classes = sorted(groups.values(), key=lambda g: (-len(g), g[0]))
    class_of = {k: ci for ci, g in enumerate(classes) for k in g}

    # edge of each non-corner point: index of the basepoint just before it
    starts = sorted(corners)

    def edge(p: int) -> int:
        e = 0
        for i, s in enumerate(starts):
            if s < p:
                e = i
        return e

    partner_edge = {0: 3, 3: 0, 1: 5, 5: 1, 2: 4, 4: 2}
    # pieces: maximal runs of one class end lying on one edge, or a stop
    pieces: list[tuple] = []
    piece_of: dict[int, int] = {}
    for ci, g in enumerate(classes):
        for side in (0, 1):
            pts = sorted((chords[k][side] % M for k in g))
            runs: list[list[int]] = []
            for p in _cyclic_run(pts, M):
                key = ("stop", p) if p in corners else ("edge", edge(p))
                if runs and runs[-1][0] == key and key[0] == "edge":
                    runs[-1][1].append(p)
                else:
                    runs.append([key, [p]])
            for key, ps in runs:
                piece_of.update({p: len(pieces) for p in ps})
                pieces.append((ci, side, key, ps))

    branches: list = []
    weights: dict = {}
    switches: dict = {}
    stops: dict = {}
    joints: list[tuple[End, End]] = []

    def new_branch(name: str, w: int) -> str:
        branches.append(name)
        weights[name] = w
        return name

    def comb(root: End, leaves: list[End], wts: list[int], tag: str) -> None:
        """Split ``root`` into ``leaves`` left to right with binary switches."""
        if len(leaves) == 1:
            joints.append((root, leaves[0]))
            return
        cur = root
        for i in range(len(leaves) - 1):
            sid = f"{tag}.{i}"
            if i == len(leaves) - 2:
                switches[sid] = (cur, leaves[i], leaves[i + 1])
            else:
                rest = new_branch(f"{tag}.rest{i}", sum(wts[i + 1:]))
                switches[sid] = (cur, leaves[i], (rest, 0))
                cur = (rest, 1)

    for ci, g in enumerate(classes):
        br = new_branch(f"c{ci}", len(g))
        for side in (0, 1):
            mine = [pi for pi, pc in enumerate(pieces) if pc[0] == ci and pc[1] == side]
            leaves, wts = [], []
            for pi in mine:
                pb = new_branch(f"p{pi}", len(pieces[pi][3]))
                leaves.append((pb, 0))
                wts.append(len(pieces[pi][3]))
                if pieces[pi][2][0] == "stop":
                    stops[corners[pieces[pi][2][1]]] = (pb, 1)
            comb((br, side), leaves, wts, f"c{ci}s{side}")

    for e0 in (0, 1, 2):
        e1 = partner_edge[e0]
        near = sorted({piece_of[p] for p in ends if p not in corners and edge(p) == e0},
                      key=lambda pi: min(pieces[pi][3]))
        far = sorted({piece_of[p] for p in ends if p not in corners and edge(p) == e1},
                     key=lambda pi: min(pieces[pi][3]))
        count = sum(len(pieces[pi][3]) for pi in near)
        if count == 0:
            continue
        tie = new_branch(f"tie{e0}", count)
        comb((tie, 0), [(f"p{pi}", 1) for pi in near], [len(pieces[pi][3]) for pi in near], f"t{e0}a")
        comb((tie, 1), [(f"p{pi}", 1) for pi in far], [len(pieces[pi][3]) for pi in far], f"t{e0}b")

    return _contract(branches, weights, switches, stops, joints) + (classes,)


def _cyclic_run(pts: list[int], M: int) -> list[int]:
    """Order points of one class end along the circle, starting after its widest gap."""
    if len(pts) < 2:
        return pts
    gaps = [((pts[(i + 1) % len(pts)] - pts[i]) % M, i) for i in range(len(pts))]
    _, i = max(gaps)
    return pts[i + 1:] + pts[:i + 1]


def _contract(branches, weights, switches, stops, joints):
    """Merge branches joined end to end at bivalent joints."""
    link = {}
    for a, b in joints:
        link[a] = b
        link[b] = a
    attached = {}
    for sid, ends in switches.items():
        for slot, end in zip(SLOTS, ends):
            attached[end] = ("switch", sid, slot)
    for label, end in stops.items():
        attached[end] = ("stop", label)

    def walk(end: End) -> End:
        """From a branch end, follow the branch and any joints to the far terminal end."""
        cur = (end[0], 1 - end[1])
        while cur in link:
            nxt = link[cur]
            cur = (nxt[0], 1 - nxt[1])
        return cur

    new_switches = {sid: [None, None, None] for sid in switches}
    new_stops = {}
    out_branches, out_weights, done = [], {}, set()
    for end, loc in sorted(attached.items(), key=lambda kv: str(kv[0])):
        if end in done:
            continue
        far = walk(end)
        name = end[0]
        done.update({end, far})
        out_branches.append(name)
        out_weights[name] = weights[end[0]]
        for idx, e in ((0, end), (1, far)):
            where = attached[e]
            if where[0] == "switch":
                new_switches[where[1]][SLOTS.index(where[2])] = (name, idx)
            else:
                new_stops[where[1]] = (name, idx)
    graph = TrackGraph(tuple(out_branches), {k: tuple(v) for k, v in new_switches.items()}, new_stops)
    return graph, Measure(out_weights)


# ---------------------------------------------------------------------------
# Track descriptors and closed-form measures

FAMILIES = ("Sigma", "Theta", "SigmaPrime", "Tau2", "Tau3", "Tau4", "Tau5")
VARIANTS = ("minusminus", "minus", "zero", "plus")
_LEGAL_VARIANTS = {
    "Sigma": ("minusminus", "minus", "plus"),
    "Theta": ("minus", "plus"),
    "SigmaPrime": VARIANTS,
    "Tau2": ("minusminus", "minus", "plus"),
    "Tau3": ("minusminus", "minus", "plus"),
    "Tau4": ("minusminus", "minus", "plus"),
    "Tau5": ("minusminus", "minus", "plus"),
}


@dataclass(frozen=True)
class TrackDescriptor:
    family: str
    variant: str

    def __post_init__(self) -> None:
        if self.family not in _LEGAL_VARIANTS:
            raise PreconditionError(f"unknown track family {self.family!r}")
        if self.variant not in _LEGAL_VARIANTS[self.family]:
            raise PreconditionError(f"variant {self.variant!r} is not legal for {self.family}")

    def __str__(self) -> str:
        return f"{self.family}[{self.variant}]"


def sign_variant(form: SchubertForm) -> str:
    """minusminus if rho < -r, minus if -r <= rho < 0, plus otherwise."""
    if form.rho < -form.r:
        return "minusminus"
    if form.rho < 0:
        return "minus"
    return "plus"


def schubert_measure(form: SchubertForm) -> tuple[TrackDescriptor, Measure]:
    """Counting measure (r, s, t, |rho|, 1) of the bridge on the Schubert track."""
    r, s, t, rho = form.as_tuple()
    weights = {"b1": r, "b2": s, "b3": t, "b4": abs(rho), "b5": 1}
    return TrackDescriptor("Sigma", sign_variant(form)), Measure(weights)


FOLD_CASES = ("minusminus", "minus", "zero", "plus")


@dataclass(frozen=True)
class Convention:
    """Rainbow centers per folded case and the sides b5 attaches to.

    ``center_orders[case]`` names the basepoints used as (p1, p2, p3, p4).
    ``b5_signs[case] = (e1, e2)`` places the k-th b5 chord at
    (p1 + e1*(w1+k), p2 + e2*(w2+k)).
    """

    name: str
    center_orders: tuple
    b5_signs: tuple


LITERAL = Convention(
    name="literal",
    center_orders=(
        ("y2", "x1", "y4", "y1"),
        ("y1", "y2", "x1", "y4"),
        ("y1", "x1", "y3", "y4"),
        ("x1", "y3", "y4", "y1"),
    ),
    b5_signs=((-1, 1),) * 4,
)


@dataclass(frozen=True)
class FoldedMeasure:
    """Counting measure w' of the bridge on the folded track, with rainbow centers."""

    weights: tuple[int, int, int, int, int, int]
    descriptor: TrackDescriptor
    centers: tuple[int, int, int, int]
    center_names: tuple[str, str, str, str]
    case: int
    basepoints: Basepoints
    convention: Convention = LITERAL

    @property
    def n(self) -> int:
        return sum(self.weights[:5])


def fold_case(form: SchubertForm) -> int:
    """0: rho < -2r-s-1, 1: -2r-s-1 <= rho < -r, 2: -r <= rho < t, 3: rho >= t."""
    r, s, t, rho = form.as_tuple()
    if rho < -2 * r - s - 1:
        return 0
    if rho < -r:
        return 1
    if rho < t:
        return 2
    return 3


def folded_weights(form: SchubertForm) -> tuple[int, int, int, int, int, int]:
    r, s, t, rho = form.as_tuple()
    case = fold_case(form)
    if case == 0:
        w = (r + s, r, 3 * r + s + t + 1, r, -2 * r - s - rho - 1)
    elif case == 1:
        w = (r, -r - rho - 1, r, r + t - rho, 2 * r + s + rho + 1)
    elif case == 2:
        w = (3 * r + s + rho + 1, r, r + rho, r, t - rho)
    else:
        w = (r, r + t, r, 3 * r + s + t + 1, rho - t)
    return w + (1,)


def folded_measure(form: SchubertForm, convention: Convention = LITERAL) -> FoldedMeasure:
    """Folded counting measure (w'_1..w'_6) with centers and basepoints."""
    case = fold_case(form)
    w = folded_weights(form)
    for i, wi in enumerate(w):
        if wi < 0:
            raise CaseInconsistencyError(
                f"case {FOLD_CASES[case]} gives w'{i + 1} = {wi} < 0",
                case=FOLD_CASES[case], weight=i + 1, value=wi)
    n = sum(w[:5])
    bp = basepoints(form, n)
    names = convention.center_orders[case]
    named = bp.named()
    centers = tuple(named[c] for c in names)
    return FoldedMeasure(w, TrackDescriptor("SigmaPrime", FOLD_CASES[case]), centers,
                         tuple(names), case, bp, convention)


def classify_track(form: SchubertForm, inums: IntersectionNumbers) -> TrackDescriptor:
    """Which extension of the Schubert track carries beta."""
    if form.trivial_candidate:
        raise UnsupportedInputError("rho = 0: classification needs a nontrivial form",
                                    form=list(form.as_tuple()))
    r, s, t, rho = form.as_tuple()
    a, b, c, _ = inums.as_tuple()
    variant = sign_variant(form)
    if (s > 0 and t > 0) or (2 * a <= b and 2 * a <= c):
        family = "Sigma"
    elif s == 0 < t and 2 * a > b:
        family = "Tau2"
    elif s > 0 == t and 2 * a > c:
        family = "Tau3"
    elif s == 0 == t and 2 * a > c >= b:
        family = "Tau4"
    elif s == 0 == t and 2 * a > b > c:
        family = "Tau5"
    else:
        raise ClassificationFailureError(
            "no extension condition holds", form=list(form.as_tuple()), inums=list(inums.as_tuple()))
    return TrackDescriptor(family, variant)


def _weights4(v: Measure | Sequence[int]) -> tuple[int, int, int, int]:
    if isinstance(v, Measure):
        return tuple(v[f"b{i}"] for i in range(1, 5))
    return tuple(v)[:4]


def measure_to_hs(descriptor: TrackDescriptor, v: Measure | Sequence[int], form: SchubertForm) -> HSForm:
    """HS form from the counting measure v of beta on an extended track.

    For the second extension with rho < 0 the last entry is -2v1 - v2 - v4;
    see the project notes for why this differs from the printed line.
    """
    v1, v2, v3, v4 = _weights4(v)
    fam, var = descriptor.family, descriptor.variant
    neg = form.rho < 0

    def bar(x: int) -> int:
        if v2 == 0:
            raise DegenerateModulusError(f"{fam} needs x mod v2 with v2 = 0", v=[v1, v2, v3, v4])
        return x % v2

    if fam == "Tau2":
        out = (v1, v3, v2, -2 * v1 - v2 - v4) if neg else (v1, v3, v2, -2 * v1 + v4)
    elif fam == "Tau3":
        if var == "minusminus":
            out = (v1, v3, v2, -v4 - v3 - v1)
        elif var == "minus":
            out = (v1, v3, v2, 2 * v1 + v3 - v4)
        else:
            out = (v1, v3, v2, 2 * v1 + v3 + v4)
    elif fam == "Tau4":
        if var == "minusminus":
            x = bar(v2 - v3)
            out = (v1, v2 - x, x, -x - v4)
        elif var == "minus":
            x = bar(v3)
            out = (v1, x, v2 - x, -v2 + x - v4)
        else:
            x = bar(v3)
            out = (v1, x, v2 - x, v2 + x + v4)
    elif fam == "Tau5":
        if var == "minusminus":
            x = bar(v3)
            out = (v1, v2 - x, x, -x - v4)
        elif var == "minus":
            x = bar(v3)
            out = (v1, v2 - x, x, -v2 + x - v4)
        else:
            x = bar(v2 - v3)
            out = (v1, x, v2 - x, v2 + x + v4)
    else:
        raise PreconditionError(f"measure_to_hs applies to extended tracks, not {descriptor}")
    hs = HSForm(*out)
    if not hs.is_valid:
        raise FormulaInconsistencyError(f"{descriptor} measure gives invalid {hs}",
                                        candidate=list(out), v=[v1, v2, v3, v4])
    return hs


def tau2_measure(form: SchubertForm, inums: IntersectionNumbers) -> Measure:
    """Counting measure on the second extension, solved from (a, b, c, d)."""
    a, b, c, d = inums.as_tuple()
    r, rho = form.r, form.rho
    if rho < -r:
        v4 = -2 * a + b + d
    elif rho < 0:
        v4 = b - d
    else:
        v4 = -2 * a + d
    weights = {"b1": -a + b, "b2": 2 * a - b, "b3": -2 * a + c, "b4": v4}
    if min(weights.values()) < 0:
        raise FormulaInconsistencyError("second-extension measure has a negative weight",
                                        v=list(weights.values()), inums=list(inums.as_tuple()))
    return Measure(weights)


def extension_measure(form: SchubertForm, inums: IntersectionNumbers, descriptor: TrackDescriptor) -> Measure | None:
    """Measure of beta on ``descriptor`` when its linear system is known, else None."""
    if descriptor.family == "Tau2":
        return tau2_measure(form, inums)
    return None
