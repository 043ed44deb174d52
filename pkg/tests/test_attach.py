from __future__ import annotations

import random

import pytest

from eleven_knots.attach import (
    AttachingSequence,
    alpha_position2,
    construct_diagram,
    finger_move,
    initial_beta2,
    partial_bridge,
    reduce,
)
from eleven_knots.bridge import bridge_sequence, gluing_involution
from eleven_knots.core import SchubertForm
from eleven_knots.diagram import BETA, Chord, BoundaryPoint, BRIDGE, count_crossings, realize
from eleven_knots.errors import PipelineError, PreconditionError

TREFOIL = SchubertForm(0, 0, 2, 2)
TREFOIL_STAGES = [
    (3.5,),
    (6.5,),
    (6.5, 2.5, 8.5),
    (6.5, 2.5, 5.5, 12.5, 8.5),
    (6.5, 2.5, 5.5, 1.5, 9.5, 12.5, 9.5),
    (6.5, 2.5, 5.5, 1.5, 4.5, 13.5, 9.5, 13.5, 9.5),
]


@pytest.fixture(scope="module")
def trefoil():
    b = bridge_sequence(TREFOIL)
    return b, gluing_involution(b.basepoints, extended=True)


def test_attaching_sequence_is_cyclic():
    a = AttachingSequence.of([6.5, 2.5, 8.5])
    assert a == AttachingSequence.of(["2.5", "8.5", "6.5"])
    assert a != AttachingSequence.of([6.5, 8.5, 2.5])
    assert str(a) == "(6.5,2.5,8.5)"
    with pytest.raises(PreconditionError):
        AttachingSequence.of([3])


def test_finger_move_examples(trefoil):
    b, psi = trefoil
    L = b.basepoints.L
    out = finger_move(AttachingSequence.of([3.5]), 3, 11, psi, L)
    assert out.values == [3.5, 6.5, 11.5]
    out = finger_move(AttachingSequence.of([6.5]), 6, 8, psi, L)
    assert out.values == [6.5, 2.5, 8.5]


def test_partial_bridge_includes_glued_copies(trefoil):
    b, _ = trefoil
    T1 = partial_bridge(b, 1)
    assert T1.boundary_points == frozenset(2 * v for v in (0, 3, 7, 10, 11, 6))


def test_reduce_examples(trefoil):
    b, psi = trefoil
    out = reduce(AttachingSequence.of([3.5, 6.5, 11.5]), partial_bridge(b, 1), psi)
    assert out.values == [6.5]
    seq = AttachingSequence.of([6.5, 2.5, 8.5])
    assert reduce(seq, partial_bridge(b, 2), psi) == seq


def test_trefoil_stages():
    d = construct_diagram(TREFOIL, keep_stages=True)
    assert d.alpha.twice_value == 5
    assert [tuple(float(v) for v in s.values) for s in d.stages] == TREFOIL_STAGES
    assert d.beta == d.stage(5)


def test_stages_need_keep_stages():
    with pytest.raises(PreconditionError):
        construct_diagram(TREFOIL).stage(1)


def test_alpha_and_beta0_sides():
    assert alpha_position2(SchubertForm(0, 0, 2, 2)) == 5
    assert initial_beta2(SchubertForm(0, 0, 2, 2)) == 7
    # rho < -r puts both just around y3 = -rho
    assert alpha_position2(SchubertForm(1, 1, 0, -4)) == 7
    assert initial_beta2(SchubertForm(1, 1, 0, -4)) == 9


def test_unknot_diagram():
    d = construct_diagram(SchubertForm(0, 0, 0, 0))
    assert d.beta.values == [2.5] and d.alpha.twice_value == 1


def test_reduce_is_idempotent_on_random_sequences():
    rng = random.Random(7)
    forms = [SchubertForm(0, 0, 2, 2), SchubertForm(0, 0, 3, 3), SchubertForm(1, 0, 2, 3), SchubertForm(2, 1, 1, 4)]
    bridges = []
    for f in forms:
        try:
            bridges.append(bridge_sequence(f))
        except PipelineError:
            pass
    assert len(bridges) >= 3
    for _ in range(500):
        b = rng.choice(bridges)
        psi = gluing_involution(b.basepoints, extended=True)
        T = partial_bridge(b, rng.randint(0, b.n))
        M = 2 * b.basepoints.L
        g = AttachingSequence(tuple(rng.randrange(1, M, 2) for _ in range(rng.randint(1, 14))))
        once = reduce(g, T, psi)
        assert reduce(once, T, psi) == once
        assert len(once) <= len(g)


def test_finger_move_adds_two_terms_per_crossing():
    """Growth counted independently: beta chords crossing the new bridge chord."""
    for form in (SchubertForm(0, 0, 2, 2), SchubertForm(0, 0, 3, 3), SchubertForm(1, 0, 2, 3)):
        d = construct_diagram(form, keep_stages=True)
        psi = d.psi_ext
        for i, (a, b) in enumerate(d.bridge.arcs, start=1):
            prev = d.stage(i - 1)
            cd = realize(d, stage=i - 1)
            new = Chord(BoundaryPoint(4 * a), BoundaryPoint(4 * b), BRIDGE)
            beta = cd.by_role(BETA)
            crossing = count_crossings(beta + [new]) - count_crossings(beta)
            grown = finger_move(prev, a, b, psi, d.basepoints.L)
            assert len(grown) - len(prev) == 2 * crossing
