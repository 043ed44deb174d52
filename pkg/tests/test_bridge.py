from __future__ import annotations

from fractions import Fraction

import pytest

from eleven_knots.bridge import (
    Involution,
    arc_involution,
    bridge_sequence,
    gluing_involution,
    search_conventions,
)
from eleven_knots.core import SchubertForm
from eleven_knots.errors import (
    InvolutionConflictError,
    LinkOrConventionMismatchError,
    PipelineError,
    PreconditionError,
)
from eleven_knots.tracks import LITERAL, folded_measure

TREFOIL = SchubertForm(0, 0, 2, 2)


def small_forms(limit=4, rho_abs=6):
    for r in range(limit + 1):
        for s in range(limit + 1):
            for t in range(limit + 1):
                for rho in range(-rho_abs, rho_abs + 1):
                    yield SchubertForm(r, s, t, rho)


def test_trefoil_involutions():
    fm = folded_measure(TREFOIL)
    assert str(arc_involution(fm)) == "(6 8)(5 9)(13 1)(12 2)(11 3)"
    assert str(gluing_involution(fm.basepoints)) == "(1 9)(2 8)(11 6)(12 5)(13 4)"
    ext = gluing_involution(fm.basepoints, extended=True)
    for pair in ("0.5 9.5", "1.5 8.5", "2.5 7.5", "10.5 6.5", "11.5 5.5", "12.5 4.5", "13.5 3.5"):
        a, b = (Fraction(v) for v in pair.split())
        assert ext(a) == b and ext(b) == a
    assert ext(Fraction(27, 2)) == Fraction(7, 2)


def test_involution_rejects_conflicts_and_outside_points():
    inv = Involution.from_pairs([(2, 6)], 28)
    with pytest.raises(InvolutionConflictError):
        inv.add(2, 8)
    with pytest.raises(PreconditionError):
        inv(5)
    assert 1 in inv and inv(3) == 1


@pytest.mark.parametrize(
    "form, expected",
    [
        ((0, 0, 2, 2), (3, 6, 2, 5, 1)),
        ((0, 0, 3, 3), (4, 8, 3, 7, 2, 6, 1)),
        ((0, 0, 0, 0), (1,)),
    ],
)
def test_bridge_sequence_examples(form, expected):
    b = bridge_sequence(SchubertForm(*form))
    assert b.odd_terms == expected
    assert b.full_endpoints[-1] == b.basepoints.x2


def test_unknot_walk_ends_at_x2():
    b = bridge_sequence(SchubertForm(0, 0, 0, 0))
    assert b.full_endpoints == [1, 5]


def test_walk_failure_names_the_step():
    with pytest.raises(LinkOrConventionMismatchError) as info:
        bridge_sequence(SchubertForm(1, 1, 0, -1))
    err = info.value
    assert err.details["step"] == 2 and err.details["reason"] == "reached x2 early"
    assert err.exit_code == 3
    assert "step 2 of 7" in err.message


def test_involution_properties_on_a_sweep():
    done = 0
    for form in small_forms():
        fm = folded_measure(form)
        bp = fm.basepoints
        psi = gluing_involution(bp)
        ext = gluing_involution(bp, extended=True)
        assert psi(bp.x2) == bp.x1
        assert ext.restrict_integers() == psi
        phi = arc_involution(fm)
        for p in phi.support2:
            assert phi.image2(phi.image2(p)) == p
        for p in ext.support2:
            assert ext.image2(ext.image2(p)) == p
        try:
            b = bridge_sequence(form)
        except PipelineError:
            continue
        ends = b.full_endpoints
        assert len(ends) == len(set(ends)) == 2 * b.n
        assert {2 * e for e in ends} == set(phi.support2)
        done += 1
    assert done > 500


def test_calibration_search_keeps_the_literal_tables():
    conv = search_conventions()
    assert conv.name == "calibrated"
    assert conv.center_orders == LITERAL.center_orders
    assert conv.b5_signs == LITERAL.b5_signs
    assert bridge_sequence(TREFOIL, conv).odd_terms == (3, 6, 2, 5, 1)
