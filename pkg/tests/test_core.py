from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eleven_knots.core import (
    Position,
    SchubertForm,
    basepoints,
    identified_copies,
    in_interval2,
    interval_member,
)
from eleven_knots.errors import InvalidInputError, StructuralInconsistencyError
from eleven_knots.tracks import folded_measure

TREFOIL = SchubertForm(0, 0, 2, 2)


def test_schubert_form_validates_and_parses():
    assert SchubertForm.parse(" 1, 1,0,-1") == SchubertForm(1, 1, 0, -1)
    assert str(SchubertForm(0, 0, 2, 2)) == "S(0,0,2,2)"
    assert SchubertForm(1, 2, 3, 4).strand_count == 2 + 2 + 3 + 1
    assert SchubertForm(0, 0, 2, 2).rotation == Fraction(2, 3)
    assert SchubertForm(3, 0, 0, 0).trivial_candidate
    for bad in ("1,2,3", "a,b,c,d", "1,2,3,4,5", ""):
        with pytest.raises(InvalidInputError):
            SchubertForm.parse(bad)
    with pytest.raises(InvalidInputError):
        SchubertForm(-1, 0, 0, 0)
    with pytest.raises(InvalidInputError):
        SchubertForm(0, 0, 0, 1.5)


def test_position_round_trip():
    assert Position.of("13.5").twice_value == 27
    assert Position.of(Fraction(7, 2)).value == Fraction(7, 2)
    assert str(Position.of(6)) == "6" and Position.of(6).is_integer
    with pytest.raises(InvalidInputError):
        Position.of(Fraction(1, 3))


@pytest.mark.parametrize(
    "form, n, expected, L",
    [
        ((0, 0, 2, 2), 5, (0, 3, 4, 7, 10, 13), 14),
        ((1, 1, 0, -1), 7, (0, 2, 6, 9, 11, 14), 18),
        ((0, 0, 3, 3), 7, (0, 4, 5, 9, 13, 17), 18),
    ],
)
def test_basepoint_table(form, n, expected, L):
    bp = basepoints(SchubertForm(*form), n)
    assert bp.as_tuple() == expected
    assert bp.L == L


def test_basepoints_reject_too_short_circle():
    with pytest.raises(StructuralInconsistencyError) as info:
        basepoints(TREFOIL, 3)
    assert info.value.details["basepoints"] == [0, 3, 4, 7, 10, 13]


def test_basepoint_count_comes_from_folded_measure():
    for form in (TREFOIL, SchubertForm(1, 1, 0, -1), SchubertForm(2, 3, 1, -9)):
        fm = folded_measure(form)
        assert fm.basepoints.n == sum(fm.weights[:5])


@given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6), st.integers(-20, 20))
def test_basepoints_strictly_increase(r, s, t, rho):
    bp = folded_measure(SchubertForm(r, s, t, rho)).basepoints
    chain = bp.as_tuple() + (bp.L,)
    assert chain[0] == 0
    assert all(a < b for a, b in zip(chain, chain[1:]))


def test_interval_examples():
    assert interval_member(Fraction(27, 2), 11, 3, 14)
    assert not interval_member(5, 11, 3, 14)
    assert not interval_member(4, Fraction(11, 2), Fraction(11, 2), 14)
    assert in_interval2(27, 22, 6, 28)


@given(st.integers(2, 60).flatmap(lambda L: st.tuples(st.just(L), st.integers(0, 2 * L - 1),
                                                       st.integers(0, 2 * L - 1), st.integers(0, 2 * L - 1))))
def test_interval_complement(args):
    L, x, a, b = args
    X, A, B = (Fraction(v, 2) for v in (x, a, b))
    if a != b and x not in (a, b):
        assert interval_member(X, A, B, L) != interval_member(X, B, A, L)


def test_identified_copies_examples():
    bp = folded_measure(TREFOIL).basepoints
    assert identified_copies(7, bp) == {0, 3, 7, 10}
    assert identified_copies(13, bp) == {4, 13}
    assert identified_copies(11, bp) == {11, 6}
    assert identified_copies(Fraction(27, 2), bp) == {Fraction(27, 2), Fraction(7, 2)}


@given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4), st.integers(-8, 8), st.data())
def test_identified_copies_partition(r, s, t, rho, data):
    bp = folded_measure(SchubertForm(r, s, t, rho)).basepoints
    p = Fraction(data.draw(st.integers(0, 2 * bp.L - 1)), 2)
    copies = identified_copies(p, bp)
    assert p in copies
    for q in copies:
        assert identified_copies(q, bp) == copies
