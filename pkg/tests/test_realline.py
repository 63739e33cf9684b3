from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from topolab.errors import ParseError, UnsupportedPair
from topolab.realline import (E, EMPTY, LINE, NEG_INF, POS_INF, S, US, closed_interval,
                              hattori, hattori_clopen_witness, hattori_compare, interval_set,
                              left_closed, open_interval, parse_set, parse_topology, point,
                              pointwise_coarser, right_closed, rl_are_pi_compatible,
                              rl_closure, rl_interior, rl_is_admissible_extension, rl_is_closed,
                              rl_is_open, rl_is_semi_open, sample_points)

from conftest import interval_sets

KINDS = [E, S, US]
topologies = st.one_of(st.sampled_from(KINDS), interval_sets.map(hattori))


def members_oracle(s, pts):
    return [s.contains(x) for x in pts]


# -- representation ----------------------------------------------------------

def test_merging():
    assert left_closed(0, 1) | left_closed(1, 2) == left_closed(0, 2)
    assert (open_interval(0, 1) | open_interval(1, 2)).pieces != open_interval(0, 2).pieces
    assert open_interval(0, 1) | point(1) == right_closed(0, 1)
    assert closed_interval(2, 2) == point(2)
    assert open_interval(1, 1) == EMPTY


def test_parse_and_format():
    s = parse_set("[0,1) u [1,2) u {5} u (-inf,-3/2]")
    assert str(s) == "(-inf,-3/2] u [0,2) u {5}"
    assert parse_set(str(s)) == s
    assert parse_set("empty") == EMPTY
    assert parse_set("(-inf,inf)") == LINE
    with pytest.raises(ParseError):
        parse_set("[0,1")
    with pytest.raises(ParseError):
        parse_set("[-inf,1)")
    assert parse_topology("H:[0,1]") == hattori(closed_interval(0, 1))
    with pytest.raises(ParseError):
        parse_topology("Q")


@given(interval_sets)
def test_format_roundtrip(s):
    assert parse_set(str(s)) == s


@given(interval_sets, interval_sets)
def test_set_algebra_pointwise(a, b):
    pts = sample_points(a, b)
    for x in pts:
        assert (a | b).contains(x) == (a.contains(x) or b.contains(x))
        assert (a & b).contains(x) == (a.contains(x) and b.contains(x))
        assert (a - b).contains(x) == (a.contains(x) and not b.contains(x))
        assert (~a).contains(x) != a.contains(x)


@given(interval_sets, interval_sets)
def test_de_morgan_and_involution(a, b):
    assert ~~a == a
    assert ~(a | b) == ~a & ~b
    assert ~(a & b) == ~a | ~b


@given(interval_sets, interval_sets, interval_sets)
def test_subset_partial_order(a, b, c):
    assert a <= a
    if a <= b and b <= a:
        assert a == b
    if a <= b and b <= c:
        assert a <= c
    assert a & b <= a <= a | b


@given(interval_sets)
def test_canonical_form(s):
    for p, q in zip(s.pieces, s.pieces[1:]):
        assert p.hi < q.lo or (p.hi == q.lo and not p.hi_closed and not q.lo_closed)
    assert interval_set(s.pieces) == s


# -- operators ---------------------------------------------------------------

def test_sorgenfrey_goldens():
    assert rl_closure(S, open_interval(0, 1)) == left_closed(0, 1)
    assert rl_interior(S, right_closed(0, 1)) == open_interval(0, 1)
    assert rl_closure(E, open_interval(0, 1)) == closed_interval(0, 1)


def test_hattori_closure_at_boundary():
    a = left_closed(0, POS_INF)
    assert rl_closure(hattori(a), open_interval(-1, 0)) == closed_interval(-1, 0)


@given(topologies, interval_sets)
def test_duality(t, s):
    assert rl_interior(t, s) == ~rl_closure(t, ~s)


@given(topologies, interval_sets)
def test_interior_closure_bounds(t, s):
    i, c = rl_interior(t, s), rl_closure(t, s)
    assert i <= s <= c
    assert rl_closure(t, c) == c
    assert rl_interior(t, i) == i


@given(interval_sets)
def test_hattori_extremes(s):
    assert rl_interior(hattori(LINE), s) == rl_interior(E, s)
    assert rl_closure(hattori(LINE), s) == rl_closure(E, s)
    assert rl_interior(hattori(EMPTY), s) == rl_interior(S, s)
    assert rl_closure(hattori(EMPTY), s) == rl_closure(S, s)


def _basic_oracle(t, x, eps):
    a = t.hattori_set()
    if a is None:
        return right_closed(x - eps, x)
    return open_interval(x - eps, x + eps) if a.contains(x) else left_closed(x, x + eps)


@given(topologies, interval_sets)
def test_interior_by_basic_neighbourhoods(t, s):
    # x is interior iff a small basic set at x fits inside s
    extra = t.hattori_set().endpoints() if t.hattori_set() is not None else []
    pts = sample_points(s, interval_set([(x, True, x, True) for x in extra]))
    gaps = [q - p for p, q in zip(pts, pts[1:])]
    eps = min(gaps) / 4 if gaps else Fraction(1)
    interior = rl_interior(t, s)
    for x in pts:
        assert interior.contains(x) == (_basic_oracle(t, x, eps) <= s)


def test_semi_open_examples():
    assert rl_is_semi_open(E, left_closed(0, 1))
    assert not rl_is_semi_open(S, right_closed(0, 1))
    assert not rl_is_semi_open(E, point(0))


@given(st.tuples(st.integers(-5, 5), st.integers(1, 4)), interval_sets)
def test_basics_semi_open_in_euclid(ab, a):
    lo, width = ab
    assert rl_is_semi_open(E, left_closed(lo, lo + width))
    for x in sample_points(a):
        nb = (open_interval(x - 1, x + 1) if a.contains(x) else left_closed(x, x + 1))
        assert rl_is_open(hattori(a), nb)
        assert rl_is_semi_open(E, nb)


# -- comparison --------------------------------------------------------------

def test_compare_examples():
    assert hattori_compare(LINE, EMPTY) == "coarser"
    assert hattori_compare(closed_interval(0, 1), closed_interval(0, 1)) == "equal"
    assert hattori_compare(closed_interval(0, 1), closed_interval(2, 3)) == "incomparable"


@given(interval_sets, interval_sets)
def test_compare_agrees_with_pointwise(a, b):
    pts = sample_points(a, b)
    a_in_b = pointwise_coarser(hattori(a), hattori(b), pts)
    b_in_a = pointwise_coarser(hattori(b), hattori(a), pts)
    expected = {(True, True): "equal", (True, False): "coarser",
                (False, True): "finer", (False, False): "incomparable"}[(a_in_b, b_in_a)]
    assert hattori_compare(a, b) == expected
    assert a_in_b == (b <= a)


def test_admissible_examples():
    assert rl_is_admissible_extension(E, S)
    assert rl_is_admissible_extension(E, US)
    assert rl_is_admissible_extension(E, hattori(closed_interval(0, 1)))
    assert not rl_is_admissible_extension(hattori(closed_interval(0, 1)),
                                          hattori(closed_interval(0, 2)))
    assert rl_is_admissible_extension(hattori(closed_interval(0, 2)),
                                      hattori(closed_interval(0, 1)))
    assert not rl_is_admissible_extension(S, US)
    assert not rl_is_admissible_extension(US, E)


def test_upper_limit_against_general_hattori_refused():
    with pytest.raises(UnsupportedPair):
        rl_is_admissible_extension(US, hattori(closed_interval(0, 1)))


@given(interval_sets, interval_sets)
def test_admissible_iff_superset(a, b):
    assert rl_is_admissible_extension(hattori(a), hattori(b)) == (b <= a)


def test_pi_compatible_examples():
    assert rl_are_pi_compatible(S, US)
    for t in KINDS:
        assert rl_are_pi_compatible(t, t)


@given(interval_sets)
def test_euclid_pi_compatible_with_hattori(a):
    assert rl_are_pi_compatible(E, hattori(a))


# -- disconnectedness --------------------------------------------------------

def test_clopen_examples():
    assert hattori_clopen_witness(closed_interval(0, 1)) == left_closed(2, POS_INF)
    assert hattori_clopen_witness(LINE) is None
    assert hattori_clopen_witness(EMPTY) == left_closed(0, POS_INF)


@given(interval_sets)
def test_clopen_witness_is_clopen(a):
    assume(a != LINE)
    w = hattori_clopen_witness(a)
    t = hattori(a)
    assert w and w != LINE
    assert rl_is_open(t, w) and rl_is_closed(t, w)
