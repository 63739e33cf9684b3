import itertools

import pytest
from hypothesis import given, strategies as st

from topolab import core
from topolab.core import (FiniteSpace, discrete, from_opens, generate, khalimsky, mask_of,
                          members, odd_even, product, sierpinski, trivial)
from topolab.enumeration import all_spaces
from topolab.errors import NotATopology, TooLarge

from conftest import space_and_set, spaces

M = mask_of


def small_spaces(max_n=4):
    for n in range(1, max_n + 1):
        yield from all_spaces(n)


# -- oracles -----------------------------------------------------------------

def close_family(n, family):
    """Fixpoint closure of a family under pairwise union and intersection."""
    fam = set(family) | {0, (1 << n) - 1}
    while True:
        new = {a | b for a in fam for b in fam} | {a & b for a in fam for b in fam}
        if new <= fam:
            return fam
        fam |= new


def interior_oracle(s, a):
    out = 0
    for o in s.opens:
        if o & ~a == 0:
            out |= o
    return out


def closure_oracle(s, a):
    out = s.full
    for o in s.opens:
        c = s.full & ~o
        if a & ~c == 0:
            out &= c
    return out


def baire_by_triples(s):
    meager = [m for m in range(1 << s.n) if s.is_meager(m)]
    return {(o & ~m) | nn for o in s.opens for m in meager for nn in meager}


# -- construction ------------------------------------------------------------

def test_sierpinski_from_opens():
    s = from_opens(2, [0, M([0]), M([0, 1])])
    assert s.min_nbhd == (M([0]), M([0, 1]))
    assert s == sierpinski()


def test_odd_even_from_partition_opens():
    s = from_opens(4, [0, M([0, 1]), M([2, 3]), M([0, 1, 2, 3])])
    assert [members(u) for u in s.min_nbhd] == [[0, 1], [0, 1], [2, 3], [2, 3]]
    assert s == odd_even(4)


def test_from_opens_missing_whole_space():
    with pytest.raises(NotATopology, match="whole space"):
        from_opens(2, [0, M([0])])


def test_from_opens_reports_offending_pair():
    with pytest.raises(NotATopology, match=r"union of \{0\} and \{1\}"):
        from_opens(3, [0, M([0]), M([1]), 0b111])


def test_finite_space_rejects_non_transitive():
    with pytest.raises(NotATopology, match="transitive"):
        FiniteSpace(3, (M([0, 1]), M([1, 2]), M([2])))


def test_khalimsky_window():
    s = generate(5, [M([0, 1]), M([1, 2, 3]), M([3, 4])])
    assert [members(u) for u in s.min_nbhd] == [[0, 1], [1], [1, 2, 3], [3], [3, 4]]
    assert s == khalimsky(5)
    assert s.opens == close_family(5, [M([0, 1]), M([1, 2, 3]), M([3, 4])])


def test_generate_trivial_and_discrete():
    assert generate(3, []) == trivial(3)
    assert generate(3, [M([0]), M([1]), M([2])]) == discrete(3)


@given(st.integers(1, 5).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(0, (1 << n) - 1), max_size=5))))
def test_generate_matches_fixpoint_closure(case):
    n, sub = case
    assert generate(n, sub).opens == close_family(n, sub)


@given(spaces())
def test_from_opens_roundtrip(s):
    assert from_opens(s.n, s.opens) == s


@given(spaces())
def test_json_roundtrip(s):
    assert core.space_from_dict(core.space_to_dict(s)) == s
    assert core.space_from_dict({"n": s.n, "opens": s.sorted_opens()}) == s


def test_sorted_opens_lexicographic():
    assert sierpinski().sorted_opens() == [[], [0], [0, 1]]


# -- operators ---------------------------------------------------------------

def test_sierpinski_closure_interior():
    s = sierpinski()
    assert s.closure(M([0])) == M([0, 1])
    assert s.interior(M([1])) == 0


@given(space_and_set())
def test_interior_closure_match_oracles(case):
    s, a = case
    assert s.interior(a) == interior_oracle(s, a)
    assert s.closure(a) == closure_oracle(s, a)


@pytest.mark.parametrize("s", list(small_spaces()), ids=str)
def test_kuratowski_axioms_and_duality(s):
    N = 1 << s.n
    assert s.closure(0) == 0
    for a in range(N):
        assert a & ~s.closure(a) == 0
        assert s.closure(s.closure(a)) == s.closure(a)
        assert s.interior(a) == s.full & ~s.closure(s.full & ~a)
    for a, b in itertools.combinations(range(N), 2):
        assert s.closure(a | b) == s.closure(a) | s.closure(b)


def test_khalimsky_nowhere_dense_points():
    s = khalimsky(5)
    assert s.is_nowhere_dense(M([0]))
    assert not s.is_nowhere_dense(M([1]))
    assert s.nwd_max == M([0, 2, 4])


def test_odd_even_singleton_not_meager():
    s = odd_even(4)
    assert not s.is_meager(M([0]))
    assert s.nowhere_dense_family == {0}


def test_odd_even_baire_family_is_topology():
    s = odd_even(4)
    assert not s.has_baire_property(M([0, 2]))
    assert s.baire_family == s.opens


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_trivial_baire_family(n):
    assert trivial(n).baire_family == {0, (1 << n) - 1}


def test_khalimsky_baire_family_everything():
    s = khalimsky(5)
    assert s.baire_family == set(range(32))
    assert baire_by_triples(s) == set(range(32))


@pytest.mark.parametrize("s", list(small_spaces(3)), ids=str)
def test_baire_property_matches_triples(s):
    brute = baire_by_triples(s)
    assert s.baire_family == brute
    for a in range(1 << s.n):
        assert s.has_baire_property(a) == (a in brute)


@pytest.mark.parametrize("s", list(small_spaces()), ids=str)
def test_baire_family_is_algebra(s):
    fam = s.baire_family
    assert all(s.full & ~a in fam for a in fam)
    assert all(a | b in fam for a in fam for b in fam)
    assert s.opens <= fam
    assert s.meager_family <= fam


@pytest.mark.parametrize("s", list(small_spaces()), ids=str)
def test_points_nowhere_dense_or_open_gives_all_sets(s):
    if all(s.is_nowhere_dense(1 << x) or s.is_open(1 << x) for x in range(s.n)):
        assert s.baire_family == set(range(1 << s.n))


@pytest.mark.parametrize("s", list(small_spaces()), ids=str)
def test_every_finite_space_is_baire(s):
    assert s.is_baire_space()


def test_density_and_friends():
    s = sierpinski()
    assert (s.density(), s.is_connected(), s.isolated_points()) == (1, True, M([0]))
    assert s.separation() == {"T0": True, "T1": False, "T2": False}

    oe = odd_even(4)
    assert oe.density() == 2 and oe.is_dense(M([0, 2]))
    assert not oe.is_connected()
    assert oe.isolated_points() == 0
    assert not oe.separation()["T0"]

    d = discrete(3)
    assert d.density() == 3 and d.is_t2()


@given(spaces(max_n=4))
def test_density_brute_force(s):
    best = min(bin(a).count("1") for a in range(1 << s.n) if s.is_dense(a))
    assert s.density() == best


@given(spaces())
def test_report_invariants(s):
    rep = core.analyze(s)
    sep = rep.separation
    assert not sep["T2"] or sep["T1"]
    assert not sep["T1"] or sep["T0"]
    assert rep.isolated_points == M(x for x in range(s.n) if s.min_nbhd[x] == 1 << x)
    assert rep.is_baire


# -- products ----------------------------------------------------------------

def product_oracle(spaces_):
    """Product topology generated by all boxes of open sets."""
    n = 1
    for s in spaces_:
        n *= s.n
    coords = list(itertools.product(*(range(s.n) for s in spaces_)))
    boxes = []
    for opens in itertools.product(*(sorted(s.opens) for s in spaces_)):
        boxes.append(M(i for i, c in enumerate(coords)
                       if all(o >> ci & 1 for o, ci in zip(opens, c))))
    return close_family(n, boxes)


def test_sierpinski_square():
    p = product([sierpinski(), sierpinski()])
    assert p.n == 4
    assert p.min_nbhd[3] == 0b1111          # (1,1)


def test_product_with_point_is_identity():
    s = khalimsky(5)
    assert product([s, discrete(1)]) == s


def test_trivial_times_discrete():
    p = product([trivial(2), discrete(2)])
    # (0,0)=0 (0,1)=1 (1,0)=2 (1,1)=3
    assert [members(u) for u in p.min_nbhd] == [[0, 2], [1, 3], [0, 2], [1, 3]]


@given(spaces(max_n=3), spaces(max_n=3))
def test_product_matches_box_oracle(s, t):
    assert product([s, t]).opens == product_oracle([s, t])


def test_product_too_large():
    with pytest.raises(TooLarge):
        product([discrete(5), discrete(4)])


def test_semi_open():
    s = sierpinski()
    assert s.is_semi_open(M([0]))
    assert not s.is_semi_open(M([1]))
    assert s.is_semi_open(0b11)


@given(spaces())
def test_open_sets_are_semi_open(s):
    assert all(s.is_semi_open(o) for o in s.opens)
