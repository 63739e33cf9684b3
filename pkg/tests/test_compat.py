import itertools

import pytest
from hypothesis import given

from topolab.compat import (TopologyPair, are_pi_compatible, decompose_open, gdelta_pi_network,
                            is_admissible_extension, is_pi_network, meet)
from topolab.core import (discrete, from_opens, mask_of, odd_even, product, sierpinski,
                          trivial)
from topolab.enumeration import all_spaces
from topolab.errors import EmptyInput, GroundSetMismatch, NotOpen, NotPiCompatible

from conftest import spaces

M = mask_of
BASE = from_opens(3, [0, M([0]), 0b111])
EXT = from_opens(3, [0, M([0]), M([0, 1]), M([0, 2]), 0b111])


def pi_network_oracle(tau, sigma):
    """Literal definition over all open sets."""
    return all(any(v and v & ~o == 0 for v in tau.opens) for o in sigma.opens if o)


@given(spaces(max_n=4), spaces(max_n=4))
def test_pi_network_matches_definition(tau, sigma):
    if tau.n == sigma.n:
        assert is_pi_network(tau, sigma) == pi_network_oracle(tau, sigma)


def test_pi_network_examples():
    assert is_pi_network(sierpinski(), sierpinski())
    assert not is_pi_network(trivial(2), sierpinski())
    assert is_pi_network(discrete(2), trivial(2))


def test_ground_set_mismatch():
    with pytest.raises(GroundSetMismatch):
        is_pi_network(trivial(2), trivial(3))
    with pytest.raises(GroundSetMismatch):
        TopologyPair(trivial(2), trivial(3))


def test_compatibility_examples():
    assert are_pi_compatible(BASE, BASE)
    assert not are_pi_compatible(odd_even(4), discrete(4))
    assert are_pi_compatible(BASE, EXT)


def test_admissible_examples():
    assert is_admissible_extension(BASE, BASE)
    assert is_admissible_extension(BASE, EXT)
    assert not is_admissible_extension(trivial(2), sierpinski())


def test_decompose_examples():
    d = decompose_open(TopologyPair(EXT, BASE), M([0, 1]))
    assert (d.v, d.nwd) == (M([0]), M([1]))
    d = decompose_open(TopologyPair(EXT, BASE), 0b111)
    assert (d.v, d.nwd) == (0b111, 0)
    oe = odd_even(4)
    d = decompose_open(TopologyPair(oe, oe), M([0, 1]))
    assert (d.v, d.nwd) == (M([0, 1]), 0)


def test_decompose_errors():
    pair = TopologyPair(EXT, BASE)
    with pytest.raises(EmptyInput):
        decompose_open(pair, 0)
    with pytest.raises(NotOpen):
        decompose_open(pair, M([1]))
    with pytest.raises(NotPiCompatible):
        decompose_open(TopologyPair(discrete(4), odd_even(4)), M([0]))


def test_meet_examples():
    assert meet(BASE, BASE) == BASE
    assert meet(discrete(3), trivial(3)) == trivial(3)
    half = from_opens(4, [0, M([0, 1]), 0b1111])
    assert meet(odd_even(4), half) == half


@given(spaces(max_n=4), spaces(max_n=4))
def test_meet_is_intersection_of_families(tau, sigma):
    if tau.n == sigma.n:
        assert meet(tau, sigma).opens == tau.opens & sigma.opens


def test_gdelta_examples():
    oe = odd_even(4)
    assert gdelta_pi_network(TopologyPair(oe, oe))
    assert gdelta_pi_network(TopologyPair(BASE, EXT))
    with pytest.raises(NotPiCompatible):
        gdelta_pi_network(TopologyPair(odd_even(4), discrete(4)))


def test_pi_compatibility_is_equivalence_relation():
    sp = all_spaces(3)
    rel = {(a, b) for a in sp for b in sp if are_pi_compatible(a, b)}
    assert all((a, a) in rel for a in sp)
    assert all((b, a) in rel for a, b in rel)
    for a, b in rel:
        for c in sp:
            if (b, c) in rel:
                assert (a, c) in rel


def test_admissible_implies_compatible():
    for n in (1, 2, 3, 4):
        for b, e in itertools.product(all_spaces(n), repeat=2):
            if is_admissible_extension(b, e):
                assert are_pi_compatible(b, e)


def test_products_of_two_point_pairs():
    sp = all_spaces(2)
    pairs = [(a, b) for a in sp for b in sp if are_pi_compatible(a, b)]
    for (t1, s1), (t2, s2) in itertools.product(pairs, repeat=2):
        assert are_pi_compatible(product([t1, t2]), product([s1, s2]))


def test_odd_even_vs_discrete_same_nwd_different_baire():
    oe, d = odd_even(4), discrete(4)
    assert oe.nowhere_dense_family == d.nowhere_dense_family == {0}
    assert oe.baire_family == oe.opens != d.baire_family == set(range(16))
