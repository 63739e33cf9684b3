"""Relations between two topologies on one ground set.

All checks over "every non-empty open set" of a finite space are reduced
to its minimal neighbourhoods: a non-empty open set is a union of them,
so it contains one, and anything contained in a minimal neighbourhood is
contained in every open superset of it.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import FiniteSpace, SetOfPoints, fmt_set, from_opens, is_subset
from .errors import CheckFailed, EmptyInput, GroundSetMismatch, NotOpen, NotPiCompatible


def _same_ground(tau: FiniteSpace, sigma: FiniteSpace) -> None:
    if tau.n != sigma.n:
        raise GroundSetMismatch(f"ground sets differ: {tau.n} vs {sigma.n} points")


@dataclass(frozen=True)
class TopologyPair:
    tau: FiniteSpace
    sigma: FiniteSpace

    def __post_init__(self):
        _same_ground(self.tau, self.sigma)

    def swapped(self) -> "TopologyPair":
        return TopologyPair(self.sigma, self.tau)


@dataclass(frozen=True)
class Decomposition:
    """``v`` is open in sigma and non-empty; ``v | nwd`` is the decomposed set.

    ``nwd`` is taken disjoint from ``v`` even though the union need not be.
    """

    v: SetOfPoints
    nwd: SetOfPoints


def is_pi_network(tau: FiniteSpace, sigma: FiniteSpace) -> bool:
    """Every non-empty sigma-open set contains a non-empty tau-open set."""
    _same_ground(tau, sigma)
    return all(tau.interior(u) for u in sigma.minimal_opens)


def are_pi_compatible(tau: FiniteSpace, sigma: FiniteSpace) -> bool:
    return is_pi_network(tau, sigma) and is_pi_network(sigma, tau)


def is_coarser(tau: FiniteSpace, sigma: FiniteSpace) -> bool:
    """opens(tau) is a subfamily of opens(sigma)."""
    _same_ground(tau, sigma)
    # tau-open sets are unions of tau-neighbourhoods, so it suffices that
    # each of those is sigma-open, i.e. U_sigma(x) inside U_tau(x)
    return all(is_subset(s, t) for s, t in zip(sigma.min_nbhd, tau.min_nbhd))


def is_admissible_extension(base: FiniteSpace, ext: FiniteSpace) -> bool:
    return is_coarser(base, ext) and is_pi_network(base, ext)


def decompose_open(pair: TopologyPair, o: SetOfPoints) -> Decomposition:
    """Split a tau-open set into a sigma-open core plus a nowhere dense rest."""
    tau, sigma = pair.tau, pair.sigma
    if not o:
        raise EmptyInput("cannot decompose the empty set")
    if not tau.is_open(o):
        raise NotOpen(f"{fmt_set(o)} is not open in tau")
    if not are_pi_compatible(tau, sigma):
        raise NotPiCompatible("decomposition needs a pi-compatible pair")
    v = sigma.interior(o)
    rest = o & ~v
    if not v:
        raise CheckFailed(f"sigma-interior of {fmt_set(o)} is empty")
    if not (tau.is_nowhere_dense(rest) and sigma.is_nowhere_dense(rest)):
        raise CheckFailed(f"remainder {fmt_set(rest)} of {fmt_set(o)} is not nowhere dense")
    return Decomposition(v, rest)


def meet(tau: FiniteSpace, sigma: FiniteSpace) -> FiniteSpace:
    """The topology of sets open in both."""
    _same_ground(tau, sigma)
    return from_opens(tau.n, tau.opens & sigma.opens)


def gdelta_pi_network(pair: TopologyPair) -> bool:
    """Whether the non-empty sets that are G-delta in both spaces form a pi-network for each.

    Finite intersections of open sets are open, so on a finite space the
    G-delta sets are the open sets and the family is the non-empty opens
    of the meet.
    """
    if not are_pi_compatible(pair.tau, pair.sigma):
        raise NotPiCompatible("the G-delta family is only considered for pi-compatible pairs")
    m = meet(pair.tau, pair.sigma)
    return is_pi_network(m, pair.tau) and is_pi_network(m, pair.sigma)
