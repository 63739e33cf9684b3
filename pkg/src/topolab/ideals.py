"""Ideals of sets, local functions and the topologies they induce.

On a finite ground set every ideal is principal: it is closed under
finite unions, so the union of all its members is its largest member.
An ``Ideal`` is therefore stored by that generator.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .compat import is_admissible_extension
from .core import FiniteSpace, SetOfPoints, from_opens, is_subset


@dataclass(frozen=True)
class Ideal:
    generator: SetOfPoints

    def __contains__(self, a: SetOfPoints) -> bool:
        return is_subset(a, self.generator)


def local_function(s: FiniteSpace, i: Ideal, a: SetOfPoints) -> SetOfPoints:
    """Points every neighbourhood of which meets ``a`` outside the ideal.

    Every open set containing ``x`` contains its minimal neighbourhood, and
    ideals are closed downwards, so checking the minimal one is enough.
    """
    out = 0
    for x, u in enumerate(s.min_nbhd):
        if a & u not in i:
            out |= 1 << x
    return out


def star_closure(s: FiniteSpace, i: Ideal, a: SetOfPoints) -> SetOfPoints:
    return a | local_function(s, i, a)


def star_topology(s: FiniteSpace, i: Ideal) -> FiniteSpace:
    X = s.full
    closed = [c for c in range(1 << s.n) if star_closure(s, i, c) == c]
    return from_opens(s.n, [X & ~c for c in closed])


def nwd_ideal(s: FiniteSpace) -> Ideal:
    return Ideal(s.nwd_max)


def alpha_topology(s: FiniteSpace) -> FiniteSpace:
    opens = [a for a in range(1 << s.n)
             if is_subset(a, s.interior(s.closure(s.interior(a))))]
    return from_opens(s.n, opens)


def is_star_admissible(s: FiniteSpace, i: Ideal) -> tuple[bool, Optional[SetOfPoints]]:
    """Is the star topology an admissible extension of ``s``?

    On failure the second item is a star-open set containing no non-empty
    open set of ``s``.
    """
    st = star_topology(s, i)
    if is_admissible_extension(s, st):
        return True, None
    for u in st.minimal_opens:
        if not s.interior(u):
            return False, u
    # s is always coarser than its star topology, so a failure is a pi-base failure
    raise AssertionError("inadmissible star topology without a witness")
