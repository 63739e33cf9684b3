"""Finite groups carrying a finite topology.

On a finite carrier a Hausdorff topology is discrete, so an almost
topological group here is always discrete.  The predicates and the
Hattori-type construction still run on any input, which is what makes
them testable; ``group_hattori(..., force=True)`` skips the precondition.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .compat import is_coarser
from .core import FiniteSpace, SetOfPoints, fmt_set, generate, mask_of, members, product
from .errors import EmptyBase, PreconditionFailed, SizeMismatch, TopologyError

VERDICTS = ("none", "semitopological", "paratopological", "topological")


@dataclass(frozen=True)
class FiniteGroup:
    n: int
    cayley: tuple[tuple[int, ...], ...]
    e: int
    inv: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        n, mul = self.n, self.cayley
        if len(mul) != n or any(len(row) != n for row in mul):
            raise TopologyError(f"Cayley table must be {n}x{n}")
        if any(not 0 <= v < n for row in mul for v in row):
            raise TopologyError("Cayley table entry outside the carrier")
        if not 0 <= self.e < n:
            raise TopologyError(f"identity {self.e} outside the carrier")
        for x in range(n):
            if mul[self.e][x] != x or mul[x][self.e] != x:
                raise TopologyError(f"{self.e} is not an identity (fails at {x})")
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
                        raise TopologyError(f"not associative at ({x}, {y}, {z})")
        inv = []
        for x in range(n):
            ys = [y for y in range(n) if mul[x][y] == self.e]
            if not ys or mul[ys[0]][x] != self.e:
                raise TopologyError(f"{x} has no inverse")
            inv.append(ys[0])
        object.__setattr__(self, "inv", tuple(inv))

    def mul(self, x: int, y: int) -> int:
        return self.cayley[x][y]


def cyclic(n: int) -> FiniteGroup:
    return FiniteGroup(n, tuple(tuple((x + y) % n for y in range(n)) for x in range(n)), 0)


def group_from_dict(d: dict) -> FiniteGroup:
    try:
        return FiniteGroup(int(d["n"]), tuple(tuple(int(v) for v in row) for row in d["mul"]),
                           int(d.get("e", 0)))
    except (KeyError, TypeError, ValueError) as exc:
        raise TopologyError(f"bad group object: {exc}") from None


def setwise_product(g: FiniteGroup, u: SetOfPoints, v: SetOfPoints) -> SetOfPoints:
    return mask_of(g.mul(x, y) for x in members(u) for y in members(v))


def setwise_inverse(g: FiniteGroup, u: SetOfPoints) -> SetOfPoints:
    return mask_of(g.inv[x] for x in members(u))


def _preimage(f: Sequence[int], target: SetOfPoints) -> SetOfPoints:
    return mask_of(x for x, fx in enumerate(f) if target >> fx & 1)


def _continuous(src: FiniteSpace, dst: FiniteSpace, f: Sequence[int]) -> bool:
    return all(src.is_open(_preimage(f, o)) for o in dst.opens)


@dataclass(frozen=True)
class GroupTopologyClass:
    left_translations_continuous: bool
    right_translations_continuous: bool
    multiplication_continuous: bool
    inversion_continuous: bool

    @property
    def verdict(self) -> str:
        if self.multiplication_continuous:
            return "topological" if self.inversion_continuous else "paratopological"
        if self.left_translations_continuous and self.right_translations_continuous:
            return "semitopological"
        return "none"

    def at_least(self, level: str) -> bool:
        return VERDICTS.index(self.verdict) >= VERDICTS.index(level)

    def to_dict(self) -> dict:
        return {
            "left_translations_continuous": self.left_translations_continuous,
            "right_translations_continuous": self.right_translations_continuous,
            "multiplication_continuous": self.multiplication_continuous,
            "inversion_continuous": self.inversion_continuous,
            "verdict": self.verdict,
        }


def classify(g: FiniteGroup, t: FiniteSpace) -> GroupTopologyClass:
    """Continuity of translations, multiplication and inversion, by preimages."""
    if g.n != t.n:
        raise SizeMismatch(f"group has {g.n} elements, space has {t.n} points")
    n = g.n
    left = all(_continuous(t, t, [g.mul(a, x) for x in range(n)]) for a in range(n))
    right = all(_continuous(t, t, [g.mul(x, a) for x in range(n)]) for a in range(n))
    # product points are row-major: (x, y) -> x*n + y
    square = product([t, t])
    mult = _continuous(square, t, [g.mul(x, y) for x in range(n) for y in range(n)])
    inverse = _continuous(t, t, g.inv)
    return GroupTopologyClass(left, right, mult, inverse)


@dataclass(frozen=True)
class AlmostTopologicalCheck:
    ok: bool
    failed: tuple[str, ...] = ()

    @property
    def first_failure(self):
        return self.failed[0] if self.failed else None


def is_almost_topological(g: FiniteGroup, t: FiniteSpace, gamma: FiniteSpace,
                          beta_e: Sequence[SetOfPoints]) -> AlmostTopologicalCheck:
    """Check the structure (t, gamma, beta_e); ``failed`` lists broken clauses in order."""
    if not beta_e:
        raise EmptyBase("the local base at the identity is empty")
    if not g.n == t.n == gamma.n:
        raise SizeMismatch(f"sizes differ: group {g.n}, tau {t.n}, gamma {gamma.n}")
    failed = []
    if not classify(g, t).at_least("paratopological"):
        failed.append("(i) tau is not a paratopological group topology")
    if not is_coarser(gamma, t):
        failed.append("(ii) gamma is not weaker than tau")
    if not gamma.is_t2():
        failed.append("(ii) gamma is not Hausdorff")
    if classify(g, gamma).verdict != "topological":
        failed.append("(ii) gamma is not a group topology")
    e = 1 << g.e
    if not all(u & e and t.is_open(u) for u in beta_e):
        failed.append("(iii) a base member is not a tau-open set containing e")
    elif not any(u & ~t.min_nbhd[g.e] == 0 for u in beta_e):
        failed.append("(iii) beta_e is not a local base at e")
    bad = [u for u in beta_e if not gamma.is_open(u & ~e)]
    if bad:
        failed.append(f"(iv) {fmt_set(bad[0] & ~e)} is not gamma-open")
    return AlmostTopologicalCheck(not failed, tuple(failed))


@dataclass(frozen=True)
class HattoriResult:
    space: FiniteSpace
    valid: bool
    neighbourhoods: tuple[tuple[SetOfPoints, ...], ...]


def group_hattori(g: FiniteGroup, t: FiniteSpace, gamma: FiniteSpace,
                  beta_e: Sequence[SetOfPoints], a: SetOfPoints,
                  force: bool = False) -> HattoriResult:
    """Topology from the systems U*x (x outside a) and U*U^-1*x (x in a)."""
    check = is_almost_topological(g, t, gamma, beta_e)
    if not check.ok and not force:
        raise PreconditionFailed(f"not an almost topological group: {check.first_failure}")
    system = []
    for x in range(g.n):
        px = 1 << x
        if a >> x & 1:
            nbs = {setwise_product(g, setwise_product(g, u, setwise_inverse(g, u)), px)
                   for u in beta_e}
        else:
            nbs = {setwise_product(g, u, px) for u in beta_e}
        system.append(tuple(sorted(nbs)))
    space = generate(g.n, [u for nbs in system for u in nbs])
    # the system is a neighbourhood base of `space` iff every member holds
    # its point and each point's minimal open set is one of its members
    valid = all(all(u >> x & 1 for u in nbs) and space.min_nbhd[x] in nbs
                for x, nbs in enumerate(system))
    return HattoriResult(space, valid, tuple(system))
