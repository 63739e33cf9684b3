"""Finite topological spaces and their point-set operators.

Subsets of the ground set ``{0, ..., n-1}`` are plain ``int`` bitmasks
(bit ``x`` set means ``x`` is a member).  A topology is stored by its
minimal open neighbourhoods, one mask per point; on a finite set this is
the same data as the specialization preorder, and it determines the open
family uniquely.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import CheckFailed, NotATopology, TooLarge

MAX_POINTS = 16

SetOfPoints = int


# -- bitmask helpers ---------------------------------------------------------

def mask_of(points: Iterable[int]) -> SetOfPoints:
    m = 0
    for p in points:
        m |= 1 << p
    return m


def members(mask: SetOfPoints) -> list[int]:
    out = []
    x = 0
    while mask:
        if mask & 1:
            out.append(x)
        mask >>= 1
        x += 1
    return out


def full_mask(n: int) -> SetOfPoints:
    return (1 << n) - 1


def is_subset(a: SetOfPoints, b: SetOfPoints) -> bool:
    return a & ~b == 0


def submasks(mask: SetOfPoints) -> Iterator[SetOfPoints]:
    """All subsets of ``mask``, in increasing numeric order."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def fmt_set(mask: SetOfPoints) -> str:
    return "{" + ",".join(map(str, members(mask))) + "}"


# -- spaces ------------------------------------------------------------------

@dataclass(frozen=True)
class FiniteSpace:
    """A topology on ``n`` points, given by minimal open neighbourhoods."""

    n: int
    min_nbhd: tuple[int, ...]

    def __post_init__(self):
        if not 0 < self.n <= MAX_POINTS:
            raise TooLarge(f"ground set size {self.n} outside 1..{MAX_POINTS}")
        if len(self.min_nbhd) != self.n:
            raise NotATopology(f"expected {self.n} neighbourhoods, got {len(self.min_nbhd)}")
        X = full_mask(self.n)
        for x, u in enumerate(self.min_nbhd):
            if u & ~X:
                raise NotATopology(f"neighbourhood of {x} leaves the ground set")
            if not u >> x & 1:
                raise NotATopology(f"point {x} missing from its own neighbourhood")
            for y in members(u):
                if not is_subset(self.min_nbhd[y], u):
                    raise NotATopology(
                        f"not transitive: {y} in U({x}) but U({y}) not inside U({x})")

    @property
    def full(self) -> SetOfPoints:
        return full_mask(self.n)

    @cached_property
    def minimal_opens(self) -> tuple[SetOfPoints, ...]:
        """Distinct minimal neighbourhoods, sorted; every non-empty open contains one."""
        return tuple(sorted(set(self.min_nbhd)))

    @cached_property
    def opens(self) -> frozenset[SetOfPoints]:
        # unions of minimal neighbourhoods, grown one generator at a time
        fam = {0}
        for u in self.minimal_opens:
            fam |= {o | u for o in fam}
        return frozenset(fam)

    def sorted_opens(self) -> list[list[int]]:
        return sorted(members(o) for o in self.opens)

    def is_open(self, a: SetOfPoints) -> bool:
        return all(is_subset(self.min_nbhd[x], a) for x in members(a))

    def is_closed(self, a: SetOfPoints) -> bool:
        return self.is_open(self.full & ~a)

    def interior(self, a: SetOfPoints) -> SetOfPoints:
        out = 0
        for x, u in enumerate(self.min_nbhd):
            if u & ~a == 0:
                out |= 1 << x
        return out

    def closure(self, a: SetOfPoints) -> SetOfPoints:
        out = 0
        for x, u in enumerate(self.min_nbhd):
            if u & a:
                out |= 1 << x
        return out

    def is_dense(self, a: SetOfPoints) -> bool:
        return self.closure(a) == self.full

    def is_nowhere_dense(self, a: SetOfPoints) -> bool:
        return self.interior(self.closure(a)) == 0

    def is_meager(self, a: SetOfPoints) -> bool:
        # A union of nowhere dense sets covering `a` forces every singleton of
        # `a` to be nowhere dense; conversely `a` is the finite union of its
        # singletons.  Finite unions of nowhere dense sets are nowhere dense.
        meager = all(self.is_nowhere_dense(1 << x) for x in members(a))
        if meager != self.is_nowhere_dense(a):
            raise CheckFailed(f"meager/nowhere-dense disagree on {fmt_set(a)}")
        return meager

    @cached_property
    def nwd_max(self) -> SetOfPoints:
        """The largest nowhere dense set (union of all nowhere dense singletons)."""
        m = 0
        for x in range(self.n):
            if self.is_nowhere_dense(1 << x):
                m |= 1 << x
        if not self.is_nowhere_dense(m):
            raise CheckFailed("union of nowhere dense singletons is not nowhere dense")
        return m

    @cached_property
    def nowhere_dense_family(self) -> frozenset[SetOfPoints]:
        return frozenset(a for a in range(1 << self.n) if self.is_nowhere_dense(a))

    @cached_property
    def meager_family(self) -> frozenset[SetOfPoints]:
        return frozenset(a for a in range(1 << self.n) if self.is_meager(a))

    def has_baire_property(self, a: SetOfPoints) -> bool:
        # A = (O\M) u N with M, N meager  <=>  A ^ O meager for some open O:
        # given the latter take M = O\A, N = A\O; given the former,
        # A ^ O is inside M u N.
        return any(self.is_meager(a ^ o) for o in self.opens)

    @cached_property
    def baire_family(self) -> frozenset[SetOfPoints]:
        return frozenset(o ^ m for o in self.opens for m in submasks(self.nwd_max))

    def is_baire_space(self) -> bool:
        meet = self.full
        for o in self.opens:
            if self.is_dense(o):
                meet &= o
        return self.is_dense(meet)

    def density(self) -> int:
        for k in range(self.n + 1):
            for combo in itertools.combinations(range(self.n), k):
                if self.is_dense(mask_of(combo)):
                    return k
        raise CheckFailed("the whole space is not dense")

    def is_connected(self) -> bool:
        return not any(0 != o != self.full and self.is_closed(o) for o in self.opens)

    def isolated_points(self) -> SetOfPoints:
        return mask_of(x for x, u in enumerate(self.min_nbhd) if u == 1 << x)

    def is_t0(self) -> bool:
        return len(set(self.min_nbhd)) == self.n

    def is_t1(self) -> bool:
        # each x has an open set avoiding each y != x
        return all(not self.min_nbhd[x] >> y & 1
                   for x in range(self.n) for y in range(self.n) if x != y)

    def is_t2(self) -> bool:
        return all(self.min_nbhd[x] & self.min_nbhd[y] == 0
                   for x in range(self.n) for y in range(x + 1, self.n))

    def separation(self) -> dict[str, bool]:
        return {"T0": self.is_t0(), "T1": self.is_t1(), "T2": self.is_t2()}

    def is_semi_open(self, a: SetOfPoints) -> bool:
        return is_subset(a, self.closure(self.interior(a)))

    def relation_matrix(self) -> tuple[tuple[int, ...], ...]:
        """``R[x][y] = 1`` iff ``y`` lies in the minimal neighbourhood of ``x``."""
        return tuple(tuple(u >> y & 1 for y in range(self.n)) for u in self.min_nbhd)

    @classmethod
    def from_relation_matrix(cls, rows: Sequence[Sequence[int]]) -> "FiniteSpace":
        return cls(len(rows), tuple(mask_of(y for y, r in enumerate(row) if r) for row in rows))

    def __str__(self):
        return "[" + ", ".join(fmt_set(u) for u in self.min_nbhd) + "]"


@dataclass(frozen=True)
class SpaceReport:
    separation: dict
    density: int
    isolated_points: SetOfPoints
    is_connected: bool
    is_baire: bool
    nwd_max: SetOfPoints

    def to_dict(self) -> dict:
        return {
            "separation": self.separation,
            "density": self.density,
            "isolated_points": members(self.isolated_points),
            "is_connected": self.is_connected,
            "is_baire": self.is_baire,
            "nwd_max": members(self.nwd_max),
        }


def analyze(s: FiniteSpace) -> SpaceReport:
    return SpaceReport(
        separation=s.separation(),
        density=s.density(),
        isolated_points=s.isolated_points(),
        is_connected=s.is_connected(),
        is_baire=s.is_baire_space(),
        nwd_max=s.nwd_max,
    )


# -- constructors ------------------------------------------------------------

def from_opens(n: int, opens: Iterable[SetOfPoints]) -> FiniteSpace:
    """Canonicalize a topology given as its full open family."""
    if not 0 < n <= MAX_POINTS:
        raise TooLarge(f"ground set size {n} outside 1..{MAX_POINTS}")
    fam = set(opens)
    X = full_mask(n)
    if 0 not in fam:
        raise NotATopology("empty set missing from the open family")
    if X not in fam:
        raise NotATopology("whole space missing from the open family")
    for a in fam:
        if a & ~X:
            raise NotATopology(f"{fmt_set(a)} is not a subset of the ground set")
    ordered = sorted(fam)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1:]:
            if a | b not in fam:
                raise NotATopology(f"union of {fmt_set(a)} and {fmt_set(b)} is not open")
            if a & b not in fam:
                raise NotATopology(f"intersection of {fmt_set(a)} and {fmt_set(b)} is not open")
    nb = []
    for x in range(n):
        u = X
        for o in fam:
            if o >> x & 1:
                u &= o
        nb.append(u)
    s = FiniteSpace(n, tuple(nb))
    if s.opens != fam:
        raise CheckFailed("derived open family differs from the input family")
    return s


def generate(n: int, subbasis: Iterable[SetOfPoints]) -> FiniteSpace:
    """Smallest topology on ``n`` points containing every set of ``subbasis``."""
    subbasis = list(subbasis)
    X = full_mask(n)
    nb = []
    for x in range(n):
        u = X
        for b in subbasis:
            if b >> x & 1:
                u &= b
        nb.append(u)
    return FiniteSpace(n, tuple(nb))


def discrete(n: int) -> FiniteSpace:
    return FiniteSpace(n, tuple(1 << x for x in range(n)))


def trivial(n: int) -> FiniteSpace:
    return FiniteSpace(n, (full_mask(n),) * n)


def sierpinski() -> FiniteSpace:
    return FiniteSpace(2, (0b01, 0b11))


def partition_space(n: int, blocks: Iterable[Iterable[int]]) -> FiniteSpace:
    """Topology generated by a partition (the blocks are the minimal opens)."""
    return generate(n, [mask_of(b) for b in blocks])


def odd_even(n: int = 4) -> FiniteSpace:
    """Pairs {0,1}, {2,3}, ... as blocks; ``n`` must be even."""
    if n % 2:
        raise ValueError("odd-even space needs an even number of points")
    return partition_space(n, [(k, k + 1) for k in range(0, n, 2)])


def khalimsky(n: int = 5) -> FiniteSpace:
    """Window {0..n-1} of the digital line: odd points open, even points closed.

    Generated by {k-1, k, k+1} around each even ``k``, clipped to the window.
    """
    return generate(n, [mask_of(p for p in range(k - 1, k + 2) if 0 <= p < n)
                        for k in range(0, n, 2)])


def product(spaces: Sequence[FiniteSpace]) -> FiniteSpace:
    """Product topology; tuples are indexed row-major (last coordinate fastest)."""
    sizes = [s.n for s in spaces]
    total = 1
    for k in sizes:
        total *= k
    if total > MAX_POINTS:
        raise TooLarge(f"product has {total} points, limit is {MAX_POINTS}")
    coords = list(itertools.product(*(range(k) for k in sizes)))
    index = {c: i for i, c in enumerate(coords)}
    nb = []
    for c in coords:
        factors = [members(s.min_nbhd[ci]) for s, ci in zip(spaces, c)]
        nb.append(mask_of(index[t] for t in itertools.product(*factors)))
    return FiniteSpace(total, tuple(nb))


def is_continuous(src: FiniteSpace, dst: FiniteSpace, f: Sequence[int]) -> bool:
    """Preimage of every open set of ``dst`` is open in ``src``."""
    for o in dst.opens:
        pre = mask_of(x for x in range(src.n) if o >> f[x] & 1)
        if not src.is_open(pre):
            return False
    return True


# -- JSON --------------------------------------------------------------------

def space_to_dict(s: FiniteSpace) -> dict:
    return {"n": s.n, "min_nbhds": [members(u) for u in s.min_nbhd]}


def space_from_dict(d: dict) -> FiniteSpace:
    try:
        n = int(d["n"])
    except (KeyError, TypeError, ValueError):
        raise NotATopology(f"space object needs an integer 'n': {d!r}") from None
    if "min_nbhds" in d:
        nb = d["min_nbhds"]
        if not isinstance(nb, list):
            raise NotATopology("'min_nbhds' must be a list of point lists")
        return FiniteSpace(n, tuple(_checked_mask(n, u) for u in nb))
    if "opens" in d:
        return from_opens(n, [_checked_mask(n, o) for o in d["opens"]])
    raise NotATopology("space object needs 'opens' or 'min_nbhds'")


def _checked_mask(n: int, pts) -> SetOfPoints:
    if not isinstance(pts, list) or not all(isinstance(p, int) and 0 <= p < n for p in pts):
        raise NotATopology(f"bad point list {pts!r} for n={n}")
    return mask_of(pts)
