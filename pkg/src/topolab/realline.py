"""Exact topology on the real line for sets with rational endpoints.

Sets are finite unions of intervals and points (``IntervalSet``) with
``fractions.Fraction`` endpoints and two infinity sentinels.  Four
topologies are supported: Euclidean ``E``, Sorgenfrey ``S`` (bases
``[x, x+e)``), upper-limit ``US`` (bases ``(x-e, x]``) and the Hattori
topology ``H(A)``, where points of ``A`` get Euclidean bases and the
remaining points Sorgenfrey ones.  ``E`` is ``H(R)`` and ``S`` is
``H(empty)``; the operators are implemented once for ``H``.

Statements about "every non-empty open set" are decided on basic open
sets only: any non-empty open set contains a basic one.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import NamedTuple, Optional, Union

from .errors import ParseError, UnsupportedPair


@total_ordering
class _Infinity:
    __slots__ = ("sign",)

    def __init__(self, sign: int):
        self.sign = sign

    def __eq__(self, other):
        return isinstance(other, _Infinity) and other.sign == self.sign

    def __lt__(self, other):
        if isinstance(other, _Infinity):
            return self.sign < other.sign
        return self.sign < 0

    def __hash__(self):
        return hash(("inf", self.sign))

    def __repr__(self):
        return "inf" if self.sign > 0 else "-inf"


NEG_INF = _Infinity(-1)
POS_INF = _Infinity(1)

Endpoint = Union[Fraction, _Infinity]


class Piece(NamedTuple):
    lo: Endpoint
    lo_closed: bool
    hi: Endpoint
    hi_closed: bool

    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, x: Fraction) -> bool:
        if x < self.lo or (x == self.lo and not self.lo_closed):
            return False
        return not (x > self.hi or (x == self.hi and not self.hi_closed))


def _nonempty(p: Piece) -> bool:
    return p.lo < p.hi or (p.lo == p.hi and p.lo_closed and p.hi_closed)


def _piece(lo, lc, hi, hc) -> Piece:
    # infinite ends are never members
    return Piece(lo, lc and lo is not NEG_INF, hi, hc and hi is not POS_INF)


def _touches(a: Piece, b: Piece) -> bool:
    """Do ``a`` and ``b`` (with ``a.lo <= b.lo``) union into one piece?"""
    return b.lo < a.hi or (b.lo == a.hi and (a.hi_closed or b.lo_closed))


@dataclass(frozen=True)
class IntervalSet:
    """Canonical union of pairwise separated pieces, sorted by left end.

    Build instances with :func:`interval_set` (or the helpers below), which
    normalizes; equal sets then have equal ``pieces``.
    """

    pieces: tuple[Piece, ...] = ()

    def __bool__(self):
        return bool(self.pieces)

    def contains(self, x) -> bool:
        x = Fraction(x)
        return any(p.contains(x) for p in self.pieces)

    def union(self, other: "IntervalSet") -> "IntervalSet":
        return interval_set(self.pieces + other.pieces)

    def complement(self) -> "IntervalSet":
        out = []
        lo, lc = NEG_INF, False
        for p in self.pieces:
            out.append(_piece(lo, lc, p.lo, not p.lo_closed))
            lo, lc = p.hi, not p.hi_closed
        out.append(_piece(lo, lc, POS_INF, False))
        return interval_set(out)

    def intersection(self, other: "IntervalSet") -> "IntervalSet":
        out = []
        for a in self.pieces:
            for b in other.pieces:
                if a.lo > b.lo or (a.lo == b.lo and not a.lo_closed):
                    lo, lc = a.lo, a.lo_closed
                else:
                    lo, lc = b.lo, b.lo_closed
                if a.hi < b.hi or (a.hi == b.hi and not a.hi_closed):
                    hi, hc = a.hi, a.hi_closed
                else:
                    hi, hc = b.hi, b.hi_closed
                out.append(Piece(lo, lc, hi, hc))
        return interval_set(out)

    def difference(self, other: "IntervalSet") -> "IntervalSet":
        return self.intersection(other.complement())

    def issubset(self, other: "IntervalSet") -> bool:
        return not self.difference(other)

    __or__ = union
    __and__ = intersection
    __sub__ = difference
    __le__ = issubset

    def __invert__(self):
        return self.complement()

    def endpoints(self) -> list[Fraction]:
        pts = set()
        for p in self.pieces:
            for e in (p.lo, p.hi):
                if not isinstance(e, _Infinity):
                    pts.add(e)
        return sorted(pts)

    def __str__(self):
        return format_set(self)


def interval_set(pieces) -> IntervalSet:
    """Normalize pieces: drop empty ones, sort, merge touching ones."""
    ps = sorted((_piece(*p) for p in pieces if _nonempty(_piece(*p))),
                key=lambda p: (p.lo, not p.lo_closed))
    merged: list[Piece] = []
    for p in ps:
        if merged and _touches(merged[-1], p):
            m = merged[-1]
            if p.hi > m.hi:
                merged[-1] = Piece(m.lo, m.lo_closed, p.hi, p.hi_closed)
            elif p.hi == m.hi:
                merged[-1] = Piece(m.lo, m.lo_closed, m.hi, m.hi_closed or p.hi_closed)
        else:
            merged.append(p)
    return IntervalSet(tuple(merged))


EMPTY = IntervalSet()
LINE = interval_set([(NEG_INF, False, POS_INF, False)])


def _q(x) -> Endpoint:
    if isinstance(x, _Infinity):
        return x
    if isinstance(x, float) and math.isinf(x):
        return POS_INF if x > 0 else NEG_INF
    if x in ("inf", "-inf"):
        return POS_INF if x == "inf" else NEG_INF
    return Fraction(x)


def open_interval(a, b) -> IntervalSet:
    return interval_set([(_q(a), False, _q(b), False)])


def closed_interval(a, b) -> IntervalSet:
    return interval_set([(_q(a), True, _q(b), True)])


def left_closed(a, b) -> IntervalSet:
    """``[a, b)``"""
    return interval_set([(_q(a), True, _q(b), False)])


def right_closed(a, b) -> IntervalSet:
    """``(a, b]``"""
    return interval_set([(_q(a), False, _q(b), True)])


def point(p) -> IntervalSet:
    return closed_interval(p, p)


# -- text form ---------------------------------------------------------------

def _fmt_end(e: Endpoint) -> str:
    if isinstance(e, _Infinity):
        return repr(e)
    return str(e)


def format_set(s: IntervalSet) -> str:
    if not s.pieces:
        return "empty"
    parts = []
    for p in s.pieces:
        if p.is_point():
            parts.append("{" + _fmt_end(p.lo) + "}")
        else:
            parts.append(("[" if p.lo_closed else "(") + _fmt_end(p.lo) + ","
                         + _fmt_end(p.hi) + ("]" if p.hi_closed else ")"))
    return " u ".join(parts)


_NUM = r"\s*(-?inf|[+-]?\d+(?:/\d+)?)\s*"
_PIECE = re.compile(r"\s*(?:([\[(])" + _NUM + "," + _NUM + r"([\])])|\{" + _NUM + r"\})\s*$")


def _parse_end(tok: str) -> Endpoint:
    if tok == "inf":
        return POS_INF
    if tok == "-inf":
        return NEG_INF
    return Fraction(tok)


def parse_set(text: str) -> IntervalSet:
    """Parse e.g. ``"[0,1) u {3/2} u (2,inf)"``; ``"empty"`` is the empty set."""
    text = text.strip()
    if text in ("", "empty", "{}"):
        return EMPTY
    pieces = []
    for chunk in text.split("u"):
        m = _PIECE.match(chunk)
        if not m:
            raise ParseError(f"cannot parse interval piece {chunk.strip()!r} in {text!r}")
        if m.group(5) is not None:
            p = _parse_end(m.group(5))
            if isinstance(p, _Infinity):
                raise ParseError(f"infinite point in {text!r}")
            pieces.append((p, True, p, True))
        else:
            lo, hi = _parse_end(m.group(2)), _parse_end(m.group(3))
            if lo is POS_INF or hi is NEG_INF:
                raise ParseError(f"reversed infinite endpoint in {chunk.strip()!r}")
            if m.group(1) == "[" and isinstance(lo, _Infinity) or \
                    m.group(4) == "]" and isinstance(hi, _Infinity):
                raise ParseError(f"infinite endpoints must be open in {chunk.strip()!r}")
            pieces.append((lo, m.group(1) == "[", hi, m.group(4) == "]"))
    return interval_set(pieces)


# -- topologies --------------------------------------------------------------

@dataclass(frozen=True)
class LineTopology:
    kind: str                      # "E", "S", "US" or "H"
    a: IntervalSet = EMPTY         # Euclidean points, for kind "H" only

    def __post_init__(self):
        if self.kind not in ("E", "S", "US", "H"):
            raise ValueError(f"unknown line topology {self.kind!r}")

    def hattori_set(self) -> Optional[IntervalSet]:
        """The set of Euclidean points, or None for the upper-limit topology."""
        return {"E": LINE, "S": EMPTY, "US": None}.get(self.kind, self.a)

    def __str__(self):
        return f"H:{format_set(self.a)}" if self.kind == "H" else self.kind


E = LineTopology("E")
S = LineTopology("S")
US = LineTopology("US")


def hattori(a: IntervalSet) -> LineTopology:
    return LineTopology("H", a)


def parse_topology(text: str) -> LineTopology:
    text = text.strip()
    if text in ("E", "S", "US"):
        return LineTopology(text)
    if text.startswith("H:"):
        return hattori(parse_set(text[2:]))
    raise ParseError(f"topology must be E, S, US or H:<set>, got {text!r}")


def _map_pieces(s: IntervalSet, f) -> IntervalSet:
    return interval_set(f(p) for p in s.pieces)


# Normalized pieces are separated by at least one missing point, so the
# interior and closure of a set are the unions of those of its pieces.

def _int_euclid(s):
    return _map_pieces(s, lambda p: (p.lo, False, p.hi, False))


def _cl_euclid(s):
    return _map_pieces(s, lambda p: (p.lo, True, p.hi, True))


def _int_lower(s):
    # [x, x+e) inside the piece: the left end survives if it is a member
    return _map_pieces(s, lambda p: (p.lo, p.lo_closed, p.hi, False))


def _cl_lower(s):
    # every [x, x+e) at the left end meets the piece; at the right end only
    # if the end itself is a member
    return _map_pieces(s, lambda p: (p.lo, True, p.hi, p.hi_closed))


def _int_upper(s):
    return _map_pieces(s, lambda p: (p.lo, False, p.hi, p.hi_closed))


def _cl_upper(s):
    return _map_pieces(s, lambda p: (p.lo, p.lo_closed, p.hi, True))


def rl_interior(t: LineTopology, s: IntervalSet) -> IntervalSet:
    a = t.hattori_set()
    if a is None:
        return _int_upper(s)
    # Euclidean rule on A, Sorgenfrey rule off A
    return _int_euclid(s) | (_int_lower(s) - a)


def rl_closure(t: LineTopology, s: IntervalSet) -> IntervalSet:
    a = t.hattori_set()
    if a is None:
        return _cl_upper(s)
    return (_cl_euclid(s) & a) | (_cl_lower(s) - a)


def rl_is_open(t: LineTopology, s: IntervalSet) -> bool:
    return rl_interior(t, s) == s


def rl_is_closed(t: LineTopology, s: IntervalSet) -> bool:
    return rl_closure(t, s) == s


def rl_is_semi_open(t: LineTopology, s: IntervalSet) -> bool:
    return s <= rl_closure(t, rl_interior(t, s))


# -- comparisons -------------------------------------------------------------

def hattori_compare(a: IntervalSet, b: IntervalSet) -> str:
    """How tau(a) relates to tau(b): "equal", "finer", "coarser" or "incomparable".

    tau(A) is contained in tau(B) exactly when B is a subset of A, so a
    larger Euclidean set gives a coarser topology.
    """
    a_in_b, b_in_a = a <= b, b <= a
    if a_in_b and b_in_a:
        return "equal"
    if b_in_a:
        return "coarser"
    if a_in_b:
        return "finer"
    return "incomparable"


def sample_points(*sets: IntervalSet) -> list[Fraction]:
    """One point from every class of the partition cut out by the endpoints.

    Membership in each of ``sets`` is constant between consecutive
    endpoints, so these points realize every membership pattern.
    """
    ends = sorted({e for s in sets for e in s.endpoints()})
    if not ends:
        return [Fraction(0)]
    pts = [ends[0] - 1]
    for x, y in zip(ends, ends[1:]):
        pts += [x, (x + y) / 2]
    pts += [ends[-1], ends[-1] + 1]
    return pts


def _gap(x: Fraction, pts: list[Fraction]) -> Fraction:
    """A radius below the distance from x to any other sample point."""
    d = [abs(p - x) for p in pts if p != x]
    return min(d) / 2 if d else Fraction(1)


def _basics_at(t: LineTopology, x: Fraction, eps: Fraction) -> IntervalSet:
    a = t.hattori_set()
    if a is None:
        return right_closed(x - eps, x)
    if a.contains(x):
        return open_interval(x - eps, x + eps)
    return left_closed(x, x + eps)


def pointwise_coarser(t1: LineTopology, t2: LineTopology, pts: list[Fraction]) -> bool:
    """t1 inside t2, decided by asking at each sample point whether the
    small t1-basic neighbourhood there is t2-open."""
    for x in pts:
        basic = _basics_at(t1, x, _gap(x, pts))
        if not rl_is_open(t2, basic):
            return False
    return True


def _pi_base_on_basics(t1: LineTopology, t2: LineTopology, pts: list[Fraction]) -> bool:
    """Every sampled t2-basic open set contains a non-empty t1-open set."""
    return all(rl_interior(t1, _basics_at(t2, x, _gap(x, pts))) for x in pts)


def _coarser(base: LineTopology, ext: LineTopology) -> bool:
    ab, ae = base.hattori_set(), ext.hattori_set()
    if ab is not None and ae is not None:
        return ae <= ab
    if ab is None and ae is None:
        return True
    # exactly one side is the upper-limit topology
    other = ab if ae is None else ae
    if other != LINE and other != EMPTY:
        raise UnsupportedPair(f"upper-limit topology against {base if ae is None else ext}")
    pts = sample_points(other)
    return pointwise_coarser(base, ext, pts)


def rl_is_admissible_extension(base: LineTopology, ext: LineTopology) -> bool:
    if not _coarser(base, ext):
        return False
    pts = sample_points(*(s for s in (base.hattori_set(), ext.hattori_set()) if s is not None))
    return _pi_base_on_basics(base, ext, pts)


def rl_are_pi_compatible(t1: LineTopology, t2: LineTopology) -> bool:
    pts = sample_points(*(s for s in (t1.hattori_set(), t2.hattori_set()) if s is not None))
    return _pi_base_on_basics(t1, t2, pts) and _pi_base_on_basics(t2, t1, pts)


def _point_outside(a: IntervalSet) -> Fraction:
    if not a.pieces:
        return Fraction(0)
    top = a.pieces[-1]
    if top.hi is not POS_INF:
        return Fraction(math.floor(top.hi) + 1)
    # unbounded above: take a point of the last gap, whose right end is finite
    gap = a.complement().pieces[-1]
    if gap.is_point():
        return gap.lo
    if gap.lo is NEG_INF:
        return Fraction(math.floor(gap.hi) - 1)
    if gap.lo_closed:
        return gap.lo
    c = Fraction(math.floor(gap.lo) + 1)
    return c if gap.contains(c) else (gap.lo + gap.hi) / 2


def hattori_clopen_witness(a: IntervalSet) -> Optional[IntervalSet]:
    """A proper non-empty clopen set ``[x, inf)`` of H(a) with ``x`` outside a.

    ``x`` is the least integer above the supremum of ``a`` when ``a`` is
    bounded above (0 for the empty set); otherwise a point of the last gap
    of ``a``.  Returns None for the whole line, whose H-topology is
    Euclidean and connected.
    """
    if a == LINE:
        return None
    x = _point_outside(a)
    assert not a.contains(x)
    return left_closed(x, POS_INF)
