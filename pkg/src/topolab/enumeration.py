"""Exhaustive enumeration of finite topologies and the theorem harness.

Topologies on ``n`` labeled points correspond one-to-one with preorders,
so they are generated as preorders, one point at a time.
"""
from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator, Optional

from .compat import (TopologyPair, are_pi_compatible, decompose_open, gdelta_pi_network,
                     is_admissible_extension, is_coarser, meet)
from .core import FiniteSpace, analyze, full_mask, is_subset, members, product, space_to_dict
from .errors import CheckFailed, NOutOfRange, UnknownPredicate, UnknownTheorem
from .ideals import (Ideal, alpha_topology, is_star_admissible, local_function, nwd_ideal,
                     star_closure, star_topology)

MAX_ENUM_N = 5


# -- enumeration -------------------------------------------------------------

def _up_sets(nb: tuple[int, ...]) -> list[int]:
    fam = {0}
    for u in sorted(set(nb)):
        fam |= {o | u for o in fam}
    return sorted(fam)


def _extend(nb: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    # New point p sits above the open set U (its strict up-set) and below
    # the closed set D (its strict down-set); transitivity needs U inside
    # the neighbourhood of every point of D.
    k = len(nb)
    p = 1 << k
    opens = _up_sets(nb)
    full = full_mask(k)
    closeds = sorted(full & ~o for o in opens)
    for up in opens:
        for down in closeds:
            if all(is_subset(up, nb[x]) for x in members(down)):
                yield tuple(u | p if down >> x & 1 else u for x, u in enumerate(nb)) + (up | p,)


def _preorders(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for nb in _preorders(n - 1):
        yield from _extend(nb)


def enumerate_topologies(n: int) -> Iterator[FiniteSpace]:
    """Every labeled topology on ``n`` points exactly once, in a fixed order."""
    if not 1 <= n <= MAX_ENUM_N:
        raise NOutOfRange(f"n={n} outside 1..{MAX_ENUM_N}")
    for nb in _preorders(n):
        yield FiniteSpace(n, nb)


@lru_cache(maxsize=None)
def all_spaces(n: int) -> tuple[FiniteSpace, ...]:
    return tuple(enumerate_topologies(n))


def count_by_relation_matrices(n: int) -> int:
    """Independent count: reflexive relation matrices that are transitive."""
    off = [(x, y) for x in range(n) for y in range(n) if x != y]
    count = 0
    for bits in range(1 << len(off)):
        rows = [1 << x for x in range(n)]
        for k, (x, y) in enumerate(off):
            if bits >> k & 1:
                rows[x] |= 1 << y
        if all(rows[y] & ~rows[x] == 0 for x in range(n) for y in range(n) if rows[x] >> y & 1):
            count += 1
    return count


# -- checkers ----------------------------------------------------------------
#
# A checker takes (n, i) and examines every instance whose first space is
# all_spaces(n)[i]; it returns (instances, counterexamples).  Splitting on
# i is what the worker pool parallelizes over.

def _cex(*spaces: FiniteSpace, **detail) -> dict:
    d = {"spaces": [space_to_dict(s) for s in spaces]}
    d.update(detail)
    return d


def _pi_partners(n: int, i: int) -> Iterator[FiniteSpace]:
    tau = all_spaces(n)[i]
    for sigma in all_spaces(n):
        if are_pi_compatible(tau, sigma):
            yield sigma


def _admissible_exts(n: int, i: int) -> Iterator[FiniteSpace]:
    base = all_spaces(n)[i]
    for ext in all_spaces(n):
        if is_admissible_extension(base, ext):
            yield ext


def check_l33(n, i):
    tau = all_spaces(n)[i]
    count, out = 0, []
    for sigma in _pi_partners(n, i):
        count += 1
        if tau.nowhere_dense_family != sigma.nowhere_dense_family:
            out.append(_cex(tau, sigma, family="nowhere dense"))
        elif tau.meager_family != sigma.meager_family:
            out.append(_cex(tau, sigma, family="meager"))
    return count, out


def check_c34(n, i):
    tau = all_spaces(n)[i]
    count, out = 0, []
    for sigma in _pi_partners(n, i):
        count += 1
        if tau.baire_family != sigma.baire_family:
            diff = sorted(tau.baire_family ^ sigma.baire_family)
            out.append(_cex(tau, sigma, witness=members(diff[0])))
    return count, out


def check_decomp(n, i):
    tau = all_spaces(n)[i]
    count, out = 0, []
    for sigma in _pi_partners(n, i):
        pair = TopologyPair(tau, sigma)
        for o in sorted(tau.opens):
            if not o:
                continue
            count += 1
            try:
                decompose_open(pair, o)
            except CheckFailed as exc:
                out.append(_cex(tau, sigma, witness=members(o), error=str(exc)))
    return count, out


def check_t5a(n, i):
    tau = all_spaces(n)[i]
    count, out = 0, []
    for sigma in _pi_partners(n, i):
        count += 1
        if tau.is_baire_space() != sigma.is_baire_space():
            out.append(_cex(tau, sigma))
    return count, out


def check_t5b(n, i):
    tau = all_spaces(n)[i]
    count, out = 0, []
    for sigma in _pi_partners(n, i):
        count += 1
        if not gdelta_pi_network(TopologyPair(tau, sigma)):
            out.append(_cex(tau, sigma))
    return count, out


def check_q3(n, i):
    tau = all_spaces(n)[i]
    count, out = 0, []
    for sigma in _pi_partners(n, i):
        count += 1
        m = meet(tau, sigma)
        if not (is_admissible_extension(m, tau) and is_admissible_extension(m, sigma)):
            out.append(_cex(tau, sigma, meet=space_to_dict(m)))
    return count, out


def check_dense(n, i):
    tau = all_spaces(n)[i]
    count, out = 0, []
    for sigma in _pi_partners(n, i):
        count += 1
        bad = next((a for a in range(1 << n) if tau.is_dense(a) and not sigma.is_dense(a)), None)
        if bad is not None:
            out.append(_cex(tau, sigma, witness=members(bad)))
        elif tau.density() != sigma.density():
            out.append(_cex(tau, sigma, densities=[tau.density(), sigma.density()]))
    return count, out


@lru_cache(maxsize=None)
def _pi_pairs_small() -> tuple[tuple[FiniteSpace, FiniteSpace], ...]:
    spaces = all_spaces(2)
    return tuple((a, b) for a in spaces for b in spaces if are_pi_compatible(a, b))


def check_prod(n, i):
    # products with every pi-compatible pair on two points; also the
    # density and Baire-space consequences for the products
    tau = all_spaces(n)[i]
    count, out = 0, []
    for sigma in _pi_partners(n, i):
        for t2, s2 in _pi_pairs_small():
            count += 1
            pt, ps = product([tau, t2]), product([sigma, s2])
            if not are_pi_compatible(pt, ps):
                out.append(_cex(tau, sigma, t2, s2, failed="pi-compatible"))
            elif pt.density() != ps.density():
                out.append(_cex(tau, sigma, t2, s2, failed="density"))
            elif pt.is_baire_space() != ps.is_baire_space():
                out.append(_cex(tau, sigma, t2, s2, failed="baire space"))
    return count, out


def check_semiopen(n, i):
    base = all_spaces(n)[i]
    count, out = 0, []
    for ext in _admissible_exts(n, i):
        count += 1
        bad = next((o for o in sorted(ext.opens) if o and not base.is_semi_open(o)), None)
        if bad is not None:
            out.append(_cex(base, ext, witness=members(bad)))
    return count, out


def check_axioms(n, i):
    base = all_spaces(n)[i]
    count, out = 0, []
    sep_base = base.separation()
    for ext in _admissible_exts(n, i):
        count += 1
        sep_ext = ext.separation()
        lost = [k for k in ("T0", "T1", "T2") if sep_base[k] and not sep_ext[k]]
        if lost:
            out.append(_cex(base, ext, lost=lost))
    return count, out


def check_lattice_a(n, i):
    tau = all_spaces(n)[i]
    exts = list(_admissible_exts(n, i))
    count, out = 0, []
    for sigma in exts:
        for nu in exts:
            if is_coarser(sigma, nu):
                count += 1
                if not is_admissible_extension(sigma, nu):
                    out.append(_cex(tau, sigma, nu))
    return count, out


def check_lattice_b(n, i):
    tau = all_spaces(n)[i]
    count, out = 0, []
    for nu in _admissible_exts(n, i):
        for sigma in all_spaces(n):
            if is_coarser(tau, sigma) and is_coarser(sigma, nu):
                count += 1
                if not is_admissible_extension(tau, sigma):
                    out.append(_cex(tau, sigma, nu))
    return count, out


def check_t315(n, i):
    s = all_spaces(n)[i]
    if s.isolated_points():
        return 0, []
    count, out = 0, []
    nwd = nwd_ideal(s).generator
    for gen in range(1 << n):
        count += 1
        ok, witness = is_star_admissible(s, Ideal(gen))
        if ok != is_subset(gen, nwd):
            out.append(_cex(s, ideal=members(gen), admissible=ok,
                            witness=None if witness is None else members(witness)))
    return count, out


def check_alpha(n, i):
    s = all_spaces(n)[i]
    ideal = nwd_ideal(s)
    if star_topology(s, ideal) != alpha_topology(s):
        return 1, [_cex(s, failed="star topology of nowhere dense ideal")]
    for a in range(1 << n):
        if local_function(s, ideal, a) != s.closure(s.interior(s.closure(a))):
            return 1, [_cex(s, witness=members(a), failed="local function")]
    return 1, []


def check_p21(n, i):
    s = all_spaces(n)[i]
    Y = s.nwd_max
    if (Y | s.isolated_points()) != s.full:
        return 0, []
    if s.baire_family != frozenset(range(1 << n)):
        return 1, [_cex(s, failed="not every set has the Baire property")]
    if s.meager_family != frozenset(a for a in range(1 << n) if is_subset(a, Y)):
        return 1, [_cex(s, failed="meager family differs from P(Y)")]
    return 1, []


def star_property_failures(s: FiniteSpace, gen: int) -> list[str]:
    """Names of the ideal-topology properties that fail for (s, P(gen))."""
    i = Ideal(gen)
    N = 1 << s.n
    cl = [star_closure(s, i, a) for a in range(N)]
    bad = []
    if cl[0] != 0:
        bad.append("Cl*(empty)")
    if any(not is_subset(a, cl[a]) for a in range(N)):
        bad.append("extensive")
    if any(cl[cl[a]] != cl[a] for a in range(N)):
        bad.append("idempotent closure")
    if any(cl[a | b] != cl[a] | cl[b] for a in range(N) for b in range(a, N)):
        bad.append("additive")
    st = star_topology(s, i)
    if not is_coarser(s, st):
        bad.append("tau inside tau*")
    if any(not st.is_closed(a) for a in range(N) if a in i):
        bad.append("ideal members closed")
    if star_topology(st, i) != st:
        bad.append("(tau*)* = tau*")
    return bad


def check_star(n, i):
    s = all_spaces(n)[i]
    count, out = 0, []
    stars = {}
    for gen in range(1 << n):
        count += 1
        bad = star_property_failures(s, gen)
        if bad:
            out.append(_cex(s, ideal=members(gen), failed=bad))
        stars[gen] = star_topology(s, Ideal(gen))
    for g1 in range(1 << n):
        for g2 in range(1 << n):
            if is_subset(g1, g2) and not is_coarser(stars[g1], stars[g2]):
                out.append(_cex(s, ideal=members(g1), larger_ideal=members(g2),
                                failed=["monotone"]))
    return count, out


@dataclass(frozen=True)
class Theorem:
    id: str
    statement: str
    quantifier: str
    check: Callable[[int, int], tuple[int, list]]
    max_n: int = 4
    large_n: int = 5
    conjecture: bool = False


THEOREMS: dict[str, Theorem] = {t.id: t for t in [
    Theorem("L33", "pi-compatible spaces have the same nowhere dense and meager sets",
            "pi-compatible ordered pairs", check_l33),
    Theorem("T-DECOMP", "each non-empty tau-open set is a sigma-open set plus a nowhere dense set",
            "pi-compatible ordered pairs x non-empty opens", check_decomp),
    Theorem("C34", "pi-compatible spaces have the same Baire-property sets",
            "pi-compatible ordered pairs", check_c34),
    Theorem("T5A", "Baire-space property is shared by pi-compatible spaces",
            "pi-compatible ordered pairs", check_t5a),
    Theorem("T5B", "common G-delta sets form a pi-network for both spaces",
            "pi-compatible ordered pairs", check_t5b),
    Theorem("P-DENSE", "dense sets and density agree for pi-compatible spaces",
            "pi-compatible ordered pairs", check_dense),
    Theorem("P-PROD", "products of pi-compatible pairs are pi-compatible",
            "pi-compatible pairs x pi-compatible pairs on 2 points", check_prod),
    Theorem("T-SEMIOPEN", "open sets of an admissible extension are semi-open in the base",
            "admissible pairs", check_semiopen),
    Theorem("P-AXIOMS", "admissible extensions keep T0, T1, T2",
            "admissible pairs", check_axioms),
    Theorem("P-LATTICE-A", "sigma inside nu, both admissible over tau: nu admissible over sigma",
            "admissible triples", check_lattice_a, max_n=3, large_n=3),
    Theorem("P-LATTICE-B", "tau inside sigma inside nu, nu admissible over tau: sigma admissible",
            "topology triples", check_lattice_b, max_n=3, large_n=3),
    Theorem("T315", "star topology is admissible iff the ideal is inside the nowhere dense sets",
            "spaces without isolated points x ideals", check_t315, max_n=5),
    Theorem("E-ALPHA", "star topology of the nowhere dense ideal is the alpha topology",
            "spaces", check_alpha, max_n=5),
    Theorem("P21-FINITE", "points all nowhere dense or open: every set has the Baire property",
            "spaces", check_p21, max_n=5),
    Theorem("Q3-FINITE", "pi-compatible topologies are admissible extensions of their meet",
            "pi-compatible ordered pairs", check_q3, conjecture=True),
    Theorem("STAR-PROPS", "Cl* is a closure operator; tau* contains tau, closes the ideal, "
            "is idempotent and monotone", "spaces x ideals", check_star, max_n=4),
]}


@dataclass
class VerifyReport:
    theorem: str
    n: int
    instances: int
    counterexamples: list = field(default_factory=list)
    elapsed_ms: int = 0
    conjecture: bool = False

    @property
    def verified(self) -> bool:
        return not self.counterexamples

    @property
    def verdict(self) -> str:
        if self.counterexamples:
            return f"{len(self.counterexamples)} counterexample(s) at n={self.n}"
        if self.conjecture:
            return f"no finite counterexample at n={self.n}"
        return f"verified at scale n={self.n}"

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "n": self.n,
            "instances": self.instances,
            "counterexamples": self.counterexamples,
            "verdict": self.verdict,
            "elapsed_ms": self.elapsed_ms,
        }


def _run_range(theorem_id: str, n: int, lo: int, hi: int) -> tuple[int, list]:
    check = THEOREMS[theorem_id].check
    count, out = 0, []
    for i in range(lo, hi):
        c, o = check(n, i)
        count += c
        out.extend(o)
    return count, out


def _chunks(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    bounds, lo = [], 0
    for k in range(parts):
        hi = lo + step + (k < extra)
        bounds.append((lo, hi))
        lo = hi
    return bounds


def _canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def verify(theorem_id: str, n: int, jobs: int = 1, allow_large: bool = False) -> VerifyReport:
    """Run a registered checker over its whole quantifier domain at size ``n``."""
    try:
        thm = THEOREMS[theorem_id]
    except KeyError:
        raise UnknownTheorem(f"unknown theorem {theorem_id!r}; known: {', '.join(THEOREMS)}") from None
    limit = thm.large_n if allow_large else thm.max_n
    if not 1 <= n <= limit:
        raise NOutOfRange(f"{theorem_id} runs for 1 <= n <= {limit}, got {n}")
    start = time.perf_counter()
    total = len(all_spaces(n))
    if jobs <= 1:
        results = [_run_range(theorem_id, n, 0, total)]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_run_range, theorem_id, n, lo, hi)
                       for lo, hi in _chunks(total, jobs)]
            results = [f.result() for f in futures]
    instances = sum(c for c, _ in results)
    cexs = sorted((c for _, o in results for c in o), key=_canonical)
    elapsed = int((time.perf_counter() - start) * 1000)
    return VerifyReport(theorem_id, n, instances, cexs, elapsed, thm.conjecture)


# -- counterexample search ---------------------------------------------------

def _pairs(n: int):
    spaces = all_spaces(n)
    for a in spaces:
        for b in spaces:
            yield a, b


def _q3_violation(n):
    for a, b in _pairs(n):
        if are_pi_compatible(a, b):
            m = meet(a, b)
            if not (is_admissible_extension(m, a) and is_admissible_extension(m, b)):
                yield _cex(a, b, meet=space_to_dict(m))


def _nwd_eq_not_bp_eq(n):
    for a, b in _pairs(n):
        if a.nowhere_dense_family == b.nowhere_dense_family and a.baire_family != b.baire_family:
            yield _cex(a, b)


def _bp_eq_not_compatible(n):
    for a, b in _pairs(n):
        if a.baire_family == b.baire_family and not are_pi_compatible(a, b):
            yield _cex(a, b)


def _converse(axiom: str):
    def search(n):
        for base, ext in _pairs(n):
            if is_admissible_extension(base, ext):
                if analyze(ext).separation[axiom] and not base.separation()[axiom]:
                    yield _cex(base, ext)
    return search


PREDICATES: dict[str, tuple[str, Callable]] = {
    "Q3-FINITE": ("pi-compatible pair not admissibly extending its meet", _q3_violation),
    "NWD-EQ-BP-EQ": ("equal nowhere dense families but different Baire-property families",
                     _nwd_eq_not_bp_eq),
    "BP-EQ-PI-COMPAT": ("equal Baire-property families but not pi-compatible",
                        _bp_eq_not_compatible),
    "T0-CONVERSE": ("admissible extension is T0 but the base is not", _converse("T0")),
    "T1-CONVERSE": ("admissible extension is T1 but the base is not", _converse("T1")),
    "T2-CONVERSE": ("admissible extension is T2 but the base is not", _converse("T2")),
}


def search_counterexample(predicate_id: str, n: int) -> Optional[dict]:
    """First violation over all sizes 1..n in enumeration order, or None."""
    try:
        _, search = PREDICATES[predicate_id]
    except KeyError:
        raise UnknownPredicate(
            f"unknown predicate {predicate_id!r}; known: {', '.join(PREDICATES)}") from None
    if not 1 <= n <= 4:
        raise NOutOfRange(f"search runs for 1 <= n <= 4, got {n}")
    for k in range(1, n + 1):
        for witness in search(k):
            return {"n": k, **witness}
    return None
