"""Command-line interface.

Exit codes: 0 success (or verified), 1 counterexample found or, with
``--strict``, a false boolean answer, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import compat, core, enumeration, ideals, realline, topgroups
from .core import FiniteSpace, fmt_set, mask_of, members
from .errors import TopologyError

BUILTINS = {
    "sierpinski": core.sierpinski,
    "oddeven4": lambda: core.odd_even(4),
    "khalimsky5": lambda: core.khalimsky(5),
}


class InputError(Exception):
    pass


def _color(text: str, good: bool) -> str:
    if os.environ.get("TOPOLAB_COLOR", "1") == "0" or not sys.stdout.isatty():
        return text
    return f"\033[{32 if good else 31}m{text}\033[0m"


def load_space(spec: str) -> FiniteSpace:
    """A JSON file path, or ``@name`` for a builtin (``@discrete:3``, ``@trivial:2``, ...)."""
    if spec.startswith("@"):
        name, _, arg = spec[1:].partition(":")
        if name in ("discrete", "trivial") and arg.isdigit():
            return getattr(core, name)(int(arg))
        if name in BUILTINS:
            return BUILTINS[name]()
        raise InputError(f"unknown builtin space {spec!r}")
    try:
        data = json.loads(Path(spec).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {spec!r}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{spec!r} is not valid JSON: {exc}") from None
    try:
        return core.space_from_dict(data)
    except TopologyError as exc:
        raise InputError(f"{spec!r}: {exc}") from None


def parse_points(text: str, n: int) -> int:
    text = text.strip()
    if text in ("", "empty"):
        return 0
    try:
        pts = [int(p) for p in text.split(",")]
    except ValueError:
        raise InputError(f"bad point list {text!r}") from None
    bad = [p for p in pts if not 0 <= p < n]
    if bad:
        raise InputError(f"points {bad} outside 0..{n - 1} in {text!r}")
    return mask_of(pts)


def _need(args, name):
    value = getattr(args, name)
    if value is None:
        raise InputError(f"--{name.replace('_', '-')} is required for this command")
    return value


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _boolean(args, name: str, value: bool, extra: dict | None = None) -> int:
    payload = {name: value, **(extra or {})}
    _emit(args, payload, _color("true" if value else "false", value))
    return 1 if args.strict and not value else 0


def _space_text(s: FiniteSpace) -> str:
    opens = " ".join(fmt_set(mask_of(o)) for o in s.sorted_opens())
    return f"n={s.n}  min_nbhds={s}\nopens: {opens}"


def _space_payload(s: FiniteSpace) -> dict:
    return {**core.space_to_dict(s), "opens": s.sorted_opens()}


# -- commands ----------------------------------------------------------------

def cmd_space(args) -> int:
    s = load_space(_need(args, "inp")[0])
    if args.action == "analyze":
        rep = core.analyze(s)
        d = rep.to_dict()
        baire = sorted(members(a) for a in s.baire_family)
        text = "\n".join([
            _space_text(s),
            "separation: " + " ".join(f"{k}={v}" for k, v in rep.separation.items()),
            f"density: {rep.density}",
            f"isolated points: {fmt_set(rep.isolated_points)}",
            f"connected: {rep.is_connected}",
            f"baire space: {rep.is_baire}",
            f"largest nowhere dense set: {fmt_set(rep.nwd_max)}",
            f"sets with the Baire property: {len(baire)} of {1 << s.n}",
        ])
        _emit(args, {"space": _space_payload(s), "report": d, "baire_family": baire}, text)
        return 0
    op = args.op
    if op == "density":
        d = s.density()
        _emit(args, {"density": d}, str(d))
        return 0
    if op == "connected":
        return _boolean(args, "connected", s.is_connected())
    a = parse_points(_need(args, "set"), s.n)
    if op in ("interior", "closure"):
        r = s.interior(a) if op == "interior" else s.closure(a)
        _emit(args, {op: members(r)}, fmt_set(r))
        return 0
    checks = {"nwd": s.is_nowhere_dense, "meager": s.is_meager,
              "baire": s.has_baire_property, "semiopen": s.is_semi_open}
    return _boolean(args, op, checks[op](a))


def cmd_pair(args) -> int:
    files = _need(args, "inp")
    if len(files) != 2:
        raise InputError("pair commands need --in twice (tau, then sigma)")
    tau, sigma = (load_space(f) for f in files)
    if args.action == "pi-compat":
        return _boolean(args, "pi_compatible", compat.are_pi_compatible(tau, sigma))
    if args.action == "admissible":
        return _boolean(args, "admissible", compat.is_admissible_extension(tau, sigma))
    if args.action == "meet":
        m = compat.meet(tau, sigma)
        _emit(args, {"meet": _space_payload(m)}, _space_text(m))
        return 0
    o = parse_points(_need(args, "set"), tau.n)
    d = compat.decompose_open(compat.TopologyPair(tau, sigma), o)
    _emit(args, {"v": members(d.v), "nwd": members(d.nwd)},
          f"open part {fmt_set(d.v)}, nowhere dense part {fmt_set(d.nwd)}")
    return 0


def cmd_star(args) -> int:
    s = load_space(_need(args, "inp")[0])
    i = ideals.Ideal(parse_points(_need(args, "ideal"), s.n))
    st = ideals.star_topology(s, i)
    ok, witness = ideals.is_star_admissible(s, i)
    payload = {"star": _space_payload(st), "admissible": ok,
               "witness": None if witness is None else members(witness)}
    lines = [_space_text(st), "admissible extension: " + _color(str(ok).lower(), ok)]
    if witness is not None:
        lines.append(f"witness (star-open, no non-empty open inside): {fmt_set(witness)}")
    if args.set is not None:
        a = parse_points(args.set, s.n)
        lf = ideals.local_function(s, i, a)
        payload.update(local_function=members(lf), star_closure=members(lf | a))
        lines.append(f"local function: {fmt_set(lf)}  star closure: {fmt_set(lf | a)}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_alpha(args) -> int:
    s = load_space(_need(args, "inp")[0])
    al = ideals.alpha_topology(s)
    _emit(args, {"alpha": _space_payload(al)}, _space_text(al))
    return 0


def cmd_enumerate(args) -> int:
    spaces = enumeration.all_spaces(args.n)
    payload = {"n": args.n, "count": len(spaces)}
    lines = [f"{len(spaces)} topologies on {args.n} points"]
    if args.list:
        payload["spaces"] = [core.space_to_dict(s) for s in spaces]
        lines += [str(s) for s in spaces]
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_verify(args) -> int:
    ids = list(enumeration.THEOREMS) if args.theorem == "all" else [args.theorem]
    status = 0
    for tid in ids:
        n = args.n
        if args.theorem == "all":
            # cap at each theorem's own limit rather than abort the batch
            thm = enumeration.THEOREMS[tid]
            n = min(n, thm.large_n if args.allow_large else thm.max_n)
        rep = enumeration.verify(tid, n, jobs=args.jobs, allow_large=args.allow_large)
        if args.json:
            print(json.dumps(rep.to_dict(), sort_keys=True))
        else:
            print(f"{tid:<12} n={rep.n}  instances={rep.instances:<7} "
                  f"{_color(rep.verdict, rep.verified)}  ({rep.elapsed_ms} ms)")
            for c in rep.counterexamples[:5]:
                print("  counterexample:", json.dumps(c, sort_keys=True))
        if not rep.verified:
            status = 1
    return status


def cmd_search(args) -> int:
    w = enumeration.search_counterexample(args.predicate, args.n)
    desc = enumeration.PREDICATES[args.predicate][0]
    if args.json:
        print(json.dumps({"predicate": args.predicate, "n": args.n, "witness": w},
                         sort_keys=True))
    elif w is None:
        print(f"{args.predicate}: no witness for '{desc}' on n <= {args.n}")
    else:
        print(f"{args.predicate}: witness for '{desc}' at n={w['n']}")
        print(json.dumps(w, sort_keys=True))
    return 0 if w is None else 1


def _rl_set(text: str, flag: str) -> realline.IntervalSet:
    if text is None:
        raise InputError(f"{flag} is required for this command")
    try:
        return realline.parse_set(text)
    except TopologyError as exc:
        raise InputError(f"{flag} {text!r}: {exc}") from None


def _rl_topologies(args) -> list:
    specs = _need(args, "topology")
    try:
        return [realline.parse_topology(t) for t in specs]
    except TopologyError as exc:
        raise InputError(f"--topology: {exc}") from None


def cmd_realline(args) -> int:
    act = args.action
    if act in ("closure", "interior", "semiopen"):
        t = _rl_topologies(args)[0]
        s = _rl_set(args.set, "--set")
        if act == "semiopen":
            return _boolean(args, "semi_open", realline.rl_is_semi_open(t, s))
        r = realline.rl_closure(t, s) if act == "closure" else realline.rl_interior(t, s)
        _emit(args, {act: str(r)}, str(r))
        return 0
    if act == "compare":
        a, b = _rl_set(args.a, "--a"), _rl_set(args.b, "--b")
        rel = realline.hattori_compare(a, b)
        _emit(args, {"relation": rel}, f"tau(A) is {rel}" + ("" if rel in ("equal", "incomparable")
                                                           else " than tau(B)"))
        return 0
    if act == "clopen":
        a = _rl_set(args.a, "--a")
        w = realline.hattori_clopen_witness(a)
        _emit(args, {"witness": None if w is None else str(w)},
              "none (H(R) is the connected Euclidean line)" if w is None else str(w))
        return 0
    ts = _rl_topologies(args)
    if len(ts) != 2:
        raise InputError(f"realline {act} needs --topology twice")
    if act == "pi-compat":
        return _boolean(args, "pi_compatible", realline.rl_are_pi_compatible(*ts))
    return _boolean(args, "admissible", realline.rl_is_admissible_extension(*ts))


def _load_group(args) -> topgroups.FiniteGroup:
    if args.cyclic is not None:
        return topgroups.cyclic(args.cyclic)
    path = _need(args, "group")
    try:
        return topgroups.group_from_dict(json.loads(Path(path).read_text()))
    except OSError as exc:
        raise InputError(f"cannot read {path!r}: {exc.strerror}") from None
    except (json.JSONDecodeError, TopologyError) as exc:
        raise InputError(f"{path!r}: {exc}") from None


def _beta(args, n: int) -> list[int]:
    text = _need(args, "beta")
    return [parse_points(part, n) for part in text.split(";")]


def cmd_group(args) -> int:
    g = _load_group(args)
    t = load_space(_need(args, "inp")[0])
    if args.action == "classify":
        c = topgroups.classify(g, t)
        _emit(args, c.to_dict(), c.verdict)
        return 0
    gamma = load_space(_need(args, "gamma"))
    beta = _beta(args, g.n)
    if args.action == "almost":
        chk = topgroups.is_almost_topological(g, t, gamma, beta)
        text = _color(str(chk.ok).lower(), chk.ok) + "".join("\n  " + f for f in chk.failed)
        _emit(args, {"almost_topological": chk.ok, "failed": list(chk.failed)}, text)
        return 1 if args.strict and not chk.ok else 0
    a = parse_points(args.set or "", g.n)
    res = topgroups.group_hattori(g, t, gamma, beta, a, force=args.force)
    _emit(args, {"space": _space_payload(res.space), "valid": res.valid},
          _space_text(res.space) + f"\nneighbourhood system valid: {res.valid}")
    return 1 if args.strict and not res.valid else 0


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--strict", action="store_true",
                        help="exit 1 when a boolean answer is false")
    common.add_argument("--in", dest="inp", action="append", metavar="FILE",
                        help="space JSON file or @builtin (repeat for pairs)")
    common.add_argument("--set", metavar="SET")

    p = argparse.ArgumentParser(prog="topolab", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("space", help="single-space queries")
    ssub = sp.add_subparsers(dest="action", required=True)
    ssub.add_parser("analyze", parents=[common])
    op = ssub.add_parser("op", parents=[common])
    op.add_argument("op", choices=["interior", "closure", "nwd", "meager", "baire",
                                   "semiopen", "density", "connected"])
    sp.set_defaults(func=cmd_space)

    pp = sub.add_parser("pair", parents=[common], help="relations between two topologies")
    pp.add_argument("action", choices=["pi-compat", "admissible", "decompose", "meet"])
    pp.set_defaults(func=cmd_pair)

    st = sub.add_parser("star", parents=[common], help="star topology of an ideal")
    st.add_argument("--ideal", metavar="LIST", help="generator points, e.g. 1,2")
    st.set_defaults(func=cmd_star)

    al = sub.add_parser("alpha", parents=[common], help="alpha topology")
    al.set_defaults(func=cmd_alpha)

    en = sub.add_parser("enumerate", parents=[common], help="count or list all topologies")
    en.add_argument("--n", type=int, default=3, choices=range(1, 6))
    en.add_argument("--list", action="store_true")
    en.set_defaults(func=cmd_enumerate)

    ve = sub.add_parser("verify", parents=[common], help="exhaustive theorem check")
    ve.add_argument("--theorem", required=True,
                    choices=[*enumeration.THEOREMS, "all"], metavar="ID")
    ve.add_argument("--n", type=int, default=3)
    ve.add_argument("--jobs", type=int, default=1)
    ve.add_argument("--allow-large", action="store_true",
                    help="permit n=5 for pair-quantified theorems")
    ve.set_defaults(func=cmd_verify)

    se = sub.add_parser("search", parents=[common], help="counterexample search")
    se.add_argument("--predicate", required=True, choices=list(enumeration.PREDICATES),
                    metavar="ID")
    se.add_argument("--n", type=int, default=3)
    se.set_defaults(func=cmd_search)

    rl = sub.add_parser("realline", parents=[common], help="rational-endpoint real line")
    rl.add_argument("action", choices=["closure", "interior", "compare", "pi-compat",
                                       "admissible", "semiopen", "clopen"])
    rl.add_argument("--topology", action="append", metavar="SPEC",
                    help="E, S, US or H:<set> (repeat for two-topology queries)")
    rl.add_argument("--a", metavar="SET")
    rl.add_argument("--b", metavar="SET")
    rl.set_defaults(func=cmd_realline)

    gp = sub.add_parser("group", parents=[common], help="finite groups with topologies")
    gp.add_argument("action", choices=["classify", "almost", "hattori"])
    gp.add_argument("--group", metavar="FILE", help="Cayley table JSON")
    gp.add_argument("--cyclic", type=int, metavar="N", help="use Z_N instead of --group")
    gp.add_argument("--gamma", metavar="FILE")
    gp.add_argument("--beta", metavar="SETS", help="local base at e, sets joined by ';'")
    gp.add_argument("--force", action="store_true")
    gp.set_defaults(func=cmd_group)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, TopologyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
