"""Run every registered theorem check at its default scale and print a table."""
import argparse
import sys

from topolab.enumeration import THEOREMS, verify


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--n", type=int, help="override every theorem's default scale")
    args = ap.parse_args()

    rows, failed = [], 0
    for tid, thm in THEOREMS.items():
        n = min(args.n, thm.max_n) if args.n else thm.max_n
        rep = verify(tid, n, jobs=args.jobs)
        failed += not rep.verified
        rows.append((tid, str(n), str(rep.instances), str(len(rep.counterexamples)),
                     f"{rep.elapsed_ms / 1000:.2f}s", rep.verdict))
    head = ("theorem", "n", "instances", "cex", "time", "verdict")
    widths = [max(len(r[i]) for r in rows + [head]) for i in range(len(head))]
    for r in [head] + rows:
        print("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
