"""Count labeled topologies on n points by brute force over relation matrices.

Every reflexive relation on n points is tried; the transitive ones are the
preorders, i.e. the topologies.  The counts are frozen into
tests/fixtures/topology_counts.json for the enumeration tests.

    python scripts/oracle_counts.py [max_n]
"""
import json
import sys
import time
from pathlib import Path

from topolab.enumeration import count_by_relation_matrices

OUT = Path(__file__).resolve().parents[1] / "tests" / "fixtures" / "topology_counts.json"


def main(max_n: int = 5) -> None:
    counts = {}
    for n in range(1, max_n + 1):
        t = time.perf_counter()
        counts[str(n)] = count_by_relation_matrices(n)
        print(f"n={n}: {counts[str(n)]} topologies "
              f"({2 ** (n * (n - 1))} matrices, {time.perf_counter() - t:.1f}s)")
    OUT.write_text(json.dumps(counts, indent=2) + "\n")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 5)
