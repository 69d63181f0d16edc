"""Search for progressions A n + B on which a partition function vanishes mod m.

    python3 scripts/discover.py b13 3 --a-max 27 --count 500

Hits are observations on the first ``count`` terms, not theorems.
"""

import argparse

from regulus.engine import SearchConfig, search_congruences
from regulus.partitions import PartitionFunction


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("function", help="p, b<l> or b'<p>")
    ap.add_argument("modulus", type=int)
    ap.add_argument("--a-max", type=int, default=30)
    ap.add_argument("--b-max", type=int)
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--max-truncation", type=int)
    args = ap.parse_args()
    config = SearchConfig(PartitionFunction.parse(args.function), args.modulus,
                          args.a_max, args.b_max, args.count)
    found = search_congruences(config, args.max_truncation)
    for r in found:
        print(f"{r.claim.describe():36} {r.label}")
    print(f"{len(found)} progressions (A <= {args.a_max}, first {args.count} terms)")


if __name__ == "__main__":
    main()
