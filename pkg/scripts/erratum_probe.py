"""Show the two mod-10 b5 families below and at their shipped alpha minimum.

    python3 scripts/erratum_probe.py [--count 50]

At alpha = 0 both fail at n = 0 (b5(5) = 6, b5(13) = 76); the weaker mod 2
statement still holds there, which the script also checks.
"""

import argparse

from regulus.catalog import FamilyParams, family_claims
from regulus.claims import CongruenceClaim
from regulus.engine import verify_claim


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=50)
    args = ap.parse_args()
    for family in (1, 2):
        for alpha in (0, 1):
            claim = family_claims(FamilyParams("combined-4", alpha=alpha, family=family))[0]
            r = verify_claim(claim, args.count)
            line = f"family {family} alpha {alpha}: {claim.describe():32} {r.outcome}"
            if not r.verified:
                line += (f" at n={r.counterexample_n}: value {r.exact_value} "
                         f"(enumeration {r.oracle_value}), residue {r.residue}")
            print(line)
            if alpha == 0:
                weak = CongruenceClaim(claim.function, claim.A, claim.B, 2)
                print(f"    same progression mod 2: {verify_claim(weak, args.count).outcome}")


if __name__ == "__main__":
    main()
