#!/usr/bin/env python3
"""Census of quadratic multiplicities over S_n.

Tabulates how the multiplicities distribute by the freedom parameter r and by
presentation-poset size, and how far the 2^r - 1 floor is from tight; a quick
way to eyeball the structure the closed formulas capture.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter

from keyseries.multisets import enum_B, presentations
from keyseries.mults import _r_value, quadratic_multiplicities
from keyseries.permutation import all_permutations


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=4)
    args = ap.parse_args()

    by_r: dict[int, Counter] = {}
    by_poset_size: dict[int, Counter] = {}
    tight = 0
    total = 0
    for w in all_permutations(args.n):
        quad = quadratic_multiplicities(w)
        for k in range(1, args.n + 1):
            for l in range(k, args.n + 1):
                for eta in enum_B(w, k, l):
                    m = quad.get((k, l, eta), 0)
                    r = _r_value(k, l, eta)
                    size = len(presentations(w, k, l, eta).pairs)
                    by_r.setdefault(r, Counter())[m] += 1
                    by_poset_size.setdefault(size, Counter())[m] += 1
                    total += 1
                    if m == 2**r - 1:
                        tight += 1

    print(f"S_{args.n}: {total} two-presentation multisets")
    print(f"floor 2^r-1 tight on {tight}/{total}")
    print("\nmultiplicity distribution by r:")
    for r in sorted(by_r):
        dist = ", ".join(f"m={m}: {c}" for m, c in sorted(by_r[r].items()))
        print(f"  r={r}: {dist}")
    print("\nmultiplicity distribution by presentation count:")
    for size in sorted(by_poset_size):
        dist = ", ".join(
            f"m={m}: {c}" for m, c in sorted(by_poset_size[size].items())
        )
        print(f"  {size} presentations: {dist}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
