"""Survey the tower algebras: regularity degree, nilpotency index, dimensions.

Runs the full coset engine on build_regular_qhs(n) for a range of n and
prints one row per algebra.  n = 7 takes around half a minute; n >= 8 is
out of reach at default limits and will report inconclusive.
"""

import argparse
import sys
import time

from quadsemi.analysis import hilbert_profile, total_dimension
from quadsemi.constructions import build_regular_qhs
from quadsemi.engine import EngineLimits, regularity_degree
from quadsemi.model import delta


def survey_row(n: int, limits: EngineLimits) -> str:
    p = build_regular_qhs(n)
    t0 = time.perf_counter()
    reg = regularity_degree(p, limits)
    if reg.status == "regular":
        profile = hilbert_profile(p, max_degree=limits.max_degree, limits=limits)
        nilp = profile.nilpotency_index
        total = total_dimension(profile)
        verdict = f"regular:{reg.degree}"
    else:
        nilp = None
        total = None
        verdict = f"{reg.status}:{reg.degree}"
    elapsed = time.perf_counter() - t0
    return (f"{n:>3}  {delta(n):>5}  {verdict:>16}  "
            f"{nilp if nilp is not None else '-':>5}  "
            f"{total if total is not None else '-':>8}  {elapsed:>7.2f}s")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--min-n", type=int, default=1)
    parser.add_argument("--max-n", type=int, default=6)
    parser.add_argument("--cap", type=int, default=40, help="degree cap")
    parser.add_argument("--max-class-size", type=int, default=5_000_000)
    args = parser.parse_args(argv)

    limits = EngineLimits(max_class_size=args.max_class_size, max_degree=args.cap)
    print("  n  rels         regularity   nilp     total     time")
    for n in range(args.min_n, args.max_n + 1):
        print(survey_row(n, limits))
    return 0


if __name__ == "__main__":
    sys.exit(main())
