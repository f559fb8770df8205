"""How long a spectrum prefix does peeling actually need?

For random boundary data, finds the shortest prefix from which peel + recover returns the
right class, and compares it with sufficient_prefix_length. Prints summary statistics.

    python3 scripts/inverse_prefix.py --trials 300 --seed 1
"""

import argparse
import random
import statistics
from fractions import Fraction

from steklov_orb.config import InversePrefixConfig, add_arguments, from_args
from steklov_orb.errors import StekError
from steklov_orb.inverse import boundary_class, peel_progressions, recover_boundary_class
from steklov_orb.inverse import sufficient_prefix_length
from steklov_orb.spectra import BoundaryData, canonical_spectrum, enumerate_spectrum


def random_boundary(rng, rmax, smax, den):
    def length():
        return Fraction(rng.randint(1, den), rng.randint(1, den))
    return BoundaryData(tuple(length() for _ in range(rng.randint(0, rmax))),
                        tuple(length() for _ in range(rng.randint(0, smax))))


def recovers(bd, n) -> bool:
    try:
        view = enumerate_spectrum(canonical_spectrum(bd), n)
        return recover_boundary_class(peel_progressions(view)) == boundary_class(bd)
    except StekError:
        return False


def shortest_prefix(bd, hi) -> int:
    # not monotone in general (a truncated top value can mislead), so scan upward
    for n in range(1, hi + 1):
        if recovers(bd, n):
            return n
    return -1


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    add_arguments(ap, InversePrefixConfig)
    cfg = from_args(InversePrefixConfig, ap.parse_args())

    rng = random.Random(cfg.seed)
    ratios, misses = [], 0
    for _ in range(cfg.trials):
        bd = random_boundary(rng, cfg.rmax, cfg.smax, cfg.den)
        if not (bd.r or bd.s):
            continue
        bound = sufficient_prefix_length(bd)
        need = shortest_prefix(bd, bound)
        if need < 0:
            misses += 1
            print("bound too short for", bd)
            continue
        ratios.append(need / bound)
    print(f"cases {len(ratios)}, bound failures {misses}")
    if ratios:
        print(f"needed/bound: mean {statistics.mean(ratios):.3f}, max {max(ratios):.3f}")


if __name__ == "__main__":
    main()
