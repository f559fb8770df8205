"""Per-class Sunada report and ball-quotient spectra for the Klein 4-group collections.

    python3 scripts/sunada_klein.py --max-degree 30
"""

import argparse
from collections import Counter

from steklov_orb.ball_quotients import diagonal
from steklov_orb.config import SunadaKleinConfig, add_arguments, from_args
from steklov_orb.sunada import (
    klein_four,
    matrix_action,
    permutation_character,
    sunada_ball_check,
    sunada_condition,
)

ACTIONS = {
    "rotations": [diagonal(1, 1, 1), diagonal(1, -1, -1), diagonal(-1, 1, -1), diagonal(-1, -1, 1)],
    "reflections": [diagonal(1, 1, 1), diagonal(1, 1, -1), diagonal(1, -1, 1), diagonal(1, -1, -1)],
}


def degree_counts(spectrum: Counter, top: int) -> list[int]:
    return [spectrum.get(m, 0) for m in range(top + 1)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    add_arguments(ap, SunadaKleinConfig)
    cfg = from_args(SunadaKleinConfig, ap.parse_args())

    G = klein_four()
    s, t, st = (G.index(x) for x in ("s", "t", "st"))
    H = [{0, s}, {0, t}, {0, st}]
    K = [{0}, set(range(4)), set(range(4))]

    report = sunada_condition(G, H, K)
    print("class      H-side   K-side")
    for row in report.rows:
        cls = ",".join(G.labels[i] for i in row.conjugacy_class)
        print(f"{cls:<10} {str(row.h_side):<8} {row.k_side}")
    print("permutation characters", permutation_character(G, H), permutation_character(G, K))

    for name, mats in ACTIONS.items():
        check = sunada_ball_check(matrix_action(G, mats), H, K, cfg.max_degree)
        print(f"\n{name}: equal up to degree {cfg.max_degree}: {check.equal}")
        print("  H multiplicities:", degree_counts(check.h_spectrum, cfg.show))
        print("  K multiplicities:", degree_counts(check.k_spectrum, cfg.show))


if __name__ == "__main__":
    main()
