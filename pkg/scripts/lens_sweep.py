"""Lattice L1 minimum vs lowest invariant harmonic degree for lens-type ball quotients.

Prints CSV rows (m, q, p, lattice_min, first_degree, via_harmonics). The last column
recomputes the lowest degree from invariant_harmonic_dims as an independent check.

    python3 scripts/lens_sweep.py --m 2 --qmax 12
    python3 scripts/lens_sweep.py --family --m 3 --jmax 6
"""

import argparse
import csv
import itertools
import sys
import time

from steklov_orb.ball_quotients import invariant_harmonic_dims, lens_group
from steklov_orb.bounds import LensParams, lens_first_invariant_degree, sharpness_params, sigma2_lens
from steklov_orb.config import LensSweepConfig, add_arguments, from_args


def lowest_degree(params: LensParams) -> int:
    bound = sigma2_lens(params)
    dims = invariant_harmonic_dims(lens_group(params.q, params.p), bound).dims
    return next(m for m in range(1, bound + 1) if dims[m] > 0)


def rows(cfg: LensSweepConfig):
    if cfg.family:
        for j in range(1, cfg.jmax + 1):
            yield sharpness_params(j, cfg.m)
        return
    for q in range(1, cfg.qmax + 1):
        # p_1 = 1 up to relabelling when gcd(p_1, q) = 1; keeps the sweep small
        for rest in itertools.product(range(q), repeat=cfg.m - 1):
            yield LensParams(q, (1, *rest))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    add_arguments(ap, LensSweepConfig)
    cfg = from_args(LensSweepConfig, ap.parse_args())

    out = csv.writer(sys.stdout)
    out.writerow(["m", "q", "p", "lattice_min", "first_degree", "via_harmonics", "seconds"])
    disagreements = 0
    for params in rows(cfg):
        t0 = time.perf_counter()
        lat = sigma2_lens(params)
        first = lens_first_invariant_degree(params)
        check = lowest_degree(params) if cfg.check and params.q <= cfg.check_qmax else ""
        if check != "" and check != first:
            disagreements += 1
        out.writerow([params.m, params.q, " ".join(map(str, params.p)), lat, first, check,
                      f"{time.perf_counter() - t0:.4f}"])
    print(f"# disagreements between formula and harmonic count: {disagreements}", file=sys.stderr)
    return 1 if disagreements else 0


if __name__ == "__main__":
    sys.exit(main())
