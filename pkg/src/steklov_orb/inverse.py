"""Recovering boundary data (up to equivalence) from a Steklov spectrum.

The spectrum of a canonical orbisurface with ``r`` disks and ``s`` half-disks has
``r + s`` zeros and total progression multiplicity ``2r + s``; each progression ``d*N``
(in units of pi) comes from a boundary length ``2/d`` in the merged multiset
``L + L + 2*Lbar``. Which lengths pair up into disks is exactly the ambiguity that the
spectrum cannot see.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DomainError, EmptyClass, InfeasibleCounts, PeelInconsistency
from .spectra import (
    ArithmeticSpectrum,
    BoundaryData,
    SpectrumView,
    Unit,
    as_length,
    common_denominator,
    enumerate_runs,
)


class ProgressionDecomposition(ArithmeticSpectrum):
    """Zeros plus arithmetic progressions recovered from a finite prefix."""

    def as_spectrum(self) -> ArithmeticSpectrum:
        return ArithmeticSpectrum(self.unit, self.zeros, self.progressions)


def peel_progressions(view: SpectrumView) -> ProgressionDecomposition:
    """Decompose a sorted prefix into zeros plus progressions ``d*N``.

    Walk the distinct positive values in increasing order. A value ``v`` must occur at
    least as often as the total multiplicity of already-found progressions whose
    difference divides ``v``; any surplus starts new progressions with difference ``v``.
    The largest value may be cut short by truncation, so a deficit there is allowed.

    The caller promises the prefix is long enough to contain the first term of every
    progression; the result is checked by re-enumerating it to ``len(view)`` values.
    """
    values = view.values
    if not values:
        return ProgressionDecomposition(view.unit)
    runs = view.runs()
    den = common_denominator(v for v, _ in runs)
    counts = {int(v * den): c for v, c in runs}
    zeros = counts.pop(0, 0)
    top = max(counts, default=0)
    found: list[tuple[int, int]] = []
    for v in sorted(counts):
        required = sum(m for d, m in found if v % d == 0)
        have = counts[v]
        if have < required:
            if v == top:
                continue
            raise PeelInconsistency(
                f"value {Fraction(v, den)} occurs {have} times but known progressions "
                f"require {required}")
        if have > required:
            found.append((v, have - required))
    dec = ProgressionDecomposition(view.unit, zeros, tuple((Fraction(d, den), m) for d, m in found))
    if enumerate_runs(dec, len(values)) != runs:
        raise PeelInconsistency("re-enumeration of the decomposition does not reproduce the view")
    return dec


def peel_progressions_approx(values: Sequence[float], eps: float, *,
                             unit: Unit = Unit.ABS,
                             max_denominator: int = 10**6) -> ProgressionDecomposition:
    """Heuristic peeling for floating-point spectra.

    Values within ``eps`` of each other (chained) are bucketed and represented by their
    mean; divisibility is tested up to ``eps``. Differences are returned as nearby
    rationals (``Fraction.limit_denominator``). This is a surrogate for asymptotic
    closeness and carries no exactness guarantee.
    """
    if eps <= 0:
        raise DomainError("eps must be positive")
    xs = sorted(float(v) for v in values)
    if not xs:
        return ProgressionDecomposition(unit)
    if xs[0] < -eps:
        raise DomainError("eigenvalues must be non-negative")
    buckets: list[list[float]] = []
    for x in xs:
        if buckets and x - buckets[-1][-1] <= eps:
            buckets[-1].append(x)
        else:
            buckets.append([x])
    zeros = 0
    found: list[tuple[float, int]] = []
    top = sum(buckets[-1]) / len(buckets[-1])
    for bucket in buckets:
        v = sum(bucket) / len(bucket)
        have = len(bucket)
        if abs(v) <= eps:
            zeros += have
            continue
        required = sum(m for d, m in found if abs(v / d - round(v / d)) * d <= eps)
        if have < required:
            if abs(v - top) <= eps:
                continue
            raise PeelInconsistency(
                f"value ~{v:.6g} occurs {have} times but known progressions require {required}")
        if have > required:
            found.append((v, have - required))
    return ProgressionDecomposition(
        unit, zeros, tuple((Fraction(d).limit_denominator(max_denominator), m) for d, m in found))


def _has_split(counts: Counter, r: int) -> bool:
    return sum(c // 2 for c in counts.values()) >= r


@dataclass(frozen=True)
class BoundaryDataClass:
    """An equivalence class of boundary data: fixed ``r``, ``s`` and merged multiset."""

    r: int
    s: int
    merged_lengths: tuple[Fraction, ...]

    def __post_init__(self):
        if self.r < 0 or self.s < 0:
            raise DomainError("r and s must be non-negative")
        merged = tuple(sorted(as_length(x) for x in self.merged_lengths))
        object.__setattr__(self, "merged_lengths", merged)
        if len(merged) != 2 * self.r + self.s:
            raise DomainError(
                f"merged multiset has {len(merged)} entries, expected 2r+s = {2 * self.r + self.s}")
        if not _has_split(Counter(merged), self.r):
            raise DomainError(f"merged multiset does not contain {self.r} equal pairs")


def boundary_class(bd: BoundaryData) -> BoundaryDataClass:
    return BoundaryDataClass(bd.r, bd.s, bd.merged_lengths())


def recover_boundary_class(dec: ArithmeticSpectrum) -> BoundaryDataClass:
    """Solve ``z = r + s``, ``t = 2r + s`` and read lengths ``2/d`` off the progressions."""
    if dec.unit is not Unit.PI:
        raise DomainError("boundary data can only be recovered from spectra in units of pi")
    z, t = dec.zeros, dec.total_multiplicity
    r, s = t - z, 2 * z - t
    if r < 0 or s < 0:
        raise InfeasibleCounts(f"zeros={z}, multiplicity={t} give r={r}, s={s}")
    merged = tuple(sorted(2 / d for d, m in dec.progressions for _ in range(m)))
    if not _has_split(Counter(merged), r):
        raise InfeasibleCounts(f"lengths {[str(x) for x in merged]} contain fewer than {r} equal pairs")
    return BoundaryDataClass(r, s, merged)


def data_equivalent(a: BoundaryData, b: BoundaryData) -> bool:
    return a.r == b.r and a.s == b.s and a.merged_lengths() == b.merged_lengths()


def enumerate_class_members(cls: BoundaryDataClass) -> list[BoundaryData]:
    """All boundary data in the class, sorted.

    Choose how many equal pairs each distinct length contributes to ``L`` (totalling
    ``r``); whatever is left over is ``2*Lbar``.
    """
    counts = sorted(Counter(cls.merged_lengths).items())
    members: list[BoundaryData] = []

    def walk(i: int, need: int, pairs: list[tuple[Fraction, int]]):
        if i == len(counts):
            if need == 0:
                one: list[Fraction] = []
                two: list[Fraction] = []
                for (x, c), (_, p) in zip(counts, pairs):
                    one += [x] * p
                    two += [x / 2] * (c - 2 * p)
                members.append(BoundaryData(tuple(one), tuple(two)))
            return
        x, c = counts[i]
        for p in range(min(c // 2, need) + 1):
            walk(i + 1, need - p, pairs + [(x, p)])

    walk(0, cls.r, [])
    if not members:
        raise EmptyClass(f"no split of {len(cls.merged_lengths)} lengths into {cls.r} pairs")
    return sorted(members, key=BoundaryData.sort_key)


def sufficient_prefix_length(bd_or_cls) -> int:
    """A prefix length that suffices for exact peeling of the class's canonical spectrum.

    ``4 (2r + s) * max/min`` over the merged lengths; it exceeds the number of eigenvalues
    up to the largest progression difference. Tested, not proven.
    """
    merged = bd_or_cls.merged_lengths() if isinstance(bd_or_cls, BoundaryData) else bd_or_cls.merged_lengths
    if not merged:
        return 1
    ratio = max(merged) / min(merged)
    return max(1, 4 * len(merged) * math.ceil(ratio))
