"""Canonical Steklov spectra of orbisurfaces with boundary, in exact arithmetic.

A flat disk of circumference ``l`` has Steklov spectrum ``{0} + 2 copies of (2*pi/l)N``,
and the flat half-disk orbisurface with boundary length ``l`` has ``{0} + (pi/l)N`` with
simple eigenvalues. Canonical orbisurfaces are disjoint unions of these, so every spectrum
here is a finite number of zeros plus a finite union of arithmetic progressions ``d*N``.

With rational lengths the eigenvalues are rational multiples of pi; we store the rational
coefficient and tag the spectrum with ``Unit.PI``. Lengths that are themselves rational
multiples of pi (``pi_lengths=True``) give plain rational eigenvalues, tagged ``Unit.ABS``.
"""

from __future__ import annotations

import enum
import heapq
import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import DomainError, UnitMismatch


class Unit(enum.Enum):
    PI = "pi"
    ABS = "abs"


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and strings like ``"3/4"`` or ``"0.25"`` to a Fraction.

    Floats are refused: exactness is the point of this library.
    """
    if isinstance(x, bool):
        raise DomainError(f"not a rational number: {x!r}")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"cannot parse rational {x!r}") from exc
    raise DomainError(f"expected an exact rational, got {type(x).__name__} {x!r}")


def as_length(x) -> Fraction:
    value = as_rational(x)
    if value <= 0:
        raise DomainError(f"lengths must be positive, got {value}")
    return value


def fmt_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class BoundaryData:
    """Boundary data ``(L; Lbar)``: lengths of type I (circle) and type II (mirrored segment)
    boundary components. Stored as sorted tuples, so equality is multiset equality."""

    type_one: tuple[Fraction, ...] = ()
    type_two: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "type_one", tuple(sorted(as_length(x) for x in self.type_one)))
        object.__setattr__(self, "type_two", tuple(sorted(as_length(x) for x in self.type_two)))

    @property
    def r(self) -> int:
        return len(self.type_one)

    @property
    def s(self) -> int:
        return len(self.type_two)

    def merged_lengths(self) -> tuple[Fraction, ...]:
        """The multiset ``L + L + 2*Lbar`` (sorted)."""
        return tuple(sorted(self.type_one + self.type_one + tuple(2 * x for x in self.type_two)))

    def sort_key(self):
        return (self.type_one, self.type_two)

    def __str__(self):
        one = ", ".join(fmt_rational(x) for x in self.type_one)
        two = ", ".join(fmt_rational(x) for x in self.type_two)
        return f"({{{one}}}; {{{two}}})"


def _canonical_progressions(progressions: Iterable[tuple]) -> tuple[tuple[Fraction, int], ...]:
    merged: dict[Fraction, int] = {}
    for diff, mult in progressions:
        diff = as_rational(diff)
        if diff <= 0:
            raise DomainError(f"progression differences must be positive, got {diff}")
        if not isinstance(mult, int) or isinstance(mult, bool) or mult < 0:
            raise DomainError(f"multiplicities must be non-negative integers, got {mult!r}")
        if mult:
            merged[diff] = merged.get(diff, 0) + mult
    return tuple(sorted(merged.items()))


@dataclass(frozen=True)
class ArithmeticSpectrum:
    """Exact normal form ``{0}^zeros + sum of mult * (diff * N)``.

    Progressions are kept sorted by difference with equal differences merged, so two
    instances are equal exactly when they describe the same multiset.
    """

    unit: Unit
    zeros: int = 0
    progressions: tuple[tuple[Fraction, int], ...] = ()

    def __post_init__(self):
        if not isinstance(self.unit, Unit):
            object.__setattr__(self, "unit", Unit(self.unit))
        if not isinstance(self.zeros, int) or self.zeros < 0:
            raise DomainError(f"zeros must be a non-negative integer, got {self.zeros!r}")
        object.__setattr__(self, "progressions", _canonical_progressions(self.progressions))

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.progressions)

    @property
    def is_finite(self) -> bool:
        return not self.progressions

    def union(self, other: ArithmeticSpectrum) -> ArithmeticSpectrum:
        _check_units(self, other)
        return ArithmeticSpectrum(self.unit, self.zeros + other.zeros,
                                  self.progressions + other.progressions)

    def scaled(self, c) -> ArithmeticSpectrum:
        c = as_length(c)
        return ArithmeticSpectrum(self.unit, self.zeros, tuple((c * d, m) for d, m in self.progressions))

    def count_upto(self, x) -> int:
        """Number of eigenvalues (with multiplicity) that are <= x."""
        x = as_rational(x)
        if x < 0:
            return 0
        return self.zeros + sum(m * int(x // d) for d, m in self.progressions)


def _check_units(a, b):
    if a.unit is not b.unit:
        raise UnitMismatch(f"cannot combine spectra in units {a.unit.value!r} and {b.unit.value!r}")


@dataclass(frozen=True)
class SpectrumView:
    """A finite, sorted list of eigenvalues with multiplicity."""

    unit: Unit
    values: tuple[Fraction, ...] = field(default=())

    def __post_init__(self):
        if not isinstance(self.unit, Unit):
            object.__setattr__(self, "unit", Unit(self.unit))
        vals = tuple(as_rational(v) for v in self.values)
        if any(v < 0 for v in vals):
            raise DomainError("eigenvalues must be non-negative")
        if any(a > b for a, b in zip(vals, vals[1:])):
            raise DomainError("spectrum view must be non-decreasing")
        object.__setattr__(self, "values", vals)

    @classmethod
    def _trusted(cls, unit: Unit, values: tuple[Fraction, ...]) -> SpectrumView:
        """Skip validation for values already known to be sorted non-negative Fractions."""
        view = object.__new__(cls)
        object.__setattr__(view, "unit", unit)
        object.__setattr__(view, "values", values)
        return view

    def __len__(self):
        return len(self.values)

    def runs(self) -> list[tuple[Fraction, int]]:
        return [(v, sum(1 for _ in g)) for v, g in itertools.groupby(self.values)]

    def scaled(self, c) -> SpectrumView:
        c = as_length(c)
        return SpectrumView(self.unit, tuple(c * v for v in self.values))


def canonical_disk_spectrum(length, *, pi_lengths: bool = False) -> ArithmeticSpectrum:
    """Spectrum of the flat disk with boundary circumference ``length``.

    Eigenvalues are ``2*pi*k/length`` twice for each k >= 1. With ``pi_lengths`` the length
    is read as a coefficient of pi, so the disk of circumference ``2*pi`` is ``length=2``.
    """
    ell = as_length(length)
    unit = Unit.ABS if pi_lengths else Unit.PI
    return ArithmeticSpectrum(unit, 1, ((2 / ell, 2),))


def canonical_half_disk_spectrum(length, *, pi_lengths: bool = False) -> ArithmeticSpectrum:
    """Spectrum of the half-disk orbisurface with type II boundary of length ``length``:
    ``0, pi/l, 2pi/l, ...`` each simple."""
    ell = as_length(length)
    unit = Unit.ABS if pi_lengths else Unit.PI
    return ArithmeticSpectrum(unit, 1, ((1 / ell, 1),))


def canonical_spectrum(bd: BoundaryData, *, pi_lengths: bool = False) -> ArithmeticSpectrum:
    unit = Unit.ABS if pi_lengths else Unit.PI
    spec = ArithmeticSpectrum(unit)
    for ell in bd.type_one:
        spec = spec.union(canonical_disk_spectrum(ell, pi_lengths=pi_lengths))
    for ell in bd.type_two:
        spec = spec.union(canonical_half_disk_spectrum(ell, pi_lengths=pi_lengths))
    return spec


def common_denominator(xs: Iterable[Fraction]) -> int:
    den = 1
    for x in xs:
        den = math.lcm(den, x.denominator)
    return den


def iter_runs(spec: ArithmeticSpectrum) -> Iterator[tuple[Fraction, int]]:
    """Distinct eigenvalues in increasing order with their multiplicities.

    A k-way merge over the progressions, on integers over a common denominator;
    infinite unless the spectrum is finite.
    """
    if spec.zeros:
        yield Fraction(0), spec.zeros
    den = common_denominator(d for d, _ in spec.progressions)
    steps = [(int(d * den), m) for d, m in spec.progressions]
    heap = [(step, i) for i, (step, _) in enumerate(steps)]
    heapq.heapify(heap)
    while heap:
        value, count = heap[0][0], 0
        while heap and heap[0][0] == value:
            _, i = heapq.heappop(heap)
            step, mult = steps[i]
            count += mult
            heapq.heappush(heap, (value + step, i))
        yield Fraction(value, den), count


def iter_spectrum(spec: ArithmeticSpectrum) -> Iterator[Fraction]:
    """Yield the spectrum in non-decreasing order, with multiplicity."""
    for value, count in iter_runs(spec):
        for _ in range(count):
            yield value


def enumerate_runs(spec: ArithmeticSpectrum, n: int) -> list[tuple[Fraction, int]]:
    """Run-length form of the first ``n`` eigenvalues."""
    runs, total = [], 0
    for value, count in iter_runs(spec):
        if total >= n:
            break
        take = min(count, n - total)
        runs.append((value, take))
        total += take
    return runs


def enumerate_spectrum(spec: ArithmeticSpectrum, n: int) -> SpectrumView:
    """First ``n`` eigenvalues (fewer if the spectrum is finite and smaller)."""
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    values = []
    for value, count in enumerate_runs(spec, n):
        values += [value] * count
    return SpectrumView._trusted(spec.unit, tuple(values))


def spectra_equal(a: ArithmeticSpectrum, b: ArithmeticSpectrum) -> bool:
    _check_units(a, b)
    return a.zeros == b.zeros and a.progressions == b.progressions


def view_multiset(view: SpectrumView) -> Counter:
    return Counter(view.values)
