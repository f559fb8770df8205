"""Exact quantities behind the upper bounds for Steklov eigenvalues of orbifolds.

- the least L1 norm of a nonzero vector of the congruence lattice {a in Z^m : a.p = 0 mod q}
  attached to the lens-type ball quotient Gamma_{q,p} \\ B(0,1) in R^(2m), and the family
  q = j^m, p = (1, j, ..., j^(m-1)) where it equals j = q^(1/m) exactly. Beware that for
  m >= 2 the lowest nonzero Steklov eigenvalue of the quotient is min(2, that norm), see
  ``lens_first_invariant_degree``;
- the isoperimetric ratio of an order-q isometric quotient, I(O) = q^(-1/n) I(Omega);
- the orbifold Euler characteristic of a cell division, sum (-1)^dim / |isotropy|;
- the case split of the two-dimensional bound, whose constants A, B must be supplied.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import DomainError
from .spectra import as_rational


@dataclass(frozen=True)
class LensParams:
    q: int
    p: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.q, int) or self.q < 1:
            raise DomainError(f"q must be a positive integer, got {self.q!r}")
        p = tuple(int(x) % self.q for x in self.p)
        if not p:
            raise DomainError("p must have at least one entry")
        object.__setattr__(self, "p", p)

    @property
    def m(self) -> int:
        return len(self.p)

    @property
    def n(self) -> int:
        return 2 * self.m

    @property
    def is_trivial(self) -> bool:
        """The generator acts trivially, so the lattice is all of Z^m."""
        return all(x == 0 for x in self.p)

    def in_lattice(self, a: Sequence[int]) -> bool:
        return sum(x * y for x, y in zip(a, self.p)) % self.q == 0


def l1_shell(m: int, t: int) -> Iterator[tuple[int, ...]]:
    """All integer vectors of length m with L1 norm exactly t, in a fixed order."""
    if m == 1:
        yield (t,)
        if t:
            yield (-t,)
        return
    for first in range(t + 1):
        for rest in l1_shell(m - 1, t - first):
            yield (first,) + rest
            if first:
                yield (-first,) + rest


@dataclass(frozen=True)
class ShortestVector:
    norm: int
    witness: tuple[int, ...]


def shortest_l1_vector(params: LensParams) -> ShortestVector:
    """Scan L1 shells t = 1, 2, ...; the first shell with a lattice vector gives the minimum.

    Terminates by t = q since (q, 0, ..., 0) always lies in the lattice.
    """
    for t in range(1, params.q + 1):
        for a in l1_shell(params.m, t):
            if params.in_lattice(a):
                return ShortestVector(t, a)
    raise AssertionError("unreachable: (q, 0, ..., 0) is in the lattice")


def sigma2_lens(params: LensParams) -> int:
    """Least L1 norm of a nonzero vector of the congruence lattice."""
    return shortest_l1_vector(params).norm


def lens_first_invariant_degree(params: LensParams) -> int:
    """Least positive degree carrying a Gamma_{q,p}-invariant harmonic polynomial.

    For m = 1 this is the lattice minimum. For m >= 2 the polynomial
    |z_1|^2 - |z_2|^2 is harmonic and invariant under every Gamma_{q,p}, so the answer
    is min(2, lattice minimum); only the m = 1 case, or a lattice minimum <= 2, makes the
    two agree. Cross-checked against ``invariant_harmonic_dims`` in the tests.
    """
    t = sigma2_lens(params)
    return t if params.m == 1 else min(2, t)


def sharpness_params(j: int, m: int) -> LensParams:
    return LensParams(j ** m, tuple(j ** i for i in range(m)))


def verify_sharpness_family(j: int, m: int) -> bool:
    """sigma_2(O(j^m; (1, j, ..., j^(m-1)))) == j."""
    if j < 1 or m < 1:
        raise DomainError("need j >= 1 and m >= 1")
    return sigma2_lens(sharpness_params(j, m)) == j


def sharpness_table(m: int, jmax: int) -> list[dict]:
    rows = []
    for j in range(1, jmax + 1):
        params = sharpness_params(j, m)
        sv = shortest_l1_vector(params)
        rows.append({"j": j, "q": params.q, "p": list(params.p), "sigma2": sv.norm,
                     "witness": list(sv.witness), "q_root_m": j, "sharp": sv.norm == j,
                     "first_invariant_degree": lens_first_invariant_degree(params)})
    return rows


def integer_root(q: int, n: int) -> int | None:
    """The integer r with r**n == q, if there is one."""
    if q < 0 or n < 1:
        raise DomainError("need q >= 0 and n >= 1")
    r = round(q ** (1.0 / n))
    for c in (r - 1, r, r + 1):
        if c >= 0 and c ** n == q:
            return c
    return None


@dataclass(frozen=True)
class IsoperimetricQuotient:
    """``I_omega * q**(-1/n)`` kept symbolically; ``exact`` is set when q is a perfect n-th power."""

    i_omega: Fraction
    q: int
    n: int

    @property
    def exact(self) -> Fraction | None:
        root = integer_root(self.q, self.n)
        return None if root is None else self.i_omega / root

    @property
    def value(self) -> float:
        return float(self.i_omega) * self.q ** (-1.0 / self.n)


def isoperimetric_quotient(i_omega, q: int, n: int) -> IsoperimetricQuotient:
    i_omega = as_rational(i_omega)
    if i_omega <= 0:
        raise DomainError("the isoperimetric ratio must be positive")
    if q < 1 or n < 2:
        raise DomainError("need q >= 1 and n >= 2")
    return IsoperimetricQuotient(i_omega, q, n)


def isoperimetric_ratio(boundary_volume: float, volume: float, n: int) -> float:
    """vol(boundary) / vol^((n-1)/n)."""
    return boundary_volume / volume ** ((n - 1) / n)


# -- Euler characteristic ----------------------------------------------------------------

@dataclass(frozen=True)
class CellComplex:
    """Cells as (dimension, isotropy order). Whether the cells really divide an orbifold
    with constant isotropy on each open cell is the caller's responsibility."""

    cells: tuple[tuple[int, int], ...]

    def __post_init__(self):
        cells = tuple((int(d), int(k)) for d, k in self.cells)
        for d, k in cells:
            if d not in (0, 1, 2):
                raise DomainError(f"cell dimension must be 0, 1 or 2, got {d}")
            if k < 1:
                raise DomainError(f"isotropy order must be >= 1, got {k}")
        object.__setattr__(self, "cells", cells)

    def __add__(self, other: CellComplex) -> CellComplex:
        return CellComplex(self.cells + other.cells)


def euler_characteristic(cc: CellComplex) -> Fraction:
    return sum((Fraction((-1) ** d, k) for d, k in cc.cells), Fraction(0))


def disk_complex() -> CellComplex:
    """One boundary vertex, the boundary loop, the open disk."""
    return CellComplex(((0, 1), (1, 1), (2, 1)))


def cone_complex(k: int) -> CellComplex:
    """Disk with a cone point of order k at the centre: cone vertex, boundary vertex,
    a radial edge joining them, the boundary loop, and the slit-open face."""
    if k < 1:
        raise DomainError("cone order must be >= 1")
    return CellComplex(((0, k), (0, 1), (1, 1), (1, 1), (2, 1)))


def half_disk_complex() -> CellComplex:
    """Disk modulo a reflection: two corner points and the mirror edge carry Z_2
    isotropy; the boundary arc and the face are free."""
    return CellComplex(((0, 2), (0, 2), (1, 2), (1, 1), (2, 1)))


def doubled_half_disk_complex() -> CellComplex:
    """The disk double-covering the half-disk: the two corners, the mirror diameter
    (now an interior edge), two boundary arcs, two half-disk faces."""
    return CellComplex(((0, 1), (0, 1), (1, 1), (1, 1), (1, 1), (2, 1), (2, 1)))


def trivial_cover(cc: CellComplex, k: int) -> CellComplex:
    """k disjoint copies: the trivial k-sheeted cover."""
    return CellComplex(cc.cells * k)


# -- two-dimensional bound regime ----------------------------------------------------------

class Regime(enum.Enum):
    NONNEGATIVE_EXCESS = "NonnegativeExcess"
    NEGATIVE_EXCESS = "NegativeExcess"


class ConformalFlag(enum.Enum):
    """What is known about the conformal invariant attached to a bound report."""

    ZERO = "Zero"
    POSITIVE_UNKNOWN = "PositiveUnknown"
    UNSPECIFIED = "Unspecified"


@dataclass(frozen=True)
class BoundRegimeInput:
    chi: Fraction
    r: int
    s: int

    def __post_init__(self):
        object.__setattr__(self, "chi", as_rational(self.chi))
        if self.r < 0 or self.s < 0:
            raise DomainError("r and s must be non-negative")

    @property
    def excess(self) -> Fraction:
        """chi + r + s/2, the Euler characteristic of the capped-off closed orbisurface."""
        return self.chi + self.r + Fraction(self.s, 2)


@dataclass(frozen=True)
class BoundReport:
    regime: Regime
    rhs: Fraction
    excess: Fraction
    k: int
    A: Fraction
    B: Fraction
    conformal: ConformalFlag = ConformalFlag.UNSPECIFIED


def bound_regime(inp: BoundRegimeInput, k: int, A, B,
                 conformal: ConformalFlag = ConformalFlag.UNSPECIFIED) -> BoundReport:
    """Right-hand side of sigma_k * length(boundary) <= ... for caller-supplied A, B > 0."""
    A, B = as_rational(A), as_rational(B)
    if A <= 0 or B <= 0:
        raise DomainError("A and B must be positive")
    if k < 1:
        raise DomainError("k must be >= 1")
    e = inp.excess
    if e >= 0:
        return BoundReport(Regime.NONNEGATIVE_EXCESS, B * k, e, k, A, B, conformal)
    return BoundReport(Regime.NEGATIVE_EXCESS, -A * e + B * k, e, k, A, B, conformal)
