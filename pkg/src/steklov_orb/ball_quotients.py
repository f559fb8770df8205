"""Steklov spectra of quotients of Euclidean balls by finite orthogonal groups.

On ``B(0,R)`` in R^n every homogeneous harmonic polynomial of degree m is a Steklov
eigenfunction with eigenvalue m/R. On a quotient by a finite group the eigenfunctions are
the invariant ones, so the multiplicity of m/R is ``d(m)``, the dimension of invariant
degree-m harmonics. We count it by averaging characters: ``p_m(g)``, the coefficient of
``t^m`` in ``1/det(I - t g)``, is the trace of g on degree-m polynomials, and harmonics
are the kernel of the surjective Laplacian, so their trace is ``p_m(g) - p_{m-2}(g)``.

Matrices come in two modes. ``rational``: tuples of Fractions, everything exact.
``float``: numpy arrays with tolerance ``tol`` (rotations by 2*pi*p/q), and dimensions are
snapped to integers after checking they are within 1e-6 of one.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DomainError, NonIntegerDimension, NotOrthogonal, OrderExceeded
from .spectra import SpectrumView, Unit, as_length, as_rational

RATIONAL = "rational"
FLOAT = "float"

DEFAULT_TOL = 1e-9
INTEGRALITY_TOL = 1e-6
_HASH_GRID = 1e-6

RatMatrix = tuple[tuple[Fraction, ...], ...]


# -- rational matrix helpers -------------------------------------------------

def _rat_matrix(m) -> RatMatrix:
    return tuple(tuple(as_rational(x) for x in row) for row in m)


def _rat_mul(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    cols = list(zip(*b))
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols) for row in a)


def _rat_identity(n: int) -> RatMatrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def _rat_transpose(a: RatMatrix) -> RatMatrix:
    return tuple(zip(*a))


def _is_exact_entry(x) -> bool:
    return isinstance(x, (int, Fraction, str)) and not isinstance(x, bool)


# -- the group -----------------------------------------------------------------

@dataclass(frozen=True)
class OrthogonalGroup:
    """A finite subgroup of O(n), stored as its full element list (identity first)."""

    dim: int
    mode: str
    elements: tuple
    generators: tuple = ()
    tol: float = DEFAULT_TOL

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def as_arrays(self) -> list[np.ndarray]:
        return _to_arrays(self.elements) if self.mode == RATIONAL else list(self.elements)

    def conjugate(self, q) -> OrthogonalGroup:
        """The group ``Q G Q^T`` (float mode unless both Q and G are rational)."""
        if self.mode == RATIONAL and all(_is_exact_entry(x) for row in q for x in row):
            qr = _rat_matrix(q)
            qt = _rat_transpose(qr)
            gens = [_rat_mul(_rat_mul(qr, g), qt) for g in self.generators]
        else:
            qa = np.asarray(q, dtype=float)
            gens = [qa @ g @ qa.T for g in _to_arrays(self.generators)]
        return close_group(gens, tol=self.tol or DEFAULT_TOL, max_order=self.order)


def _to_arrays(mats) -> list[np.ndarray]:
    return [np.array([[float(x) for x in row] for row in g]) for g in mats]


def _orthogonality_defect_rational(g: RatMatrix) -> Fraction:
    prod = _rat_mul(_rat_transpose(g), g)
    n = len(g)
    return max(abs(prod[i][j] - (1 if i == j else 0)) for i in range(n) for j in range(n))


def close_group(generators: Sequence, tol: float = DEFAULT_TOL, max_order: int = 100_000,
                mode: str | None = None) -> OrthogonalGroup:
    """Breadth-first closure of ``generators`` under multiplication.

    ``mode`` defaults to rational when every entry is an int, Fraction or numeric string,
    otherwise float. Raises ``NotOrthogonal`` for a non-orthogonal generator and
    ``OrderExceeded`` once more than ``max_order`` elements appear.
    """
    gens = list(generators)
    if not gens:
        raise DomainError("need at least one generator (pass the identity for the trivial group)")
    if max_order < 1:
        raise DomainError("max_order must be >= 1")
    if mode is None:
        mode = RATIONAL if all(_is_exact_entry(x) for g in gens for row in g for x in row) else FLOAT
    if mode == RATIONAL:
        return _close_rational([_rat_matrix(g) for g in gens], max_order)
    if mode == FLOAT:
        return _close_float([np.asarray(g, dtype=float) for g in gens], tol, max_order)
    raise DomainError(f"unknown mode {mode!r}")


def _check_square(shapes: list[tuple[int, int]]) -> int:
    n = shapes[0][0]
    if n < 1 or any(s != (n, n) for s in shapes):
        raise DomainError("generators must be square matrices of a common size")
    return n


def _close_rational(gens: list[RatMatrix], max_order: int) -> OrthogonalGroup:
    n = _check_square([(len(g), len(g[0]) if g else 0) for g in gens])
    for g in gens:
        if _orthogonality_defect_rational(g) != 0:
            raise NotOrthogonal(f"generator {g} is not orthogonal")
    ident = _rat_identity(n)
    seen = {ident: 0}
    elements = [ident]
    queue = deque([ident])
    while queue:
        a = queue.popleft()
        for g in gens:
            b = _rat_mul(a, g)
            if b not in seen:
                if len(elements) >= max_order:
                    raise OrderExceeded(f"closure exceeded max_order={max_order}")
                seen[b] = len(elements)
                elements.append(b)
                queue.append(b)
    return OrthogonalGroup(n, RATIONAL, tuple(elements), tuple(gens), 0.0)


def _close_float(gens: list[np.ndarray], tol: float, max_order: int) -> OrthogonalGroup:
    n = _check_square([g.shape for g in gens])
    for g in gens:
        if np.max(np.abs(g.T @ g - np.eye(n))) > tol:
            raise NotOrthogonal(f"generator is not orthogonal within tol={tol}:\n{g}")
    buckets: dict[tuple, list[int]] = {}
    elements: list[np.ndarray] = []

    def key(m):
        return tuple(np.rint(m / _HASH_GRID).astype(np.int64).ravel())

    def lookup(m) -> int | None:
        for idx in buckets.get(key(m), ()):
            if np.max(np.abs(elements[idx] - m)) <= _HASH_GRID:
                return idx
        # rounding-boundary misses fall back to a full comparison
        if elements:
            stack = np.stack(elements)
            diffs = np.max(np.abs(stack - m), axis=(1, 2))
            hit = int(np.argmin(diffs))
            if diffs[hit] <= _HASH_GRID:
                return hit
        return None

    def add(m):
        m = m.copy()
        m.setflags(write=False)
        buckets.setdefault(key(m), []).append(len(elements))
        elements.append(m)

    add(np.eye(n))
    queue = deque([0])
    while queue:
        a = elements[queue.popleft()]
        for g in gens:
            b = a @ g
            if lookup(b) is None:
                if len(elements) >= max_order:
                    raise OrderExceeded(f"closure exceeded max_order={max_order}")
                add(b)
                queue.append(len(elements) - 1)
    return OrthogonalGroup(n, FLOAT, tuple(elements), tuple(gens), tol)


# -- standard generators ----------------------------------------------------------

def identity_matrix(n: int) -> RatMatrix:
    return _rat_identity(n)


def diagonal(*entries) -> RatMatrix:
    n = len(entries)
    return tuple(tuple(Fraction(entries[i]) if i == j else Fraction(0) for j in range(n)) for i in range(n))


def rotation_2d(angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, -s], [s, c]])


def cyclic_rotations(k: int) -> OrthogonalGroup:
    """Z_k acting on R^2 by rotations through multiples of 2*pi/k.

    Exact for k in (1, 2, 4), float otherwise.
    """
    if k < 1:
        raise DomainError("k must be >= 1")
    exact = {1: ((1, 0), (0, 1)), 2: ((-1, 0), (0, -1)), 4: ((0, -1), (1, 0))}
    if k in exact:
        return close_group([exact[k]])
    return close_group([rotation_2d(2 * math.pi / k)])


def reflection_2d() -> OrthogonalGroup:
    """Reflection (x, y) -> (x, -y); it fixes cos(theta)."""
    return close_group([diagonal(1, -1)])


def klein_rotations() -> OrthogonalGroup:
    """Rotations by pi about the x, y and z axes."""
    return close_group([diagonal(1, -1, -1), diagonal(-1, 1, -1)])


def klein_reflections() -> OrthogonalGroup:
    """Generated by the reflections across the xy- and xz-planes.

    Their product is the rotation by pi about the x-axis: no Klein 4-subgroup of O(3)
    consists of three reflections, since two reflections always compose to a rotation.
    """
    return close_group([diagonal(1, 1, -1), diagonal(1, -1, 1)])


def antipodal(n: int) -> OrthogonalGroup:
    return close_group([diagonal(*([-1] * n))])


def lens_generator(q: int, p: Sequence[int]) -> np.ndarray:
    """Block-diagonal rotation ``z_i -> exp(2 pi i p_i / q) z_i`` on C^m = R^(2m)."""
    m = len(p)
    g = np.zeros((2 * m, 2 * m))
    for i, pi in enumerate(p):
        g[2 * i:2 * i + 2, 2 * i:2 * i + 2] = rotation_2d(2 * math.pi * (pi % q) / q)
    return g


def lens_group(q: int, p: Sequence[int]) -> OrthogonalGroup:
    if q < 1:
        raise DomainError("q must be >= 1")
    return close_group([lens_generator(q, p)], max_order=q)


# -- invariant harmonic dimensions ---------------------------------------------------

def harmonic_space_dim(n: int, m: int) -> int:
    """dim of degree-m harmonic polynomials on R^n: C(n+m-1, m) - C(n+m-3, m-2)."""
    if m < 0:
        return 0
    full = math.comb(n + m - 1, m)
    return full - (math.comb(n + m - 3, m - 2) if m >= 2 else 0)


def _power_traces(g, n: int, exact: bool) -> list:
    traces = []
    if exact:
        power = g
        for _ in range(n):
            traces.append(sum((power[i][i] for i in range(n)), Fraction(0)))
            power = _rat_mul(power, g)
    else:
        power = g
        for _ in range(n):
            traces.append(float(np.trace(power)))
            power = power @ g
    return traces


def _det_coefficients(traces: list, exact: bool) -> list:
    """Coefficients c_0..c_n of det(I - t g) from power traces via Newton's identities."""
    n = len(traces)
    one = Fraction(1) if exact else 1.0
    e = [one]
    for k in range(1, n + 1):
        acc = sum(((-1) ** (i - 1) * e[k - i] * traces[i - 1] for i in range(1, k + 1)),
                  Fraction(0) if exact else 0.0)
        e.append(acc / k)
    return [(-1) ** i * e[i] for i in range(n + 1)]


def graded_traces(g, n: int, max_degree: int, exact: bool) -> list:
    """Traces of g on polynomials of degree 0..max_degree: the series of 1/det(I - t g)."""
    c = _det_coefficients(_power_traces(g, n, exact), exact)
    a = [Fraction(1) if exact else 1.0]
    for m in range(1, max_degree + 1):
        a.append(-sum(c[i] * a[m - i] for i in range(1, min(m, n) + 1)))
    return a


@dataclass(frozen=True)
class HarmonicDimensionTable:
    dim: int
    group_order: int
    dims: tuple[int, ...]
    raw: tuple = field(default=(), compare=False, repr=False)

    @property
    def max_degree(self) -> int:
        return len(self.dims) - 1

    def __getitem__(self, m: int) -> int:
        return self.dims[m]


def invariant_harmonic_dims(group: OrthogonalGroup, max_degree: int) -> HarmonicDimensionTable:
    if max_degree < 0:
        raise DomainError("max_degree must be >= 0")
    n = group.dim
    exact = group.mode == RATIONAL
    zero = Fraction(0) if exact else 0.0
    totals = [zero] * (max_degree + 1)
    for g in group.elements:
        a = graded_traces(g, n, max_degree, exact)
        for m in range(max_degree + 1):
            totals[m] += a[m] - (a[m - 2] if m >= 2 else zero)
    raw = [t / group.order for t in totals]
    dims = []
    for m, x in enumerate(raw):
        if exact:
            if x.denominator != 1:
                raise NonIntegerDimension(f"degree {m}: averaged dimension {x} is not an integer")
            dims.append(int(x))
        else:
            k = round(x)
            if abs(x - k) > INTEGRALITY_TOL:
                raise NonIntegerDimension(
                    f"degree {m}: averaged dimension {x!r} is not within {INTEGRALITY_TOL} of an integer")
            dims.append(int(k))
    return HarmonicDimensionTable(n, group.order, tuple(dims), tuple(raw))


def quotient_ball_spectrum(group: OrthogonalGroup, radius, max_degree: int) -> SpectrumView:
    """Eigenvalues m/R with multiplicity d(m), for 0 <= m <= max_degree."""
    R = as_length(radius)
    table = invariant_harmonic_dims(group, max_degree)
    values = []
    for m, d in enumerate(table.dims):
        values += [Fraction(m) / R] * d
    return SpectrumView(Unit.ABS, tuple(values))


@dataclass(frozen=True)
class IsospectralVerdict:
    equal: bool
    max_degree: int
    first_mismatch: int | None
    dims_1: tuple[int, ...]
    dims_2: tuple[int, ...]

    def __bool__(self):
        return self.equal

    def describe(self) -> str:
        if self.equal:
            return f"isospectral up to degree {self.max_degree}"
        m = self.first_mismatch
        return f"not isospectral: d({m}) = {self.dims_1[m]} vs {self.dims_2[m]}"


def steklov_isospectral_quotients(g1: OrthogonalGroup, g2: OrthogonalGroup,
                                  max_degree: int) -> IsospectralVerdict:
    """Compare invariant harmonic dimensions up to ``max_degree`` (R cancels)."""
    if g1.dim != g2.dim:
        raise DomainError(f"groups act on different dimensions {g1.dim} and {g2.dim}")
    d1 = invariant_harmonic_dims(g1, max_degree).dims
    d2 = invariant_harmonic_dims(g2, max_degree).dims
    mismatch = next((m for m in range(max_degree + 1) if d1[m] != d2[m]), None)
    return IsospectralVerdict(mismatch is None, max_degree, mismatch, d1, d2)


# -- Fourier-diagonal Dirichlet-to-Neumann operators -----------------------------------

@dataclass(frozen=True)
class FourierDTN:
    """Eigenvalue of the Dirichlet-to-Neumann operator on span{cos(js), sin(js)},
    s the arclength on the boundary circle, for j = 0..J."""

    label: str
    eigenvalues: tuple[Fraction, ...]

    def same_operator(self, other: FourierDTN) -> bool:
        return self.eigenvalues == other.eigenvalues

    @property
    def modes(self) -> int:
        return len(self.eigenvalues) - 1


def dtn_disk(radius, modes: int) -> FourierDTN:
    """Disk of radius R: cos(j theta) extends to r^j cos(j theta) with normal derivative
    j/R. With s = R theta the mode is cos((j/R) s); for R = 1 that is mode j."""
    R = as_length(radius)
    if modes < 0:
        raise DomainError("modes must be >= 0")
    return FourierDTN(f"disk(R={R})", tuple(Fraction(j) / R for j in range(modes + 1)))


def dtn_cone(k: int, modes: int) -> FourierDTN:
    """Cone Z_k \\ D(2 pi k), computed through the quotient.

    Degree-m harmonics on the radius-k disk are invariant under rotation by 2 pi/k iff
    k | m; their eigenvalue is m/k, and under the boundary covering s = k theta the
    function cos(m theta) becomes cos((m/k) s), i.e. arclength mode m/k.
    """
    if k < 1:
        raise DomainError("k must be >= 1")
    if modes < 0:
        raise DomainError("modes must be >= 0")
    table: dict[int, Fraction] = {}
    for m in range(modes * k + 1):
        if m % k:
            continue
        boundary_mode = Fraction(m, k)
        table[int(boundary_mode)] = Fraction(m) / k
    return FourierDTN(f"cone(k={k})", tuple(table[j] for j in range(modes + 1)))
