"""Sunada-type isospectrality for disjoint unions of quotients.

For a finite group G and two equally long lists of subgroups H_1..H_r, K_1..K_r, if for
every x in G

    sum_i |[x] & H_i| / |H_i|  ==  sum_i |[x] & K_i| / |K_i|

then the unions of quotients by the H_i and by the K_i of any G-space with boundary are
Steklov isospectral. The condition holds iff the permutation representations of G on the
coset spaces union(H_i \\ G) and union(K_i \\ G) have equal characters; both checks are
implemented independently, plus a direct comparison of ball-quotient spectra.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Hashable, Sequence

import numpy as np

from .ball_quotients import (
    RATIONAL,
    OrthogonalGroup,
    _rat_matrix,
    _rat_mul,
    close_group,
    quotient_ball_spectrum,
)
from .errors import CollectionSizeMismatch, DomainError, InvalidGroup, OrderExceeded


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its multiplication table: ``table[a][b]`` is the index of a*b."""

    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        table = tuple(tuple(int(x) for x in row) for row in self.table)
        object.__setattr__(self, "table", table)
        n = len(table)
        if n == 0:
            raise InvalidGroup("empty group")
        if any(len(row) != n or any(not 0 <= x < n for x in row) for row in table):
            raise InvalidGroup("table must be n x n with entries in range(n)")
        labels = tuple(self.labels) or tuple(str(i) for i in range(n))
        if len(labels) != n:
            raise InvalidGroup("need one label per element")
        object.__setattr__(self, "labels", labels)
        ident = [e for e in range(n) if table[e] == tuple(range(n))
                 and all(table[a][e] == a for a in range(n))]
        if not ident:
            raise InvalidGroup("no identity element")
        object.__setattr__(self, "_identity", ident[0])
        inv = []
        for a in range(n):
            bs = [b for b in range(n) if table[a][b] == ident[0]]
            if len(bs) != 1 or table[bs[0]][a] != ident[0]:
                raise InvalidGroup(f"element {labels[a]} has no two-sided inverse")
            inv.append(bs[0])
        object.__setattr__(self, "_inverse", tuple(inv))
        # full check for desk-sized groups, a fixed sample of triples otherwise
        triples = (itertools.product(range(n), repeat=3) if n <= 48 else
                   ((a % n, (7 * a + 3) % n, (13 * a + 5) % n) for a in range(20000)))
        for a, b, c in triples:
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise InvalidGroup(f"not associative at ({labels[a]}, {labels[b]}, {labels[c]})")

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def identity(self) -> int:
        return self._identity

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self._inverse[a]

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def is_subgroup(self, subset) -> bool:
        s = set(subset)
        return (self.identity in s and all(0 <= a < self.order for a in s)
                and all(self.mul(a, b) in s for a in s for b in s)
                and all(self.inv(a) in s for a in s))

    def generated_by(self, *elements: int) -> frozenset[int]:
        sub = {self.identity}
        frontier = [self.identity]
        while frontier:
            a = frontier.pop()
            for g in elements:
                b = self.mul(a, g)
                if b not in sub:
                    sub.add(b)
                    frontier.append(b)
        return frozenset(sub)


def group_from_elements(elements: Sequence[Hashable], mul: Callable, labels=None) -> FiniteGroup:
    """Build a multiplication table from explicit elements and a product function."""
    index = {e: i for i, e in enumerate(elements)}
    try:
        table = tuple(tuple(index[mul(a, b)] for b in elements) for a in elements)
    except KeyError as exc:
        raise InvalidGroup("elements are not closed under the product") from exc
    return FiniteGroup(table, tuple(labels) if labels else tuple(str(e) for e in elements))


def cyclic_group(n: int) -> FiniteGroup:
    return group_from_elements(range(n), lambda a, b: (a + b) % n)


def klein_four() -> FiniteGroup:
    """{1, s, t, st} encoded as bit pairs, product = xor."""
    return group_from_elements([0, 1, 2, 3], lambda a, b: a ^ b, labels=["1", "s", "t", "st"])


def symmetric_group(k: int) -> FiniteGroup:
    perms = sorted(itertools.permutations(range(k)))
    # (p*q)(i) = p(q(i))
    return group_from_elements(perms, lambda p, q: tuple(p[q[i]] for i in range(k)),
                               labels=["".join(map(str, p)) for p in perms])


@dataclass(frozen=True)
class SubgroupCollection:
    subgroups: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "subgroups", tuple(frozenset(h) for h in self.subgroups))

    def __len__(self):
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    def validate(self, group: FiniteGroup) -> None:
        for i, h in enumerate(self.subgroups):
            if not group.is_subgroup(h):
                raise InvalidGroup(f"subset {i} = {sorted(h)} is not a subgroup")

    def conjugated(self, group: FiniteGroup, by: Sequence[int]) -> SubgroupCollection:
        """Replace H_i by g_i H_i g_i^-1."""
        return SubgroupCollection(tuple(
            frozenset(group.mul(group.mul(g, h), group.inv(g)) for h in sub)
            for g, sub in zip(by, self.subgroups)))


def _collection(c) -> SubgroupCollection:
    return c if isinstance(c, SubgroupCollection) else SubgroupCollection(tuple(c))


def conjugacy_classes(group: FiniteGroup) -> list[tuple[int, ...]]:
    """Orbits of conjugation, each sorted, listed by smallest element."""
    seen: set[int] = set()
    classes = []
    for x in range(group.order):
        if x in seen:
            continue
        cls = sorted({group.mul(group.mul(g, x), group.inv(g)) for g in range(group.order)})
        seen.update(cls)
        classes.append(tuple(cls))
    return classes


@dataclass(frozen=True)
class ClassRow:
    representative: int
    conjugacy_class: tuple[int, ...]
    h_side: Fraction
    k_side: Fraction

    @property
    def ok(self) -> bool:
        return self.h_side == self.k_side


@dataclass(frozen=True)
class SunadaReport:
    holds: bool
    rows: tuple[ClassRow, ...]

    def __bool__(self):
        return self.holds


def _prepare(group, H, K):
    H, K = _collection(H), _collection(K)
    if len(H) != len(K):
        raise CollectionSizeMismatch(f"collections have {len(H)} and {len(K)} subgroups")
    H.validate(group)
    K.validate(group)
    return H, K


def sunada_condition(group: FiniteGroup, H, K) -> SunadaReport:
    """Evaluate both sides per conjugacy class with exact rationals."""
    H, K = _prepare(group, H, K)
    rows = []
    for cls in conjugacy_classes(group):
        c = set(cls)
        lhs = sum((Fraction(len(c & h), len(h)) for h in H), Fraction(0))
        rhs = sum((Fraction(len(c & k), len(k)) for k in K), Fraction(0))
        rows.append(ClassRow(cls[0], cls, lhs, rhs))
    return SunadaReport(all(r.ok for r in rows), tuple(rows))


def _right_cosets(group: FiniteGroup, sub: frozenset[int]) -> list[frozenset[int]]:
    cosets: list[frozenset[int]] = []
    covered: set[int] = set()
    for a in range(group.order):
        if a not in covered:
            coset = frozenset(group.mul(h, a) for h in sub)
            covered |= coset
            cosets.append(coset)
    return cosets


def permutation_character(group: FiniteGroup, collection) -> tuple[int, ...]:
    """chi(g) = number of right cosets H_i a (over all i) fixed by right multiplication by g."""
    collection = _collection(collection)
    chi = [0] * group.order
    for sub in collection:
        cosets = _right_cosets(group, sub)
        for g in range(group.order):
            chi[g] += sum(1 for c in cosets if frozenset(group.mul(x, g) for x in c) == c)
    return tuple(chi)


def permutation_character_equal(group: FiniteGroup, H, K) -> bool:
    H, K = _prepare(group, H, K)
    return permutation_character(group, H) == permutation_character(group, K)


# -- realization on a ball -------------------------------------------------------------

@dataclass(frozen=True)
class MatrixAction:
    """A faithful orthogonal representation: ``images[i]`` is the matrix of group element i."""

    group: FiniteGroup
    matrices: OrthogonalGroup
    index: tuple[int, ...]

    def subgroup(self, sub) -> OrthogonalGroup:
        mats = [self.matrices.elements[self.index[a]] for a in sorted(sub)]
        return close_group(mats, tol=self.matrices.tol or 1e-9, max_order=len(mats),
                           mode=self.matrices.mode)


def matrix_action(group: FiniteGroup, images: Sequence) -> MatrixAction:
    """Check that ``element i -> images[i]`` is an injective homomorphism into O(n)."""
    if len(images) != group.order:
        raise DomainError(f"need {group.order} matrices, got {len(images)}")
    try:
        mg = close_group(images, max_order=max(group.order, 1))
    except OrderExceeded as exc:
        raise InvalidGroup(f"images generate a group larger than |G| = {group.order}") from exc
    if mg.order != group.order:
        raise InvalidGroup(f"images generate a group of order {mg.order}, expected {group.order}")
    exact = mg.mode == RATIONAL
    if exact:
        pos = {m: i for i, m in enumerate(mg.elements)}
        index = [pos[_rat_matrix(img)] for img in images]
    else:
        arrays = np.stack(mg.elements)
        index = [int(np.argmin(np.max(np.abs(arrays - np.asarray(img, dtype=float)), axis=(1, 2))))
                 for img in images]
    if len(set(index)) != group.order:
        raise InvalidGroup("the map to matrices is not injective")
    els = mg.elements
    for a in range(group.order):
        for b in range(group.order):
            ab = els[index[group.mul(a, b)]]
            if exact:
                ok = _rat_mul(els[index[a]], els[index[b]]) == ab
            else:
                ok = np.max(np.abs(els[index[a]] @ els[index[b]] - ab)) <= 1e-6
            if not ok:
                raise InvalidGroup(
                    f"not a homomorphism: image of {group.labels[a]}*{group.labels[b]} "
                    "differs from the product of images")
    return MatrixAction(group, mg, tuple(index))


@dataclass(frozen=True)
class BallCheck:
    equal: bool
    max_degree: int
    h_spectrum: Counter
    k_spectrum: Counter

    def __bool__(self):
        return self.equal


def union_spectrum(action: MatrixAction, collection, max_degree: int, radius=1) -> Counter:
    total: Counter = Counter()
    for sub in _collection(collection):
        total.update(quotient_ball_spectrum(action.subgroup(sub), radius, max_degree).values)
    return total


def sunada_ball_check(action: MatrixAction, H, K, max_degree: int, radius=1) -> BallCheck:
    """Compare the spectra (degree <= max_degree) of the two unions of ball quotients."""
    H, K = _prepare(action.group, H, K)
    hs = union_spectrum(action, H, max_degree, radius)
    ks = union_spectrum(action, K, max_degree, radius)
    return BallCheck(hs == ks, max_degree, hs, ks)
