from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from steklov_orb.errors import DomainError, EmptyClass, InfeasibleCounts, PeelInconsistency
from steklov_orb.inverse import (
    BoundaryDataClass,
    boundary_class,
    data_equivalent,
    enumerate_class_members,
    peel_progressions,
    peel_progressions_approx,
    recover_boundary_class,
    sufficient_prefix_length,
)
from steklov_orb.spectra import (
    ArithmeticSpectrum,
    BoundaryData,
    SpectrumView,
    Unit,
    canonical_spectrum,
    enumerate_spectrum,
    spectra_equal,
)
from strategies import boundary_data, lengths, small_pool


def view_of(bd, n=None):
    spec = canonical_spectrum(bd)
    return enumerate_spectrum(spec, n or sufficient_prefix_length(bd))


def roundtrip(bd):
    return enumerate_class_members(recover_boundary_class(peel_progressions(view_of(bd))))


class TestPeel:
    def test_disk_view(self):
        dec = peel_progressions(SpectrumView(Unit.ABS, tuple(map(F, (0, 1, 1, 2, 2, 3, 3)))))
        assert (dec.zeros, dec.progressions) == (1, ((F(1), 2),))

    def test_zeros_only(self):
        dec = peel_progressions(SpectrumView(Unit.ABS, (F(0),) * 3))
        assert (dec.zeros, dec.progressions) == (3, ())

    def test_disk_plus_half_disk(self):
        dec = peel_progressions(view_of(BoundaryData((1,), (1,)), 60))
        assert (dec.zeros, dec.progressions) == (2, ((F(1), 1), (F(2), 2)))

    def test_empty(self):
        dec = peel_progressions(SpectrumView(Unit.PI, ()))
        assert dec.zeros == 0 and dec.progressions == ()

    def test_truncated_top_value(self):
        # 0,2,2,4 cuts the double value 4 in half; still one disk of difference 2
        dec = peel_progressions(SpectrumView(Unit.PI, tuple(map(F, (0, 2, 2, 4)))))
        assert dec.progressions == ((F(2), 2),)

    def test_underflow(self):
        # 2 is required twice by the progression 1*N with multiplicity 2
        with pytest.raises(PeelInconsistency):
            peel_progressions(SpectrumView(Unit.ABS, tuple(map(F, (0, 1, 1, 2, 3, 3)))))

    @given(boundary_data(max_r=4, max_s=4))
    def test_reenumerates(self, bd):
        view = view_of(bd)
        assume(len(view))
        dec = peel_progressions(view)
        assert enumerate_spectrum(dec, len(view)) == view

    @given(boundary_data(max_r=3, max_s=3), lengths)
    def test_scale_equivariant(self, bd, c):
        view = view_of(bd)
        assume(len(view))
        a = peel_progressions(view)
        b = peel_progressions(view.scaled(c))
        assert b.zeros == a.zeros
        assert b.progressions == tuple((c * d, m) for d, m in a.progressions)

    @given(boundary_data(max_r=3, max_s=3))
    def test_unit_agnostic(self, bd):
        view = view_of(bd)
        assume(len(view))
        a = peel_progressions(view)
        b = peel_progressions(SpectrumView(Unit.ABS, view.values))
        assert (a.zeros, a.progressions) == (b.zeros, b.progressions)
        assert b.unit is Unit.ABS


class TestApprox:
    def test_recovers_exact_when_clean(self):
        vals = [float(v) for v in view_of(BoundaryData((1,), (F(1, 3),)), 40).values]
        dec = peel_progressions_approx(vals, 1e-9, unit=Unit.PI)
        assert dec.progressions == ((F(2), 2), (F(3), 1))

    def test_noisy(self):
        vals = [v + 1e-7 * (-1) ** i for i, v in enumerate(
            float(x) for x in view_of(BoundaryData((F(2, 3),), ()), 30).values)]
        dec = peel_progressions_approx(vals, 1e-5, max_denominator=100)
        assert dec.zeros == 1 and dec.progressions == ((F(3), 2),)

    def test_bad_eps(self):
        with pytest.raises(DomainError):
            peel_progressions_approx([0.0], 0)


class TestRecover:
    def test_single_disk(self):
        dec = peel_progressions(view_of(BoundaryData((2,), ())))
        assert recover_boundary_class(dec) == BoundaryDataClass(1, 0, (F(2), F(2)))

    def test_interchange_example(self):
        a = recover_boundary_class(peel_progressions(view_of(BoundaryData((2,), (2, 2)))))
        b = recover_boundary_class(peel_progressions(view_of(BoundaryData((4,), (1, 1)))))
        assert a == b == BoundaryDataClass(1, 2, tuple(map(F, (2, 2, 4, 4))))

    def test_infeasible(self):
        with pytest.raises(InfeasibleCounts):
            recover_boundary_class(ArithmeticSpectrum(Unit.PI, 1, ((F(1), 3),)))

    def test_infeasible_pairs(self):
        # r = 1 but the lengths 2/1, 2/3 form no equal pair
        with pytest.raises(InfeasibleCounts):
            recover_boundary_class(ArithmeticSpectrum(Unit.PI, 1, ((F(1), 1), (F(3), 1))))

    def test_no_bd_has_z1_t3(self):
        # z = r + s and t = 2r + s; exhaustive over small r, s
        assert all((r + s, 2 * r + s) != (1, 3) for r, s in product(range(6), repeat=2))

    def test_absolute_rejected(self):
        with pytest.raises(DomainError):
            recover_boundary_class(ArithmeticSpectrum(Unit.ABS, 1, ((F(1), 2),)))


class TestEquivalence:
    def test_reflexive(self):
        bd = BoundaryData((1, 3), (F(1, 2),))
        assert data_equivalent(bd, bd)

    def test_example(self):
        assert data_equivalent(BoundaryData((2,), (2, 2)), BoundaryData((4,), (1, 1)))

    def test_counts_differ(self):
        assert not data_equivalent(BoundaryData((1,), ()), BoundaryData((), (1, 1)))

    @given(boundary_data(max_r=3, max_s=3, pool=small_pool), boundary_data(max_r=3, max_s=3, pool=small_pool))
    def test_spectral_determination(self, a, b):
        assert spectra_equal(canonical_spectrum(a), canonical_spectrum(b)) == data_equivalent(a, b)

    @given(boundary_data(pool=small_pool))
    def test_all_members_equivalent(self, bd):
        members = enumerate_class_members(boundary_class(bd))
        assert bd in members
        assert all(data_equivalent(bd, m) for m in members)
        assert all(spectra_equal(canonical_spectrum(bd), canonical_spectrum(m)) for m in members)


class TestMembers:
    def test_forced(self):
        assert enumerate_class_members(BoundaryDataClass(1, 0, (2, 2))) == [BoundaryData((2,), ())]

    def test_example_pair(self):
        got = enumerate_class_members(BoundaryDataClass(1, 2, (2, 2, 4, 4)))
        assert got == [BoundaryData((2,), (2, 2)), BoundaryData((4,), (1, 1))]

    def test_distinct_type_two(self):
        assert enumerate_class_members(BoundaryDataClass(0, 3, (2, 4, 6))) == [BoundaryData((), (1, 2, 3))]

    def test_class_validation(self):
        with pytest.raises(DomainError):
            BoundaryDataClass(1, 0, (2, 3))
        with pytest.raises(DomainError):
            BoundaryDataClass(1, 1, (2, 2))

    def test_empty_class_on_corrupt_input(self):
        cls = object.__new__(BoundaryDataClass)
        for k, v in (("r", 1), ("s", 0), ("merged_lengths", (F(1), F(2)))):
            object.__setattr__(cls, k, v)
        with pytest.raises(EmptyClass):
            enumerate_class_members(cls)

    @given(boundary_data(pool=small_pool))
    def test_sorted_and_unique(self, bd):
        members = enumerate_class_members(boundary_class(bd))
        keys = [m.sort_key() for m in members]
        assert keys == sorted(set(keys))

    @given(boundary_data(pool=small_pool))
    def test_singleton_classes(self, bd):
        singleton = (not bd.type_one or not bd.type_two
                     or len(set(bd.type_two)) == len(bd.type_two))
        if singleton:
            assert enumerate_class_members(boundary_class(bd)) == [bd]


class TestRoundTrip:
    @given(boundary_data())
    def test_random(self, bd):
        assert bd in roundtrip(bd)

    @given(boundary_data(pool=small_pool))
    def test_repeats(self, bd):
        assert bd in roundtrip(bd)

    def test_empty(self):
        assert roundtrip(BoundaryData()) == [BoundaryData()]

    @given(st.integers(0, 5), st.integers(0, 5))
    def test_prefix_bound_counts_progressions(self, r, s):
        bd = BoundaryData((F(1),) * r, (F(1, 20),) * s)
        n = sufficient_prefix_length(bd)
        if bd.r or bd.s:
            assert enumerate_spectrum(canonical_spectrum(bd), n).values[-1] >= max(
                d for d, _ in canonical_spectrum(bd).progressions)
