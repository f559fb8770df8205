import itertools
import math
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_min_l1
from steklov_orb.bounds import (
    BoundRegimeInput,
    CellComplex,
    ConformalFlag,
    LensParams,
    Regime,
    bound_regime,
    cone_complex,
    disk_complex,
    doubled_half_disk_complex,
    euler_characteristic,
    half_disk_complex,
    integer_root,
    isoperimetric_quotient,
    isoperimetric_ratio,
    l1_shell,
    sharpness_params,
    sharpness_table,
    shortest_l1_vector,
    sigma2_lens,
    trivial_cover,
    verify_sharpness_family,
)
from steklov_orb.errors import DomainError

lens_params = st.integers(1, 3).flatmap(
    lambda m: st.integers(1, 40).flatmap(
        lambda q: st.builds(LensParams, st.just(q),
                            st.tuples(*[st.integers(-q, 2 * q)] * m))))


class TestShells:
    @pytest.mark.parametrize("m, t", [(1, 0), (1, 3), (2, 2), (3, 3), (4, 2)])
    def test_shell_complete(self, m, t):
        shell = list(l1_shell(m, t))
        assert len(shell) == len(set(shell))
        assert all(sum(map(abs, a)) == t for a in shell)
        box = [a for a in itertools.product(range(-t, t + 1), repeat=m)
               if sum(map(abs, a)) == t]
        assert sorted(shell) == sorted(box)


class TestSigma2:
    def test_trivial(self):
        assert sigma2_lens(LensParams(1, (0,))) == 1
        assert LensParams(1, (3, 4)).is_trivial

    def test_family_example(self):
        assert sigma2_lens(LensParams(9, (1, 3))) == 3

    def test_q5_p12(self):
        sv = shortest_l1_vector(LensParams(5, (1, 2)))
        assert sv.norm == 3 == brute_min_l1(5, (1, 2))

    @pytest.mark.parametrize("q, p", [(7, (1, 2)), (11, (1, 3, 5)), (12, (5, 7)), (13, (1,))])
    def test_against_brute_force(self, q, p):
        assert sigma2_lens(LensParams(q, p)) == brute_min_l1(q, p)

    @given(lens_params)
    def test_witness(self, params):
        sv = shortest_l1_vector(params)
        assert 1 <= sv.norm <= params.q
        assert any(sv.witness) and sum(map(abs, sv.witness)) == sv.norm
        assert params.in_lattice(sv.witness)

    @given(lens_params, st.data())
    def test_no_shorter_vector(self, params, data):
        t = sigma2_lens(params)
        if t == 1:
            return
        for _ in range(20):
            a = data.draw(st.lists(st.integers(-t, t), min_size=params.m, max_size=params.m))
            if any(a) and sum(map(abs, a)) < t:
                assert not params.in_lattice(a)

    @given(st.integers(1, 12).flatmap(
        lambda q: st.tuples(st.just(q), st.tuples(st.integers(0, q), st.integers(0, q)))))
    def test_brute_force_small(self, qp):
        q, p = qp
        assert sigma2_lens(LensParams(q, p)) == brute_min_l1(q, p)

    def test_bad_params(self):
        with pytest.raises(DomainError):
            LensParams(0, (1,))
        with pytest.raises(DomainError):
            LensParams(3, ())


class TestSharpness:
    @pytest.mark.parametrize("m", [2, 3])
    @pytest.mark.parametrize("j", range(2, 7))
    def test_family(self, j, m):
        assert verify_sharpness_family(j, m)

    def test_examples(self):
        assert sharpness_params(2, 2) == LensParams(4, (1, 2))
        assert sharpness_params(2, 3) == LensParams(8, (1, 2, 4))
        assert sigma2_lens(sharpness_params(1, 2)) == 1

    def test_table(self):
        rows = sharpness_table(2, 4)
        assert [r["sigma2"] for r in rows] == [1, 2, 3, 4]
        assert all(r["sharp"] for r in rows)

    def test_large_m(self):
        assert verify_sharpness_family(3, 4)

    def test_bad(self):
        with pytest.raises(DomainError):
            verify_sharpness_family(0, 2)


class TestIsoperimetric:
    def test_q1(self):
        iq = isoperimetric_quotient(F(7, 3), 1, 3)
        assert iq.exact == F(7, 3)

    def test_perfect_power(self):
        assert isoperimetric_quotient(5, 16, 4).exact == F(5, 2)

    def test_irrational(self):
        iq = isoperimetric_quotient(1, 3, 2)
        assert iq.exact is None
        assert math.isclose(iq.value, 3 ** -0.5)

    def test_cone_of_unit_disk(self):
        full = isoperimetric_ratio(2 * math.pi, math.pi, 2)
        cone = isoperimetric_ratio(2 * math.pi / 3, math.pi / 3, 2)
        assert math.isclose(cone, 3 ** -0.5 * full)

    @given(st.integers(1, 50), st.integers(2, 6))
    def test_law(self, q, n):
        vol, bdry = 1.7, 4.1
        assert math.isclose(isoperimetric_ratio(bdry / q, vol / q, n),
                            isoperimetric_quotient(1, q, n).value * isoperimetric_ratio(bdry, vol, n))

    @given(st.integers(0, 60), st.integers(1, 6))
    def test_integer_root(self, r, n):
        assert integer_root(r ** n, n) == r
        if r > 1 and n > 1:
            assert integer_root(r ** n + 1, n) is None

    def test_bad(self):
        with pytest.raises(DomainError):
            isoperimetric_quotient(0, 2, 2)
        with pytest.raises(DomainError):
            isoperimetric_quotient(1, 2, 1)


class TestEuler:
    def test_disk(self):
        assert euler_characteristic(disk_complex()) == 1

    @pytest.mark.parametrize("k", [1, 2, 3, 5, 7])
    def test_cone(self, k):
        assert euler_characteristic(cone_complex(k)) == F(1, k)

    def test_half_disk_and_double(self):
        assert euler_characteristic(half_disk_complex()) == F(1, 2)
        assert euler_characteristic(doubled_half_disk_complex()) == 2 * euler_characteristic(half_disk_complex())

    @pytest.mark.parametrize("k", [2, 3, 5])
    def test_cone_double_cover(self, k):
        # the order-k cone is a 2-sheeted orbifold cover of the order-2k cone
        assert euler_characteristic(cone_complex(k)) == 2 * euler_characteristic(cone_complex(2 * k))

    @given(st.integers(1, 6))
    def test_disk_covers_cone(self, k):
        assert euler_characteristic(disk_complex()) == k * euler_characteristic(cone_complex(k))

    cells = st.lists(st.tuples(st.integers(0, 2), st.integers(1, 12)), max_size=10).map(
        lambda c: CellComplex(tuple(c)))

    @given(cells, cells)
    def test_additive(self, a, b):
        assert euler_characteristic(a + b) == euler_characteristic(a) + euler_characteristic(b)

    @given(cells, st.integers(1, 5))
    def test_trivial_cover(self, a, k):
        assert euler_characteristic(trivial_cover(a, k)) == k * euler_characteristic(a)

    def test_bad_cells(self):
        with pytest.raises(DomainError):
            CellComplex(((3, 1),))
        with pytest.raises(DomainError):
            CellComplex(((0, 0),))


class TestRegime:
    def test_disk(self):
        for k in (1, 2, 5):
            rep = bound_regime(BoundRegimeInput(1, 1, 0), k, 1, 10)
            assert rep.regime is Regime.NONNEGATIVE_EXCESS and rep.rhs == 10 * k

    def test_negative(self):
        rep = bound_regime(BoundRegimeInput(-3, 1, 0), 1, 1, 1)
        assert rep.regime is Regime.NEGATIVE_EXCESS and rep.excess == -2 and rep.rhs == 3

    @given(st.integers(1, 50))
    def test_cone_nonnegative(self, k0):
        rep = bound_regime(BoundRegimeInput(F(1, k0), 1, 0), 3, 2, 2)
        assert rep.regime is Regime.NONNEGATIVE_EXCESS

    def test_conformal_flag(self):
        rep = bound_regime(BoundRegimeInput(1, 1, 0), 1, 1, 1, ConformalFlag.ZERO)
        assert rep.conformal is ConformalFlag.ZERO

    def test_bad(self):
        with pytest.raises(DomainError):
            bound_regime(BoundRegimeInput(0, 0, 0), 1, 0, 1)
        with pytest.raises(DomainError):
            bound_regime(BoundRegimeInput(0, 0, 0), 0, 1, 1)
        with pytest.raises(DomainError):
            BoundRegimeInput(0, -1, 0)

    rationals = st.builds(F, st.integers(-40, 40), st.integers(1, 12))
    positive = st.builds(F, st.integers(1, 40), st.integers(1, 12))
    inputs = st.builds(BoundRegimeInput, rationals, st.integers(0, 6), st.integers(0, 6))

    @given(inputs, st.integers(1, 20), positive, positive)
    def test_monotone_in_k(self, inp, k, A, B):
        assert bound_regime(inp, k + 1, A, B).rhs > bound_regime(inp, k, A, B).rhs

    @given(inputs, rationals, st.integers(1, 20), positive, positive)
    def test_monotone_in_minus_excess(self, inp, delta, k, A, B):
        other = BoundRegimeInput(inp.chi - abs(delta), inp.r, inp.s)
        assert bound_regime(other, k, A, B).rhs >= bound_regime(inp, k, A, B).rhs

    @given(inputs, st.integers(1, 20), positive, positive, positive)
    def test_linear_in_constants(self, inp, k, A, B, c):
        assert bound_regime(inp, k, c * A, c * B).rhs == c * bound_regime(inp, k, A, B).rhs
        a = bound_regime(inp, k, A, B)
        assert a.rhs == (max(-inp.excess, 0) * A + k * B)
