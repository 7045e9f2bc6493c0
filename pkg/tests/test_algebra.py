"""Tests for integer matrices, group rings and finite groups"""

import random

import pytest

from quandle_lab.algebra.group_ring import AbelianCyclicCoefficients, GroupRingElement
from quandle_lab.algebra.groups import (
    cyclic_group,
    direct_product,
    group_from_table,
    symmetric_group,
    verify_group,
)
from quandle_lab.algebra.matrix import (
    IntegerMatrix,
    extended_gcd,
    howell_form,
    left_kernel,
    rank_mod_p,
    smith_normal_form,
    solve_left,
)
from quandle_lab.exceptions import CoefficientMismatchError


def _random_matrix(rng: random.Random, rows: int, cols: int) -> IntegerMatrix:
    return IntegerMatrix([[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)])


class TestSmithNormalForm:
    def test_diagonal_with_divisibility(self):
        form = smith_normal_form(IntegerMatrix([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]))
        assert form.invariant_factors == (2, 6, 12)

    @pytest.mark.parametrize("seed", range(8))
    def test_factorization_is_exact(self, seed):
        rng = random.Random(seed)
        m = _random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        form = smith_normal_form(m)
        assert form.u @ m @ form.v == form.d
        assert form.d.is_diagonal()
        assert form.u.is_unimodular() and form.v.is_unimodular()
        assert form.u @ form.u_inv == IntegerMatrix.identity(m.rows)
        assert form.v @ form.v_inv == IntegerMatrix.identity(m.cols)
        factors = [d for d in form.invariant_factors if d]
        assert all(b % a == 0 for a, b in zip(factors, factors[1:]))
        assert all(d >= 0 for d in form.invariant_factors)

    def test_zero_and_empty_matrices(self):
        assert smith_normal_form(IntegerMatrix.zeros(2, 3)).rank == 0
        assert smith_normal_form(IntegerMatrix.zeros(0, 3)).rank == 0

    def test_is_deterministic(self):
        m = IntegerMatrix([[3, 1], [1, 3]])
        assert smith_normal_form(m) == smith_normal_form(m)


class TestKernelsAndSolving:
    def test_integer_left_kernel(self):
        m = IntegerMatrix([[1, 2], [2, 4], [0, 1]])
        kernel = left_kernel(m)
        assert kernel.rows == 1
        assert (kernel @ m).is_zero()

    def test_modular_left_kernel_sees_torsion(self):
        m = IntegerMatrix([[2], [0]])
        kernel = left_kernel(m, 4)
        assert (kernel @ m).reduce(4).is_zero()
        # x = (2, 0) kills 2 mod 4, so the kernel is bigger than over Z
        assert kernel.rows == 2

    def test_howell_rows_span_module(self):
        howell = howell_form(IntegerMatrix([[2, 4], [0, 2]]), 4)
        assert howell.rows >= 2
        assert all(0 <= x < 4 for row in howell.to_list() for x in row)

    def test_howell_needs_modulus(self):
        with pytest.raises(ValueError):
            howell_form(IntegerMatrix([[1]]), 1)

    def test_solve_left_over_z(self):
        m = IntegerMatrix([[2, 0], [0, 3]])
        assert solve_left(m, [4, 9]) == [2, 3]
        assert solve_left(m, [1, 0]) is None

    def test_solve_left_modular(self):
        m = IntegerMatrix([[2, 0], [0, 3]])
        solution = solve_left(m, [1, 0], modulus=5)
        assert solution is not None
        assert [(solution[0] * 2) % 5, (solution[1] * 3) % 5] == [1, 0]
        assert solve_left(IntegerMatrix([[2]]), [1], modulus=4) is None

    def test_rank_mod_p(self):
        assert rank_mod_p(IntegerMatrix([[1, 1], [1, -1]]), 2) == 1
        assert rank_mod_p(IntegerMatrix([[1, 1], [1, -1]]), 3) == 2

    @pytest.mark.parametrize("p", [2, 3, 5])
    @pytest.mark.parametrize("seed", range(6))
    def test_rank_mod_p_counts_units_of_the_smith_form(self, seed, p):
        rng = random.Random(seed)
        m = _random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
        expected = sum(1 for d in smith_normal_form(m).invariant_factors if d % p)
        assert rank_mod_p(m, p) == expected
        assert rank_mod_p(m, p) <= smith_normal_form(m).rank


def test_extended_gcd():
    g, s, t = extended_gcd(12, -18)
    assert g == 6 and s * 12 + t * -18 == 6


def test_ragged_rows_rejected():
    with pytest.raises(ValueError):
        IntegerMatrix([[1, 2], [3]])


class TestGroupRing:
    def test_canonical_rendering(self):
        assert str(GroupRingElement(None, ((1, 6), (0, 3)))) == "3 + 6t"
        assert str(GroupRingElement(None, ((2, 6), (0, 3)))) == "3 + 6t^2"
        assert str(GroupRingElement.zero()) == "0"

    def test_finite_exponents_reduce(self):
        element = GroupRingElement(3, ((4, 1), (1, 2)))
        assert element.as_dict() == {1: 3}

    def test_arithmetic(self):
        a = GroupRingElement(None, ((0, 1), (1, 1)))
        assert (a * a).as_dict() == {0: 1, 1: 2, 2: 1}
        assert (a - a).terms == ()
        assert (a * 3).total() == 6

    def test_trivial_means_integer(self):
        assert GroupRingElement.constant(9).is_trivial()
        assert not GroupRingElement.monomial(1).is_trivial()

    def test_mismatched_exponent_groups(self):
        with pytest.raises(CoefficientMismatchError):
            GroupRingElement.constant(1, 2) + GroupRingElement.constant(1)

    def test_json_round_trip(self):
        element = GroupRingElement(3, ((0, 4), (2, 12)))
        assert GroupRingElement.from_json(element.to_json()) == element

    @pytest.mark.parametrize("label, modulus", [("Z", None), ("Z3", 3), ("Z_4", 4)])
    def test_coefficient_labels(self, label, modulus):
        assert AbelianCyclicCoefficients.parse(label).modulus == modulus

    def test_bad_coefficient_label(self):
        with pytest.raises(ValueError):
            AbelianCyclicCoefficients.parse("Q3")


class TestFiniteGroups:
    def test_symmetric_group(self):
        s3 = symmetric_group(3)
        assert s3.order == 6
        assert verify_group(s3)
        assert not s3.is_abelian()

    def test_cyclic_and_product(self):
        z2z3 = direct_product(cyclic_group(2), cyclic_group(3))
        assert z2z3.order == 6 and z2z3.is_abelian()
        assert verify_group(z2z3)

    def test_power_and_inverse(self):
        z5 = cyclic_group(5)
        assert z5.power(2, 3) == 1
        assert z5.power(2, -1) == z5.inv(2) == 3

    def test_non_associative_loop_is_rejected(self):
        # a loop with identity and inverses that is not associative
        loop = group_from_table(
            [
                [0, 1, 2, 3, 4],
                [1, 0, 3, 4, 2],
                [2, 4, 0, 1, 3],
                [3, 2, 4, 0, 1],
                [4, 3, 1, 2, 0],
            ]
        )
        assert not verify_group(loop)

    def test_table_without_identity(self):
        with pytest.raises(ValueError):
            group_from_table([[1, 0], [1, 0]])
