"""Tests for chain complexes, cohomology groups and cocycle tools"""

import random

import pytest

from quandle_lab.algebra.group_ring import AbelianCyclicCoefficients
from quandle_lab.algebra.groups import cyclic_group, symmetric_group
from quandle_lab.cohomology.builtins import (
    BUILTIN_COCYCLES,
    alexander_weight_cocycle,
    parse_cochain,
    resolve_cocycle,
)
from quandle_lab.algebra.matrix import IntegerMatrix, rank_mod_p, solve_left
from quandle_lab.cohomology.chains import (
    Theory,
    boundary_matrix,
    boundary_terms,
    chain_basis,
    is_degenerate,
)
from quandle_lab.cohomology.cochains import (
    Cochain,
    coboundary,
    format_tuple,
    is_cocycle,
    parse_tuple,
    require_cocycle,
)
from quandle_lab.cohomology.group_cocycles import (
    group_2cocycle_basis,
    is_group_2cocycle,
    quandle_cocycle_from_group_cocycle,
)
from quandle_lab.cohomology.groups import (
    cocycle_basis,
    cohomology,
    describe_summands,
    homology,
    rational_dimension,
)
from quandle_lab.cohomology.pullback import evaluation_homs, pullback_cocycle
from quandle_lab.cohomology.witness import are_cohomologous, coboundary_witness
from quandle_lab.exceptions import CocycleError, CoefficientMismatchError
from quandle_lab.quandle.catalog import resolve_quandle
from quandle_lab.quandle.constructors import conjugation_quandle
from quandle_lab.reproduction import COHOMOLOGY_ROWS, R3_COBOUNDARY_TABLE

Z = AbelianCyclicCoefficients()
Z2 = AbelianCyclicCoefficients(2)
Z3 = AbelianCyclicCoefficients(3)
Z4 = AbelianCyclicCoefficients(4)

BUILTIN_QUANDLES = ["T2", "T3", "R3", "R4", "R5", "S4"]
R4_NAMED = ["f01", "f21", "f10", "f30"]


class TestChains:
    def test_basis_sizes(self, r3):
        assert len(chain_basis(r3, 2, "R")) == 9
        assert len(chain_basis(r3, 2, "D")) == 3
        assert len(chain_basis(r3, 2, "Q")) == 6
        assert len(chain_basis(r3, 0, "Q")) == 1

    def test_boundary_of_pair(self, r3):
        # ∂(x, y) = (x) - (x∗y)
        assert sorted(boundary_terms(r3, (0, 1))) == [(-1, (2,)), (1, (0,))]

    @pytest.mark.parametrize("theory", list(Theory))
    @pytest.mark.parametrize("degree", [1, 2, 3])
    @pytest.mark.parametrize("name", BUILTIN_QUANDLES)
    def test_boundary_squares_to_zero(self, name, theory, degree):
        quandle = resolve_quandle(name)
        product = boundary_matrix(quandle, degree, theory) @ boundary_matrix(
            quandle, degree + 1, theory
        )
        assert product.is_zero()

    @pytest.mark.slow
    @pytest.mark.parametrize("theory", list(Theory))
    @pytest.mark.parametrize("name", ["T2", "T3", "R3", "R4", "S4"])
    def test_boundary_squares_to_zero_in_degree_four(self, name, theory):
        quandle = resolve_quandle(name)
        product = boundary_matrix(quandle, 4, theory) @ boundary_matrix(quandle, 5, theory)
        assert product.is_zero()

    @pytest.mark.parametrize("degree", [2, 3, 4])
    @pytest.mark.parametrize("name", ["T3", "R3", "S4"])
    def test_degenerate_chains_form_a_subcomplex(self, name, degree):
        quandle = resolve_quandle(name)
        rack = boundary_matrix(quandle, degree, "R")
        source = chain_basis(quandle, degree, "R").tuples
        target = chain_basis(quandle, degree - 1, "R").tuples
        flat_cols = [i for i, x in enumerate(source) if is_degenerate(x)]
        free_cols = [i for i, x in enumerate(source) if not is_degenerate(x)]
        flat_rows = [i for i, x in enumerate(target) if is_degenerate(x)]
        free_rows = [i for i, x in enumerate(target) if not is_degenerate(x)]
        assert rack.select(rows=free_rows, cols=flat_cols).is_zero()
        assert rack.select(rows=flat_rows, cols=flat_cols) == boundary_matrix(quandle, degree, "D")
        assert rack.select(rows=free_rows, cols=free_cols) == boundary_matrix(quandle, degree, "Q")

    def test_theory_parse(self):
        assert Theory.parse("q") is Theory.Q
        with pytest.raises(ValueError):
            Theory.parse("X")


class TestCohomologyGroups:
    @pytest.mark.parametrize("name, degree, coeff, expected", COHOMOLOGY_ROWS)
    def test_published_groups(self, name, degree, coeff, expected):
        quandle = resolve_quandle(name)
        if coeff == "Q":
            dimension = rational_dimension(quandle, degree)
            actual = "0" if dimension == 0 else " ⊕ ".join(["Q"] * dimension)
        else:
            group = cohomology(quandle, degree, "Q", AbelianCyclicCoefficients.parse(coeff))
            actual = group.describe()
        assert actual == expected

    def test_representatives_are_cocycles(self, s4):
        group = cohomology(s4, 3, "Q", AbelianCyclicCoefficients(4))
        assert len(group.representatives) == len(group.summands)
        for representative in group.representatives:
            assert is_cocycle(representative, s4)
            assert coboundary_witness(representative, s4) is None

    def test_free_rank_and_torsion(self, r4):
        group = cohomology(r4, 2)
        assert group.free_rank == 2 and group.torsion == ()

    def test_rack_theory_sees_more(self, r3):
        assert cohomology(r3, 2, "R").free_rank == 1
        assert cohomology(r3, 2, "Q").is_trivial()

    def test_restricted_variant_agrees_in_degree_two(self, s4):
        standard = cohomology(s4, 2, "Q", Z2)
        restricted = cohomology(s4, 2, "Q", Z2, "restricted")
        assert restricted.summands == standard.summands

    def test_restricted_variant_needs_quandle_theory(self, r3):
        with pytest.raises(ValueError):
            cohomology(r3, 2, "R", variant="restricted")

    def test_degree_must_be_positive(self, r3):
        with pytest.raises(ValueError):
            cohomology(r3, 0)

    def test_homology(self, r3, s4):
        assert homology(r3, 2).describe() == "0"
        assert homology(r3, 3).describe() == "Z3"
        assert homology(s4, 2).describe() == "Z2"
        assert homology(r3, 1).free_rank == 1

    def test_cocycle_basis(self, r4):
        basis = cocycle_basis(r4, 2)
        assert basis and all(is_cocycle(c, r4) for c in basis)

    @pytest.mark.parametrize("p", [2, 3])
    @pytest.mark.parametrize(
        "name, degree", [("T3", 2), ("R3", 2), ("R3", 3), ("R4", 2), ("S4", 2), ("S4", 3)]
    )
    def test_dimension_over_prime_field(self, name, degree, p):
        quandle = resolve_quandle(name)
        cocycles = len(chain_basis(quandle, degree)) - rank_mod_p(
            boundary_matrix(quandle, degree + 1), p
        )
        coboundaries = rank_mod_p(boundary_matrix(quandle, degree), p)
        group = cohomology(quandle, degree, "Q", AbelianCyclicCoefficients(p))
        assert all(d == p for d in group.summands)
        assert len(group.summands) == cocycles - coboundaries

    def test_r4_classes_span_the_named_cocycles(self, r4):
        basis = chain_basis(r4, 2)
        image = boundary_matrix(r4, 2).to_list()
        named = [resolve_cocycle(name, r4).to_vector(basis) for name in R4_NAMED]
        representatives = [c.to_vector(basis) for c in cohomology(r4, 2).representatives]
        spanned_by_named = IntegerMatrix(named + image)
        spanned_by_representatives = IntegerMatrix(representatives + image)
        for vector in representatives:
            assert solve_left(spanned_by_named, vector) is not None
        for vector in named:
            assert solve_left(spanned_by_representatives, vector) is not None

    def test_describe_summands(self):
        assert describe_summands(()) == "0"
        assert describe_summands((2, 4, 0)) == "Z2 ⊕ Z4 ⊕ Z"


class TestCochains:
    def test_tuple_keys(self):
        assert parse_tuple("(0, 1,2)") == (0, 1, 2)
        assert format_tuple((0, 1, 2)) == "(0,1,2)"
        with pytest.raises(ValueError):
            parse_tuple("0,1")

    def test_degenerate_values_rejected(self):
        with pytest.raises(CocycleError):
            Cochain.characteristic((1, 1, 0))

    def test_rack_cochain_may_be_degenerate(self):
        assert Cochain.characteristic((1, 1), quandle_flag=False).value((1, 1)) == 1

    def test_values_reduce_in_finite_coefficients(self):
        cochain = parse_cochain("2chi(0,1)+chi(0,1)", Z3)
        assert cochain.is_zero()

    @pytest.mark.parametrize("seed", range(4))
    @pytest.mark.parametrize("coefficients", [Z, Z3, Z4], ids=["Z", "Z3", "Z4"])
    @pytest.mark.parametrize("name", ["T3", "R3", "R4", "S4"])
    def test_coboundary_squares_to_zero(self, name, coefficients, seed):
        rng = random.Random(seed)
        quandle = resolve_quandle(name)
        for degree, theory in [(1, "Q"), (2, "Q"), (3, "Q"), (1, "R"), (2, "R")]:
            values = {x: rng.randint(-5, 5) for x in chain_basis(quandle, degree, theory).tuples}
            f = Cochain.from_mapping(degree, values, coefficients, quandle_flag=theory == "Q")
            assert coboundary(coboundary(f, quandle), quandle).is_zero()

    @pytest.mark.parametrize("pair, expected", R3_COBOUNDARY_TABLE)
    def test_r3_coboundary_table(self, r3, pair, expected):
        assert coboundary(Cochain.characteristic(pair), r3) == parse_cochain(expected)

    def test_mixed_degree_expression(self):
        with pytest.raises(ValueError, match="mixes"):
            parse_cochain("chi(0,1)+chi(0,1,2)")

    @pytest.mark.parametrize("text", ["", "chi(0,1) chi(1,0)", "phi(0,1)"])
    def test_unreadable_expression(self, text):
        with pytest.raises(ValueError):
            parse_cochain(text)

    def test_json_round_trip(self, eta1):
        assert Cochain.from_json(eta1.to_json()) == eta1

    def test_mismatched_coefficients(self, eta1):
        with pytest.raises(CoefficientMismatchError):
            eta1 + eta1.with_coefficients(Z)


class TestEta1:
    def test_is_cocycle_over_z3(self, r3, eta1):
        assert eta1.coefficients == Z3
        assert is_cocycle(eta1, r3)
        require_cocycle(eta1, r3, 3)

    def test_is_not_cocycle_over_z(self, r3):
        integral = resolve_cocycle("eta1", r3, Z)
        assert integral.value((0, 2, 1)) == -1
        assert not is_cocycle(integral, r3)
        with pytest.raises(CocycleError):
            require_cocycle(integral, r3, 3)

    def test_not_a_coboundary(self, r3, eta1):
        assert coboundary_witness(eta1, r3) is None

    def test_lemma_form_is_the_same_class(self, r3, eta1):
        lemma = resolve_cocycle("eta1_lemma", r3)
        assert lemma == eta1
        assert are_cohomologous(eta1, lemma, r3)

    def test_integral_generators_are_coboundaries(self, r3):
        for name in ("eta2", "eta3", "eta4", "eta5"):
            cochain = resolve_cocycle(name, r3)
            assert is_cocycle(cochain, r3)
            witness = coboundary_witness(cochain, r3)
            assert witness is not None
            assert coboundary(witness, r3) == cochain


class TestBuiltins:
    def test_every_builtin_is_a_cocycle(self):
        for entry in BUILTIN_COCYCLES.values():
            quandle = resolve_quandle(entry.quandle)
            assert is_cocycle(resolve_cocycle(entry.name, quandle), quandle), entry.name

    def test_wrong_quandle(self, r4):
        with pytest.raises(ValueError, match="lives on"):
            resolve_cocycle("eta1", r4)

    def test_unknown_name(self, r3):
        with pytest.raises(ValueError):
            resolve_cocycle("nope", r3)

    def test_expression_is_range_checked(self, r3):
        with pytest.raises(ValueError):
            resolve_cocycle("chi(0,5)", r3)

    def test_phi_s4_is_nontrivial(self, s4):
        phi = resolve_cocycle("phi_S4", s4)
        assert coboundary_witness(phi, s4) is None


class TestPullback:
    def test_evaluation_maps(self):
        homs = evaluation_homs(3, [-1, 0, 1])
        assert [h.target.name for h in homs] == ["T3", "R3"]
        assert all(len(set(h.mapping)) == 3 for h in homs)

    def test_no_map_when_n_does_not_divide(self):
        assert evaluation_homs(2, [1, 1, 1]) == []

    def test_pullback_is_cocycle(self):
        source = resolve_quandle("Alex(3;T^2-1)")
        cocycle = alexander_weight_cocycle(3, [-1, 0, 1], {(0, 1): 1, (0, 2): 2, (1, 2): 3})
        assert is_cocycle(cocycle, source)

    def test_pullback_of_eta1(self, eta1):
        hom = evaluation_homs(3, [-1, 0, 1])[1]
        assert is_cocycle(pullback_cocycle(hom, eta1), hom.source)

    def test_weight_cocycle_needs_t_to_one(self):
        with pytest.raises(ValueError):
            alexander_weight_cocycle(2, [1, 1, 1], {(0, 1): 1})


class TestGroupCocycles:
    @pytest.mark.parametrize("group", [cyclic_group(2), cyclic_group(3), symmetric_group(3)])
    def test_bridge_yields_quandle_cocycles(self, group):
        quandle = conjugation_quandle(group, 1)
        for alpha in group_2cocycle_basis(group, Z2):
            assert is_group_2cocycle(group, alpha, Z2)
            phi = quandle_cocycle_from_group_cocycle(group, alpha, Z2)
            assert is_cocycle(phi, quandle)

    def test_abelian_group_gives_zero(self):
        z3 = cyclic_group(3)
        for alpha in group_2cocycle_basis(z3):
            phi = quandle_cocycle_from_group_cocycle(z3, alpha)
            # conjugation is trivial, so φ(p, q) = α(p, q) - α(q, p)
            assert all(
                phi.value((p, q)) == alpha.get((p, q), 0) - alpha.get((q, p), 0)
                for p in range(3)
                for q in range(3)
                if p != q
            )

    def test_rejects_non_cocycle(self):
        with pytest.raises(CocycleError):
            quandle_cocycle_from_group_cocycle(cyclic_group(3), {(1, 1): 1})
