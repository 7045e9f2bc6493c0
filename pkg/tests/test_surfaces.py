"""Tests for surface-braid presentations, closed forms and triple linking"""

import random
from itertools import product

import pytest

from quandle_lab.algebra.group_ring import AbelianCyclicCoefficients, GroupRingElement
from quandle_lab.cohomology.builtins import BUILTIN_COCYCLES, parse_cochain, resolve_cocycle
from quandle_lab.cohomology.cochains import Cochain
from quandle_lab.cohomology.groups import cocycle_basis
from quandle_lab.exceptions import CocycleError, PresentationError
from quandle_lab.knots.braids import BraidWord
from quandle_lab.quandle.catalog import resolve_quandle
from quandle_lab.reproduction import REVERSED_TREFOIL_TABLE, TWIST_SPUN_TREFOIL_TABLE
from quandle_lab.surfaces import (
    TWIST_SPUN_TREFOIL,
    TWIST_SPUN_TREFOIL_REVERSED,
    SurfaceBraidPresentation,
    TripleLinkingData,
    admissible_pairs,
    closed_form_terms,
    colorings_of_presentation,
    resolve_preset,
    reversed_closed_form,
    solve_ab,
    surface_state_sum,
    surface_tuple_action,
    three_component_oracle,
    triple_linking_state_sum,
    twist_spun_trefoil_closed_form,
    validate_triple_linking,
)

FIGURE_EXAMPLE = {(1, 2, 3): 1, (1, 3, 2): 1, (2, 3, 1): -1, (3, 2, 1): -1}


class TestPresentations:
    def test_presets_resolve(self):
        assert resolve_preset("twist_spun_trefoil") is TWIST_SPUN_TREFOIL
        with pytest.raises(ValueError):
            resolve_preset("unknotted_torus")

    def test_json_round_trip(self):
        data = TWIST_SPUN_TREFOIL_REVERSED.to_json()
        rebuilt = SurfaceBraidPresentation.from_json(data, name=TWIST_SPUN_TREFOIL_REVERSED.name)
        assert rebuilt == TWIST_SPUN_TREFOIL_REVERSED

    @pytest.mark.parametrize(
        "relations, vertices",
        [
            ([([], 4, 1)], []),
            ([([], 1, 2)], []),
            ([], [([], 3, 1)]),
            ([([5], 1, 1)], []),
        ],
    )
    def test_out_of_range_data(self, relations, vertices):
        with pytest.raises(PresentationError):
            SurfaceBraidPresentation.build(4, relations, vertices)

    def test_malformed_document(self):
        with pytest.raises(PresentationError):
            SurfaceBraidPresentation.from_json({"degree": 4, "relations": [{"w": []}]})

    def test_action_of_inverse_word_undoes_action(self, r3):
        word = BraidWord(4, (1, -2, 3, 2))
        colors = (0, 1, 2, 1)
        acted = surface_tuple_action(word, r3, colors)
        assert surface_tuple_action(word.inverse(), r3, acted) == colors

    def test_action_on_trivial_quandle_permutes(self, t2):
        assert surface_tuple_action(BraidWord(3, (1,)), t2, (0, 1, 1)) == (1, 0, 1)

    def test_single_generator_on_r3(self, r3):
        assert surface_tuple_action(BraidWord(4, (1,)), r3, (0, 1, 2, 0)) == (2, 0, 2, 0)

    @pytest.mark.parametrize("name", ["R3", "S4"])
    def test_multi_letter_word_matches_generator_table(self, name):
        # x1 -> x2 ∗̄ x1, x2 -> x1 ∗ x3, x3 -> (x3 ∗ x1) ∗ x3, x4 -> x4
        quandle = resolve_quandle(name)
        op, inv = quandle.op, quandle.inv_op
        word = BraidWord(4, (-2, -2, 1))
        for c1, c2, c3, c4 in product(quandle.elements, repeat=4):
            expected = (inv[c2][c1], op[c1][c3], op[op[c3][c1]][c3], c4)
            assert surface_tuple_action(word, quandle, (c1, c2, c3, c4)) == expected

    def test_empty_word_is_identity(self, s4):
        for colors in product(s4.elements, repeat=4):
            assert surface_tuple_action(BraidWord(4), s4, colors) == colors


class TestTwistSpunTrefoil:
    def test_colorings(self, r3, t2):
        assert len(colorings_of_presentation(TWIST_SPUN_TREFOIL, r3)) == 9
        assert len(colorings_of_presentation(TWIST_SPUN_TREFOIL_REVERSED, r3)) == 9
        assert len(colorings_of_presentation(TWIST_SPUN_TREFOIL, t2)) == 2

    @pytest.mark.parametrize("name, expected", [("R3", 9), ("S4", 4), ("T3", 3)])
    def test_both_orientations_present_the_same_quandle(self, name, expected):
        quandle = resolve_quandle(name)
        forward = colorings_of_presentation(TWIST_SPUN_TREFOIL, quandle)
        assert colorings_of_presentation(TWIST_SPUN_TREFOIL_REVERSED, quandle) == forward
        assert len(forward) == expected
        assert all(c[2] == c[1] and c[3] == c[0] for c in forward)

    def test_state_sums_distinguish_orientations(self, r3, eta1):
        forward = surface_state_sum(TWIST_SPUN_TREFOIL, r3, eta1)
        backward = surface_state_sum(TWIST_SPUN_TREFOIL_REVERSED, r3, eta1)
        assert str(forward) == "3 + 6t"
        assert str(backward) == "3 + 6t^2"
        assert forward != backward

    def test_closed_forms_match_state_sums(self, r3, eta1):
        assert twist_spun_trefoil_closed_form(r3, eta1) == surface_state_sum(
            TWIST_SPUN_TREFOIL, r3, eta1
        )
        assert reversed_closed_form(r3, eta1) == surface_state_sum(
            TWIST_SPUN_TREFOIL_REVERSED, r3, eta1
        )

    @pytest.mark.parametrize("name", ["R3", "R4", "S4", "T3"])
    def test_closed_forms_match_state_sums_for_every_basis_cocycle(self, name):
        quandle = resolve_quandle(name)
        basis = cocycle_basis(quandle, 3)
        assert basis
        for theta in basis:
            assert twist_spun_trefoil_closed_form(quandle, theta) == surface_state_sum(
                TWIST_SPUN_TREFOIL, quandle, theta
            )
            assert reversed_closed_form(quandle, theta) == surface_state_sum(
                TWIST_SPUN_TREFOIL_REVERSED, quandle, theta
            )

    def test_every_pair_is_admissible_for_r3(self, r3):
        assert len(admissible_pairs(r3)) == 9

    def test_terms_of_one_pair(self, r3):
        integral = parse_cochain(BUILTIN_COCYCLES["eta1"].expression)
        assert closed_form_terms(r3, integral, 2, 1) == [-1, -1, 1, 0, -1, 0]

    @pytest.mark.parametrize(
        "reversed_form, table",
        [(False, TWIST_SPUN_TREFOIL_TABLE), (True, REVERSED_TREFOIL_TABLE)],
    )
    def test_rows_match_tabulated_values(self, r3, reversed_form, table):
        integral = resolve_cocycle("eta1", r3, AbelianCyclicCoefficients())
        assert sorted(table) == admissible_pairs(r3)
        for (y1, y2), row in table.items():
            assert closed_form_terms(r3, integral, y1, y2, reversed_form) == list(row)

    @pytest.mark.parametrize("reversed_form, off_diagonal", [(False, 1), (True, 2)])
    def test_per_pair_products(self, r3, eta1, reversed_form, off_diagonal):
        for y1, y2 in admissible_pairs(r3):
            total = sum(closed_form_terms(r3, eta1, y1, y2, reversed_form)) % 3
            assert total == (0 if y1 == y2 else off_diagonal)

    def test_coboundary_gives_integer(self, r3):
        # eta3 is an integral coboundary, so every coloring contributes t^0
        value = surface_state_sum(TWIST_SPUN_TREFOIL, r3, resolve_cocycle("eta3", r3))
        assert value == GroupRingElement.constant(9)

    def test_trivial_quandle_is_blind(self, t2):
        theta = parse_cochain("chi(0,1,0)")
        assert surface_state_sum(TWIST_SPUN_TREFOIL, t2, theta) == GroupRingElement.constant(2)

    @pytest.mark.parametrize("seed", range(10))
    def test_trivial_quandle_is_blind_to_every_cocycle(self, t2, seed):
        rng = random.Random(seed)
        theta = Cochain.zero(3)
        for generator in cocycle_basis(t2, 3):
            theta = theta + generator.scale(rng.randint(-5, 5))
        for preset in (TWIST_SPUN_TREFOIL, TWIST_SPUN_TREFOIL_REVERSED):
            value = surface_state_sum(preset, t2, theta)
            assert value == GroupRingElement.constant(2)

    def test_threads_agree(self, r3, eta1):
        serial = surface_state_sum(TWIST_SPUN_TREFOIL, r3, eta1, workers=1)
        assert surface_state_sum(TWIST_SPUN_TREFOIL, r3, eta1, workers=3) == serial

    def test_rejects_two_cocycles(self, s4):
        with pytest.raises(CocycleError):
            surface_state_sum(TWIST_SPUN_TREFOIL, s4, resolve_cocycle("phi_S4", s4))


class TestTripleLinking:
    def test_figure_example_solves(self):
        data = TripleLinkingData(3, FIGURE_EXAMPLE)
        assert validate_triple_linking(data)
        assert solve_ab(data) == (1, 0)

    @pytest.mark.parametrize("a, b", [(0, 0), (1, 0), (2, -3)])
    def test_from_ab_is_consistent(self, a, b):
        assert solve_ab(TripleLinkingData.from_ab(a, b)) == (a, b)

    def test_violations(self):
        assert not validate_triple_linking(TripleLinkingData(3, {(1, 2, 1): 1}))
        assert not validate_triple_linking(TripleLinkingData(3, {(1, 2, 3): 1}))
        assert solve_ab(TripleLinkingData(3, {(1, 2, 3): 1})) is None
        assert solve_ab(TripleLinkingData(2)) is None

    @pytest.mark.parametrize("key", [(1, 1, 2), (1, 2, 4), (0, 1, 2)])
    def test_bad_keys(self, key):
        with pytest.raises(ValueError):
            TripleLinkingData(3, {key: 1})

    def test_json_round_trip(self):
        data = TripleLinkingData.from_ab(1, 2)
        assert TripleLinkingData.from_json(data.to_json()) == data

    def test_oracle(self):
        assert str(three_component_oracle(1, 0)) == "23 + 2t + 2t^-1"
        assert three_component_oracle(0, 0) == GroupRingElement.constant(27)

    def test_state_sum_matches_oracle(self):
        data = TripleLinkingData(3, FIGURE_EXAMPLE)
        theta = parse_cochain("chi(0,1,2)")
        assert triple_linking_state_sum(data, 3, theta) == three_component_oracle(1, 0)

    @pytest.mark.parametrize("a, b", [(1, 1), (2, -1)])
    def test_state_sum_matches_oracle_for_any_ab(self, a, b):
        theta = parse_cochain("chi(0,1,2)")
        data = TripleLinkingData.from_ab(a, b)
        assert triple_linking_state_sum(data, 3, theta) == three_component_oracle(a, b)
