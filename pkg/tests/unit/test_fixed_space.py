from types import SimpleNamespace

import pytest
from hypothesis import given, strategies as st

from rgroup.algebra.signed_weyl import SignedPermutation, weyl_group
from rgroup.analysis.fixed_space import (
    CYCLIC,
    CYCLIC_BY_SIGNS,
    NONE,
    CoordinateModel,
    action_matrix,
    closed_form_regular,
    coordinate_model,
    fixed_space_basis,
    fixed_space_dim,
    fixed_vector,
    is_regular,
    regular_case,
    regular_set,
    unitary_caveat,
)
from rgroup.errors import InconsistencyError

THREE_LINES = CoordinateModel((1, 1, 1), 2)


def test_identity_fixes_everything_but_the_trace():
    assert fixed_space_dim(THREE_LINES, SignedPermutation.identity(3)) == 5
    assert len(fixed_space_basis(THREE_LINES, SignedPermutation.identity(3))) == 5


def test_odd_signed_rotation_is_regular():
    w = SignedPermutation.parse("(1 2 3)·C{1}", 3)
    assert is_regular(THREE_LINES, w)
    assert closed_form_regular(w)
    assert fixed_vector(THREE_LINES, w) is None


def test_even_signed_rotation_fixes_alternating_x():
    w = SignedPermutation.parse("(1 2 3)·C{1,2}", 3)
    vector = fixed_vector(THREE_LINES, w)
    assert list(vector) == [1, 0, -1, 0, 1, 0]
    assert fixed_space_dim(THREE_LINES, w) == 1


def test_two_orbits_balance_the_trace():
    w = SignedPermutation.parse("(1 2)·C{1}", 3)
    vector = fixed_vector(THREE_LINES, w)
    assert [vector[2 * i + 1] for i in range(3)] == [1, 1, -2]
    assert [vector[2 * i] for i in range(3)] == [0, 0, 0]


def test_trace_condition_weights_by_block_size():
    model = CoordinateModel((2, 1), 1)
    vector = fixed_vector(model, SignedPermutation.sign_change(2, [1, 2]))
    # y_1 = n_2 and y_2 = -n_1, so 2·1 + 1·(-2) = 0
    assert [vector[1], vector[3]] == [1, -2]


def test_action_matrix_moves_slots():
    w = SignedPermutation.parse("(1 2)·C{1}", 2)
    matrix = action_matrix(CoordinateModel((1, 1)), w)
    assert matrix[2, 0] == -1
    assert matrix[3, 1] == 1
    assert matrix[0, 2] == 1


@given(st.sampled_from(weyl_group((1, 1, 1))))
def test_rank_agrees_with_cycle_type(w):
    assert is_regular(THREE_LINES, w) == closed_form_regular(w)
    if not closed_form_regular(w):
        vector = fixed_vector(THREE_LINES, w)
        assert not vector.is_zero_matrix


@given(st.sampled_from(weyl_group((2, 1, 1))))
def test_rank_agrees_with_cycle_type_for_mixed_blocks(w):
    assert is_regular(CoordinateModel((2, 1, 1), 1), w) == closed_form_regular(w)


def test_regular_sets_of_fixtures(prime3_analysis, siegel1_analysis, sign_only_analysis, gl_reducible_analysis):
    cases = [
        (prime3_analysis, 8, CYCLIC_BY_SIGNS),
        (siegel1_analysis, 1, CYCLIC_BY_SIGNS),
        (sign_only_analysis, 1, CYCLIC),
        (gl_reducible_analysis, 0, NONE),
    ]
    for analysis, count, case in cases:
        regulars = regular_set(coordinate_model(analysis.datum), analysis.r_sigma)
        assert len(regulars) == count, f"{analysis.datum.notes}: {len(regulars)} regular elements"
        assert regular_case(analysis, regulars) == case


def test_prime3_regulars_are_odd_rotations(prime3_analysis):
    regulars = regular_set(coordinate_model(prime3_analysis.datum), prime3_analysis.r_sigma)
    assert all(w.is_r_cycle and len(w.signs) in (1, 3) for w in regulars)
    assert regulars == sorted(regulars)


def test_regular_case_rejects_a_proper_sign_subgroup():
    analysis = SimpleNamespace(
        r_pi=frozenset({SignedPermutation.identity(2), SignedPermutation.sign_change(2, [1])}),
        b_pi=(1,),
        datum=SimpleNamespace(r=2),
    )
    with pytest.raises(InconsistencyError, match="B\\(π\\) stability"):
        regular_case(analysis, [SignedPermutation.parse("(1 2)·C{1}", 2)])


def test_unitary_caveat_only_for_siegel_type(siegel1_analysis, sign_only_analysis, prime3_analysis):
    assert unitary_caveat(siegel1_analysis.datum, siegel1_analysis)
    assert not unitary_caveat(sign_only_analysis.datum, sign_only_analysis)
    assert not unitary_caveat(prime3_analysis.datum, prime3_analysis)


@pytest.mark.parametrize("model", [
    CoordinateModel((1, 1), 0),
    CoordinateModel((1, 1, 1), 0),
    CoordinateModel((2, 1, 1), 1),
])
def test_fixed_dimension_is_a_class_function(model):
    group = weyl_group(model.blocks)
    dims = {w: fixed_space_dim(model, w) for w in group}
    for w in group:
        for u in group:
            conjugate = u.conjugate(w)
            assert dims[conjugate] == dims[w], f"{w} and {conjugate}"
