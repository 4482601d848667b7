import pytest

from rgroup.algebra.signed_weyl import SignedPermutation, weyl_group
from rgroup.algebra.twist_labels import (
    LabelAlgebra,
    PiTuple,
    Tau,
    TwistGroup,
    stabilizer_X,
    tuples_equivalent,
    twist,
    twist_slots,
    weyl_act,
)


@pytest.fixture
def z3():
    return TwistGroup.cyclic("x", 3)


@pytest.fixture
def cycling(z3):
    algebra, violations = LabelAlgebra.build(
        z3, [("l0", 1), ("l1", 1), ("l2", 1)], {"x": {"l0": "l1", "l1": "l2", "l2": "l0"}}, {}
    )
    assert violations == []
    return algebra


def test_words_parse_and_format(z3):
    assert z3.parse_word("1") == (0,)
    assert z3.parse_word("x^2") == (2,)
    assert z3.parse_word("x^-1") == (2,)
    assert z3.parse_word("x * x") == (2,)
    assert z3.format_word((2,)) == "x^2"
    assert z3.format_word((0,)) == "1"
    with pytest.raises(ValueError, match="Unknown twist generator"):
        z3.parse_word("y")
    with pytest.raises(ValueError, match="Malformed"):
        z3.parse_word("x^")


def test_product_group_structure():
    group = TwistGroup(("x", "y"), (2, 3), ((1, 0), (0, 1)))
    assert group.order == 6
    assert group.exponent == 6
    assert group.element_order((1, 1)) == 6
    assert group.element_order((0, 2)) == 3
    assert [len(h) for h in group.subgroups()] == [1, 2, 3, 6]
    assert group.is_subgroup({(0, 0), (1, 0)})
    assert not group.is_subgroup({(0, 0), (0, 1)})


def test_eps_rules():
    assert TwistGroup(("x",), (3,), ((2,),)).violations() == []
    rules = [v.rule for v in TwistGroup(("x",), (4,), ((2,),)).violations()]
    assert rules == ["twists.eps.involution"]


def test_label_algebra_twists(cycling):
    assert cycling.twist_label("l0", (2,)) == "l2"
    assert cycling.is_self_dual("l1")
    assert cycling.size("l2") == 1


@pytest.mark.parametrize("labels, chi, eps, rule", [
    ([("a", 1), ("b", 1)], {"x": {"a": "b"}}, {}, "actions.bijection"),
    ([("a", 1), ("b", 1)], {"x": {"a": "z"}}, {}, "actions.unknown-label"),
    ([("a", 1), ("a", 1)], {}, {}, "labels.duplicate"),
    ([("a", 1)], {"y": {}}, {}, "actions.unknown-generator"),
])
def test_label_maps_must_be_permutations(labels, chi, eps, rule):
    algebra, violations = LabelAlgebra.build(TwistGroup.cyclic("x", 2), labels, chi, eps)
    assert algebra is None
    assert rule in [v.rule for v in violations]


def test_label_action_must_respect_generator_order():
    _, violations = LabelAlgebra.build(
        TwistGroup.cyclic("x", 2), [("a", 1), ("b", 1), ("c", 1)], {"x": {"a": "b", "b": "c", "c": "a"}}, {}
    )
    assert "actions.relation" in [v.rule for v in violations]


def test_label_action_must_preserve_block_size():
    _, violations = LabelAlgebra.build(TwistGroup.cyclic("x", 2), [("a", 1), ("b", 2)], {"x": {"a": "b", "b": "a"}}, {})
    assert "actions.block-size" in [v.rule for v in violations]


def test_eps_must_be_compatible_with_twists():
    # ε swaps a and b but the twist moves a to c, a self-dual label
    _, violations = LabelAlgebra.build(
        TwistGroup.cyclic("x", 2),
        [("a", 1), ("b", 1), ("c", 1), ("d", 1)],
        {"x": {"a": "c", "c": "a", "b": "d", "d": "b"}},
        {"a": "b", "b": "a"},
    )
    assert "actions.eps-compatibility" in [v.rule for v in violations]


def test_weyl_action_matches_twists(cycling):
    pi = PiTuple(("l0", "l1", "l2"), cycling, Tau(frozenset({(1,)}), generic=True), (0,))
    rotation = SignedPermutation.from_cycles(3, [(1, 2, 3)])

    assert weyl_act(pi, rotation).components == ("l1", "l2", "l0")
    assert tuples_equivalent(weyl_act(pi, rotation), twist(pi, (1,)))
    assert tuples_equivalent(weyl_act(pi, rotation.inverse()), twist(pi, (2,)))
    assert stabilizer_X(pi) == frozenset({(0,)})


def test_weyl_action_dualises_signed_slots():
    algebra, _ = LabelAlgebra.build(TwistGroup.trivial(), [("a", 1), ("ae", 1)], {}, {"a": "ae", "ae": "a"})
    pi = PiTuple(("a", "a"), algebra)
    assert weyl_act(pi, SignedPermutation.sign_change(2, [2])).components == ("a", "ae")


def test_tau_stabiliser_controls_x_pi():
    algebra, _ = LabelAlgebra.build(TwistGroup.cyclic("x", 2), [("c", 1)], {}, {})
    fixed = PiTuple(("c",), algebra, Tau(frozenset({(1,)})), (0,))
    moved = PiTuple(("c",), algebra, Tau(frozenset()), (0,))
    no_tau = PiTuple(("c",), algebra)

    assert stabilizer_X(fixed) == frozenset({(0,), (1,)})
    assert stabilizer_X(moved) == frozenset({(0,)})
    assert stabilizer_X(no_tau) == frozenset({(0,), (1,)})


@pytest.fixture
def dual_pairs():
    """Z3 with ε(x) = x^-1 on two orbits a_i, b_i with ε(a_i) = b_{-i}."""
    group = TwistGroup(("x",), (3,), ((2,),))
    labels = [(f"{kind}{i}", 1) for kind in "ab" for i in range(3)]
    chi = {"x": {f"{kind}{i}": f"{kind}{(i + 1) % 3}" for kind in "ab" for i in range(3)}}
    eps = {f"a{i}": f"b{-i % 3}" for i in range(3)} | {f"b{i}": f"a{-i % 3}" for i in range(3)}
    algebra, violations = LabelAlgebra.build(group, labels, chi, eps)
    assert violations == []
    return algebra


@pytest.mark.parametrize("components", [("a0",), ("a0", "b1"), ("a0", "b1", "a2"), ("a1", "a1", "b0")])
def test_weyl_action_is_a_right_action(dual_pairs, components):
    t = PiTuple(components, dual_pairs)
    group = weyl_group((1,) * len(components))
    for w1 in group:
        moved = weyl_act(t, w1)
        for w2 in group:
            assert weyl_act(t, w1 * w2).components == weyl_act(moved, w2).components, f"{w1}, {w2}"


@pytest.mark.parametrize("components", [("a0", "b1"), ("a0", "b1", "a2")])
def test_twisting_commutes_with_weyl_action_up_to_eps(dual_pairs, components):
    t = PiTuple(components, dual_pairs)
    group = dual_pairs.group
    for w in weyl_group((1,) * len(components)):
        for chi in group.elements:
            per_slot = [group.eps(chi) if i in w.signs else chi for i in range(1, len(components) + 1)]
            expected = twist_slots(weyl_act(t, w), per_slot)
            assert weyl_act(twist(t, chi), w).components == expected.components, f"{w}, {chi}"


def test_index_two_stabiliser_in_z4():
    z4 = TwistGroup.cyclic("x", 4)
    algebra, violations = LabelAlgebra.build(z4, [("a", 1), ("b", 1)], {"x": {"a": "b", "b": "a"}}, {})
    assert violations == []

    stabiliser = stabilizer_X(PiTuple(("a",), algebra))
    assert stabiliser == frozenset({(0,), (2,)})
    assert z4.is_subgroup(stabiliser)


def test_subgroups_of_a_rank_three_elementary_group():
    group = TwistGroup(("x", "y", "z"), (2, 2, 2), ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    subgroups = group.subgroups()
    # 1 + 7 + 7 + 1 subgroups of orders 1, 2, 4, 8
    assert [len(h) for h in subgroups] == [1] + [2] * 7 + [4] * 7 + [8]
    assert frozenset(group.elements) in subgroups
    assert all(group.is_subgroup(h) for h in subgroups)
