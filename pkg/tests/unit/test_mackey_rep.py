import itertools

import pytest

from rgroup.algebra.signed_weyl import SignedPermutation
from rgroup.analysis.mackey_rep import (
    SemidirectPresentation,
    abelian_characters,
    character_table,
    conjugacy_classes,
    enumerate_irreps,
    induced_character,
    induced_matrices,
    trace,
)
from rgroup.analysis.rgroup_core import compute_gamma_and_split
from rgroup.data_quality.suites import check_mackey
from rgroup.datum.data_loading import parse_datum
from rgroup.datum.fixtures import fixture_document
from rgroup.errors import UnsupportedStructureError


@pytest.fixture(scope="module")
def prime3_table(prime3_analysis):
    return character_table(SemidirectPresentation.from_analysis(prime3_analysis))


def test_presentation_reproduces_r_sigma(prime3_analysis):
    pres = SemidirectPresentation.from_analysis(prime3_analysis)
    assert set(pres.elements) == set(prime3_analysis.r_sigma)
    assert pres.order == 24
    assert pres.field_order == 6
    assert len(pres.normal) == 8
    rotation = SignedPermutation.parse("(1 2 3)·C{2}", 3)
    a, signs = pres.split(rotation)
    assert str(a) == "(1 2 3)"
    assert a.compose(SignedPermutation.sign_change(3, signs)) == rotation


def test_rotation_permutes_kappa(prime3_analysis):
    pres = SemidirectPresentation.from_analysis(prime3_analysis)
    rotation = SignedPermutation.from_cycles(3, [(1, 2, 3)])
    assert pres.conjugate_index(rotation, 2) == 1
    assert pres.act(rotation, (1, -1, 1)) == (1, 1, -1)


def test_prime3_irreps(prime3_analysis):
    irreps = enumerate_irreps(SemidirectPresentation.from_analysis(prime3_analysis))
    assert [irrep.dim for irrep in irreps] == [1, 1, 1, 3, 3, 1, 1, 1]
    assert irreps[0].name == "ρ1"
    assert irreps[0].kappa_text == "+++"
    assert irreps[0].lam_exponent(SignedPermutation.identity(3)) == 0
    assert sum(irrep.dim ** 2 for irrep in irreps) == 24


def test_prime3_character_table(prime3_table):
    assert len(prime3_table.classes) == 8
    assert all(value == 1 for value in prime3_table.values[0])
    identity = SignedPermutation.identity(3)
    rotation = SignedPermutation.from_cycles(3, [(1, 2, 3)])
    for irrep in prime3_table.irreps:
        assert prime3_table.value(irrep, identity) == irrep.dim
        if irrep.dim == 3:
            assert prime3_table.value(irrep, rotation) == 0
    with pytest.raises(KeyError):
        prime3_table.value(prime3_table.irreps[0], SignedPermutation.from_cycles(3, [(1, 2)]))


def test_conjugacy_classes_partition_the_group(prime3_analysis):
    classes = conjugacy_classes(prime3_analysis.r_sigma)
    assert sum(len(c) for c in classes) == 24
    assert classes[0] == (SignedPermutation.identity(3),)


def test_abelian_characters_of_gamma(prime3_analysis):
    characters = abelian_characters(prime3_analysis.gamma, 6)
    rotation = SignedPermutation.from_cycles(3, [(1, 2, 3)])
    assert sorted(c[rotation] for c in characters) == [0, 2, 4]


def test_prime2_matrices_match_characters():
    analysis = compute_gamma_and_split(parse_datum(fixture_document("prime2")))
    pres = SemidirectPresentation.from_analysis(analysis)
    irreps = enumerate_irreps(pres)
    assert pres.order == 8
    assert sorted(irrep.dim for irrep in irreps) == [1, 1, 1, 1, 2]
    for irrep in irreps:
        matrices = induced_matrices(pres, irrep)
        for g in pres.elements:
            assert trace(matrices[g]) == induced_character(pres, irrep, g)
    assert check_mackey(analysis) == []


def test_sign_only_has_two_characters(sign_only_analysis):
    pres = SemidirectPresentation.from_analysis(sign_only_analysis)
    assert pres.normal_indices == ()
    table = character_table(pres)
    assert [irrep.kappa_text for irrep in table.irreps] == ["·", "·"]
    sign = SignedPermutation.sign_change(1, [1])
    assert sorted(table.value(irrep, sign).rational() for irrep in table.irreps) == [-1, 1]


def test_non_abelian_complement_is_unsupported():
    s3 = tuple(sorted(SignedPermutation(perm) for perm in itertools.permutations((1, 2, 3))))
    with pytest.raises(UnsupportedStructureError, match="not abelian"):
        enumerate_irreps(SemidirectPresentation(3, s3, (1, 2, 3)))


def test_complement_must_normalise_the_sign_subgroup():
    swap = SignedPermutation.from_cycles(2, [(1, 2)])
    pres = SemidirectPresentation(2, (SignedPermutation.identity(2), swap), (1,))
    with pytest.raises(UnsupportedStructureError) as excinfo:
        enumerate_irreps(pres)
    assert excinfo.value.lemma == "B(π) stability"
    assert excinfo.value.exit_code == 3
