import pytest

from rgroup.analysis import elliptic_class as ec
from rgroup.analysis.fixed_space import CYCLIC, CYCLIC_BY_SIGNS, NONE
from rgroup.analysis.pipeline import run_pipeline
from rgroup.datum.data_loading import parse_datum
from rgroup.datum.fixtures import fixture_document
from rgroup.errors import InconsistencyError


def pipeline_for(name):
    return run_pipeline(parse_datum(fixture_document(name)))


def test_01_prime3_splits_six_and_two():
    report = pipeline_for("prime3").elliptic
    elliptic = [c for c in report.components if c.elliptic]
    non_elliptic = [c for c in report.components if not c.elliptic]
    assert len(elliptic) == 6 and all(c.irrep.dim == 1 for c in elliptic)
    assert len(non_elliptic) == 2 and all(c.multiplicity == 3 for c in non_elliptic)
    assert report.regular_case == CYCLIC_BY_SIGNS
    assert report.mixed
    assert not report.split_cocycle_assumed


def test_02_witnesses_are_regular_and_nonzero():
    result = pipeline_for("prime3")
    for component in result.elliptic.components:
        if component.elliptic:
            assert component.witness in result.regulars
            assert not component.witness_value.is_zero()
            assert result.table.value(component.irrep, component.witness) == component.witness_value
            assert component.witness not in component.zero_at
        else:
            assert component.witness is None and component.witness_value is None
            assert all(result.table.value(component.irrep, w).is_zero() for w in result.regulars)
            assert component.zero_at == tuple(result.regulars)
    assert result.elliptic.components[0].name == "π(ρ1)"


def test_03_siegel_levi_is_fully_elliptic_with_caveat():
    report = pipeline_for("siegel1").elliptic
    assert len(report.components) == 2
    assert report.all_elliptic
    assert report.unitary_caveat
    assert report.split_cocycle_assumed
    assert report.regular_case == CYCLIC_BY_SIGNS


def test_04_sign_only_is_cyclic():
    report = pipeline_for("sign_only").elliptic
    assert report.regular_case == CYCLIC
    assert report.all_elliptic
    assert not report.unitary_caveat
    assert not report.split_cocycle_assumed


def test_05_trivial_r_group_has_no_elliptic_component():
    result = pipeline_for("gl_reducible")
    assert result.elliptic.regular_case == NONE
    assert not result.elliptic.has_elliptic
    assert [c.multiplicity for c in result.elliptic.components] == [1]
    assert not ec.has_elliptic(result.analysis)


@pytest.mark.parametrize("p, order, non_elliptic", [(2, 8, 1), (3, 24, 2), (5, 160, 6)])
def test_prime_family_counts(p, order, non_elliptic):
    report = ec.prime_family_report(p)
    assert report.order == order
    assert isinstance(report, ec.EllipticReport)
    assert report.p == p
    assert report.elliptic_count == 2 * p
    assert report.non_elliptic_count == non_elliptic
    assert report.mixed
    assert report.non_elliptic_dims == (p,)


def test_prime_family_rejects_other_primes():
    with pytest.raises(ValueError, match="must be one of"):
        ec.prime_family_report(4)


def test_prime_family_mismatch_is_inconsistent(monkeypatch):
    real_classify = ec.classify

    def drop_last(analysis, table, regulars):
        report = real_classify(analysis, table, regulars)
        return ec.EllipticReport(report.components[:-1], report.regulars, report.regular_case,
                                 report.split_cocycle_assumed, report.unitary_caveat)
    monkeypatch.setattr(ec, "classify", drop_last)

    with pytest.raises(InconsistencyError) as excinfo:
        ec.prime_family_report(2)
    assert excinfo.value.lemma == "prime family count"


def test_has_elliptic(prime3_analysis, gl_reducible_analysis):
    assert ec.has_elliptic(prime3_analysis)
    assert not ec.has_elliptic(gl_reducible_analysis)
