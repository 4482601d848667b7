import pytest

from rgroup.data_quality import suites
from rgroup.datum.data_loading import parse_datum
from rgroup.errors import InconsistencyError


def test_01_every_suite_passes_on_prime3(prime3):
    results = suites.datum_suites(prime3)
    assert [r.scope for r in results] == list(suites.DATUM_SCOPES)
    for result in results:
        assert result.passed, f"{result.scope} failed: {result.failures}"
        assert result.cases == 1 and result.skipped == 0


def test_02_individual_checks(prime3_analysis, sign_only_analysis, siegel1_analysis):
    for analysis in (prime3_analysis, sign_only_analysis, siegel1_analysis):
        for scope, check in suites.DATUM_CHECKS.items():
            assert check(analysis) == [], f"{scope} on {analysis.datum.notes}"


def test_03_inadmissible_datum_is_skipped(document):
    doc = document("gl_reducible")
    doc["delta_prime"] = []
    results = suites.datum_suites(parse_datum(doc))
    assert all(r.skipped == 1 and r.cases == 0 and r.passed for r in results)


def test_04_failed_cross_check_lands_in_its_suite(prime3, monkeypatch):
    def broken(d):
        raise InconsistencyError("compute_gamma_and_split", "forced", lemma="semidirect splitting")
    monkeypatch.setattr(suites, "compute_gamma_and_split", broken)

    results = {r.scope: r for r in suites.datum_suites(prime3)}
    assert results["splitting"].failures == ["compute_gamma_and_split (semidirect splitting): forced"]
    assert all(r.passed for scope, r in results.items() if scope != "splitting")


def test_05_unattributed_failure_hits_every_suite(prime3, monkeypatch):
    def broken(d):
        raise InconsistencyError("knapp_stein_check", "forced", lemma="Knapp-Stein decomposition")
    monkeypatch.setattr(suites, "compute_gamma_and_split", broken)

    assert not any(r.passed for r in suites.datum_suites(prime3))


def test_regularity_sweep_covers_w_m():
    assert suites.block_patterns(2) == [(1,), (2,), (1, 1), (2, 1)]
    result = suites.regularity_sweep(2)
    assert result.cases == 16
    assert result.passed
    assert result.counterexample is None


def test_prime_suite_skips_primes_above_r_max():
    result = suites.prime_suite(3)
    assert (result.cases, result.skipped) == (2, 2)
    assert result.passed


def test_unknown_scope_is_rejected():
    with pytest.raises(ValueError, match="unknown oracle scope"):
        suites.run_oracle("bogus", 1)


def test_run_oracle_all_at_rank_one():
    results = suites.run_oracle("all", 1)
    assert [r.scope for r in results] == list(suites.DATUM_SCOPES) + ["prime"]
    assert all(r.passed for r in results)
    assert results[0].cases > 0
    assert results[-1].skipped == len(suites.PRIME_FAMILY)


def test_run_oracle_reports_first_counterexample(monkeypatch):
    monkeypatch.setitem(suites.DATUM_CHECKS, "splitting", lambda analysis: ["boom"])
    [result] = suites.run_oracle("splitting", 1)
    assert not result.passed
    assert set(result.failures) == {"boom"}
    assert result.counterexample["group"]["r"] == 1

    summary = result.to_dict()
    assert summary["passed"] is False
    assert summary["cases"] == len(result.failures)


def test_invalid_document_counts_as_skipped(document):
    doc = document("prime3")
    doc["delta_prime"] = ["e1-e2"]
    assert suites._check_document(doc, ("quotient",)) == {"quotient": ("skipped", [])}


@pytest.mark.parametrize("alias, scope", [
    ("lemma33", "uniqueness"),
    ("lemma36", "minimality"),
    ("thm37", "splitting"),
    ("thm39", "regularity"),
    ("prop32", "quotient"),
    ("mackey", "mackey"),
])
def test_resolve_scope_accepts_short_names(alias, scope):
    assert suites.resolve_scope(alias) == scope


def test_alias_runs_the_same_suite():
    [by_alias] = suites.run_oracle("thm37", 1)
    [by_name] = suites.run_oracle("splitting", 1)
    assert by_alias.scope == "splitting"
    assert by_alias.to_dict() == by_name.to_dict()
