import copy

import pytest

from rgroup.analysis.rgroup_core import compute_gamma_and_split
from rgroup.datum.data_loading import parse_datum
from rgroup.datum.fixtures import fixture_document


@pytest.fixture
def document():
    """Fresh, mutable copy of a shipped fixture document."""
    def _document(name):
        return copy.deepcopy(fixture_document(name))
    return _document


@pytest.fixture(scope="session")
def prime3():
    return parse_datum(fixture_document("prime3"))


@pytest.fixture(scope="session")
def prime3_analysis(prime3):
    return compute_gamma_and_split(prime3)


@pytest.fixture(scope="session")
def siegel1_analysis():
    return compute_gamma_and_split(parse_datum(fixture_document("siegel1")))


@pytest.fixture(scope="session")
def sign_only_analysis():
    return compute_gamma_and_split(parse_datum(fixture_document("sign_only")))


@pytest.fixture(scope="session")
def gl_reducible_analysis():
    return compute_gamma_and_split(parse_datum(fixture_document("gl_reducible")))


@pytest.fixture
def z2_document():
    return _z2_document


def _z2_document(components, labels, chi, eps, delta_prime, w_sigma_hat="infer", tau=None):
    """A rank-len(components) datum over X̂ = Z2 with GL_1 blocks and m = 2."""
    r = len(components)
    return {
        "group": {"r": r, "blocks": [1] * r, "m": 2},
        "twists": {"generators": [{"name": "x", "order": 2}], "eps": {"x": "x"}},
        "labels": [{"id": label, "size": 1} for label in labels],
        "actions": {"chi": {"x": chi}, "eps": eps},
        "pi": {"components": components, "tau": tau or {"x_tau": ["x"], "generic": True, "mult_one": True}},
        "delta_prime": delta_prime,
        "w_sigma_hat": w_sigma_hat,
    }
