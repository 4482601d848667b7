"""Reference data documents shipped with the package (mirrored as JSON under include/fixtures)."""

# Libraries
import logging

logger = logging.getLogger(__name__)


def prime_family_document(p: int) -> dict:
    """
    r = p blocks of GL_1, a twist x of order p cycling the labels l0 → l1 → ... → l0,
    every label self-dual, τ generic, Δ′ empty and Ŵ(σ) inferred.
    """
    labels = [f"l{k}" for k in range(p)]
    return {
        "group": {"r": p, "blocks": [1] * p, "m": 2, "parity": "even"},
        "twists": {"generators": [{"name": "x", "order": p}], "eps": {"x": "x"}},
        "labels": [{"id": label, "size": 1} for label in labels],
        "actions": {"chi": {"x": {labels[k]: labels[(k + 1) % p] for k in range(p)}}, "eps": {}},
        "pi": {"components": labels, "tau": {"x_tau": ["x"], "generic": True, "mult_one": True}},
        "delta_prime": [],
        "w_sigma_hat": "infer",
        "notes": f"Prime family p = {p}: R(σ) = Z{p} ⋉ Z2^{p}.",
    }


def gl_reducible_document() -> dict:
    return {
        "group": {"r": 2, "blocks": [2, 2], "m": 1, "parity": "odd"},
        "twists": {"generators": []},
        "labels": [{"id": "a", "size": 2}, {"id": "a_eps", "size": 2}],
        "actions": {"eps": {"a": "a_eps", "a_eps": "a"}},
        "pi": {"components": ["a", "a"], "tau": {"x_tau": [], "generic": True, "mult_one": True}},
        "delta_prime": ["e1-e2"],
        "w_sigma_hat": "infer",
        "notes": "π_1 ≃ π_2 not self-dual: the Diff root kills the only candidate and R(σ) is trivial.",
    }


def siegel1_document() -> dict:
    return {
        "group": {"r": 1, "blocks": [2], "m": 0, "parity": "even"},
        "twists": {"generators": []},
        "labels": [{"id": "p", "size": 2}],
        "actions": {},
        "pi": {"components": ["p"]},
        "delta_prime": [],
        "w_sigma_hat": "infer",
        "notes": "Siegel Levi of U(4) with a self-dual block and non-vanishing Plancherel factor: R(σ) = Z2.",
    }


def sign_only_document() -> dict:
    return {
        "group": {"r": 1, "blocks": [1], "m": 2, "parity": "even"},
        "twists": {"generators": [{"name": "x", "order": 2}], "eps": {"x": "x"}},
        "labels": [{"id": "a", "size": 1}, {"id": "a_eps", "size": 1}],
        "actions": {"chi": {"x": {"a": "a_eps", "a_eps": "a"}}, "eps": {"a": "a_eps", "a_eps": "a"}},
        "pi": {"components": ["a"], "tau": {"x_tau": ["x"], "generic": True, "mult_one": False}},
        "delta_prime": [],
        "w_sigma_hat": ["1", "x"],
        "notes": "π^ε ≃ πx: the character x is realised by the sign change C1 alone.",
    }


FIXTURES = {
    "prime3": lambda: prime_family_document(3),
    "gl_reducible": gl_reducible_document,
    "siegel1": siegel1_document,
    "prime2": lambda: prime_family_document(2),
    "prime5": lambda: prime_family_document(5),
    "sign_only": sign_only_document,
}


def fixture_document(name: str) -> dict:
    try:
        return FIXTURES[name]()
    except KeyError as e:
        raise KeyError(f"Unknown fixture {name!r}; choose from {', '.join(FIXTURES)}") from e
