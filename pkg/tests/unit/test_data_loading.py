import json
import builtins
import pytest
from pathlib import Path

import rgroup.datum.data_loading as dl
from rgroup.algebra.signed_weyl import Root
from rgroup.datum.fixtures import fixture_document
from rgroup.errors import SchemaError, ValidationError


class DummyFile:
    def __enter__(self): return self
    def __exit__(self, exc_type, exc, tb): return False


def test_load_document_file_not_found_raises(monkeypatch):
    monkeypatch.setattr(Path, "is_file", lambda self: False)
    with pytest.raises(SchemaError, match="not found"):
        dl.load_document("missing.json")


def test_load_document_invalid_json_raises(monkeypatch):
    monkeypatch.setattr(Path, "is_file", lambda self: True)

    def fake_json_load(_file_obj):
        raise json.JSONDecodeError("Expecting value", doc="", pos=0)
    monkeypatch.setattr(dl.json, "load", fake_json_load)
    monkeypatch.setattr(builtins, "open", lambda *args, **kwargs: DummyFile())

    with pytest.raises(SchemaError) as excinfo:
        dl.load_document("broken.json")
    assert excinfo.value.details == ["line 1, column 1: Expecting value"]
    assert excinfo.value.exit_code == 1


def test_load_document_unreadable_file_raises(monkeypatch):
    monkeypatch.setattr(Path, "is_file", lambda self: True)

    def refuse(*args, **kwargs):
        raise PermissionError("denied")
    monkeypatch.setattr(builtins, "open", refuse)

    with pytest.raises(SchemaError, match="Cannot read"):
        dl.load_document("locked.json")


def test_load_document_success_returns_data(tmp_path):
    path = tmp_path / "prime3.json"
    expected = fixture_document("prime3")
    path.write_text(dl.dump_document(expected), encoding="utf-8")

    out = dl.load_document(path)
    assert out == expected, f"Loaded document does not match expected. \nLoaded: {out} \nExpected: {expected}"


def test_schema_errors_are_collected(document):
    doc = document("prime3")
    del doc["pi"]
    doc["group"]["r"] = 0

    with pytest.raises(SchemaError) as excinfo:
        dl.parse_datum(doc)
    assert "<root>: 'pi' is a required property" in excinfo.value.details
    assert any(d.startswith("group/r:") for d in excinfo.value.details)


def test_schema_rejects_bad_w_sigma_hat(document):
    doc = document("prime3")
    doc["w_sigma_hat"] = "all"
    with pytest.raises(SchemaError):
        dl.parse_datum(doc)


def test_parse_prime3(prime3):
    assert prime3.r == 3
    assert prime3.n == 8
    assert prime3.parity == "even"
    assert prime3.group.order == 3
    assert prime3.delta_prime == frozenset()
    assert prime3.w_sigma_hat == frozenset({(0,), (1,), (2,)})
    assert prime3.w_sigma_hat_mode == "infer"
    assert prime3.pi.components == ("l0", "l1", "l2")


def test_parse_reads_roots(document):
    d = dl.parse_datum(document("gl_reducible"))
    assert d.delta_prime == frozenset({Root.diff(1, 2)})
    assert d.parity == "odd"
    assert d.w_sigma_hat == frozenset({()})


@pytest.mark.parametrize("mutate, rule", [
    (lambda doc: doc["group"].update(r=4), "group.r"),
    (lambda doc: doc["group"].update(parity="odd"), "group.parity"),
    (lambda doc: doc["pi"].update(components=["l0", "l1"]), "pi.components.length"),
    (lambda doc: doc["pi"].update(components=["l0", "l1", "q"]), "pi.components.unknown"),
    (lambda doc: doc["pi"].pop("tau"), "pi.tau.required"),
    (lambda doc: doc.update(delta_prime=["e1-e4"]), "delta-prime.range"),
    (lambda doc: doc.update(w_sigma_hat=["1", "y"]), "twists.word"),
    (lambda doc: doc["twists"].update(eps={"x": "x^2"}), "actions.eps-compatibility"),
])
def test_structural_violations(document, mutate, rule):
    doc = document("prime3")
    mutate(doc)
    with pytest.raises(ValidationError) as excinfo:
        dl.parse_datum(doc)
    rules = [v.rule for v in excinfo.value.violations]
    assert rule in rules, f"Expected {rule} among {rules}"
    assert excinfo.value.exit_code == 2


def test_block_size_mismatch(document):
    doc = document("siegel1")
    doc["group"]["blocks"] = [1]
    doc["group"]["parity"] = "even"
    with pytest.raises(ValidationError) as excinfo:
        dl.parse_datum(doc)
    assert [v.rule for v in excinfo.value.violations] == ["pi.block-size"]


def test_serialize_prime3_reproduces_document(prime3):
    assert dl.serialize_datum(prime3) == fixture_document("prime3")


@pytest.mark.parametrize("name", ["siegel1", "gl_reducible", "sign_only", "prime2"])
def test_serialize_then_parse_is_stable(document, name):
    first = dl.serialize_datum(dl.parse_datum(document(name)))
    second = dl.serialize_datum(dl.parse_datum(json.loads(dl.dump_document(first))))
    assert first == second


def test_dump_document_is_pretty_and_keeps_unicode():
    text = dl.dump_document({"notes": "Ŵ(σ)"})
    assert text == '{\n  "notes": "Ŵ(σ)"\n}\n'
