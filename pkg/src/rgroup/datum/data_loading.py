# Libraries
import json
import logging
from dataclasses import replace
from pathlib import Path

# Modules
from rgroup.algebra.signed_weyl import Root
from rgroup.algebra.twist_labels import LabelAlgebra, PiTuple, Tau, TwistGroup
from rgroup.datum.inference import infer_w_sigma_hat
from rgroup.datum.model import EXPLICIT, INFER, InducingDatum
from rgroup.datum.schema import schema_errors
from rgroup.datum.validation import check_datum
from rgroup.errors import SchemaError, ValidationError, Violation

logger = logging.getLogger(__name__)


def load_document(path: str | Path) -> dict:
    file_path = Path(path)
    if not file_path.is_file():
        logger.error("Datum file not found at path=%s", file_path)
        raise SchemaError(f"Datum file not found: {file_path}")

    try:
        logger.info("Attempting to read datum document: %s", file_path)
        with open(file_path, "r", encoding="utf-8") as raw_data:
            return json.load(raw_data)
    except json.JSONDecodeError as e:
        logger.error("Invalid JSON in file %s: %s", file_path, e)
        raise SchemaError(f"Invalid JSON in {file_path}", [f"line {e.lineno}, column {e.colno}: {e.msg}"]) from e
    except OSError as e:
        raise SchemaError(f"Cannot read {file_path}: {e}") from e


def _build_group(twists: dict, violations: list[Violation]) -> TwistGroup | None:
    generators = twists["generators"]
    names = tuple(g["name"] for g in generators)
    orders = tuple(g["order"] for g in generators)
    if len(set(names)) != len(names):
        violations.append(Violation("twists.duplicate", "twists.generators", "generator names must be unique"))
        return None
    bare = TwistGroup(names, orders, tuple(tuple(int(j == k) for j in range(len(names))) for k in range(len(names))))

    images = []
    for k, name in enumerate(names):
        word = twists.get("eps", {}).get(name, name)
        try:
            images.append(bare.parse_word(word))
        except ValueError as e:
            violations.append(Violation("twists.eps.word", f"twists.eps.{name}", str(e)))
            images.append(bare.parse_word(name))
    for name in twists.get("eps", {}):
        if name not in names:
            violations.append(Violation("twists.eps.unknown", f"twists.eps.{name}", f"no twist generator {name!r}"))

    group = TwistGroup(names, orders, tuple(images))
    violations.extend(group.violations())
    return group


def _parse_words(group: TwistGroup, words: list[str], where: str, violations: list[Violation]) -> frozenset:
    out = set()
    for k, word in enumerate(words):
        try:
            out.add(group.parse_word(word))
        except ValueError as e:
            violations.append(Violation("twists.word", f"{where}[{k}]", str(e)))
    return frozenset(out)


def _build_pi(document: dict, blocks: tuple[int, ...], algebra: LabelAlgebra, violations: list[Violation]) -> PiTuple:
    pi, m = document["pi"], document["group"]["m"]
    components = tuple(pi["components"])
    if len(components) != len(blocks):
        violations.append(Violation("pi.components.length", "pi.components",
                                    f"{len(components)} components for r = {len(blocks)}"))
    for k, (label, size) in enumerate(zip(components, blocks), start=1):
        if not algebra.has(label):
            violations.append(Violation("pi.components.unknown", f"pi.components[{k - 1}]", f"unknown label {label!r}"))
        elif algebra.size(label) != size:
            violations.append(Violation("pi.block-size", f"pi.components[{k - 1}]",
                                        f"π_{k} = {label} has size {algebra.size(label)} but n_{k} = {size}"))

    tau_doc = pi.get("tau")
    tau = None
    if m > 0 and tau_doc is None:
        violations.append(Violation("pi.tau.required", "pi.tau", f"m = {m} needs a τ entry"))
    elif m == 0 and tau_doc is not None:
        violations.append(Violation("pi.tau.unexpected", "pi.tau", "m = 0 leaves no room for τ"))
    elif tau_doc is not None:
        tau = Tau(
            x_tau=_parse_words(algebra.group, tau_doc["x_tau"], "pi.tau.x_tau", violations),
            generic=tau_doc.get("generic", False),
            mult_one=tau_doc.get("mult_one", False),
        )
    return PiTuple(components, algebra, tau, algebra.group.identity)


def _parse_roots(descriptors: list[str], r: int, violations: list[Violation]) -> frozenset[Root]:
    roots = set()
    for k, text in enumerate(descriptors):
        try:
            alpha = Root.parse(text)
        except ValueError as e:
            violations.append(Violation("delta-prime.parse", f"delta_prime[{k}]", str(e)))
            continue
        if max(alpha.indices) > r:
            violations.append(Violation("delta-prime.range", f"delta_prime[{k}]", f"{alpha} uses an index above r = {r}"))
            continue
        roots.add(alpha)
    return frozenset(roots)


def build_datum(document: dict, strict_diff: bool = False) -> InducingDatum:
    """Schema and structural checks, then assembly; Ŵ(σ) is resolved but the datum rules are not run."""
    errors = schema_errors(document)
    if errors:
        logger.error("Datum document failed schema validation with %d error(s)", len(errors))
        raise SchemaError("Document does not match the datum schema", errors)

    violations: list[Violation] = []
    group_doc = document["group"]
    blocks = tuple(group_doc["blocks"])
    if group_doc["r"] != len(blocks):
        violations.append(Violation("group.r", "group.r", f"r = {group_doc['r']} but {len(blocks)} blocks given"))
    n = 2 * sum(blocks) + group_doc["m"]
    parity = group_doc.get("parity")
    if parity is not None and parity != ("even" if n % 2 == 0 else "odd"):
        violations.append(Violation("group.parity", "group.parity", f"n = 2Σn_i + m = {n} is not {parity}"))

    group = _build_group(document["twists"], violations)
    if group is None or violations:
        raise ValidationError(violations)

    actions = document.get("actions", {})
    algebra, algebra_violations = LabelAlgebra.build(
        group,
        [(label["id"], label["size"]) for label in document["labels"]],
        actions.get("chi", {}),
        actions.get("eps", {}),
    )
    violations += algebra_violations
    if algebra is None or violations:
        raise ValidationError(violations)

    pi = _build_pi(document, blocks, algebra, violations)
    delta_prime = _parse_roots(document["delta_prime"], len(blocks), violations)
    hat_doc = document["w_sigma_hat"]
    explicit = frozenset()
    if hat_doc != INFER:
        explicit = _parse_words(group, hat_doc, "w_sigma_hat", violations)
    if violations:
        raise ValidationError(violations)

    datum = InducingDatum(
        blocks=blocks,
        m=group_doc["m"],
        algebra=algebra,
        pi=pi,
        delta_prime=delta_prime,
        w_sigma_hat_mode=INFER if hat_doc == INFER else EXPLICIT,
        w_sigma_hat=explicit,
        notes=document.get("notes", ""),
        strict_diff=strict_diff,
    )
    if datum.w_sigma_hat_mode == INFER:
        datum = replace(datum, w_sigma_hat=infer_w_sigma_hat(datum))
    return datum


def parse_datum(document: dict, strict_diff: bool = False) -> InducingDatum:
    """
    Turn a datum document into a validated InducingDatum.

    Parameters
    ----------
    document : dict
        Decoded JSON following the datum schema.
    strict_diff : bool, optional
        Also require Diff(i, j) ∈ Δ′ whenever π_i ≃ π_j.

    Returns
    -------
    InducingDatum
        With Ŵ(σ) resolved, inferred when the document asks for "infer".

    Raises
    ------
    SchemaError
        If the document does not match the schema.
    ValidationError
        If any datum invariant fails; every violation found is reported at once.
    """
    datum = check_datum(build_datum(document, strict_diff))
    logger.info(
        "Parsed datum: r=%d blocks=%s m=%d |X̂|=%d |Δ′|=%d |Ŵ(σ)|=%d",
        datum.r, list(datum.blocks), datum.m, datum.group.order, len(datum.delta_prime), len(datum.w_sigma_hat),
    )
    return datum


def serialize_datum(d: InducingDatum) -> dict:
    """Canonical document for a datum: fixed points omitted from maps, sets sorted."""
    group, algebra = d.group, d.algebra
    document = {
        "group": {"r": d.r, "blocks": list(d.blocks), "m": d.m, "parity": d.parity},
        "twists": {
            "generators": [{"name": name, "order": order} for name, order in zip(group.names, group.orders)],
            "eps": {name: group.format_word(image) for name, image in zip(group.names, group.eps_images)},
        },
        "labels": [{"id": label, "size": size} for label, size in zip(algebra.labels, algebra.sizes)],
        "actions": {
            "chi": {
                name: {a: b for a, b in zip(algebra.labels, images) if a != b}
                for name, images in zip(group.names, algebra.chi_maps)
            },
            "eps": {a: b for a, b in zip(algebra.labels, algebra.eps_map) if a != b},
        },
        "pi": {"components": list(d.pi.components)},
        "delta_prime": [str(alpha) for alpha in sorted(d.delta_prime)],
        "w_sigma_hat": INFER if d.w_sigma_hat_mode == INFER else [group.format_word(c) for c in sorted(d.w_sigma_hat)],
    }
    if d.pi.tau is not None:
        document["pi"]["tau"] = {
            "x_tau": [group.format_word(c) for c in sorted(d.pi.tau.x_tau)],
            "generic": d.pi.tau.generic,
            "mult_one": d.pi.tau.mult_one,
        }
    if d.notes:
        document["notes"] = d.notes
    return document


def dump_document(document: dict) -> str:
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"
