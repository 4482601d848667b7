"""
Exhaustive corpus of small inducing data for the oracle suites.

For each twist group (trivial, Z2, Z3; ε trivial on characters) we build a closed label
algebra out of a few orbit families, plus one Z2 system mixing GL_1 and GL_2 blocks, then
enumerate tuples π drawn from one "universe" of labels at a time.  Δ′ follows the
general-linear rules for Diff and Sum roots; the short root is chosen freely per self-dual
label and filtered by validation.  Ŵ(σ) runs over the subgroups between X(π) and the
realisable characters.
"""

# Libraries
import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator

# Modules
from rgroup.datum.data_loading import build_datum, parse_datum
from rgroup.datum.inference import realizable_twists, x_pi
from rgroup.errors import ValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LabelSystem:
    """A closed label algebra for Z_order together with the label universes π may draw from."""

    name: str
    order: int
    labels: tuple[str, ...]
    chi: dict
    eps: dict
    universes: tuple[tuple[str, ...], ...]
    # labels of GL_2 blocks; everything else sits on a GL_1 block
    sizes: dict = field(default_factory=dict)

    def twists_document(self) -> dict:
        if self.order == 1:
            return {"generators": []}
        return {"generators": [{"name": "x", "order": self.order}], "eps": {"x": "x"}}

    def actions_document(self) -> dict:
        actions = {"eps": dict(self.eps)}
        if self.order > 1:
            actions["chi"] = {"x": dict(self.chi)}
        return actions

    def size(self, label: str) -> int:
        return self.sizes.get(label, 1)

    def self_dual(self, label: str) -> bool:
        return self.eps.get(label, label) == label

    def dual(self, label: str) -> str:
        return self.eps.get(label, label)

    def twisted(self, label: str, k: int) -> str:
        for _ in range(k):
            label = self.chi.get(label, label)
        return label


def _label_system(order: int) -> LabelSystem:
    """Free self-dual orbit a*, free dual-pair orbit b*/b*e, a fixed self-dual c, and for even order a swapped pair e/ee."""
    labels, chi, eps = [], {}, {}
    a = [f"a{k}" for k in range(order)]
    b = [f"b{k}" for k in range(order)]
    be = [f"b{k}e" for k in range(order)]
    labels += a + b + be
    for k in range(order):
        chi[a[k]] = a[(k + 1) % order]
        chi[b[k]] = b[(k + 1) % order]
        chi[be[k]] = be[(k + 1) % order]
        eps[b[k]], eps[be[k]] = be[k], b[k]
    universes = [tuple(a + b[:1] + be[:1])] if order == 1 else [tuple(a + ["c"]), tuple(b + be)]
    if order > 1:
        labels.append("c")
    if order % 2 == 0:
        labels += ["e", "ee"]
        chi["e"], chi["ee"] = "ee", "e"
        eps["e"], eps["ee"] = "ee", "e"
        universes += [("c", "e", "ee"), tuple(a + ["e", "ee"])]
    chi = {k: v for k, v in chi.items() if k != v}
    return LabelSystem(f"Z{order}" if order > 1 else "trivial", order, tuple(labels), chi, eps, tuple(universes))


def _mixed_block_system() -> LabelSystem:
    """
    Z2 labels on blocks of size 1 and 2.  x swaps the self-dual labels a0, a1 (size 1) and
    d0, d1 (size 2) and fixes the dual pair f, fe (size 2).  Only tuples using a size-2
    label are kept.
    """
    chi = {"a0": "a1", "a1": "a0", "d0": "d1", "d1": "d0"}
    eps = {"f": "fe", "fe": "f"}
    sizes = {"d0": 2, "d1": 2, "f": 2, "fe": 2}
    labels = ("a0", "a1", "d0", "d1", "f", "fe")
    return LabelSystem("Z2 mixed blocks", 2, labels, chi, eps, (("a0", "d0", "d1", "f", "fe"),), sizes)


LABEL_SYSTEMS = tuple(_label_system(order) for order in (1, 2, 3)) + (_mixed_block_system(),)


def _is_canonical(system: LabelSystem, components: tuple[str, ...]) -> bool:
    """Keep one tuple per twist orbit {πχ}; all of them have the same R-group."""
    position = {label: k for k, label in enumerate(system.labels)}
    key = tuple(position[c] for c in components)
    return all(
        key <= tuple(position[system.twisted(c, k)] for c in components) for k in range(1, system.order)
    )


def _base_document(system: LabelSystem, components: tuple[str, ...], shorts: frozenset[str]) -> dict:
    r = len(components)
    delta = []
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            if components[i - 1] == components[j - 1]:
                delta.append(f"e{i}-e{j}")
            if components[j - 1] == system.dual(components[i - 1]):
                delta.append(f"e{i}+e{j}")
    delta += [f"short:{i}" for i in range(1, r + 1) if components[i - 1] in shorts]
    return {
        "group": {"r": r, "blocks": [system.size(c) for c in components], "m": 2},
        "twists": system.twists_document(),
        "labels": [{"id": label, "size": system.size(label)} for label in system.labels],
        "actions": system.actions_document(),
        "pi": {
            "components": list(components),
            "tau": {"x_tau": ["x"] if system.order > 1 else [], "generic": True, "mult_one": True},
        },
        "delta_prime": delta,
        "w_sigma_hat": "infer",
        "notes": f"oracle corpus: {system.name}",
    }


def corpus_documents(r_max: int, stats: Counter | None = None) -> Iterator[dict]:
    """
    Every admissible datum document of rank at most `r_max`, in a fixed order.

    Parameters
    ----------
    r_max : int
        Largest rank r to enumerate.
    stats : Counter, optional
        Receives 'generated', 'admissible' and 'skipped' counts.
    """
    stats = stats if stats is not None else Counter()
    for system in LABEL_SYSTEMS:
        for universe in system.universes:
            for r in range(1, r_max + 1):
                for components in itertools.product(universe, repeat=r):
                    if not _is_canonical(system, components):
                        continue
                    if system.sizes and all(system.size(c) == 1 for c in components):
                        continue
                    self_dual = sorted({c for c in components if system.self_dual(c)})
                    for k in range(len(self_dual) + 1):
                        for shorts in itertools.combinations(self_dual, k):
                            yield from _hat_variants(_base_document(system, components, frozenset(shorts)), stats)
    logger.info("Corpus r<=%d: %s", r_max, dict(stats))


def _hat_variants(document: dict, stats: Counter) -> Iterator[dict]:
    stats["generated"] += 1
    try:
        preliminary = build_datum(dict(document, w_sigma_hat=["1"]))
    except ValidationError:
        stats["skipped"] += 1
        return
    group = preliminary.group
    stabilizer = x_pi(preliminary)
    realizable = set(realizable_twists(preliminary))
    for subgroup in group.subgroups():
        if not stabilizer <= subgroup <= realizable:
            continue
        variant = dict(document, w_sigma_hat=[group.format_word(chi) for chi in sorted(subgroup)])
        try:
            parse_datum(variant)
        except ValidationError as e:
            stats["skipped"] += 1
            logger.debug("Skipping inadmissible datum: %s", e.violations[0])
            continue
        stats["admissible"] += 1
        yield variant
