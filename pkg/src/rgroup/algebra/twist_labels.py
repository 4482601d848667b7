"""
Symbolic twist groups, representation labels, and tuples π = (π_1, ..., π_r; τ).

A twist group X̂ is a finite abelian group Z_{o_1} × ... × Z_{o_k}; an element is its
exponent vector.  Labels stand for classes of discrete series of GL blocks; the data
tells us how each generator of X̂ and the Galois involution ε permute them.
"""

# Libraries
import itertools
import logging
import math
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

# Modules
from rgroup.algebra.signed_weyl import SignedPermutation
from rgroup.errors import Violation

logger = logging.getLogger(__name__)

Twist = tuple[int, ...]

_FACTOR_RE = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?")


@dataclass(frozen=True)
class TwistGroup:
    names: tuple[str, ...]
    orders: tuple[int, ...]
    eps_images: tuple[Twist, ...]

    @classmethod
    def trivial(cls) -> "TwistGroup":
        return cls((), (), ())

    @classmethod
    def cyclic(cls, name: str, order: int) -> "TwistGroup":
        """Z_order with ε acting trivially."""
        return cls((name,), (order,), ((1,),))

    @property
    def identity(self) -> Twist:
        return tuple(0 for _ in self.orders)

    @cached_property
    def elements(self) -> tuple[Twist, ...]:
        return tuple(itertools.product(*(range(o) for o in self.orders)))

    @property
    def order(self) -> int:
        return math.prod(self.orders)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.orders) if self.orders else 1

    def multiply(self, a: Twist, b: Twist) -> Twist:
        return tuple((x + y) % o for x, y, o in zip(a, b, self.orders))

    def inverse(self, a: Twist) -> Twist:
        return tuple((-x) % o for x, o in zip(a, self.orders))

    def power(self, a: Twist, k: int) -> Twist:
        return tuple((x * k) % o for x, o in zip(a, self.orders))

    def element_order(self, a: Twist) -> int:
        return math.lcm(*(o // math.gcd(x, o) for x, o in zip(a, self.orders))) if a else 1

    def eps(self, a: Twist) -> Twist:
        """χ ↦ χ^ε, extended from the generator images."""
        out = self.identity
        for k, exponent in enumerate(a):
            out = self.multiply(out, self.power(self.eps_images[k], exponent))
        return out

    def generated(self, gens: Iterable[Twist]) -> frozenset[Twist]:
        group = {self.identity}
        gens = list(gens)
        frontier = list(group)
        while frontier:
            fresh = []
            for a in frontier:
                for g in gens:
                    b = self.multiply(a, g)
                    if b not in group:
                        group.add(b)
                        fresh.append(b)
            frontier = fresh
        return frozenset(group)

    def is_subgroup(self, subset: Iterable[Twist]) -> bool:
        subset = set(subset)
        if self.identity not in subset:
            return False
        return all(self.multiply(a, self.inverse(b)) in subset for a in subset for b in subset)

    def subgroups(self) -> list[frozenset[Twist]]:
        """All subgroups, grown from the trivial one by adjoining one element at a time."""
        found = {self.generated(())}
        frontier = list(found)
        while frontier:
            fresh = []
            for h in frontier:
                for a in self.elements:
                    if a in h:
                        continue
                    bigger = self.generated((*h, a))
                    if bigger not in found:
                        found.add(bigger)
                        fresh.append(bigger)
            frontier = fresh
        return sorted(found, key=lambda h: (len(h), sorted(h)))

    def parse_word(self, word: str) -> Twist:
        """Read '1', 'x', 'x^2' or 'x*y^-1' into an exponent vector."""
        word = word.replace(" ", "")
        if word == "1":
            return self.identity
        out = list(self.identity)
        for factor in word.split("*"):
            match = _FACTOR_RE.fullmatch(factor)
            if not match:
                raise ValueError(f"Malformed twist word {word!r}")
            name, exponent = match.group(1), int(match.group(2) or 1)
            if name not in self.names:
                raise ValueError(f"Unknown twist generator {name!r} in {word!r}")
            k = self.names.index(name)
            out[k] = (out[k] + exponent) % self.orders[k]
        return tuple(out)

    def format_word(self, a: Twist) -> str:
        factors = []
        for name, exponent in zip(self.names, a):
            if exponent == 1:
                factors.append(name)
            elif exponent:
                factors.append(f"{name}^{exponent}")
        return "*".join(factors) or "1"

    def violations(self) -> list[Violation]:
        """ε must be a well-defined involutive automorphism."""
        out = []
        for k, (name, image) in enumerate(zip(self.names, self.eps_images)):
            if any((self.orders[k] * x) % o for x, o in zip(image, self.orders)):
                out.append(Violation(
                    "twists.eps.homomorphism", f"twists.eps.{name}",
                    f"{name}^{self.orders[k]} = 1 but its image {self.format_word(image)} has a different order",
                ))
        if out:
            return out
        for k, name in enumerate(self.names):
            gen = tuple(1 if j == k else 0 for j in range(len(self.names)))
            if self.eps(self.eps(gen)) != gen:
                out.append(Violation(
                    "twists.eps.involution", f"twists.eps.{name}",
                    f"ε(ε({name})) = {self.format_word(self.eps(self.eps(gen)))}, expected {name}",
                ))
        if not out and len(set(map(self.eps, self.elements))) != self.order:
            out.append(Violation("twists.eps.bijective", "twists.eps", "ε is not injective on X̂"))
        return out


@dataclass(frozen=True)
class LabelAlgebra:
    """Labels with their block sizes and the permutations induced by X̂ generators and ε."""

    group: TwistGroup
    labels: tuple[str, ...]
    sizes: tuple[int, ...]
    chi_maps: tuple[tuple[str, ...], ...]
    eps_map: tuple[str, ...]

    @classmethod
    def build(
        cls,
        group: TwistGroup,
        labels: list[tuple[str, int]],
        chi: dict[str, dict[str, str]],
        eps: dict[str, str],
    ) -> tuple["LabelAlgebra | None", list[Violation]]:
        """
        Assemble the algebra from document-shaped maps.  Missing entries are fixed points.

        Returns the algebra (None when the maps are not even permutations) together with
        every violated rule.
        """
        ids = [label for label, _ in labels]
        violations = []
        for label in sorted({x for x in ids if ids.count(x) > 1}):
            violations.append(Violation("labels.duplicate", "labels", f"label {label!r} is declared twice"))
        known = set(ids)

        def as_permutation(mapping: dict[str, str], where: str) -> tuple[str, ...] | None:
            bad = [f"{k}->{v}" for k, v in mapping.items() if k not in known or v not in known]
            if bad:
                violations.append(Violation("actions.unknown-label", where, f"unknown labels in {', '.join(bad)}"))
                return None
            images = tuple(mapping.get(x, x) for x in ids)
            if len(set(images)) != len(ids):
                violations.append(Violation("actions.bijection", where, "map is not a bijection on labels"))
                return None
            return images

        for name in chi:
            if name not in group.names:
                violations.append(Violation("actions.unknown-generator", f"actions.chi.{name}", f"no twist generator {name!r}"))
        chi_maps = [as_permutation(chi.get(name, {}), f"actions.chi.{name}") for name in group.names]
        eps_map = as_permutation(eps, "actions.eps")
        if violations:
            return None, violations

        algebra = cls(group, tuple(ids), tuple(size for _, size in labels), tuple(chi_maps), eps_map)
        return algebra, algebra.violations()

    @cached_property
    def _index(self) -> dict[str, int]:
        return {label: k for k, label in enumerate(self.labels)}

    def size(self, label: str) -> int:
        return self.sizes[self._index[label]]

    def has(self, label: str) -> bool:
        return label in self._index

    def eps_label(self, label: str) -> str:
        return self.eps_map[self._index[label]]

    def is_self_dual(self, label: str) -> bool:
        return self.eps_label(label) == label

    def _generator_image(self, k: int, label: str) -> str:
        return self.chi_maps[k][self._index[label]]

    @cached_property
    def _actions(self) -> dict[Twist, dict[str, str]]:
        table = {}
        for chi in self.group.elements:
            images = {}
            for label in self.labels:
                image = label
                for k, exponent in enumerate(chi):
                    for _ in range(exponent):
                        image = self._generator_image(k, image)
                images[label] = image
            table[chi] = images
        return table

    def twist_label(self, label: str, chi: Twist) -> str:
        return self._actions[chi][label]

    def violations(self) -> list[Violation]:
        out = []
        names = self.group.names
        for k, name in enumerate(names):
            for label in self.labels:
                image = self._generator_image(k, label)
                if self.size(image) != self.size(label):
                    out.append(Violation("actions.block-size", f"actions.chi.{name}",
                                         f"{label} ({self.size(label)}) ↦ {image} ({self.size(image)})"))
                power = label
                for _ in range(self.group.orders[k]):
                    power = self._generator_image(k, power)
                if power != label:
                    out.append(Violation("actions.relation", f"actions.chi.{name}",
                                         f"{name}^{self.group.orders[k]} moves {label} to {power}"))
            for j in range(k + 1, len(names)):
                for label in self.labels:
                    a = self._generator_image(j, self._generator_image(k, label))
                    b = self._generator_image(k, self._generator_image(j, label))
                    if a != b:
                        out.append(Violation("actions.commute", f"actions.chi.{name}",
                                             f"{name} and {names[j]} do not commute on {label}"))
        for label in self.labels:
            image = self.eps_label(label)
            if self.size(image) != self.size(label):
                out.append(Violation("actions.block-size", "actions.eps", f"ε changes the size of {label}"))
            if self.eps_label(image) != label:
                out.append(Violation("actions.eps-involution", "actions.eps", f"ε(ε({label})) = {self.eps_label(image)}"))
        if out:
            return out
        # ε(ℓ·g) = ε(ℓ)·ε(g) on generators
        for k, name in enumerate(names):
            gen = tuple(1 if j == k else 0 for j in range(len(names)))
            eps_gen = self.group.eps(gen)
            for label in self.labels:
                left = self.eps_label(self._generator_image(k, label))
                right = self.twist_label(self.eps_label(label), eps_gen)
                if left != right:
                    out.append(Violation(
                        "actions.eps-compatibility", f"actions.chi.{name}",
                        f"ε({label}·{name}) = {left} but ε({label})·ε({name}) = {right}",
                    ))
        return out


@dataclass(frozen=True)
class Tau:
    x_tau: frozenset[Twist]
    generic: bool = False
    mult_one: bool = False


@dataclass(frozen=True)
class PiTuple:
    """
    A tuple (π_1, ..., π_r; τ) of labels.

    `tau_twist` records the character τ has been twisted by; two tuples agree when
    every label matches and the τ twists differ by an element of X(τ).  With m = 0
    there is no τ and X(τ) is all of X̂.
    """

    components: tuple[str, ...]
    algebra: LabelAlgebra = field(compare=False, repr=False)
    tau: Tau | None = None
    tau_twist: Twist = ()

    @property
    def r(self) -> int:
        return len(self.components)

    def __str__(self) -> str:
        return "(" + ", ".join(self.components) + (")" if self.tau is None else "; τ)")


def twist(t: PiTuple, chi: Twist) -> PiTuple:
    """πχ = (π_1χ, ..., π_rχ; τχ)."""
    algebra = t.algebra
    components = tuple(algebra.twist_label(label, chi) for label in t.components)
    tau_twist = algebra.group.multiply(t.tau_twist, chi) if t.tau is not None else t.tau_twist
    return PiTuple(components, algebra, t.tau, tau_twist)


def twist_slots(t: PiTuple, chis: list[Twist]) -> PiTuple:
    """Twist each component by its own character; τ is left alone."""
    components = tuple(t.algebra.twist_label(label, chi) for label, chi in zip(t.components, chis))
    return PiTuple(components, t.algebra, t.tau, t.tau_twist)


def weyl_act(t: PiTuple, w: SignedPermutation) -> PiTuple:
    """π^w with (π^w)_i = π_{s(i)}, dualised by ε when i ∈ B."""
    algebra = t.algebra
    components = tuple(
        algebra.eps_label(t.components[w.s(i) - 1]) if i in w.signs else t.components[w.s(i) - 1]
        for i in range(1, t.r + 1)
    )
    return PiTuple(components, algebra, t.tau, t.tau_twist)


def x_tau(t: PiTuple) -> frozenset[Twist]:
    group = t.algebra.group
    if t.tau is None:
        return frozenset(group.elements)
    return group.generated(t.tau.x_tau)


def tuples_equivalent(a: PiTuple, b: PiTuple) -> bool:
    if a.components != b.components:
        return False
    if a.tau is None:
        return True
    group = a.algebra.group
    return group.multiply(a.tau_twist, group.inverse(b.tau_twist)) in x_tau(a)


def stabilizer_X(t: PiTuple) -> frozenset[Twist]:
    """X(π) = {χ : πχ ≃ π}."""
    stabilizer = frozenset(chi for chi in t.algebra.group.elements if tuples_equivalent(twist(t, chi), t))
    logger.debug("X(π) for %s has %d elements", t, len(stabilizer))
    return stabilizer
