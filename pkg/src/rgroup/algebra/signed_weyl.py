"""
Signed permutations and the root system they act on.

An element w = s·C_B of the hyperoctahedral group W acts on the standard basis by
w(e_i) = (-1)^[i in B] e_{s(i)}.  Composition is composition of maps, so
(w1 * w2)(v) = w1(w2(v)).
"""

# Libraries
import itertools
import logging
import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, NamedTuple

from sympy.combinatorics import Permutation

logger = logging.getLogger(__name__)

_CYCLE_RE = re.compile(r"\(([\d\s]+)\)")
_SIGNS_RE = re.compile(r"C\{([\d,\s]*)\}")


class CycleSigns(NamedTuple):
    cycle: tuple[int, ...]
    sign_count: int


@dataclass(frozen=True, order=True)
class SignedPermutation:
    """
    Element s·C_B of W.

    `perm[i - 1]` is s(i) and `signs` is B as a sorted tuple, both 1-based.  The
    dataclass ordering (perm first, then signs) is the canonical order used
    whenever sets of elements are listed.
    """

    perm: tuple[int, ...]
    signs: tuple[int, ...] = ()

    def __post_init__(self):
        r = len(self.perm)
        if sorted(self.perm) != list(range(1, r + 1)):
            raise ValueError(f"{self.perm} is not a permutation of 1..{r}")
        if list(self.signs) != sorted(set(self.signs)) or any(not 1 <= i <= r for i in self.signs):
            raise ValueError(f"sign set {self.signs} must be a sorted subset of 1..{r}")

    # Constructors

    @classmethod
    def identity(cls, r: int) -> "SignedPermutation":
        return cls(tuple(range(1, r + 1)))

    @classmethod
    def sign_change(cls, r: int, signs: Iterable[int]) -> "SignedPermutation":
        return cls(tuple(range(1, r + 1)), tuple(sorted(set(signs))))

    @classmethod
    def from_cycles(
        cls, r: int, cycles: Iterable[Iterable[int]] = (), signs: Iterable[int] = ()
    ) -> "SignedPermutation":
        """Build s·C_B from the cycles of s, e.g. from_cycles(3, [(1, 2, 3)], {1})."""
        images = list(range(1, r + 1))
        for cycle in cycles:
            cycle = tuple(cycle)
            for k, i in enumerate(cycle):
                images[i - 1] = cycle[(k + 1) % len(cycle)]
        return cls(tuple(images), tuple(sorted(set(signs))))

    @classmethod
    def parse(cls, text: str, r: int) -> "SignedPermutation":
        """Inverse of `str`: accepts 'id', '(1 2 3)', 'C{1,3}' and '(1 2)(3 4)·C{2}'."""
        text = text.strip()
        if text == "id":
            return cls.identity(r)
        perm_part, _, sign_part = text.partition("·")
        if perm_part.startswith("C{"):
            perm_part, sign_part = "", perm_part
        cycles = [tuple(int(k) for k in m.split()) for m in _CYCLE_RE.findall(perm_part)]
        signs: tuple[int, ...] = ()
        if sign_part:
            match = _SIGNS_RE.fullmatch(sign_part.strip())
            if not match:
                raise ValueError(f"Cannot parse sign set in {text!r}")
            signs = tuple(int(k) for k in match.group(1).split(",") if k.strip())
        return cls.from_cycles(r, cycles, signs)

    # Structure

    @property
    def r(self) -> int:
        return len(self.perm)

    def s(self, i: int) -> int:
        return self.perm[i - 1]

    def __call__(self, i: int) -> int:
        """Signed image of e_i, returned as ±s(i)."""
        return -self.perm[i - 1] if i in self.signs else self.perm[i - 1]

    def compose(self, other: "SignedPermutation") -> "SignedPermutation":
        """self ∘ other."""
        if other.r != self.r:
            raise ValueError(f"Cannot compose elements of rank {self.r} and {other.r}")
        own = set(self.signs)
        perm = tuple(self.perm[other.perm[i] - 1] for i in range(self.r))
        signs = tuple(
            i for i in range(1, self.r + 1) if (i in other.signs) != (other.perm[i - 1] in own)
        )
        return SignedPermutation(perm, signs)

    __mul__ = compose

    def inverse(self) -> "SignedPermutation":
        perm = [0] * self.r
        for i, image in enumerate(self.perm, start=1):
            perm[image - 1] = i
        return SignedPermutation(tuple(perm), tuple(sorted(self.perm[i - 1] for i in self.signs)))

    def conjugate(self, other: "SignedPermutation") -> "SignedPermutation":
        """self · other · self⁻¹."""
        return self.compose(other).compose(self.inverse())

    @property
    def is_identity(self) -> bool:
        return not self.signs and self.perm == tuple(range(1, self.r + 1))

    @property
    def is_sign_change(self) -> bool:
        return self.perm == tuple(range(1, self.r + 1))

    @property
    def underlying(self) -> "SignedPermutation":
        """The permutation part s, as an element with no sign changes."""
        return SignedPermutation(self.perm)

    def order(self) -> int:
        power, k = self, 1
        while not power.is_identity:
            power, k = power.compose(self), k + 1
        return k

    def cycles(self) -> list[CycleSigns]:
        """Cycles of s (fixed points included), each started at its least index, with |B ∩ cycle|."""
        out = []
        for cycle in Permutation([i - 1 for i in self.perm]).full_cyclic_form:
            cycle = [k + 1 for k in cycle]
            start = cycle.index(min(cycle))
            cycle = tuple(cycle[start:] + cycle[:start])
            out.append(CycleSigns(cycle, sum(1 for i in cycle if i in self.signs)))
        return sorted(out)

    @property
    def is_r_cycle(self) -> bool:
        return len(self.cycles()) == 1

    def __str__(self) -> str:
        cycle_text = "".join(
            "(" + " ".join(str(i) for i in c.cycle) + ")" for c in self.cycles() if len(c.cycle) > 1
        )
        sign_text = "C{" + ",".join(str(i) for i in self.signs) + "}" if self.signs else ""
        if cycle_text and sign_text:
            return f"{cycle_text}·{sign_text}"
        return cycle_text or sign_text or "id"


class RootKind(Enum):
    DIFF = "Diff"
    SUM = "Sum"
    SHORT = "Short"


@dataclass(frozen=True)
class Root:
    """
    A positive reduced root: e_i - e_j, e_i + e_j (i < j) or the short root e_i.

    Whether the short root is e_i or 2e_i does not matter here, only its direction.
    """

    i: int
    j: int = 0
    kind: RootKind = RootKind.SHORT

    def __post_init__(self):
        if self.kind is RootKind.SHORT:
            if self.i < 1 or self.j != 0:
                raise ValueError(f"Invalid short root index {self.i}")
        elif not 1 <= self.i < self.j:
            raise ValueError(f"Root indices must satisfy 1 <= i < j, got ({self.i}, {self.j})")

    @classmethod
    def diff(cls, i: int, j: int) -> "Root":
        return cls(i, j, RootKind.DIFF)

    @classmethod
    def sum(cls, i: int, j: int) -> "Root":
        return cls(i, j, RootKind.SUM)

    @classmethod
    def short(cls, i: int) -> "Root":
        return cls(i, 0, RootKind.SHORT)

    @classmethod
    def parse(cls, text: str) -> "Root":
        """Read 'e1-e2', 'e1+e3' or 'short:2'."""
        text = text.replace(" ", "")
        if text.startswith("short:"):
            return cls.short(int(text[len("short:"):]))
        match = re.fullmatch(r"e(\d+)([+-])e(\d+)", text)
        if not match:
            raise ValueError(f"Cannot parse root {text!r}")
        i, j = int(match.group(1)), int(match.group(3))
        return cls.diff(i, j) if match.group(2) == "-" else cls.sum(i, j)

    def sort_key(self) -> tuple[int, int, str]:
        return (self.i, self.j, self.kind.value)

    def __lt__(self, other: "Root") -> bool:
        return self.sort_key() < other.sort_key()

    @property
    def indices(self) -> tuple[int, ...]:
        return (self.i,) if self.kind is RootKind.SHORT else (self.i, self.j)

    @property
    def name(self) -> str:
        return f"{self.kind.value}({','.join(str(k) for k in self.indices)})"

    def coefficients(self) -> dict[int, int]:
        if self.kind is RootKind.SHORT:
            return {self.i: 1}
        return {self.i: 1, self.j: -1 if self.kind is RootKind.DIFF else 1}

    def __str__(self) -> str:
        if self.kind is RootKind.SHORT:
            return f"short:{self.i}"
        return f"e{self.i}{'-' if self.kind is RootKind.DIFF else '+'}e{self.j}"


@dataclass(frozen=True)
class SignedRoot:
    root: Root
    positive: bool = True

    def __str__(self) -> str:
        return str(self.root) if self.positive else f"-({self.root})"


def _from_coefficients(coefficients: dict[int, int]) -> SignedRoot:
    indices = sorted(coefficients)
    lead = coefficients[indices[0]]
    if len(indices) == 1:
        return SignedRoot(Root.short(indices[0]), lead > 0)
    i, j = indices
    kind = RootKind.DIFF if coefficients[j] == -lead else RootKind.SUM
    return SignedRoot(Root(i, j, kind), lead > 0)


def act_on_root(w: SignedPermutation, alpha: Root | SignedRoot) -> SignedRoot:
    """Image w(α) written as ± a positive root."""
    signed = alpha if isinstance(alpha, SignedRoot) else SignedRoot(alpha)
    outer = 1 if signed.positive else -1
    image = {}
    for index, c in signed.root.coefficients().items():
        if index > w.r:
            raise ValueError(f"Root {signed.root} does not live in rank {w.r}")
        image[w.s(index)] = outer * c * (-1 if index in w.signs else 1)
    return _from_coefficients(image)


def is_positive_on(w: SignedPermutation, delta: Iterable[Root]) -> bool:
    return all(act_on_root(w, alpha).positive for alpha in delta)


def reflection(alpha: Root, r: int) -> SignedPermutation:
    """The reflection s_α as a signed permutation."""
    if alpha.kind is RootKind.SHORT:
        return SignedPermutation.sign_change(r, [alpha.i])
    signs = [alpha.i, alpha.j] if alpha.kind is RootKind.SUM else []
    return SignedPermutation.from_cycles(r, [(alpha.i, alpha.j)], signs)


@lru_cache(maxsize=64)
def weyl_group(blocks: tuple[int, ...]) -> tuple[SignedPermutation, ...]:
    """
    W(M) for a Levi with GL-block sizes `blocks`: permutations that preserve the
    block sizes, with arbitrary sign changes.  Returned in canonical order.
    """
    r = len(blocks)
    elements = []
    for perm in itertools.permutations(range(1, r + 1)):
        if any(blocks[i] != blocks[perm[i] - 1] for i in range(r)):
            continue
        for k in range(r + 1):
            for signs in itertools.combinations(range(1, r + 1), k):
                elements.append(SignedPermutation(perm, signs))
    elements.sort()
    logger.debug("W(M) for blocks %s has %d elements", blocks, len(elements))
    return tuple(elements)


def generated_subgroup(
    generators: Iterable[SignedPermutation], r: int
) -> frozenset[SignedPermutation]:
    """Closure of `generators` under composition (always contains the identity)."""
    generators = sorted(set(generators))
    group = {SignedPermutation.identity(r)}
    frontier = list(group)
    while frontier:
        fresh = []
        for element in frontier:
            for g in generators:
                product = element.compose(g)
                if product not in group:
                    group.add(product)
                    fresh.append(product)
        frontier = fresh
    return frozenset(group)


def closure_escape(elements: Iterable[SignedPermutation], r: int) -> SignedPermutation | None:
    """An element generated by `elements` but outside them, or None when they already form a group."""
    members = set(elements)
    identity = SignedPermutation.identity(r)
    if identity not in members:
        return identity
    generators: list[SignedPermutation] = []
    span = {identity}
    for w in sorted(members):
        if w not in span:
            generators.append(w)
            span = generated_subgroup(generators, r)
            escaped = span - members
            if escaped:
                return min(escaped)
    return None
