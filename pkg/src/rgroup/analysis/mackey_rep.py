"""
Irreducible representations of R(σ) = A ⋉ N with N = R(π) ≅ Z_2^k and A = Γ_σ abelian,
by the little-group method: orbits of characters κ of N under A, characters λ of the
stabiliser A_κ, and ρ = Ind_{A_κ ⋉ N}^{R(σ)} (λ ⊗ κ).  All values are exact elements of Q(ζ_N).
"""

# Libraries
import itertools
import logging
import math
from dataclasses import dataclass
from functools import cached_property

# Modules
from rgroup.algebra.cyclotomic import CyclotomicNumber, field_order
from rgroup.algebra.signed_weyl import SignedPermutation
from rgroup.errors import InconsistencyError, UnsupportedStructureError

logger = logging.getLogger(__name__)

Kappa = tuple[int, ...]


@dataclass(frozen=True)
class SemidirectPresentation:
    r: int
    complement: tuple[SignedPermutation, ...]
    normal_indices: tuple[int, ...]

    @classmethod
    def from_analysis(cls, analysis) -> "SemidirectPresentation":
        return cls(analysis.datum.r, tuple(sorted(analysis.gamma)), tuple(analysis.b_pi))

    @cached_property
    def identity(self) -> SignedPermutation:
        return SignedPermutation.identity(self.r)

    @cached_property
    def normal(self) -> tuple[SignedPermutation, ...]:
        return tuple(sorted(
            SignedPermutation.sign_change(self.r, subset)
            for k in range(len(self.normal_indices) + 1)
            for subset in itertools.combinations(self.normal_indices, k)
        ))

    @cached_property
    def elements(self) -> tuple[SignedPermutation, ...]:
        return tuple(sorted({a.compose(n) for a in self.complement for n in self.normal}))

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def field_order(self) -> int:
        exponent = 1
        for a in self.complement:
            exponent = math.lcm(exponent, a.order())
        return field_order(exponent)

    @cached_property
    def _split(self) -> dict[SignedPermutation, tuple[SignedPermutation, tuple[int, ...]]]:
        # Γ_σ may contain pure sign changes, so a is found by membership of a⁻¹h in N, not by permutation
        normal = set(self.normal)
        out = {}
        for h in self.elements:
            for a in self.complement:
                n = a.inverse().compose(h)
                if n in normal:
                    out[h] = (a, n.signs)
                    break
        return out

    def split(self, h: SignedPermutation) -> tuple[SignedPermutation, tuple[int, ...]]:
        """h = a·C_D with a ∈ A and D ⊆ B(π)."""
        return self._split[h]

    def conjugate_index(self, a: SignedPermutation, j: int) -> int:
        """The index i with a⁻¹ C_j a = C_i."""
        image = a.inverse().compose(SignedPermutation.sign_change(self.r, [j])).compose(a)
        if not image.is_sign_change or len(image.signs) != 1 or image.signs[0] not in self.normal_indices:
            raise UnsupportedStructureError("mackey", f"{a} does not normalise R(π)", lemma="B(π) stability")
        return image.signs[0]

    def act(self, a: SignedPermutation, kappa: Kappa) -> Kappa:
        """(a·κ)(C_j) = κ(a⁻¹ C_j a)."""
        position = {j: k for k, j in enumerate(self.normal_indices)}
        return tuple(kappa[position[self.conjugate_index(a, j)]] for j in self.normal_indices)


@dataclass(frozen=True)
class LittleGroupIrrep:
    index: int
    kappa: Kappa
    orbit: tuple[Kappa, ...]
    stabilizer: tuple[SignedPermutation, ...]
    lam: tuple[tuple[SignedPermutation, int], ...]

    @property
    def dim(self) -> int:
        return len(self.orbit)

    @property
    def name(self) -> str:
        return f"ρ{self.index}"

    @property
    def kappa_text(self) -> str:
        return "".join("+" if k == 1 else "-" for k in self.kappa) or "·"

    def lam_exponent(self, a: SignedPermutation) -> int:
        return dict(self.lam)[a]


def _check_abelian(pres: SemidirectPresentation) -> None:
    for a in pres.complement:
        for b in pres.complement:
            if a.compose(b) != b.compose(a):
                raise UnsupportedStructureError(
                    "mackey", f"Γ_σ is not abelian: {a} and {b} do not commute", lemma="semidirect splitting"
                )


def abelian_characters(elements: tuple[SignedPermutation, ...], order: int) -> list[dict[SignedPermutation, int]]:
    """All characters of a finite abelian group, as exponent maps into μ_order."""
    r = elements[0].r
    identity = SignedPermutation.identity(r)
    members = set(elements)
    generators, span = [], {identity}
    for g in sorted(elements):
        if g not in span:
            generators.append(g)
            frontier, span = list(span), set(span)
            while frontier:
                fresh = []
                for h in frontier:
                    for gen in generators:
                        product = h.compose(gen)
                        if product not in span:
                            span.add(product)
                            fresh.append(product)
                frontier = fresh
    if span != members:
        raise InconsistencyError("mackey", "stabiliser is not closed under composition")

    choices = [[k for k in range(order) if (g.order() * k) % order == 0] for g in generators]
    characters, seen = [], set()
    for exponents in itertools.product(*choices):
        values = {identity: 0}
        frontier, consistent = [identity], True
        while frontier and consistent:
            fresh = []
            for h in frontier:
                for gen, k in zip(generators, exponents):
                    product, value = h.compose(gen), (values[h] + k) % order
                    if product in values:
                        if values[product] != value:
                            consistent = False
                            break
                    else:
                        values[product] = value
                        fresh.append(product)
                if not consistent:
                    break
            frontier = fresh
        if consistent:
            key = tuple(values[g] for g in sorted(elements))
            if key not in seen:
                seen.add(key)
                characters.append(values)
    if len(characters) != len(elements):
        raise InconsistencyError("mackey", f"found {len(characters)} characters for a group of order {len(elements)}")
    return sorted(characters, key=lambda v: tuple(v[g] for g in sorted(elements)))


def enumerate_irreps(pres: SemidirectPresentation) -> list[LittleGroupIrrep]:
    """
    One irrep per (A-orbit of κ, character λ of A_κ), trivial representation first.

    Raises
    ------
    UnsupportedStructureError
        If A is not abelian or does not normalise N.
    """
    _check_abelian(pres)
    k = len(pres.normal_indices)
    irreps, done = [], set()
    for kappa in itertools.product((1, -1), repeat=k):
        if kappa in done:
            continue
        orbit = tuple(sorted({pres.act(a, kappa) for a in pres.complement}, reverse=True))
        done.update(orbit)
        stabilizer = tuple(sorted(a for a in pres.complement if pres.act(a, kappa) == kappa))
        for lam in abelian_characters(stabilizer, pres.field_order):
            irreps.append(LittleGroupIrrep(
                index=len(irreps) + 1,
                kappa=kappa,
                orbit=orbit,
                stabilizer=stabilizer,
                lam=tuple(sorted(lam.items())),
            ))
    logger.info("%d irreducible representations of R(σ) (order %d)", len(irreps), pres.order)
    return irreps


def _inducing_values(pres: SemidirectPresentation, irrep: LittleGroupIrrep) -> dict[SignedPermutation, CyclotomicNumber]:
    """λ ⊗ κ on R_κ = A_κ ⋉ N."""
    stabilizer = set(irrep.stabilizer)
    lam = dict(irrep.lam)
    position = {j: k for k, j in enumerate(pres.normal_indices)}
    out = {}
    for h in pres.elements:
        a, signs = pres.split(h)
        if a not in stabilizer:
            continue
        value = CyclotomicNumber.root_of_unity(pres.field_order, lam[a])
        sign = 1
        for j in signs:
            sign *= irrep.kappa[position[j]]
        out[h] = value * sign
    return out


def induced_character(pres: SemidirectPresentation, irrep: LittleGroupIrrep, g: SignedPermutation) -> CyclotomicNumber:
    """χ_ρ(g) = (1/|R_κ|) Σ_{x ∈ R(σ), x⁻¹gx ∈ R_κ} (λ⊗κ)(x⁻¹gx)."""
    values = _inducing_values(pres, irrep)
    total = CyclotomicNumber.integer(pres.field_order, 0)
    for x in pres.elements:
        conjugate = x.inverse().compose(g).compose(x)
        if conjugate in values:
            total = total + values[conjugate]
    try:
        return total.exact_divide(len(values))
    except ArithmeticError as e:
        raise InconsistencyError("induced_character", str(e), lemma="induced character formula") from e


def induced_matrices(pres: SemidirectPresentation, irrep: LittleGroupIrrep) -> dict[SignedPermutation, list[list[CyclotomicNumber]]]:
    """The induced representation in the basis of left coset representatives of R_κ."""
    values = _inducing_values(pres, irrep)
    subgroup = set(values)
    reps, covered = [], set()
    for t in pres.elements:
        if t not in covered:
            reps.append(t)
            covered |= {t.compose(h) for h in subgroup}
    zero = CyclotomicNumber.integer(pres.field_order, 0)
    matrices = {}
    for g in pres.elements:
        matrix = [[zero] * len(reps) for _ in reps]
        for i, t_i in enumerate(reps):
            for j, t_j in enumerate(reps):
                h = t_j.inverse().compose(g).compose(t_i)
                if h in subgroup:
                    matrix[j][i] = values[h]
        matrices[g] = matrix
    return matrices


def trace(matrix: list[list[CyclotomicNumber]]) -> CyclotomicNumber:
    total = matrix[0][0] * 0
    for k in range(len(matrix)):
        total = total + matrix[k][k]
    return total


def conjugacy_classes(elements) -> list[tuple[SignedPermutation, ...]]:
    elements = sorted(elements)
    classes, seen = [], set()
    for g in elements:
        if g in seen:
            continue
        cls = tuple(sorted({x.compose(g).compose(x.inverse()) for x in elements}))
        seen.update(cls)
        classes.append(cls)
    return classes


@dataclass(frozen=True)
class CharacterTable:
    order: int
    classes: tuple[tuple[SignedPermutation, ...], ...]
    irreps: tuple[LittleGroupIrrep, ...]
    values: tuple[tuple[CyclotomicNumber, ...], ...]

    def value(self, irrep: LittleGroupIrrep, g: SignedPermutation) -> CyclotomicNumber:
        for k, cls in enumerate(self.classes):
            if g in cls:
                return self.values[irrep.index - 1][k]
        raise KeyError(f"{g} is not an element of R(σ)")


def _check_orthogonality(table: CharacterTable) -> None:
    n = len(table.irreps)
    if n != len(table.classes):
        raise InconsistencyError("character_table", f"{n} irreps but {len(table.classes)} classes", lemma="character orthogonality")
    if sum(irrep.dim ** 2 for irrep in table.irreps) != table.order:
        raise InconsistencyError("character_table", "Σ dim² ≠ |R(σ)|", lemma="character orthogonality")
    for i in range(n):
        for j in range(n):
            total = 0 * table.values[i][0]
            for k, cls in enumerate(table.classes):
                total = total + table.values[i][k] * table.values[j][k].conjugate() * len(cls)
            if total != (table.order if i == j else 0):
                raise InconsistencyError("character_table", f"rows {i + 1} and {j + 1} are not orthogonal", lemma="character orthogonality")
    for k, cls_k in enumerate(table.classes):
        for l, cls_l in enumerate(table.classes):
            total = 0 * table.values[0][0]
            for i in range(n):
                total = total + table.values[i][k] * table.values[i][l].conjugate()
            expected = table.order // len(cls_k) if k == l else 0
            if total != expected:
                raise InconsistencyError("character_table", f"columns {k + 1} and {l + 1} are not orthogonal", lemma="character orthogonality")


def character_table(pres: SemidirectPresentation) -> CharacterTable:
    irreps = tuple(enumerate_irreps(pres))
    classes = tuple(conjugacy_classes(pres.elements))
    values = tuple(tuple(induced_character(pres, irrep, cls[0]) for cls in classes) for irrep in irreps)
    table = CharacterTable(pres.order, classes, irreps, values)
    _check_orthogonality(table)
    logger.info("Character table of order %d with %d classes verified", pres.order, len(classes))
    return table
