# Libraries
import logging
from dataclasses import dataclass

# Modules
from rgroup.algebra.cyclotomic import CyclotomicNumber
from rgroup.algebra.signed_weyl import SignedPermutation
from rgroup.analysis.fixed_space import (
    CYCLIC_BY_SIGNS,
    closed_form_regular,
    coordinate_model,
    regular_case,
    regular_set,
    unitary_caveat,
)
from rgroup.analysis.mackey_rep import CharacterTable, LittleGroupIrrep, SemidirectPresentation, character_table
from rgroup.analysis.rgroup_core import RGroupAnalysis, compute_gamma_and_split
from rgroup.datum.data_loading import parse_datum
from rgroup.datum.fixtures import prime_family_document
from rgroup.errors import InconsistencyError

logger = logging.getLogger(__name__)

PRIME_FAMILY = (2, 3, 5, 7)


@dataclass(frozen=True)
class ComponentReport:
    irrep: LittleGroupIrrep
    multiplicity: int
    elliptic: bool
    witness: SignedPermutation | None = None
    witness_value: CyclotomicNumber | None = None
    # regular elements where the character vanishes; all of them when not elliptic
    zero_at: tuple[SignedPermutation, ...] = ()

    @property
    def name(self) -> str:
        return f"π({self.irrep.name})"


@dataclass(frozen=True)
class EllipticReport:
    components: tuple[ComponentReport, ...]
    regulars: tuple[SignedPermutation, ...]
    regular_case: str
    split_cocycle_assumed: bool
    unitary_caveat: bool

    @property
    def has_elliptic(self) -> bool:
        return any(c.elliptic for c in self.components)

    @property
    def all_elliptic(self) -> bool:
        return all(c.elliptic for c in self.components)

    @property
    def mixed(self) -> bool:
        return self.has_elliptic and not self.all_elliptic

    @property
    def elliptic_count(self) -> int:
        return sum(c.elliptic for c in self.components)

    @property
    def non_elliptic_count(self) -> int:
        return sum(not c.elliptic for c in self.components)

    @property
    def non_elliptic_dims(self) -> tuple[int, ...]:
        return tuple(sorted({c.irrep.dim for c in self.components if not c.elliptic}))


def classify(analysis: RGroupAnalysis, table: CharacterTable, regulars: list[SignedPermutation]) -> EllipticReport:
    """
    Split the components π(ρ) of the induced representation into elliptic and non-elliptic.

    π(ρ) is elliptic when the character of ρ is nonzero at some regular element; it
    occurs with multiplicity dim ρ.  When the datum does not declare τ generic the
    2-cocycle is assumed to split, and the report says so.
    """
    components = []
    for irrep in table.irreps:
        witness, value, zero_at = None, None, []
        for w in regulars:
            candidate = table.value(irrep, w)
            if candidate.is_zero():
                zero_at.append(w)
            elif witness is None:
                witness, value = w, candidate
        components.append(ComponentReport(irrep, irrep.dim, witness is not None, witness, value, tuple(zero_at)))
        logger.debug("%s: dim %d, elliptic=%s", irrep.name, irrep.dim, witness is not None)

    d = analysis.datum
    report = EllipticReport(
        components=tuple(components),
        regulars=tuple(regulars),
        regular_case=regular_case(analysis, regulars),
        split_cocycle_assumed=d.pi.tau is None or not d.pi.tau.generic,
        unitary_caveat=unitary_caveat(d, analysis),
    )
    logger.info(
        "%d elliptic and %d non-elliptic components",
        sum(c.elliptic for c in components), sum(not c.elliptic for c in components),
    )
    return report


def has_elliptic(analysis: RGroupAnalysis) -> bool:
    """Whether R(σ) has a regular element, i.e. an s_χ C_B with s_χ an r-cycle and |B| odd."""
    regulars = regular_set(coordinate_model(analysis.datum), analysis.r_sigma)
    by_cycle_type = any(closed_form_regular(w) for w in analysis.r_sigma)
    if bool(regulars) != by_cycle_type:
        raise InconsistencyError("has_elliptic", "rank and cycle type disagree", lemma="regularity criterion")
    return bool(regulars)


@dataclass(frozen=True)
class PrimeFamilyReport(EllipticReport):
    """The elliptic report of the prime family, tagged with p and |R(σ)|."""

    p: int = 0
    order: int = 0


def prime_family_report(p: int) -> PrimeFamilyReport:
    """
    Run the prime family R(σ) = Z_p ⋉ Z_2^p and check its counts.

    Parameters
    ----------
    p : int
        One of 2, 3, 5, 7.

    Returns
    -------
    PrimeFamilyReport
        2p elliptic components of dimension 1, and (2^p - 2)/p non-elliptic components
        of dimension p.

    Raises
    ------
    ValueError
        If p is not in the supported family.
    InconsistencyError
        If the computed counts differ from the expected ones.
    """
    if p not in PRIME_FAMILY:
        raise ValueError(f"p must be one of {PRIME_FAMILY}, got {p}")
    d = parse_datum(prime_family_document(p))
    analysis = compute_gamma_and_split(d)
    regulars = regular_set(coordinate_model(d), analysis.r_sigma)
    table = character_table(SemidirectPresentation.from_analysis(analysis))
    report = classify(analysis, table, regulars)
    result = PrimeFamilyReport(
        components=report.components,
        regulars=report.regulars,
        regular_case=report.regular_case,
        split_cocycle_assumed=report.split_cocycle_assumed,
        unitary_caveat=report.unitary_caveat,
        p=p,
        order=len(analysis.r_sigma),
    )

    expected_non_elliptic = (2 ** p - 2) // p
    if (
        result.regular_case != CYCLIC_BY_SIGNS
        or result.elliptic_count != 2 * p
        or any(c.irrep.dim != 1 for c in result.components if c.elliptic)
        or result.non_elliptic_count != expected_non_elliptic
        or result.non_elliptic_dims != (p,)
    ):
        raise InconsistencyError(
            "prime_family_report",
            f"p = {p}: {result.elliptic_count} elliptic, {result.non_elliptic_count} non-elliptic "
            f"(expected {2 * p} and {expected_non_elliptic})",
            lemma="prime family count",
        )
    logger.info(
        "Prime family p=%d: %d elliptic, %d non-elliptic of dim %d",
        p, result.elliptic_count, result.non_elliptic_count, p,
    )
    return result
