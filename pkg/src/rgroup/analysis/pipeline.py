# Libraries
import logging
from dataclasses import dataclass

# Modules
from rgroup.algebra.signed_weyl import SignedPermutation
from rgroup.analysis.elliptic_class import EllipticReport, classify
from rgroup.analysis.fixed_space import CoordinateModel, coordinate_model, regular_set
from rgroup.analysis.mackey_rep import CharacterTable, SemidirectPresentation, character_table
from rgroup.analysis.rgroup_core import RGroupAnalysis, compute_gamma_and_split
from rgroup.datum.model import InducingDatum
from rgroup.errors import InconsistencyError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PipelineResult:
    datum: InducingDatum
    analysis: RGroupAnalysis
    model: CoordinateModel
    regulars: tuple[SignedPermutation, ...]
    presentation: SemidirectPresentation
    table: CharacterTable
    elliptic: EllipticReport


def run_pipeline(d: InducingDatum) -> PipelineResult:
    """R-group, regular set, character table and elliptic split for one datum."""
    logger.info("Pipeline started for r=%d, blocks=%s", d.r, list(d.blocks))
    try:
        analysis = compute_gamma_and_split(d)
        model = coordinate_model(d)
        regulars = regular_set(model, analysis.r_sigma)
        presentation = SemidirectPresentation.from_analysis(analysis)
        if set(presentation.elements) != set(analysis.r_sigma):
            raise InconsistencyError("run_pipeline", "Γ_σ ⋉ R(π) does not reproduce R(σ)", lemma="semidirect splitting")
        table = character_table(presentation)
        elliptic = classify(analysis, table, regulars)
    except Exception:
        logger.exception("Pipeline failed")
        raise
    logger.info("Pipeline finished: |R(σ)| = %d, %d components", len(analysis.r_sigma), len(table.irreps))
    return PipelineResult(d, analysis, model, tuple(regulars), presentation, table, elliptic)
