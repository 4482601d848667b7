"""
Fixed spaces of R(σ) elements on 𝔞_M, and the regular set.

A point of 𝔞_M has one complex coordinate a_i = x_i + i·y_i per block.  The element
s·C_B sends a_i to the slot s(i), replacing x_i by -x_i when i ∈ B, and the point must
satisfy the trace condition Σ n_i y_i = 0.  We work with the 2r real coordinates
(x_1, y_1, ..., x_r, y_r).
"""

# Libraries
import logging
from dataclasses import dataclass

from sympy import Matrix, eye, zeros

# Modules
from rgroup.algebra.signed_weyl import SignedPermutation
from rgroup.errors import InconsistencyError

logger = logging.getLogger(__name__)

NONE, CYCLIC, CYCLIC_BY_SIGNS = "none", "cyclic", "cyclic-by-signs"


@dataclass(frozen=True)
class CoordinateModel:
    blocks: tuple[int, ...]
    m: int = 0

    @property
    def r(self) -> int:
        return len(self.blocks)


def coordinate_model(d) -> CoordinateModel:
    return CoordinateModel(d.blocks, d.m)


def action_matrix(model: CoordinateModel, w: SignedPermutation) -> Matrix:
    r = model.r
    matrix = zeros(2 * r, 2 * r)
    for i in range(1, r + 1):
        target = w.s(i) - 1
        matrix[2 * target, 2 * (i - 1)] = -1 if i in w.signs else 1
        matrix[2 * target + 1, 2 * (i - 1) + 1] = 1
    return matrix


def constraint_row(model: CoordinateModel) -> Matrix:
    row = zeros(1, 2 * model.r)
    for i, n_i in enumerate(model.blocks):
        row[0, 2 * i + 1] = n_i
    return row


def _system(model: CoordinateModel, w: SignedPermutation) -> Matrix:
    return (action_matrix(model, w) - eye(2 * model.r)).col_join(constraint_row(model))


def fixed_space_dim(model: CoordinateModel, w: SignedPermutation) -> int:
    """dim 𝔞_w, by exact rank."""
    return 2 * model.r - _system(model, w).rank()


def fixed_space_basis(model: CoordinateModel, w: SignedPermutation) -> list[Matrix]:
    return _system(model, w).nullspace()


def is_regular(model: CoordinateModel, w: SignedPermutation) -> bool:
    return fixed_space_dim(model, w) == 0


def closed_form_regular(w: SignedPermutation) -> bool:
    """Regular exactly when s is an r-cycle and |B| is odd."""
    return w.is_r_cycle and len(w.signs) % 2 == 1


def fixed_vector(model: CoordinateModel, w: SignedPermutation) -> Matrix | None:
    """
    An explicit nonzero vector of 𝔞_w for a non-regular w, or None when w is regular.

    With two or more cycles, put y = N_2 on the first orbit and y = -N_1 on the second,
    where N_k is the total block size of orbit k.  For an r-cycle with |B| even, start
    from x = 1 and carry the sign of each step around the cycle.
    """
    if closed_form_regular(w):
        return None
    vector = zeros(2 * model.r, 1)
    cycles = w.cycles()
    if len(cycles) >= 2:
        first, second = cycles[0].cycle, cycles[1].cycle
        n_first = sum(model.blocks[i - 1] for i in first)
        n_second = sum(model.blocks[i - 1] for i in second)
        for i in first:
            vector[2 * (i - 1) + 1] = n_second
        for i in second:
            vector[2 * (i - 1) + 1] = -n_first
    else:
        value, i = 1, 1
        for _ in range(model.r):
            vector[2 * (i - 1)] = value
            if i in w.signs:
                value = -value
            i = w.s(i)

    if action_matrix(model, w) * vector != vector or (constraint_row(model) * vector)[0] != 0:
        raise InconsistencyError("fixed_vector", f"closed-form vector is not fixed by {w}", lemma="regularity criterion")
    return vector


def regular_set(model: CoordinateModel, group) -> list[SignedPermutation]:
    """
    R(σ)_reg, computed by exact rank and checked against the closed form.

    Raises
    ------
    InconsistencyError
        If rank and closed form disagree on any element.
    """
    regulars = []
    for w in sorted(group):
        by_rank = is_regular(model, w)
        if by_rank != closed_form_regular(w):
            raise InconsistencyError(
                "regular_set", f"{w}: rank says regular={by_rank}, cycle type says {not by_rank}", lemma="regularity criterion"
            )
        if by_rank:
            regulars.append(w)
    logger.info("%d of %d elements are regular", len(regulars), len(group))
    return regulars


def regular_case(analysis, regulars: list[SignedPermutation]) -> str:
    """
    Which of the two shapes R(σ) takes when it has regular elements.

    'cyclic' when R(π) is trivial, so R(σ) = Γ_σ; 'cyclic-by-signs' when R(π) is the
    whole of Z_2^r.  No other R(π) can occur once an r-cycle lies in R(σ).
    """
    if not regulars:
        return NONE
    if len(analysis.r_pi) == 1:
        return CYCLIC
    if len(analysis.b_pi) != analysis.datum.r:
        raise InconsistencyError(
            "regular_case", f"regular elements exist but B(π) = {list(analysis.b_pi)} is proper", lemma="B(π) stability"
        )
    return CYCLIC_BY_SIGNS


def unitary_caveat(d, analysis) -> bool:
    """True for the Siegel-type case m = 0, r = 1, |R(σ)| = 2."""
    return d.m == 0 and d.r == 1 and len(analysis.r_sigma) == 2
