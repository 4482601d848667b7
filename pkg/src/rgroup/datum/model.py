# Libraries
from dataclasses import dataclass
from functools import cached_property

# Modules
from rgroup.algebra.signed_weyl import Root, SignedPermutation, weyl_group
from rgroup.algebra.twist_labels import LabelAlgebra, PiTuple, Twist, TwistGroup

INFER = "infer"
EXPLICIT = "explicit"


@dataclass(frozen=True)
class InducingDatum:
    """
    Everything the R-group computation needs: the Levi shape, the label algebra,
    the tuple π, the vanishing set Δ′ and the character group Ŵ(σ).

    `w_sigma_hat` is always resolved; `w_sigma_hat_mode` says whether it was given
    explicitly or derived by the inference rules.
    """

    blocks: tuple[int, ...]
    m: int
    algebra: LabelAlgebra
    pi: PiTuple
    delta_prime: frozenset[Root]
    w_sigma_hat_mode: str
    w_sigma_hat: frozenset[Twist]
    notes: str = ""
    strict_diff: bool = False

    @property
    def r(self) -> int:
        return len(self.blocks)

    @property
    def n(self) -> int:
        return 2 * sum(self.blocks) + self.m

    @property
    def parity(self) -> str:
        return "even" if self.n % 2 == 0 else "odd"

    @property
    def group(self) -> TwistGroup:
        return self.algebra.group

    @cached_property
    def weyl(self) -> tuple[SignedPermutation, ...]:
        return weyl_group(self.blocks)

    def format_twist(self, chi: Twist) -> str:
        return self.group.format_word(chi)
