"""Which characters χ are realised by Weyl elements, and which of them Ŵ(σ) provably contains."""

# Libraries
import logging
from functools import lru_cache

# Modules
from rgroup.algebra.signed_weyl import SignedPermutation, generated_subgroup
from rgroup.algebra.twist_labels import Twist, stabilizer_X, tuples_equivalent, twist, weyl_act
from rgroup.datum.model import InducingDatum

logger = logging.getLogger(__name__)


@lru_cache(maxsize=256)
def realizing_pairs(d: InducingDatum) -> tuple[tuple[SignedPermutation, Twist], ...]:
    """All (w, χ) in W × X̂ with π^w ≃ πχ, in canonical order."""
    twisted: dict[tuple[str, ...], list[Twist]] = {}
    for chi in d.group.elements:
        twisted.setdefault(twist(d.pi, chi).components, []).append(chi)

    pairs = []
    for w in d.weyl:
        image = weyl_act(d.pi, w)
        for chi in twisted.get(image.components, []):
            if tuples_equivalent(image, twist(d.pi, chi)):
                pairs.append((w, chi))
    logger.debug("Found %d realising pairs over |W| = %d", len(pairs), len(d.weyl))
    return tuple(pairs)


def realizable_twists(d: InducingDatum) -> dict[Twist, SignedPermutation]:
    """Every realisable χ with its least witness w."""
    out: dict[Twist, SignedPermutation] = {}
    for w, chi in realizing_pairs(d):
        out.setdefault(chi, w)
    return dict(sorted(out.items()))


def x_pi(d: InducingDatum) -> frozenset[Twist]:
    return stabilizer_X(d.pi)


def w_sigma_elements(d: InducingDatum, w_sigma_hat: frozenset[Twist] | None = None) -> frozenset[SignedPermutation]:
    """W(σ) = {w ∈ W : π^w ≃ πχ for some χ ∈ Ŵ(σ)}."""
    characters = d.w_sigma_hat if w_sigma_hat is None else w_sigma_hat
    return frozenset(w for w, chi in realizing_pairs(d) if chi in characters)


def _even_on_every_cycle(w: SignedPermutation) -> bool:
    return all(c.sign_count % 2 == 0 for c in w.cycles())


def infer_w_sigma_hat(d: InducingDatum) -> frozenset[Twist]:
    """
    The part of Ŵ(σ) the inference rules can prove.

    W(π) ⊆ W(σ) always.  With m = 1 every realising w lies in W(σ).  With m = 0, or
    with τ generic or of multiplicity one, so does every realising w whose cycles each
    carry an even number of sign changes.  Ŵ(σ) is then read off the subgroup these
    elements generate.

    Parameters
    ----------
    d : InducingDatum
        The datum; its own `w_sigma_hat` is ignored.

    Returns
    -------
    frozenset of Twist
        Always contains X(π).
    """
    pairs = realizing_pairs(d)
    generators = {w for w, chi in pairs if chi == d.group.identity}
    tau = d.pi.tau
    if d.m == 1:
        rule = "m = 1: every realising element"
        generators |= {w for w, _ in pairs}
    elif d.m == 0 or tau.generic or tau.mult_one:
        rule = "even sign count on every cycle"
        generators |= {w for w, _ in pairs if _even_on_every_cycle(w)}
    else:
        rule = None
        logger.warning("No inference rule applies beyond W(π) ⊆ W(σ); Ŵ(σ) is taken to be X(π)")

    closure = generated_subgroup(generators, d.r)
    inferred = frozenset(chi for w, chi in pairs if w in closure)
    skipped = sorted({chi for _, chi in pairs} - inferred)
    if skipped and rule is not None:
        logger.warning(
            "Inference could not justify realisable twists %s; they are left out of Ŵ(σ)",
            ", ".join(d.format_twist(chi) for chi in skipped),
        )
    logger.info("Inferred Ŵ(σ) of order %d (rule: %s)", len(inferred), rule or "W(π) only")
    return inferred
