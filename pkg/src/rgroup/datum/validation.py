# Libraries
import logging

# Modules
from rgroup.algebra.signed_weyl import Root, RootKind, act_on_root
from rgroup.datum.inference import realizing_pairs, w_sigma_elements, x_pi
from rgroup.datum.model import INFER, InducingDatum
from rgroup.errors import ValidationError, Violation

logger = logging.getLogger(__name__)


def delta_prime_violations(d: InducingDatum) -> list[Violation]:
    """Necessary conditions for μ_α(π) = 0, one rule per root kind."""
    algebra, comps = d.algebra, d.pi.components
    out = []
    for alpha in sorted(d.delta_prime):
        where = f"delta_prime[{alpha}]"
        if alpha.kind is RootKind.DIFF:
            i, j = alpha.i, alpha.j
            if comps[i - 1] != comps[j - 1]:
                out.append(Violation("delta-prime.diff", where, f"{alpha.name} ∈ Δ′ but π_{i} ≄ π_{j}"))
        elif alpha.kind is RootKind.SUM:
            i, j = alpha.i, alpha.j
            if comps[j - 1] != algebra.eps_label(comps[i - 1]):
                out.append(Violation("delta-prime.sum", where, f"{alpha.name} ∈ Δ′ but π_{j} ≄ π_{i}^ε"))
        elif not algebra.is_self_dual(comps[alpha.i - 1]):
            out.append(Violation("delta-prime.short", where, f"{alpha.name} ∈ Δ′ but π_{alpha.i}^ε ≄ π_{alpha.i}"))
    return out


def strict_diff_violations(d: InducingDatum) -> list[Violation]:
    """The converse Diff rule: π_i ≃ π_j forces e_i - e_j into Δ′."""
    comps = d.pi.components
    out = []
    for i in range(1, d.r + 1):
        for j in range(i + 1, d.r + 1):
            if comps[i - 1] == comps[j - 1] and Root.diff(i, j) not in d.delta_prime:
                out.append(Violation(
                    "delta-prime.strict-diff", "delta_prime",
                    f"π_{i} ≃ π_{j} but Diff({i},{j}) ∉ Δ′",
                ))
    return out


def w_sigma_hat_violations(d: InducingDatum) -> list[Violation]:
    group = d.group
    where = "w_sigma_hat" if d.w_sigma_hat_mode != INFER else "w_sigma_hat(inferred)"
    out = []
    if not group.is_subgroup(d.w_sigma_hat):
        out.append(Violation("w-sigma-hat.subgroup", where, "Ŵ(σ) is not a subgroup of X̂"))
    missing = sorted(x_pi(d) - d.w_sigma_hat)
    if missing:
        out.append(Violation(
            "w-sigma-hat.contains-x-pi", where,
            f"X(π) ⊄ Ŵ(σ): missing {', '.join(group.format_word(chi) for chi in missing)}",
        ))
    realizable = {chi for _, chi in realizing_pairs(d)}
    for chi in sorted(d.w_sigma_hat - realizable):
        out.append(Violation(
            "w-sigma-hat.realizable", where,
            f"no w ∈ W has π^w ≃ π·{group.format_word(chi)}",
        ))
    return out


def stability_violations(d: InducingDatum) -> list[Violation]:
    """Δ′ must be carried into ±Δ′ by every element of W(σ)."""
    out = []
    for w in sorted(w_sigma_elements(d)):
        for alpha in sorted(d.delta_prime):
            image = act_on_root(w, alpha)
            if image.root not in d.delta_prime:
                out.append(Violation(
                    "delta-prime.stability", f"delta_prime[{alpha}]",
                    f"{w} ∈ W(σ) maps {alpha.name} to {image}, which is not ±Δ′",
                ))
                return out
    return out


def validate_datum(d: InducingDatum) -> list[Violation]:
    """Run every semantic rule; stability is only checked once Ŵ(σ) itself is sound."""
    violations = delta_prime_violations(d)
    if d.strict_diff:
        violations += strict_diff_violations(d)
    hat = w_sigma_hat_violations(d)
    violations += hat
    if not hat:
        violations += stability_violations(d)
    logger.info("Datum validation finished with %d violation(s)", len(violations))
    return violations


def check_datum(d: InducingDatum) -> InducingDatum:
    violations = validate_datum(d)
    if violations:
        for v in violations:
            logger.debug("Violation %s", v)
        raise ValidationError(violations)
    return d
