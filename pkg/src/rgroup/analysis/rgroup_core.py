"""
W(σ), W′, R(σ), R(π) and the splitting R(σ) = Γ_σ ⋉ R(π).

Every structural claim the computation relies on is re-checked on the actual groups;
a failed check raises InconsistencyError naming the result it contradicts.
"""

# Libraries
import logging
from collections import Counter
from dataclasses import dataclass, field

# Modules
from rgroup.algebra.signed_weyl import (
    SignedPermutation,
    closure_escape,
    generated_subgroup,
    is_positive_on,
    reflection,
)
from rgroup.algebra.twist_labels import Twist, tuples_equivalent, twist, weyl_act
from rgroup.datum.inference import realizing_pairs, w_sigma_elements, x_pi
from rgroup.datum.model import InducingDatum
from rgroup.errors import InconsistencyError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RGroupParts:
    w_prime: frozenset[SignedPermutation]
    w_pi: frozenset[SignedPermutation]
    r_pi: frozenset[SignedPermutation]
    b_pi: tuple[int, ...]
    r_sigma: frozenset[SignedPermutation]


@dataclass(frozen=True)
class ChiEntry:
    """The Γ_σ representative attached to one coset χX(π)."""

    chi: Twist
    s: SignedPermutation
    signs: tuple[int, ...]
    signs_chi: tuple[int, ...]
    w: SignedPermutation
    trace: tuple[str, ...] = field(default=(), compare=False)


@dataclass(frozen=True)
class RGroupAnalysis:
    datum: InducingDatum
    w_sigma: frozenset[SignedPermutation]
    x_pi: frozenset[Twist]
    parts: RGroupParts
    chi_entries: tuple[ChiEntry, ...]

    @property
    def w_prime(self) -> frozenset[SignedPermutation]:
        return self.parts.w_prime

    @property
    def r_pi(self) -> frozenset[SignedPermutation]:
        return self.parts.r_pi

    @property
    def b_pi(self) -> tuple[int, ...]:
        return self.parts.b_pi

    @property
    def r_sigma(self) -> frozenset[SignedPermutation]:
        return self.parts.r_sigma

    @property
    def gamma(self) -> tuple[SignedPermutation, ...]:
        return tuple(entry.w for entry in self.chi_entries)

    @property
    def coset_reps(self) -> tuple[Twist, ...]:
        return tuple(entry.chi for entry in self.chi_entries)


def compute_W_sigma(d: InducingDatum) -> frozenset[SignedPermutation]:
    """W(σ) as the set of realising elements, checked to be a group."""
    w_sigma = w_sigma_elements(d)
    escape = closure_escape(w_sigma, d.r)
    if escape is not None:
        raise InconsistencyError(
            "compute_W_sigma", f"W(σ) is not a group: it generates {escape}", lemma="W(σ) closure"
        )
    logger.info("|W(σ)| = %d inside |W(M)| = %d", len(w_sigma), len(d.weyl))
    return w_sigma


def compute_W_prime_and_R(d: InducingDatum, w_sigma: frozenset[SignedPermutation]) -> RGroupParts:
    """
    W′ from the reflections in Δ′, then R(σ) and R(π) as the elements positive on Δ′.

    Raises
    ------
    InconsistencyError
        If R(π) contains anything other than sign changes, or is not generated by
        the C_i it contains.
    """
    w_prime = generated_subgroup((reflection(alpha, d.r) for alpha in d.delta_prime), d.r)
    w_pi = frozenset(w for w, chi in realizing_pairs(d) if chi == d.group.identity)
    r_sigma = frozenset(w for w in w_sigma if is_positive_on(w, d.delta_prime))
    r_pi = frozenset(w for w in w_pi if is_positive_on(w, d.delta_prime))

    bad = sorted(w for w in r_pi if not w.is_sign_change)
    if bad:
        raise InconsistencyError(
            "compute_W_prime_and_R", f"R(π) contains {bad[0]}, which is not a sign change", lemma="permutation uniqueness",
        )
    b_pi = tuple(sorted(i for i in range(1, d.r + 1) if SignedPermutation.sign_change(d.r, [i]) in r_pi))
    if generated_subgroup((SignedPermutation.sign_change(d.r, [i]) for i in b_pi), d.r) != r_pi:
        raise InconsistencyError(
            "compute_W_prime_and_R", "R(π) is not generated by the C_i it contains", lemma="permutation uniqueness",
        )
    logger.info("|W′| = %d, |R(σ)| = %d, |R(π)| = %d, B(π) = %s", len(w_prime), len(r_sigma), len(r_pi), list(b_pi))
    return RGroupParts(w_prime, w_pi, r_pi, b_pi, r_sigma)


def _s_chi_walk(d: InducingDatum, chi: Twist) -> tuple[SignedPermutation, list[str]]:
    comps = d.pi.components
    algebra = d.algebra
    r = d.r

    omega = [i for i in range(1, r + 1)
             if algebra.twist_label(comps[i - 1], chi) in (comps[i - 1], algebra.eps_label(comps[i - 1]))]
    trace = [
        "Ω = {" + ",".join(map(str, omega)) + "}",
        "Ω₁ = {" + ",".join(str(i) for i in range(1, r + 1) if i not in omega) + "}",
    ]
    images = [0] * (r + 1)
    consumed: set[int] = set()
    while len(consumed) < r:
        start = min(i for i in range(1, r + 1) if i not in consumed)
        cycle = [start]
        anchor = comps[start - 1]
        current = start
        trace.append(f"start {start}")
        while True:
            anchor = algebra.twist_label(anchor, chi)
            open_slots = [i for i in range(1, r + 1) if i not in consumed]
            equal = [i for i in open_slots if comps[i - 1] == anchor]
            dual = [i for i in open_slots if algebra.eps_label(comps[i - 1]) == anchor]
            if equal:
                target, source = min(equal), "equal-label"
            elif dual:
                target, source = max(dual), "ε-label"
            else:
                raise InconsistencyError(
                    "compute_s_chi", f"no open index carries {anchor} or its ε-dual after {current}", lemma="w_χ construction",
                )
            trace.append(f"{current} → {target} ({source})")
            images[current] = target
            if target == start:
                break
            if target in cycle:
                raise InconsistencyError("compute_s_chi", f"chain from {start} cannot be closed", lemma="w_χ construction")
            cycle.append(target)
            current = target
        consumed.update(cycle)
    return SignedPermutation(tuple(images[1:])), trace


def compute_s_chi(d: InducingDatum, chi: Twist) -> SignedPermutation:
    """The permutation part s_χ, built by following labels through their χ-twists."""
    return _s_chi_walk(d, chi)[0]


def lemma_trace(d: InducingDatum, chi: Twist) -> list[str]:
    return _s_chi_walk(d, chi)[1]


def compute_w_chi(d: InducingDatum, chi: Twist, parts: RGroupParts) -> ChiEntry:
    """w_χ = s_χ C_{B_χ}: flip where only the ε-dual matches, then drop the part of B inside B(π)."""
    s, trace = _s_chi_walk(d, chi)
    comps = d.pi.components
    signs = tuple(
        i for i in range(1, d.r + 1)
        if comps[s.s(i) - 1] != d.algebra.twist_label(comps[i - 1], chi)
    )
    w = SignedPermutation(s.perm, signs)
    if not tuples_equivalent(weyl_act(d.pi, w), twist(d.pi, chi)):
        raise InconsistencyError("compute_w_chi", f"{w} does not carry π to π·{d.format_twist(chi)}", lemma="w_χ construction")
    if w not in parts.r_sigma:
        raise InconsistencyError("compute_w_chi", f"{w} realises χ but is not in R(σ)", lemma="w_χ construction")
    signs_chi = tuple(i for i in signs if i not in parts.b_pi)
    w_chi = SignedPermutation(s.perm, signs_chi)
    if w_chi not in parts.r_sigma:
        raise InconsistencyError("compute_w_chi", f"{w_chi} is not in R(σ)", lemma="minimal sign set")
    trace.append(f"c = C{{{','.join(map(str, signs))}}}, B_χ = {{{','.join(map(str, signs_chi))}}}")
    return ChiEntry(chi, s, signs, signs_chi, w_chi, tuple(trace))


def coset_representatives(d: InducingDatum, stabilizer: frozenset[Twist]) -> tuple[Twist, ...]:
    """Least element of each coset of X(π) in Ŵ(σ)."""
    reps, covered = [], set()
    for chi in sorted(d.w_sigma_hat):
        if chi not in covered:
            reps.append(chi)
            covered |= {d.group.multiply(chi, x) for x in stabilizer}
    return tuple(reps)


def characters_of(d: InducingDatum, elements) -> dict[SignedPermutation, set[Twist]]:
    """For each element, the χ ∈ Ŵ(σ) it realises."""
    out: dict[SignedPermutation, set[Twist]] = {w: set() for w in elements}
    for w, chi in realizing_pairs(d):
        if w in out and chi in d.w_sigma_hat:
            out[w].add(chi)
    return out


def _check_brute_force_s(d: InducingDatum, entry: ChiEntry, parts: RGroupParts, realised) -> None:
    coset = {d.group.multiply(entry.chi, x) for x in x_pi(d)}
    perms = {w.underlying for w in parts.r_sigma if realised[w] & coset}
    if perms != {entry.s}:
        found = ", ".join(sorted(map(str, perms)))
        raise InconsistencyError(
            "compute_s_chi", f"R(σ) elements realising {d.format_twist(entry.chi)} have permutations {{{found}}}, "
            f"construction gave {entry.s}", lemma="permutation uniqueness",
        )


def _check_quotient(d: InducingDatum, parts: RGroupParts, stabilizer: frozenset[Twist], reps, realised) -> None:
    """R(σ)/R_π(σ) ≅ Ŵ(σ)/X(π) through w ↦ the coset of χ with π^w ≃ πχ."""
    rep_of = {}
    for rep in reps:
        for x in stabilizer:
            rep_of[d.group.multiply(rep, x)] = rep
    image = {}
    for w in parts.r_sigma:
        cosets = {rep_of[chi] for chi in realised[w]}
        if len(cosets) != 1:
            raise InconsistencyError("compute_gamma_and_split", f"{w} realises {len(cosets)} cosets", lemma="coset isomorphism")
        image[w] = cosets.pop()
    for a in parts.r_sigma:
        for b in parts.r_sigma:
            if image[a.compose(b)] != rep_of[d.group.multiply(image[a], image[b])]:
                raise InconsistencyError("compute_gamma_and_split", f"w ↦ χ is not multiplicative at {a}, {b}",
                                         lemma="coset isomorphism")
    kernel = frozenset(w for w in parts.r_sigma if image[w] == d.group.identity)
    r_pi_sigma = parts.r_sigma & parts.w_pi
    if kernel != parts.r_pi or r_pi_sigma != parts.r_pi:
        raise InconsistencyError("compute_gamma_and_split", "kernel of R(σ) → Ŵ(σ)/X(π) is not R(π)", lemma="coset isomorphism")
    if set(image.values()) != set(reps):
        raise InconsistencyError("compute_gamma_and_split", "R(σ) → Ŵ(σ)/X(π) is not onto", lemma="coset isomorphism")


def _check_splitting(d: InducingDatum, parts: RGroupParts, entries: tuple[ChiEntry, ...], stabilizer) -> None:
    by_rep = {}
    for entry in entries:
        for x in stabilizer:
            by_rep[d.group.multiply(entry.chi, x)] = entry.w
    for a in entries:
        for b in entries:
            expected = by_rep[d.group.multiply(a.chi, b.chi)]
            if a.w.compose(b.w) != expected:
                raise InconsistencyError(
                    "compute_gamma_and_split",
                    f"w_χ1 w_χ2 = {a.w.compose(b.w)} but w_χ1χ2 = {expected} "
                    f"(χ1 = {d.format_twist(a.chi)}, χ2 = {d.format_twist(b.chi)})",
                    lemma="semidirect splitting",
                )
    gamma = {entry.w for entry in entries}
    identity = SignedPermutation.identity(d.r)
    if gamma & parts.r_pi != {identity}:
        raise InconsistencyError("compute_gamma_and_split", "Γ_σ meets R(π) nontrivially", lemma="semidirect splitting")
    if {g.compose(n) for g in gamma for n in parts.r_pi} != set(parts.r_sigma):
        raise InconsistencyError("compute_gamma_and_split", "Γ_σ R(π) ≠ R(σ)", lemma="semidirect splitting")
    for g in parts.r_sigma:
        for n in parts.r_pi:
            if g.conjugate(n) not in parts.r_pi:
                raise InconsistencyError("compute_gamma_and_split", f"R(π) is not normalised by {g}", lemma="semidirect splitting")


def compute_gamma_and_split(d: InducingDatum) -> RGroupAnalysis:
    """
    Full R-group analysis of a validated datum.

    Parameters
    ----------
    d : InducingDatum

    Returns
    -------
    RGroupAnalysis
        W(σ), W′, R(σ), R(π), B(π) and one ChiEntry per coset of X(π) in Ŵ(σ).

    Raises
    ------
    InconsistencyError
        When any of the group-theoretic cross-checks fails.
    """
    try:
        w_sigma = compute_W_sigma(d)
        parts = compute_W_prime_and_R(d, w_sigma)
        stabilizer = x_pi(d)
        reps = coset_representatives(d, stabilizer)
        realised = characters_of(d, parts.r_sigma)
        _check_quotient(d, parts, stabilizer, reps, realised)

        entries = []
        for chi in reps:
            entry = compute_w_chi(d, chi, parts)
            _check_brute_force_s(d, entry, parts, realised)
            logger.debug("χ = %s: s_χ = %s, w_χ = %s", d.format_twist(chi), entry.s, entry.w)
            entries.append(entry)
        entries = tuple(entries)
        _check_splitting(d, parts, entries, stabilizer)

        analysis = RGroupAnalysis(d, w_sigma, stabilizer, parts, entries)
        knapp_stein_check(analysis)
    except InconsistencyError:
        logger.exception("R-group analysis failed")
        raise
    logger.info("R(σ) ≅ %s, |Γ_σ| = %d", structure_label(analysis), len(entries))
    return analysis


def knapp_stein_check(analysis: RGroupAnalysis) -> None:
    """W(σ) = R(σ) ⋉ W′ with unique factorisation."""
    w_sigma, w_prime, r_sigma = analysis.w_sigma, analysis.w_prime, analysis.r_sigma
    identity = SignedPermutation.identity(analysis.datum.r)
    problem = None
    if not w_prime <= w_sigma:
        problem = "W′ ⊄ W(σ)"
    elif w_prime & r_sigma != {identity}:
        problem = "W′ ∩ R(σ) ≠ {1}"
    elif len(w_sigma) != len(w_prime) * len(r_sigma):
        problem = f"|W(σ)| = {len(w_sigma)} but |W′|·|R(σ)| = {len(w_prime) * len(r_sigma)}"
    elif {r.compose(w) for r in r_sigma for w in w_prime} != set(w_sigma):
        problem = "R(σ)W′ ≠ W(σ)"
    if problem:
        raise InconsistencyError("knapp_stein_check", problem, lemma="Knapp-Stein decomposition")


def is_abelian(analysis: RGroupAnalysis) -> bool:
    """R(σ) is abelian exactly when every w_χ fixes B(π) pointwise."""
    by_theory = all(w.s(i) == i for w in analysis.gamma for i in analysis.b_pi)
    elements = sorted(analysis.r_sigma)
    by_force = all(a.compose(b) == b.compose(a) for a in elements for b in elements)
    if by_theory != by_force:
        raise InconsistencyError("is_abelian", "fixed-point criterion disagrees with commutation", lemma="B(π) stability")
    return by_force


def abelian_invariants(elements, compose, identity) -> list[int]:
    """Invariant factors of a finite abelian group, from counts of p^k-torsion."""
    elements = list(elements)

    def power(g, k):
        out = identity
        for _ in range(k):
            out = compose(out, g)
        return out

    size = len(elements)
    primes = [p for p in range(2, size + 1) if size % p == 0 and all(p % q for q in range(2, p))]
    factors: list[int] = []
    for p in primes:
        # number of cyclic factors of order ≥ p^k is log_p(|G[p^k]| / |G[p^(k-1)]|)
        counts, k, previous = [], 1, 1
        while True:
            torsion = sum(1 for g in elements if power(g, p ** k) == identity)
            if torsion == previous:
                break
            ratio, rank = torsion // previous, 0
            while ratio > 1:
                ratio //= p
                rank += 1
            counts.append(rank)
            previous, k = torsion, k + 1
        ranks = Counter()
        for k, at_least in enumerate(counts, start=1):
            following = counts[k] if k < len(counts) else 0
            ranks[p ** k] = at_least - following
        factors += [q for q, c in sorted(ranks.items()) for _ in range(c)]

    # combine prime powers into invariant factors d_1 | d_2 | ...
    by_prime: dict[int, list[int]] = {}
    for q in factors:
        p = next(p for p in primes if q % p == 0)
        by_prime.setdefault(p, []).append(q)
    length = max((len(v) for v in by_prime.values()), default=0)
    invariants = [1] * length
    for powers in by_prime.values():
        for k, q in enumerate(sorted(powers, reverse=True)):
            invariants[length - 1 - k] *= q
    return [d for d in invariants if d > 1]


def _cyclic_product(invariants: list[int]) -> str:
    if not invariants:
        return "1"
    counts = Counter(invariants)
    return "×".join(f"Z{q}^{c}" if c > 1 else f"Z{q}" for q, c in sorted(counts.items()))


def structure_label(analysis: RGroupAnalysis) -> str:
    """Isomorphism type of R(σ), e.g. 'Z3 ⋉ Z2^3'."""
    r = analysis.datum.r
    gamma = _cyclic_product(
        abelian_invariants(analysis.gamma, lambda a, b: a.compose(b), SignedPermutation.identity(r))
    )
    k = len(analysis.b_pi)
    normal = "1" if k == 0 else ("Z2" if k == 1 else f"Z2^{k}")
    if gamma == "1":
        return normal
    if k == 0:
        return gamma
    acts_trivially = all(w.s(i) == i for w in analysis.gamma for i in analysis.b_pi)
    return f"{gamma} {'×' if acts_trivially else '⋉'} {normal}"
