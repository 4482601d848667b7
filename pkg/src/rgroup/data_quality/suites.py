"""
Brute-force oracle suites.

Each suite re-derives one structural property of the R-group by exhaustive search over
the actual groups and compares it with what the analysis modules return.  Suites run
over the generated corpus (see generators.py), over data-free sweeps of W(M), or over
the prime family, and report the first counterexample they meet.
"""

# Libraries
import itertools
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

# Modules
from rgroup.algebra.signed_weyl import SignedPermutation, weyl_group
from rgroup.algebra.twist_labels import tuples_equivalent, twist, weyl_act
from rgroup.analysis.elliptic_class import PRIME_FAMILY, has_elliptic, prime_family_report
from rgroup.analysis.fixed_space import (
    CoordinateModel,
    closed_form_regular,
    coordinate_model,
    fixed_space_dim,
    fixed_vector,
)
from rgroup.analysis.mackey_rep import (
    SemidirectPresentation,
    character_table,
    induced_character,
    induced_matrices,
    trace,
)
from rgroup.analysis.rgroup_core import (
    RGroupAnalysis,
    characters_of,
    compute_gamma_and_split,
    compute_s_chi,
    is_abelian,
)
from rgroup.data_quality.generators import corpus_documents
from rgroup.datum.data_loading import parse_datum
from rgroup.datum.model import InducingDatum
from rgroup.errors import InconsistencyError, ValidationError

logger = logging.getLogger(__name__)

DATUM_SCOPES = ("uniqueness", "construction", "minimality", "quotient", "splitting", "stability", "regularity", "mackey")
SCOPES = DATUM_SCOPES + ("prime", "all")
# short names accepted on the command line
SCOPE_ALIASES = {
    "lemma33": "uniqueness",
    "lemma36": "minimality",
    "thm37": "splitting",
    "thm39": "regularity",
    "prop32": "quotient",
}
MACKEY_MATRIX_LIMIT = 48

# which suite a failed internal cross-check belongs to
_CHECK_SCOPES = {
    "permutation uniqueness": "uniqueness",
    "w_χ construction": "construction",
    "minimal sign set": "minimality",
    "coset isomorphism": "quotient",
    "semidirect splitting": "splitting",
    "B(π) stability": "stability",
    "regularity criterion": "regularity",
    "character orthogonality": "mackey",
}


@dataclass
class SuiteResult:
    scope: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    skipped: int = 0
    counterexample: dict | None = None

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "scope": self.scope,
            "passed": self.passed,
            "cases": self.cases,
            "skipped": self.skipped,
            "failures": list(self.failures),
            "counterexample": self.counterexample,
        }


def _coset_map(analysis: RGroupAnalysis) -> dict:
    d = analysis.datum
    out = {}
    for rep in analysis.coset_reps:
        for x in analysis.x_pi:
            out[d.group.multiply(rep, x)] = rep
    return out


def check_uniqueness(analysis: RGroupAnalysis) -> list[str]:
    """Every w ∈ R(σ) realising χ has permutation part s_χ."""
    d = analysis.datum
    failures = []
    for w, characters in sorted(characters_of(d, analysis.r_sigma).items()):
        for chi in sorted(characters):
            s = compute_s_chi(d, chi)
            if w.underlying != s:
                failures.append(f"{w} realises {d.format_twist(chi)} but s_χ = {s}")
    return failures


def check_construction(analysis: RGroupAnalysis) -> list[str]:
    """s_χ·c realises χ, lies in R(σ), and the flips are exactly where labels fail to match."""
    d = analysis.datum
    failures = []
    for entry in analysis.chi_entries:
        w = SignedPermutation(entry.s.perm, entry.signs)
        name = d.format_twist(entry.chi)
        if not tuples_equivalent(weyl_act(d.pi, w), twist(d.pi, entry.chi)):
            failures.append(f"χ = {name}: {w} does not carry π to πχ")
        if w not in analysis.r_sigma:
            failures.append(f"χ = {name}: {w} is not in R(σ)")
        if entry.w not in analysis.r_sigma:
            failures.append(f"χ = {name}: w_χ = {entry.w} is not in R(σ)")
    return failures


def check_minimality(analysis: RGroupAnalysis) -> list[str]:
    """B_χ is disjoint from B(π) and contained in every B₁ with s_χ C_{B₁} ∈ R(σ) realising χX(π)."""
    d = analysis.datum
    coset_of = _coset_map(analysis)
    realised = characters_of(d, analysis.r_sigma)
    failures = []
    for entry in analysis.chi_entries:
        name = d.format_twist(entry.chi)
        if set(entry.signs_chi) & set(analysis.b_pi):
            failures.append(f"χ = {name}: B_χ = {list(entry.signs_chi)} meets B(π)")
        for k in range(d.r + 1):
            for subset in itertools.combinations(range(1, d.r + 1), k):
                w = SignedPermutation(entry.s.perm, subset)
                if w not in analysis.r_sigma:
                    continue
                if not any(coset_of.get(chi) == entry.chi for chi in realised[w]):
                    continue
                if not set(entry.signs_chi) <= set(subset):
                    failures.append(f"χ = {name}: B_χ = {list(entry.signs_chi)} ⊄ B₁ = {list(subset)}")
    return failures


def check_quotient(analysis: RGroupAnalysis) -> list[str]:
    """|R(σ)| = |R(π)|·[Ŵ(σ) : X(π)] and w ↦ χX(π) is a homomorphism with kernel R(π)."""
    d = analysis.datum
    coset_of = _coset_map(analysis)
    realised = characters_of(d, analysis.r_sigma)
    failures = []
    index = len(d.w_sigma_hat) // len(analysis.x_pi)
    if len(analysis.r_sigma) != len(analysis.r_pi) * index:
        failures.append(f"|R(σ)| = {len(analysis.r_sigma)} but |R(π)|·[Ŵ(σ):X(π)] = {len(analysis.r_pi) * index}")
    image = {}
    for w in analysis.r_sigma:
        cosets = {coset_of[chi] for chi in realised[w] if chi in coset_of}
        if len(cosets) != 1:
            failures.append(f"{w} realises {len(cosets)} cosets of X(π)")
            return failures
        image[w] = cosets.pop()
    for a in analysis.r_sigma:
        for b in analysis.r_sigma:
            if image[a.compose(b)] != coset_of[d.group.multiply(image[a], image[b])]:
                failures.append(f"coset map is not multiplicative at {a}, {b}")
                return failures
    kernel = {w for w, chi in image.items() if chi == d.group.identity}
    if kernel != set(analysis.r_pi):
        failures.append("kernel of the coset map is not R(π)")
    return failures


def check_splitting(analysis: RGroupAnalysis) -> list[str]:
    """w_χ1 w_χ2 = w_χ1χ2, Γ_σ ∩ R(π) = 1, Γ_σ R(π) = R(σ) and R(π) is normal."""
    d = analysis.datum
    coset_of = _coset_map(analysis)
    by_rep = {entry.chi: entry.w for entry in analysis.chi_entries}
    failures = []
    for a, b in itertools.product(analysis.chi_entries, repeat=2):
        expected = by_rep[coset_of[d.group.multiply(a.chi, b.chi)]]
        if a.w.compose(b.w) != expected:
            failures.append(
                f"w_χ1 w_χ2 = {a.w.compose(b.w)} ≠ {expected} for χ1 = {d.format_twist(a.chi)}, "
                f"χ2 = {d.format_twist(b.chi)}"
            )
    gamma = set(analysis.gamma)
    if gamma & set(analysis.r_pi) != {SignedPermutation.identity(d.r)}:
        failures.append("Γ_σ ∩ R(π) ≠ 1")
    if {g.compose(n) for g in gamma for n in analysis.r_pi} != set(analysis.r_sigma):
        failures.append("Γ_σ R(π) ≠ R(σ)")
    if any(g.conjugate(n) not in analysis.r_pi for g in analysis.r_sigma for n in analysis.r_pi):
        failures.append("R(π) is not normal in R(σ)")
    return failures


def check_stability(analysis: RGroupAnalysis) -> list[str]:
    """s(B(π)) = B(π) for every w ∈ R(σ); no C_j with j ∉ B(π) and π_j self-dual lies in R(σ)."""
    d = analysis.datum
    b_pi = set(analysis.b_pi)
    failures = [f"{w} moves B(π) = {sorted(b_pi)}" for w in sorted(analysis.r_sigma) if {w.s(i) for i in b_pi} != b_pi]
    for j in range(1, d.r + 1):
        if j in b_pi or not d.algebra.is_self_dual(d.pi.components[j - 1]):
            continue
        if SignedPermutation.sign_change(d.r, [j]) in analysis.r_sigma:
            failures.append(f"C{{{j}}} ∈ R(σ) with j ∉ B(π) and π_{j} self-dual")
    try:
        is_abelian(analysis)
    except InconsistencyError as e:
        failures.append(str(e))
    return failures


def _regularity_failures(model: CoordinateModel, elements) -> list[str]:
    failures = []
    for w in elements:
        by_rank = fixed_space_dim(model, w) == 0
        if by_rank != closed_form_regular(w):
            failures.append(f"blocks {list(model.blocks)}: {w} has regular={by_rank} by rank")
            continue
        if not by_rank:
            try:
                vector = fixed_vector(model, w)
            except InconsistencyError as e:
                failures.append(str(e))
                continue
            if vector is None or vector.is_zero_matrix:
                failures.append(f"blocks {list(model.blocks)}: no fixed vector for non-regular {w}")
    return failures


def check_regularity(analysis: RGroupAnalysis) -> list[str]:
    """Rank of the fixed-space system against the r-cycle/odd-|B| criterion, over R(σ)."""
    failures = _regularity_failures(coordinate_model(analysis.datum), sorted(analysis.r_sigma))
    try:
        has_elliptic(analysis)
    except InconsistencyError as e:
        failures.append(str(e))
    return failures


def _matrix_product(a, b):
    size = len(a)
    out = []
    for i in range(size):
        row = []
        for j in range(size):
            total = a[i][0] * 0
            for k in range(size):
                total = total + a[i][k] * b[k][j]
            row.append(total)
        out.append(row)
    return out


def check_mackey(analysis: RGroupAnalysis) -> list[str]:
    """Character formula against traces of explicit induced matrices, which must form a representation."""
    presentation = SemidirectPresentation.from_analysis(analysis)
    if set(presentation.elements) != set(analysis.r_sigma):
        return ["Γ_σ ⋉ R(π) does not reproduce R(σ)"]
    table = character_table(presentation)
    if presentation.order > MACKEY_MATRIX_LIMIT:
        return []
    failures = []
    for irrep in table.irreps:
        matrices = induced_matrices(presentation, irrep)
        for g in presentation.elements:
            if trace(matrices[g]) != induced_character(presentation, irrep, g):
                failures.append(f"{irrep.name}: trace at {g} differs from the character formula")
        for g, h in itertools.product(presentation.elements, repeat=2):
            if _matrix_product(matrices[g], matrices[h]) != matrices[g.compose(h)]:
                failures.append(f"{irrep.name}: ρ({g})ρ({h}) ≠ ρ({g.compose(h)})")
                break
    return failures


DATUM_CHECKS = {
    "uniqueness": check_uniqueness,
    "construction": check_construction,
    "minimality": check_minimality,
    "quotient": check_quotient,
    "splitting": check_splitting,
    "stability": check_stability,
    "regularity": check_regularity,
    "mackey": check_mackey,
}


def _run_checks(d: InducingDatum, scopes: tuple[str, ...]) -> dict[str, tuple[str, list[str]]]:
    """Status per scope: ('ok' | 'skipped', failure messages)."""
    try:
        analysis = compute_gamma_and_split(d)
    except InconsistencyError as e:
        if e.stage == "compute_W_prime_and_R":
            logger.debug("Inadmissible datum: %s", e)
            return {scope: ("skipped", []) for scope in scopes}
        owner = _CHECK_SCOPES.get(e.lemma)
        targets = {owner} if owner in scopes else set(scopes)
        return {scope: ("ok", [str(e)] if scope in targets else []) for scope in scopes}

    out = {}
    for scope in scopes:
        try:
            out[scope] = ("ok", DATUM_CHECKS[scope](analysis))
        except InconsistencyError as e:
            out[scope] = ("ok", [str(e)])
    return out


def _check_document(document: dict, scopes: tuple[str, ...]) -> dict[str, tuple[str, list[str]]]:
    try:
        d = parse_datum(document)
    except ValidationError:
        return {scope: ("skipped", []) for scope in scopes}
    return _run_checks(d, scopes)


def datum_suites(d: InducingDatum) -> list[SuiteResult]:
    """Every per-datum suite on a single datum."""
    results = []
    for scope, (status, failures) in _run_checks(d, DATUM_SCOPES).items():
        result = SuiteResult(scope)
        if status == "skipped":
            result.skipped = 1
        else:
            result.cases = 1
            result.failures = failures
        results.append(result)
    return results


def block_patterns(r_max: int) -> list[tuple[int, ...]]:
    """All-ones and (2, 1, ..., 1) block patterns up to rank r_max."""
    patterns = []
    for r in range(1, r_max + 1):
        patterns.append((1,) * r)
        patterns.append((2,) + (1,) * (r - 1))
    return patterns


def regularity_sweep(r_max: int, m: int = 2) -> SuiteResult:
    """The regularity criterion over all of W(M), independent of any datum."""
    result = SuiteResult("regularity")
    for blocks in block_patterns(r_max):
        elements = weyl_group(blocks)
        result.cases += len(elements)
        failures = _regularity_failures(CoordinateModel(blocks, m), elements)
        if failures and result.counterexample is None:
            result.counterexample = {"blocks": list(blocks), "m": m}
        result.failures += failures
    return result


def prime_suite(r_max: int) -> SuiteResult:
    result = SuiteResult("prime")
    for p in PRIME_FAMILY:
        if p > r_max:
            result.skipped += 1
            continue
        result.cases += 1
        try:
            prime_family_report(p)
        except InconsistencyError as e:
            result.failures.append(str(e))
    return result


def resolve_scope(scope: str) -> str:
    scope = SCOPE_ALIASES.get(scope, scope)
    if scope not in SCOPES:
        raise ValueError(f"unknown oracle scope {scope!r}; choose from {', '.join(SCOPES)}")
    return scope


def _expand(scope: str) -> tuple[str, ...]:
    scope = resolve_scope(scope)
    return DATUM_SCOPES + ("prime",) if scope == "all" else (scope,)


def run_oracle(scope: str, r_max: int, workers: int = 1) -> list[SuiteResult]:
    """
    Run one oracle scope, or all of them, over the corpus up to rank `r_max`.

    Parameters
    ----------
    scope : str
        One of SCOPES or a key of SCOPE_ALIASES.
    r_max : int
        Largest rank for the generated corpus and the W(M) sweeps.
    workers : int, optional
        Process count for the per-datum suites; 1 runs in-process.

    Returns
    -------
    list of SuiteResult
        One per scope, in DATUM_SCOPES order with 'prime' last.
    """
    scopes = _expand(scope)
    datum_scopes = tuple(s for s in scopes if s in DATUM_SCOPES)
    results = {s: SuiteResult(s) for s in scopes}

    if datum_scopes:
        stats = Counter()
        documents = list(corpus_documents(r_max, stats))
        logger.info("Checking %d corpus data for scopes %s with %d worker(s)", len(documents), datum_scopes, workers)
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                outcomes = list(pool.map(_check_document, documents, itertools.repeat(datum_scopes), chunksize=8))
        else:
            outcomes = [_check_document(document, datum_scopes) for document in documents]

        for document, outcome in zip(documents, outcomes):
            for s, (status, failures) in outcome.items():
                result = results[s]
                if status == "skipped":
                    result.skipped += 1
                    continue
                result.cases += 1
                if failures:
                    if result.counterexample is None:
                        result.counterexample = document
                    result.failures += failures

    if "regularity" in results:
        sweep = regularity_sweep(r_max)
        results["regularity"].cases += sweep.cases
        results["regularity"].failures += sweep.failures
        if results["regularity"].counterexample is None:
            results["regularity"].counterexample = sweep.counterexample
    if "prime" in results:
        results["prime"] = prime_suite(r_max)

    for result in results.values():
        log = logger.info if result.passed else logger.error
        log("Oracle %s: %d cases, %d skipped, %d failures", result.scope, result.cases, result.skipped, len(result.failures))
    return list(results.values())
