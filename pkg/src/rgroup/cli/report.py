"""
Report assembly.  The JSON report is built once as a plain dict; the text report is
rendered from that dict, so both outputs always carry the same content.
"""

# Libraries
import json
import logging

# Modules
from rgroup.analysis.fixed_space import CYCLIC, CYCLIC_BY_SIGNS, NONE
from rgroup.analysis.pipeline import PipelineResult
from rgroup.analysis.rgroup_core import is_abelian, structure_label
from rgroup.data_quality.suites import SuiteResult
from rgroup.datum.data_loading import serialize_datum

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

GAMMA_NOTE = (
    "Γ_σ is built from the least twist word in each coset of X(π); another choice of "
    "representatives can change its elements but not its isomorphism class."
)
SPLIT_COCYCLE_NOTE = "τ is not declared generic: the 2-cocycle is assumed to split."
UNITARY_NOTE = (
    "r = 1, m = 0 with |R(σ)| = 2: for the unitary group this is the only Levi subgroup "
    "carrying elliptic representations that are not discrete series."
)
REGULAR_CASE_TEXT = {
    NONE: "no regular elements, so every component is non-elliptic",
    CYCLIC: "R(π) = 1 and R(σ) = Γ_σ",
    CYCLIC_BY_SIGNS: "R(π) = Z2^r and R(σ) = Γ_σ ⋉ Z2^r",
}


def _elements(group) -> list[str]:
    return [str(w) for w in sorted(group)]


def _indices(values) -> str:
    return "{" + ",".join(map(str, values)) + "}"


def build_report(result: PipelineResult, oracle: list[SuiteResult] | None = None) -> dict:
    d, analysis, table, elliptic = result.datum, result.analysis, result.table, result.elliptic
    group = d.group
    report = {
        "schema_version": SCHEMA_VERSION,
        "datum": serialize_datum(d),
        "summary": {
            "r": d.r,
            "n": d.n,
            "parity": d.parity,
            "w_sigma_hat_mode": d.w_sigma_hat_mode,
            "structure": structure_label(analysis),
            "abelian": is_abelian(analysis),
            "order_w_sigma": len(analysis.w_sigma),
            "order_w_prime": len(analysis.w_prime),
            "order_r_sigma": len(analysis.r_sigma),
            "order_r_pi": len(analysis.r_pi),
            "irreps": len(table.irreps),
            "regular_elements": len(result.regulars),
        },
        "analysis": {
            "w_sigma_hat": [group.format_word(chi) for chi in sorted(d.w_sigma_hat)],
            "x_pi": [group.format_word(chi) for chi in sorted(analysis.x_pi)],
            "b_pi": list(analysis.b_pi),
            "w_sigma": _elements(analysis.w_sigma),
            "w_prime": _elements(analysis.w_prime),
            "r_sigma": _elements(analysis.r_sigma),
            "r_pi": _elements(analysis.r_pi),
            "gamma": [str(w) for w in analysis.gamma],
            "gamma_note": GAMMA_NOTE,
        },
        "chi_table": [
            {
                "chi": group.format_word(entry.chi),
                "s_chi": str(entry.s),
                "c": list(entry.signs),
                "b_chi": list(entry.signs_chi),
                "w_chi": str(entry.w),
                "trace": list(entry.trace),
            }
            for entry in analysis.chi_entries
        ],
        "character_table": {
            "field_order": result.presentation.field_order,
            "classes": [
                {"representative": str(cls[0]), "size": len(cls), "elements": [str(w) for w in cls]}
                for cls in table.classes
            ],
            "irreps": [
                {
                    "name": irrep.name,
                    "dim": irrep.dim,
                    "kappa": irrep.kappa_text,
                    "orbit_size": len(irrep.orbit),
                    "stabilizer": [str(a) for a in irrep.stabilizer],
                    "values": [str(v) for v in row],
                }
                for irrep, row in zip(table.irreps, table.values)
            ],
        },
        "regular_set": [str(w) for w in result.regulars],
        "elliptic": {
            "regular_case": elliptic.regular_case,
            "split_cocycle_assumed": elliptic.split_cocycle_assumed,
            "unitary_caveat": elliptic.unitary_caveat,
            "elliptic_count": elliptic.elliptic_count,
            "non_elliptic_count": elliptic.non_elliptic_count,
            "components": [
                {
                    "name": c.name,
                    "irrep": c.irrep.name,
                    "dim": c.irrep.dim,
                    "multiplicity": c.multiplicity,
                    "elliptic": c.elliptic,
                    "witness": None if c.witness is None else str(c.witness),
                    "witness_value": None if c.witness_value is None else str(c.witness_value),
                    "zero_at": [str(w) for w in c.zero_at],
                }
                for c in elliptic.components
            ],
        },
    }
    if oracle is not None:
        report["oracle"] = [suite.to_dict() for suite in oracle]
    logger.debug("Report assembled with %d top-level sections", len(report))
    return report


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def render_text(report: dict) -> str:
    summary, analysis, datum = report["summary"], report["analysis"], report["datum"]
    group_doc = datum["group"]
    lines = [
        f"Levi: r = {summary['r']}, blocks = {group_doc['blocks']}, m = {group_doc['m']} "
        f"(n = {summary['n']}, {summary['parity']})",
        f"π = ({', '.join(datum['pi']['components'])})",
    ]
    if datum.get("notes"):
        lines.append(f"notes: {datum['notes']}")
    lines += [
        f"Ŵ(σ) ({summary['w_sigma_hat_mode']}) = {{{', '.join(analysis['w_sigma_hat'])}}}, "
        f"X(π) = {{{', '.join(analysis['x_pi'])}}}",
        f"|W(σ)| = {summary['order_w_sigma']}, |W′| = {summary['order_w_prime']}, "
        f"|R(σ)| = {summary['order_r_sigma']}, |R(π)| = {summary['order_r_pi']}, "
        f"B(π) = {_indices(analysis['b_pi'])}",
        f"R(σ) ≅ {summary['structure']} ({'abelian' if summary['abelian'] else 'non-abelian'})",
        f"Γ_σ = {{{', '.join(analysis['gamma'])}}}",
        f"  {analysis['gamma_note']}",
        "",
        "Coset representatives:",
    ]
    for row in report["chi_table"]:
        lines.append(
            f"  χ = {row['chi']}: s_χ = {row['s_chi']}, c = C{_indices(row['c'])}, "
            f"B_χ = {_indices(row['b_chi'])}, w_χ = {row['w_chi']}"
        )
        lines += [f"      {step}" for step in row["trace"]]

    table = report["character_table"]
    lines += ["", f"Character table over Q(ζ{table['field_order']}):"]
    header = [cls["representative"] for cls in table["classes"]]
    widths = [max(len(h), *(len(irrep["values"][k]) for irrep in table["irreps"])) for k, h in enumerate(header)]
    lines.append("  " + " " * 6 + "  ".join(h.rjust(w) for h, w in zip(header, widths)))
    lines.append("  " + " " * 6 + "  ".join(str(cls["size"]).rjust(w) for cls, w in zip(table["classes"], widths)))
    for irrep in table["irreps"]:
        cells = "  ".join(v.rjust(w) for v, w in zip(irrep["values"], widths))
        lines.append(f"  {irrep['name']:<6}{cells}")

    elliptic = report["elliptic"]
    lines += [
        "",
        f"Regular elements ({len(report['regular_set'])}): {', '.join(report['regular_set']) or 'none'}",
        f"Regular case: {elliptic['regular_case']} ({REGULAR_CASE_TEXT[elliptic['regular_case']]})",
        "",
        f"Components of the induced representation, ρ ↦ π(ρ): "
        f"{elliptic['elliptic_count']} elliptic, {elliptic['non_elliptic_count']} non-elliptic",
    ]
    for c in elliptic["components"]:
        kind = "elliptic" if c["elliptic"] else "non-elliptic"
        line = f"  {c['name']}: dim {c['dim']}, multiplicity {c['multiplicity']}, {kind}"
        if c["witness"] is not None:
            line += f" (χ_ρ({c['witness']}) = {c['witness_value']})"
        elif c["zero_at"]:
            line += f" (χ_ρ = 0 on all {len(c['zero_at'])} regular elements)"
        lines.append(line)
    if elliptic["split_cocycle_assumed"]:
        lines += ["", f"NOTE: {SPLIT_COCYCLE_NOTE}"]
    if elliptic["unitary_caveat"]:
        lines += ["", f"NOTE: {UNITARY_NOTE}"]

    if "oracle" in report:
        lines += ["", "Oracle suites:"]
        lines += [f"  {line}" for suite in report["oracle"] for line in suite_lines(suite)]
    return "\n".join(lines) + "\n"


def suite_lines(suite: dict, limit: int = 5) -> list[str]:
    status = "PASS" if suite["passed"] else "FAIL"
    lines = [f"{status} {suite['scope']}: {suite['cases']} cases, {suite['skipped']} skipped"]
    lines += [f"    {failure}" for failure in suite["failures"][:limit]]
    if len(suite["failures"]) > limit:
        lines.append(f"    ... {len(suite['failures']) - limit} more")
    return lines
