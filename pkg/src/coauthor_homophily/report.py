"""Report documents for the command line tool.

A report is a plain dict that serialises to JSON unchanged. It carries no
timestamps or paths, so the same input and flags always give the same bytes.
Undefined metrics are ``null`` with a ``reason`` next to them.
"""

from __future__ import annotations

import json

from . import __version__
from .errors import UndefinedMetric
from .graph import CliqueNetwork
from .metrics import (
    Undefined,
    alpha_from_clique_counts,
    clique_count_table,
    compute_metrics,
    equivalence_report,
)

TEXT_DIGITS = 4


def _num(x):
    return None if isinstance(x, Undefined) else x


def network_summary(network) -> dict:
    out = {
        "nodes": len(network.nodes),
        "directed_edges": network.edge_count,
        "positive_nodes": network.n_positive,
        "negative_nodes": network.n_negative,
    }
    if isinstance(network, CliqueNetwork):
        out["cliques"] = len(network.cliques)
    return out


def metrics_section(network) -> tuple[dict, dict]:
    rep = compute_metrics(network)
    undefined = next(
        (v for v in (rep.alpha, rep.r_unit, rep.r_inverse_degree) if isinstance(v, Undefined)), None
    )
    metrics = {
        "status": "ok" if undefined is None else "undefined",
        "reason": None if undefined is None else undefined.reason,
        "alpha": _num(rep.alpha),
        "p_risk": _num(rep.p_risk),
        "q_risk": _num(rep.q_risk),
        "r_unit": _num(rep.r_unit),
        "r_inverse_degree": _num(rep.r_inverse_degree),
        "equivalence_gap": _num(rep.equivalence_gap),
    }
    mixing = {"unit": rep.mixing_unit.as_dict(), "inverse_degree": rep.mixing_weighted.as_dict()}
    return metrics, mixing


def clique_section(network) -> dict | None:
    if not isinstance(network, CliqueNetwork):
        return None
    table = clique_count_table(network)
    try:
        alpha = alpha_from_clique_counts(table, network.n_positive, network.n_negative)
    except UndefinedMetric:
        alpha = None
    return {"k_star": table.k_star, "table": table.rows(), "alpha_from_counts": alpha}


def equivalence_section(network, c_values) -> dict:
    """Raises :class:`UndefinedMetric` on one-label networks."""
    eq = equivalence_report(network, c_values)
    return {
        "alpha": eq.alpha,
        "c_values": list(eq.c_values),
        "r_inverse_degree": list(eq.r_inverse_degree),
        "gaps": list(eq.gaps),
        "max_gap": eq.max_gap,
        "tolerance": eq.tolerance,
        "certified": eq.certified,
        "corollary_applies": eq.corollary_applies,
        "r_unit": eq.r_unit,
        "unit_gap": eq.unit_gap,
        "cross_flow_balanced": eq.cross_flow_balanced,
    }


def build_report(network, *, source: dict, orientation: dict, dataset: dict | None, c_values, warnings=()) -> dict:
    metrics, mixing = metrics_section(network)
    try:
        equivalence = equivalence_section(network, c_values)
    except UndefinedMetric as exc:
        equivalence = {"status": "undefined", "reason": str(exc)}
    return {
        "tool": {"name": "coauthor-homophily", "version": __version__},
        "source": source,
        "orientation": orientation,
        "dataset": dataset,
        "network": network_summary(network),
        "metrics": metrics,
        "mixing": mixing,
        "clique_counts": clique_section(network),
        "equivalence": equivalence,
        "warnings": list(warnings),
    }


def to_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, allow_nan=False) + "\n"


def _fmt(x) -> str:
    if x is None:
        return "undefined"
    if isinstance(x, bool):
        return "yes" if x else "no"
    if isinstance(x, float):
        return f"{x:.{TEXT_DIGITS}f}"
    return str(x)


def _fmt_gap(x) -> str:
    return "n/a" if x is None else f"{x:.3e}"


def render_equivalence(eq: dict) -> list[str]:
    if eq.get("status") == "undefined":
        return ["equivalence: undefined (" + eq["reason"] + ")"]
    lines = ["equivalence (inverse-degree weights):"]
    for c, r, gap in zip(eq["c_values"], eq["r_inverse_degree"], eq["gaps"]):
        lines.append(f"  c={c:g}  r={_fmt(r)}  |r-alpha|={_fmt_gap(gap)}")
    lines.append(f"  max gap   {_fmt_gap(eq['max_gap'])} (tolerance {eq['tolerance']:g})")
    lines.append(f"  certified {_fmt(eq['certified'])}")
    if not eq["cross_flow_balanced"]:
        lines.append("  note: weighted cross-label flow is unbalanced (cross edges join nodes of unequal degree)")
    lines.append(f"  equal degrees (unit weights comparable) {_fmt(eq['corollary_applies'])}")
    if eq["corollary_applies"]:
        lines.append(f"  r_unit={_fmt(eq['r_unit'])}  |r_unit-alpha|={_fmt_gap(eq['unit_gap'])}")
    return lines


def render_text(doc: dict) -> str:
    lines = []
    o = doc["orientation"]
    lines.append(f"orientation: positive={','.join(o['positive'])} negative={','.join(o['negative'])}")
    ds = doc["dataset"]
    if ds is not None:
        lines.append(
            f"records: {ds['total_records']} read, {ds['surviving_records']} used, "
            f"{ds['dropped_single_author']} single-author, {ds['dropped_unknown_label']} unknown-label"
        )
    net = doc["network"]
    lines.append(
        f"network: {net['nodes']} nodes ({net['positive_nodes']} positive, "
        f"{net['negative_nodes']} negative), {net['directed_edges']} directed edges"
    )
    m = doc["metrics"]
    if m["status"] == "undefined":
        lines.append(f"metrics undefined: {m['reason']}")
    for key in ("alpha", "p_risk", "q_risk", "r_unit", "r_inverse_degree"):
        lines.append(f"{key:<17} {_fmt(m[key])}")
    for name, mm in doc["mixing"].items():
        lines.append(
            f"mixing[{name}]: e_pp={_fmt(mm['e_pp'])} e_pn={_fmt(mm['e_pn'])} "
            f"e_np={_fmt(mm['e_np'])} e_nn={_fmt(mm['e_nn'])}"
        )
    cc = doc["clique_counts"]
    if cc is not None:
        lines.append(f"clique compositions (K*={cc['k_star']}):")
        for row in cc["table"]:
            lines.append(f"  ({row['positive']},{row['negative']}) x {row['count']}")
    lines.extend(render_equivalence(doc["equivalence"]))
    for w in doc["warnings"]:
        lines.append(f"warning: {w}")
    return "\n".join(lines) + "\n"
