"""Report documents and their canonical serialization.

One JSON layout covers every command: a schema version, a summary of
the graph analyzed, a list of typed report payloads, and provenance
(argv, seed, tolerances, package version).  Serialization is canonical:
keys sorted, floats printed with 17 significant digits (lossless for
doubles), exact rationals as "p/q" strings, and nothing time- or
machine-dependent anywhere.  Identical inputs therefore produce
byte-identical documents, which is itself a tested property.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction

from . import __version__
from .centrality import KatzDegreeDiagnostic, KatzEigenvectorDiagnostic
from .conditions import ConditionReport
from .explore import SearchOutcome, SuiteSummary, SweepResult, ViolationRecord
from .graph import Graph, NodeVector, is_regular
from .paradox import DirectedDegreeReport, ParadoxReport
from .spectral import EigenResult

__all__ = [
    "SCHEMA_VERSION",
    "canonical_json",
    "payload",
    "graph_summary",
    "document",
    "parse_document",
    "sweep_csv",
    "search_csv",
]

SCHEMA_VERSION = "1"


def _float_repr(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"non-finite number in report: {x!r}")
    return "%.17g" % x


def _emit(obj, indent: int) -> str:
    pad = "  " * (indent + 1)
    close = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = []
        for key in sorted(obj):
            if not isinstance(key, str):
                raise TypeError(f"report keys must be strings: {key!r}")
            items.append(f"{pad}{json.dumps(key)}: {_emit(obj[key], indent + 1)}")
        return "{\n" + ",\n".join(items) + "\n" + close + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [f"{pad}{_emit(v, indent + 1)}" for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + close + "]"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _float_repr(obj)
    if isinstance(obj, Fraction):
        return json.dumps(str(obj))
    if obj is None:
        return "null"
    raise TypeError(f"cannot serialize {type(obj).__name__} in a report")


def canonical_json(obj) -> str:
    """Deterministic JSON text: sorted keys, 17-significant-digit floats."""
    return _emit(obj, 0) + "\n"


def parse_document(text: str) -> dict:
    return json.loads(text)


def _exact_map(exact: dict | None):
    if exact is None:
        return None
    return {k: Fraction(v) for k, v in exact.items()}


def _paradox_payload(rep: ParadoxReport) -> dict:
    return {
        "type": "paradox",
        "mode": rep.mode,
        "measure": rep.measure_label,
        "node_average": rep.node_average,
        "neighbour_average": rep.neighbour_average,
        "gap": rep.gap,
        "covariance_form": rep.covariance_form,
        "holds": rep.holds,
        "equality": rep.equality,
        "tol": rep.tol,
        "exact": _exact_map(rep.exact),
    }


def _directed_payload(rep: DirectedDegreeReport) -> dict:
    return {
        "type": "directed_degree",
        "gaps": {key: _paradox_payload(sub) for key, sub in rep.reports.items()},
        "covariance": rep.covariance,
        "covariance_exact": rep.covariance_exact,
        "tol": rep.tol,
    }


def _condition_payload(rep: ConditionReport) -> dict:
    return {
        "type": "condition",
        "condition_id": rep.condition_id,
        "lhs": rep.lhs,
        "rhs": rep.rhs,
        "slack": rep.slack,
        "holds": rep.holds,
        "guaranteed": rep.guaranteed,
        "exact": _exact_map(rep.exact),
        "details": rep.details,
    }


def _sweep_payload(res: SweepResult) -> dict:
    return {
        "type": "sweep",
        "spectral_radius": res.spectral_radius,
        "alphas": list(res.alphas),
        "gaps": list(res.gaps),
        "derivative_at_zero": res.derivative_at_zero,
        "min_gap": res.min_gap,
        "min_gap_alpha": res.min_gap_alpha,
        "violations": list(res.violations),
        "tol": res.tol,
    }


def _violation_payload(v: ViolationRecord) -> dict:
    return {
        "trial": v.trial,
        "n": v.n,
        "directed": v.directed,
        "edges": [list(e) for e in v.edges],
        "condition_id": v.condition_id,
        "slack": v.slack,
    }


def _search_payload(res: SearchOutcome) -> dict:
    return {
        "type": "search",
        "r": res.r,
        "s": res.s,
        "trials": res.trials,
        "family": res.family,
        "seed": res.seed,
        "min_slack": res.min_slack,
        "violations": [_violation_payload(v) for v in res.violations],
    }


def _suite_payload(res: SuiteSummary) -> dict:
    return {
        "type": "suite",
        "family": res.family,
        "trials": res.trials,
        "failures": res.failures,
        "checks": dict(res.checks),
        "connectivity_retries": res.connectivity_retries,
        "seed": res.seed,
        "tol": res.tol,
    }


def _eigen_payload(res: EigenResult) -> dict:
    return {
        "type": "eigenpair",
        "eigenvalue": res.eigenvalue,
        "side": res.side,
        "residual": res.residual,
        "iterations": res.iterations,
        "vector": res.vector.values.tolist(),
    }


def _vector_payload(vec: NodeVector) -> dict:
    return {
        "type": "centrality",
        "label": vec.label,
        "n": len(vec),
        "values": vec.values.tolist(),
    }


def _degree_diag_payload(d: KatzDegreeDiagnostic) -> dict:
    return {
        "type": "katz_degree_limit",
        "direction": d.direction,
        "alphas": list(d.alphas),
        "deviations": list(d.deviations),
        "max_deviation": d.max_deviation,
        "decreasing": d.decreasing,
    }


def _eigen_diag_payload(d: KatzEigenvectorDiagnostic) -> dict:
    return {
        "type": "katz_eigenvector_limit",
        "side": d.side,
        "alphas": list(d.alphas),
        "similarities": list(d.similarities),
        "final_similarity": d.final_similarity,
        "increasing": d.increasing,
    }


_PAYLOADS = [
    (ParadoxReport, _paradox_payload),
    (DirectedDegreeReport, _directed_payload),
    (ConditionReport, _condition_payload),
    (SweepResult, _sweep_payload),
    (SearchOutcome, _search_payload),
    (SuiteSummary, _suite_payload),
    (EigenResult, _eigen_payload),
    (NodeVector, _vector_payload),
    (KatzDegreeDiagnostic, _degree_diag_payload),
    (KatzEigenvectorDiagnostic, _eigen_diag_payload),
]


def payload(obj) -> dict:
    """Typed dict form of any report object (dicts pass through)."""
    if isinstance(obj, dict):
        return obj
    for cls, fn in _PAYLOADS:
        if isinstance(obj, cls):
            return fn(obj)
    raise TypeError(f"no payload mapping for {type(obj).__name__}")


def graph_summary(g: Graph) -> dict:
    summary = {
        "n": g.n,
        "edge_count": g.edge_count,
        "directed": g.directed,
        "weighted": not g.unweighted,
    }
    if g.directed:
        out_reg, out_deg = is_regular(g, "out")
        in_reg, in_deg = is_regular(g, "in")
        summary["regular_out"] = out_reg
        summary["regular_in"] = in_reg
        if out_reg:
            summary["common_out_degree"] = float(out_deg)
        if in_reg:
            summary["common_in_degree"] = float(in_deg)
    else:
        reg, deg = is_regular(g)
        summary["regular"] = reg
        if reg:
            summary["common_degree"] = float(deg)
    return summary


def document(command, graph: Graph | None, reports, seed=None, tolerances=None) -> dict:
    """Assemble the full report document for one command invocation."""
    return {
        "schema_version": SCHEMA_VERSION,
        "graph_summary": graph_summary(graph) if graph is not None else None,
        "reports": [payload(r) for r in reports],
        "provenance": {
            "command": list(command),
            "seed": seed,
            "tolerances": dict(tolerances or {}),
            "version": __version__,
        },
    }


def sweep_csv(res: SweepResult) -> str:
    lines = ["alpha,gap"]
    for a, gp in zip(res.alphas, res.gaps):
        lines.append(f"{_float_repr(a)},{_float_repr(gp)}")
    return "\n".join(lines) + "\n"


def search_csv(res: SearchOutcome) -> str:
    lines = ["trial,slack,edges"]
    for v in res.violations:
        parts = []
        for e in v.edges:
            s, t, w = e
            parts.append(f"{s}-{t}" if w == 1.0 else f"{s}-{t}-{w!r}")
        lines.append(f'{v.trial},{_float_repr(v.slack)},"{";".join(parts)}"')
    return "\n".join(lines) + "\n"
