"""
Edge-list text format and deterministic report documents.

Edge lists hold one edge per line as whitespace-separated labels.  ``#`` starts
a comment, blank lines are skipped, and k is taken from the first edge.

Reports are JSON with floats written at 17 significant digits, so they
round-trip exactly through ``json.loads`` and two renders of one report are
byte-identical.
"""

from __future__ import annotations

import json
import math
from typing import Any

from .errors import NonUniformEdge, ParseError, RepeatedVertexInEdge
from .hypergraph import Hypergraph, Multigraph, new_hypergraph
from .ranking import ComparisonReport, natural_key
from .spectral import GraphEigenpair, HyperEigenpair, SolverConfig

__all__ = [
    "parse_hypergraph",
    "format_hypergraph",
    "format_multigraph",
    "dumps",
    "render_report",
    "render_eigenpair",
    "load_report",
]


def parse_hypergraph(text: str, source: str = "<text>") -> Hypergraph:
    edges = []
    k = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if k is None:
            k = len(tokens)
            if k < 2:
                raise ParseError(f"{source}: an edge needs at least 2 labels", line=lineno)
        if len(tokens) != k:
            raise NonUniformEdge(f"{len(tokens)} labels, expected {k}", line=lineno)
        if len(set(tokens)) != k:
            raise RepeatedVertexInEdge(f"edge {tokens} repeats a vertex", line=lineno)
        edges.append(tokens)
    if not edges:
        raise ParseError(f"{source}: no edges found")
    return new_hypergraph(k, edges)


def format_hypergraph(H: Hypergraph, header: str | None = None) -> str:
    lines = [f"# {h}" for h in header.splitlines()] if header else []
    lines += [" ".join(e) for e in H.labeled_edges()]
    return "\n".join(lines) + "\n"


def format_multigraph(G: Multigraph, header: str | None = None) -> str:
    """Edge-list text with each pair repeated mu times (reads back as a 2-graph if mu == 1)."""
    lines = [f"# {h}" for h in header.splitlines()] if header else []
    for (u, v), mu in G.multiplicity.items():
        lines += [f"{G.labels[u]} {G.labels[v]}"] * mu
    return "\n".join(lines) + "\n"


def _fmt_float(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        return "null"
    s = f"{x:.17g}"
    if "e" not in s and "." not in s:
        s += ".0"
    return s


def dumps(obj: Any, indent: int = 2, _level: int = 0) -> str:
    """JSON text with 17-significant-digit floats; dict order is preserved."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(key), ensure_ascii=False)}: {dumps(v, indent, _level + 1)}"
                 for key, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(v, (str, int, float)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(dumps(v, indent, _level + 1) for v in obj) + "]"
        items = [pad + dumps(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    if hasattr(obj, "item"):  # numpy scalar
        return dumps(obj.item(), indent, _level)
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _config(cfg: SolverConfig) -> dict:
    return {
        "tolerance": cfg.tolerance,
        "max_iterations": cfg.max_iterations,
        "shift": cfg.shift,
        "initial": "uniform" if cfg.initial is None else "provided",
    }


def _keyed(labels, values) -> dict:
    pairs = sorted(zip(labels, values), key=lambda p: natural_key(p[0]))
    return {lab: float(v) for lab, v in pairs}


def render_report(report: ComparisonReport, source: str = "<memory>") -> str:
    warnings = []
    if report.duplicates:
        warnings.append(f"{report.duplicates} duplicate edge(s) removed")
    doc = {
        "input": {"source": source, "k": report.k, "n": report.n, "m": report.m},
        "solver": _config(report.config),
        "tie_tolerance": report.hyper_ranking.tie_tolerance,
        "rho": report.rho,
        "lambda": report.lam,
        "umbral_index": report.umbral_index,
        "opaque": report.opaque,
        "chebyshev": report.chebyshev,
        "hyper": {
            "y": _keyed(report.hyper.labels, report.hyper.y),
            "y_hat": _keyed(report.hyper.labels, report.hyper.powered),
            "ranking": report.hyper_ranking.as_lists(),
            "residual": report.hyper.residual,
            "iterations": report.hyper.iterations,
        },
        "shadow": {
            "x": _keyed(report.shadow.labels, report.shadow.x),
            "x_hat": _keyed(report.shadow.labels, report.shadow.powered),
            "ranking": report.shadow_ranking.as_lists(),
            "residual": report.shadow.residual,
            "iterations": report.shadow.iterations,
        },
        "warnings": warnings,
    }
    return dumps(doc) + "\n"


def render_eigenpair(
    pair: HyperEigenpair | GraphEigenpair, cfg: SolverConfig, source: str = "<memory>"
) -> str:
    if isinstance(pair, HyperEigenpair):
        kind, value, vec, k = "hypergraph", pair.rho, pair.y, pair.k
    else:
        kind, value, vec, k = "clique_shadow", pair.lam, pair.x, 2
    doc = {
        "input": {"source": source, "kind": kind, "n": len(pair.labels)},
        "solver": _config(cfg),
        "eigenvalue": value,
        "vector": _keyed(pair.labels, vec),
        "mass": _keyed(pair.labels, vec ** k),
        "bracket": list(pair.bracket),
        "residual": pair.residual,
        "iterations": pair.iterations,
    }
    return dumps(doc) + "\n"


def load_report(text: str) -> dict:
    return json.loads(text)
