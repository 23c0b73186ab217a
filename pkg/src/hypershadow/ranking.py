"""Spectral rankings and the measures comparing a hypergraph with its clique-shadow."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import NonPositiveValue, NotIndependent, ValidationError, VertexSetMismatch
from .generators import hyperstar, pleated_bowtie, windmill
from .hypergraph import Hypergraph, clique_shadow, is_strongly_independent
from .spectral import (
    GraphEigenpair,
    HyperEigenpair,
    SolverConfig,
    bowtie_thresholds,
    principal_eigenpair_graph,
    principal_eigenpair_hyper,
    windmill_center_value,
)

__all__ = [
    "DEFAULT_TIE_TOLERANCE",
    "RankingPartition",
    "ComparisonReport",
    "spectral_ranking",
    "umbral_index",
    "chebyshev_distance",
    "independent_set_mass",
    "compare",
    "delta_scan",
    "bowtie_scan",
]

DEFAULT_TIE_TOLERANCE = 1e-8


@dataclass(frozen=True)
class RankingPartition:
    """Vertex groups in descending eigenvector value; group i has rank i + 1."""

    groups: tuple[frozenset[str], ...]
    tie_tolerance: float

    def rank_of(self, label: str) -> int:
        for i, g in enumerate(self.groups):
            if label in g:
                return i + 1
        raise KeyError(label)

    @property
    def vertices(self) -> frozenset[str]:
        return frozenset().union(*self.groups)

    def as_lists(self) -> list[list[str]]:
        return [sorted(g, key=natural_key) for g in self.groups]


def natural_key(label: str):
    """Sort key putting ``r2`` before ``r10``."""
    out = []
    num = ""
    for ch in label:
        if ch.isdigit():
            num += ch
            continue
        if num:
            out.append((0, int(num), ""))
            num = ""
        out.append((1, 0, ch))
    if num:
        out.append((0, int(num), ""))
    return tuple(out)


def spectral_ranking(
    values,
    tie_tolerance: float = DEFAULT_TIE_TOLERANCE,
    labels: Sequence[str] | None = None,
) -> RankingPartition:
    """Group vertices by descending value.

    A new group starts wherever the drop between consecutive sorted values
    exceeds ``tie_tolerance * max(values)``.  ``values`` may be a mapping from
    label to value, or an array paired with ``labels`` (default ``"0".."n-1"``).
    """
    if isinstance(values, dict):
        labels, vals = list(values), np.array(list(values.values()), dtype=float)
    else:
        vals = np.asarray(values, dtype=float)
        labels = list(labels) if labels is not None else [str(i) for i in range(len(vals))]
        if len(labels) != len(vals):
            raise VertexSetMismatch("labels and values differ in length")
    if tie_tolerance < 0:
        raise ValidationError("tie_tolerance must be >= 0")
    if len(vals) == 0:
        return RankingPartition((), tie_tolerance)
    if np.any(~(vals > 0)):
        raise NonPositiveValue("spectral ranking needs strictly positive values")
    order = sorted(range(len(vals)), key=lambda i: -vals[i])
    gap = tie_tolerance * vals.max()
    groups: list[set[str]] = [{labels[order[0]]}]
    for prev, cur in zip(order, order[1:]):
        if vals[prev] - vals[cur] > gap:
            groups.append(set())
        groups[-1].add(labels[cur])
    return RankingPartition(tuple(frozenset(g) for g in groups), tie_tolerance)


def umbral_index(rh: RankingPartition, rs: RankingPartition) -> int:
    """Least 1-based rank at which the two rankings hold different vertex sets, else 0."""
    if rh.vertices != rs.vertices:
        raise VertexSetMismatch("rankings cover different vertex sets")
    for i in range(max(len(rh.groups), len(rs.groups))):
        a = rh.groups[i] if i < len(rh.groups) else frozenset()
        b = rs.groups[i] if i < len(rs.groups) else frozenset()
        if a != b:
            return i + 1
    return 0


def chebyshev_distance(pair_h: HyperEigenpair, pair_g: GraphEigenpair, k: int | None = None) -> float:
    """``max_v |y_v^k - x_v^2|`` with vertices matched by label."""
    k = pair_h.k if k is None else k
    if set(pair_h.labels) != set(pair_g.labels):
        raise VertexSetMismatch("eigenvectors cover different vertex sets")
    pos = {lab: i for i, lab in enumerate(pair_g.labels)}
    x = pair_g.x[[pos[lab] for lab in pair_h.labels]]
    return float(np.max(np.abs(pair_h.y ** k - x ** 2)))


def independent_set_mass(
    pair: HyperEigenpair, S: Iterable, H: Hypergraph, k: int | None = None
) -> float:
    """Sum of ``y_i^k`` over a strongly independent set S (labels or indices).

    Strong independence means no edge holds two vertices of S.  The mass never
    exceeds 1/k, with equality exactly when S is a color class of a k-cylinder.
    """
    k = H.k if k is None else k
    idx = [H.index[s] if isinstance(s, str) else int(s) for s in S]
    if not is_strongly_independent(H, idx):
        raise NotIndependent("some edge contains two vertices of S")
    return float(np.sum(pair.y[idx] ** k))


@dataclass(frozen=True)
class ComparisonReport:
    labels: tuple[str, ...]
    k: int
    n: int
    m: int
    duplicates: int
    hyper: HyperEigenpair
    shadow: GraphEigenpair
    hyper_ranking: RankingPartition
    shadow_ranking: RankingPartition
    umbral_index: int
    chebyshev: float
    config: SolverConfig

    @property
    def opaque(self) -> bool:
        return self.umbral_index >= 1

    @property
    def rho(self) -> float:
        return self.hyper.rho

    @property
    def lam(self) -> float:
        return self.shadow.lam

    def table(self) -> dict[str, tuple[float, float, float, float]]:
        """label -> (y, y^k, x, x^2)."""
        pos = {lab: i for i, lab in enumerate(self.shadow.labels)}
        rows = {}
        for i, lab in enumerate(self.labels):
            y = float(self.hyper.y[i])
            x = float(self.shadow.x[pos[lab]])
            rows[lab] = (y, y ** self.k, x, x * x)
        return rows


def compare(
    H: Hypergraph,
    cfg: SolverConfig | None = None,
    tie_tolerance: float = DEFAULT_TIE_TOLERANCE,
) -> ComparisonReport:
    """Solve H and its clique-shadow and measure how their rankings diverge."""
    cfg = cfg or SolverConfig()
    hp = principal_eigenpair_hyper(H, cfg)
    gp = principal_eigenpair_graph(clique_shadow(H), cfg)
    rh = spectral_ranking(hp.y, tie_tolerance, hp.labels)
    rs = spectral_ranking(gp.x, tie_tolerance, gp.labels)
    return ComparisonReport(
        labels=H.labels,
        k=H.k,
        n=H.n,
        m=H.m,
        duplicates=H.duplicates,
        hyper=hp,
        shadow=gp,
        hyper_ranking=rh,
        shadow_ranking=rs,
        umbral_index=umbral_index(rh, rs),
        chebyshev=chebyshev_distance(hp, gp, H.k),
        config=cfg,
    )


def _delta_row(k: int, eta: int, validate_upto: int, cfg: SolverConfig) -> dict:
    x1 = windmill_center_value(eta, k - 1) ** 2
    # star: center mass 1/k, each of the eta(k-1) leaves 1/(k eta)
    leaf_y = 1 / (k * eta)
    leaf_x = (1 - x1) / (eta * (k - 1))
    D = max(abs(1 / k - x1), abs(leaf_y - leaf_x))
    row = {"eta": eta, "D": D, "limit": 0.5 - 1 / k, "gap": abs(D - (0.5 - 1 / k))}
    if eta <= validate_upto:
        hp = principal_eigenpair_hyper(hyperstar(eta, k), cfg)
        gp = principal_eigenpair_graph(windmill(eta, k - 1), cfg)
        row["D_solver"] = chebyshev_distance(hp, gp, k)
    else:
        row["D_solver"] = None
    return row


def delta_scan(
    k: int,
    eta_values: Iterable[int],
    validate_upto: int = 50,
    cfg: SolverConfig | None = None,
) -> list[dict]:
    """Chebyshev distance between S(eta, k) and W(eta, k-1) for each eta.

    Uses the exact star masses and the windmill closed form; for
    ``eta <= validate_upto`` both solvers are also run and reported as
    ``D_solver``.
    """
    if k < 3:
        raise ValidationError(f"delta_scan needs k >= 3, got {k}")
    cfg = cfg or SolverConfig()
    return [_delta_row(k, int(eta), validate_upto, cfg) for eta in eta_values]


def _bowtie_row(t: int, convention: str, cfg: SolverConfig, tie_tolerance: float) -> dict:
    rep = compare(pleated_bowtie(t, convention), cfg, tie_tolerance)
    row = {"t": t, "rho": rep.rho, "lambda": rep.lam}
    if rep.rho > 1:
        th = bowtie_thresholds(t, rep.rho, rep.lam)
        row.update(
            hyper_ok=th.hyper_ok,
            shadow_ok=th.shadow_ok,
            hyper_margin=th.hyper_margin,
            shadow_margin=th.shadow_margin,
        )
    else:
        row.update(hyper_ok=None, shadow_ok=None, hyper_margin=None, shadow_margin=None)
    row["umbral_index"] = rep.umbral_index
    row["hyper_top"] = sorted(rep.hyper_ranking.groups[0], key=natural_key)
    row["shadow_top"] = sorted(rep.shadow_ranking.groups[0], key=natural_key)
    return row


def bowtie_scan(
    t_min: int,
    t_max: int,
    convention: str = "eigenconsistent",
    cfg: SolverConfig | None = None,
    tie_tolerance: float = DEFAULT_TIE_TOLERANCE,
    jobs: int = 1,
) -> list[dict]:
    """Per-t records of both eigenvalues, the threshold tests and u(B_t).

    With ``jobs > 1`` instances are solved in worker processes; records come
    back in t order either way.
    """
    if not 0 <= t_min <= t_max:
        raise ValidationError(f"need 0 <= t_min <= t_max, got {t_min}, {t_max}")
    cfg = cfg or SolverConfig()
    ts = range(t_min, t_max + 1)
    if jobs <= 1:
        return [_bowtie_row(t, convention, cfg, tie_tolerance) for t in ts]
    n = len(ts)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_bowtie_row, ts, [convention] * n, [cfg] * n, [tie_tolerance] * n))
