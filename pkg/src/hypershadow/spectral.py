"""
Principal eigenpairs of hypergraphs and multigraphs by shifted power iteration.

For a connected k-graph the iteration map is

    w -> (A w^{k-1} + shift * w^{k-1})^{1/(k-1)},   renormalised to sum(w^k) = 1,

where ``(A w^{k-1})_i`` is the sum over edges e containing i of the product of
w over e minus i.  Convergence is judged on the Collatz-Wielandt bracket: the
min and max over i of ``(A w^{k-1})_i / w_i^{k-1}`` bound the eigenvalue from
below and above, and iteration stops once the relative bracket width drops
under ``SolverConfig.tolerance``.  The multigraph solver is the k = 2 special
case with a weighted adjacency matrix.

The module also carries the closed forms for windmill graphs and the
threshold and certificate arithmetic used for pleated bowties.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import DimensionMismatch, DisconnectedInput, NoConvergence, OutOfRange, ValidationError
from .hypergraph import Hypergraph, Multigraph, is_connected

__all__ = [
    "SolverConfig",
    "HyperEigenpair",
    "GraphEigenpair",
    "apply_tensor",
    "polynomial_form",
    "principal_eigenpair_hyper",
    "apply_multigraph",
    "principal_eigenpair_graph",
    "windmill_spectral_radius",
    "windmill_center_value",
    "BowtieThresholds",
    "bowtie_thresholds",
    "bowtie_shadow_boundary",
    "bowtie_certificate_vector",
    "LEGACY_BOWTIE_POLYNOMIAL",
    "BOWTIE_SHADOW_POLYNOMIAL",
]

# lambda(shadow of the as_printed B_8) is the largest root; coefficients high to low
LEGACY_BOWTIE_POLYNOMIAL = (1, -9, -98, 592, 2448, 2048)
# same for the eigenconsistent B_8, from the symmetry-reduced shadow eigenequations
BOWTIE_SHADOW_POLYNOMIAL = (1, -9, -117, 729, 3060, 2592)


@dataclass(frozen=True)
class SolverConfig:
    tolerance: float = 1e-12
    max_iterations: int = 100_000
    shift: float = 1.0
    initial: np.ndarray | None = None
    record_bracket: bool = False

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValidationError(f"tolerance must be > 0, got {self.tolerance}")
        if not self.shift > 0:
            raise ValidationError(f"shift must be > 0, got {self.shift}")
        if self.max_iterations < 1:
            raise ValidationError(f"max_iterations must be >= 1, got {self.max_iterations}")


@dataclass(frozen=True)
class HyperEigenpair:
    rho: float
    y: np.ndarray
    labels: tuple[str, ...]
    k: int
    residual: float
    iterations: int
    bracket: tuple[float, float]
    history: list[tuple[float, float]] = field(default_factory=list, repr=False)

    @property
    def powered(self) -> np.ndarray:
        """y_v^k, the per-vertex mass (sums to 1)."""
        return self.y ** self.k


@dataclass(frozen=True)
class GraphEigenpair:
    lam: float
    x: np.ndarray
    labels: tuple[str, ...]
    residual: float
    iterations: int
    bracket: tuple[float, float]
    history: list[tuple[float, float]] = field(default_factory=list, repr=False)

    @property
    def powered(self) -> np.ndarray:
        """x_v^2, the per-vertex mass (sums to 1)."""
        return self.x ** 2


def _as_vector(v, n: int) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    if v.shape != (n,):
        raise DimensionMismatch(f"expected a vector of length {n}, got shape {v.shape}")
    return v


def apply_tensor(H: Hypergraph, v) -> np.ndarray:
    """``out_i = sum over edges e containing i of prod_{u in e, u != i} v_u``."""
    v = _as_vector(v, H.n)
    E = H.edge_array
    vals = v[E]
    ones = np.ones((H.m, 1))
    # exclusive products via prefix/suffix cumprods, safe for zero entries
    prefix = np.hstack([ones, np.cumprod(vals[:, :-1], axis=1)])
    suffix = np.hstack([np.cumprod(vals[:, :0:-1], axis=1)[:, ::-1], ones])
    return np.bincount(E.ravel(), (prefix * suffix).ravel(), minlength=H.n)


def polynomial_form(H: Hypergraph, v) -> float:
    """``F(v) = k * sum_e prod_{u in e} v_u``."""
    v = _as_vector(v, H.n)
    return float(H.k * np.prod(v[H.edge_array], axis=1).sum())


def apply_multigraph(G: Multigraph, v) -> np.ndarray:
    """``out_u = sum_w mu(uw) v_w``."""
    v = _as_vector(v, G.n)
    u, w, mu = G.pair_arrays
    return np.bincount(u, mu * v[w], minlength=G.n) + np.bincount(w, mu * v[u], minlength=G.n)


def _initial(cfg: SolverConfig, n: int) -> np.ndarray:
    if cfg.initial is None:
        return np.ones(n)
    w = _as_vector(cfg.initial, n).copy()
    if np.any(w <= 0):
        raise ValidationError("initial vector must be strictly positive")
    return w


def _power_iterate(apply, n: int, order: int, cfg: SolverConfig):
    """Shared shifted iteration for ``order = k`` (k = 2 for multigraphs).

    Returns ``(eigenvalue, vector, residual, iterations, bracket, history)``.
    """
    p = order - 1
    w = _initial(cfg, n)
    w /= np.sum(w ** order) ** (1.0 / order)
    history = []
    for it in range(1, cfg.max_iterations + 1):
        wp = w ** p
        Aw = apply(w)
        ratios = Aw / wp
        lower, upper = float(ratios.min()), float(ratios.max())
        if cfg.record_bracket:
            history.append((lower, upper))
        if upper <= 0:
            raise DisconnectedInput("iteration collapsed to zero")
        if (upper - lower) / upper < cfg.tolerance:
            value = 0.5 * (lower + upper)
            residual = float(np.max(np.abs(value * wp - Aw)))
            return value, w, residual, it, (lower, upper), history
        w = (Aw + cfg.shift * wp) ** (1.0 / p)
        w /= np.sum(w ** order) ** (1.0 / order)
    raise NoConvergence(
        f"no convergence after {cfg.max_iterations} iterations; "
        f"eigenvalue bracket [{lower!r}, {upper!r}]",
        bracket=(lower, upper),
        iterations=cfg.max_iterations,
    )


def principal_eigenpair_hyper(H: Hypergraph, cfg: SolverConfig | None = None) -> HyperEigenpair:
    """Unique positive eigenpair of a connected k-graph with ``sum(y^k) = 1``."""
    cfg = cfg or SolverConfig()
    if not is_connected(H):
        raise DisconnectedInput("hypergraph is not connected")
    rho, y, res, it, bracket, hist = _power_iterate(
        lambda w: apply_tensor(H, w), H.n, H.k, cfg
    )
    return HyperEigenpair(rho, y, H.labels, H.k, res, it, bracket, hist)


def principal_eigenpair_graph(G: Multigraph, cfg: SolverConfig | None = None) -> GraphEigenpair:
    """Perron pair of the co-occurrence matrix with ``sum(x^2) = 1``."""
    cfg = cfg or SolverConfig()
    if not G.is_connected() or not G.multiplicity:
        raise DisconnectedInput("multigraph is not connected")
    lam, x, res, it, bracket, hist = _power_iterate(
        lambda w: apply_multigraph(G, w), G.n, 2, cfg
    )
    return GraphEigenpair(lam, x, G.labels, res, it, bracket, hist)


def windmill_spectral_radius(eta: int, k: int) -> float:
    """Largest adjacency eigenvalue of W(eta, k)."""
    if eta < 1 or k < 1:
        raise ValidationError(f"need eta >= 1 and k >= 1, got eta={eta}, k={k}")
    h = (k - 1) / 2
    return h + math.sqrt(h * h + eta * k)


def windmill_center_value(eta: int, k: int) -> float:
    """Center coordinate of the unit 2-norm Perron vector of W(eta, k)."""
    if eta < 1 or k < 1:
        raise ValidationError(f"need eta >= 1 and k >= 1, got eta={eta}, k={k}")
    zeta = k + math.sqrt((k - 1) ** 2 + 4 * k * eta) + 1
    return 2 / (zeta * math.sqrt((2 / zeta - 1) ** 2 / (k * eta) + 4 / zeta ** 2))


class BowtieThresholds(NamedTuple):
    hyper_ok: bool
    shadow_ok: bool
    hyper_margin: float
    shadow_margin: float
    hyper_bound: float
    shadow_bound: float


def bowtie_shadow_boundary(t: int) -> float:
    """Positive root of ``lam^2 - (t+2) lam - 2t``."""
    return (t + 2 + math.sqrt(t * t + 12 * t + 4)) / 2


def bowtie_thresholds(t: int, rho: float, lam: float) -> BowtieThresholds:
    """Rank-1 certificates for B_t.

    Hypergraph side: {r1, r2} are the top vertices iff ``t < rho*sqrt(rho-1) - 1``;
    ``hyper_bound`` is that right-hand side and ``hyper_margin = hyper_bound - t``.
    Shadow side: c alone is on top iff ``lam^2 - (t+2) lam - 2t > 0``;
    ``shadow_bound`` is the positive root and ``shadow_margin = lam - shadow_bound``.
    """
    if not rho > 1:
        raise OutOfRange(f"rho must exceed 1, got {rho}")
    if not lam > 0:
        raise OutOfRange(f"lambda must be positive, got {lam}")
    hyper_bound = rho * math.sqrt(rho - 1) - 1
    shadow_bound = bowtie_shadow_boundary(t)
    return BowtieThresholds(
        hyper_ok=t < hyper_bound,
        shadow_ok=lam * lam - (t + 2) * lam - 2 * t > 0,
        hyper_margin=hyper_bound - t,
        shadow_margin=lam - shadow_bound,
        hyper_bound=hyper_bound,
        shadow_bound=shadow_bound,
    )


def bowtie_certificate_vector(t: int, alpha: float, beta: float) -> np.ndarray:
    """Unit 3-norm test vector on the eigenconsistent B_t.

    c gets ``alpha``, r1 and r2 get ``beta``; the leaves are filled so each of
    the three color classes carries mass 1/3.  Entries follow the vertex order
    of ``pleated_bowtie(t)``.
    """
    from .generators import pleated_bowtie

    if t < 1:
        raise OutOfRange(f"t must be >= 1, got {t}")
    cap = 3 ** (-1 / 3)
    for name, val in (("alpha", alpha), ("beta", beta)):
        if not 0 < val < cap:
            raise OutOfRange(f"{name}={val} outside (0, 3^(-1/3))")
    gamma = ((1 / 3 - alpha ** 3) / t) ** (1 / 3)
    delta = (1 / 3 - beta ** 3) ** (1 / 3)
    eps = ((1 / 3 - beta ** 3) / (t + 1)) ** (1 / 3)
    H = pleated_bowtie(t)
    out = np.empty(H.n)
    for i, lab in enumerate(H.labels):
        if lab == "c":
            out[i] = alpha
        elif lab in ("r1", "r2"):
            out[i] = beta
        elif lab == "l1":
            out[i] = delta
        elif lab[0] == "r":
            out[i] = gamma
        else:
            out[i] = eps
    return out
