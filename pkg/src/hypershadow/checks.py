"""Invariant suite run on a single hypergraph (backs the ``verify`` command)."""

from __future__ import annotations

from dataclasses import replace

import numpy as np

from .hypergraph import Hypergraph, clique_shadow, is_connected, is_strongly_independent
from .ranking import compare, independent_set_mass
from .spectral import SolverConfig, apply_tensor, polynomial_form, principal_eigenpair_hyper


def greedy_independent_set(H: Hypergraph, rng: np.random.Generator) -> list[int]:
    """Random maximal strongly independent set (at most one vertex per edge)."""
    chosen: list[int] = []
    for v in rng.permutation(H.n):
        if is_strongly_independent(H, chosen + [int(v)]):
            chosen.append(int(v))
    return chosen


def verify_instance(H: Hypergraph, cfg: SolverConfig | None = None, seed: int = 0) -> dict:
    """Return ``{check_name: {"ok": bool, "value": ...}}`` for one instance."""
    cfg = cfg or SolverConfig()
    rng = np.random.default_rng(seed)
    out: dict[str, dict] = {}

    def record(name, ok, value):
        out[name] = {"ok": bool(ok), "value": value}

    connected = is_connected(H)
    record("connected", connected, connected)
    G = clique_shadow(H)
    deg_gap = float(np.max(np.abs(G.degrees - (H.k - 1) * H.degrees)))
    record("shadow_degree_identity", deg_gap == 0, deg_gap)
    total = sum(G.multiplicity.values())
    record("shadow_pair_total", total == H.m * H.k * (H.k - 1) // 2, total)

    euler = 0.0
    for _ in range(8):
        v = rng.random(H.n)
        F = polynomial_form(H, v)
        euler = max(euler, abs(F - float(v @ apply_tensor(H, v))) / max(1.0, abs(F)))
    record("euler_identity", euler <= 1e-12, euler)
    if not connected:
        return out

    rep = compare(H, cfg)
    hp = rep.hyper
    norm_gap = abs(float(np.sum(hp.y ** H.k)) - 1)
    record("hyper_normalization", norm_gap <= 1e-12, norm_gap)
    record("hyper_positive", bool(np.all(hp.y > 0)), float(hp.y.min()))
    record("hyper_residual", hp.residual <= 10 * cfg.tolerance * hp.rho, hp.residual)
    record(
        "shadow_residual",
        rep.shadow.residual <= 10 * cfg.tolerance * rep.lam,
        rep.shadow.residual,
    )

    worst = -np.inf
    for _ in range(32):
        v = rng.random(H.n) + 1e-3
        v /= np.sum(v ** H.k) ** (1 / H.k)
        worst = max(worst, polynomial_form(H, v) - hp.rho)
    record("variational_bound", worst <= 10 * cfg.tolerance * max(1.0, hp.rho), float(worst))

    rhos = [principal_eigenpair_hyper(H, replace(cfg, shift=s)).rho for s in (0.5, 1.0, 2.0)]
    spread = max(rhos) - min(rhos)
    record("shift_invariance", spread <= 10 * cfg.tolerance * max(rhos), spread)

    record("chebyshev_bound", rep.chebyshev <= 0.5 + 1e-9, rep.chebyshev)
    S = greedy_independent_set(H, rng)
    mass = independent_set_mass(hp, S, H)
    record("independent_set_mass", mass <= 1 / H.k + 1e-9, mass)
    return out
