"""Zeno products, damped evolutions, speed bounds and rate fitting.

The engine computes (M exp(tL/n))^n and exp(t(gamma K + L)) on the
superoperator level, compares them against the effective dynamics
exp(t PLP) P, and quantifies convergence rates by log-log least squares.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .channels import Superoperator, apply, positive_part_decomposition
from .fock import vacuum_state
from .linalg import as_matrix, devectorize, matrix_exp, trace_norm, vectorize

__all__ = [
    "ConvergenceRecord",
    "ZenoConfig",
    "DampingConfig",
    "SpeedBound",
    "FitResult",
    "zeno_product",
    "zeno_product_iterated",
    "effective_dynamics",
    "zeno_error",
    "damped_evolution",
    "damping_error",
    "chain_states",
    "constant_big_n",
    "theoretical_zeno_bound_ssup",
    "one_one_norm_probe",
    "attenuator_speed_bound",
    "fit_rate",
    "fit_log_envelope",
]

SSUP_L_MAX = 12


@dataclass(frozen=True)
class ConvergenceRecord:
    """One row of a convergence sweep."""

    parameter: float
    error: float
    bound: float | None
    state_id: str
    wall_time_s: float

    def __post_init__(self):
        if self.error < 0:
            raise ValueError("error must be nonnegative")
        if self.bound is not None and self.bound < 0:
            raise ValueError("bound must be nonnegative when present")


def _check_projection_compat(m_mat, p_mat, what: str):
    if np.linalg.norm(p_mat @ p_mat - p_mat) > 1e-9:
        raise ValueError("P is not idempotent within 1e-9")
    if np.linalg.norm(m_mat @ p_mat - p_mat) > 1e-9:
        raise ValueError(f"{what} P != P within 1e-9")
    if np.linalg.norm(p_mat @ m_mat - p_mat) > 1e-9:
        raise ValueError(f"P {what} != P within 1e-9")


def _check_contractive(mat, states, what: str, slack: float = 1e-8):
    for state_id, x in states:
        before = trace_norm(x)
        after = trace_norm(devectorize(mat @ vectorize(x)))
        if after > before + slack:
            raise ValueError(
                f"{what} is not trace-norm contractive on state {state_id!r}: "
                f"{after:.6e} > {before:.6e}"
            )


@dataclass(frozen=True)
class ZenoConfig:
    """Inputs for a Zeno sweep: contraction M, generator L, projection P."""

    m: Superoperator
    l: Superoperator
    p: Superoperator
    t: float
    n_grid: tuple
    test_states: tuple  # (state_id, matrix) pairs

    def __post_init__(self):
        if self.t <= 0:
            raise ValueError("t must be positive")
        grid = tuple(int(n) for n in self.n_grid)
        if not grid or any(n < 1 for n in grid) or sorted(grid) != list(grid):
            raise ValueError("n_grid must be ascending positive integers")
        object.__setattr__(self, "n_grid", grid)
        states = tuple((str(s), as_matrix(x)) for s, x in self.test_states)
        object.__setattr__(self, "test_states", states)

    def validate(self):
        """Contractivity spot-checks and projection compatibility."""
        _check_contractive(self.m.matrix, self.test_states, "M")
        _check_projection_compat(self.m.matrix, self.p.matrix, "M")


@dataclass(frozen=True)
class DampingConfig:
    """Inputs for a damping sweep: semigroup generator K, perturbation L."""

    k: Superoperator
    l: Superoperator
    p: Superoperator
    t: float
    gamma_grid: tuple
    test_states: tuple

    def __post_init__(self):
        if self.t <= 0:
            raise ValueError("t must be positive")
        grid = tuple(float(g) for g in self.gamma_grid)
        if not grid or any(g <= 0 for g in grid) or sorted(grid) != list(grid):
            raise ValueError("gamma_grid must be ascending positive floats")
        object.__setattr__(self, "gamma_grid", grid)
        states = tuple((str(s), as_matrix(x)) for s, x in self.test_states)
        object.__setattr__(self, "test_states", states)

    def validate(self):
        for s in (0.1, 1.0, 10.0):
            _check_contractive(
                matrix_exp(s * self.k.matrix), self.test_states, f"exp({s} K)"
            )
        _check_projection_compat(matrix_exp(self.k.matrix), self.p.matrix, "exp(K)")


def zeno_product(cfg: ZenoConfig, n: int, x) -> np.ndarray:
    """(M exp(tL/n))^n applied to x, by binary exponentiation."""
    if n < 1:
        raise ValueError("n must be >= 1")
    step = cfg.m.matrix @ matrix_exp((cfg.t / n) * cfg.l.matrix)
    return devectorize(np.linalg.matrix_power(step, n) @ vectorize(x))


def zeno_product_iterated(cfg: ZenoConfig, n: int, x) -> np.ndarray:
    """Same product by n repeated applications; cross-check route."""
    if n < 1:
        raise ValueError("n must be >= 1")
    step = cfg.m.matrix @ matrix_exp((cfg.t / n) * cfg.l.matrix)
    v = vectorize(x)
    for _ in range(n):
        v = step @ v
    return devectorize(v)


def effective_dynamics(p: Superoperator, l: Superoperator, t: float) -> Superoperator:
    """exp(t P L P) P, the limit dynamics on the range of P."""
    plp = p.matrix @ l.matrix @ p.matrix
    return Superoperator(matrix=matrix_exp(t * plp) @ p.matrix, label="effective")


def zeno_error(cfg: ZenoConfig, n: int, rho, state_id: str = "", effective=None) -> ConvergenceRecord:
    started = time.perf_counter()
    eff = effective if effective is not None else effective_dynamics(cfg.p, cfg.l, cfg.t)
    out = zeno_product(cfg, n, rho)
    err = trace_norm(out - apply(eff, rho))
    return ConvergenceRecord(
        parameter=float(n),
        error=err,
        bound=None,
        state_id=state_id,
        wall_time_s=time.perf_counter() - started,
    )


def damped_evolution(cfg: DampingConfig, gamma: float, x) -> np.ndarray:
    """exp(t (gamma K + L)) applied to x."""
    if gamma < 0:
        raise ValueError("gamma must be nonnegative")
    total = matrix_exp(cfg.t * (gamma * cfg.k.matrix + cfg.l.matrix))
    return devectorize(total @ vectorize(x))


def damping_error(cfg: DampingConfig, gamma: float, rho, state_id: str = "", effective=None) -> ConvergenceRecord:
    started = time.perf_counter()
    eff = effective if effective is not None else effective_dynamics(cfg.p, cfg.l, cfg.t)
    out = damped_evolution(cfg, gamma, rho)
    err = trace_norm(out - apply(eff, rho))
    return ConvergenceRecord(
        parameter=float(gamma),
        error=err,
        bound=None,
        state_id=state_id,
        wall_time_s=time.perf_counter() - started,
    )


def chain_states(l: Superoperator, p: Superoperator, t: float, x, length: int) -> list:
    """The matrices (t L P)^{l-1} x for l = 1..length."""
    states = [as_matrix(x)]
    step = t * (l.matrix @ p.matrix)
    v = vectorize(x)
    for _ in range(length - 1):
        v = step @ v
        states.append(devectorize(v))
    return states


def constant_big_n(n: int, delta: float, length: int) -> list:
    """The constant cutoff sequence N_l = floor(log n / log(1/delta))."""
    if not 0 < delta < 1:
        raise ValueError("delta must lie in (0, 1)")
    value = max(1, int(np.floor(np.log(n) / np.log(1.0 / delta))))
    return [value] * length


@dataclass(frozen=True)
class SpeedBound:
    value: float
    argmax_l: int
    attained_inside_truncation: bool


def _lookup_decreasing(table, n: int) -> float:
    """Value of a grid-sup mixing table at the largest grid point <= n.

    The table is monotone nonincreasing, so this is a safe upper bound for
    s_n; queries below the grid clamp to the first entry.
    """
    best = table[0][1]
    for grid_n, value in table:
        if grid_n <= n:
            best = value
        else:
            break
    return best


def theoretical_zeno_bound_ssup(
    s_tables,
    l_norm: float,
    t: float,
    n: int,
    big_n,
    x_norm: float,
    l_max: int = SSUP_L_MAX,
) -> SpeedBound:
    """Evaluate sup_l ( ||tL||^{-l+1} s_{N_l}(chain_l) + N_l/n ||x|| ).

    ``s_tables[l-1]`` is the empirical mixing table for the chain state
    (tLP)^{l-1} x, as produced by ``mixing_speed_empirical``.  The supremum
    over l is truncated at ``l_max``; the report records whether the max was
    attained strictly inside the truncation.
    """
    big_n = [int(v) for v in big_n]
    l_max = min(l_max, len(big_n))
    if l_max > len(s_tables):
        raise ValueError(
            f"sup truncated at l_max={l_max} but only {len(s_tables)} chain tables supplied"
        )
    tl_norm = t * l_norm
    terms = []
    for l in range(1, l_max + 1):
        s_val = _lookup_decreasing(s_tables[l - 1], big_n[l - 1])
        if l == 1:
            weighted = s_val
        elif tl_norm > 0:
            weighted = tl_norm ** (-(l - 1)) * s_val
        elif s_val == 0:
            weighted = 0.0  # L = 0 kills every chain state past the first
        else:
            raise ValueError("||tL|| is zero but a chain state still mixes")
        terms.append(weighted + big_n[l - 1] / n * x_norm)
    argmax = int(np.argmax(terms)) + 1
    return SpeedBound(
        value=float(max(terms)),
        argmax_l=argmax,
        attained_inside_truncation=argmax < l_max,
    )


@dataclass(frozen=True)
class ProbeNorm:
    """Lower-bound estimate of the trace-norm -> trace-norm operator norm."""

    value: float
    probe_count: int


def one_one_norm_probe(l: Superoperator, extra_probes: int = 64, seed: int = 0) -> ProbeNorm:
    """max ||L(x)||_1 / ||x||_1 over matrix units plus random probes.

    Exact 1->1 superoperator norms are intractable in general; this reports
    a lower bound together with the number of probes used (always >= 200).
    """
    d = l.dim
    probes = []
    for i in range(d):
        for j in range(d):
            unit = np.zeros((d, d), dtype=np.complex128)
            unit[i, j] = 1.0
            probes.append(unit)
    rng = np.random.default_rng(np.random.Philox(key=np.array([seed, 0x1111], dtype=np.uint64)))
    target = max(200, d * d + 2 * extra_probes)
    while len(probes) < target:
        g = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
        probes.append(g + g.conj().T)
        probes.append(g @ g.conj().T)
    best = 0.0
    for x in probes:
        denom = trace_norm(x)
        if denom < 1e-14:
            continue
        best = max(best, trace_norm(apply(l, x)) / denom)
    return ProbeNorm(value=best, probe_count=len(probes))


def attenuator_speed_bound(rho, l: Superoperator, t: float, n_or_gamma: float) -> float:
    """State-dependent factor of the attenuator rate bound, times log(m)/m.

    factor = sum_i ( Tr((N+1) rho_i) + Tr((N+1) L(vac)_i) ||rho||_1 / ||L|| )
    over the four PSD parts of rho and of L(|0><0|); the overall fitted
    constant is reported separately by the callers.
    """
    if n_or_gamma <= 1:
        raise ValueError("rate bound needs parameter > 1 (log must be positive)")
    rho = as_matrix(rho)
    d = rho.shape[0]
    n_diag = np.arange(d, dtype=float) + 1.0
    l_vac = apply(l, vacuum_state(d))
    l_norm = one_one_norm_probe(l).value
    rho_norm = trace_norm(rho)
    factor = 0.0
    for part in positive_part_decomposition(rho):
        factor += float(n_diag @ np.real(np.diag(part)))
    if l_norm > 1e-14:
        for part in positive_part_decomposition(l_vac):
            factor += float(n_diag @ np.real(np.diag(part))) * rho_norm / l_norm
    m = float(n_or_gamma)
    return float(np.log(m) / m * factor)


@dataclass(frozen=True)
class FitResult:
    exponent: float
    constant: float
    residual_rms: float


def fit_rate(records, model: str = "pure_power") -> FitResult:
    """Least-squares rate fit on log error vs log parameter.

    pure_power:  log e = log C - p log n
    power_log:   log e = log C + log log n - p log n
    """
    if model not in ("pure_power", "power_log"):
        raise ValueError(f"unknown model {model!r}")
    params = np.array([r.parameter for r in records], dtype=float)
    errors = np.array([r.error for r in records], dtype=float)
    if len(records) < 4:
        raise ValueError("rate fit needs at least 4 records")
    if np.any(errors <= 0):
        raise ValueError("rate fit needs strictly positive errors")
    if np.unique(params).size < 2:
        raise ValueError("rate fit needs a non-degenerate parameter grid")
    y = np.log(errors)
    if model == "power_log":
        if np.any(params <= 1):
            raise ValueError("power_log model needs parameters > 1")
        y = y - np.log(np.log(params))
    design = np.stack([np.ones_like(params), -np.log(params)], axis=1)
    sol, *_ = np.linalg.lstsq(design, y, rcond=None)
    log_c, p = sol
    resid = design @ sol - y
    return FitResult(
        exponent=float(p),
        constant=float(np.exp(log_c)),
        residual_rms=float(np.sqrt(np.mean(resid**2))),
    )


def fit_log_envelope(records) -> tuple:
    """Pin C so error = C log(n)/n at the first record; test domination.

    Returns (C, holds) where holds says every later record satisfies
    error <= C log(n)/n.
    """
    first = records[0]
    if first.parameter <= 1:
        raise ValueError("envelope needs first parameter > 1")
    c = first.error * first.parameter / np.log(first.parameter)
    holds = all(
        r.error <= c * np.log(r.parameter) / r.parameter + 1e-15 for r in records
    )
    return float(c), bool(holds)
