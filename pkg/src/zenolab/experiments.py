"""Declarative experiments: config parsing, presets, sweeps and CSV output.

Config files use INI sections (parsed with :mod:`configparser`); the exact
grammar is documented in the README.  All randomness is derived from one
64-bit seed through counter-based Philox streams, so a sweep produces
byte-identical CSV output (wall-time column aside) regardless of thread
count or execution order.
"""

from __future__ import annotations

import configparser
import csv
import io
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import binomial as bn
from .channels import (
    Dephasing,
    HamiltonianCommutator,
    Superoperator,
    attenuator_generator,
    attenuator_kraus,
    attenuator_mixing_bound,
    to_superoperator,
    vacuum_projection_superop,
)
from .fock import annihilation, coherent_vector, number_operator
from .linalg import devectorize, matrix_exp, trace_norm, vectorize
from .sampling import (
    random_density_matrix,
    random_gapped_channel,
    random_hermitian,
    random_operator,
    stream,
)
from .zeno import (
    DampingConfig,
    ZenoConfig,
    effective_dynamics,
    fit_log_envelope,
    fit_rate,
)

__all__ = [
    "ConfigError",
    "InvariantViolation",
    "ExperimentConfig",
    "ReportRow",
    "CSV_HEADER",
    "PRESETS",
    "list_presets",
    "parse_config",
    "parse_config_text",
    "preset_config",
    "build_states",
    "run_experiment",
    "write_csv",
    "rows_to_csv_text",
    "emit_plot_script",
]

CSV_HEADER = (
    "experiment_id",
    "kind",
    "parameter",
    "state_id",
    "error",
    "bound",
    "fitted_C",
    "fitted_p",
    "wall_time_ms",
)

KINDS = ("mixing", "zeno", "damping", "binomial", "simplex")

# Philox stream indices; states get 1000 + index.
_STREAM_CHANNEL = 1
_STREAM_GENERATOR = 2
_STREAM_BINOMIAL = 3
_STATE_STREAM_BASE = 1000


class ConfigError(Exception):
    """Invalid configuration; ``field`` names the offending key."""

    def __init__(self, field_name: str, message: str):
        self.field = field_name
        super().__init__(f"{field_name}: {message}")


class InvariantViolation(Exception):
    """A validated runtime contract was breached during the run."""

    def __init__(self, field_name: str, message: str):
        self.field = field_name
        super().__init__(f"{field_name}: {message}")


@dataclass(frozen=True)
class ExperimentConfig:
    kind: str
    experiment_id: str
    seed: int = 0
    dimension: int = 24
    t: float = 1.0
    eta: complex = 0.5
    channel_type: str = "attenuator"  # attenuator | gapped
    gapped_delta: float = 0.5
    system_dim: int = 2
    generator_type: str = "hamiltonian"  # hamiltonian | dephasing | none
    hamiltonian_kind: str = "quadrature"  # quadrature | number | random
    generator_scale: float | None = None
    dephasing_rate: float = 0.1
    binomial_mode: str = "exp-limit"  # exp-limit | gapped
    k_max: int = 8
    grid_start: float = 8.0
    grid_factor: float = 2.0
    grid_count: int = 10
    state_specs: tuple = ("fock:1",)
    tail_budget: float = 1e-12
    output_path: str | None = None

    def grid(self) -> list:
        return [self.grid_start * self.grid_factor**j for j in range(self.grid_count)]


@dataclass(frozen=True)
class ReportRow:
    experiment_id: str
    kind: str
    parameter: float
    state_id: str
    error: float
    bound: float | None
    fitted_c: float | None
    fitted_p: float | None
    wall_time_ms: float


def _get(parser, section, key, cast, default=None, required=False):
    if not parser.has_option(section, key):
        if required:
            raise ConfigError(f"{section}.{key}", "missing required key")
        return default
    raw = parser.get(section, key)
    try:
        return cast(raw)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"{section}.{key}", f"cannot parse {raw!r}: {exc}") from exc


def parse_config_text(text: str) -> ExperimentConfig:
    parser = configparser.ConfigParser(inline_comment_prefixes=(";", "#"))
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ConfigError("config", f"malformed file: {exc}") from exc
    if not parser.has_section("experiment"):
        raise ConfigError("experiment", "missing [experiment] section")

    kind = _get(parser, "experiment", "kind", str, required=True)
    if kind not in KINDS:
        raise ConfigError("experiment.kind", f"must be one of {KINDS}, got {kind!r}")
    exp_id = _get(parser, "experiment", "id", str, default=kind)
    seed = _get(parser, "experiment", "seed", int, default=0)
    dimension = _get(parser, "experiment", "dimension", int, default=24)
    if dimension < 2:
        raise ConfigError("experiment.dimension", f"must be >= 2, got {dimension}")
    t = _get(parser, "experiment", "t", float, default=1.0)
    if t <= 0:
        raise ConfigError("experiment.t", f"must be positive, got {t}")

    eta_re = _get(parser, "channel", "eta_re", float, default=0.5)
    eta_im = _get(parser, "channel", "eta_im", float, default=0.0)
    eta = complex(eta_re, eta_im)
    if abs(eta) > 1:
        raise ConfigError("channel.eta_re", f"|eta| must be <= 1, got {abs(eta):.6f}")
    channel_type = _get(parser, "channel", "type", str, default="attenuator")
    if channel_type not in ("attenuator", "gapped"):
        raise ConfigError("channel.type", f"must be attenuator or gapped, got {channel_type!r}")
    gapped_delta = _get(parser, "channel", "delta", float, default=0.5)
    if not 0 < gapped_delta < 1:
        raise ConfigError("channel.delta", f"must lie in (0, 1), got {gapped_delta}")
    system_dim = _get(parser, "channel", "system_dim", int, default=2)
    if system_dim < 2:
        raise ConfigError("channel.system_dim", f"must be >= 2, got {system_dim}")

    generator_type = _get(parser, "generator", "type", str, default="hamiltonian")
    if generator_type not in ("hamiltonian", "dephasing", "none"):
        raise ConfigError("generator.type", f"unknown generator type {generator_type!r}")
    hamiltonian_kind = _get(parser, "generator", "hamiltonian", str, default="quadrature")
    if hamiltonian_kind not in ("quadrature", "number", "random"):
        raise ConfigError("generator.hamiltonian", f"unknown hamiltonian {hamiltonian_kind!r}")
    generator_scale = _get(parser, "generator", "scale", float, default=None)
    dephasing_rate = _get(parser, "generator", "rate", float, default=0.1)
    if dephasing_rate < 0:
        raise ConfigError("generator.rate", "must be nonnegative")

    binomial_mode = _get(parser, "binomial", "mode", str, default="exp-limit")
    if binomial_mode not in ("exp-limit", "gapped"):
        raise ConfigError("binomial.mode", f"unknown mode {binomial_mode!r}")
    bin_system_dim = _get(parser, "binomial", "system_dim", int, default=system_dim)
    k_max = _get(parser, "simplex", "k_max", int, default=8)
    if not 1 <= k_max <= 16:
        raise ConfigError("simplex.k_max", f"must lie in [1, 16], got {k_max}")

    grid_start = _get(parser, "grid", "start", float, default=8.0)
    grid_factor = _get(parser, "grid", "factor", float, default=2.0)
    grid_count = _get(parser, "grid", "count", int, default=10)
    if grid_start < 1:
        raise ConfigError("grid.start", f"must be >= 1, got {grid_start}")
    if grid_count < 1:
        raise ConfigError("grid.count", f"must be >= 1, got {grid_count}")
    if grid_count > 1 and grid_factor <= 1:
        raise ConfigError("grid.factor", f"must be > 1 for an increasing grid, got {grid_factor}")

    specs_raw = _get(parser, "states", "specs", str, default="fock:1")
    specs = tuple(s.strip() for s in specs_raw.split(",") if s.strip())
    if not specs:
        raise ConfigError("states.specs", "must list at least one state")

    tail_budget = _get(parser, "tolerances", "tail_mass", float, default=1e-12)
    if tail_budget <= 0:
        raise ConfigError("tolerances.tail_mass", "must be positive")
    output_path = _get(parser, "output", "path", str, default=None)

    return ExperimentConfig(
        kind=kind,
        experiment_id=exp_id,
        seed=seed,
        dimension=dimension,
        t=t,
        eta=eta,
        channel_type=channel_type,
        gapped_delta=gapped_delta,
        system_dim=bin_system_dim if kind == "binomial" else system_dim,
        generator_type=generator_type,
        hamiltonian_kind=hamiltonian_kind,
        generator_scale=generator_scale,
        dephasing_rate=dephasing_rate,
        binomial_mode=binomial_mode,
        k_max=k_max,
        grid_start=grid_start,
        grid_factor=grid_factor,
        grid_count=grid_count,
        state_specs=specs,
        tail_budget=tail_budget,
        output_path=output_path,
    )


def parse_config(path: str) -> ExperimentConfig:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ConfigError("config", f"cannot read {path!r}: {exc}") from exc
    return parse_config_text(text)


# ----------------------------------------------------------------------------
# state construction


def _fock_projector(level: int, dim: int) -> np.ndarray:
    rho = np.zeros((dim, dim), dtype=np.complex128)
    rho[level, level] = 1.0
    return rho


def build_states(cfg: ExperimentConfig, dim: int) -> list:
    """Resolve state specs into (state_id, density matrix) pairs."""
    states = []
    for spec in cfg.state_specs:
        if ":" not in spec:
            raise ConfigError("states.specs", f"malformed spec {spec!r} (expected kind:value)")
        name, _, value = spec.partition(":")
        if name == "fock":
            try:
                level = int(value)
            except ValueError as exc:
                raise ConfigError("states.specs", f"bad fock level in {spec!r}") from exc
            if not 0 <= level < dim:
                raise ConfigError("states.specs", f"fock level {level} outside [0, {dim - 1}]")
            states.append((spec, _fock_projector(level, dim)))
        elif name == "coherent":
            try:
                alpha = complex(value)
            except ValueError as exc:
                raise ConfigError("states.specs", f"bad coherent amplitude in {spec!r}") from exc
            vec = coherent_vector(alpha, dim)
            if vec.tail_mass > cfg.tail_budget:
                raise InvariantViolation(
                    "states.specs",
                    f"{spec!r} has tail_mass {vec.tail_mass:.3e} above budget "
                    f"{cfg.tail_budget:.1e} at dimension {dim}",
                )
            states.append((spec, vec.projector()))
        elif name == "random":
            try:
                offset = int(value)
            except ValueError as exc:
                raise ConfigError("states.specs", f"bad random index in {spec!r}") from exc
            rng = stream(cfg.seed, _STATE_STREAM_BASE + offset)
            states.append((spec, random_density_matrix(dim, rng)))
        else:
            raise ConfigError("states.specs", f"unknown state kind {name!r} in {spec!r}")
    return states


def _build_generator(cfg: ExperimentConfig, dim: int) -> Superoperator:
    scale = cfg.generator_scale if cfg.generator_scale is not None else 1.0 / dim
    if cfg.generator_type == "none":
        return Superoperator(matrix=np.zeros((dim * dim, dim * dim), dtype=np.complex128), label="zero")
    if cfg.generator_type == "dephasing":
        return Dephasing(rate=cfg.dephasing_rate).to_superoperator(dim)
    if cfg.hamiltonian_kind == "quadrature":
        a = annihilation(dim)
        h = (a + a.conj().T) * scale
    elif cfg.hamiltonian_kind == "number":
        h = number_operator(dim) * scale
    else:  # random
        h = random_hermitian(dim, stream(cfg.seed, _STREAM_GENERATOR), norm=scale)
    return HamiltonianCommutator(hamiltonian=h).to_superoperator(dim)


def _build_mixing_pair(cfg: ExperimentConfig):
    """Return (M, P, state_dim) for the configured mixing operation."""
    if cfg.channel_type == "attenuator":
        d = cfg.dimension
        m = to_superoperator(attenuator_kraus(cfg.eta, d), label="attenuator")
        return m, vacuum_projection_superop(d), d
    m, p, _ = random_gapped_channel(
        cfg.system_dim, stream(cfg.seed, _STREAM_CHANNEL), cfg.gapped_delta
    )
    return m, p, cfg.system_dim


# ----------------------------------------------------------------------------
# per-kind runners


def _map_tasks(tasks, threads: int):
    if threads <= 1:
        return [task() for task in tasks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(task) for task in tasks]
        return [f.result() for f in futures]


def _attach_fits(cells, exp_id, kind, *, fit_model):
    """Per-state rate fits plus the log-envelope bound pinned at the first point."""
    rows = []
    by_state = {}
    for parameter, state_id, error, wall in cells:
        by_state.setdefault(state_id, []).append((parameter, error, wall))
    for state_id, triples in by_state.items():
        triples.sort(key=lambda item: item[0])
        params = [p for p, _, _ in triples]
        errors = [e for _, e, _ in triples]
        fitted_c = fitted_p = None
        envelope = None
        if len(triples) >= 4 and all(e > 0 for e in errors) and min(params) > 1:
            records = [_Rec(p, e) for p, e in zip(params, errors)]
            fit = fit_rate(records, model=fit_model)
            fitted_c, fitted_p = fit.constant, fit.exponent
            envelope, _ = fit_log_envelope(records)
        for parameter, error, wall in triples:
            bound = None
            if envelope is not None:
                bound = envelope * float(np.log(parameter)) / parameter
            rows.append(
                ReportRow(
                    experiment_id=exp_id,
                    kind=kind,
                    parameter=parameter,
                    state_id=state_id,
                    error=error,
                    bound=bound,
                    fitted_c=fitted_c,
                    fitted_p=fitted_p,
                    wall_time_ms=wall * 1000.0,
                )
            )
    return rows


@dataclass(frozen=True)
class _Rec:
    parameter: float
    error: float


def _run_mixing(cfg: ExperimentConfig, threads: int) -> list:
    d = cfg.dimension
    p = vacuum_projection_superop(d)
    states = build_states(cfg, d)
    grid = [int(round(n)) for n in cfg.grid()]

    def task_for(n):
        def task():
            # Phi^n equals the channel at eta^n (semigroup property); forming
            # the difference superoperator first keeps tiny errors below the
            # cancellation floor of an explicit subtraction of states.
            diff = to_superoperator(attenuator_kraus(cfg.eta**n, d)).matrix - p.matrix
            out = []
            for state_id, rho in states:
                started = time.perf_counter()
                err = trace_norm(devectorize(diff @ vectorize(rho)))
                bound = attenuator_mixing_bound(cfg.eta, n, rho)
                out.append((float(n), state_id, err, bound, time.perf_counter() - started))
            return out
        return task

    cells = [c for chunk in _map_tasks([task_for(n) for n in grid], threads) for c in chunk]
    return [
        ReportRow(cfg.experiment_id, "mixing", par, sid, err, bound, None, None, wall * 1000.0)
        for par, sid, err, bound, wall in cells
    ]


def _run_zeno(cfg: ExperimentConfig, threads: int) -> list:
    m, p, dim = _build_mixing_pair(cfg)
    l = _build_generator(cfg, dim)
    states = build_states(cfg, dim)
    grid = [int(round(n)) for n in cfg.grid()]
    zcfg = ZenoConfig(m=m, l=l, p=p, t=cfg.t, n_grid=grid, test_states=states)
    zcfg.validate()
    eff = effective_dynamics(p, l, cfg.t)

    def task_for(n):
        def task():
            step = m.matrix @ matrix_exp((cfg.t / n) * l.matrix)
            power = np.linalg.matrix_power(step, n)
            out = []
            for state_id, rho in states:
                started = time.perf_counter()
                err = trace_norm(devectorize((power - eff.matrix) @ vectorize(rho)))
                out.append((float(n), state_id, err, time.perf_counter() - started))
            return out
        return task

    cells = [c for chunk in _map_tasks([task_for(n) for n in grid], threads) for c in chunk]
    return _attach_fits(cells, cfg.experiment_id, "zeno", fit_model="power_log")


def _run_damping(cfg: ExperimentConfig, threads: int) -> list:
    d = cfg.dimension
    k = attenuator_generator(d)
    p = vacuum_projection_superop(d)
    l = _build_generator(cfg, d)
    states = build_states(cfg, d)
    grid = cfg.grid()
    dcfg = DampingConfig(k=k, l=l, p=p, t=cfg.t, gamma_grid=grid, test_states=states)
    dcfg.validate()
    eff = effective_dynamics(p, l, cfg.t)

    def task_for(gamma):
        def task():
            total = matrix_exp(cfg.t * (gamma * k.matrix + l.matrix))
            out = []
            for state_id, rho in states:
                started = time.perf_counter()
                err = trace_norm(devectorize((total - eff.matrix) @ vectorize(rho)))
                out.append((float(gamma), state_id, err, time.perf_counter() - started))
            return out
        return task

    cells = [c for chunk in _map_tasks([task_for(g) for g in grid], threads) for c in chunk]
    return _attach_fits(cells, cfg.experiment_id, "damping", fit_model="power_log")


def _run_binomial(cfg: ExperimentConfig, threads: int) -> list:
    s = cfg.system_dim
    if cfg.binomial_mode == "exp-limit":
        m_mat = np.eye(s * s, dtype=np.complex128)
        l_mat = random_operator(s * s, stream(cfg.seed, _STREAM_BINOMIAL), norm=0.9)
        target = matrix_exp(l_mat)
        fit_model = "pure_power"
    else:
        m, p, _ = random_gapped_channel(s, stream(cfg.seed, _STREAM_CHANNEL), cfg.gapped_delta)
        m_mat = m.matrix
        l_mat = random_operator(s * s, stream(cfg.seed, _STREAM_BINOMIAL), norm=0.5)
        target = matrix_exp(p.matrix @ l_mat @ p.matrix) @ p.matrix
        fit_model = "power_log"
    states = build_states(cfg, s)
    grid = [int(round(n)) for n in cfg.grid()]

    def task_for(n):
        def task():
            product = bn.binomial_product(m_mat, l_mat, n)
            out = []
            for state_id, rho in states:
                started = time.perf_counter()
                err = trace_norm(devectorize((product - target) @ vectorize(rho)))
                out.append((float(n), state_id, err, time.perf_counter() - started))
            return out
        return task

    cells = [c for chunk in _map_tasks([task_for(n) for n in grid], threads) for c in chunk]
    return _attach_fits(cells, cfg.experiment_id, "binomial", fit_model=fit_model)


def _run_simplex(cfg: ExperimentConfig, threads: int) -> list:
    del threads  # counting is cheap; no parallel map needed
    rows = []
    grid = [int(round(n)) for n in cfg.grid()]
    for n in grid:
        for k in range(1, cfg.k_max + 1):
            if n < k:
                continue
            started = time.perf_counter()
            check = bn.simplex_ratio_bound_check(n, k)
            deviation = abs(check.ratio - check.limit)
            rows.append(
                ReportRow(
                    experiment_id=cfg.experiment_id,
                    kind="simplex",
                    parameter=float(n),
                    state_id=f"k={k}",
                    error=deviation,
                    bound=check.bound,
                    fitted_c=None,
                    fitted_p=None,
                    wall_time_ms=(time.perf_counter() - started) * 1000.0,
                )
            )
    return rows


_RUNNERS = {
    "mixing": _run_mixing,
    "zeno": _run_zeno,
    "damping": _run_damping,
    "binomial": _run_binomial,
    "simplex": _run_simplex,
}


def run_experiment(cfg: ExperimentConfig, threads: int = 1) -> list:
    """Execute the sweep; rows come back sorted by (parameter, state_id)."""
    try:
        rows = _RUNNERS[cfg.kind](cfg, threads)
    except ValueError as exc:
        # engine-level contract breaches surface as invariant violations
        raise InvariantViolation(cfg.kind, str(exc)) from exc
    return sorted(rows, key=lambda r: (r.parameter, r.state_id))


# ----------------------------------------------------------------------------
# CSV and plot-script output


def _fmt(value) -> str:
    if value is None:
        return ""
    f = float(value)
    if f == int(f) and abs(f) < 1e15:
        return str(int(f))
    return repr(f)


def rows_to_csv_text(rows) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in rows:
        writer.writerow(
            [
                r.experiment_id,
                r.kind,
                _fmt(r.parameter),
                r.state_id,
                repr(float(r.error)),
                _fmt(r.bound) if r.bound is not None else "",
                _fmt(r.fitted_c) if r.fitted_c is not None else "",
                _fmt(r.fitted_p) if r.fitted_p is not None else "",
                repr(float(r.wall_time_ms)),
            ]
        )
    return buffer.getvalue()


def write_csv(rows, path: str) -> str:
    text = rows_to_csv_text(rows)
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(text)
    return path


_PLOT_TEMPLATE = '''#!/usr/bin/env python3
"""Auto-generated plot script: error and bound vs parameter, log-log."""
import csv
from collections import defaultdict

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

CSV_PATH = {csv_path!r}
OUT_PATH = {png_path!r}

series = defaultdict(lambda: {{"parameter": [], "error": [], "bound": []}})
with open(CSV_PATH, newline="") as handle:
    for row in csv.DictReader(handle):
        s = series[row["state_id"]]
        s["parameter"].append(float(row["parameter"]))
        s["error"].append(float(row["error"]))
        s["bound"].append(float(row["bound"]) if row["bound"] else None)

fig, ax = plt.subplots(figsize=(7, 5))
for state_id, s in sorted(series.items()):
    ax.loglog(s["parameter"], s["error"], "o-", label=f"error {{state_id}}")
    pairs = [(p, b) for p, b in zip(s["parameter"], s["bound"]) if b is not None and b > 0]
    if pairs:
        ax.loglog([p for p, _ in pairs], [b for _, b in pairs], "--", label=f"bound {{state_id}}")
ax.set_xlabel("parameter")
ax.set_ylabel("trace-norm error")
ax.grid(True, which="both", alpha=0.3)
ax.legend(fontsize=8)
fig.tight_layout()
fig.savefig(OUT_PATH, dpi=150)
print(f"wrote {{OUT_PATH}}")
'''


def emit_plot_script(csv_path: str, out_path: str | None = None) -> str:
    """Write a self-contained matplotlib script next to the CSV."""
    import os

    if not os.path.exists(csv_path):
        raise ConfigError("plot.csv", f"no such CSV file: {csv_path!r}")
    if out_path is None:
        out_path = os.path.splitext(csv_path)[0] + "_plot.py"
    png_path = os.path.splitext(csv_path)[0] + ".png"
    with open(out_path, "w", encoding="utf-8", newline="") as handle:
        handle.write(_PLOT_TEMPLATE.format(csv_path=csv_path, png_path=png_path))
    return out_path


# ----------------------------------------------------------------------------
# presets

PRESETS = {
    "attenuator-mixing": (
        "photon-loss mixing error vs the 4|eta|^n Tr((N+1)rho) bound",
        """\
[experiment]
kind = mixing
id = attenuator-mixing
seed = 11
dimension = 16

[channel]
eta_re = 0.8

[grid]
start = 1
factor = 2
count = 7

[states]
specs = fock:1, coherent:0.8, random:0, random:1
""",
    ),
    "attenuator-zeno": (
        "Zeno sweep of the attenuator with a quadrature-Hamiltonian perturbation",
        """\
[experiment]
kind = zeno
id = attenuator-zeno
seed = 11
dimension = 16
t = 1.0

[channel]
eta_re = 0.5

[generator]
type = hamiltonian
hamiltonian = quadrature

[grid]
start = 8
factor = 2
count = 10

[states]
specs = fock:1, coherent:0.8
""",
    ),
    "attenuator-damping": (
        "strong-damping sweep of the attenuator semigroup",
        """\
[experiment]
kind = damping
id = attenuator-damping
seed = 11
dimension = 16
t = 1.0

[generator]
type = hamiltonian
hamiltonian = quadrature

[grid]
start = 8
factor = 2
count = 9

[states]
specs = fock:1, coherent:0.8
""",
    ),
    "uniform-zeno": (
        "Zeno sweep for a random gapped (uniformly mixing) channel",
        """\
[experiment]
kind = zeno
id = uniform-zeno
seed = 424242
t = 1.0

[channel]
type = gapped
delta = 0.5
system_dim = 2

[generator]
type = hamiltonian
hamiltonian = random
scale = 0.5

[grid]
start = 8
factor = 2
count = 10

[states]
specs = random:0, random:1
""",
    ),
    "binomial-limit": (
        "classic (I + L/n)^n -> exp(L) operator limit",
        """\
[experiment]
kind = binomial
id = binomial-limit
seed = 7

[binomial]
mode = exp-limit
system_dim = 2

[grid]
start = 8
factor = 2
count = 10

[states]
specs = random:0, random:1
""",
    ),
    "simplex-bounds": (
        "discrete-simplex cardinality ratios against the exact bounds",
        """\
[experiment]
kind = simplex
id = simplex-bounds

[simplex]
k_max = 8

[grid]
start = 8
factor = 2
count = 8
""",
    ),
}


def list_presets() -> list:
    return [(name, desc) for name, (desc, _) in PRESETS.items()]


def preset_config(name: str) -> ExperimentConfig:
    if name not in PRESETS:
        raise ConfigError("preset", f"unknown preset {name!r}; see `zenolab presets`")
    return parse_config_text(PRESETS[name][1])
