"""Quantum channels, superoperators and the bosonic attenuator.

Superoperators are (d*d, d*d) matrices acting on column-stacked operators,
so a Kraus map sum_i K_i x K_i^dag has matrix sum_i conj(K_i) kron K_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .fock import annihilation, number_operator, particle_number, vacuum_state
from .linalg import adjoint, as_matrix, devectorize, kron, trace_norm, vectorize

__all__ = [
    "KrausChannel",
    "Superoperator",
    "HamiltonianCommutator",
    "Dephasing",
    "ExplicitSuperoperator",
    "GeneratorSpec",
    "build_generator",
    "attenuator_kraus",
    "to_superoperator",
    "apply",
    "identity_superoperator",
    "transpose_superoperator",
    "choi_matrix",
    "is_completely_positive",
    "attenuator_generator",
    "vacuum_projection_superop",
    "mixing_speed_empirical",
    "attenuator_mixing_bound",
    "cesaro_mean",
    "positive_part_decomposition",
]

CHOI_MAX_DIM = 32


@dataclass(frozen=True)
class KrausChannel:
    """A completely positive map given by a finite Kraus list."""

    kraus_ops: tuple
    trace_preserving: bool = True

    def __post_init__(self):
        if not self.kraus_ops:
            raise ValueError("Kraus list must be nonempty")
        ops = tuple(as_matrix(k) for k in self.kraus_ops)
        d = ops[0].shape[0]
        for k in ops:
            if k.shape != (d, d):
                raise ValueError("all Kraus operators must be square with equal dimension")
        object.__setattr__(self, "kraus_ops", ops)
        total = sum(adjoint(k) @ k for k in ops)
        if self.trace_preserving:
            if np.linalg.norm(total - np.eye(d)) > 1e-10:
                raise ValueError("Kraus operators are not trace preserving within 1e-10")
        else:
            top = np.linalg.eigvalsh((total + total.conj().T) / 2).max()
            if top > 1.0 + 1e-10:
                raise ValueError("Kraus operators exceed the trace-non-increasing contract")

    @property
    def dim(self) -> int:
        return self.kraus_ops[0].shape[0]


@dataclass(frozen=True)
class Superoperator:
    """Matrix of a linear map on d x d operators (column-stacking convention)."""

    matrix: np.ndarray
    label: str = ""

    def __post_init__(self):
        m = as_matrix(self.matrix)
        d = int(round(np.sqrt(m.shape[0])))
        if m.shape[0] != m.shape[1] or d * d != m.shape[0]:
            raise ValueError(f"superoperator matrix must be d^2 x d^2, got {m.shape}")
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return int(round(np.sqrt(self.matrix.shape[0])))


def attenuator_kraus(eta: complex, dim: int) -> KrausChannel:
    """Photon-loss channel on the truncated space.

    K_l has entries sqrt(C(n+l, n) (1-|eta|^2)^l) eta^n at (n, n+l); with
    all l = 0..d-1 present the truncated list is exactly trace preserving.
    """
    eta = complex(eta)
    if abs(eta) > 1 + 1e-12:
        raise ValueError(f"attenuator requires |eta| <= 1, got |eta|={abs(eta)}")
    loss = max(1.0 - abs(eta) ** 2, 0.0)
    ops = []
    for l in range(dim):
        k = np.zeros((dim, dim), dtype=np.complex128)
        for n in range(dim - l):
            k[n, n + l] = np.sqrt(comb(n + l, n) * loss**l) * eta**n
        ops.append(k)
    return KrausChannel(kraus_ops=tuple(ops))


def to_superoperator(channel: KrausChannel, label: str = "") -> Superoperator:
    mat = sum(kron(k.conj(), k) for k in channel.kraus_ops)
    return Superoperator(matrix=mat, label=label)


def apply(op, x) -> np.ndarray:
    """Apply a KrausChannel or Superoperator to a matrix."""
    x = as_matrix(x)
    if isinstance(op, KrausChannel):
        if x.shape != (op.dim, op.dim):
            raise ValueError(f"dimension mismatch: channel dim {op.dim}, state {x.shape}")
        return sum(k @ x @ k.conj().T for k in op.kraus_ops)
    if isinstance(op, Superoperator):
        if x.shape != (op.dim, op.dim):
            raise ValueError(f"dimension mismatch: superoperator dim {op.dim}, state {x.shape}")
        return devectorize(op.matrix @ vectorize(x))
    raise TypeError(f"cannot apply object of type {type(op).__name__}")


def identity_superoperator(dim: int) -> Superoperator:
    return Superoperator(matrix=np.eye(dim * dim, dtype=np.complex128), label="id")


def transpose_superoperator(dim: int) -> Superoperator:
    """x -> x^T; the canonical positive-but-not-CP map."""
    mat = np.zeros((dim * dim, dim * dim), dtype=np.complex128)
    for j in range(dim):
        for i in range(dim):
            unit = np.zeros((dim, dim), dtype=np.complex128)
            unit[i, j] = 1.0
            mat[:, j * dim + i] = vectorize(unit.T)
    return Superoperator(matrix=mat, label="transpose")


def choi_matrix(op) -> np.ndarray:
    """Choi matrix sum_{ij} |i><j| kron Phi(|i><j|), for dim <= 32."""
    if isinstance(op, KrausChannel):
        d = op.dim
        if d > CHOI_MAX_DIM:
            raise ValueError(f"choi_matrix limited to dim <= {CHOI_MAX_DIM}, got {d}")
        return sum(
            np.outer(vectorize(k), vectorize(k).conj()) for k in op.kraus_ops
        )
    if isinstance(op, Superoperator):
        d = op.dim
        if d > CHOI_MAX_DIM:
            raise ValueError(f"choi_matrix limited to dim <= {CHOI_MAX_DIM}, got {d}")
        choi = np.zeros((d * d, d * d), dtype=np.complex128)
        for i in range(d):
            for j in range(d):
                unit = np.zeros((d, d), dtype=np.complex128)
                unit[i, j] = 1.0
                block = apply(op, unit)
                choi[i * d : (i + 1) * d, j * d : (j + 1) * d] = block
        return choi
    raise TypeError(f"cannot form Choi matrix of {type(op).__name__}")


def is_completely_positive(op, tol: float = 1e-10) -> bool:
    choi = choi_matrix(op)
    w = np.linalg.eigvalsh((choi + choi.conj().T) / 2)
    return bool(w.min() >= -tol)


def attenuator_generator(dim: int) -> Superoperator:
    """Superoperator of rho -> 2 a rho a^dag - N rho - rho N.

    Generates the attenuator semigroup: exp(t K) equals the eta = e^{-t}
    channel exactly on the truncated space, since the map only lowers the
    excitation number.
    """
    a = annihilation(dim)
    n_op = number_operator(dim)
    eye = np.eye(dim, dtype=np.complex128)
    mat = 2 * kron(a.conj(), a) - kron(eye, n_op) - kron(n_op.T, eye)
    return Superoperator(matrix=mat, label="attenuator-generator")


def vacuum_projection_superop(dim: int) -> Superoperator:
    """x -> Tr(x) |0><0| as a superoperator; idempotent."""
    vac = vectorize(vacuum_state(dim))
    tr_row = vectorize(np.eye(dim, dtype=np.complex128)).conj()
    return Superoperator(matrix=np.outer(vac, tr_row), label="vacuum-projection")


@dataclass(frozen=True)
class HamiltonianCommutator:
    """Generator L(rho) = -i [H, rho] for Hermitian H."""

    hamiltonian: np.ndarray

    def __post_init__(self):
        h = as_matrix(self.hamiltonian)
        if np.linalg.norm(h - h.conj().T) > 1e-10:
            raise ValueError("Hamiltonian must be Hermitian within 1e-10")
        object.__setattr__(self, "hamiltonian", h)

    def to_superoperator(self, dim: int) -> Superoperator:
        h = self.hamiltonian
        if h.shape[0] != dim:
            raise ValueError(f"Hamiltonian dimension {h.shape[0]} != {dim}")
        eye = np.eye(dim, dtype=np.complex128)
        mat = -1j * (kron(eye, h) - kron(h.T, eye))
        return Superoperator(matrix=mat, label="hamiltonian-commutator")


@dataclass(frozen=True)
class Dephasing:
    """Generator L(rho) = rate * (N rho N - (N^2 rho + rho N^2)/2)."""

    rate: float

    def __post_init__(self):
        if self.rate < 0:
            raise ValueError("dephasing rate must be nonnegative")

    def to_superoperator(self, dim: int) -> Superoperator:
        n_op = number_operator(dim)
        n_sq = n_op @ n_op
        eye = np.eye(dim, dtype=np.complex128)
        mat = self.rate * (
            kron(n_op.T, n_op) - 0.5 * (kron(eye, n_sq) + kron(n_sq.T, eye))
        )
        return Superoperator(matrix=mat, label="dephasing")


@dataclass(frozen=True)
class ExplicitSuperoperator:
    matrix: np.ndarray

    def to_superoperator(self, dim: int) -> Superoperator:
        sup = Superoperator(matrix=self.matrix, label="explicit")
        if sup.dim != dim:
            raise ValueError(f"explicit superoperator dim {sup.dim} != {dim}")
        return sup


GeneratorSpec = HamiltonianCommutator | Dephasing | ExplicitSuperoperator


def build_generator(spec: GeneratorSpec, dim: int) -> Superoperator:
    return spec.to_superoperator(dim)


def mixing_speed_empirical(m: Superoperator, p: Superoperator, x, n_grid) -> list:
    """Grid-sup mixing speeds s_n(x) = max_{n' >= n, n' in grid} ||(M^n' - P) x||_1.

    Powers are accumulated by iterated application, cached at grid points.
    The supremum over all n' >= n is replaced by the max over the supplied
    grid ("grid-sup"); for monotone instances the two coincide on the grid.
    """
    n_grid = [int(n) for n in n_grid]
    if not n_grid:
        raise ValueError("n_grid must be nonempty")
    if sorted(n_grid) != n_grid or min(n_grid) < 1:
        raise ValueError("n_grid must be sorted ascending with entries >= 1")
    x = as_matrix(x)
    target = apply(p, x)
    grid_set = set(n_grid)
    errors = {}
    current = vectorize(x)
    for n in range(1, n_grid[-1] + 1):
        current = m.matrix @ current
        if n in grid_set:
            errors[n] = trace_norm(devectorize(current) - target)
    result = []
    running = 0.0
    for n in reversed(n_grid):
        running = max(running, errors[n])
        result.append((n, running))
    return result[::-1]


def attenuator_mixing_bound(eta: complex, n_or_gamma, rho, *, continuous: bool = False) -> float:
    """4 |eta|^n Tr((N+1) rho), or 4 e^{-gamma} Tr((N+1) rho) when continuous."""
    rho = as_matrix(rho)
    weight = particle_number(rho) + float(np.trace(rho).real)
    if continuous:
        return 4.0 * float(np.exp(-n_or_gamma)) * weight
    return 4.0 * abs(complex(eta)) ** n_or_gamma * weight


def cesaro_mean(m: Superoperator, n: int) -> Superoperator:
    """(1/n) sum_{k=1}^{n} M^k."""
    if n < 1:
        raise ValueError("Cesaro mean requires n >= 1")
    acc = np.zeros_like(m.matrix)
    power = np.eye(m.matrix.shape[0], dtype=np.complex128)
    for _ in range(n):
        power = power @ m.matrix
        acc = acc + power
    return Superoperator(matrix=acc / n, label=f"cesaro-{n}")


def positive_part_decomposition(x) -> tuple:
    """Split x = x1 - x2 + i (x3 - x4) into four PSD parts.

    x1/x2 are the positive/negative parts of (x + x^dag)/2 and x3/x4 those
    of (x - x^dag)/(2i), obtained by eigenvalue clipping.
    """
    x = as_matrix(x)
    if x.shape[0] != x.shape[1]:
        raise ValueError("positive_part_decomposition requires a square matrix")
    real_part = (x + x.conj().T) / 2
    imag_part = (x - x.conj().T) / 2j
    parts = []
    for herm in (real_part, imag_part):
        w, v = np.linalg.eigh((herm + herm.conj().T) / 2)
        pos = (v * np.clip(w, 0.0, None)) @ v.conj().T
        neg = (v * np.clip(-w, 0.0, None)) @ v.conj().T
        parts.extend([pos, neg])
    return tuple(parts)
