"""Dense complex linear algebra used throughout the package.

All matrices are plain ``numpy.ndarray`` with dtype complex128.  The
vectorization convention is column stacking, fixed so that

    vec(A @ X @ B) == (B.T kron A) @ vec(X)

holds exactly; everything that builds superoperators relies on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, log2

import numpy as np

__all__ = [
    "SpectralData",
    "as_matrix",
    "matmul",
    "adjoint",
    "kron",
    "vectorize",
    "devectorize",
    "herm_eig",
    "singular_values",
    "trace_norm",
    "matrix_exp",
]


def as_matrix(a) -> np.ndarray:
    """Coerce to a 2-D complex128 array, rejecting non-finite entries."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={m.ndim}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValueError("matrix has non-finite entries")
    return m


def matmul(a, b) -> np.ndarray:
    """Matrix product with an explicit dimension check."""
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    return a @ b


def adjoint(a) -> np.ndarray:
    """Conjugate transpose."""
    return as_matrix(a).conj().T


def kron(a, b) -> np.ndarray:
    """Kronecker product."""
    return np.kron(as_matrix(a), as_matrix(b))


def vectorize(x) -> np.ndarray:
    """Column-stack a square matrix into a length d*d vector."""
    x = as_matrix(x)
    if x.shape[0] != x.shape[1]:
        raise ValueError(f"vectorize requires a square matrix, got {x.shape}")
    return x.reshape(-1, order="F")


def devectorize(v) -> np.ndarray:
    """Inverse of :func:`vectorize` (square output)."""
    v = np.asarray(v, dtype=np.complex128).reshape(-1)
    d = int(round(np.sqrt(v.size)))
    if d * d != v.size:
        raise ValueError(f"vector of length {v.size} is not a square matrix")
    return v.reshape((d, d), order="F")


@dataclass(frozen=True)
class SpectralData:
    """Eigen- or singular-value data, sorted descending.

    ``values`` are real; ``vectors`` (when present) holds the matching
    orthonormal eigenvectors as columns.
    """

    values: np.ndarray
    vectors: np.ndarray | None = None


def herm_eig(a, rel_tol: float = 1e-8) -> SpectralData:
    """Eigendecomposition of a Hermitian matrix, eigenvalues descending.

    Raises ValueError if ``a`` deviates from Hermitian by more than
    ``rel_tol`` relative Frobenius norm.
    """
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ValueError("herm_eig requires a square matrix")
    scale = np.linalg.norm(a)
    if np.linalg.norm(a - a.conj().T) > rel_tol * max(scale, 1e-300):
        raise ValueError("matrix is not Hermitian within tolerance")
    w, v = np.linalg.eigh((a + a.conj().T) / 2)
    order = np.argsort(w)[::-1]
    return SpectralData(values=w[order], vectors=v[:, order])


def singular_values(a) -> np.ndarray:
    """Singular values, descending."""
    return np.linalg.svd(as_matrix(a), compute_uv=False)


def trace_norm(a) -> float:
    """Sum of singular values of a square matrix."""
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ValueError("trace_norm requires a square matrix")
    return float(singular_values(a).sum())


def matrix_exp(a, tol: float = 1e-12) -> np.ndarray:
    """Matrix exponential by scaling and squaring of the Taylor series.

    The input is scaled by 2**s so its 1-norm is at most 1/2, the series is
    summed until the running term falls below ``tol`` (tightened to absorb
    the s squarings), and the result is squared back up.
    """
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ValueError("matrix_exp requires a square matrix")
    if not tol > 0:
        raise ValueError("tol must be positive")
    d = a.shape[0]
    norm = np.linalg.norm(a, 1)
    s = 0 if norm <= 0.5 else int(ceil(log2(norm / 0.5)))
    scaled = a / (2.0**s)
    result = np.eye(d, dtype=np.complex128)
    term = np.eye(d, dtype=np.complex128)
    threshold = max(tol / (2.0 ** (s + 2)), 1e-300)
    for k in range(1, 60):
        term = term @ scaled / k
        result = result + term
        if np.linalg.norm(term, 1) <= threshold * np.linalg.norm(result, 1):
            break
    for _ in range(s):
        result = result @ result
    return result
