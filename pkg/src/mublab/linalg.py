"""Minimal dense complex linear algebra for dimensions up to 16 (256 joint).

Kets are 1-D complex arrays, operators are square 2-D complex arrays.
The tensor index convention is row-major throughout the package: the
joint basis state |i>|j> of two dimension-N factors sits at index i*N+j.
Equality of complex arrays always means max-abs entrywise difference
below a tolerance (default 1e-9); nothing here is compared symbolically.
"""

from __future__ import annotations

import numpy as np

DEFAULT_TOL = 1e-9


def arrays_equal(a: np.ndarray, b: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    a = np.asarray(a)
    b = np.asarray(b)
    return a.shape == b.shape and float(np.max(np.abs(a - b))) <= tol


def max_abs_diff(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


def basis_ket(dim: int, index: int) -> np.ndarray:
    if not 0 <= index < dim:
        raise ValueError(f"basis index {index} out of range for dim {dim}")
    v = np.zeros(dim, dtype=complex)
    v[index] = 1.0
    return v


def projector(ket: np.ndarray) -> np.ndarray:
    ket = np.asarray(ket, dtype=complex)
    return np.outer(ket, ket.conj())


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two kets or two operators."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.ndim != b.ndim or a.ndim not in (1, 2):
        raise ValueError(f"tensor needs two kets or two operators, got ndim {a.ndim} and {b.ndim}")
    return np.kron(a, b)


def partial_trace(op: np.ndarray, subsystem: str = "first") -> np.ndarray:
    """Trace out one factor of an operator on an N*N-dimensional product space."""
    op = np.asarray(op, dtype=complex)
    dim = op.shape[0]
    n = int(round(np.sqrt(dim)))
    if op.shape != (dim, dim) or n * n != dim:
        raise ValueError(f"partial trace needs a square operator of square dimension, got {op.shape}")
    four = op.reshape(n, n, n, n)  # indices (i, j, k, l) of |i>|j><k|<l|
    if subsystem == "first":
        return np.einsum("ijil->jl", four)
    if subsystem == "second":
        return np.einsum("ijkj->ik", four)
    raise ValueError(f"subsystem must be 'first' or 'second', got {subsystem!r}")


def hs_inner(a: np.ndarray, b: np.ndarray) -> complex:
    """Hilbert-Schmidt inner product Tr(a^dagger b)."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch {a.shape} vs {b.shape}")
    return complex(np.vdot(a, b))


def is_unitary(op: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    op = np.asarray(op, dtype=complex)
    return arrays_equal(op @ op.conj().T, np.eye(op.shape[0]), tol)


def is_hermitian(op: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    op = np.asarray(op, dtype=complex)
    return arrays_equal(op, op.conj().T, tol)


def to_reim(arr: np.ndarray) -> list:
    """Nested lists of [re, im] pairs, the JSON wire format for complex arrays."""
    arr = np.asarray(arr, dtype=complex)
    stacked = np.stack([arr.real, arr.imag], axis=-1)
    return stacked.tolist()


def from_reim(data) -> np.ndarray:
    arr = np.asarray(data, dtype=float)
    if arr.shape[-1] != 2:
        raise ValueError("complex arrays are encoded as nested [re, im] pairs")
    return arr[..., 0] + 1j * arr[..., 1]
