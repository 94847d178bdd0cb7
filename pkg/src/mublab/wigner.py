"""Discrete Weyl function, phase-space point operators, parities, marginals.

The Weyl coefficients of an operator O are its amplitudes on the phased
displacements D(m, n) = conj(sqrt(chi(m*n))) V(m, n).  The phase-space
point operators come from the relabelled Mean King states by turning
Alice's conjugate ket into a bra (a reshape plus a sqrt(N) scale):

    Psi_(i1,i2) = (1/N) sum_{m,n} chi(i2*m - i1*n) conj(sqrt(chi(m*n))) V(m, n)

They are hermitian with unit trace, mutually orthogonal with
Hilbert-Schmidt norm N, sum to N times identity along vertical phase-space
lines (N times the matching computational projector), and along the
slope-(k-1) lines reproduce the projectors of basis k in odd
characteristic.  In odd characteristic they coincide with the displaced
parity operators; in characteristic 2 the geometric parity degenerates to
the identity and the point operators remain a genuinely different set
from the displacements.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .arithmetic import ArithmeticContext
from .linalg import DEFAULT_TOL, is_hermitian
from .meanking import primed_pairing_matrix
from .mub import MubFamily
from .pauli import PhaseSystem, d_operator, displacement_v, halfphase_table


@dataclass(frozen=True)
class WignerOperatorSet:
    """ops[i1, i2] is the N x N point operator at phase-space point (i1, i2)."""

    ctx: ArithmeticContext
    ops: np.ndarray

    @property
    def n(self) -> int:
        return self.ctx.n

    def __repr__(self) -> str:
        return f"WignerOperatorSet(N={self.n}, mode={self.ctx.mode})"


def wigner_operator_set(ctx: ArithmeticContext, phases: PhaseSystem) -> WignerOperatorSet:
    n = ctx.n
    vs = np.empty((n, n, n, n), dtype=complex)
    for m in range(n):
        for j in range(n):
            vs[m, j] = displacement_v(ctx, m, j)
    weights = np.conj(halfphase_table(ctx, phases))
    pairing = primed_pairing_matrix(ctx).reshape(n, n, n, n).transpose(1, 0, 3, 2)
    # pairing axes are now [i1, i2, m, n] (labels store i1 + i2*N with i1 fastest)
    ops = np.einsum("ijmn,mn,mnab->ijab", pairing, weights, vs) / n
    ops.setflags(write=False)
    return WignerOperatorSet(ctx=ctx, ops=ops)


def turnover(state: np.ndarray, n: int) -> np.ndarray:
    """Alice-side ket-to-bra turnover: amplitudes psi[a*N + k] become sqrt(N) |k><a|."""
    return np.sqrt(n) * state.reshape(n, n).T


def weyl_function(ctx: ArithmeticContext, phases: PhaseSystem, op: np.ndarray, m: int, n: int) -> complex:
    """Tr(D(m, n) O), the Weyl coefficient of O at displacement (m, n)."""
    op = np.asarray(op, dtype=complex)
    if op.shape != (ctx.n, ctx.n):
        raise ValueError(f"operator must be {ctx.n} x {ctx.n}, got {op.shape}")
    return complex(np.trace(d_operator(ctx, phases, m, n) @ op))


def wigner_function(wset: WignerOperatorSet, op: np.ndarray, i1: int, i2: int, tol: float = DEFAULT_TOL) -> float:
    """Tr(Psi_(i1,i2) O) for hermitian O; the value is real by construction."""
    op = np.asarray(op, dtype=complex)
    if not is_hermitian(op, tol):
        raise ValueError("the phase-space distribution is defined for hermitian operators")
    val = complex(np.trace(wset.ops[i1, i2] @ op))
    return float(val.real)


def wigner_grid(wset: WignerOperatorSet, op: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    """The full N x N table of wigner_function values."""
    op = np.asarray(op, dtype=complex)
    if not is_hermitian(op, tol):
        raise ValueError("the phase-space distribution is defined for hermitian operators")
    return np.real(np.einsum("ijab,ba->ij", wset.ops, op))


def weyl_grid(ctx: ArithmeticContext, phases: PhaseSystem, op: np.ndarray) -> np.ndarray:
    """The full N x N table of Weyl coefficients, indexed (m, n)."""
    out = np.empty((ctx.n, ctx.n), dtype=complex)
    for m in range(ctx.n):
        for j in range(ctx.n):
            out[m, j] = weyl_function(ctx, phases, op, m, j)
    return out


def parity_operators(ctx: ArithmeticContext, phases: PhaseSystem, tol: float = DEFAULT_TOL):
    """The reflection built from the displacement sum, plus its displaced family.

    P(0,0) = (1/N) sum_{m,n} D(m, n) maps |q> to |-q>; P(a, b) = D(2a, 2b) P(0,0).
    Only defined away from characteristic 2, where the reflection would be trivial.
    """
    n = ctx.n
    if ctx.mode == "galois" and ctx.p == 2:
        raise ValueError("the reflection degenerates to the identity in characteristic 2")
    if ctx.mode == "modular" and n % 2 == 0:
        raise ValueError("displaced parities need odd N")
    p00 = np.zeros((n, n), dtype=complex)
    for m in range(n):
        for j in range(n):
            p00 += d_operator(ctx, phases, m, j)
    p00 /= n
    reflection = np.zeros((n, n))
    reflection[ctx.neg[np.arange(n)], np.arange(n)] = 1.0
    if float(np.max(np.abs(p00 - reflection))) > tol:
        raise AssertionError("displacement sum did not produce the reflection")
    if float(np.max(np.abs(p00 @ p00 - np.eye(n)))) > tol:
        raise AssertionError("parity is not an involution")
    displaced = np.empty((n, n, n, n), dtype=complex)
    two = 2 % n
    for a in range(n):
        for b in range(n):
            displaced[a, b] = d_operator(ctx, phases, int(ctx.mul[two, a]), int(ctx.mul[two, b])) @ p00
    return p00, displaced


def marginal(wset: WignerOperatorSet, family: MubFamily, basis_index: int, line_index: int) -> np.ndarray:
    """Sum of point operators along one phase-space line.

    basis_index 0 sums the vertical line i1 = line_index; basis_index k >= 1
    sums the slope-(k-1) line {(b, (k-1)b - line_index)}.  The result equals
    N |e_line^k><e_line^k| on every striation guaranteed by the context
    (all of them in odd characteristic, the computational one always).
    """
    ctx = wset.ctx
    n = ctx.n
    if not (0 <= basis_index <= n and 0 <= line_index < n):
        raise ValueError(f"striation ({basis_index}, {line_index}) out of range for N={n}")
    if basis_index == 0:
        return wset.ops[line_index].sum(axis=0)
    betas = np.arange(n)
    others = ctx.add[ctx.mul[basis_index - 1, betas], ctx.neg[line_index]]
    return wset.ops[betas, others].sum(axis=0)
