"""Generalized Bell states, their Pauli invariance, and the basis-change law.

Relative to the k-th basis of a family, the Bell state with shift m and
phase slope n is

    |B_{m,n}^k> = N^{-1/2} sum_l chi(l*n) |e_l^{k*}> (x) |e_{l+m}^k>

with the first (Alice) factor drawn from the entrywise-conjugated basis,
under the package's row-major tensor convention.  Re-expressing a Bell
state of basis k >= 1 in the computational frame permutes the index pair:

    B(m, n, k) = chi(-(m*n)) phi[k][n] * B(n, -m + (k-1)*n, 0)

and conjugating by a displacement with shift j and phase slope i leaves
every computational Bell projector fixed, the state picking up the phase
chi(m*i - n*j).  Both laws are implemented exactly in that normalization
so tests can pin signs.
"""

from __future__ import annotations

import numpy as np

from .arithmetic import ArithmeticContext
from .linalg import DEFAULT_TOL
from .mub import MubFamily
from .pauli import PhaseSystem, displacement_v


def bell_state(family: MubFamily, m: int, n: int, k: int = 0) -> np.ndarray:
    """Bell state |B_{m,n}^k> as a length-N^2 complex vector."""
    ctx = family.ctx
    dim = ctx.n
    if not (0 <= m < dim and 0 <= n < dim and 0 <= k <= dim):
        raise ValueError(f"bell index (m={m}, n={n}, k={k}) out of range for N={dim}")
    basis = family.bases[k]
    ls = np.arange(dim)
    weights = ctx.chi[ctx.mul[ls, n]]
    return np.einsum("l,al,bl->ab", weights, basis.conj(), basis[:, ctx.add[ls, m]]).reshape(dim * dim) / np.sqrt(dim)


def bell_matrix(family: MubFamily, k: int = 0) -> np.ndarray:
    """(N^2, N^2) matrix whose column m + n*N is |B_{m,n}^k>.

    The column label matches the package-wide pair labeling (a, b) -> a + b*N,
    so Bell indices and extension-field labels can be used interchangeably.
    """
    ctx = family.ctx
    dim = ctx.n
    basis = family.bases[k]
    ls = np.arange(dim)
    conj_b = basis.conj()
    cols = np.empty((dim * dim, dim * dim), dtype=complex)
    for m in range(dim):
        shifted = basis[:, ctx.add[ls, m]]
        # all n at once: weights[l, n] = chi(l*n)
        block = np.einsum("ln,al,bl->abn", ctx.chi[ctx.mul], conj_b, shifted).reshape(dim * dim, dim)
        cols[:, m::dim] = block
    return cols / np.sqrt(dim)


def bell_transform(
    ctx: ArithmeticContext, phases: PhaseSystem, k: int, m: int, n: int
) -> tuple[int, int, complex]:
    """Indices and phase with bell_state(m, n, k) = phase * bell_state(m', n', 0)."""
    if not 1 <= k <= ctx.n:
        raise ValueError(f"basis index k must be 1..{ctx.n}, got {k}")
    m2 = n
    n2 = int(ctx.add[ctx.neg[m], ctx.mul[k - 1, n]])
    phase = complex(ctx.chi[ctx.neg[ctx.mul[m, n]]] * phases.phi[k, n])
    return m2, n2, phase


def computational_bell(ctx: ArithmeticContext, m: int, n: int) -> np.ndarray:
    """|B_{m,n}^0> straight from the tables, without building a basis family."""
    dim = ctx.n
    out = np.zeros(dim * dim, dtype=complex)
    ls = np.arange(dim)
    out[ls * dim + ctx.add[ls, m]] = ctx.chi[ctx.mul[ls, n]]
    return out / np.sqrt(dim)


def pauli_conjugation_check(
    ctx: ArithmeticContext, i: int, j: int, m: int, n: int, tol: float = DEFAULT_TOL
) -> complex:
    """Conjugate the computational Bell state by the displacement with shift j,
    phase slope i (conjugate representation on Alice's factor) and return the
    resulting phase chi(m*i - n*j); raises if the projector moves.
    """
    bell = computational_bell(ctx, m, n)
    v = displacement_v(ctx, j, i)
    moved = np.kron(v.conj(), v) @ bell
    phase = complex(ctx.chi[ctx.add[ctx.mul[m, i], ctx.neg[ctx.mul[n, j]]]])
    dev = float(np.max(np.abs(moved - phase * bell)))
    if dev > tol:
        raise AssertionError(
            f"Bell invariance violated at (i={i}, j={j}, m={m}, n={n}): deviation {dev:.3e}"
        )
    return phase


def invariance_residual(ctx: ArithmeticContext, tol: float = DEFAULT_TOL) -> float:
    """Max deviation of the conjugation law over every (i, j, m, n) tuple."""
    dim = ctx.n
    worst = 0.0
    bells = np.stack([computational_bell(ctx, m, n) for m in range(dim) for n in range(dim)])
    for i in range(dim):
        for j in range(dim):
            v = displacement_v(ctx, j, i)
            w = np.kron(v.conj(), v)
            moved = bells @ w.T
            for m in range(dim):
                for n in range(dim):
                    phase = ctx.chi[ctx.add[ctx.mul[m, i], ctx.neg[ctx.mul[n, j]]]]
                    dev = float(np.max(np.abs(moved[m * dim + n] - phase * bells[m * dim + n])))
                    worst = max(worst, dev)
    return worst


def transform_residual(
    family: MubFamily, phases: PhaseSystem, tol: float = DEFAULT_TOL
) -> tuple[float, bool]:
    """State-level check of the basis-change law for every k >= 1 and (m, n).

    Returns (max deviation, index map is a bijection for every k).
    """
    ctx = family.ctx
    dim = ctx.n
    worst = 0.0
    bijective = True
    base_states = {(m, n): computational_bell(ctx, m, n) for m in range(dim) for n in range(dim)}
    for k in range(1, dim + 1):
        seen = set()
        for m in range(dim):
            for n in range(dim):
                m2, n2, phase = bell_transform(ctx, phases, k, m, n)
                seen.add((m2, n2))
                lhs = bell_state(family, m, n, k)
                dev = float(np.max(np.abs(lhs - phase * base_states[(m2, n2)])))
                worst = max(worst, dev)
        bijective &= len(seen) == dim * dim
    return worst, bijective


def symplectic_residual(ctx: ArithmeticContext) -> int:
    """Violations of symplectic-form preservation under the index transport.

    The transported pair is (m', n') = ((k-1) m - n, m); the form
    m1*n2 - n1*m2 must be unchanged for every k and every two index pairs.
    Returns the number of violating tuples (0 for any field, odd or even,
    since the transport has determinant one; kept as an explicit sweep).
    """
    dim = ctx.n
    idx = np.arange(dim)
    m = idx[:, None, None, None]
    n = idx[None, :, None, None]
    m2 = idx[None, None, :, None]
    n2 = idx[None, None, None, :]
    form = ctx.add[ctx.mul[m, n2], ctx.neg[ctx.mul[n, m2]]]
    bad = 0
    for k in range(1, dim + 1):
        tm = ctx.add[ctx.mul[k - 1, idx][:, None], ctx.neg[idx][None, :]]  # (m, n) -> m'
        tn = idx[:, None] * np.ones_like(idx)[None, :]  # (m, n) -> n' = m
        pm = tm[m, n]
        pn = tn[m, n]
        qm = tm[m2, n2]
        qn = tn[m2, n2]
        form2 = ctx.add[ctx.mul[pm, qn], ctx.neg[ctx.mul[pn, qm]]]
        bad += int(np.count_nonzero(form2 != form))
    return bad
