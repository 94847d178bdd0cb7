"""Pure-numpy implementations of the exhaustive-sweep kernels.

Same signatures as mublab._kernels_numba; selected via MUBLAB_NUMBA=0 or
automatically when numba is unavailable.
"""

from __future__ import annotations

import numpy as np


def composition_residual(add, mul, neg, chi, tuples) -> float:
    """Max |V(i,j)V(l,k) - chi(-(i*k)) V(i+l,j+k)| entrywise over (i,j,l,k) tuples."""
    n = add.shape[0]
    i, j, l, k = tuples.T
    q = np.arange(n)
    ql = add[q[None, :], l[:, None]]
    qli = add[ql, i[:, None]]
    lhs = chi[mul[ql, k[:, None]]] * chi[mul[qli, j[:, None]]]
    rhs = chi[neg[mul[i, k]]][:, None] * chi[mul[qli, add[j, k][:, None]]]
    return float(np.max(np.abs(lhs - rhs)))


def unbiased_extremes(bases) -> tuple[np.ndarray, np.ndarray]:
    """Min and max squared overlap per ordered basis pair a < b."""
    nb = bases.shape[0]
    mins, maxs = [], []
    for a in range(nb):
        for b in range(a + 1, nb):
            g = np.abs(bases[a].conj().T @ bases[b]) ** 2
            mins.append(g.min())
            maxs.append(g.max())
    return np.array(mins), np.array(maxs)


def overlap_tensor(states_conj, product_states) -> np.ndarray:
    """overlaps[k, l, s] = <state_s | product_{k,l}> from pre-conjugated states."""
    return np.einsum("sx,klx->kls", states_conj, product_states)


def eigenbasis_residual(basis, slope, add, mul, neg, chi, phi_row) -> float:
    """Max deviation of V(l, slope*l)|e_k> from chi(l*k) phi[l] |e_k| over l, k."""
    n = add.shape[0]
    worst = 0.0
    q = np.arange(n)
    for l in range(n):
        sl = mul[slope, l]
        shifted = basis[add[q, neg[l]], :]
        applied = chi[mul[q, sl]][:, None] * shifted
        target = (chi[mul[l, q]] * phi_row[l])[None, :] * basis
        worst = max(worst, float(np.max(np.abs(applied - target))))
    return worst
