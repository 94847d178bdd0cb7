"""Numba-compiled twins of the sweep kernels in mublab._kernels_numpy."""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def composition_residual(add, mul, neg, chi, tuples) -> float:
    n = add.shape[0]
    worst = 0.0
    for t in range(tuples.shape[0]):
        i, j, l, k = tuples[t, 0], tuples[t, 1], tuples[t, 2], tuples[t, 3]
        pref = chi[neg[mul[i, k]]]
        jk = add[j, k]
        for q in range(n):
            ql = add[q, l]
            qli = add[ql, i]
            diff = chi[mul[ql, k]] * chi[mul[qli, j]] - pref * chi[mul[qli, jk]]
            mag = abs(diff)
            if mag > worst:
                worst = mag
    return worst


@njit(cache=True)
def unbiased_extremes(bases):
    nb, n, _ = bases.shape
    npairs = nb * (nb - 1) // 2
    mins = np.empty(npairs)
    maxs = np.empty(npairs)
    idx = 0
    for a in range(nb):
        for b in range(a + 1, nb):
            lo = 1e300
            hi = 0.0
            for ka in range(n):
                for kb in range(n):
                    acc = 0.0 + 0.0j
                    for q in range(n):
                        acc += np.conj(bases[a, q, ka]) * bases[b, q, kb]
                    mag = acc.real * acc.real + acc.imag * acc.imag
                    if mag < lo:
                        lo = mag
                    if mag > hi:
                        hi = mag
            mins[idx] = lo
            maxs[idx] = hi
            idx += 1
    return mins, maxs


@njit(cache=True)
def overlap_tensor(states_conj, product_states):
    ns, dim = states_conj.shape
    nk, nl, _ = product_states.shape
    out = np.empty((nk, nl, ns), dtype=np.complex128)
    for k in range(nk):
        for l in range(nl):
            for s in range(ns):
                acc = 0.0 + 0.0j
                for x in range(dim):
                    acc += states_conj[s, x] * product_states[k, l, x]
                out[k, l, s] = acc
    return out


@njit(cache=True)
def eigenbasis_residual(basis, slope, add, mul, neg, chi, phi_row) -> float:
    n = add.shape[0]
    worst = 0.0
    for l in range(n):
        sl = mul[slope, l]
        for k in range(n):
            lam = chi[mul[l, k]] * phi_row[l]
            for q in range(n):
                diff = chi[mul[q, sl]] * basis[add[q, neg[l]], k] - lam * basis[q, k]
                mag = abs(diff)
                if mag > worst:
                    worst = mag
    return worst
