"""Generalized Pauli group: displacement operators and their phase system.

The shift-and-phase unitaries act on the computational basis as

    V(i, j) |k> = chi((k + i) * j) |k + i>        (+, * in the context)

and split into N+1 abelian classes: class 0 holds the diagonal V(0, l),
class i (1..N) holds the operators V(l, (i-1)*l).  Within a class the
phased operators U obey an exact group law; the phase attached to V(l,
(i-1)*l) is a square root of chi((i-1)*l*l), fixed here by a
deterministic rule so the whole package shares one gauge:

* odd characteristic (and odd modular N): chi of ((i-1)*l*l) / 2, the
  division taken in the context, which squares to the right value and
  satisfies the cocycle identity by linearity of /2.
* characteristic 2: the value on each single-bit generator 2^k is
  1j ** g with g the integer label of (i-1)*2^k*2^k, and the value on a
  general l follows from the group-law recurrence
  phi(l1 + l2) = phi(l1) phi(l2) chi((i-1)*l1*l2) over the binary
  decomposition of l.  The recurrence, asserted afterwards for every
  pair, is the defining constraint; the closed-form per-bit product with
  its pairing of consecutive set bits is kept only as a cross-check
  (see per_bit_product_crosscheck) because its edge case for the top set bit admits
  two readings.

The chosen gauge reproduces the standard qubit picture: class 1 is the
real Hadamard (X) basis and class 2 the Y basis with phi = +1j on the
generator.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .arithmetic import ArithmeticContext, half
from . import _accel


@dataclass(frozen=True)
class PhaseSystem:
    """Square-root phases phi[i, l] for classes i = 1..N (row 0 is unused ones)."""

    ctx: ArithmeticContext
    phi: np.ndarray

    def __repr__(self) -> str:
        return f"PhaseSystem(N={self.ctx.n}, mode={self.ctx.mode})"


def displacement_v(ctx: ArithmeticContext, i: int, j: int) -> np.ndarray:
    """The displacement unitary with shift i and phase slope j."""
    n = ctx.n
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"indices ({i}, {j}) out of range for N={n}")
    op = np.zeros((n, n), dtype=complex)
    rows = ctx.add[np.arange(n), i]
    op[rows, np.arange(n)] = ctx.chi[ctx.mul[rows, j]]
    return op


def build_phase_system(ctx: ArithmeticContext) -> PhaseSystem:
    """Fix one square-root phase determination for every class."""
    n = ctx.n
    phi = np.ones((n + 1, n), dtype=complex)
    if ctx.mode == "modular" and ctx.n % 2 == 0:
        raise ValueError("phase systems need odd N in modular mode")
    if ctx.mode == "galois" and ctx.p == 2:
        for i in range(1, n + 1):
            slope = i - 1
            gen = np.empty(ctx.m, dtype=complex)
            for k in range(ctx.m):
                g = 1 << k
                gen[k] = 1j ** int(ctx.mul[ctx.mul[slope, g], g])
            for l in range(1, n):
                acc_label = 0
                acc = 1.0 + 0j
                for k in range(ctx.m):
                    if not (l >> k) & 1:
                        continue
                    g = 1 << k
                    acc *= gen[k] * ctx.chi[ctx.mul[ctx.mul[slope, acc_label], g]]
                    acc_label = int(ctx.add[acc_label, g])
                phi[i, l] = acc
    else:
        inv2 = int(ctx.inv[2])
        half_tab = ctx.mul[:, inv2]
        for i in range(1, n + 1):
            slope = i - 1
            sq = ctx.mul[ctx.mul[slope, np.arange(n)], np.arange(n)]
            phi[i] = ctx.chi[half_tab[sq]]

    _assert_cocycle(ctx, phi)
    phi.setflags(write=False)
    return PhaseSystem(ctx=ctx, phi=phi)


def _assert_cocycle(ctx: ArithmeticContext, phi: np.ndarray) -> None:
    """phi[l1+l2] = phi[l1] phi[l2] chi((i-1) l1 l2) for every class and pair."""
    n = ctx.n
    for i in range(1, n + 1):
        slope = i - 1
        row = phi[i]
        lhs = row[ctx.add]
        rhs = row[:, None] * row[None, :] * ctx.chi[ctx.mul[ctx.mul[slope, np.arange(n)][:, None], np.arange(n)[None, :]]]
        dev = float(np.max(np.abs(lhs - rhs)))
        if dev > 1e-9:
            raise AssertionError(f"phase cocycle violated in class {i}: max deviation {dev:.3e}")
        if abs(row[0] - 1) > 1e-12:
            raise AssertionError(f"phi[{i}][0] != 1")


def displacement_u(ctx: ArithmeticContext, phases: PhaseSystem, i: int, l: int) -> np.ndarray:
    """Phased displacement U_l of class i (class 0 means the diagonal V(0, l))."""
    if not 0 <= i <= ctx.n:
        raise ValueError(f"class index {i} out of range 0..{ctx.n}")
    if i == 0:
        return displacement_v(ctx, 0, l)
    slope = i - 1
    return np.conj(phases.phi[i, l]) * displacement_v(ctx, l, int(ctx.mul[slope, l]))


def class_of(ctx: ArithmeticContext, m: int, n: int) -> int:
    """Class index of the displacement with shift m and phase slope n."""
    if m == 0:
        return 0
    if ctx.inv[m] < 0:
        raise ValueError(f"shift {m} is not invertible; no unique class in Z/{ctx.n}")
    return int(ctx.mul[n, ctx.inv[m]]) + 1


def halfphase(ctx: ArithmeticContext, phases: PhaseSystem, m: int, n: int) -> complex:
    """The package-wide determination of the square root of chi(m * n)."""
    if ctx.mode == "galois" and ctx.p == 2:
        if m == 0:
            return 1.0 + 0j
        return complex(phases.phi[class_of(ctx, m, n), m])
    return complex(ctx.chi[half(ctx, int(ctx.mul[m, n]))])


def halfphase_table(ctx: ArithmeticContext, phases: PhaseSystem) -> np.ndarray:
    """(N, N) table of halfphase values indexed by (shift m, slope n)."""
    n = ctx.n
    out = np.empty((n, n), dtype=complex)
    for m in range(n):
        for j in range(n):
            out[m, j] = halfphase(ctx, phases, m, j)
    out.setflags(write=False)
    return out


def d_operator(ctx: ArithmeticContext, phases: PhaseSystem, m: int, n: int) -> np.ndarray:
    """Weyl displacement D(m, n) = conj(halfphase) V(m, n); equals U within its class."""
    return np.conj(halfphase(ctx, phases, m, n)) * displacement_v(ctx, m, n)


def composition_law_residual(ctx: ArithmeticContext, tuples: np.ndarray | None = None) -> float:
    """Max deviation of V(i,j) V(l,k) from chi(-(i*k)) V(i+l, j+k) over index tuples.

    tuples is a (T, 4) integer array; None means every tuple (N^4 of them).
    """
    n = ctx.n
    if tuples is None:
        grid = np.indices((n, n, n, n)).reshape(4, -1).T
        tuples = np.ascontiguousarray(grid, dtype=np.int64)
    return _accel.composition_residual(ctx.add, ctx.mul, ctx.neg, ctx.chi, tuples)


def group_law_residual(ctx: ArithmeticContext, phases: PhaseSystem) -> float:
    """Max deviation of U_{l1} U_{l2} - U_{l1+l2} over every class and pair."""
    n = ctx.n
    worst = 0.0
    for i in range(n + 1):
        ops = np.stack([displacement_u(ctx, phases, i, l) for l in range(n)])
        for l1 in range(n):
            for l2 in range(n):
                l12 = int(ctx.add[l1, l2])
                dev = float(np.max(np.abs(ops[l1] @ ops[l2] - ops[l12])))
                worst = max(worst, dev)
    return worst


def per_bit_product_crosscheck(ctx: ArithmeticContext, phases: PhaseSystem) -> dict:
    """Compare the recurrence-built even-characteristic phases with the literal
    per-bit product formula under its two readings of the top-bit edge case.

    Reading "chain" pairs each set bit with the next set bit above it and
    contributes no cross factor for the top bit; reading "wrap" sends the
    missing partner to bit 0.  Returns mismatch counts; purely a report.
    """
    if not (ctx.mode == "galois" and ctx.p == 2):
        raise ValueError("the literal product formula only concerns characteristic 2")
    n = ctx.n
    counts = {"chain": 0, "wrap": 0, "total": n * (n + 1)}
    for i in range(1, n + 1):
        slope = i - 1
        for l in range(n):
            bits = [k for k in range(ctx.m) if (l >> k) & 1]
            for reading in ("chain", "wrap"):
                val = 1.0 + 0j
                for pos, k in enumerate(bits):
                    g = 1 << k
                    val *= 1j ** int(ctx.mul[ctx.mul[slope, g], g])
                    if pos + 1 < len(bits):
                        partner = 1 << bits[pos + 1]
                    elif reading == "wrap":
                        partner = 1
                    else:
                        partner = None
                    if partner is not None:
                        val *= ctx.chi[ctx.mul[ctx.mul[slope, g], partner]]
                if abs(val - phases.phi[i, l]) > 1e-9:
                    counts[reading] += 1
    return counts
