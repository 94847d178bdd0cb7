"""The N+1 candidate mutually unbiased bases and their verification reports.

Basis 0 is the computational basis; basis i (1..N) has k-th state

    |e_k^i> = N^{-1/2} sum_q conj(chi(q*k)) phi[i][q] |q>

with the square-root phases phi from mublab.pauli.  In galois mode the
family is pairwise unbiased; in modular mode the bases still each
diagonalize one displacement class, but unbiasedness generally fails and
is only counted (the reports expose the count next to the p+1 bound that
is conjectured to limit how many of the bases can be pairwise unbiased).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _accel
from .arithmetic import ArithmeticContext
from .linalg import DEFAULT_TOL
from .pauli import PhaseSystem, displacement_v


@dataclass(frozen=True)
class MubFamily:
    """bases[i][:, k] is the k-th state of the i-th basis."""

    ctx: ArithmeticContext
    bases: np.ndarray

    @property
    def n(self) -> int:
        return self.ctx.n

    def __repr__(self) -> str:
        return f"MubFamily(N={self.n}, mode={self.ctx.mode})"


def mub_family(ctx: ArithmeticContext, phases: PhaseSystem) -> MubFamily:
    n = ctx.n
    bases = np.empty((n + 1, n, n), dtype=complex)
    bases[0] = np.eye(n)
    fourier = np.conj(ctx.chi[ctx.mul]) / np.sqrt(n)  # [q, k] = conj(chi(q*k))/sqrt(N)
    for i in range(1, n + 1):
        bases[i] = fourier * phases.phi[i][:, None]
    bases.setflags(write=False)
    return MubFamily(ctx=ctx, bases=bases)


@dataclass
class UnbiasednessReport:
    n: int
    pairs: list[tuple[int, int]]
    min_overlap_sq: np.ndarray
    max_overlap_sq: np.ndarray
    unbiased: np.ndarray
    n_unbiased_pairs: int
    conjecture_bound: int
    all_unbiased: bool
    tol: float

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "pairs": [list(p) for p in self.pairs],
            "min_overlap_sq": self.min_overlap_sq.tolist(),
            "max_overlap_sq": self.max_overlap_sq.tolist(),
            "unbiased": self.unbiased.tolist(),
            "n_unbiased_pairs": self.n_unbiased_pairs,
            "conjecture_bound": self.conjecture_bound,
            "all_unbiased": self.all_unbiased,
            "tol": self.tol,
        }


def unbiasedness_report(family: MubFamily, tol: float = DEFAULT_TOL) -> UnbiasednessReport:
    """Min/max squared cross-basis overlap per basis pair, and the unbiased count."""
    n = family.n
    mins, maxs = _accel.unbiased_extremes(np.ascontiguousarray(family.bases))
    pairs = [(a, b) for a in range(n + 1) for b in range(a + 1, n + 1)]
    target = 1.0 / n
    unbiased = (np.abs(mins - target) <= tol) & (np.abs(maxs - target) <= tol)
    return UnbiasednessReport(
        n=n,
        pairs=pairs,
        min_overlap_sq=mins,
        max_overlap_sq=maxs,
        unbiased=unbiased,
        n_unbiased_pairs=int(unbiased.sum()),
        conjecture_bound=family.ctx.p + 1,
        all_unbiased=bool(unbiased.all()),
        tol=tol,
    )


@dataclass
class EigenbasisReport:
    n: int
    residuals: np.ndarray  # per class 0..N
    violations: list[tuple[int, int, int]] = field(default_factory=list)
    tol: float = DEFAULT_TOL

    @property
    def passed(self) -> bool:
        return float(self.residuals.max()) <= self.tol

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "residuals": self.residuals.tolist(),
            "violations": [list(v) for v in self.violations],
            "passed": self.passed,
            "tol": self.tol,
        }


def verify_eigenbasis(family: MubFamily, phases: PhaseSystem, tol: float = DEFAULT_TOL) -> EigenbasisReport:
    """Check each basis diagonalizes its displacement class with the predicted eigenvalues.

    Class i >= 1 acting on basis i:  V(l, (i-1)l)|e_k^i> = chi(l*k) phi[i][l] |e_k^i>.
    Class 0 on the computational basis: V(0, l)|e_q^0> = chi(q*l)|e_q^0>.
    """
    ctx = family.ctx
    n = ctx.n
    residuals = np.zeros(n + 1)
    q = np.arange(n)
    dev0 = 0.0
    for l in range(n):
        op = displacement_v(ctx, 0, l)
        dev0 = max(dev0, float(np.max(np.abs(op - np.diag(ctx.chi[ctx.mul[q, l]])))))
    residuals[0] = dev0
    for i in range(1, n + 1):
        residuals[i] = _accel.eigenbasis_residual(
            np.ascontiguousarray(family.bases[i]),
            i - 1,
            ctx.add,
            ctx.mul,
            ctx.neg,
            ctx.chi,
            np.ascontiguousarray(phases.phi[i]),
        )
    report = EigenbasisReport(n=n, residuals=residuals, tol=tol)
    if not report.passed:
        for i in range(1, n + 1):
            if residuals[i] <= tol:
                continue
            for l in range(n):
                op = displacement_v(ctx, l, int(ctx.mul[i - 1, l]))
                applied = op @ family.bases[i]
                lam = ctx.chi[ctx.mul[l, q]] * phases.phi[i, l]
                bad = np.max(np.abs(applied - family.bases[i] * lam[None, :]), axis=0) > tol
                report.violations.extend((i, l, int(k)) for k in np.flatnonzero(bad))
    return report


def joint_diagonalization_check(
    family: MubFamily, phases: PhaseSystem, seed: int = 20240, tol: float = 1e-7
) -> float:
    """Rebuild each eigenbasis by simultaneous diagonalization and compare projectors.

    A random real combination of the hermitian and antihermitian parts of a
    class's commuting operators separates the joint eigenspaces with
    probability one; the eigenvectors must then match the formula's basis
    columns up to phase, i.e. the squared-overlap matrix is a permutation.
    Returns the worst deviation of that matrix from a permutation matrix.
    """
    ctx = family.ctx
    n = ctx.n
    rng = np.random.default_rng(seed)
    worst = 0.0
    for i in range(n + 1):
        if i == 0:
            ops = [displacement_v(ctx, 0, l) for l in range(n)]
        else:
            ops = [displacement_v(ctx, l, int(ctx.mul[i - 1, l])) for l in range(n)]
        h = np.zeros((n, n), dtype=complex)
        for op in ops:
            a, b = rng.normal(size=2)
            h += a * (op + op.conj().T) / 2 + b * (op - op.conj().T) / 2j
        vals, vecs = np.linalg.eigh(h)
        gaps = np.diff(np.sort(vals))
        if gaps.size and gaps.min() < 1e-8:  # pragma: no cover - measure-zero draw
            raise RuntimeError(f"degenerate random combination in class {i}; change the seed")
        overlap = np.abs(family.bases[i].conj().T @ vecs) ** 2
        # permutation matrix: row/col sums one, entries 0 or 1
        dev = max(
            float(np.max(np.abs(overlap.sum(axis=0) - 1))),
            float(np.max(np.abs(overlap.sum(axis=1) - 1))),
            float(np.max(np.minimum(overlap, np.abs(overlap - 1)))),
        )
        worst = max(worst, dev)
    if worst > tol:
        raise AssertionError(f"joint eigenbasis mismatch: deviation {worst:.3e}")
    return worst
