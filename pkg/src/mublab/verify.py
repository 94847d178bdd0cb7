"""Repo-wide property suite: every identity the construction relies on,
runnable per dimension and mode, as named pass/fail checks.

Exhaustive where the index space is small (all operator index tuples up
to N = 5), seeded random sweeps above that.  Reports are plain data so
the CLI can render them as a table or JSON.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .arithmetic import ArithmeticContext, build_extension
from .bell import (
    bell_matrix,
    bell_state,
    computational_bell,
    invariance_residual,
    symplectic_residual,
    transform_residual,
)
from .linalg import partial_trace
from .meanking import (
    orthogonality_pattern_report,
    closed_form_agrees,
    conditional_uniformity_residual,
    frame_change_residual,
    frame_covariance_failures,
    mean_king_basis,
    primed_states,
    run_protocol,
)
from .mub import joint_diagonalization_check, mub_family, unbiasedness_report, verify_eigenbasis
from .pauli import (
    build_phase_system,
    composition_law_residual,
    d_operator,
    displacement_v,
    group_law_residual,
)
from .wigner import marginal, parity_operators, turnover, weyl_grid, wigner_operator_set

SAMPLED_TUPLES = 10_000
EXHAUSTIVE_LIMIT = 5


@dataclass
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""

    def as_dict(self) -> dict:
        return {"suite": self.suite, "name": self.name, "passed": self.passed, "detail": self.detail}


def _tuples(ctx: ArithmeticContext, seed: int) -> np.ndarray:
    n = ctx.n
    if n <= EXHAUSTIVE_LIMIT:
        return np.ascontiguousarray(np.indices((n, n, n, n)).reshape(4, -1).T, dtype=np.int64)
    rng = np.random.default_rng(seed)
    return rng.integers(0, n, size=(SAMPLED_TUPLES, 4), dtype=np.int64)


def run_suite(
    ctx: ArithmeticContext,
    suites: tuple[str, ...] = ("galois", "pauli", "mub", "bell", "king", "wigner"),
    tol: float = 1e-9,
    seed: int = 1234,
) -> list[CheckResult]:
    """Run the selected check suites for one context; returns ordered results."""
    n = ctx.n
    galois = ctx.mode == "galois"
    even = galois and ctx.p == 2
    results: list[CheckResult] = []

    def check(suite: str, name: str, passed: bool, detail: str = "") -> None:
        results.append(CheckResult(suite=suite, name=name, passed=bool(passed), detail=detail))

    phases = build_phase_system(ctx)
    family = mub_family(ctx, phases)
    ext = build_extension(ctx) if galois else None

    if "galois" in suites:
        idx = np.arange(n)
        add, mul = ctx.add, ctx.mul
        assoc = np.array_equal(add[add[:, :, None], idx[None, None, :]], add[idx[:, None, None], add[None, :, :]])
        assoc &= np.array_equal(mul[mul[:, :, None], idx[None, None, :]], mul[idx[:, None, None], mul[None, :, :]])
        dist = np.array_equal(
            mul[idx[:, None, None], add[None, :, :]], add[mul[:, :, None], mul[:, None, :]]
        )
        ident = np.array_equal(add[0], idx) and np.array_equal(mul[1], idx)
        inverses = bool(np.all(ctx.inv[1:] >= 0)) if galois else True
        check(
            "galois",
            "ring-axioms" if not galois else "field-axioms",
            assoc and dist and ident and inverses,
            f"assoc={assoc} dist={dist} identities={ident}",
        )
        additive = np.allclose(ctx.chi[:, None] * ctx.chi[None, :], ctx.chi[ctx.add], atol=tol)
        check("galois", "character-additive", additive)
        sums = ctx.chi[ctx.mul].sum(axis=0)
        expect = np.zeros(n, dtype=complex)
        expect[0] = n
        check("galois", "character-orthogonal", np.allclose(sums, expect, atol=1e-7 * n))
        if galois:
            esums = ext.chi[ext.mul_pairs].sum(axis=1)
            eexpect = np.zeros(n * n, dtype=complex)
            eexpect[0] = n * n
            inverses_ok = all(np.any(ext.mul_pairs[e] == 1) for e in range(1, n * n))
            check(
                "galois",
                "extension-field",
                ext.r != 0 and inverses_ok and np.allclose(esums, eexpect, atol=1e-7 * n * n),
                f"t^2={ext.quad_a}+{ext.quad_b}t R={ext.r}",
            )

    if "pauli" in suites:
        tuples = _tuples(ctx, seed)
        resid = composition_law_residual(ctx, tuples)
        check("pauli", "composition-law", resid <= tol, f"residual={resid:.2e} tuples={len(tuples)}")

        vs = np.stack([displacement_v(ctx, i, j) for i in range(n) for j in range(n)])
        gram = np.einsum("aij,bij->ab", vs.conj(), vs)
        check("pauli", "hs-orthogonality", np.allclose(gram, n * np.eye(n * n), atol=tol))
        traces = np.einsum("aii->a", vs)
        texp = np.zeros(n * n, dtype=complex)
        texp[0] = n
        check("pauli", "traceless", np.allclose(traces, texp, atol=tol))
        unitary = max(
            float(np.max(np.abs(v @ v.conj().T - np.eye(n)))) for v in vs
        )
        check("pauli", "unitary", unitary <= tol, f"residual={unitary:.2e}")

        adj = 0.0
        swapped_fails = 0
        for i in range(n):
            for j in range(n):
                v = displacement_v(ctx, i, j)
                true_rel = ctx.chi[ctx.neg[ctx.mul[i, j]]] * displacement_v(ctx, int(ctx.neg[i]), int(ctx.neg[j]))
                adj = max(adj, float(np.max(np.abs(v.conj().T - true_rel))))
                swapped = ctx.chi[ctx.neg[ctx.mul[i, j]]] * displacement_v(ctx, int(ctx.neg[j]), int(ctx.neg[i]))
                swapped_fails += int(np.max(np.abs(v.conj().T - swapped)) > tol)
        check("pauli", "adjoint-index-order", adj <= tol, f"swapped-index variant fails on {swapped_fails} pairs")

        comm = 0.0
        for i in range(n + 1):
            ops = [displacement_v(ctx, 0, l) if i == 0 else displacement_v(ctx, l, int(ctx.mul[i - 1, l])) for l in range(n)]
            for a in range(n):
                for b in range(a + 1, n):
                    comm = max(comm, float(np.max(np.abs(ops[a] @ ops[b] - ops[b] @ ops[a]))))
        check("pauli", "class-commutativity", comm <= tol, f"residual={comm:.2e}")

        glaw = group_law_residual(ctx, phases)
        check("pauli", "u-group-law", glaw <= tol, f"residual={glaw:.2e}")

    if "mub" in suites:
        ortho = max(
            float(np.max(np.abs(family.bases[i].conj().T @ family.bases[i] - np.eye(n)))) for i in range(n + 1)
        )
        check("mub", "orthonormal-bases", ortho <= tol, f"residual={ortho:.2e}")
        rep = unbiasedness_report(family, tol)
        if galois:
            check("mub", "pairwise-unbiased", rep.all_unbiased, f"{rep.n_unbiased_pairs}/{len(rep.pairs)} pairs")
        else:
            check(
                "mub",
                "unbiased-pair-count",
                True,
                f"{rep.n_unbiased_pairs}/{len(rep.pairs)} pairs unbiased; conjectured basis bound p+1={rep.conjecture_bound}",
            )
        eig = verify_eigenbasis(family, phases, tol)
        check("mub", "class-eigenbases", eig.passed, f"max residual={float(eig.residuals.max()):.2e}")
        if galois:
            dev = joint_diagonalization_check(family, phases, seed=seed)
            check("mub", "joint-diagonalization", True, f"projector deviation={dev:.2e}")

    if "bell" in suites:
        bm = bell_matrix(family, 0)
        ortho = float(np.max(np.abs(bm.conj().T @ bm - np.eye(n * n))))
        check("bell", "orthonormal-basis", ortho <= tol, f"residual={ortho:.2e}")
        ent = 0.0
        rng = np.random.default_rng(seed)
        picks = [(int(a), int(b), int(k)) for a, b, k in zip(
            rng.integers(0, n, 8), rng.integers(0, n, 8), rng.integers(0, n + 1, 8)
        )]
        for m, nn_, k in picks:
            rho = np.outer(bell_state(family, m, nn_, k), bell_state(family, m, nn_, k).conj())
            ent = max(ent, float(np.max(np.abs(partial_trace(rho, "first") - np.eye(n) / n))))
            ent = max(ent, float(np.max(np.abs(partial_trace(rho, "second") - np.eye(n) / n))))
        check("bell", "maximal-entanglement", ent <= tol, f"residual={ent:.2e}")
        if n <= EXHAUSTIVE_LIMIT:
            inv = invariance_residual(ctx)
            check("bell", "pauli-invariance", inv <= tol, f"residual={inv:.2e} (exhaustive)")
        else:
            worst = 0.0
            for i, j, m, nn_ in rng.integers(0, n, size=(200, 4)):
                v = displacement_v(ctx, int(j), int(i))
                b = computational_bell(ctx, int(m), int(nn_))
                phase = ctx.chi[ctx.add[ctx.mul[m, i], ctx.neg[ctx.mul[nn_, j]]]]
                worst = max(worst, float(np.max(np.abs(np.kron(v.conj(), v) @ b - phase * b))))
            check("bell", "pauli-invariance", worst <= tol, f"residual={worst:.2e} (sampled)")
        tr, bij = transform_residual(family, phases)
        check("bell", "basis-change-permutation", tr <= tol and bij, f"residual={tr:.2e} bijective={bij}")
        bad = symplectic_residual(ctx)
        check("bell", "symplectic-form-preserved", bad == 0, f"violations={bad}")

    king_basis = None
    if "king" in suites or "wigner" in suites:
        king_basis = mean_king_basis(family, phases, ext, tol)

    if "king" in suites:
        check("king", "overlap-pattern", True, "one-at-1/sqrt(N) pattern asserted during construction")
        check("king", "closed-form-inference", closed_form_agrees(king_basis))
        rep = run_protocol(king_basis, family, mode="exhaustive", tol=tol)
        check(
            "king",
            "exhaustive-protocol",
            rep.successes == rep.trials,
            f"{rep.successes}/{rep.trials} branches",
        )
        cu = conditional_uniformity_residual(king_basis)
        check("king", "conditional-uniformity", cu <= tol, f"residual={cu:.2e}")
        fr = frame_change_residual(family, phases, king_basis)
        check("king", "frame-expansion", fr <= tol, f"residual={fr:.2e}")
        fails, total = frame_covariance_failures(family, phases, tol)
        if even:
            check("king", "frame-covariance-even-caveat", fails > 0, f"{fails}/{total} pairs violate, as expected in characteristic 2")
        else:
            check("king", "frame-covariance", fails == 0, f"{fails}/{total} pairs violate")
        ar = orthogonality_pattern_report(king_basis)
        check("king", "orthogonality-pattern-report", True, f"pattern agreement {ar['context_ops']}/{ar['total']} (context ops), {ar['mod_n_ops']}/{ar['total']} (mod-N ops)")

    if "wigner" in suites and galois:
        wset = wigner_operator_set(ctx, phases)
        flat = wset.ops.reshape(n * n, n, n)
        herm = float(np.max(np.abs(flat - flat.conj().transpose(0, 2, 1))))
        tr1 = float(np.max(np.abs(np.einsum("sii->s", flat) - 1.0)))
        check("wigner", "hermitian-trace-one", herm <= tol and tr1 <= tol, f"herm={herm:.2e} trace={tr1:.2e}")
        gram = np.einsum("aij,bij->ab", flat.conj(), flat)
        check("wigner", "hs-orthogonality", np.allclose(gram, n * np.eye(n * n), atol=1e-7))
        prim = primed_states(family, phases, 0)
        tdev = max(
            float(np.max(np.abs(wset.ops[s % n, s // n] - turnover(prim[s], n)))) for s in range(n * n)
        )
        check("wigner", "meanking-turnover", tdev <= 1e-7, f"residual={tdev:.2e}")
        mdev = 0.0
        klist = range(n + 1) if not even else (0,)
        for k in klist:
            for line in range(n):
                proj = n * np.outer(family.bases[k][:, line], family.bases[k][:, line].conj())
                mdev = max(mdev, float(np.max(np.abs(marginal(wset, family, k, line) - proj))))
        check("wigner", "striation-marginals", mdev <= 1e-7, f"residual={mdev:.2e} striations={'computational' if even else 'all'}")
        rng = np.random.default_rng(seed)
        raw = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        op = raw @ raw.conj().T
        op /= np.trace(op).real
        wg = weyl_grid(ctx, phases, op)
        recon = np.zeros((n, n), dtype=complex)
        for m in range(n):
            for j in range(n):
                recon += wg[m, j] * d_operator(ctx, phases, m, j).conj().T
        recon /= n
        check("wigner", "weyl-reconstruction", np.allclose(recon, op, atol=1e-9))
        if not even:
            _, displaced = parity_operators(ctx, phases, tol)
            pdev = float(np.max(np.abs(displaced - wset.ops)))
            check("wigner", "displaced-parity", pdev <= tol, f"residual={pdev:.2e}")
        else:
            ds = np.stack([d_operator(ctx, phases, m, j) for m in range(n) for j in range(n)])
            distinct = all(
                min(float(np.max(np.abs(wset.ops[i1, i2] - d))) for d in ds) > tol
                for i1 in range(n)
                for i2 in range(n)
            )
            check("wigner", "distinct-from-weyl-set", distinct, "point operators differ from every displacement")

    return results
