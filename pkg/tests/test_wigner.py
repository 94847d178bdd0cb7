"""Weyl coefficients, phase-space point operators, parities, marginals."""

import numpy as np
import pytest

from conftest import gctx, gfamily, gphases

from mublab.linalg import arrays_equal, hs_inner, projector
from mublab.meanking import primed_states
from mublab.pauli import d_operator
from mublab.wigner import (
    marginal,
    parity_operators,
    turnover,
    weyl_function,
    weyl_grid,
    wigner_function,
    wigner_grid,
    wigner_operator_set,
)

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]])
SZ = np.diag([1.0, -1.0]).astype(complex)


def gwig(n):
    return wigner_operator_set(gctx(n), gphases(n))


def test_qubit_hadamard_of_paulis():
    ops = gwig(2).ops
    assert arrays_equal(2 * ops[0, 0], np.eye(2) + SX + SZ + SY)
    assert arrays_equal(2 * ops[0, 1], np.eye(2) - SX + SZ - SY)
    assert arrays_equal(2 * ops[1, 0], np.eye(2) + SX - SZ - SY)
    assert arrays_equal(2 * ops[1, 1], np.eye(2) - SX - SZ + SY)


def test_qubit_marginals():
    ops = gwig(2).ops
    assert arrays_equal(ops[0, 0] + ops[0, 1], 2 * np.diag([1.0, 0.0]))
    assert arrays_equal(ops[1, 0] + ops[1, 1], 2 * np.diag([0.0, 1.0]))


@pytest.mark.parametrize("n", (2, 3, 4, 5, 8, 9))
def test_hermitian_trace_one_orthogonal(n):
    ops = gwig(n).ops
    flat = ops.reshape(n * n, n, n)
    for a, op in enumerate(flat):
        assert arrays_equal(op, op.conj().T)
        assert np.trace(op) == pytest.approx(1.0, abs=1e-9)
        for b in range(a, n * n):
            expect = n if a == b else 0.0
            assert hs_inner(op, flat[b]) == pytest.approx(expect, abs=1e-7)


@pytest.mark.parametrize("n", (2, 3, 4, 5, 8, 9))
def test_turnover_equals_relabelled_meanking_states(n):
    wset = gwig(n)
    prim = primed_states(gfamily(n), gphases(n), 0)
    for s in range(n * n):
        assert arrays_equal(wset.ops[s % n, s // n], turnover(prim[s], n), tol=1e-9)


def test_weyl_values():
    ctx, phases = gctx(3), gphases(3)
    assert weyl_function(ctx, phases, np.eye(3), 0, 0) == pytest.approx(3.0)
    for m in range(3):
        for j in range(3):
            d = d_operator(ctx, phases, m, j)
            assert weyl_function(ctx, phases, d.conj().T, m, j) == pytest.approx(3.0)


@pytest.mark.parametrize("n", (3, 4, 5))
def test_weyl_reconstruction(n):
    """O = (1/N) sum W(O, m, n) D(m, n)^dagger for random operators."""
    ctx, phases = gctx(n), gphases(n)
    rng = np.random.default_rng(11)
    op = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    grid = weyl_grid(ctx, phases, op)
    recon = np.zeros((n, n), dtype=complex)
    for m in range(n):
        for j in range(n):
            recon += grid[m, j] * d_operator(ctx, phases, m, j).conj().T
    assert arrays_equal(recon / n, op)


def test_wigner_function_values_and_errors():
    wset = gwig(3)
    for i1 in range(3):
        for i2 in range(3):
            assert wigner_function(wset, np.eye(3) / 3, i1, i2) == pytest.approx(1 / 3)
    with pytest.raises(ValueError):
        wigner_function(wset, np.array([[0, 1], [0, 0]], dtype=complex), 0, 0)
    with pytest.raises(ValueError):
        wigner_grid(wset, np.diag([1.0, 2.0, 3.0]) + np.triu(np.ones((3, 3)), 1) * 1j)


@pytest.mark.parametrize("n", (3, 5, 7, 9))
def test_parity_operators(n):
    ctx, phases = gctx(n), gphases(n)
    p00, displaced = parity_operators(ctx, phases)
    assert arrays_equal(p00 @ p00, np.eye(n))
    for q in range(n):
        col = np.zeros(n)
        col[ctx.neg[q]] = 1.0
        assert arrays_equal(p00[:, q], col)
    # displaced parity equals the point-operator set elementwise
    assert arrays_equal(displaced, gwig(n).ops, tol=1e-9)


def test_parity_maps_one_to_two_mod_three():
    p00, _ = parity_operators(gctx(3), gphases(3))
    e1 = np.zeros(3)
    e1[1] = 1
    out = p00 @ e1
    assert out[2] == pytest.approx(1.0)


@pytest.mark.parametrize("n", (2, 4, 8))
def test_parity_rejected_in_characteristic_two(n):
    with pytest.raises(ValueError):
        parity_operators(gctx(n), gphases(n))


@pytest.mark.parametrize("n", (2, 4, 8))
def test_even_point_operators_distinct_from_displacements(n):
    ctx, phases = gctx(n), gphases(n)
    ops = gwig(n).ops
    ds = [d_operator(ctx, phases, m, j) for m in range(n) for j in range(n)]
    for i1 in range(n):
        for i2 in range(n):
            assert all(not arrays_equal(ops[i1, i2], d) for d in ds)


@pytest.mark.parametrize("n", (2, 3, 4, 5, 8, 9))
def test_computational_striation_marginals(n):
    wset, fam = gwig(n), gfamily(n)
    for line in range(n):
        expect = n * projector(fam.bases[0][:, line])
        assert arrays_equal(marginal(wset, fam, 0, line), expect, tol=1e-9)
    total = wset.ops.reshape(n * n, n, n).sum(axis=0)
    assert arrays_equal(total, n * np.eye(n), tol=1e-9)


@pytest.mark.parametrize("n", (3, 5, 9))
def test_all_striation_marginals_odd(n):
    wset, fam = gwig(n), gfamily(n)
    for k in range(n + 1):
        for line in range(n):
            expect = n * projector(fam.bases[k][:, line])
            assert arrays_equal(marginal(wset, fam, k, line), expect, tol=1e-9)


@pytest.mark.parametrize("n", (3, 5, 7))
def test_wigner_is_symplectic_fourier_of_weyl(n):
    """W(O, i1, i2) = (1/N) sum_{a,b} chi(a i2 - b i1) Wtilde(O, a, b) in odd
    prime dimension, both sides computed independently."""
    ctx, phases = gctx(n), gphases(n)
    rng = np.random.default_rng(23)
    raw = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    rho = raw @ raw.conj().T
    rho /= np.trace(rho).real
    wt = weyl_grid(ctx, phases, rho)
    wg = wigner_grid(gwig(n), rho)
    w = np.exp(2j * np.pi / n)
    for i1 in range(n):
        for i2 in range(n):
            acc = 0.0 + 0.0j
            for a in range(n):
                for b in range(n):
                    acc += w ** ((a * i2 - b * i1) % n) * wt[a, b]
            assert wg[i1, i2] == pytest.approx((acc / n).real, abs=1e-9)
            assert abs((acc / n).imag) < 1e-9
