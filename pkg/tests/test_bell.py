"""Bell states: entanglement, group invariance, the basis-change permutation."""

import numpy as np
import pytest

from conftest import GALOIS_TEST_DIMS, gctx, gfamily, gphases, mfamily, mphases

from mublab.bell import (
    bell_matrix,
    bell_state,
    bell_transform,
    computational_bell,
    invariance_residual,
    pauli_conjugation_check,
    symplectic_residual,
    transform_residual,
)
from mublab.linalg import arrays_equal, partial_trace, projector


def test_qubit_bell_states():
    fam = gfamily(2)
    rt2 = np.sqrt(2)
    assert arrays_equal(bell_state(fam, 0, 0, 0), np.array([1, 0, 0, 1]) / rt2)
    assert arrays_equal(bell_state(fam, 0, 1, 0), np.array([1, 0, 0, -1]) / rt2)
    assert arrays_equal(bell_state(fam, 1, 0, 0), np.array([0, 1, 1, 0]) / rt2)
    assert arrays_equal(bell_state(fam, 1, 1, 0), np.array([0, 1, -1, 0]) / rt2)


@pytest.mark.parametrize("n", (2, 3, 4, 5, 8, 9))
def test_maximal_entanglement(n):
    fam = gfamily(n)
    rng = np.random.default_rng(5)
    picks = zip(rng.integers(0, n, 6), rng.integers(0, n, 6), rng.integers(0, n + 1, 6))
    for m, j, k in picks:
        rho = projector(bell_state(fam, int(m), int(j), int(k)))
        assert arrays_equal(partial_trace(rho, "first"), np.eye(n) / n)
        assert arrays_equal(partial_trace(rho, "second"), np.eye(n) / n)


@pytest.mark.parametrize("n", GALOIS_TEST_DIMS)
def test_bell_basis_orthonormal(n):
    for k in (0, 1, n):
        bm = bell_matrix(gfamily(n), k)
        assert arrays_equal(bm.conj().T @ bm, np.eye(n * n))


def test_bell_matrix_column_convention():
    fam = gfamily(3)
    bm = bell_matrix(fam, 2)
    for m in range(3):
        for j in range(3):
            assert arrays_equal(bm[:, m + 3 * j], bell_state(fam, m, j, 2))


@pytest.mark.parametrize("n", (2, 3, 4, 5))
def test_pauli_invariance_exhaustive(n):
    """Conjugating any computational Bell projector by any displacement fixes
    it; the state picks up chi(m*i - n*j).  Dense check over all tuples."""
    assert invariance_residual(gctx(n)) <= 1e-9


def test_pauli_conjugation_phases():
    ctx = gctx(3)
    assert pauli_conjugation_check(ctx, 0, 0, 1, 2) == pytest.approx(1.0)
    assert pauli_conjugation_check(ctx, 1, 2, 0, 0) == pytest.approx(1.0)
    # chi(m*i - n*j) at (i=1, j=0, m=1, n=2) is chi(1)
    assert pauli_conjugation_check(ctx, 1, 0, 1, 2) == pytest.approx(np.exp(2j * np.pi / 3))


@pytest.mark.parametrize("n", GALOIS_TEST_DIMS)
def test_transform_law_galois(n):
    resid, bijective = transform_residual(gfamily(n), gphases(n))
    assert resid <= 1e-9
    assert bijective


@pytest.mark.parametrize("n", (3, 5, 9, 15))
def test_transform_law_modular(n):
    resid, bijective = transform_residual(mfamily(n), mphases(n))
    assert resid <= 1e-9
    assert bijective


def test_transform_rejects_k0():
    with pytest.raises(ValueError):
        bell_transform(gctx(3), gphases(3), 0, 1, 1)


def test_qubit_table_signs():
    """The qubit Bell-index table, sign for sign: the X lines pin the signs and
    the Y lines pin the quarter-root phases of the chosen gauge."""
    ctx, phases, fam = gctx(2), gphases(2), gfamily(2)

    def check(k, m, n, m2, n2, phase):
        got = bell_transform(ctx, phases, k, m, n)
        assert got[:2] == (m2, n2)
        assert got[2] == pytest.approx(phase, abs=1e-12)
        assert arrays_equal(bell_state(fam, m, n, k), phase * bell_state(fam, m2, n2, 0))

    # X basis: B(0,0)^X = B(0,0)^Z, B(1,0)^X = B(0,1)^Z,
    #          B(0,1)^X = B(1,0)^Z, B(1,1)^X = -B(1,1)^Z
    check(1, 0, 0, 0, 0, 1.0)
    check(1, 1, 0, 0, 1, 1.0)
    check(1, 0, 1, 1, 0, 1.0)
    check(1, 1, 1, 1, 1, -1.0)
    # Y basis: B(0,1)^Y = i B(1,1)^Z and B(1,1)^Y = -i B(1,0)^Z
    check(2, 0, 0, 0, 0, 1.0)
    check(2, 1, 0, 0, 1, 1.0)
    check(2, 0, 1, 1, 1, 1j)
    check(2, 1, 1, 1, 0, -1j)


def test_zero_index_fixed_for_every_k():
    for n in (2, 3, 4, 8):
        ctx, phases = gctx(n), gphases(n)
        for k in range(1, n + 1):
            assert bell_transform(ctx, phases, k, 0, 0) == (0, 0, pytest.approx(1.0))


@pytest.mark.parametrize("n", (2, 3, 4, 5, 8, 9))
def test_symplectic_form_preserved(n):
    assert symplectic_residual(gctx(n)) == 0


def test_even_characteristic_phase_incoherence():
    """In characteristic 2 the permutation law holds per state, but no global
    phase convention makes all transported phases square-root consistent:
    some transported pair picks up a genuine sign mismatch.  Pinned via the
    N=2 table: B(1,1)^X = -B(1,1)^Z while the other X lines carry +1."""
    ctx, phases = gctx(2), gphases(2)
    phases_seen = [bell_transform(ctx, phases, 1, m, n)[2] for m in range(2) for n in range(2)]
    assert any(abs(p + 1.0) < 1e-9 for p in phases_seen)


def test_computational_bell_matches_family_state():
    for n in (3, 4):
        ctx, fam = gctx(n), gfamily(n)
        for m in range(n):
            for j in range(n):
                assert arrays_equal(computational_bell(ctx, m, j), bell_state(fam, m, j, 0))
