"""Basis construction, unbiasedness, eigenbasis property, uniqueness cross-check."""

import numpy as np
import pytest

from conftest import GALOIS_TEST_DIMS, MODULAR_TEST_DIMS, gctx, gfamily, gphases, mfamily, mphases

from mublab.linalg import arrays_equal
from mublab.mub import joint_diagonalization_check, unbiasedness_report, verify_eigenbasis
from mublab.pauli import displacement_v


def test_qubit_family_is_z_x_y():
    fam = gfamily(2)
    assert arrays_equal(fam.bases[0], np.eye(2))
    h = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
    assert arrays_equal(fam.bases[1], h)
    y = np.array([[1, 1], [1j, -1j]], dtype=complex) / np.sqrt(2)
    assert arrays_equal(fam.bases[2], y)
    # eigenbasis sanity: sigma_X on (|0> +- |1>)/sqrt(2) has eigenvalues +-1
    sx = displacement_v(gctx(2), 1, 0)
    assert arrays_equal(sx @ fam.bases[1][:, 0], fam.bases[1][:, 0])
    assert arrays_equal(sx @ fam.bases[1][:, 1], -fam.bases[1][:, 1])


def test_gf3_family_matches_direct_formula():
    """Independent oracle: evaluate the odd-characteristic formula with plain
    mod-3 integer arithmetic (inverse of 2 mod 3 is 2)."""
    fam = gfamily(3)
    w = np.exp(2j * np.pi / 3)
    for i in range(1, 4):
        direct = np.empty((3, 3), dtype=complex)
        for q in range(3):
            for k in range(3):
                direct[q, k] = w ** ((-q * k) % 3) * w ** (((i - 1) * q * q * 2) % 3)
        direct /= np.sqrt(3)
        assert arrays_equal(fam.bases[i], direct)


@pytest.mark.parametrize("n", GALOIS_TEST_DIMS)
def test_galois_family_pairwise_unbiased(n):
    rep = unbiasedness_report(gfamily(n), tol=1e-9)
    assert rep.all_unbiased
    assert rep.n_unbiased_pairs == (n + 1) * n // 2
    assert np.allclose(rep.min_overlap_sq, 1.0 / n, atol=1e-9)
    assert np.allclose(rep.max_overlap_sq, 1.0 / n, atol=1e-9)


@pytest.mark.parametrize("n", GALOIS_TEST_DIMS + MODULAR_TEST_DIMS)
def test_bases_orthonormal(n):
    families = [gfamily(n)] if n != 15 else []
    if n % 2:
        families.append(mfamily(n))
    for fam in families:
        for basis in fam.bases:
            assert arrays_equal(basis.conj().T @ basis, np.eye(n))


def test_basis_with_itself_has_identity_overlap():
    fam = gfamily(4)
    for basis in fam.bases:
        assert arrays_equal(np.abs(basis.conj().T @ basis) ** 2, np.eye(4))


@pytest.mark.parametrize("n", GALOIS_TEST_DIMS)
def test_eigenbasis_property_galois(n):
    report = verify_eigenbasis(gfamily(n), gphases(n), tol=1e-9)
    assert report.passed, report.violations
    assert report.violations == []


@pytest.mark.parametrize("n", (3, 5, 9, 15))
def test_eigenbasis_property_modular(n):
    report = verify_eigenbasis(mfamily(n), mphases(n), tol=1e-9)
    assert report.passed, report.violations


def test_eigenvalues_read_off_the_formula():
    """The eigenvalue of V(l, (i-1)l) on |e_k^i> is chi(l*k) phi[i][l]."""
    for n in (3, 4, 5):
        ctx, phases, fam = gctx(n), gphases(n), gfamily(n)
        for i in range(1, n + 1):
            for l in range(n):
                op = displacement_v(ctx, l, int(ctx.mul[i - 1, l]))
                for k in range(n):
                    lam = ctx.chi[ctx.mul[l, k]] * phases.phi[i, l]
                    assert abs(abs(lam) - 1) < 1e-12
                    assert arrays_equal(op @ fam.bases[i][:, k], lam * fam.bases[i][:, k])
                    if l == 0:
                        assert lam == pytest.approx(1.0)


@pytest.mark.parametrize("n", GALOIS_TEST_DIMS)
def test_joint_diagonalization_cross_check(n):
    dev = joint_diagonalization_check(gfamily(n), gphases(n))
    assert dev < 1e-7


def test_modular_unbiased_count_instrumentation():
    """Mod-15 bases: the unbiased-pair count is a deterministic report next to
    the conjectured bound p+1 = 4; the family is not expected to be unbiased."""
    rep1 = unbiasedness_report(mfamily(15))
    rep2 = unbiasedness_report(mfamily(15))
    assert rep1.conjecture_bound == 4
    assert rep1.n_unbiased_pairs == rep2.n_unbiased_pairs
    assert not rep1.all_unbiased
    # the computational basis is unbiased against every other basis
    zero_pairs = [flag for (a, _), flag in zip(rep1.pairs, rep1.unbiased) if a == 0]
    assert all(zero_pairs)


def test_modular_prime_family_is_unbiased():
    """For prime N the modular and galois constructions coincide."""
    rep = unbiasedness_report(mfamily(7))
    assert rep.all_unbiased
    assert arrays_equal(mfamily(7).bases, gfamily(7).bases)
