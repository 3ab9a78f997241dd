import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sharpbound import graphs
from sharpbound.errors import NegativeEntry, NonSquare, NotSymmetric, NoConvergence
from sharpbound.linalg import (DenseMatrix, entrywise_abs, eigenvalues_general, hessenberg,
                               is_irreducible, jacobi_eigenvalues, row_sum_interval,
                               spectral_radii_symmetric, spectral_radius_general,
                               spectral_radius_nonnegative, spectral_radius_symmetric)
from sharpbound.spectra import MatrixKind, build

from conftest import matrices_st

P3 = [[0, 1, 0], [1, 0, 1], [0, 1, 0]]
C3 = [[0, 1, 0], [0, 0, 1], [1, 0, 0]]


class TestDenseMatrix:
    def test_from_entries_row_major(self):
        m = DenseMatrix.from_entries(2, [1, 2, 3, 4])
        assert m.tolist() == [[1, 2], [3, 4]]
        assert m.entries == (1.0, 2.0, 3.0, 4.0)

    @pytest.mark.parametrize("bad", [[[1, 2]], [[1, 2, 3], [4, 5, 6]], np.zeros((0, 0))])
    def test_rejects_non_square(self, bad):
        with pytest.raises((NonSquare, ValueError)):
            DenseMatrix(np.asarray(bad, dtype=float))

    def test_rejects_wrong_entry_count(self):
        with pytest.raises(ValueError):
            DenseMatrix.from_entries(2, [1, 2, 3])

    @pytest.mark.parametrize("bad", [np.nan, np.inf, -np.inf])
    def test_rejects_non_finite(self, bad):
        with pytest.raises(ValueError):
            DenseMatrix(np.array([[1.0, bad], [0.0, 1.0]]))

    def test_read_only_and_hashable(self):
        m = DenseMatrix(np.eye(2))
        with pytest.raises(ValueError):
            m.data[0, 0] = 5
        assert m == DenseMatrix(np.eye(2))
        assert hash(m) == hash(DenseMatrix(np.eye(2)))


class TestSymmetric:
    @pytest.mark.parametrize("m, rho", [
        ([[0, 1], [1, 0]], 1.0),
        (np.eye(3), 1.0),
        (P3, math.sqrt(2)),
        ([[-7.0]], 7.0),
    ])
    def test_examples(self, m, rho):
        r = spectral_radius_symmetric(m)
        assert r.radius == pytest.approx(rho, abs=1e-12)
        assert r.method == "symmetric-jacobi"

    def test_not_symmetric(self):
        with pytest.raises(NotSymmetric):
            spectral_radius_symmetric([[0, 1], [0, 0]])

    def test_negative_dominant_eigenvalue(self):
        # eigenvalues -3 and 1: the radius is the modulus, 3
        assert spectral_radius_symmetric([[-1, 2], [2, -1]]).radius == pytest.approx(3.0)

    def test_sweep_cap_signals(self):
        with pytest.raises(NoConvergence):
            spectral_radius_symmetric([[1, 2], [2, 1]], max_sweeps=0)

    def test_batched_matches_single(self, rng):
        stack = rng.normal(size=(50, 6, 6))
        stack = stack + stack.transpose(0, 2, 1)
        radii = spectral_radii_symmetric(stack)
        for a, r in zip(stack, radii):
            assert r == pytest.approx(spectral_radius_symmetric(a).radius, abs=1e-12)
            assert r == pytest.approx(np.abs(np.linalg.eigvalsh(a)).max(), abs=1e-11)

    def test_jacobi_eigenvalues_against_lapack(self, rng):
        a = rng.normal(size=(12, 12))
        a = a + a.T
        eigs, sweeps, off = jacobi_eigenvalues(a[None])
        assert np.allclose(np.sort(eigs[0]), np.linalg.eigvalsh(a), atol=1e-11)
        assert off[0] <= 1e-12 * (1 + np.linalg.norm(a))


class TestGeneral:
    @pytest.mark.parametrize("m, rho", [
        ([[0, 1], [-1, 0]], 1.0),
        ([[1, 2], [3, 4]], (5 + math.sqrt(33)) / 2),
        ((np.eye(3) - np.array(C3)), math.sqrt(3)),
        ([[0.0]], 0.0),
    ])
    def test_examples(self, m, rho):
        r = spectral_radius_general(m)
        assert r.radius == pytest.approx(rho, abs=1e-10)
        assert r.method == "general-qr"

    def test_hessenberg_is_similar(self, rng):
        a = rng.normal(size=(9, 9))
        h = hessenberg(a)
        assert np.allclose(np.tril(h, -2), 0)
        assert np.allclose(np.sort_complex(np.linalg.eigvals(h)),
                           np.sort_complex(np.linalg.eigvals(a)))

    def test_complex_pairs(self):
        # rotation blocks scaled by 2 and 3
        a = np.zeros((4, 4))
        a[:2, :2] = [[0, -2], [2, 0]]
        a[2:, 2:] = [[1, -3], [3, 1]]
        eigs, _, _ = eigenvalues_general(a)
        assert np.allclose(np.sort_complex(eigs),
                           np.sort_complex([2j, -2j, 1 + 3j, 1 - 3j]), atol=1e-12)

    def test_against_lapack(self, rng):
        for n in (2, 5, 17, 30):
            a = rng.normal(size=(n, n))
            assert spectral_radius_general(a).radius == pytest.approx(
                np.abs(np.linalg.eigvals(a)).max(), rel=1e-9)

    def test_zero_and_nilpotent(self):
        assert spectral_radius_general(np.zeros((3, 3))).radius == 0.0
        assert spectral_radius_general(np.diag([1.0, 1.0], k=1)).radius == pytest.approx(0, abs=1e-7)


class TestPower:
    @pytest.mark.parametrize("m, rho", [
        ([[0, 1], [1, 0]], 1.0),
        ([[1, 2], [3, 4]], (5 + math.sqrt(33)) / 2),
        (C3, 1.0),
    ])
    def test_examples(self, m, rho):
        r = spectral_radius_nonnegative(m)
        assert r.radius == pytest.approx(rho, abs=1e-10)
        assert r.method == "power-iteration"
        assert np.all(np.asarray(r.eigenvector) > 0)

    def test_eigenvector_is_eigenvector(self):
        r = spectral_radius_nonnegative([[1, 2], [3, 4]])
        x = np.asarray(r.eigenvector)
        assert np.allclose(np.array([[1, 2], [3, 4]]) @ x, r.radius * x, atol=1e-9)

    def test_negative_entry(self):
        with pytest.raises(NegativeEntry):
            spectral_radius_nonnegative([[0, -1], [1, 0]])

    def test_nonconvergence_is_signalled(self):
        with pytest.raises(NoConvergence):
            spectral_radius_nonnegative([[0, 1], [0, 0]], max_iter=50)


class TestRowSumsAndAbs:
    def test_row_sum_examples(self):
        assert row_sum_interval([[1, 2], [3, 4]]) == (3.0, 7.0)
        assert row_sum_interval(np.ones((3, 3))) == (3.0, 3.0)
        assert row_sum_interval(P3) == (1.0, 2.0)

    def test_row_sum_rejects_negative(self):
        with pytest.raises(NegativeEntry):
            row_sum_interval([[1, -2], [3, 4]])

    def test_abs_examples(self):
        assert entrywise_abs([[1, -2], [-3, 4]]).tolist() == [[1, 2], [3, 4]]
        lap = build(MatrixKind.LAPLACIAN, graphs.path(3))
        assert entrywise_abs(lap).tolist() == [[1, 1, 0], [1, 2, 1], [0, 1, 1]]

    @pytest.mark.parametrize("m, expected", [
        ([[0, 1], [1, 0]], True),
        ([[1, 1], [0, 1]], False),
        (C3, True),
        ([[0.0]], True),
    ])
    def test_irreducible(self, m, expected):
        assert is_irreducible(m) is expected


@given(matrices_st(max_n=10, signed=True, symmetric=True))
def test_jacobi_agrees_with_qr(a):
    j = spectral_radius_symmetric(a).radius
    q = spectral_radius_general(a).radius
    assert abs(j - q) <= 1e-8 * max(1.0, q)


@given(matrices_st(max_n=10))
def test_row_sum_sandwich(a):
    lo, hi = row_sum_interval(a)
    rho = spectral_radius_general(a).radius
    assert lo - 1e-8 * max(1, hi) <= rho <= hi + 1e-8 * max(1, hi)


@given(matrices_st(max_n=10, signed=True))
def test_abs_domination(a):
    assert spectral_radius_general(a).radius <= \
        spectral_radius_general(entrywise_abs(a)).radius + 1e-8 * max(1, np.abs(a).sum())


@given(matrices_st(min_n=2, max_n=8), st.randoms(use_true_random=False))
def test_permutation_invariance(a, rnd):
    perm = list(range(a.shape[0]))
    rnd.shuffle(perm)
    b = a[np.ix_(perm, perm)]
    assert spectral_radius_general(b).radius == pytest.approx(
        spectral_radius_general(a).radius, abs=1e-9 * max(1, np.abs(a).sum()))
    assert is_irreducible(a) == is_irreducible(b)


@given(matrices_st(min_n=2, max_n=8))
def test_power_agrees_with_qr_on_irreducible(a):
    a = a + np.diag(np.ones(a.shape[0] - 1), 1) + np.eye(a.shape[0], k=1 - a.shape[0])
    assert is_irreducible(a)
    p = spectral_radius_nonnegative(a).radius
    q = spectral_radius_general(a).radius
    assert abs(p - q) <= 1e-8 * max(1.0, q)
