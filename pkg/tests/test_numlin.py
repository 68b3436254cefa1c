import numpy as np
import pytest
from numpy.testing import assert_allclose

from schubert import numlin
from schubert.errors import (
    NotInFiber,
    NotSkewSymmetric,
    NotSymmetric,
    OddDimension,
    SingularInput,
)

from conftest import e


class TestHermitianInner:
    def test_unit_vector(self):
        assert numlin.hermitian_inner(e(1, 3), e(1, 3)) == 1

    def test_orthogonality(self):
        assert numlin.hermitian_inner(e(1, 3), e(2, 3)) == 0

    def test_complex_example(self):
        # <(1,i),(i,1)> = 1*conj(i) + i*conj(1) = -i + i = 0
        val = numlin.hermitian_inner([1, 1j], [1j, 1])
        assert abs(val) < 1e-15

    def test_conjugate_symmetry(self, rng):
        x = rng.standard_normal(5) + 1j * rng.standard_normal(5)
        y = rng.standard_normal(5) + 1j * rng.standard_normal(5)
        assert abs(numlin.hermitian_inner(x, y) - np.conj(numlin.hermitian_inner(y, x))) < 1e-14


class TestIwasawa:
    def test_identity(self):
        parts = numlin.iwasawa_split(np.eye(3))
        assert_allclose(parts.unitary, np.eye(3), atol=1e-14)
        assert_allclose(parts.solvable, np.eye(3), atol=1e-14)

    def test_already_solvable(self):
        b = numlin.solvable_sample(4, seed=11)
        parts = numlin.iwasawa_split(b)
        assert_allclose(parts.unitary, np.eye(4), atol=1e-12)
        assert_allclose(parts.solvable, b, atol=1e-12)

    @pytest.mark.parametrize("n", range(2, 9))
    def test_reconstruction(self, n):
        rng = np.random.default_rng(100 + n)
        for _ in range(20):
            b = numlin.haar_sample(n, "sl", rng)
            parts = numlin.iwasawa_split(b)
            assert np.linalg.norm(parts.unitary @ parts.solvable - b) <= 1e-10 * np.linalg.norm(b)
            diag = np.diag(parts.solvable)
            assert np.all(diag.real > 0) and np.all(diag.imag == 0)
            assert abs(np.linalg.det(parts.unitary) - 1) < 1e-10
            assert abs(np.linalg.det(parts.solvable) - 1) < 1e-8

    def test_det_deviation_rejected(self):
        with pytest.raises(NotInFiber):
            numlin.iwasawa_split(2.0 * np.eye(3))

    def test_singular_rejected(self):
        b = np.eye(3, dtype=complex)
        b[2, 2] = 1e-300
        with pytest.raises((SingularInput, NotInFiber)):
            numlin.iwasawa_split(b)


class TestEigUnitary:
    def test_already_diagonal(self):
        eig = numlin.eig_unitary(np.diag([1j, -1j]))
        assert_allclose(sorted(eig.values, key=lambda z: z.imag), [-1j, 1j], atol=1e-12)
        assert not eig.flags.any()

    def test_identity_flagged(self):
        eig = numlin.eig_unitary(np.eye(3))
        assert eig.flags.all()

    def test_construct_then_recover(self):
        rng = np.random.default_rng(5)
        for n in (2, 4, 6):
            thetas = np.sort(rng.uniform(-3, 3, size=n))
            u = numlin.haar_sample(n, "special_unitary", rng)
            b = u @ np.diag(np.exp(1j * thetas)) @ u.conj().T
            eig = numlin.eig_unitary(b)
            got = np.sort(np.angle(eig.values))
            assert_allclose(got, thetas, atol=1e-9)
            gram = eig.vectors.conj().T @ eig.vectors
            assert np.linalg.norm(gram - np.eye(n)) < 1e-10
            for k in range(n):
                v = eig.vectors[:, k]
                assert np.linalg.norm(b @ v - eig.values[k] * v) < 1e-9

    def test_not_unitary_rejected(self):
        from schubert.errors import NotUnitary

        with pytest.raises(NotUnitary):
            numlin.eig_unitary(np.diag([2.0, 0.5]))


class TestPfaffian:
    def test_normal_form(self):
        for k in (1, 2, 3, 4):
            assert numlin.pfaffian(numlin.jn(k)) == 1.0

    def test_two_by_two(self):
        a = 2.5 - 1.25j
        assert numlin.pfaffian(np.array([[0, a], [-a, 0]])) == a

    @pytest.mark.parametrize("n", (2, 4, 6, 8))
    def test_transformation_law(self, n):
        rng = np.random.default_rng(200 + n)
        for _ in range(25):
            g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
            b = g - g.T
            c = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
            lhs = numlin.pfaffian(c.T @ b @ c)
            rhs = np.linalg.det(c) * numlin.pfaffian(b)
            assert abs(lhs - rhs) <= 1e-8 * max(1.0, abs(rhs))

    def test_squares_to_det(self, rng):
        g = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
        b = g - g.T
        assert abs(numlin.pfaffian(b) ** 2 - np.linalg.det(b)) < 1e-7 * abs(np.linalg.det(b))

    def test_odd_rejected(self):
        with pytest.raises(OddDimension):
            numlin.pfaffian(np.zeros((3, 3)))

    def test_not_skew_rejected(self):
        with pytest.raises(NotSkewSymmetric):
            numlin.pfaffian(np.eye(4))


class TestQuadraticForm:
    def test_identity(self):
        c = numlin.diagonalize_quadratic_form(np.eye(3))
        assert_allclose(c, np.eye(3), atol=1e-12)

    def test_scaling_case(self):
        b = np.diag([4.0, 0.25]).astype(complex)
        c = numlin.diagonalize_quadratic_form(b)
        assert_allclose(c.T @ b @ c, np.eye(2), atol=1e-12)
        assert_allclose(np.abs(np.diag(c)), [0.5, 2.0], atol=1e-12)

    def test_reconstruction(self):
        rng = np.random.default_rng(17)
        for n in (2, 3, 5, 8):
            for _ in range(20):
                d = numlin.haar_sample(n, "sl", rng)
                b = d.T @ d
                c = numlin.diagonalize_quadratic_form(b)
                assert np.linalg.norm(c.T @ b @ c - np.eye(n)) <= 1e-8
                assert abs(np.linalg.det(c) - 1) < 1e-8

    def test_zero_diagonal_pivot(self):
        # antidiagonal symmetric form with det 1: the row+column trick must fire
        b = np.array([[0, 1j], [1j, 0]], dtype=complex)
        c = numlin.diagonalize_quadratic_form(b)
        assert np.linalg.norm(c.T @ b @ c - np.eye(2)) <= 1e-10
        assert abs(np.linalg.det(c) - 1) <= 1e-10

    def test_not_symmetric_rejected(self):
        with pytest.raises(NotSymmetric):
            numlin.diagonalize_quadratic_form(numlin.jn(1))


class TestSkewForm:
    def test_normal_form_fixed(self):
        c = numlin.normalize_skew_form(numlin.jn(2))
        assert_allclose(c.T @ numlin.jn(2) @ c, numlin.jn(2), atol=1e-12)

    def test_block_scaling(self):
        # per-block scales a and 1/a keep Pf = 1; C rescales each block by
        # the inverse square root
        a = 4.0
        b = np.zeros((4, 4), dtype=complex)
        b[:2, :2] = a * numlin.jn(1)
        b[2:, 2:] = numlin.jn(1) / a
        c = numlin.normalize_skew_form(b)
        expect = np.diag([a ** -0.5, a ** -0.5, a ** 0.5, a ** 0.5])
        assert_allclose(c, expect, atol=1e-12)

    def test_reconstruction(self):
        rng = np.random.default_rng(23)
        for n in (4, 6, 8):
            for _ in range(20):
                cc = numlin.haar_sample(n, "sl", rng)
                b = cc.T @ numlin.jn(n // 2) @ cc
                c = numlin.normalize_skew_form(b)
                assert np.linalg.norm(c.T @ b @ c - numlin.jn(n // 2)) <= 1e-8
                assert abs(np.linalg.det(c) - 1) < 1e-7

    def test_not_skew_rejected(self):
        with pytest.raises(NotSkewSymmetric):
            numlin.normalize_skew_form(np.eye(4))


class TestHaarSample:
    def test_special_unitary(self):
        u = numlin.haar_sample(2, "special_unitary", seed=3)
        assert np.linalg.norm(u @ u.conj().T - np.eye(2)) <= 1e-12
        assert abs(np.linalg.det(u) - 1) <= 1e-12

    def test_sym_fiber(self):
        b = numlin.haar_sample(2, "sym_fiber", seed=3)
        assert np.linalg.norm(b - b.T) < 1e-13
        assert abs(np.linalg.det(b) - 1) < 1e-10

    def test_skew_fiber(self):
        b = numlin.haar_sample(4, "skew_fiber", seed=3)
        assert np.linalg.norm(b + b.T) < 1e-13
        assert abs(numlin.pfaffian(b) - 1) < 1e-10

    def test_determinism(self):
        for klass in numlin.SAMPLE_CLASSES:
            n = 4
            a = numlin.haar_sample(n, klass, seed=99)
            b = numlin.haar_sample(n, klass, seed=99)
            assert (a == b).all()

    def test_solvable_samplers(self):
        e1 = numlin.solvable_sample(5, seed=1)
        assert numlin.is_solvable_factor(e1)
        e2 = numlin.real_solvable_sample(5, seed=1)
        assert numlin.is_solvable_factor(e2) and np.all(e2.imag == 0)
        e3 = numlin.quaternionic_solvable_sample(6, seed=1)
        assert numlin.is_solvable_factor(e3)
        j = numlin.jn(3)
        assert np.linalg.norm(j @ np.conj(e3) @ np.linalg.inv(j) - e3) < 1e-12

    def test_bad_class(self):
        with pytest.raises(ValueError):
            numlin.haar_sample(3, "nope", seed=0)

    def test_skew_odd_rejected(self):
        with pytest.raises(OddDimension):
            numlin.haar_sample(3, "skew_fiber", seed=0)
