import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from numpy.testing import assert_allclose

from schubert import numlin, rotor
from schubert.errors import PreconditionViolated, ZeroVector
from schubert.rotor import HPseudoRotation, PseudoRotation

from conftest import e


def random_axis(rng, n, m=None):
    m = n if m is None else m
    v = rng.standard_normal(m) + 1j * rng.standard_normal(m)
    return np.concatenate([v / np.linalg.norm(v), np.zeros(n - m)])


angles = st.floats(min_value=-3.0, max_value=3.0).filter(lambda t: abs(t) > 1e-3)
seeds = st.integers(min_value=0, max_value=2**31 - 1)


class TestPseudoRotation:
    def test_matrix_form(self):
        rot = PseudoRotation(np.pi / 3, e(2, 4))
        x = rot.axis
        expect = np.eye(4) - (1 - np.exp(1j * np.pi / 3)) * np.outer(x, np.conj(x))
        assert_allclose(rot.matrix(), expect)

    @given(theta=angles, seed=seeds)
    @settings(max_examples=40, deadline=None)
    def test_unitary_with_det_phase(self, theta, seed):
        rng = np.random.default_rng(seed)
        rot = PseudoRotation(theta, random_axis(rng, 4))
        m = rot.matrix()
        assert np.linalg.norm(m @ m.conj().T - np.eye(4)) < 1e-12
        assert abs(np.linalg.det(m) - np.exp(1j * rot.theta)) < 1e-12

    def test_apply_pi_on_axis(self):
        rot = PseudoRotation(np.pi, e(1, 3))
        assert_allclose(rotor.apply(rot, e(1, 3)), -e(1, 3), atol=1e-15)

    def test_apply_fixes_orthogonal(self, rng):
        rot = PseudoRotation(1.1, random_axis(rng, 5))
        y = rng.standard_normal(5) + 1j * rng.standard_normal(5)
        y -= numlin.hermitian_inner(y, rot.axis) * rot.axis
        assert_allclose(rotor.apply(rot, y), y, atol=1e-13)

    def test_apply_formula_example(self):
        x = (e(1, 3) + e(2, 3)) / np.sqrt(2)
        rot = PseudoRotation(np.pi / 2, x)
        got = rotor.apply(rot, e(1, 3))
        expect = e(1, 3) - ((1 - 1j) / 2) * (e(1, 3) + e(2, 3)) / np.sqrt(2) * np.sqrt(1)
        # <e1, x> = 1/sqrt(2); coefficient (1 - i)/sqrt(2) applied to x
        expect = e(1, 3) - (1 - 1j) / np.sqrt(2) * x
        assert_allclose(got, expect, atol=1e-14)


class TestMinIndex:
    def test_basis_vector(self):
        assert rotor.min_index(e(1, 4)) == 1

    def test_padded(self):
        assert rotor.min_index(np.array([0.3, 0, 0.7, 0, 0])) == 3

    def test_threshold_semantics(self):
        assert rotor.min_index(np.array([1.0, 1e-15, 0, 0])) == 1

    def test_zero_rejected(self):
        with pytest.raises(ZeroVector):
            rotor.min_index(np.zeros(3))


class TestConjugation:
    def test_identity_conjugator(self, rng):
        rot = PseudoRotation(0.7, random_axis(rng, 3))
        out = rotor.conjugate_by_unitary(np.eye(3), rot)
        assert_allclose(out.matrix(), rot.matrix(), atol=1e-14)

    def test_permutation(self):
        u = np.eye(3)[:, [1, 0, 2]].astype(complex)
        out = rotor.conjugate_by_unitary(u, PseudoRotation(0.9, e(1, 3)))
        assert_allclose(out.matrix(), PseudoRotation(0.9, e(2, 3)).matrix(), atol=1e-14)

    @given(theta=angles, seed=seeds)
    @settings(max_examples=25, deadline=None)
    def test_matrix_oracle(self, theta, seed):
        rng = np.random.default_rng(seed)
        u = numlin.haar_sample(4, "special_unitary", rng)
        rot = PseudoRotation(theta, random_axis(rng, 4))
        out = rotor.conjugate_by_unitary(u, rot)
        assert np.linalg.norm(u @ rot.matrix() @ u.conj().T - out.matrix()) <= 1e-10


class TestInvolutions:
    def test_inverse(self):
        out = rotor.involutions(PseudoRotation(0.8, e(1, 2)))
        assert_allclose(out["inverse"].matrix(), PseudoRotation(-0.8, e(1, 2)).matrix())

    def test_transpose_real_axis(self, rng):
        x = rng.standard_normal(4)
        rot = PseudoRotation(1.3, x / np.linalg.norm(x))
        assert_allclose(out_mat := rotor.involutions(rot)["transpose"].matrix(), rot.matrix(), atol=1e-14)

    def test_conjugate_matrix_oracle(self):
        rot = PseudoRotation(0.6, np.array([1, 1j]) / np.sqrt(2))
        out = rotor.involutions(rot)
        assert_allclose(out["conjugate"].matrix(), np.conj(rot.matrix()), atol=1e-14)
        assert_allclose(out["inverse"].matrix(), np.linalg.inv(rot.matrix()), atol=1e-13)
        assert_allclose(out["transpose"].matrix(), rot.matrix().T, atol=1e-14)


class TestWhitehead:
    def test_commuting_orthogonal_axes(self):
        a = PseudoRotation(0.9, e(2, 3))
        b = PseudoRotation(1.7, e(1, 3))
        first, second, tag = rotor.whitehead_interchange(a, b)
        assert tag == "case1"
        assert_allclose(first.matrix(), b.matrix(), atol=1e-14)
        assert_allclose(second.matrix(), a.matrix(), atol=1e-13)

    def test_same_line_merge(self, rng):
        x = random_axis(rng, 3)
        a, b = PseudoRotation(0.5, x), PseudoRotation(0.8, x)
        merged, nothing, tag = rotor.whitehead_interchange(a, b)
        assert tag == "same-line" and nothing is None
        assert_allclose(merged.matrix(), a.matrix() @ b.matrix(), atol=1e-13)

    def test_same_line_cancel(self, rng):
        x = random_axis(rng, 3)
        first, second, tag = rotor.whitehead_interchange(
            PseudoRotation(0.5, x), PseudoRotation(-0.5, x)
        )
        assert tag == "same-line" and first is None and second is None

    def test_precondition(self):
        with pytest.raises(PreconditionViolated):
            rotor.whitehead_interchange(PseudoRotation(1, e(1, 3)), PseudoRotation(1, e(2, 3)))

    @given(seed=seeds)
    @settings(max_examples=50, deadline=None)
    def test_case2_contract(self, seed):
        rng = np.random.default_rng(seed)
        m = 3
        a = PseudoRotation(rng.uniform(0.3, 2.8), random_axis(rng, 3, m))
        b = PseudoRotation(rng.uniform(0.3, 2.8), random_axis(rng, 3, m))
        if a.min_index() != m or b.min_index() != m:
            return
        first, second, tag = rotor.whitehead_interchange(a, b)
        outs = [f for f in (first, second) if f is not None]
        got = rotor.product_matrix(outs, 3)
        assert np.linalg.norm(got - a.matrix() @ b.matrix()) <= 1e-10
        if tag == "case2" and len(outs) == 2:
            assert first.min_index() <= m - 1
            assert second.min_index() == m


class TestQuaternionic:
    def test_jmul_e1(self):
        assert_allclose(rotor.jmul(e(1, 4)), -e(2, 4))

    @given(seed=seeds)
    @settings(max_examples=25, deadline=None)
    def test_jmul_square(self, seed):
        rng = np.random.default_rng(seed)
        x = rng.standard_normal(6) + 1j * rng.standard_normal(6)
        assert_allclose(rotor.jmul(rotor.jmul(x)), -x, atol=1e-14)

    def test_jmul_isotropy(self, rng):
        # <x, jx> = 0
        x = rng.standard_normal(8) + 1j * rng.standard_normal(8)
        assert abs(numlin.hermitian_inner(x, rotor.jmul(x))) < 1e-13

    @given(seed=seeds)
    @settings(max_examples=25, deadline=None)
    def test_jmul_inner_conjugate(self, seed):
        # <jx, jy> = conj(<x, y>)
        rng = np.random.default_rng(seed)
        x = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        y = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        lhs = numlin.hermitian_inner(rotor.jmul(x), rotor.jmul(y))
        assert abs(lhs - np.conj(numlin.hermitian_inner(x, y))) < 1e-12

    def test_hline_e1(self):
        assert_allclose(rotor.hline_canonical(e(1, 2)), e(1, 2))

    def test_hline_e2_same_line(self):
        assert_allclose(rotor.hline_canonical(e(2, 2)), e(1, 2), atol=1e-14)

    def test_hline_contract(self, rng):
        x = rng.standard_normal(6) + 1j * rng.standard_normal(6)
        y = rotor.hline_canonical(x)
        assert abs(np.linalg.norm(y) - 1) < 1e-12
        k = rotor.min_index(y)
        assert k % 2 == 1  # representative sits in C^(2m-1)
        assert abs(y[k - 1].imag) < 1e-14 and y[k - 1].real > 0
        # y lies in the quaternionic span of x
        basis = np.column_stack([x / np.linalg.norm(x), rotor.jmul(x / np.linalg.norm(x))])
        q, _ = np.linalg.qr(basis)
        assert np.linalg.norm(y - q @ (q.conj().T @ y)) < 1e-12
        assert_allclose(rotor.hline_canonical(y), y, atol=1e-12)

    def test_hrotation_properties(self, rng):
        x = rng.standard_normal(6) + 1j * rng.standard_normal(6)
        hrot = HPseudoRotation(0.9, x)
        one, two = hrot.halves()
        assert np.linalg.norm(one.matrix() @ two.matrix() - two.matrix() @ one.matrix()) < 1e-12
        m = hrot.matrix()
        assert abs(np.linalg.det(m) - np.exp(2j * hrot.theta)) < 1e-12
        v = rng.standard_normal(6) + 1j * rng.standard_normal(6)
        assert np.linalg.norm(m @ rotor.jmul(v) - rotor.jmul(m.conj().T @ v)) < 1e-10

    @given(seed=seeds)
    @settings(max_examples=30, deadline=None)
    def test_lemma_j_twisted_pairing(self, seed):
        # an interchange A A' = A1 A2 forces A'_j A_j = A2_j A1_j
        rng = np.random.default_rng(seed)
        m = int(rng.integers(2, 5))
        a = PseudoRotation(rng.uniform(0.3, 2.8), random_axis(rng, 4, m))
        b = PseudoRotation(rng.uniform(0.3, 2.8), random_axis(rng, 4, m))
        if a.min_index() < b.min_index():
            a, b = b, a
        first, second, _ = rotor.whitehead_interchange(a, b)
        outs = [f for f in (first, second) if f is not None]
        lhs = rotor.product_matrix(
            [PseudoRotation(b.theta, rotor.jmul(b.axis)),
             PseudoRotation(a.theta, rotor.jmul(a.axis))], 4)
        rhs = rotor.product_matrix(
            [PseudoRotation(f.theta, rotor.jmul(f.axis)) for f in reversed(outs)], 4)
        assert np.linalg.norm(lhs - rhs) <= 1e-10


class TestCartan:
    def test_identity_conjugator(self, rng):
        b = numlin.haar_sample(3, "special_unitary", rng)
        b = b @ b.T
        out = rotor.cartan_conjugate(np.eye(3), b, "symmetric")
        assert_allclose(out, b)

    def test_symmetric_membership(self, rng):
        a = numlin.haar_sample(3, "special_unitary", rng)
        out = rotor.cartan_conjugate(a, np.eye(3), "symmetric")
        assert rotor.in_cartan_model(out, "symmetric")
        assert_allclose(out, a @ a.T, atol=1e-14)

    def test_skew_membership(self, rng):
        a = numlin.haar_sample(4, "special_unitary", rng)
        out = rotor.cartan_conjugate(a, np.eye(4), "skew")
        assert rotor.in_cartan_model(out, "skew")

    def test_rejects_non_model(self):
        from schubert.errors import NotInModel

        with pytest.raises(NotInModel):
            rotor.cartan_conjugate(np.eye(2), 2 * np.eye(2), "symmetric")
