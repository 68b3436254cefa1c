import numpy as np
import pytest
from numpy.testing import assert_allclose

from schubert import numlin
from schubert.errors import NotInFiber, PreconditionViolated
from schubert.factor import SchubertSymbol
from schubert.milnor import (
    FiberElement,
    closure_product_check,
    dressing_sample,
    fiber_sample,
    identify,
    identify_general,
    identify_skew,
    identify_symmetric,
    sol_invariance_check,
    undress_skew,
    undress_symmetric,
)


class TestFiberElement:
    def test_general_accepts_sl(self, rng):
        FiberElement(numlin.haar_sample(3, "sl", rng), "general")

    def test_general_rejects_det(self):
        with pytest.raises(NotInFiber):
            FiberElement(2 * np.eye(2), "general")

    def test_symmetric_rejects_asymmetric(self, rng):
        with pytest.raises(NotInFiber):
            FiberElement(numlin.haar_sample(3, "sl", rng), "symmetric")

    def test_skew_rejects_wrong_pfaffian(self):
        # Pf(-J) = -1 must be rejected, not rescaled
        with pytest.raises(NotInFiber):
            FiberElement(-numlin.jn(1), "skew")

    def test_skew_accepts_fiber(self, rng):
        FiberElement(numlin.haar_sample(4, "skew_fiber", rng), "skew")


class TestIdentifyGeneral:
    def test_identity(self):
        cid = identify_general(np.eye(3))
        assert cid.symbol.entries == ()
        assert_allclose(cid.witness, np.eye(3))

    def test_triangular_input(self):
        b = numlin.solvable_sample(4, seed=6)
        cid = identify_general(b)
        assert cid.symbol.entries == ()
        assert_allclose(cid.witness, b, atol=1e-12)

    def test_residual_bound(self, rng):
        for _ in range(25):
            b = numlin.haar_sample(4, "sl", rng)
            cid = identify_general(b)
            assert cid.residual <= 1e-9 * max(1.0, np.linalg.norm(b))
            assert_allclose(cid.reconstruction(), b, atol=1e-9 * np.linalg.norm(b))


class TestIdentifySymmetric:
    def test_identity(self):
        assert identify_symmetric(np.eye(4)).symbol.entries == ()

    def test_planted_dressed_cell(self):
        sym = SchubertSymbol((2, 3), 3, "symmetric")
        b = fiber_sample(sym, seed=13, dress=True)
        cid = identify_symmetric(b)
        assert cid.symbol.entries == (2, 3)
        assert cid.residual <= 1e-8 * np.linalg.norm(b)

    def test_generic_fiber_reconstruction(self, rng):
        for _ in range(20):
            b = numlin.haar_sample(4, "sym_fiber", rng)
            cid = identify_symmetric(b)
            assert cid.residual <= 1e-8 * np.linalg.norm(b)
            assert_allclose(cid.reconstruction(), b, atol=1e-8 * np.linalg.norm(b))

    def test_undress_inverts_real_dressing(self, rng):
        sym = SchubertSymbol((2,), 4, "symmetric")
        point = fiber_sample(sym, seed=31)
        e = numlin.real_solvable_sample(4, rng)
        found = undress_symmetric(e.T @ point @ e)
        assert found is not None
        compact, witness = found
        assert np.linalg.norm(witness - e) < 1e-8
        assert np.linalg.norm(compact - point) < 1e-8

    def test_undress_refuses_generic(self, rng):
        # a complex-solvable dressing generically has no real-dressed form
        point = fiber_sample(SchubertSymbol((2,), 3, "symmetric"), seed=5)
        e = numlin.solvable_sample(3, rng)
        b = e.T @ point @ e
        found = undress_symmetric(b)
        if found is not None:
            compact, witness = found  # must still be a valid decomposition
            assert np.linalg.norm(witness.T @ compact @ witness - b) < 1e-7


class TestIdentifySkew:
    def test_j_is_identity_cell(self):
        cid = identify_skew(numlin.jn(2))
        assert cid.symbol.entries == ()

    def test_planted_dressed_cell(self):
        sym = SchubertSymbol((2,), 4, "skew")
        b = fiber_sample(sym, seed=21, dress=True)
        cid = identify_skew(b)
        assert cid.symbol.entries == (2,)
        assert cid.residual <= 1e-8 * np.linalg.norm(b)

    def test_generic_fiber_structure(self, rng):
        for _ in range(10):
            b = numlin.haar_sample(6, "skew_fiber", rng)
            cid = identify_skew(b)
            assert cid.residual <= 1e-8 * np.linalg.norm(b)
            assert_allclose(cid.reconstruction(), b, atol=1e-8 * np.linalg.norm(b))

    def test_undress_inverts_quaternionic_dressing(self, rng):
        sym = SchubertSymbol((2,), 6, "skew")
        point = fiber_sample(sym, seed=8)
        e = numlin.quaternionic_solvable_sample(6, rng)
        found = undress_skew(e.T @ point @ e)
        assert found is not None
        compact, witness = found
        assert np.linalg.norm(witness.T @ compact @ witness - e.T @ point @ e) < 1e-8


class TestSolInvariance:
    def test_identity_witness(self, rng):
        b = numlin.haar_sample(3, "sl", rng)
        rep = sol_invariance_check(b, np.eye(3), "general")
        assert rep.equal

    @pytest.mark.parametrize("klass,sample", [
        ("general", "sl"), ("symmetric", "sym_fiber"), ("skew", "skew_fiber"),
    ])
    def test_seeded_invariance(self, klass, sample):
        rng = np.random.default_rng(400)
        n = 4
        for _ in range(10):
            b = numlin.haar_sample(n, sample, rng)
            e = dressing_sample(n, klass, rng)
            assert sol_invariance_check(b, e, klass).equal

    def test_invalid_witness_rejected(self, rng):
        b = numlin.haar_sample(3, "sl", rng)
        with pytest.raises(PreconditionViolated):
            sol_invariance_check(b, 2 * np.eye(3), "general")


class TestClosureProduct:
    def test_disjoint_merge(self):
        rep = closure_product_check((2,), (3,), 3, seed=1)
        assert rep.disjoint and rep.passed and rep.product_symbol == (2, 3)

    def test_overlap_dimension_drop(self):
        rep = closure_product_check((2,), (2,), 3, seed=1)
        assert not rep.disjoint and rep.passed
        assert rep.dim_bound == 3 + 3 - 2

    def test_identity_cell(self):
        rep = closure_product_check((), (2, 3), 3, seed=2)
        assert rep.passed and rep.product_symbol == (2, 3)

    def test_seeded_batches(self):
        rng = np.random.default_rng(11)
        for _ in range(10):
            n = int(rng.integers(3, 6))
            pool = list(range(2, n + 1))
            a = (int(pool[rng.integers(0, len(pool))]),)
            rest = [m for m in pool if m not in a]
            b = (int(rest[rng.integers(0, len(rest))]),)
            assert closure_product_check(a, b, n, int(rng.integers(0, 10**6))).passed


class TestFiberSample:
    def test_undressed_skew_is_fiber(self):
        sym = SchubertSymbol((2,), 4, "skew")
        b = fiber_sample(sym, seed=3)
        FiberElement(b, "skew")

    def test_dressed_stays_in_fiber(self):
        for klass, n in [("general", 3), ("symmetric", 3), ("skew", 4)]:
            sym = SchubertSymbol((2,), n, klass) if klass != "skew" else SchubertSymbol((2,), 4, "skew")
            b = fiber_sample(sym, seed=5, dress=True)
            FiberElement(b, klass)

    def test_determinism(self):
        sym = SchubertSymbol((2, 3), 3)
        a = fiber_sample(sym, seed=7, dress=True)
        b = fiber_sample(sym, seed=7, dress=True)
        assert (a == b).all()


class TestPlantedRecovery:
    @pytest.mark.parametrize("klass,top", [("general", 4), ("symmetric", 4), ("skew", 2)])
    def test_all_cells_dressed(self, klass, top):
        from schubert import cohom

        rng = np.random.default_rng(1234)
        for entries in cohom.enumerate_symbols(top, klass):
            ambient = top if klass != "skew" else 2 * top
            sym = SchubertSymbol(entries, ambient, klass)
            for _ in range(2):
                b = fiber_sample(sym, rng, dress=True)
                assert identify(b, klass).symbol.entries == entries
