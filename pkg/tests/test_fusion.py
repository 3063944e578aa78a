import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from skeinkit import fusion
from skeinkit.fusion import (
    EndQ2Element, FusionError, FusionRingData, bone_in_jacks, compose, crossing_in_jacks, f_matrix,
    inner, jacobi_eigenvalues, new_bases, qdims, qtrace, rotate, skein_consistency_k1,
    skein_consistency_k2, verify_f_identities,
)

PHI = (1 + 5 ** 0.5) / 2
SQ2 = math.sqrt(2)

k1_dims = st.floats(SQ2, 20, allow_nan=False)
nontrivial = st.one_of(st.just(1.0), st.floats(SQ2, 15, allow_nan=False))


class TestRings:
    def test_fibonacci(self):
        np.testing.assert_allclose(qdims(fusion.fibonacci_ring(), "t").d, [1, PHI], atol=1e-12)

    def test_ising(self):
        np.testing.assert_allclose(qdims(fusion.ising_ring(), "s").d, [1, SQ2, 1], atol=1e-12)

    def test_rep_s3(self):
        np.testing.assert_allclose(qdims(fusion.rep_s3_ring(), "q").d, [1, 1, 2], atol=1e-12)

    def test_json_round_trip(self):
        ring = fusion.ising_ring()
        assert FusionRingData.from_json_obj(ring.to_json_obj()) == ring

    def test_bad_ring(self):
        N = np.zeros((2, 2, 2), dtype=int)
        N[0, 0, 0] = N[0, 1, 1] = N[1, 0, 1] = 1
        N[1, 1, 1] = 1  # t x t has no unit summand
        with pytest.raises(FusionError):
            FusionRingData(("1", "t"), N, (0, 1))


class TestFMatrix:
    def test_ising(self):
        np.testing.assert_allclose(f_matrix([SQ2]).M, np.array([[1, 1], [1, -1]]) / SQ2, atol=1e-12)

    def test_fibonacci(self):
        want = np.array([[1 / PHI, PHI ** -0.5], [PHI ** -0.5, -1 / PHI]])
        np.testing.assert_allclose(f_matrix([PHI]).M, want, atol=1e-12)

    def test_221_dubrovnik(self):
        h = SQ2 / 2
        want = np.array([[0.5, h, 0.5], [h, 0, -h], [0.5, -h, 0.5]])
        np.testing.assert_allclose(f_matrix([2, 2, 1], 1, "dubrovnik").M, want, atol=1e-12)

    def test_antisymmetric_excluded(self):
        with pytest.raises(FusionError, match="antisymmetric self-duality excluded"):
            f_matrix([2, 2, 1], -1, "dubrovnik")

    @pytest.mark.parametrize("dims", [[0.5], [2, 2, 2], [2, 1, 1, 1], [-1]])
    def test_rejected(self, dims):
        with pytest.raises(FusionError):
            f_matrix(dims)

    @given(k1_dims, st.sampled_from([1, -1]))
    def test_k1_identities(self, d, kappa):
        assert verify_f_identities(f_matrix([d], kappa)).passed

    @given(nontrivial, nontrivial, st.sampled_from(["dubrovnik", "kauffman"]))
    @settings(max_examples=200)
    def test_k2_identities(self, dx, dy, variant):
        F = f_matrix([math.sqrt(1 + dx + dy), dx, dy], 1, variant)
        rep = verify_f_identities(F)
        assert rep.passed, rep.text()

    def test_jacobi_matches_numpy(self):
        rng = np.random.default_rng(0)
        for _ in range(50):
            X = rng.normal(size=(4, 4))
            S = X + X.T
            np.testing.assert_allclose(jacobi_eigenvalues(S), np.linalg.eigvalsh(S), atol=1e-10)


class TestEndQ2:
    F = f_matrix([2, 2, 1], 1, "dubrovnik")

    def test_jacks_are_orthogonal_idempotents(self):
        dims = self.F.dims
        for i in range(3):
            for j in range(3):
                got = compose(EndQ2Element.projector(dims, i), EndQ2Element.projector(dims, j))
                want = EndQ2Element.projector(dims, i) if i == j else EndQ2Element.identity(dims) * 0
                assert got.distance(want) < 1e-12

    def test_rotation_involution(self):
        rng = np.random.default_rng(2)
        x = EndQ2Element(self.F.dims, rng.normal(size=3) + 1j * rng.normal(size=3))
        assert rotate(rotate(x, self.F), self.F).distance(x) < 1e-12

    def test_rotation_swaps_identity_and_cupcap(self):
        dims = self.F.dims
        ident, cc = EndQ2Element.identity(dims), EndQ2Element.cupcap(dims)
        assert rotate(ident, self.F).distance(cc) < 1e-12
        assert rotate(cc, self.F).distance(ident) < 1e-12

    def test_inner_product(self):
        dims = self.F.dims
        x = EndQ2Element.jack(dims, 1)
        assert abs(inner(x, x) - qtrace(compose(x, x.dagger()))) < 1e-12
        assert inner(x, x).real > 0

    def test_bones_are_columns(self):
        for lam in range(3):
            np.testing.assert_allclose(bone_in_jacks(lam, self.F).c, self.F.kappa * self.F.M[:, lam], atol=1e-12)

    @pytest.mark.parametrize("variant", ["dubrovnik", "kauffman"])
    def test_new_bases(self, variant):
        rep, elements = new_bases(f_matrix([2, 2, 1], 1, variant))
        assert rep.passed, rep.text()
        assert {"J+", "J-"} <= set(elements)

    def test_crossing_rotation_k2(self):
        # rotating the crossing swaps it with its inverse
        rng = np.random.default_rng(5)
        for _ in range(20):
            beta = cmath.exp(1j * rng.uniform(0.2, 1.3))
            alpha = cmath.exp(1j * rng.uniform(0, 2 * math.pi))
            gamma = -1 / beta
            d = ((1 / alpha - alpha) / (gamma - 1 / gamma) + 1)
            if abs(d.imag) > 1e-9 or d.real < 2:
                continue
            d = d.real
            dx = (((alpha - gamma) - d / gamma) * (d - 1) / (beta - gamma)).real
            dy = d * d - 1 - dx
            if min(dx, dy) < 1:
                continue
            F = f_matrix([d, dx, dy], 1, "dubrovnik")
            R = (alpha, beta, gamma)
            X = crossing_in_jacks(R, F.dims)
            Y = crossing_in_jacks(tuple(1 / r for r in R), F.dims)
            assert rotate(X, F).distance(Y) < 1e-9


class TestConsistency:
    @pytest.mark.parametrize("beta, want", [(cmath.exp(2j * math.pi / 5), PHI),
                                            (cmath.exp(3j * math.pi / 8), SQ2)])
    def test_k1(self, beta, want):
        res = skein_consistency_k1(beta)
        assert abs(res.alpha + beta ** -3) < 1e-12
        assert abs(res.d_q - want) < 1e-12
        assert abs(res.d_q + (beta ** 2 + beta ** -2)) < 1e-12
        assert res.twist_residual < 1e-12

    def test_k1_gap(self):
        # d_q = -2 cos(0.7 pi) lies strictly between 1 and sqrt 2
        with pytest.raises(FusionError, match="forbidden gap"):
            skein_consistency_k1(cmath.exp(0.35j * math.pi))

    def test_k2_routes(self):
        rng = np.random.default_rng(9)
        seen = 0
        while seen < 30:
            beta = cmath.exp(1j * rng.uniform(0, 2 * math.pi))
            alpha = cmath.exp(1j * rng.uniform(0, 2 * math.pi))
            try:
                res = skein_consistency_k2(alpha, beta, -1 / beta)
            except fusion.Inadmissible:
                continue
            seen += 1
            assert res.variant == "dubrovnik"
            assert res.spread < 1e-9

    def test_k2_degenerate(self):
        assert skein_consistency_k2(1, 1, 1).degenerate == "beta = gamma"
        assert skein_consistency_k2(1, 1, -1).skein == "L+ = L-"
        assert skein_consistency_k2(1j, 1j, -1j).skein == "L+ = -L-"
        with pytest.raises(FusionError):
            skein_consistency_k2(1, 2j, 0.3)
