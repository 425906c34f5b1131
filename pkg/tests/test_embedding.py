import numpy as np
import pytest

from grasspack.embedding import (build_space,
                                 check_image_disjointness, embed,
                                 embedded_code_to_json, embedded_inner,
                                 embedding_dim, sphere_radius_sq)
from grasspack.errors import DegenerateRankError, ParameterError
from grasspack.numerics import COMPLEX, REAL, hs_inner

from conftest import random_projection


class TestSpace:
    def test_dimensions(self):
        assert embedding_dim(2, COMPLEX) == 3
        assert embedding_dim(4, COMPLEX) == 15
        assert embedding_dim(16, REAL) == 135
        assert embedding_dim(7, COMPLEX) == 48
        with pytest.raises(ParameterError):
            embedding_dim(1, COMPLEX)

    def test_pauli_basis_for_m2(self):
        space = build_space(2, COMPLEX)
        s = 1 / np.sqrt(2)
        assert np.allclose(space.basis[0], [[0, s], [s, 0]])          # sigma_x
        assert np.allclose(space.basis[1], [[0, -1j * s], [1j * s, 0]])  # sigma_y
        assert np.allclose(space.basis[2], [[s, 0], [0, -s]])          # sigma_z

    @pytest.mark.parametrize("m,field", [(2, COMPLEX), (3, COMPLEX), (4, COMPLEX),
                                          (3, REAL), (5, REAL)])
    def test_basis_orthonormal_traceless_hermitian(self, m, field):
        space = build_space(m, field)
        assert space.basis.shape == (space.d, m, m)
        for i in range(space.d):
            b = space.basis[i]
            assert abs(np.trace(b)) <= 1e-12
            assert np.allclose(b, b.conj().T)
            for j in range(i, space.d):
                want = 1.0 if i == j else 0.0
                assert hs_inner(b, space.basis[j]).real == pytest.approx(want, abs=1e-12)

    def test_basis_completeness(self, rng):
        # any traceless Hermitian reconstructs from its coefficients
        for m, field in ((4, COMPLEX), (4, REAL)):
            space = build_space(m, field)
            a = rng.standard_normal((m, m))
            if field == COMPLEX:
                a = a + 1j * rng.standard_normal((m, m))
            a = a + a.conj().T
            a = a - (np.trace(a) / m) * np.eye(m)
            coeff = np.einsum("ij,kij->k", a, space.basis.conj())
            recon = np.tensordot(coeff, space.basis, axes=1)
            assert np.abs(recon - a).max() <= 1e-9


class TestEmbed:
    def test_hand_computed_qubit_example(self):
        # P = diag(1,0): traceless part diag(1/2,-1/2), radius 1/sqrt(2),
        # coordinates (0, 0, 1) in the Pauli/sqrt(2) basis
        space = build_space(2, COMPLEX)
        v = embed(np.diag([1.0, 0.0]), space)
        assert v.source_rank == 1
        assert np.allclose(v.coords, [0.0, 0.0, 1.0], atol=1e-12)

    @pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
    def test_radius_formula(self, rng, m):
        space = build_space(m, COMPLEX)
        for rank in range(1, m):
            p = random_projection(rng, m, rank)
            traceless = p - (rank / m) * np.eye(m)
            assert hs_inner(traceless, traceless).real == pytest.approx(
                sphere_radius_sq(m, rank), abs=1e-9)
            v = embed(p, space)
            assert np.linalg.norm(v.coords) == pytest.approx(1.0, abs=1e-9)

    def test_reconstruction(self, rng):
        m, rank = 5, 2
        space = build_space(m, COMPLEX)
        p = random_projection(rng, m, rank)
        v = embed(p, space)
        radius = np.sqrt(sphere_radius_sq(m, rank))
        recon = np.tensordot(v.coords * radius, space.basis, axes=1) + (rank / m) * np.eye(m)
        assert np.abs(recon - p).max() <= 1e-9

    def test_degenerate_ranks_rejected(self):
        space = build_space(3, COMPLEX)
        with pytest.raises(DegenerateRankError):
            embed(np.eye(3), space)
        with pytest.raises(DegenerateRankError):
            embed(np.zeros((3, 3)), space)

    def test_non_projection_rejected(self):
        space = build_space(2, COMPLEX)
        with pytest.raises(ParameterError):
            embed(np.diag([1.0, 0.5]), space)

    def test_real_space_rejects_complex_data(self, rng):
        space = build_space(3, REAL)
        p = random_projection(rng, 3, 1, field="C")
        assert np.abs(p.imag).max() > 0
        with pytest.raises(ParameterError):
            embed(p, space)


class TestEmbeddedInner:
    def test_self_inner_is_one(self, rng):
        space = build_space(4, COMPLEX)
        p = random_projection(rng, 4, 2)
        assert embedded_inner(p, p, space) == pytest.approx(1.0, abs=1e-9)

    def test_complement_is_antipodal(self, rng):
        space = build_space(5, COMPLEX)
        for rank in (1, 2, 4):
            p = random_projection(rng, 5, rank)
            assert embedded_inner(p, np.eye(5) - p, space) == pytest.approx(-1.0, abs=1e-9)

    def test_hand_computed_qubit_pair(self):
        # tr(PQ) = 1/2, l = 1, m = 2: (2/1) (1/2 - 1/2) = 0
        space = build_space(2, COMPLEX)
        p = np.array([[1, 0], [0, 0]], dtype=complex)
        q = np.array([[0.5, 0.5], [0.5, 0.5]], dtype=complex)
        assert embedded_inner(p, q, space) == pytest.approx(0.0, abs=1e-12)

    @pytest.mark.parametrize("m", [2, 3, 4, 5, 6, 7, 8])
    def test_trace_formula_matches_coordinates(self, rng, m):
        # the central identity: the trace formula agrees with the explicit
        # coordinate dot product for every rank combination
        for field in (COMPLEX, REAL):
            space = build_space(m, field)
            for lp in range(1, m):
                for lq in range(1, m):
                    p = random_projection(rng, m, lp, field)
                    q = random_projection(rng, m, lq, field)
                    via_trace = embedded_inner(p, q, space)
                    via_coords = float(embed(p, space).coords @ embed(q, space).coords)
                    assert via_trace == pytest.approx(via_coords, abs=1e-9)

    def test_equal_rank_specialization(self, rng):
        # tr(PQ) = l^2/m + (l(m-l)/m) <v_P, v_Q> for equal ranks
        m, l = 6, 2
        space = build_space(m, COMPLEX)
        p = random_projection(rng, m, l)
        q = random_projection(rng, m, l)
        tr_pq = hs_inner(p, q).real
        inner = embedded_inner(p, q, space)
        assert tr_pq == pytest.approx(l * l / m + (l * (m - l) / m) * inner, abs=1e-9)

    def test_isometry_with_chordal_distance(self, rng):
        # 2 d_c(P,Q)^2 = |T_l P - T_l Q|_HS^2 with d_c^2 = l - tr(PQ)
        m, l = 5, 2
        for _ in range(10):
            p = random_projection(rng, m, l)
            q = random_projection(rng, m, l)
            dc2 = l - hs_inner(p, q).real
            tp = p - (l / m) * np.eye(m)
            tq = q - (l / m) * np.eye(m)
            diff = hs_inner(tp - tq, tp - tq).real
            assert 2 * dc2 == pytest.approx(diff, abs=1e-9)

    def test_degenerate_rejected(self):
        space = build_space(3, COMPLEX)
        p = np.diag([1.0, 0.0, 0.0])
        with pytest.raises(DegenerateRankError):
            embedded_inner(p, np.eye(3), space)


class TestDisjointness:
    def test_distinct_ranks_always_separate(self, rng):
        space = build_space(4, COMPLEX)
        for _ in range(200):
            p = random_projection(rng, 4, 1)
            q = random_projection(rng, 4, 2)
            assert check_image_disjointness(p, q, space)

    def test_complement_pair_distance_two(self, rng):
        space = build_space(4, COMPLEX)
        p = random_projection(rng, 4, 1)
        q = np.eye(4) - p
        vp = embed(p, space).coords
        vq = embed(q, space).coords
        assert np.linalg.norm(vp - vq) == pytest.approx(2.0, abs=1e-9)
        assert check_image_disjointness(p, q, space)

    def test_equal_ranks_rejected(self, rng):
        space = build_space(4, COMPLEX)
        p = random_projection(rng, 4, 2)
        q = random_projection(rng, 4, 2)
        with pytest.raises(ParameterError):
            check_image_disjointness(p, q, space)


def test_embedded_code_json(rng):
    space = build_space(3, COMPLEX)
    vectors = [embed(random_projection(rng, 3, 1), space, source_index=i)
               for i in range(4)]
    obj = embedded_code_to_json(space, vectors)
    assert obj["d"] == 8
    assert len(obj["vectors"]) == 4
    assert all(len(v["coords"]) == 8 and v["rank"] == 1 for v in obj["vectors"])
