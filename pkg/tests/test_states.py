"""State containers and distance measures."""

import json

import numpy as np
import pytest
import scipy.linalg

from adialab.errors import AncillaTooSmall, DimensionMismatch, InvalidState
from adialab.states import (
    DensityMatrix,
    PureState,
    angle,
    fidelity_mixed,
    fidelity_pure,
    overlap,
    purify,
    random_density,
    random_pure,
    trace_distance,
    uhlmann_fidelity,
)
from conftest import pair_with_overlap, random_pair

INV_SQRT2 = 1.0 / np.sqrt(2.0)


class TestPureState:
    def test_basis_and_uniform(self):
        e0 = PureState.basis(4, 0)
        assert e0.dim == 4
        assert e0.amplitudes[0] == 1.0
        uni = PureState.uniform(4)
        assert np.allclose(uni.amplitudes, 0.5)

    def test_rejects_unnormalized(self):
        with pytest.raises(InvalidState):
            PureState(np.array([1.0, 1.0]))

    def test_rejects_dim_one(self):
        with pytest.raises(InvalidState):
            PureState(np.array([1.0]))

    def test_rejects_matrix_input(self):
        with pytest.raises(InvalidState):
            PureState(np.eye(2))

    def test_from_unnormalized(self):
        psi = PureState.from_unnormalized([3.0, 4.0])
        assert np.allclose(psi.amplitudes, [0.6, 0.8])
        with pytest.raises(InvalidState):
            PureState.from_unnormalized([0.0, 0.0])

    def test_amplitudes_are_read_only(self):
        psi = PureState.basis(2, 0)
        with pytest.raises(ValueError):
            psi.amplitudes[0] = 0.0

    def test_json_round_trip(self):
        psi = random_pure(5, seed=11)
        again = PureState.from_json(psi.to_json())
        assert np.allclose(again.amplitudes, psi.amplitudes, atol=1e-15)
        data = json.loads(psi.to_json())
        assert set(data) == {"dim", "re", "im"}
        assert data["dim"] == 5

    def test_json_rejects_bad_lengths(self):
        with pytest.raises(InvalidState):
            PureState.from_dict({"dim": 3, "re": [1.0, 0.0], "im": [0.0, 0.0]})


class TestDensityMatrix:
    def test_validates_hermiticity(self):
        m = np.array([[0.5, 0.5], [0.0, 0.5]], dtype=complex)
        with pytest.raises(InvalidState):
            DensityMatrix(m)

    def test_validates_trace(self):
        with pytest.raises(InvalidState):
            DensityMatrix(np.eye(2, dtype=complex))

    def test_validates_positivity(self):
        m = np.diag([1.5, -0.5]).astype(complex)
        with pytest.raises(InvalidState):
            DensityMatrix(m)

    def test_from_pure_and_rank(self):
        rho = PureState.uniform(4).density()
        assert rho.dim == 4
        assert rho.rank() == 1
        assert DensityMatrix.maximally_mixed(3).rank() == 3

    def test_json_round_trip(self):
        rho = random_density(3, seed=5)
        again = DensityMatrix.from_json(rho.to_json())
        assert np.allclose(again.matrix, rho.matrix, atol=1e-15)
        data = json.loads(rho.to_json())
        assert data["dim"] == 3
        assert len(data["re"]) == 9


class TestFidelityPure:
    def test_identical_states(self):
        psi = PureState.basis(2, 0)
        assert fidelity_pure(psi, psi) == 1.0

    def test_orthogonal_states(self):
        assert fidelity_pure(PureState.basis(2, 0), PureState.basis(2, 1)) == 0.0

    def test_uniform_vs_basis_ket(self):
        # uniform over N=4 against any basis ket: overlap 1/sqrt(4) = 0.5
        uni = PureState.uniform(4)
        for k in range(4):
            assert fidelity_pure(uni, PureState.basis(4, k)) == pytest.approx(0.5, abs=1e-15)

    def test_symmetric_and_phase_invariant(self):
        rng = np.random.default_rng(3)
        a, b = random_pair(6, rng)
        f = fidelity_pure(a, b)
        assert fidelity_pure(b, a) == pytest.approx(f, abs=1e-15)
        b_phased = PureState(b.amplitudes * np.exp(0.7j))
        assert fidelity_pure(a, b_phased) == pytest.approx(f, abs=1e-14)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            fidelity_pure(PureState.basis(2, 0), PureState.basis(3, 0))


class TestFidelityMixed:
    def test_self_fidelity_is_one(self):
        rho = random_density(4, seed=1)
        assert fidelity_mixed(rho, rho) == pytest.approx(1.0, abs=1e-12)

    def test_rank_one_reduction(self):
        rng = np.random.default_rng(17)
        for dim in (2, 3, 5, 8):
            for _ in range(5):
                a, b = random_pair(dim, rng)
                assert fidelity_mixed(a.density(), b.density()) == pytest.approx(
                    fidelity_pure(a, b), abs=1e-10
                )

    def test_maximally_mixed_vs_projector(self):
        # hand evaluation: sqrt(I/2) = I/sqrt2, so tr sqrt(sigma/2) = 1/sqrt2
        rho = DensityMatrix.maximally_mixed(2)
        sigma = PureState.basis(2, 0).density()
        assert fidelity_mixed(rho, sigma) == pytest.approx(INV_SQRT2, abs=1e-12)

    def test_against_scipy_sqrtm_oracle(self):
        rng = np.random.default_rng(23)
        for _ in range(10):
            rho = random_density(3, seed=rng)
            sigma = random_density(3, seed=rng)
            root = scipy.linalg.sqrtm(rho.matrix)
            oracle = np.real(np.trace(scipy.linalg.sqrtm(root @ sigma.matrix @ root)))
            assert fidelity_mixed(rho, sigma) == pytest.approx(oracle, abs=1e-9)

    def test_symmetry(self):
        rng = np.random.default_rng(9)
        for _ in range(10):
            rho = random_density(4, seed=rng)
            sigma = random_density(4, rank=2, seed=rng)
            assert fidelity_mixed(rho, sigma) == pytest.approx(
                fidelity_mixed(sigma, rho), abs=1e-10
            )

    def test_bounds(self):
        rng = np.random.default_rng(31)
        for _ in range(20):
            rho = random_density(3, seed=rng)
            sigma = random_density(3, seed=rng)
            assert 0.0 <= fidelity_mixed(rho, sigma) <= 1.0


class TestAngle:
    def test_zero_for_identical(self):
        rho = random_density(3, seed=2)
        assert angle(rho, rho) == pytest.approx(0.0, abs=2e-6)  # arccos is steep at 1

    def test_orthogonal_pure_states(self):
        r0 = PureState.basis(2, 0).density()
        r1 = PureState.basis(2, 1).density()
        assert angle(r0, r1) == pytest.approx(np.pi / 2, abs=1e-12)

    def test_maximally_mixed_vs_projector(self):
        rho = DensityMatrix.maximally_mixed(2)
        sigma = PureState.basis(2, 0).density()
        assert angle(rho, sigma) == pytest.approx(np.pi / 4, abs=1e-12)

    def test_triangle_inequality(self):
        rng = np.random.default_rng(41)
        for _ in range(1000):
            dim = int(rng.integers(2, 5))
            x = random_density(dim, rank=int(rng.integers(1, dim + 1)), seed=rng)
            y = random_density(dim, rank=int(rng.integers(1, dim + 1)), seed=rng)
            z = random_density(dim, rank=int(rng.integers(1, dim + 1)), seed=rng)
            assert angle(x, z) <= angle(x, y) + angle(y, z) + 1e-9


class TestTraceDistance:
    def test_zero_for_identical(self):
        rho = random_density(4, seed=6)
        assert trace_distance(rho, rho) == 0.0

    def test_one_for_orthogonal(self):
        r0 = PureState.basis(2, 0).density()
        r1 = PureState.basis(2, 1).density()
        assert trace_distance(r0, r1) == pytest.approx(1.0, abs=1e-12)

    def test_pure_pair_with_overlap(self):
        # rank-2 difference has eigenvalues ±sqrt(1−a²)
        rng = np.random.default_rng(13)
        for a in (0.1, 0.4, 0.75, 0.95):
            alpha, beta = pair_with_overlap(a, 6, rng)
            d = trace_distance(alpha.density(), beta.density())
            assert d == pytest.approx(np.sqrt(1.0 - a * a), abs=1e-10)

    def test_fidelity_one_iff_distance_zero(self):
        rng = np.random.default_rng(19)
        for _ in range(20):
            rho = random_density(3, seed=rng)
            sigma = random_density(3, seed=rng)
            assert (fidelity_mixed(rho, sigma) >= 1.0 - 1e-9) == (
                trace_distance(rho, sigma) <= 1e-9
            )
            assert fidelity_mixed(rho, rho) >= 1.0 - 1e-9
            assert trace_distance(rho, rho) <= 1e-9


class TestUnitaryInvariance:
    def test_all_metrics(self):
        rng = np.random.default_rng(29)
        from scipy.stats import unitary_group

        for _ in range(5):
            rho = random_density(4, seed=rng)
            sigma = random_density(4, rank=2, seed=rng)
            u = unitary_group.rvs(4, random_state=rng)
            rho_u = DensityMatrix(u @ rho.matrix @ u.conj().T)
            sigma_u = DensityMatrix(u @ sigma.matrix @ u.conj().T)
            assert fidelity_mixed(rho_u, sigma_u) == pytest.approx(
                fidelity_mixed(rho, sigma), abs=1e-10
            )
            assert trace_distance(rho_u, sigma_u) == pytest.approx(
                trace_distance(rho, sigma), abs=1e-10
            )
            assert angle(rho_u, sigma_u) == pytest.approx(angle(rho, sigma), abs=1e-7)


class TestPurify:
    def test_pure_state_with_trivial_ancilla(self):
        rho = PureState.basis(2, 0).density()
        p = purify(rho, 1)
        assert p.joint.dim == 2
        assert abs(overlap(p.joint, PureState.basis(2, 0))) == pytest.approx(1.0, abs=1e-12)
        assert np.allclose(p.reduced().matrix, rho.matrix, atol=1e-12)

    def test_maximally_mixed_gives_maximal_entanglement(self):
        p = purify(DensityMatrix.maximally_mixed(2), 2)
        schmidt = np.linalg.svd(p.joint.amplitudes.reshape(2, 2), compute_uv=False)
        assert np.allclose(schmidt, INV_SQRT2, atol=1e-12)

    def test_random_rank_two_reduction(self):
        rng = np.random.default_rng(37)
        for _ in range(10):
            rho = random_density(3, rank=2, seed=rng)
            p = purify(rho, 2)
            assert np.max(np.abs(p.reduced().matrix - rho.matrix)) <= 1e-10

    def test_oversized_ancilla(self):
        rho = random_density(2, seed=43)
        p = purify(rho, 3)
        assert p.joint.dim == 6
        assert np.max(np.abs(p.reduced().matrix - rho.matrix)) <= 1e-10

    def test_ancilla_too_small(self):
        with pytest.raises(AncillaTooSmall):
            purify(DensityMatrix.maximally_mixed(3), 2)
        with pytest.raises(AncillaTooSmall):
            purify(DensityMatrix.maximally_mixed(2), 0)


class TestUhlmannFidelity:
    def test_pure_inputs_are_exact_for_any_budget(self):
        rng = np.random.default_rng(47)
        alpha, beta = random_pair(3, rng)
        for budget in (1, 2, 7):
            est, exact = uhlmann_fidelity(alpha.density(), beta.density(), budget, seed=0)
            f = fidelity_pure(alpha, beta)
            assert est == pytest.approx(f, abs=1e-12)
            assert exact == pytest.approx(f, abs=1e-12)

    def test_identity_rotation_on_identical_states(self):
        rho = random_density(3, seed=53)
        est, exact = uhlmann_fidelity(rho, rho, budget=1)
        assert est == pytest.approx(1.0, abs=1e-12)
        assert exact == pytest.approx(1.0, abs=1e-12)

    def test_estimate_converges(self):
        rho = DensityMatrix.maximally_mixed(2)
        sigma = PureState.basis(2, 0).density()
        est, exact = uhlmann_fidelity(rho, sigma, budget=10**4, seed=0)
        assert exact == pytest.approx(INV_SQRT2, abs=1e-10)
        assert abs(est - INV_SQRT2) <= 1e-3

    def test_estimate_never_exceeds_exact(self):
        rng = np.random.default_rng(59)
        for _ in range(15):
            rho = random_density(3, seed=rng)
            sigma = random_density(3, rank=2, seed=rng)
            est, exact = uhlmann_fidelity(rho, sigma, budget=40, seed=rng)
            assert est <= exact + 1e-9

    def test_exact_matches_fidelity_mixed(self):
        rng = np.random.default_rng(61)
        for _ in range(10):
            rho = random_density(4, seed=rng)
            sigma = random_density(4, seed=rng)
            _, exact = uhlmann_fidelity(rho, sigma, budget=1)
            assert exact == pytest.approx(fidelity_mixed(rho, sigma), abs=1e-10)

    def test_matches_literal_purification_overlap(self):
        # the scan over ancilla rotations is the overlap of actual purifications
        rho = random_density(3, seed=67)
        sigma = random_density(3, rank=2, seed=71)
        est, _ = uhlmann_fidelity(rho, sigma, budget=1)
        psi = purify(rho, 3).joint
        phi = purify(sigma, 3).joint
        assert est == pytest.approx(abs(overlap(psi, phi)), abs=1e-12)

    def test_budget_validation(self):
        rho = DensityMatrix.maximally_mixed(2)
        with pytest.raises(ValueError):
            uhlmann_fidelity(rho, rho, budget=0)
