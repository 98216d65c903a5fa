"""Quantum state containers and distance measures.

Pure states are unit-norm complex vectors, mixed states are density
matrices.  The measures exposed here are the fidelity (|⟨α|β⟩| for pure
states, tr√(ρ^½ σ ρ^½) for mixed ones), the angle metric arccos F, and
the trace distance ½·tr|ρ−σ|, together with the purification machinery
that realizes the mixed-state fidelity as an overlap maximum over
purification pairs (Uhlmann's theorem).

States serialize to/from JSON as ``{"dim": n, "re": [...], "im": [...]}``
with row-major layout for matrices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.stats import unitary_group

from .errors import AncillaTooSmall, DimensionMismatch, InvalidState

__all__ = [
    "PureState",
    "DensityMatrix",
    "Purification",
    "UhlmannResult",
    "overlap",
    "fidelity_pure",
    "fidelity_mixed",
    "angle",
    "trace_distance",
    "purify",
    "uhlmann_fidelity",
    "random_pure",
    "random_density",
]

NORM_TOL = 1e-12      # allowed deviation of Σ|a_i|² from 1
HERM_TOL = 1e-12      # allowed entrywise |M − M†|
TRACE_TOL = 1e-12     # allowed deviation of tr ρ from 1
PSD_TOL = 1e-10       # eigenvalues may undershoot 0 by this much
RANK_TOL = 1e-12      # eigenvalues below this count as zero rank


@dataclass(frozen=True, eq=False)
class PureState:
    """Unit-norm complex amplitude vector on an N-dimensional Hilbert space.

    Immutable after construction; all operations on states are pure
    functions, so instances are safe to share between threads.
    """

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex)
        if amps.ndim != 1:
            raise InvalidState("amplitudes must be a 1-d vector")
        if amps.size < 2:
            raise InvalidState("pure state needs dimension >= 2")
        norm_sq = float(np.sum(np.abs(amps) ** 2))
        if abs(norm_sq - 1.0) > NORM_TOL:
            raise InvalidState(
                f"amplitudes are not normalized: sum |a_i|^2 = {norm_sq!r}"
            )
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    @classmethod
    def basis(cls, dim: int, k: int) -> "PureState":
        """The computational basis ket |k⟩ (0-based) in dimension ``dim``."""
        if not 0 <= k < dim:
            raise InvalidState(f"basis index {k} out of range for dim {dim}")
        amps = np.zeros(dim, dtype=complex)
        amps[k] = 1.0
        return cls(amps)

    @classmethod
    def uniform(cls, dim: int) -> "PureState":
        """The uniform superposition (1/√dim)·Σ|i⟩."""
        return cls(np.full(dim, 1.0 / np.sqrt(dim), dtype=complex))

    @classmethod
    def from_unnormalized(cls, vec) -> "PureState":
        """Normalize ``vec`` and wrap it; rejects (near-)zero vectors."""
        vec = np.asarray(vec, dtype=complex)
        nrm = float(np.linalg.norm(vec))
        if nrm <= 1e-15:
            raise InvalidState("cannot normalize a zero vector")
        return cls(vec / nrm)

    def density(self) -> "DensityMatrix":
        """The rank-1 projector |ψ⟩⟨ψ| as a DensityMatrix."""
        return DensityMatrix(np.outer(self.amplitudes, self.amplitudes.conj()))

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "re": self.amplitudes.real.tolist(),
            "im": self.amplitudes.imag.tolist(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PureState":
        dim = int(data["dim"])
        re = np.asarray(data["re"], dtype=float)
        im = np.asarray(data["im"], dtype=float)
        if re.shape != (dim,) or im.shape != (dim,):
            raise InvalidState("re/im length does not match dim")
        return cls(re + 1j * im)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "PureState":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, positive-semidefinite, unit-trace complex matrix.

    Construction validates hermiticity, trace and positivity up to the
    module tolerances; anything worse is rejected as an invalid state.
    """

    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise InvalidState("density matrix must be square")
        herm_defect = float(np.max(np.abs(m - m.conj().T)))
        if herm_defect > HERM_TOL:
            raise InvalidState(f"matrix is not Hermitian: defect {herm_defect:.3e}")
        tr = complex(np.trace(m))
        if abs(tr - 1.0) > TRACE_TOL:
            raise InvalidState(f"trace must be 1, got {tr!r}")
        if float(np.min(np.linalg.eigvalsh(m))) < -PSD_TOL:
            raise InvalidState("matrix is not positive semidefinite")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def from_pure(cls, psi: PureState) -> "DensityMatrix":
        return psi.density()

    @classmethod
    def maximally_mixed(cls, dim: int) -> "DensityMatrix":
        return cls(np.eye(dim, dtype=complex) / dim)

    def rank(self, tol: float = RANK_TOL) -> int:
        return int(np.sum(np.linalg.eigvalsh(self.matrix) > tol))

    def to_dict(self) -> dict:
        flat = self.matrix.reshape(-1)
        return {"dim": self.dim, "re": flat.real.tolist(), "im": flat.imag.tolist()}

    @classmethod
    def from_dict(cls, data: dict) -> "DensityMatrix":
        dim = int(data["dim"])
        re = np.asarray(data["re"], dtype=float)
        im = np.asarray(data["im"], dtype=float)
        if re.shape != (dim * dim,) or im.shape != (dim * dim,):
            raise InvalidState("re/im length does not match dim*dim")
        return cls((re + 1j * im).reshape(dim, dim))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "DensityMatrix":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True, eq=False)
class Purification:
    """A pure state of system ⊗ ancilla whose ancilla partial trace
    reproduces a given density matrix."""

    system_dim: int
    ancilla_dim: int
    joint: PureState

    def __post_init__(self):
        if self.system_dim * self.ancilla_dim != self.joint.dim:
            raise InvalidState("joint dimension must be system_dim * ancilla_dim")

    def reduced(self) -> DensityMatrix:
        """Partial trace of |joint⟩⟨joint| over the ancilla."""
        psi = self.joint.amplitudes.reshape(self.system_dim, self.ancilla_dim)
        return DensityMatrix(np.einsum("ia,ja->ij", psi, psi.conj()))


class UhlmannResult(NamedTuple):
    estimate: float
    exact: float


def _check_same_dim(a, b) -> None:
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimension mismatch: {a.dim} vs {b.dim}")


def overlap(a: PureState, b: PureState) -> complex:
    """Inner product ⟨a|b⟩."""
    _check_same_dim(a, b)
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def fidelity_pure(a: PureState, b: PureState) -> float:
    """Fidelity |⟨a|b⟩| between two pure states.

    Symmetric in its arguments and invariant under a global phase of
    either one.  Returns a value in [0, 1].
    """
    return min(abs(overlap(a, b)), 1.0)


def _sqrtm_psd(m: np.ndarray) -> np.ndarray:
    """Hermitian square root with eigenvalues clamped to [0, ∞)."""
    w, v = np.linalg.eigh(m)
    w = np.clip(w, 0.0, None)
    return (v * np.sqrt(w)) @ v.conj().T


def _fidelity_one_sided(rho: np.ndarray, sigma: np.ndarray) -> float:
    root = _sqrtm_psd(rho)
    mid = root @ sigma @ root
    mid = 0.5 * (mid + mid.conj().T)
    w = np.linalg.eigvalsh(mid)
    # rank-deficient inputs leave ~1e-17 noise eigenvalues whose square
    # roots would pollute the trace at the 1e-9 scale; zero them out
    w[w < mid.shape[0] * 1e-15] = 0.0
    return float(np.sum(np.sqrt(w)))


def fidelity_mixed(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """Fidelity tr√(ρ^½ σ ρ^½) between two density matrices.

    Reduces to ``fidelity_pure`` on rank-1 inputs.  The expression is
    analytically symmetric but numerically asymmetric at the 1e-13
    scale, so both argument orders are averaged before returning.
    """
    _check_same_dim(rho, sigma)
    f = 0.5 * (
        _fidelity_one_sided(rho.matrix, sigma.matrix)
        + _fidelity_one_sided(sigma.matrix, rho.matrix)
    )
    return float(np.clip(f, 0.0, 1.0))


def angle(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """Angle metric arccos F(ρ, σ), in [0, π/2]."""
    return float(np.arccos(fidelity_mixed(rho, sigma)))


def trace_distance(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """Trace distance ½·tr|ρ−σ|, in [0, 1]."""
    _check_same_dim(rho, sigma)
    eigs = np.linalg.eigvalsh(rho.matrix - sigma.matrix)
    return float(np.clip(0.5 * np.sum(np.abs(eigs)), 0.0, 1.0))


def _canonical_frame(rho: DensityMatrix) -> np.ndarray:
    """dim×dim frame whose column k is √λ_k·|v_k⟩, eigenvalues descending.

    Flattening the first ``anc`` columns row-major gives the canonical
    purification with an ``anc``-dimensional ancilla.
    """
    w, v = np.linalg.eigh(rho.matrix)
    order = np.argsort(w)[::-1]
    w = np.clip(w[order], 0.0, None)
    return v[:, order] * np.sqrt(w)


def purify(rho: DensityMatrix, ancilla_dim: int) -> Purification:
    """Canonical purification built from the eigendecomposition of ρ.

    The joint state is Σ_k √λ_k |v_k⟩⊗|k⟩ over the nonzero eigenvalues,
    which requires ``ancilla_dim`` at least the rank of ρ.
    """
    if ancilla_dim < 1:
        raise AncillaTooSmall("ancilla dimension must be positive")
    rank = rho.rank()
    if ancilla_dim < rank:
        raise AncillaTooSmall(
            f"ancilla dimension {ancilla_dim} below rank {rank} of the state"
        )
    frame = _canonical_frame(rho)[:, : min(ancilla_dim, rho.dim)]
    if ancilla_dim > rho.dim:
        pad = np.zeros((rho.dim, ancilla_dim - rho.dim), dtype=complex)
        frame = np.hstack([frame, pad])
    return Purification(rho.dim, ancilla_dim, PureState.from_unnormalized(frame.reshape(-1)))


def uhlmann_fidelity(
    rho: DensityMatrix, sigma: DensityMatrix, budget: int, seed=None
) -> UhlmannResult:
    """Fidelity as a purification-overlap maximum, exact and sampled.

    ``exact`` is the nuclear norm tr|√σ√ρ|.  ``estimate`` maximizes
    |⟨ψ|φ⟩| over ``budget`` purification pairs: ψ is the fixed canonical
    purification of ρ and φ runs over ancilla-unitary rotations of the
    canonical purification of σ.  The first draw is the identity
    rotation, the rest are Haar random, so the estimate is deterministic
    given ``seed`` and never exceeds ``exact`` (Uhlmann's theorem).
    """
    _check_same_dim(rho, sigma)
    if budget < 1:
        raise ValueError("budget must be >= 1")
    exact = float(
        np.sum(np.linalg.svd(_sqrtm_psd(sigma.matrix) @ _sqrtm_psd(rho.matrix), compute_uv=False))
    )
    # ⟨ψ|(I⊗U)|φ⟩ = tr(M Uᵀ) with M = Ψ†Φ built from the canonical frames
    m = _canonical_frame(rho).conj().T @ _canonical_frame(sigma)
    best = abs(np.trace(m))
    rng = np.random.default_rng(seed)
    for _ in range(budget - 1):
        u = unitary_group.rvs(rho.dim, random_state=rng)
        best = max(best, abs(np.sum(m * u)))
    return UhlmannResult(float(best), exact)


def random_pure(dim: int, seed=None) -> PureState:
    """Haar-random pure state of the given dimension."""
    rng = np.random.default_rng(seed)
    vec = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return PureState.from_unnormalized(vec)


def random_density(dim: int, rank: int | None = None, seed=None) -> DensityMatrix:
    """Random density matrix of the given dimension and rank.

    Built as a Dirichlet-weighted mixture over a random orthonormal set,
    so the spectrum is exactly normalized.
    """
    rng = np.random.default_rng(seed)
    rank = dim if rank is None else rank
    if not 1 <= rank <= dim:
        raise ValueError(f"rank must be in [1, {dim}]")
    gauss = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
    q, _ = np.linalg.qr(gauss)
    probs = rng.dirichlet(np.ones(rank))
    m = (q * probs) @ q.conj().T
    return DensityMatrix(0.5 * (m + m.conj().T))
