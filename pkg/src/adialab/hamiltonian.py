"""Interpolated projector Hamiltonians and their exact spectrum.

The interpolation H(s) = (1−s)(I−|α⟩⟨α|) + s(I−|β⟩⟨β|) acts nontrivially
only on span{|α⟩, |β⟩}.  With |1⟩ = |α⟩ and |2⟩ the Gram–Schmidt
complement of |β⟩, everything spectral is closed form in the overlap
modulus a = |⟨α|β⟩|:

    E₀(s), E₁(s) = (1 ∓ g(s))/2,   g(s) = √(1 − 4(1−a²)s(1−s)),

with eigenvectors (|1⟩ + y_i|2⟩)/√(1+y_i²) and a transition matrix
element |ds/dt|·a√(1−a²)/g(s) that never exceeds |ds/dt|.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, IdenticalStates, OrthogonalStates
from .states import PureState, overlap

__all__ = [
    "AdiabaticProblem",
    "SpectrumPoint",
    "build_problem",
    "problem_from_overlap",
    "hamiltonian_full",
    "hamiltonian_effective",
    "gap_value",
    "energy_levels",
    "eigenvector_slopes",
    "transition_matrix_element",
    "spectrum",
    "effective_eigenvectors",
    "matrix_element",
    "min_gap",
]

ORTHO_TOL = 1e-12    # a at/below this: orthogonal, runtime diverges
IDENT_TOL = 1e-12    # 1−a at/below this: identical, |2⟩ undefined


@dataclass(frozen=True, eq=False)
class AdiabaticProblem:
    """An (|α⟩, |β⟩) pair with its derived overlap data.

    ``overlap`` is the complex ⟨α|β⟩, ``a`` its modulus, ``c`` = √(1−a²),
    and ``basis2`` the Gram–Schmidt vector |2⟩ = (|β⟩ − ⟨α|β⟩|α⟩)/c, so
    that |β⟩ = c|2⟩ + ⟨α|β⟩|1⟩.  Immutable; build via ``build_problem``.
    """

    alpha: PureState
    beta: PureState
    overlap: complex
    a: float
    c: float
    basis2: PureState


@dataclass(frozen=True)
class SpectrumPoint:
    """The two moving eigenvalues at interpolation parameter s.

    ``y0``/``y1`` are the eigenvector slopes along |2⟩; at s = 0 they
    take their continuity-limit values 0 and −inf (ground |1⟩,
    excited |2⟩).
    """

    s: float
    E0: float
    E1: float
    gap: float
    y0: float
    y1: float


def build_problem(alpha: PureState, beta: PureState) -> AdiabaticProblem:
    """Assemble the interpolation problem for a state pair.

    Raises ``OrthogonalStates`` when |⟨α|β⟩| ≤ 1e-12 (the runtime
    diverges) and ``IdenticalStates`` when |⟨α|β⟩| ≥ 1 − 1e-12 (the
    caller should apply T = 0 semantics instead).
    """
    if alpha.dim != beta.dim:
        raise DimensionMismatch(f"dimension mismatch: {alpha.dim} vs {beta.dim}")
    w = overlap(alpha, beta)
    a = abs(w)
    if a <= ORTHO_TOL:
        raise OrthogonalStates("states are orthogonal: infinite running time")
    if a >= 1.0 - IDENT_TOL:
        raise IdenticalStates("states coincide up to phase: zero running time")
    residual = beta.amplitudes - w * alpha.amplitudes
    c = float(np.linalg.norm(residual))
    basis2 = PureState(residual / c)
    return AdiabaticProblem(alpha, beta, w, a, c, basis2)


def problem_from_overlap(w: complex) -> AdiabaticProblem:
    """Minimal 2-dimensional problem realizing a given overlap ⟨α|β⟩.

    All spectral quantities and the reduced 2×2 dynamics depend only on
    the overlap, so this stands in for instances of arbitrary Hilbert
    dimension without materializing their state vectors.
    """
    w = complex(w)
    a = abs(w)
    if a >= 1.0 - IDENT_TOL:
        raise IdenticalStates("overlap modulus is 1: zero running time")
    beta = PureState(np.array([w, np.sqrt(1.0 - a * a)], dtype=complex))
    return build_problem(PureState.basis(2, 0), beta)


def hamiltonian_full(problem: AdiabaticProblem, s: float) -> np.ndarray:
    """Dense H(s) = (1−s)(I−|α⟩⟨α|) + s(I−|β⟩⟨β|) on the full space."""
    _check_s(s)
    alpha = problem.alpha.amplitudes
    beta = problem.beta.amplitudes
    h = np.eye(problem.alpha.dim, dtype=complex)
    h -= (1.0 - s) * np.outer(alpha, alpha.conj())
    h -= s * np.outer(beta, beta.conj())
    return h


def hamiltonian_effective(problem: AdiabaticProblem, s: float) -> np.ndarray:
    """The 2×2 block of H(s) in the {|1⟩, |2⟩} basis.

    [[s(1−a²), −sc⟨α|β⟩], [−sc⟨α|β⟩*, 1−sc²]]; the rest of H(s) is the
    identity on the orthogonal complement.
    """
    _check_s(s)
    w = problem.overlap
    c = problem.c
    return np.array(
        [
            [s - s * problem.a**2, -s * c * w],
            [-s * c * np.conj(w), 1.0 - s * c * c],
        ],
        dtype=complex,
    )


def gap_value(a: float, s: float) -> float:
    """g(s) = √(1 − 4(1−a²)s(1−s))."""
    return float(np.sqrt(1.0 - 4.0 * (1.0 - a * a) * s * (1.0 - s)))


def energy_levels(a: float, s: float) -> tuple[float, float]:
    """The two moving eigenvalues (E₀, E₁) = ((1−g)/2, (1+g)/2).

    E₀ is evaluated as 2(1−a²)s(1−s)/(1+g), which is the same number
    without the cancellation of (1−g)/2 near the endpoints.
    """
    g = gap_value(a, s)
    e0 = 2.0 * (1.0 - a * a) * s * (1.0 - s) / (1.0 + g)
    return float(e0), float(0.5 * (1.0 + g))


def eigenvector_slopes(a: float, s: float) -> tuple[float, float]:
    """Slopes y_i = √(1−a²)/a − E_i/(s·a·√(1−a²)) of the eigenvectors.

    Defined for 0 < a < 1.  At s = 0 the formula is singular and the
    continuity limit (0, −inf) is returned: ground |1⟩, excited |2⟩.
    """
    if not 0.0 < a < 1.0:
        raise ValueError("eigenvector slopes need 0 < a < 1")
    if s == 0.0:
        return 0.0, float("-inf")
    b = np.sqrt(1.0 - a * a)
    e0, e1 = energy_levels(a, s)
    y0 = b / a - e0 / (s * a * b)
    y1 = b / a - e1 / (s * a * b)
    return float(y0), float(y1)


def transition_matrix_element(a: float, s: float, ds_dt: float) -> float:
    """|⟨dH/dt⟩₀₁| = |ds/dt|·a√(1−a²)/g(s); bounded by |ds/dt|."""
    return abs(ds_dt) * a * np.sqrt(1.0 - a * a) / gap_value(a, s)


def spectrum(problem: AdiabaticProblem, s: float) -> SpectrumPoint:
    """Closed-form spectral data of H(s) for this problem."""
    _check_s(s)
    e0, e1 = energy_levels(problem.a, s)
    y0, y1 = eigenvector_slopes(problem.a, s)
    return SpectrumPoint(s=float(s), E0=e0, E1=e1, gap=e1 - e0, y0=y0, y1=y1)


def effective_eigenvectors(problem: AdiabaticProblem, s: float) -> np.ndarray:
    """Unit eigenvectors of the effective 2×2 block, columns (ground, excited).

    The |2⟩ component carries the conjugate phase of ⟨α|β⟩; with a real
    positive overlap the columns reduce to (1, y_i)/√(1+y_i²).
    """
    phase = np.conj(problem.overlap) / problem.a
    y0, y1 = eigenvector_slopes(problem.a, s)
    if np.isinf(y1):
        return np.array([[1.0, 0.0], [0.0, -phase]], dtype=complex)
    v = np.array([[1.0, 1.0], [y0 * phase, y1 * phase]], dtype=complex)
    return v / np.sqrt(1.0 + np.array([y0, y1]) ** 2)


def matrix_element(problem: AdiabaticProblem, s: float, ds_dt: float) -> float:
    """Transition matrix element |⟨dH/dt⟩₀₁| at (s, ds/dt)."""
    _check_s(s)
    return float(transition_matrix_element(problem.a, s, ds_dt))


def min_gap(problem: AdiabaticProblem) -> float:
    """Minimum of g(s) over s ∈ [0, 1]: attained at s = ½ with value a."""
    return problem.a


def _check_s(s: float) -> None:
    if not 0.0 <= s <= 1.0:
        raise ValueError(f"interpolation parameter s must be in [0, 1], got {s}")
