"""Evolution schedules and the runtime–fidelity relation.

The minimal runtime to evolve between states of fidelity F at precision
ε is (1/ε)·tan(arccos F) = (1/ε)·√(1−F²)/F.  The locally adiabatic
schedule attains it by saturating the instantaneous adiabaticity
condition,

    ds/dt = ε·(1 − 4(1−a²)s(1−s))^{3/2} / (a√(1−a²)),

whose solution is available in closed form here; linear schedules serve
as the baseline for comparison.  Mixed-state pairs reduce to the same
relation through their fidelity (minimal runtime over purification
pairs, by Uhlmann's theorem).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, IdenticalStates, InvalidEpsilon, OrthogonalStates
from .hamiltonian import AdiabaticProblem, gap_value, transition_matrix_element
from .states import (
    DensityMatrix,
    PureState,
    _canonical_frame,
    fidelity_mixed,
    fidelity_pure,
    trace_distance,
)

__all__ = [
    "Schedule",
    "RuntimeReport",
    "AdiabaticityReport",
    "runtime_from_fidelity",
    "runtime_pure",
    "runtime_mixed",
    "runtime_mixed_by_purification",
    "local_schedule",
    "linear_schedule",
    "check_adiabaticity",
    "sample_schedule",
]

ORTHO_TOL = 1e-12        # fidelity at/below this: infinite runtime
IDENT_TOL = 1e-12        # 1−fidelity at/below this: T = 0 exactly


def _check_epsilon(epsilon: float) -> None:
    # ε ≪ 1 in the adiabatic regime, but the formulas are well defined
    # up to and including ε = 1 (which the worked examples use).
    if not 0.0 < epsilon <= 1.0:
        raise InvalidEpsilon(f"epsilon must be in (0, 1], got {epsilon}")


@dataclass(frozen=True)
class Schedule:
    """A monotone map s(t) on [0, T] with s(0) = 0 and s(T) = 1.

    ``kind`` is "linear" or "local"; local schedules carry the overlap
    ``a`` and precision ``epsilon`` they were built for.  Instances are
    immutable and evaluation is a pure function of t.
    """

    kind: str
    T: float
    a: float | None = None
    epsilon: float | None = None

    def __post_init__(self):
        if self.kind not in ("linear", "local"):
            raise ValueError(f"unknown schedule kind {self.kind!r}")
        if not self.T > 0.0:
            raise ValueError("total runtime T must be positive")
        if self.kind == "local" and (self.a is None or self.epsilon is None):
            raise ValueError("local schedules need both a and epsilon")

    def s(self, t: float) -> float:
        """Schedule value s(t); t is clamped to [0, T]."""
        t = min(max(t, 0.0), self.T)
        if self.kind == "linear":
            return t / self.T
        a, eps = self.a, self.epsilon
        b = math.sqrt(1.0 - a * a)
        tau = 2.0 * eps * t / (a * b) - 1.0 / (a * a)
        u = tau * a**3 / math.sqrt(1.0 - tau * tau * a**4 * b * b)
        return min(max(0.5 * (1.0 + u), 0.0), 1.0)

    def rate(self, t: float) -> float:
        """Instantaneous speed ds/dt at time t."""
        if self.kind == "linear":
            return 1.0 / self.T
        a, eps = self.a, self.epsilon
        g = gap_value(a, self.s(t))
        return eps * g**3 / (a * math.sqrt(1.0 - a * a))

    def time_of(self, s: float) -> float:
        """Inverse map t(s), the antiderivative of 1/(ds/dt)."""
        if not 0.0 <= s <= 1.0:
            raise ValueError("s must be in [0, 1]")
        if self.kind == "linear":
            return s * self.T
        a, eps = self.a, self.epsilon
        b = math.sqrt(1.0 - a * a)
        u = 2.0 * s - 1.0
        return (a * b / (2.0 * eps)) * (
            u / (a * a * math.sqrt(a * a + b * b * u * u)) + 1.0 / (a * a)
        )


@dataclass(frozen=True)
class RuntimeReport:
    """Minimal runtime and the distances that determine it.

    Satisfies T·ε = tan(angle), and T·ε = trace_distance_form/fidelity
    for pure inputs.
    """

    T: float
    fidelity: float
    angle: float
    epsilon: float
    trace_distance_form: float

    def to_dict(self) -> dict:
        return {
            "T": self.T,
            "fidelity": self.fidelity,
            "angle": self.angle,
            "epsilon": self.epsilon,
            "trace_distance_form": self.trace_distance_form,
        }


@dataclass(frozen=True)
class AdiabaticityReport:
    """Largest signed violation of the instantaneous adiabaticity
    condition over the sampled grid, and where it occurred."""

    max_violation: float
    t_at_max: float
    s_at_max: float


def runtime_from_fidelity(
    fidelity: float, epsilon: float, trace_distance_form: float | None = None
) -> RuntimeReport:
    """Runtime report for a given fidelity: T = (1/ε)·√(1−F²)/F.

    Fidelities within 1e-12 of 1 yield T = 0 exactly; fidelities at or
    below 1e-12 raise ``OrthogonalStates`` (infinite running time).
    """
    _check_epsilon(epsilon)
    if not 0.0 <= fidelity <= 1.0:
        raise ValueError(f"fidelity must be in [0, 1], got {fidelity}")
    if fidelity <= ORTHO_TOL:
        raise OrthogonalStates("orthogonal states: infinite running time")
    if fidelity >= 1.0 - IDENT_TOL:
        d = 0.0 if trace_distance_form is None else trace_distance_form
        return RuntimeReport(0.0, 1.0, 0.0, epsilon, d)
    b = math.sqrt(1.0 - fidelity * fidelity)
    d = b if trace_distance_form is None else trace_distance_form
    return RuntimeReport(
        T=b / (fidelity * epsilon),
        fidelity=fidelity,
        angle=math.acos(fidelity),
        epsilon=epsilon,
        trace_distance_form=d,
    )


def runtime_pure(alpha: PureState, beta: PureState, epsilon: float) -> RuntimeReport:
    """Minimal runtime between two pure states at precision ε."""
    return runtime_from_fidelity(fidelity_pure(alpha, beta), epsilon)


def runtime_mixed(rho: DensityMatrix, sigma: DensityMatrix, epsilon: float) -> RuntimeReport:
    """Minimal runtime between two mixed states at precision ε.

    Evaluates the same relation on the mixed-state fidelity; the
    ``trace_distance_form`` field carries the actual trace distance of
    the pair (which equals ε·T·F only for pure inputs).
    """
    return runtime_from_fidelity(
        fidelity_mixed(rho, sigma), epsilon, trace_distance_form=trace_distance(rho, sigma)
    )


def runtime_mixed_by_purification(
    rho: DensityMatrix,
    sigma: DensityMatrix,
    epsilon: float,
    budget: int,
    seed=None,
) -> float:
    """Minimum pure-state runtime over sampled purification pairs.

    Holds the canonical purification of ρ fixed and rotates the ancilla
    of σ's canonical purification by ``budget`` unitaries (identity
    first, then Haar draws).  Minimizing T is the same as maximizing the
    purification overlap, since tan∘arccos is strictly decreasing, so
    the result never undercuts ``runtime_mixed`` and converges to it as
    the budget grows.
    """
    from scipy.stats import unitary_group

    _check_epsilon(epsilon)
    if budget < 1:
        raise ValueError("budget must be >= 1")
    if rho.dim != sigma.dim:
        raise DimensionMismatch(f"dimension mismatch: {rho.dim} vs {sigma.dim}")
    m = _canonical_frame(rho).conj().T @ _canonical_frame(sigma)
    best = abs(np.trace(m))
    rng = np.random.default_rng(seed)
    for _ in range(budget - 1):
        u = unitary_group.rvs(rho.dim, random_state=rng)
        best = max(best, abs(np.sum(m * u)))
    return runtime_from_fidelity(min(best, 1.0), epsilon).T


def local_schedule(a: float, epsilon: float) -> Schedule:
    """The locally adiabatic schedule for overlap a at precision ε.

    Total runtime is √(1−a²)/(ε·a), and s(t) is the closed-form
    inverse of the antiderivative

        t(s) = (ab/2ε)·( u/(a²√(a² + b²u²)) + 1/a² ),  u = 2s−1,

    verified against direct numerical integration of the defining speed
    law in the test suite.
    """
    _check_epsilon(epsilon)
    if a <= ORTHO_TOL:
        raise OrthogonalStates("orthogonal states: no finite schedule exists")
    if a >= 1.0 - IDENT_TOL:
        raise IdenticalStates("identical states: nothing to schedule")
    b = math.sqrt(1.0 - a * a)
    return Schedule(kind="local", T=b / (epsilon * a), a=float(a), epsilon=float(epsilon))


def linear_schedule(T: float) -> Schedule:
    """The global linear schedule s(t) = t/T."""
    if not T > 0.0:
        raise ValueError("total runtime T must be positive")
    return Schedule(kind="linear", T=float(T))


def check_adiabaticity(
    problem: AdiabaticProblem, schedule: Schedule, epsilon: float, grid_points: int
) -> AdiabaticityReport:
    """Evaluate the instantaneous adiabaticity condition along a schedule.

    On a uniform time grid, computes the signed violation

        v(t) = |ds/dt|·a√(1−a²)/g(s) − ε·g(s)²

    and reports its maximum and location.  Schedules from
    ``local_schedule`` saturate the condition, so their maximum
    violation is zero up to roundoff.
    """
    _check_epsilon(epsilon)
    if grid_points < 2:
        raise ValueError("grid_points must be >= 2")
    a = problem.a
    worst = -math.inf
    t_at = s_at = 0.0
    for t in np.linspace(0.0, schedule.T, grid_points):
        s = schedule.s(t)
        g = gap_value(a, s)
        v = transition_matrix_element(a, s, schedule.rate(t)) - epsilon * g * g
        if v > worst:
            worst, t_at, s_at = v, float(t), float(s)
    return AdiabaticityReport(max_violation=worst, t_at_max=t_at, s_at_max=s_at)


def sample_schedule(
    schedule: Schedule, a: float | None = None, n: int = 101
) -> list[tuple[float, float, float, float]]:
    """Uniform-in-time samples (t, s, gap, ds/dt) along a schedule.

    ``a`` defaults to the schedule's own overlap for local schedules and
    must be supplied for linear ones (the gap column needs it).
    """
    if a is None:
        a = schedule.a
    if a is None:
        raise ValueError("sampling a linear schedule requires the overlap a")
    if n < 2:
        raise ValueError("need at least two samples")
    rows = []
    for t in np.linspace(0.0, schedule.T, n):
        s = schedule.s(t)
        rows.append((float(t), s, gap_value(a, s), schedule.rate(t)))
    return rows
