"""Time-dependent Schrödinger integration under H(s(t)).

The propagator is pieced together from exponentials of the Hamiltonian
frozen at step midpoints (ħ = 1), so every step is unitary to machine
precision.  Steps are bounded both in time and in schedule progress
(|Δs| ≤ 0.01 per step) so the Hamiltonian is well resolved wherever the
schedule moves fast.  ``evolve`` integrates the dense Hamiltonian;
``evolve_effective`` integrates only the 2×2 block on span{|α⟩, |β⟩},
which the dynamics never leaves, and therefore works for instances of
arbitrary dimension parameterized by the overlap alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import StepTooLarge
from .hamiltonian import (
    AdiabaticProblem,
    effective_eigenvectors,
    hamiltonian_effective,
    hamiltonian_full,
)
from .schedule import Schedule, local_schedule
from .states import PureState

__all__ = [
    "IntegratorConfig",
    "EvolutionResult",
    "SweepPoint",
    "evolve",
    "evolve_effective",
    "error_scaling_sweep",
]

DS_MAX = 0.01  # max schedule progress per propagator step


@dataclass(frozen=True)
class IntegratorConfig:
    """Step-size bound, trajectory sampling count and unitarity tolerance."""

    max_step: float = 0.02
    samples: int = 65
    renorm_tolerance: float = 1e-9

    def __post_init__(self):
        if not self.max_step > 0.0:
            raise ValueError("max_step must be positive")
        if self.samples < 2:
            raise ValueError("samples must be >= 2")
        if not 0.0 < self.renorm_tolerance <= 1e-6:
            raise ValueError("renorm_tolerance must be in (0, 1e-6]")


@dataclass(frozen=True, eq=False)
class EvolutionResult:
    """Final state, success probability and integration diagnostics.

    ``trajectory`` holds (t, s, |⟨ground(s)|ψ(t)⟩|²) samples;
    ``unitarity_defect`` is the largest |‖ψ‖ − 1| seen before the
    per-step renormalization.
    """

    final_state: PureState
    success_probability: float
    trajectory: tuple[tuple[float, float, float], ...]
    unitarity_defect: float


class SweepPoint(NamedTuple):
    epsilon: float
    T: float
    infidelity: float


def _substeps(schedule: Schedule, t0: float, t1: float, max_step: float) -> list[float]:
    """Deterministic step boundaries covering (t0, t1].

    Greedy: each step takes the largest h ≤ max_step (halving as needed)
    that keeps the schedule progress |Δs| within DS_MAX, so regions
    where s moves fast get proportionally finer time steps.
    """
    bounds = []
    t = t0
    while t < t1 - 1e-13 * max(1.0, t1):
        h = min(max_step, t1 - t)
        s_here = schedule.s(t)
        while h > 1e-13 and abs(schedule.s(t + h) - s_here) > DS_MAX:
            h *= 0.5
        t = t1 if t + h >= t1 - 1e-13 * max(1.0, t1) else t + h
        bounds.append(t)
    if not bounds:
        bounds.append(t1)
    return bounds


def _sample_times(schedule: Schedule, config: IntegratorConfig) -> np.ndarray:
    return np.linspace(0.0, schedule.T, config.samples)


def _check_consistent(problem: AdiabaticProblem, schedule: Schedule) -> None:
    if schedule.kind == "local" and abs(schedule.a - problem.a) > 1e-9:
        raise ValueError(
            f"local schedule built for a={schedule.a} but problem has a={problem.a}"
        )


def _ground_overlap_sq(problem: AdiabaticProblem, s: float, coords: np.ndarray) -> float:
    """|⟨E0(s)|ψ⟩|² from ψ's coordinates along (|1⟩, |2⟩)."""
    ground = effective_eigenvectors(problem, s)[:, 0]
    return float(abs(np.vdot(ground, coords)) ** 2)


def _expm2_apply(
    p: float, q: complex, r: float, dt: float, z1: complex, z2: complex
) -> tuple[complex, complex]:
    """exp(−i·dt·H)·ψ for Hermitian H = [[p, q], [q*, r]], in closed form.

    Scalar arithmetic: the effective propagation takes up to millions of
    2×2 steps for small overlaps and array overhead would dominate.
    """
    mu = 0.5 * (p + r)
    om = math.sqrt((0.5 * (p - r)) ** 2 + (q.real * q.real + q.imag * q.imag))
    if om == 0.0:
        w1, w2 = z1, z2
    else:
        c = math.cos(dt * om)
        k = -1j * math.sin(dt * om) / om
        w1 = c * z1 + k * ((p - mu) * z1 + q * z2)
        w2 = c * z2 + k * (q.conjugate() * z1 + (r - mu) * z2)
    phase = complex(math.cos(dt * mu), -math.sin(dt * mu))
    return phase * w1, phase * w2


def evolve(
    problem: AdiabaticProblem, schedule: Schedule, config: IntegratorConfig | None = None
) -> EvolutionResult:
    """Propagate |ψ(0)⟩ = |α⟩ to t = T under H(s(t)) on the full space.

    The success probability is measured against |β⟩, the ground state of
    the final Hamiltonian.  Raises ``StepTooLarge`` if any step's
    unitarity defect exceeds the configured tolerance.
    """
    config = config or IntegratorConfig()
    _check_consistent(problem, schedule)
    alpha = problem.alpha.amplitudes
    basis2 = problem.basis2.amplitudes
    psi = alpha.astype(complex)
    defect = 0.0
    trajectory = []

    def record(t: float) -> None:
        s = schedule.s(t)
        coords = np.array([np.vdot(alpha, psi), np.vdot(basis2, psi)])
        trajectory.append((float(t), s, _ground_overlap_sq(problem, s, coords)))

    times = _sample_times(schedule, config)
    record(times[0])
    for ta, tb in zip(times[:-1], times[1:]):
        t = ta
        for t_next in _substeps(schedule, ta, tb, config.max_step):
            dt = t_next - t
            s_mid = schedule.s(t + 0.5 * dt)
            w, v = np.linalg.eigh(hamiltonian_full(problem, s_mid))
            psi = v @ (np.exp(-1j * w * dt) * (v.conj().T @ psi))
            nrm = float(np.linalg.norm(psi))
            defect = max(defect, abs(nrm - 1.0))
            if defect > config.renorm_tolerance:
                raise StepTooLarge(
                    f"unitarity defect {defect:.3e} exceeds tolerance "
                    f"{config.renorm_tolerance:.3e}"
                )
            psi = psi / nrm
            t = t_next
        record(tb)

    final = PureState(psi)
    success = float(abs(np.vdot(problem.beta.amplitudes, psi)) ** 2)
    return EvolutionResult(
        final_state=final,
        success_probability=min(success, 1.0),
        trajectory=tuple(trajectory),
        unitarity_defect=defect,
    )


def evolve_effective(
    problem: AdiabaticProblem, schedule: Schedule, config: IntegratorConfig | None = None
) -> EvolutionResult:
    """Propagate the dynamics inside the invariant span{|α⟩, |β⟩} only.

    Works on the 2×2 block in the {|1⟩, |2⟩} basis with the same step
    rule as ``evolve``; the two agree up to roundoff.  ``final_state``
    holds the two subspace coordinates.
    """
    config = config or IntegratorConfig()
    _check_consistent(problem, schedule)
    z1, z2 = complex(1.0), complex(0.0)
    a_sq = problem.a**2
    c = problem.c
    w = problem.overlap
    defect = 0.0
    trajectory = []

    def record(t: float) -> None:
        s = schedule.s(t)
        coords = np.array([z1, z2])
        trajectory.append((float(t), s, _ground_overlap_sq(problem, s, coords)))

    times = _sample_times(schedule, config)
    record(times[0])
    for ta, tb in zip(times[:-1], times[1:]):
        t = ta
        for t_next in _substeps(schedule, ta, tb, config.max_step):
            dt = t_next - t
            s = schedule.s(t + 0.5 * dt)
            z1, z2 = _expm2_apply(s - s * a_sq, -s * c * w, 1.0 - s * c * c, dt, z1, z2)
            nrm = math.sqrt(abs(z1) ** 2 + abs(z2) ** 2)
            defect = max(defect, abs(nrm - 1.0))
            if defect > config.renorm_tolerance:
                raise StepTooLarge(
                    f"unitarity defect {defect:.3e} exceeds tolerance "
                    f"{config.renorm_tolerance:.3e}"
                )
            z1, z2 = z1 / nrm, z2 / nrm
            t = t_next
        record(tb)

    success = abs(w.conjugate() * z1 + c * z2) ** 2
    return EvolutionResult(
        final_state=PureState(np.array([z1, z2])),
        success_probability=min(float(success), 1.0),
        trajectory=tuple(trajectory),
        unitarity_defect=defect,
    )


def error_scaling_sweep(
    problem: AdiabaticProblem,
    epsilons: list[float],
    config: IntegratorConfig | None = None,
    effective: bool = False,
) -> list[SweepPoint]:
    """Infidelity 1 − P of the local schedule for each precision ε.

    Rows come back sorted by ε descending, so the infidelity column
    displays the ε² improvement trend directly.
    """
    if not epsilons:
        raise ValueError("epsilons must be non-empty")
    run = evolve_effective if effective else evolve
    rows = []
    for eps in sorted(epsilons, reverse=True):
        sched = local_schedule(problem.a, eps)
        result = run(problem, sched, config)
        rows.append(SweepPoint(float(eps), sched.T, 1.0 - result.success_probability))
    return rows
