"""Worked instances: Grover search pairs and Deutsch–Jozsa pairs.

Both families are fully specified by their state-pair geometry: Grover
instances have fidelity 1/√N, Deutsch–Jozsa instances have fidelity
1/√N on the constant branch and √(1−1/N) on the balanced branch.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotPromised
from .schedule import RuntimeReport, runtime_pure
from .states import PureState

__all__ = [
    "BooleanFunctionSpec",
    "grover_instance",
    "deutsch_jozsa_instance",
    "predicted_runtime",
]

CONSTANT = "constant"
BALANCED = "balanced"


@dataclass(frozen=True, eq=False)
class BooleanFunctionSpec:
    """A promised boolean function f: {0,1}ⁿ → {0,1} as a truth table.

    The table must be constant (all outputs equal) or balanced (exactly
    half ones); anything else violates the promise and is rejected.
    """

    n: int
    truth_table: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise NotPromised("need at least one input bit")
        table = tuple(int(b) for b in self.truth_table)
        if len(table) != 2**self.n:
            raise NotPromised(
                f"truth table must have length 2^{self.n} = {2**self.n}, got {len(table)}"
            )
        if any(b not in (0, 1) for b in table):
            raise NotPromised("truth table entries must be bits")
        ones = sum(table)
        if ones not in (0, len(table), len(table) // 2):
            raise NotPromised("function is neither constant nor balanced")
        object.__setattr__(self, "truth_table", table)

    @classmethod
    def from_string(cls, bits: str) -> "BooleanFunctionSpec":
        """Parse a truth table given as a bit string such as "0011"."""
        if not bits or any(ch not in "01" for ch in bits):
            raise NotPromised(f"truth table string must be bits, got {bits!r}")
        n = (len(bits) - 1).bit_length() if len(bits) > 1 else 1
        if 2**n != len(bits):
            raise NotPromised(f"bit string length {len(bits)} is not a power of two")
        return cls(n=n, truth_table=tuple(int(ch) for ch in bits))

    @property
    def size(self) -> int:
        """N = 2ⁿ, the input-space size."""
        return 2**self.n

    @property
    def classification(self) -> str:
        ones = sum(self.truth_table)
        return CONSTANT if ones in (0, self.size) else BALANCED


def grover_instance(N: int, m: int) -> tuple[PureState, PureState]:
    """Search pair: uniform |α⟩ over N items and marked ket |β⟩ = |m⟩.

    ``m`` is 1-based; the returned states use 0-based internal indexing.
    Their fidelity is exactly 1/√N.
    """
    if N < 2:
        raise ValueError("database size N must be >= 2")
    if not 1 <= m <= N:
        raise ValueError(f"marked index m={m} out of range 1..{N}")
    return PureState.uniform(N), PureState.basis(N, m - 1)


def deutsch_jozsa_instance(
    f: BooleanFunctionSpec,
) -> tuple[PureState, PureState, str]:
    """State pair and classification for a promised boolean function.

    |α⟩ is uniform over N = 2ⁿ; |β⟩ = μ|0⟩ + (ν/√(N−1))·Σ_{i≥1}|i⟩ with
    μ = |Σ_x (−1)^{f(x)}|/N and ν = 1−μ.  Under the promise μ and ν are
    bits, so |β⟩ is a unit vector.
    """
    N = f.size
    mu = abs(sum((-1) ** b for b in f.truth_table)) / N
    nu = 1.0 - mu
    beta = np.zeros(N, dtype=complex)
    beta[0] = mu
    beta[1:] = nu / np.sqrt(N - 1)
    norm_sq = float(np.sum(np.abs(beta) ** 2))
    if abs(norm_sq - 1.0) > 1e-12:
        raise NotPromised(
            f"target state is not normalized (|β|² = {norm_sq!r}): promise violated"
        )
    return PureState.uniform(N), PureState(beta), f.classification


def predicted_runtime(
    instance_states: tuple[PureState, PureState], epsilon: float
) -> RuntimeReport:
    """Minimal runtime predicted for an instance's state pair."""
    alpha, beta = instance_states
    return runtime_pure(alpha, beta, epsilon)
