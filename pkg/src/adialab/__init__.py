"""adialab: a numerical laboratory for local adiabatic quantum evolution.

Builds interpolated projector Hamiltonians between an initial and a
final state, derives their exact spectrum, constructs the optimal local
schedule, simulates the Schrödinger dynamics, and verifies that the
minimal runtime at precision ε equals (1/ε)·tan(arccos F) for pure and
mixed state pairs.
"""

from .applications import (
    BooleanFunctionSpec,
    deutsch_jozsa_instance,
    grover_instance,
    predicted_runtime,
)
from .errors import (
    AdialabError,
    AncillaTooSmall,
    DimensionMismatch,
    IdenticalStates,
    InvalidEpsilon,
    InvalidState,
    NotPromised,
    OrthogonalStates,
    StepTooLarge,
)
from .evolution import (
    EvolutionResult,
    IntegratorConfig,
    error_scaling_sweep,
    evolve,
    evolve_effective,
)
from .hamiltonian import (
    AdiabaticProblem,
    SpectrumPoint,
    build_problem,
    hamiltonian_effective,
    hamiltonian_full,
    matrix_element,
    min_gap,
    problem_from_overlap,
    spectrum,
)
from .schedule import (
    RuntimeReport,
    Schedule,
    check_adiabaticity,
    linear_schedule,
    local_schedule,
    runtime_from_fidelity,
    runtime_mixed,
    runtime_mixed_by_purification,
    runtime_pure,
)
from .states import (
    DensityMatrix,
    Purification,
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

__version__ = "0.1.0"
