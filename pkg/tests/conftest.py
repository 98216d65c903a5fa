"""Shared helpers for building random test states."""

import numpy as np

from adialab.states import PureState


def random_unit(dim, rng):
    vec = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return vec / np.linalg.norm(vec)


def pair_with_overlap(a, dim, rng, complex_phase=True):
    """A random pure pair (α, β) with |⟨α|β⟩| = a exactly (up to roundoff)."""
    alpha = random_unit(dim, rng)
    v = random_unit(dim, rng)
    v -= alpha * np.vdot(alpha, v)
    v /= np.linalg.norm(v)
    phase = np.exp(2j * np.pi * rng.random()) if complex_phase else 1.0
    beta = a * phase * alpha + np.sqrt(1.0 - a * a) * v
    return PureState(alpha), PureState.from_unnormalized(beta)


def random_pair(dim, rng):
    """Two independent Haar-random pure states."""
    return PureState(random_unit(dim, rng)), PureState(random_unit(dim, rng))
