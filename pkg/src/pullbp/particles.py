"""Weighted particle sets and the resampling primitives shared by the
pull engine and the Gaussian-mixture baseline."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

NORM_TOL = 1e-9


class DegenerateWeightsError(ValueError):
    """Raised when every particle weight is zero; the set carries no mass."""


@dataclass
class ParticleSet:
    """A set of weighted state vectors.

    states has shape (n, dim), weights shape (n,). Weights are kept in
    linear space; they must be nonnegative and finite.
    """

    states: np.ndarray
    weights: np.ndarray

    def __post_init__(self) -> None:
        self.states = np.atleast_2d(np.asarray(self.states, dtype=float))
        self.weights = np.asarray(self.weights, dtype=float).ravel()
        if self.states.shape[0] != self.weights.shape[0]:
            raise ValueError(
                f"{self.states.shape[0]} states but {self.weights.shape[0]} weights"
            )
        if not np.all(np.isfinite(self.states)):
            raise ValueError("non-finite state entries")
        if not np.all(np.isfinite(self.weights)) or np.any(self.weights < 0):
            raise ValueError("weights must be finite and nonnegative")

    def __len__(self) -> int:
        return self.states.shape[0]

    @property
    def dim(self) -> int:
        return self.states.shape[1]

    @property
    def is_normalized(self) -> bool:
        return abs(float(self.weights.sum()) - 1.0) <= NORM_TOL


def uniform_set(states: np.ndarray) -> ParticleSet:
    """Wrap raw states with uniform, normalized weights."""
    states = np.atleast_2d(np.asarray(states, dtype=float))
    n = states.shape[0]
    if n == 0:
        raise ValueError("empty state array")
    return ParticleSet(states, np.full(n, 1.0 / n))


def normalize_weights(particles: ParticleSet) -> ParticleSet:
    """Rescale weights to sum to one, preserving particle order and ratios.

    Already-normalized sets are returned unchanged, which makes the
    operation bit-for-bit idempotent after the first pass.
    """
    total = float(particles.weights.sum())
    if total <= 0.0:
        raise DegenerateWeightsError("all particle weights are zero")
    if abs(total - 1.0) <= NORM_TOL:
        return particles
    return ParticleSet(particles.states, particles.weights / total)


def systematic_resample(
    particles: ParticleSet, count: int, rng: np.random.Generator
) -> np.ndarray:
    """Systematic (single-offset stratified) resampling.

    Returns `count` states drawn with expected multiplicity count * w_i.
    The output carries implicit uniform weights. Lower variance than
    multinomial resampling and O(count) time.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if not particles.is_normalized:
        raise ValueError("systematic_resample requires normalized weights")
    positions = (np.arange(count) + rng.random()) / count
    cumulative = np.cumsum(particles.weights)
    cumulative[-1] = 1.0  # guard against accumulated round-off
    indices = np.searchsorted(cumulative, positions, side="right")
    indices = np.minimum(indices, len(particles) - 1)
    return particles.states[indices].copy()


def max_weight_particle(particles: ParticleSet) -> np.ndarray:
    """The highest-weight state vector; ties break toward the lowest index."""
    if len(particles) == 0:
        raise ValueError("empty particle set")
    if not particles.is_normalized:
        raise ValueError("max_weight_particle requires normalized weights")
    return particles.states[int(np.argmax(particles.weights))].copy()


def effective_sample_size(particles: ParticleSet) -> float:
    """1 / sum(w_i^2); ranges from 1 (collapsed) to n (uniform)."""
    if not particles.is_normalized:
        raise ValueError("effective_sample_size requires normalized weights")
    return float(1.0 / np.sum(particles.weights**2))
