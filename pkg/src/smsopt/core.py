"""Shared building blocks: bounds, populations, objectives, and the RNG contract.

Every optimizer in this package works on box-bounded continuous problems and
follows one reproducibility rule: a run is a pure function of (objective
instance, run seed, parameters). All randomness flows through a single
``RandomStream`` per run with a documented draw order, so repeating a run
yields bit-identical results.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

__all__ = [
    "Bounds",
    "Population",
    "BestRecord",
    "ObjectiveSpec",
    "RandomStream",
    "ConfigurationError",
    "DimensionError",
    "init_population",
    "clamp_to_bounds",
    "evaluate",
]


class ConfigurationError(ValueError):
    """Invalid parameter or bounds configuration, raised before any run starts."""


class DimensionError(ValueError):
    """Vector length does not match the problem dimension."""


class RandomStream:
    """Seedable uniform/normal source wrapping numpy's PCG64 generator.

    Two streams built from the same seed produce identical sequences. All
    draws made by optimizers and noisy objectives go through one stream per
    run, which makes the draw order part of each algorithm's contract.
    """

    def __init__(self, seed: int):
        self.seed = int(seed)
        self._gen = np.random.default_rng(self.seed)

    def uniform(self, size=None) -> np.ndarray | float:
        """Uniform draws in [0, 1)."""
        return self._gen.random(size)

    def standard_normal(self, size=None) -> np.ndarray | float:
        return self._gen.standard_normal(size)

    def integer(self, upper: int) -> int:
        """One integer uniform in [0, upper)."""
        return int(self._gen.integers(upper))

    def choice_distinct(self, upper: int, count: int, exclude: int) -> np.ndarray:
        """``count`` distinct integers from [0, upper) avoiding ``exclude``."""
        pool = np.delete(np.arange(upper), exclude)
        return self._gen.choice(pool, size=count, replace=False)


@dataclass(frozen=True)
class Bounds:
    """Axis-aligned box: low[j] < high[j] for every dimension j."""

    low: np.ndarray
    high: np.ndarray

    def __post_init__(self):
        low = np.asarray(self.low, dtype=float)
        high = np.asarray(self.high, dtype=float)
        object.__setattr__(self, "low", low)
        object.__setattr__(self, "high", high)
        if low.ndim != 1 or low.shape != high.shape or low.size < 1:
            raise ConfigurationError("bounds must be two equal-length vectors")
        if not (np.all(np.isfinite(low)) and np.all(np.isfinite(high))):
            raise ConfigurationError("bounds must be finite")
        if not np.all(low < high):
            raise ConfigurationError("every low bound must be strictly below high")

    @property
    def n(self) -> int:
        return self.low.size

    @property
    def span(self) -> np.ndarray:
        return self.high - self.low

    @property
    def mean_width(self) -> float:
        """Average box width across dimensions, the scale used by collision radii."""
        return float(np.mean(self.span))

    @classmethod
    def cube(cls, low: float, high: float, n: int) -> "Bounds":
        return cls(np.full(n, float(low)), np.full(n, float(high)))


@dataclass
class Population:
    """Positions and per-molecule direction vectors, one row per molecule."""

    positions: np.ndarray  # (Np, n)
    directions: np.ndarray  # (Np, n)

    @property
    def size(self) -> int:
        return self.positions.shape[0]

    @property
    def n(self) -> int:
        return self.positions.shape[1]


@dataclass
class BestRecord:
    """Best position seen so far in a run; value never increases."""

    position: np.ndarray
    value: float


@dataclass
class ObjectiveSpec:
    """A box-bounded objective with optional known optimum metadata.

    ``fn`` maps (x, rng) to a float; deterministic objectives ignore the rng
    argument, noisy ones consume draws from it. ``eval_count`` increments by
    exactly one per evaluation.
    """

    id: str
    bounds: Bounds
    fn: Callable[[np.ndarray, RandomStream], float]
    f_opt: Optional[float] = None
    x_opt: Optional[np.ndarray] = None
    eval_count: int = field(default=0, compare=False)

    @property
    def n(self) -> int:
        return self.bounds.n


def init_population(bounds: Bounds, np_count: int, rng: RandomStream) -> Population:
    """Uniform positions in the box and directions uniform in [-1, 1].

    Draw order: Np*n position uniforms first, then Np*n direction uniforms,
    molecule-major and dimension-minor, so replays are bit-exact.
    """
    if np_count < 2:
        raise ConfigurationError("population needs at least 2 molecules")
    n = bounds.n
    u_pos = rng.uniform((np_count, n))
    u_dir = rng.uniform((np_count, n))
    positions = bounds.low + u_pos * bounds.span
    directions = -1.0 + 2.0 * u_dir
    return Population(positions=positions, directions=directions)


def clamp_to_bounds(x: np.ndarray, bounds: Bounds) -> np.ndarray:
    """Clip to the box, the uniform out-of-bounds rule for every optimizer here."""
    if x.shape[-1] != bounds.n:
        raise DimensionError(f"expected dimension {bounds.n}, got {x.shape[-1]}")
    return np.clip(x, bounds.low, bounds.high)


def evaluate(spec: ObjectiveSpec, x: np.ndarray, rng: RandomStream) -> float:
    """Evaluate one position, incrementing the spec's evaluation counter."""
    if x.shape != (spec.n,):
        raise DimensionError(f"expected dimension {spec.n}, got {x.shape}")
    spec.eval_count += 1
    return float(spec.fn(x, rng))
