"""Reference optimizers: global-best PSO and DE/rand/1/bin.

Both share the core RNG contract and the RunResult shape so runs can be
compared against the molecular optimizer seed-for-seed.  Draw order is part
of each algorithm's replay contract:

* PSO: Np*n position uniforms at init (velocities start at zero); per
  iteration one (Np, n) uniform block for the personal-best pull, then one
  for the global-best pull, then Np evaluations in index order.
* DE: Np*n position uniforms at init; per generation the three distinct
  partner indices per member (member-major), then Np forced-dimension
  integers, then an (Np, n) crossover block, then Np trial evaluations in
  index order.

Both clamp positions to the box, never clamp velocities, and evaluate
Np*(gen+1) times per run (initial sweep plus one sweep per iteration).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    BestRecord,
    ConfigurationError,
    ObjectiveSpec,
    RandomStream,
    clamp_to_bounds,
    evaluate,
)
from .sms import RunResult

__all__ = ["PsoParams", "DeParams", "run_pso", "run_de"]


@dataclass(frozen=True)
class PsoParams:
    """Swarm settings: both pulls at 2.0, inertia fading 0.9 -> 0.2."""

    np_count: int = 50
    gen: int = 1000
    c1: float = 2.0
    c2: float = 2.0
    w_start: float = 0.9
    w_end: float = 0.2

    def __post_init__(self):
        if self.np_count < 2:
            raise ConfigurationError("PSO needs at least 2 particles")
        if self.gen < 1:
            raise ConfigurationError("gen must be >= 1")
        if self.c1 <= 0 or self.c2 <= 0:
            raise ConfigurationError("c1 and c2 must be positive")
        if self.w_start < self.w_end:
            raise ConfigurationError("inertia must not increase over time")


@dataclass(frozen=True)
class DeParams:
    """Differential-evolution settings for the rand/1/bin scheme."""

    np_count: int = 50
    gen: int = 1000
    cr: float = 0.9
    f_weight: float = 0.8
    scheme: str = "rand/1/bin"

    def __post_init__(self):
        if self.np_count < 4:
            raise ConfigurationError(
                "rand/1 mutation needs at least 4 members (three distinct partners)"
            )
        if self.gen < 1:
            raise ConfigurationError("gen must be >= 1")
        if not 0.0 <= self.cr <= 1.0:
            raise ConfigurationError("cr must lie in [0, 1]")
        if self.f_weight <= 0:
            raise ConfigurationError("f_weight must be positive")
        if self.scheme != "rand/1/bin":
            raise ConfigurationError(f"unsupported scheme: {self.scheme!r}")


def _inertia(params: PsoParams, k: int) -> float:
    if params.gen == 1:
        return params.w_start
    return params.w_start - (params.w_start - params.w_end) * (k - 1) / (params.gen - 1)


def run_pso(spec: ObjectiveSpec, params: PsoParams, seed: int) -> RunResult:
    """Minimize ``spec`` with a canonical global-best particle swarm."""
    bounds = spec.bounds
    n = bounds.n
    np_count, gen = params.np_count, params.gen
    rng = RandomStream(seed)

    pos = bounds.low + bounds.span * rng.uniform((np_count, n))
    vel = np.zeros((np_count, n))
    vals = np.array([evaluate(spec, x, rng) for x in pos])

    pbest = pos.copy()
    pbest_v = vals.copy()
    g = int(np.argmin(pbest_v))
    best = BestRecord(position=pbest[g].copy(), value=float(pbest_v[g]))

    trace = np.empty(gen)
    for k in range(1, gen + 1):
        w = _inertia(params, k)
        r1 = rng.uniform((np_count, n))
        r2 = rng.uniform((np_count, n))
        vel = (
            w * vel
            + params.c1 * r1 * (pbest - pos)
            + params.c2 * r2 * (best.position[None, :] - pos)
        )
        pos = clamp_to_bounds(pos + vel, bounds)
        vals = np.array([evaluate(spec, x, rng) for x in pos])

        improved = vals < pbest_v
        pbest[improved] = pos[improved]
        pbest_v[improved] = vals[improved]
        g = int(np.argmin(pbest_v))
        if pbest_v[g] < best.value:
            best = BestRecord(position=pbest[g].copy(), value=float(pbest_v[g]))
        trace[k - 1] = best.value

    return RunResult(
        best=best, trace=trace, evaluations=np_count * (gen + 1), seed=int(seed)
    )


def run_de(spec: ObjectiveSpec, params: DeParams, seed: int) -> RunResult:
    """Minimize ``spec`` with DE/rand/1/bin (synchronous selection)."""
    bounds = spec.bounds
    n = bounds.n
    np_count, gen = params.np_count, params.gen
    rng = RandomStream(seed)

    pos = bounds.low + bounds.span * rng.uniform((np_count, n))
    vals = np.array([evaluate(spec, x, rng) for x in pos])
    g = int(np.argmin(vals))
    best = BestRecord(position=pos[g].copy(), value=float(vals[g]))

    trace = np.empty(gen)
    for k in range(1, gen + 1):
        partners = np.array(
            [rng.choice_distinct(np_count, 3, exclude=i) for i in range(np_count)]
        )
        mutant = pos[partners[:, 0]] + params.f_weight * (
            pos[partners[:, 1]] - pos[partners[:, 2]]
        )
        j_rand = np.array([rng.integer(n) for _ in range(np_count)])
        cross = rng.uniform((np_count, n)) < params.cr
        cross[np.arange(np_count), j_rand] = True
        trial = clamp_to_bounds(np.where(cross, mutant, pos), bounds)

        trial_v = np.array([evaluate(spec, x, rng) for x in trial])
        keep = trial_v <= vals
        pos[keep] = trial[keep]
        vals[keep] = trial_v[keep]

        g = int(np.argmin(vals))
        if vals[g] < best.value:
            best = BestRecord(position=pos[g].copy(), value=float(vals[g]))
        trace[k - 1] = best.value

    return RunResult(
        best=best, trace=trace, evaluations=np_count * (gen + 1), seed=int(seed)
    )
