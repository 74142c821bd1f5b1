"""States of Matter Search: a three-phase population optimizer.

Molecules move under attraction toward the best position found so far, with
per-state thermal parameters controlling step energy, collision mixing, and
random restarts. The run is split into a gas phase (wide exploration, frequent
restarts), a liquid phase (tighter steps, occasional restarts), and a solid
phase (pure local refinement). Improvement-gated acceptance plus periodic
re-agitation of direction vectors makes each phase sweep step sizes from its
thermal scale down to machine scale, which is what produces deep convergence
on smooth problems while restarts keep multimodal search alive.

Per-iteration draw order (the reproducibility contract):
  1. direction refresh, when due: Np*n uniforms, scaled to beta*[-1, 1]
  2. step factors: one (Np, n) uniform block, then one (Np, n) block for
     the rho factors
  3. candidate evaluations in molecule index order (noisy objectives
     consume further draws here)
  4. restart check, after collisions: one uniform threshold draw; if it
     fires, one integer index draw, n uniforms for the fresh position, and
     one extra evaluation
Collisions draw nothing. Replaying a seed reproduces a run bit-exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import (
    BestRecord,
    Bounds,
    ConfigurationError,
    ObjectiveSpec,
    Population,
    RandomStream,
    clamp_to_bounds,
    evaluate,
    init_population,
)

__all__ = [
    "StateConfig",
    "PhaseSchedule",
    "SmsParams",
    "IterationCounters",
    "RunResult",
    "GAS",
    "LIQUID",
    "SOLID",
    "compute_v_init",
    "compute_collision_radius",
    "attraction_vector",
    "update_directions",
    "move_candidates",
    "apply_collisions",
    "regenerate_position",
    "update_best",
    "state_for_iteration",
    "sms_iteration",
    "run_sms",
]


@dataclass(frozen=True)
class StateConfig:
    """Thermal parameters of one state of matter.

    rho_lo..rho_hi bound the per-dimension step fraction, beta scales the
    agitation amplitude of refreshed directions, alpha sets the collision
    radius as a fraction of the mean box width, and H is the per-iteration
    probability that one molecule restarts at a uniform random position.
    """

    rho_lo: float
    rho_hi: float
    beta: float
    alpha: float
    H: float

    def __post_init__(self):
        if not (0.0 <= self.rho_lo <= self.rho_hi <= 1.0):
            raise ConfigurationError("need 0 <= rho_lo <= rho_hi <= 1")
        for name in ("beta", "alpha", "H"):
            v = getattr(self, name)
            if not (0.0 <= v <= 1.0):
                raise ConfigurationError(f"{name} must lie in [0, 1]")


GAS = StateConfig(rho_lo=0.8, rho_hi=1.0, beta=0.8, alpha=0.8, H=0.9)
LIQUID = StateConfig(rho_lo=0.3, rho_hi=0.6, beta=0.4, alpha=0.2, H=0.2)
SOLID = StateConfig(rho_lo=0.0, rho_hi=0.1, beta=0.1, alpha=0.0, H=0.0)


@dataclass(frozen=True)
class PhaseSchedule:
    """Fractions of the run spent in each state, plus the per-state configs."""

    gas_frac: float = 0.5
    liquid_frac: float = 0.4
    solid_frac: float = 0.1
    gas_cfg: StateConfig = GAS
    liquid_cfg: StateConfig = LIQUID
    solid_cfg: StateConfig = SOLID

    def __post_init__(self):
        fracs = (self.gas_frac, self.liquid_frac, self.solid_frac)
        if any(f <= 0 for f in fracs) or abs(sum(fracs) - 1.0) > 1e-12:
            raise ConfigurationError("phase fractions must be positive and sum to 1")


@dataclass(frozen=True)
class SmsParams:
    """Run-level knobs. refresh_period re-agitates directions every that many
    iterations inside the liquid and solid states (0 disables); state entry
    always re-agitates."""

    np_count: int = 50
    gen: int = 1000
    schedule: PhaseSchedule = PhaseSchedule()
    refresh_period: int = 25

    def __post_init__(self):
        if self.np_count < 2:
            raise ConfigurationError("np_count must be at least 2")
        if self.gen < 1:
            raise ConfigurationError("gen must be at least 1")
        if self.refresh_period < 0:
            raise ConfigurationError("refresh_period must be non-negative")


@dataclass
class IterationCounters:
    """Operator activity tally, mainly for tests and diagnostics."""

    direction_swaps: int = 0
    regenerations: int = 0
    refreshes: int = 0


@dataclass
class RunResult:
    """Outcome of one optimizer run: historical best, its trace, and accounting."""

    best: BestRecord
    trace: np.ndarray
    evaluations: int
    seed: int
    counters: IterationCounters = field(default_factory=IterationCounters)


def compute_v_init(bounds: Bounds, beta: float) -> float:
    """Classical velocity magnitude: mean box width times beta.

    Kept as the documented physical scale of a state's agitation; the move
    rule itself works in box-normalized units (see move_candidates).
    """
    return bounds.mean_width * beta


def compute_collision_radius(bounds: Bounds, alpha: float) -> float:
    """Collision distance threshold: mean box width times alpha."""
    return bounds.mean_width * alpha


def attraction_vector(
    positions: np.ndarray, best_position: np.ndarray, bounds: Bounds
) -> np.ndarray:
    """Per-molecule pull toward the best position, in box-normalized units.

    The offset is divided by the per-dimension span so one unit of direction
    corresponds to one box width regardless of scale; molecules closer to the
    best feel proportionally smaller pull, which is what contracts the
    population onto improving regions.
    """
    return (best_position[None, :] - positions) / bounds.span[None, :]


def update_directions(
    directions: np.ndarray, attraction: np.ndarray, k: int, gen: int
) -> np.ndarray:
    """Damped momentum update: d <- d * (1 - k/gen) * 0.5 + a."""
    decay = (1.0 - k / gen) * 0.5
    return directions * decay + attraction


def move_candidates(
    positions: np.ndarray,
    directions: np.ndarray,
    cfg: StateConfig,
    bounds: Bounds,
    rng: RandomStream,
) -> np.ndarray:
    """Propose one move per molecule along its direction vector.

    Each dimension steps by d * rand * rho fractions of that dimension's
    span, with rand ~ U(0,1) and rho ~ U(rho_lo, rho_hi) drawn per
    dimension: one (Np, n) block of step factors, then one of rho factors.
    Candidates are clamped to the box.
    """
    np_count, n = positions.shape
    rand = rng.uniform((np_count, n))
    rho = cfg.rho_lo + rng.uniform((np_count, n)) * (cfg.rho_hi - cfg.rho_lo)
    step = directions * rand * rho * bounds.span[None, :]
    return clamp_to_bounds(positions + step, bounds)


def apply_collisions(pop: Population, radius: float) -> int:
    """Swap direction vectors of molecule pairs closer than the radius.

    Pairs (i, q) with i < q are scanned in lexicographic order and swaps
    apply immediately, so one direction can travel through several swaps in
    a single pass. Positions are untouched; the direction multiset is
    preserved. Returns the number of swaps.
    """
    if radius <= 0.0:
        return 0
    d2 = np.sum(
        (pop.positions[:, None, :] - pop.positions[None, :, :]) ** 2, axis=2
    )
    iu, qu = np.triu_indices(pop.size, k=1)
    hits = d2[iu, qu] < radius * radius
    swaps = 0
    for i, q in zip(iu[hits], qu[hits]):
        pop.directions[[i, q]] = pop.directions[[q, i]]
        swaps += 1
    return swaps


def regenerate_position(bounds: Bounds, rng: RandomStream) -> np.ndarray:
    """One fresh uniform position in the box (n draws)."""
    return bounds.low + rng.uniform(bounds.n) * bounds.span


def update_best(
    best: BestRecord | None, positions: np.ndarray, values: np.ndarray
) -> BestRecord:
    """Fold the population minimum into the historical record.

    Strict improvement only; on ties within the population the lowest index
    wins, and an equal-valued challenger keeps the incumbent record.
    """
    i = int(np.argmin(values))
    if best is None or values[i] < best.value:
        return BestRecord(position=positions[i].copy(), value=float(values[i]))
    return best


def state_for_iteration(k: int, gen: int, schedule: PhaseSchedule) -> StateConfig:
    """Map a 1-based iteration index to its state's config.

    Gas for k up to floor(gas_frac * gen), liquid up to
    floor((gas_frac + liquid_frac) * gen), solid for the rest. With the
    default schedule and gen=1000 that is exactly 500/400/100 iterations.
    """
    if not (1 <= k <= gen):
        raise ConfigurationError(f"iteration {k} outside 1..{gen}")
    gas_end = int(np.floor(schedule.gas_frac * gen))
    liquid_end = int(np.floor((schedule.gas_frac + schedule.liquid_frac) * gen))
    if k <= gas_end:
        return schedule.gas_cfg
    if k <= liquid_end:
        return schedule.liquid_cfg
    return schedule.solid_cfg


def _state_index(k: int, gen: int, schedule: PhaseSchedule) -> int:
    gas_end = int(np.floor(schedule.gas_frac * gen))
    liquid_end = int(np.floor((schedule.gas_frac + schedule.liquid_frac) * gen))
    if k <= gas_end:
        return 0
    if k <= liquid_end:
        return 1
    return 2


def sms_iteration(
    pop: Population,
    values: np.ndarray,
    best: BestRecord,
    cfg: StateConfig,
    k: int,
    gen: int,
    spec: ObjectiveSpec,
    rng: RandomStream,
    counters: IterationCounters | None = None,
) -> BestRecord:
    """One full iteration, mutating the population and values in place.

    Order: attraction and direction update, move proposals, one batch of
    Np evaluations, improvement-gated acceptance, record update,
    collisions, then the restart check (one threshold draw; when it fires
    one molecule teleports to a fresh uniform position, evaluated
    immediately and accepted unconditionally). Np evaluations per call,
    plus one more when the restart fires.
    """
    a = attraction_vector(pop.positions, best.position, spec.bounds)
    pop.directions = update_directions(pop.directions, a, k, gen)
    cand = move_candidates(pop.positions, pop.directions, cfg, spec.bounds, rng)

    cand_values = np.array([evaluate(spec, x, rng) for x in cand])
    accept = cand_values < values
    pop.positions[accept] = cand[accept]
    values[accept] = cand_values[accept]

    best = update_best(best, pop.positions, values)

    radius = compute_collision_radius(spec.bounds, cfg.alpha)
    swaps = apply_collisions(pop, radius)
    if counters is not None:
        counters.direction_swaps += swaps

    if rng.uniform() < cfg.H:
        m = rng.integer(pop.size)
        pop.positions[m] = regenerate_position(spec.bounds, rng)
        values[m] = evaluate(spec, pop.positions[m], rng)
        if counters is not None:
            counters.regenerations += 1
        best = update_best(best, pop.positions, values)
    return best


def run_sms(spec: ObjectiveSpec, params: SmsParams, seed: int) -> RunResult:
    """Run the full three-phase search.

    Evaluations total Np*(gen+1) plus one per restart (so about 1% over
    the nominal budget at the default schedule).
    """
    rng = RandomStream(seed)
    counters = IterationCounters()
    pop = init_population(spec.bounds, params.np_count, rng)
    values = np.array([evaluate(spec, x, rng) for x in pop.positions])
    best = update_best(None, pop.positions, values)

    trace = np.empty(params.gen)
    prev_state = 0
    since_refresh = 0
    for k in range(1, params.gen + 1):
        cfg = state_for_iteration(k, params.gen, params.schedule)
        sid = _state_index(k, params.gen, params.schedule)
        since_refresh += 1
        due = (
            params.refresh_period > 0
            and since_refresh >= params.refresh_period
            and sid > 0
        )
        if sid != prev_state or due:
            u = rng.uniform((params.np_count, spec.n))
            pop.directions = cfg.beta * (-1.0 + 2.0 * u)
            since_refresh = 0
            counters.refreshes += 1
        prev_state = sid

        best = sms_iteration(
            pop, values, best, cfg, k, params.gen, spec, rng, counters
        )
        trace[k - 1] = best.value

    return RunResult(
        best=best,
        trace=trace,
        evaluations=params.np_count * (params.gen + 1) + counters.regenerations,
        seed=seed,
        counters=counters,
    )
