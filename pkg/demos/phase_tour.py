"""How the three-phase schedule shapes a run.

The search mimics matter cooling down: a gas phase with long steps and
frequent restarts, a liquid phase with moderate ones, and a solid phase
where molecules only drift toward the best point found. This script prints
the per-phase knobs and shows how much of the improvement happens in each
phase.

Run:  python3 demos/phase_tour.py
"""

import numpy as np

from smsopt import (
    GAS,
    LIQUID,
    SOLID,
    PhaseSchedule,
    SmsParams,
    make_instance,
    run_sms,
    state_for_iteration,
)

print("phase    rho range    beta  alpha   H")
for name, cfg in (("gas", GAS), ("liquid", LIQUID), ("solid", SOLID)):
    print(f"{name:<6}  [{cfg.rho_lo:.2f}, {cfg.rho_hi:.2f}]  "
          f"{cfg.beta:.2f}  {cfg.alpha:.2f}   {cfg.H:.2f}")

gen = 200
schedule = PhaseSchedule()
states = [state_for_iteration(k, gen, schedule) for k in range(1, gen + 1)]
bounds = [states.index(LIQUID) + 1, states.index(SOLID) + 1]
print(f"\ngen={gen}: liquid starts at k={bounds[0]}, solid at k={bounds[1]}")

spec = make_instance("f6", n=10, instance_seed=0)
result = run_sms(spec, SmsParams(np_count=30, gen=gen), seed=1)
trace = result.trace

segments = [(1, bounds[0] - 1), (bounds[0], bounds[1] - 1), (bounds[1], gen)]
print("\nphase    iterations   best at end   drop in phase")
start_val = None
for (name, _), (lo, hi) in zip((("gas", 0), ("liquid", 0), ("solid", 0)),
                               segments):
    end_val = trace[hi - 1]
    prev = trace[lo - 2] if lo > 1 else None
    drop = (prev - end_val) if prev is not None else np.nan
    label = f"{drop:.3e}" if prev is not None else "(from init)"
    print(f"{name:<6}   {lo:>3}..{hi:<4}    {end_val:.4e}    {label}")

print(f"\nfinal best {result.best.value:.6e} "
      f"after {result.evaluations} evaluations")
