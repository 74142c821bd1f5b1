"""Paired comparison of the three optimizers on the Zakharov function.

Runs each optimizer 12 times with shared seeds on the same instance, then
applies the rank-sum test to each pairing. Small budget so it finishes in
about twenty seconds; the pattern scales to the full experiment harness.

Run:  python3 demos/compare_optimizers.py
"""

import numpy as np

from smsopt import (
    DeParams,
    PsoParams,
    SmsParams,
    make_instance,
    run_de,
    run_pso,
    run_sms,
    summarize,
    wilcoxon_rank_sum,
)

spec = make_instance("f10", n=10, instance_seed=0)
runs, np_count, gen = 12, 30, 600

finals = {}
finals["sms"] = [run_sms(spec, SmsParams(np_count=np_count, gen=gen), s).best.value
                 for s in range(runs)]
finals["pso"] = [run_pso(spec, PsoParams(np_count=np_count, gen=gen), s).best.value
                 for s in range(runs)]
finals["de"] = [run_de(spec, DeParams(np_count=np_count, gen=gen), s).best.value
                for s in range(runs)]

print(f"{spec.id} (n={spec.n}), {runs} runs, Np={np_count}, gen={gen}\n")
print("optimizer   average best   median best    std dev")
for name, vals in finals.items():
    s = summarize(np.array(vals))
    print(f"{name:<9}   {s.ab:>12.4e}   {s.mb:>11.4e}   {s.sd:>9.3e}")

print("\npairing      p (two-sided)   direction")
for a, b in (("sms", "pso"), ("sms", "de"), ("pso", "de")):
    r = wilcoxon_rank_sum(np.array(finals[a]), np.array(finals[b]))
    arrow = {-1: f"{a} lower", 0: "balanced", 1: f"{b} lower"}[r.direction]
    print(f"{a}-{b:<7}   {r.p_two_sided:>12.4g}    {arrow} ({r.method})")
