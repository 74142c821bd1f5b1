"""Minimal tour: minimize the 30-d sphere with the matter-state optimizer.

Run:  python3 demos/quickstart.py
"""

from smsopt import SmsParams, make_instance, run_sms

spec = make_instance("f1", n=30, instance_seed=0)
params = SmsParams(np_count=50, gen=300)
result = run_sms(spec, params, seed=0)

print(f"benchmark        {spec.id}  (n={spec.n})")
print(f"best value       {result.best.value:.6e}")
print(f"evaluations      {result.evaluations}")
print(f"regenerations    {result.counters.regenerations}")
print(f"direction swaps  {result.counters.direction_swaps}")

# The trace records the best-so-far value after every iteration.
for k in (1, 50, 150, 300):
    print(f"trace[{k:>3}]       {result.trace[k - 1]:.6e}")

# Identical seed, identical run: replay is bit-exact.
again = run_sms(spec, params, seed=0)
assert again.best.value == result.best.value
print("replay           bit-exact")
