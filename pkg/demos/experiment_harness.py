"""Declare an experiment in TOML, run it, and inspect the output files.

The same config drives the `smsopt run` CLI command; this script does it
through the library API and then prints what landed on disk.

Run:  python3 demos/experiment_harness.py
"""

import tempfile
from pathlib import Path

from smsopt import load_config, run_experiment

CONFIG = """\
runs = 6
gen = 120
np = 20
base_seed = 0
output_dir = "OUTDIR"

[[benchmark]]
id = "f6"
n = 8

[[benchmark]]
id = "f18"
n = 8
instance_seed = 3

[[optimizer]]
name = "sms"

[[optimizer]]
name = "pso"

[[optimizer]]
name = "de"
overrides = { cr = 0.5 }
"""

workdir = Path(tempfile.mkdtemp(prefix="smsopt-demo-"))
cfg_path = workdir / "experiment.toml"
cfg_path.write_text(CONFIG.replace("OUTDIR", str(workdir / "results")))

cfg = load_config(cfg_path)
report = run_experiment(cfg)

print(f"ran {len(report.cells)} cells "
      f"({len(cfg.benchmarks)} benchmarks x {len(cfg.optimizers)} optimizers)")
print("\nbenchmark  optimizer  average best   median best")
ordered = sorted(report.cells.items(), key=lambda kv: (kv[0][1], kv[0][0]))
for (opt, fid), cell in ordered:
    s = cell.summary
    print(f"{fid:<9}  {opt:<9}  {s.ab:>12.4e}  {s.mb:>12.4e}")

print("\nrank-sum comparisons against the matter-state optimizer:")
for (fid, rival), res in sorted(report.comparisons.items()):
    print(f"  {fid} vs {rival}: p={res.p_two_sided:.4g} ({res.method})")

print(f"\nfiles under {cfg.output_dir}:")
for p in sorted(Path(cfg.output_dir).iterdir()):
    print(f"  {p.name}  ({p.stat().st_size} bytes)")

print("\nsummary.csv head:")
for line in (Path(cfg.output_dir) / "summary.csv").read_text().splitlines()[:4]:
    print(f"  {line}")
