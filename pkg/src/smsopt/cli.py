"""Command-line front end.

Subcommands:

* ``run <config.toml> [--traces]`` - execute the experiment grid described
  by the config file and write tables under its output_dir.
* ``bench <id> [--n N] [--seed S]`` - print one benchmark instance's
  metadata and, when the optimizer is known, an optimum check.
* ``stats <finals-a> <finals-b>`` - summaries and the rank-sum test for
  two whitespace-separated value files.

Exit codes: 0 success; 1 configuration problem (bad arguments, malformed
config, unknown benchmark); 2 runtime failure in at least one run.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from .benchmarks import canonical_dimension, make_instance
from .core import ConfigurationError, DimensionError, RandomStream
from .harness import load_config, run_experiment
from .stats import summarize, wilcoxon_rank_sum

__all__ = ["main"]


class _Parser(argparse.ArgumentParser):
    # Usage problems are configuration errors: exit 1, not argparse's 2.
    def error(self, message):
        self.print_usage(sys.stderr)
        raise ConfigurationError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="smsopt", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="execute an experiment config")
    p_run.add_argument("config", help="TOML experiment description")
    p_run.add_argument(
        "--traces", action="store_true",
        help="retain per-run traces and write convergence files",
    )

    p_bench = sub.add_parser("bench", help="inspect one benchmark instance")
    p_bench.add_argument("id", help="benchmark id, f1..f24")
    p_bench.add_argument("--n", type=int, default=None, help="dimension")
    p_bench.add_argument("--seed", type=int, default=0, help="instance seed")

    p_stats = sub.add_parser("stats", help="compare two finals files")
    p_stats.add_argument("file_a", help="first finals file (one value per line)")
    p_stats.add_argument("file_b", help="second finals file")
    return parser


def _cmd_run(args) -> int:
    cfg = load_config(args.config)
    if args.traces:
        cfg.keep_traces = True
    report = run_experiment(cfg)
    out = Path(cfg.output_dir)
    for (name, fid), cell in report.cells.items():
        s = cell.summary
        if s is None:
            print(f"{fid} {name}: all {cfg.runs} runs failed")
            continue
        print(f"{fid} {name}: AB={s.ab:.6g} MB={s.mb:.6g} SD={s.sd:.6g} "
              f"({s.count} runs)")
    for (fid, name), res in report.comparisons.items():
        print(f"{fid} sms-vs-{name}: p={res.p_two_sided:.3e} ({res.method})")
    print(f"outputs written to {out}")
    if report.any_failures:
        for (name, fid), cell in report.cells.items():
            for idx, msg in cell.failures:
                print(f"failed: {fid} {name} run {idx}: {msg}", file=sys.stderr)
        return 2
    return 0


def _cmd_bench(args) -> int:
    n = args.n if args.n is not None else canonical_dimension(args.id)
    spec = make_instance(args.id, n, args.seed)
    print(f"id = {spec.id}")
    print(f"n = {spec.bounds.n}")
    print(f"bounds = [{spec.bounds.low[0]:g}, {spec.bounds.high[0]:g}]^{spec.bounds.n}")
    print(f"f_opt = {spec.f_opt:.17g}")
    print(f"instance_seed = {args.seed}")
    if spec.x_opt is not None:
        value = spec.fn(np.asarray(spec.x_opt), RandomStream(0))
        print(f"value_at_x_opt = {value:.17g}")
        print(f"optimum_gap = {abs(value - spec.f_opt):.3e}")
    else:
        print("value_at_x_opt = n/a (no analytic optimizer)")
    return 0


def _read_finals(path: str) -> np.ndarray:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigurationError(f"cannot read finals file {path}: {exc}") from exc
    try:
        vals = np.array([float(tok) for tok in text.split()])
    except ValueError as exc:
        raise ConfigurationError(f"non-numeric entry in {path}: {exc}") from exc
    if vals.size == 0:
        raise ConfigurationError(f"finals file {path} is empty")
    return vals


def _cmd_stats(args) -> int:
    a = _read_finals(args.file_a)
    b = _read_finals(args.file_b)
    for label, sample in (("a", a), ("b", b)):
        s = summarize(sample)
        print(f"{label}: count={s.count} AB={s.ab:.17g} MB={s.mb:.17g} "
              f"SD={s.sd:.17g}")
    res = wilcoxon_rank_sum(a, b)
    print(f"rank_sum_a = {res.rank_sum:.17g}")
    print(f"p_two_sided = {res.p_two_sided:.17g}")
    print(f"method = {res.method}")
    side = {-1: "a ranks lower", 0: "balanced", 1: "a ranks higher"}
    print(f"direction = {side[res.direction]}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except ConfigurationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "bench":
            return _cmd_bench(args)
        return _cmd_stats(args)
    except (ConfigurationError, DimensionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # runtime failure past config validation
        print(f"runtime failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
