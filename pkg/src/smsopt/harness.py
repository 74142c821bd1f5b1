"""Experiment orchestration: (optimizer x benchmark x seed) grids.

An experiment is described by an ExperimentConfig, either built in code or
loaded from a TOML file.  ``run_experiment`` builds one shared instance per
benchmark, runs every optimizer on it with the seed sequence
``base_seed + run_index`` (identical across optimizers, so each run index
faces the same instance with a comparable randomness budget), aggregates
AB/MB/SD summaries, tests the molecular optimizer against each baseline
with the rank-sum test, and writes everything under ``output_dir``:

* ``finals_<benchmark>_<optimizer>.txt`` - one final value per line.
* ``summary.csv`` - AB/MB/SD row triples per benchmark, one column per
  optimizer, full 17-significant-digit precision, best AB flagged.
* ``wilcoxon.csv`` - one row per (benchmark, baseline) comparison.
* ``trace_<benchmark>_<optimizer>.csv`` - per-iteration mean/median
  best-so-far across runs (only when traces are retained).
* ``provenance.txt`` - config echo, seed list, library version.

A run that raises or returns a non-finite final is recorded as a failure
for that cell and excluded from its statistics; sibling runs are not
affected.  Config problems are reported all at once, before anything runs.
"""

from __future__ import annotations

import io
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

if sys.version_info >= (3, 11):
    import tomllib as _toml
else:
    import tomli as _toml

from .baselines import DeParams, PsoParams, run_de, run_pso
from .benchmarks import (
    BenchmarkInstance,
    canonical_dimension,
    instance_to_spec,
    make_bench_instance,
)
from .core import ConfigurationError, DimensionError
from .sms import RunResult, SmsParams, run_sms
from .stats import SummaryStats, WilcoxonResult, summarize, wilcoxon_rank_sum

__all__ = [
    "ExperimentConfig",
    "CellResult",
    "ExperimentReport",
    "load_config",
    "run_experiment",
    "export_summary",
    "export_traces",
]

OPTIMIZER_NAMES = ("sms", "pso", "de")

# Benchmarks whose reference budget is 500 iterations instead of 1000.
_SHORT_BUDGET = frozenset(("f12", "f13", "f14"))

_OVERRIDE_KEYS = {
    "sms": frozenset(("np_count", "gen", "refresh_period")),
    "pso": frozenset(("np_count", "gen", "c1", "c2", "w_start", "w_end")),
    "de": frozenset(("np_count", "gen", "cr", "f_weight")),
}


@dataclass
class ExperimentConfig:
    """One experiment grid.

    ``benchmarks`` holds (id, n, instance_seed) triples; ``optimizers``
    holds (name, overrides) pairs with name in {sms, pso, de}.  ``gen``
    of None means per-benchmark defaults (1000, or 500 for f12..f14).
    Run seeds are ``base_seed + run_index``, shared across optimizers.
    ``fresh_instances`` switches f15..f24 from one shared instance per
    benchmark to one instance per run index (seeded instance_seed + index).
    """

    benchmarks: List[Tuple[str, int, int]]
    optimizers: List[Tuple[str, dict]]
    runs: int = 30
    gen: Optional[int] = None
    np_count: int = 50
    base_seed: int = 0
    output_dir: str = "results"
    keep_traces: bool = False
    fresh_instances: bool = False


@dataclass
class CellResult:
    """All runs of one optimizer on one benchmark."""

    optimizer: str
    benchmark: str
    finals: np.ndarray
    seeds: List[int]
    failures: List[Tuple[int, str]] = field(default_factory=list)
    summary: Optional[SummaryStats] = None
    traces: Optional[np.ndarray] = None  # (successful runs, gen)


@dataclass
class ExperimentReport:
    """Everything run_experiment produced, summaries recomputable from finals."""

    config: ExperimentConfig
    cells: Dict[Tuple[str, str], CellResult]
    comparisons: Dict[Tuple[str, str], WilcoxonResult]
    seeds: List[int]
    version: str

    @property
    def any_failures(self) -> bool:
        return any(c.failures for c in self.cells.values())


# --- configuration -----------------------------------------------------------

def _is_int(v) -> bool:
    return isinstance(v, (int, np.integer)) and not isinstance(v, bool)


def _build_params(name: str, overrides: dict, np_count: int, gen: int):
    kwargs = {"np_count": np_count, "gen": gen}
    kwargs.update(overrides)
    if name == "sms":
        return SmsParams(**kwargs)
    if name == "pso":
        return PsoParams(**kwargs)
    return DeParams(**kwargs)


def _gen_for(cfg: ExperimentConfig, fid: str) -> int:
    if cfg.gen is not None:
        return cfg.gen
    return 500 if fid in _SHORT_BUDGET else 1000


def validate_config(cfg: ExperimentConfig) -> List[str]:
    """Collect every problem with the config; empty list means valid."""
    errors: List[str] = []
    if not _is_int(cfg.runs) or cfg.runs < 1:
        errors.append(f"runs must be a positive integer, got {cfg.runs!r}")
    if cfg.gen is not None and (not _is_int(cfg.gen) or cfg.gen < 1):
        errors.append(f"gen must be a positive integer or None, got {cfg.gen!r}")
    if not _is_int(cfg.np_count) or cfg.np_count < 2:
        errors.append(f"np_count must be an integer >= 2, got {cfg.np_count!r}")
    if not _is_int(cfg.base_seed):
        errors.append(f"base_seed must be an integer, got {cfg.base_seed!r}")
    if not isinstance(cfg.output_dir, (str, Path)):
        errors.append("output_dir must be a path string")

    if not cfg.benchmarks:
        errors.append("at least one benchmark is required")
    for i, triple in enumerate(cfg.benchmarks):
        try:
            fid, n, iseed = triple
        except (TypeError, ValueError):
            errors.append(f"benchmark[{i}] must be an (id, n, instance_seed) triple")
            continue
        if not _is_int(iseed):
            errors.append(f"benchmark[{i}].instance_seed must be an integer")
        try:
            make_bench_instance(fid, n, iseed if _is_int(iseed) else 0)
        except (ConfigurationError, DimensionError) as exc:
            errors.append(f"benchmark[{i}]: {exc}")

    if not cfg.optimizers:
        errors.append("at least one optimizer is required")
    seen = set()
    for i, pair in enumerate(cfg.optimizers):
        try:
            name, overrides = pair
        except (TypeError, ValueError):
            errors.append(f"optimizer[{i}] must be a (name, overrides) pair")
            continue
        if name not in OPTIMIZER_NAMES:
            errors.append(
                f"optimizer[{i}]: unknown name {name!r} (choose from {OPTIMIZER_NAMES})"
            )
            continue
        if name in seen:
            errors.append(f"optimizer[{i}]: duplicate optimizer {name!r}")
        seen.add(name)
        if not isinstance(overrides, dict):
            errors.append(f"optimizer[{i}].overrides must be a table")
            continue
        unknown = set(overrides) - _OVERRIDE_KEYS[name]
        for key in sorted(unknown):
            errors.append(f"optimizer[{i}] ({name}): unknown override key {key!r}")
        if not unknown:
            gen_probe = cfg.gen if cfg.gen is not None else 1000
            try:
                _build_params(name, overrides, cfg.np_count, gen_probe)
            except (ConfigurationError, TypeError) as exc:
                errors.append(f"optimizer[{i}] ({name}): {exc}")
    return errors


_TOP_KEYS = {
    "runs", "gen", "np", "base_seed", "output_dir", "traces",
    "fresh_instances", "benchmark", "optimizer",
}
_BENCH_KEYS = {"id", "n", "instance_seed"}
_OPT_KEYS = {"name", "overrides"}


def load_config(path) -> ExperimentConfig:
    """Load and validate a TOML experiment description.

    Top-level keys: runs, gen, np, base_seed, output_dir, traces,
    fresh_instances, plus [[benchmark]] tables (id, n, instance_seed) and
    [[optimizer]] tables (name, overrides).  Unknown keys anywhere are
    errors; all problems are reported together.
    """
    path = Path(path)
    try:
        raw = _toml.loads(path.read_text())
    except OSError as exc:
        raise ConfigurationError(f"cannot read config {path}: {exc}") from exc
    except _toml.TOMLDecodeError as exc:
        raise ConfigurationError(f"malformed config {path}: {exc}") from exc

    errors: List[str] = []
    for key in sorted(set(raw) - _TOP_KEYS):
        errors.append(f"unknown config key {key!r}")

    benchmarks: List[Tuple[str, int, int]] = []
    bench_raw = raw.get("benchmark", [])
    if not isinstance(bench_raw, list):
        errors.append("'benchmark' must be an array of tables")
        bench_raw = []
    for i, tbl in enumerate(bench_raw):
        if not isinstance(tbl, dict):
            errors.append(f"benchmark[{i}] must be a table")
            continue
        for key in sorted(set(tbl) - _BENCH_KEYS):
            errors.append(f"benchmark[{i}]: unknown key {key!r}")
        fid = tbl.get("id")
        if not isinstance(fid, str):
            errors.append(f"benchmark[{i}]: 'id' (string) is required")
            continue
        n = tbl.get("n")
        if n is None:
            try:
                n = canonical_dimension(fid)
            except ConfigurationError as exc:
                errors.append(f"benchmark[{i}]: {exc}")
                continue
        benchmarks.append((fid, n, tbl.get("instance_seed", 0)))

    optimizers: List[Tuple[str, dict]] = []
    opt_raw = raw.get("optimizer", [])
    if not isinstance(opt_raw, list):
        errors.append("'optimizer' must be an array of tables")
        opt_raw = []
    for i, tbl in enumerate(opt_raw):
        if not isinstance(tbl, dict):
            errors.append(f"optimizer[{i}] must be a table")
            continue
        for key in sorted(set(tbl) - _OPT_KEYS):
            errors.append(f"optimizer[{i}]: unknown key {key!r}")
        name = tbl.get("name")
        if not isinstance(name, str):
            errors.append(f"optimizer[{i}]: 'name' (string) is required")
            continue
        optimizers.append((name, dict(tbl.get("overrides", {}))))

    for key, want in [("traces", bool), ("fresh_instances", bool)]:
        if key in raw and not isinstance(raw[key], bool):
            errors.append(f"'{key}' must be a boolean")
    if "output_dir" in raw and not isinstance(raw["output_dir"], str):
        errors.append("'output_dir' must be a string")

    cfg = ExperimentConfig(
        benchmarks=benchmarks,
        optimizers=optimizers,
        runs=raw.get("runs", 30),
        gen=raw.get("gen"),
        np_count=raw.get("np", 50),
        base_seed=raw.get("base_seed", 0),
        output_dir=raw.get("output_dir", "results"),
        keep_traces=bool(raw.get("traces", False)),
        fresh_instances=bool(raw.get("fresh_instances", False)),
    )
    errors.extend(validate_config(cfg))
    if errors:
        raise ConfigurationError(
            "invalid experiment config:\n  " + "\n  ".join(errors)
        )
    return cfg


# --- execution ---------------------------------------------------------------

_RUNNERS = {"sms": run_sms, "pso": run_pso, "de": run_de}


def _run_cell(
    cfg: ExperimentConfig,
    name: str,
    overrides: dict,
    fid: str,
    n: int,
    inst_seed: int,
    shared: BenchmarkInstance,
) -> CellResult:
    gen = _gen_for(cfg, fid)
    params = _build_params(name, overrides, cfg.np_count, gen)
    runner = _RUNNERS[name]

    finals: List[float] = []
    seeds_ok: List[int] = []
    traces: List[np.ndarray] = []
    failures: List[Tuple[int, str]] = []
    for idx in range(cfg.runs):
        seed = cfg.base_seed + idx
        inst = (
            make_bench_instance(fid, n, inst_seed + idx)
            if cfg.fresh_instances
            else shared
        )
        spec = instance_to_spec(inst)
        try:
            result: RunResult = runner(spec, params, seed)
            if not np.isfinite(result.best.value):
                raise ValueError("non-finite final value")
        except Exception as exc:  # recorded, never fatal to siblings
            failures.append((idx, f"{type(exc).__name__}: {exc}"))
            continue
        finals.append(result.best.value)
        seeds_ok.append(seed)
        if cfg.keep_traces:
            traces.append(result.trace)

    cell = CellResult(
        optimizer=name,
        benchmark=fid,
        finals=np.array(finals),
        seeds=seeds_ok,
        failures=failures,
    )
    if finals:
        cell.summary = summarize(cell.finals)
    if cfg.keep_traces and traces:
        cell.traces = np.vstack(traces)
    return cell


def run_experiment(cfg: ExperimentConfig) -> ExperimentReport:
    """Execute the grid, aggregate, compare, and write all outputs."""
    errors = validate_config(cfg)
    if errors:
        raise ConfigurationError(
            "invalid experiment config:\n  " + "\n  ".join(errors)
        )

    from . import __version__

    cells: Dict[Tuple[str, str], CellResult] = {}
    comparisons: Dict[Tuple[str, str], WilcoxonResult] = {}
    for fid, n, inst_seed in cfg.benchmarks:
        shared = make_bench_instance(fid, n, inst_seed)
        for name, overrides in cfg.optimizers:
            cells[(name, fid)] = _run_cell(
                cfg, name, overrides, fid, n, inst_seed, shared
            )
        sms_cell = cells.get(("sms", fid))
        if sms_cell is not None and sms_cell.finals.size:
            for name, _ in cfg.optimizers:
                if name == "sms":
                    continue
                other = cells[(name, fid)]
                if other.finals.size:
                    comparisons[(fid, name)] = wilcoxon_rank_sum(
                        sms_cell.finals, other.finals
                    )

    report = ExperimentReport(
        config=cfg,
        cells=cells,
        comparisons=comparisons,
        seeds=[cfg.base_seed + i for i in range(cfg.runs)],
        version=__version__,
    )
    _write_outputs(report)
    return report


# --- output ------------------------------------------------------------------

def _g17(v: float) -> str:
    return f"{v:.17g}"


def export_summary(report: ExperimentReport, path=None) -> Path:
    """Write the AB/MB/SD table; one column per optimizer, best AB flagged."""
    if path is None:
        path = Path(report.config.output_dir) / "summary.csv"
    path = Path(path)
    opt_names = [name for name, _ in report.config.optimizers]
    buf = io.StringIO()
    buf.write("benchmark,stat," + ",".join(opt_names) + ",best\n")
    for fid, _, _ in report.config.benchmarks:
        summaries = {
            name: report.cells[(name, fid)].summary for name in opt_names
        }
        by_stat = {
            "AB": {n: s.ab for n, s in summaries.items() if s is not None},
            "MB": {n: s.mb for n, s in summaries.items() if s is not None},
            "SD": {n: s.sd for n, s in summaries.items() if s is not None},
        }
        best = ""
        if by_stat["AB"]:
            best = min(by_stat["AB"], key=by_stat["AB"].get)
        for stat in ("AB", "MB", "SD"):
            vals = [
                _g17(by_stat[stat][n]) if n in by_stat[stat] else ""
                for n in opt_names
            ]
            flag = best if stat == "AB" else ""
            buf.write(f"{fid},{stat}," + ",".join(vals) + f",{flag}\n")
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(buf.getvalue())
    return path


def export_traces(report: ExperimentReport, out_dir=None) -> List[Path]:
    """Write per-cell convergence files: iteration, mean, median best-so-far."""
    if not report.config.keep_traces:
        raise ConfigurationError(
            "traces were not retained; enable the traces flag and rerun"
        )
    out_dir = Path(out_dir if out_dir is not None else report.config.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written: List[Path] = []
    for (name, fid), cell in report.cells.items():
        if cell.traces is None:
            continue
        mean = cell.traces.mean(axis=0)
        median = np.median(cell.traces, axis=0)
        path = out_dir / f"trace_{fid}_{name}.csv"
        with path.open("w") as fh:
            fh.write("k,mean,median\n")
            for k in range(mean.size):
                fh.write(f"{k + 1},{_g17(mean[k])},{_g17(median[k])}\n")
        written.append(path)
    return written


def _write_outputs(report: ExperimentReport) -> None:
    out = Path(report.config.output_dir)
    out.mkdir(parents=True, exist_ok=True)

    for (name, fid), cell in report.cells.items():
        finals_path = out / f"finals_{fid}_{name}.txt"
        finals_path.write_text(
            "".join(_g17(v) + "\n" for v in cell.finals)
        )

    export_summary(report)

    if report.comparisons:
        with (out / "wilcoxon.csv").open("w") as fh:
            fh.write("benchmark,baseline,rank_sum,p_two_sided,method,direction\n")
            for (fid, name), res in report.comparisons.items():
                fh.write(
                    f"{fid},{name},{_g17(res.rank_sum)},{_g17(res.p_two_sided)},"
                    f"{res.method},{res.direction}\n"
                )

    if report.config.keep_traces:
        export_traces(report)

    cfg = report.config
    with (out / "provenance.txt").open("w") as fh:
        fh.write(f"version = {report.version}\n")
        fh.write(f"runs = {cfg.runs}\n")
        fh.write(f"gen = {cfg.gen if cfg.gen is not None else 'per-benchmark default'}\n")
        fh.write(f"np = {cfg.np_count}\n")
        fh.write(f"base_seed = {cfg.base_seed}\n")
        fh.write(f"seeds = {' '.join(str(s) for s in report.seeds)}\n")
        fh.write(f"fresh_instances = {cfg.fresh_instances}\n")
        fh.write(
            "benchmarks = "
            + " ".join(f"{fid}(n={n},seed={s})" for fid, n, s in cfg.benchmarks)
            + "\n"
        )
        fh.write(
            "optimizers = "
            + " ".join(
                name + (f"{ov}" if ov else "") for name, ov in cfg.optimizers
            )
            + "\n"
        )
        for (name, fid), cell in report.cells.items():
            for idx, msg in cell.failures:
                fh.write(f"failure {fid} {name} run {idx}: {msg}\n")
