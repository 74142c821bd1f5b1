"""smsopt: a three-phase molecular global optimizer with reference baselines.

The package bundles:

* ``sms`` - the optimizer itself: a population of molecules moved by
  decaying direction vectors through gas, liquid, and solid phases with
  collisions and random restarts.
* ``baselines`` - canonical global-best PSO and DE/rand/1/bin sharing the
  same RNG and result contracts.
* ``benchmarks`` - 24 continuous test functions (closed-form classics plus
  seeded shifted/composed instances).
* ``stats`` - AB/MB/SD summaries and an exact/approximate Wilcoxon
  rank-sum test.
* ``harness`` - experiment grids, TOML configs, CSV exports, and the
  ``smsopt`` command-line tool.
"""

from .core import (
    BestRecord,
    Bounds,
    ConfigurationError,
    DimensionError,
    ObjectiveSpec,
    Population,
    RandomStream,
    clamp_to_bounds,
    evaluate,
    init_population,
)
from .sms import (
    GAS,
    LIQUID,
    SOLID,
    IterationCounters,
    PhaseSchedule,
    RunResult,
    SmsParams,
    StateConfig,
    run_sms,
    sms_iteration,
    state_for_iteration,
)
from .baselines import DeParams, PsoParams, run_de, run_pso
from .benchmarks import (
    BENCHMARK_IDS,
    BenchmarkInstance,
    canonical_dimension,
    dump_instance,
    eval_classic,
    eval_gecco,
    f_pen,
    instance_to_spec,
    lambda_matrix,
    load_instance,
    make_bench_instance,
    make_instance,
    t_osz,
)
from .stats import SummaryStats, WilcoxonResult, summarize, wilcoxon_rank_sum
from .harness import (
    CellResult,
    ExperimentConfig,
    ExperimentReport,
    export_summary,
    export_traces,
    load_config,
    run_experiment,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # core
    "BestRecord", "Bounds", "ConfigurationError", "DimensionError",
    "ObjectiveSpec", "Population", "RandomStream", "clamp_to_bounds",
    "evaluate", "init_population",
    # sms
    "GAS", "LIQUID", "SOLID", "IterationCounters", "PhaseSchedule",
    "RunResult", "SmsParams", "StateConfig", "run_sms", "sms_iteration",
    "state_for_iteration",
    # baselines
    "DeParams", "PsoParams", "run_de", "run_pso",
    # benchmarks
    "BENCHMARK_IDS", "BenchmarkInstance", "canonical_dimension",
    "dump_instance", "eval_classic", "eval_gecco", "f_pen",
    "instance_to_spec", "lambda_matrix", "load_instance",
    "make_bench_instance", "make_instance", "t_osz",
    # stats
    "SummaryStats", "WilcoxonResult", "summarize", "wilcoxon_rank_sum",
    # harness
    "CellResult", "ExperimentConfig", "ExperimentReport", "export_summary",
    "export_traces", "load_config", "run_experiment",
]
