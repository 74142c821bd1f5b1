"""Tests for the PSO and DE reference optimizers."""

import numpy as np
import pytest

from smsopt import (
    ConfigurationError,
    DeParams,
    PsoParams,
    RandomStream,
    make_instance,
    run_de,
    run_pso,
)
from smsopt.baselines import _inertia


class TestParams:
    def test_pso_validation(self):
        with pytest.raises(ConfigurationError):
            PsoParams(np_count=1)
        with pytest.raises(ConfigurationError):
            PsoParams(gen=0)
        with pytest.raises(ConfigurationError):
            PsoParams(c1=0.0)
        with pytest.raises(ConfigurationError):
            PsoParams(w_start=0.2, w_end=0.9)

    def test_de_validation(self):
        with pytest.raises(ConfigurationError):
            DeParams(np_count=3)
        with pytest.raises(ConfigurationError):
            DeParams(cr=1.5)
        with pytest.raises(ConfigurationError):
            DeParams(f_weight=0.0)
        with pytest.raises(ConfigurationError):
            DeParams(scheme="best/1/bin")

    def test_inertia_schedule(self):
        p = PsoParams(gen=1000)
        assert _inertia(p, 1) == pytest.approx(0.9)
        assert _inertia(p, 1000) == pytest.approx(0.2)
        assert _inertia(PsoParams(gen=1), 1) == 0.9  # no 0/0 at gen=1


class TestPso:
    def test_replay_and_accounting(self):
        spec_a = make_instance("f1", 8, 0)
        spec_b = make_instance("f1", 8, 0)
        params = PsoParams(np_count=12, gen=40)
        ra = run_pso(spec_a, params, seed=9)
        rb = run_pso(spec_b, params, seed=9)
        assert ra.best.value == rb.best.value
        assert np.array_equal(ra.trace, rb.trace)
        assert ra.evaluations == 12 * 41
        assert spec_a.eval_count == ra.evaluations

    def test_trace_monotone_and_in_bounds(self):
        for seed in range(10):
            spec = make_instance("f6", 5, 0)
            r = run_pso(spec, PsoParams(np_count=10, gen=30), seed=seed)
            assert np.all(np.diff(r.trace) <= 0.0)
            assert np.all(r.best.position >= spec.bounds.low)
            assert np.all(r.best.position <= spec.bounds.high)

    def test_single_iteration_manual_replay(self):
        spec = make_instance("f1", 3, 0)
        params = PsoParams(np_count=5, gen=1)
        result = run_pso(spec, params, seed=21)

        b = make_instance("f1", 3, 0).bounds
        ref = RandomStream(21)
        pos = b.low + b.span * ref.uniform((5, 3))
        vals = np.array([float(np.sum(x * x)) for x in pos])
        g = int(np.argmin(vals))
        best_pos, best_val = pos[g].copy(), float(vals[g])

        ref.uniform((5, 3))  # r1: pbest == pos so this pull is zero
        r2 = ref.uniform((5, 3))
        vel = params.c2 * r2 * (best_pos[None, :] - pos)
        pos = np.clip(pos + vel, b.low, b.high)
        vals = np.array([float(np.sum(x * x)) for x in pos])
        g = int(np.argmin(vals))
        if vals[g] < best_val:
            best_val = float(vals[g])

        assert result.best.value == best_val
        assert result.trace[0] == best_val


class TestDe:
    def test_replay_and_accounting(self):
        spec_a = make_instance("f1", 8, 0)
        spec_b = make_instance("f1", 8, 0)
        params = DeParams(np_count=12, gen=40)
        ra = run_de(spec_a, params, seed=9)
        rb = run_de(spec_b, params, seed=9)
        assert ra.best.value == rb.best.value
        assert np.array_equal(ra.trace, rb.trace)
        assert ra.evaluations == 12 * 41
        assert spec_a.eval_count == ra.evaluations

    def test_trace_monotone_and_in_bounds(self):
        for seed in range(10):
            spec = make_instance("f6", 5, 0)
            r = run_de(spec, DeParams(np_count=10, gen=30), seed=seed)
            assert np.all(np.diff(r.trace) <= 0.0)
            assert np.all(r.best.position >= spec.bounds.low)
            assert np.all(r.best.position <= spec.bounds.high)

    def test_single_generation_manual_replay(self):
        spec = make_instance("f1", 3, 0)
        params = DeParams(np_count=6, gen=1)
        result = run_de(spec, params, seed=33)

        b = make_instance("f1", 3, 0).bounds
        ref = RandomStream(33)
        pos = b.low + b.span * ref.uniform((6, 3))
        vals = np.array([float(np.sum(x * x)) for x in pos])
        best_val = float(np.min(vals))

        partners = np.array(
            [ref.choice_distinct(6, 3, exclude=i) for i in range(6)]
        )
        mutant = pos[partners[:, 0]] + params.f_weight * (
            pos[partners[:, 1]] - pos[partners[:, 2]]
        )
        j_rand = np.array([ref.integer(3) for _ in range(6)])
        cross = ref.uniform((6, 3)) < params.cr
        cross[np.arange(6), j_rand] = True
        trial = np.clip(np.where(cross, mutant, pos), b.low, b.high)
        trial_v = np.array([float(np.sum(x * x)) for x in trial])
        keep = trial_v <= vals
        vals[keep] = trial_v[keep]
        best_val = min(best_val, float(np.min(vals)))

        assert result.best.value == best_val
        assert result.trace[0] == best_val

    def test_forced_dimension_with_zero_cr(self):
        # cr=0 still crosses exactly one coordinate per trial, so the search
        # cannot stall even with no binomial mixing.
        spec = make_instance("f1", 4, 0)
        r = run_de(spec, DeParams(np_count=8, gen=50, cr=0.0), seed=2)
        assert r.trace[-1] < r.trace[0]
