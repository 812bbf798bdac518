import json
import math

import numpy as np
import pytest

from g2theta import (
    IDENTITY_IDS,
    builtin_identity,
    evaluate_identity,
    make_period_matrix,
)
from g2theta.harness import (
    FAMILY_NAMES,
    InvalidConfig,
    SuiteConfig,
    family_ids,
    run_identity,
    run_suite,
    sample_binding,
    sample_moduli,
    trial_rng,
)


class TestSampling:
    def test_moduli_box(self):
        rng = np.random.default_rng(1)
        for _ in range(10_000):
            om = sample_moduli(rng)
            y1, y2, y12 = om.tau1.imag, om.tau2.imag, om.tau12.imag
            assert 0.8 <= y1 <= 2 and 0.8 <= y2 <= 2
            assert 0 < y12 <= 0.5 * math.sqrt(y1 * y2)
            assert y1 * y2 - y12**2 >= 0.75 * y1 * y2 > 0
            # reconstructable by the validator
            make_period_matrix(om.tau1, om.tau2, om.tau12)

    def test_seeded(self):
        a = [sample_moduli(trial_rng(42, "x", t)) for t in range(5)]
        b = [sample_moduli(trial_rng(42, "x", t)) for t in range(5)]
        assert a == b
        assert sample_moduli(trial_rng(43, "x", 0)) != a[0]

    def test_streams_independent_of_other_ids(self):
        # a stream depends only on (seed, id, trial)
        assert sample_moduli(trial_rng(7, "theta-add-1", 3)) == sample_moduli(trial_rng(7, "theta-add-1", 3))
        assert sample_moduli(trial_rng(7, "theta-add-1", 3)) != sample_moduli(trial_rng(7, "theta-add-2", 3))

    def test_binding_free_symbols(self):
        rng = np.random.default_rng(2)
        om = sample_moduli(rng)
        spec = builtin_identity("theta-add-5")
        binding = sample_binding(rng, spec, om)
        assert set(binding) == {"y", "z", "y'", "z'"}
        bound = 0.25 * min(om.tau1.imag, om.tau2.imag)
        assert all(abs(x.real) <= 1 and abs(x.imag) <= bound for x in binding.values())

    @pytest.mark.parametrize("zero_index", range(6))
    def test_zero_locus_binding(self, zero_index):
        rng = np.random.default_rng(3)
        om = sample_moduli(rng)
        spec = builtin_identity("kossak-2")
        binding = sample_binding(rng, spec, om, zero_index=zero_index)
        assert evaluate_identity(spec, binding, om).relative < 1e-8


class TestConfig:
    @pytest.mark.parametrize(
        "kwargs",
        [dict(trials=0), dict(families=()), dict(tol=0), dict(tol=-1e-7), dict(families=("nope",)),
         dict(seed=-1), dict(tail_tolerance=0), dict(family_tol={"kossak": 0})],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(InvalidConfig):
            SuiteConfig(**kwargs)

    def test_canonical_family_order(self):
        assert SuiteConfig(families=("appendix", "riemann")).families == ("riemann", "appendix")

    def test_family_tolerance(self):
        cfg = SuiteConfig(family_tol={"f-addition": 1e-6})
        assert cfg.tolerance("f-addition") == 1e-6
        assert cfg.tolerance("kossak") == cfg.tol


class TestRun:
    def test_coverage(self):
        ids = [i for fam in FAMILY_NAMES for i in family_ids(fam)]
        assert len(ids) == 51
        assert set(IDENTITY_IDS) <= set(ids)

    def test_small_suite_passes(self):
        report = run_suite(SuiteConfig(trials=3, seed=5))
        assert report.verdict == "pass"
        assert len(report.results) == 51
        assert all(r.trials == 3 and r.failures == 0 for r in report.results)

    def test_json_schema(self):
        report = run_suite(SuiteConfig(families=("kossak",), trials=2, seed=1))
        data = json.loads(report.to_json())
        assert list(data) == ["config", "results", "verdict"]
        assert list(data["results"][0]) == ["id", "paper_eq", "trials", "max_rel", "mean_rel", "failures", "resamples"]
        assert [r["paper_eq"] for r in data["results"]] == ["2-5", "2-6", "2-7"]

    def test_deterministic(self):
        cfg = SuiteConfig(families=("theta-addition", "f-addition"), trials=4, seed=99)
        assert run_suite(cfg).to_json() == run_suite(cfg).to_json()

    def test_failures_counted(self):
        result = run_identity("theta-add-3", 5, 0, 1e-30)
        assert result.failures == 5
        report = run_suite(SuiteConfig(families=("riemann",), trials=2, tol=1e-30))
        assert report.verdict == "fail"

    def test_f_addition_labels(self):
        result = run_identity("f-add-10", 2, 0, 1e-7)
        assert result.paper_eq == "3-11"
