"""Acceptance criteria, one test each, at the stated tolerances.

Each test prints a ``criterion N: PASS|FAIL ...`` line (visible in
``pytest -v`` output) before asserting.  Run this file directly with
``python3 tests/test_acceptance.py`` to get just the summary lines.
"""
import filecmp
import itertools
import subprocess
import sys
import time

import numpy as np
import pytest

from g2theta import (
    CHARACTERISTICS,
    ODD_CHARACTERISTICS,
    brute_force_theta,
    builtin_identity,
    evaluate_identity,
    genus1_theta,
    half_period_shifted_theta,
    make_period_matrix,
    printed_identity,
    reduce_characteristic,
    theta,
    truncation_radius,
)
from g2theta.harness import run_identity, sample_binding, sample_moduli, sample_point, trial_rng

SEED = 20240611


def report(capsys, number, ok, detail):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)
    return ok


def _worst(results):
    return max(r.max_rel for r in results)


def criterion_1(capsys=None):
    start = time.perf_counter()
    results = [run_identity(f"theta-add-{i}", 200, SEED, 1e-8) for i in range(1, 17)]
    elapsed = time.perf_counter() - start
    ok = all(r.failures == 0 for r in results) and elapsed < 60
    return report(capsys, 1, ok, f"theta-add-1..16 x200, max rel {_worst(results):.2e} < 1e-8, {elapsed:.1f}s < 60s")


def criterion_2(capsys=None):
    results = [run_identity(f"f-add-{i}", 200, SEED, 1e-7) for i in range(1, 16)]
    resamples = max(r.resamples for r in results)
    ok = all(r.failures == 0 for r in results) and resamples < 0.05 * 200
    return report(capsys, 2, ok, f"f-add-1..15 x200, max rel {_worst(results):.2e} < 1e-7, max resamples {resamples}/200")


def criterion_3(capsys=None):
    generic = run_identity("kossak-1", 200, SEED, 1e-8)
    worst = generic.max_rel
    for identity_id in ("kossak-2", "kossak-3"):
        spec = builtin_identity(identity_id)
        for zero_index in range(6):
            for t in range(50):
                rng = trial_rng(SEED, f"{identity_id}/{zero_index}", t)
                om = sample_moduli(rng)
                binding = sample_binding(rng, spec, om, zero_index=zero_index)
                worst = max(worst, evaluate_identity(spec, binding, om).relative)
    ok = generic.failures == 0 and worst < 1e-8
    return report(capsys, 3, ok, f"kossak-1 x200 generic, kossak-2/3 x6x50 on zero locus, max rel {worst:.2e} < 1e-8")


def criterion_4(capsys=None):
    results = [run_identity(i, 200, SEED, 1e-8) for i in ("riemann", "master")]
    ok = all(r.failures == 0 for r in results)
    return report(capsys, 4, ok, f"riemann and master x200, max rel {_worst(results):.2e} < 1e-8")


def criterion_5(capsys=None):
    results = [run_identity(f"appendix-A{i}", 50, SEED, 1e-8) for i in range(1, 16)]
    ok = all(r.failures == 0 for r in results)
    return report(capsys, 5, ok, f"appendix A-1..A-15 x50, max rel {_worst(results):.2e} < 1e-8")


def criterion_6(capsys=None):
    worst = 0.0
    for t in range(50):
        rng = trial_rng(SEED, "oracle", t)
        om = sample_moduli(rng)
        ch = CHARACTERISTICS[int(rng.integers(16))]
        u, v = sample_point(rng, om), sample_point(rng, om)
        R = truncation_radius(om, u, v, ch)
        worst = max(worst, abs(theta(ch, u, v, om) - brute_force_theta(ch, u, v, om, R + 8)))
    return report(capsys, 6, worst < 1e-12, f"fast vs brute force at R+8 on 50 inputs, max abs diff {worst:.2e} < 1e-12")


def criterion_7(capsys=None):
    rng = trial_rng(SEED, "structure", 0)
    checks = {}

    odd = 0.0
    for _ in range(10):
        om = sample_moduli(rng)
        odd = max([odd] + [abs(theta(ch, 0, 0, om)) for ch in ODD_CHARACTERISTICS])
    checks["odd zeros"] = (odd, 1e-10)

    swap = shift = 0.0
    for _ in range(5):
        om = sample_moduli(rng)
        u, v = sample_point(rng, om), sample_point(rng, om)
        for ch in CHARACTERISTICS:
            swap = max(swap, abs(theta(ch, u, v, om) - theta(ch.swapped(), v, u, om.swapped())))
            for p, q, r, s in itertools.product((0, 1), repeat=4):
                du = p / 2 + q * om.tau1 / 2 + s * om.tau12 / 2
                dv = r / 2 + s * om.tau2 / 2 + q * om.tau12 / 2
                direct = theta(ch, u + du, v + dv, om)
                shift = max(shift, abs(half_period_shifted_theta(ch, (p, q, r, s), u, v, om) - direct))
    checks["column swap"] = (swap, 1e-12)
    checks["shift path"] = (shift, 1e-10)

    phase = 0.0
    om = sample_moduli(rng)
    u, v = sample_point(rng, om), sample_point(rng, om)
    raws = list(itertools.product(range(-2, 4), repeat=4))
    for k in rng.choice(len(raws), size=60, replace=False):
        ch, ph = reduce_characteristic(*raws[k])
        lhs = brute_force_theta(raws[k], u, v, om, 14)
        phase = max(phase, abs(lhs - ph * brute_force_theta(ch, u, v, om, 14)))
    checks["reduction phase"] = (phase, 1e-12)

    split = 0.0
    for _ in range(5):
        t1 = complex(rng.uniform(-0.5, 0.5), rng.uniform(0.8, 2))
        t2 = complex(rng.uniform(-0.5, 0.5), rng.uniform(0.8, 2))
        om = make_period_matrix(t1, t2, 0, allow_nonpositive_tau12=True)
        u, v = sample_point(rng, om), sample_point(rng, om)
        for ch in CHARACTERISTICS:
            prod = genus1_theta(ch.a, ch.b, u, t1, 30) * genus1_theta(ch.c, ch.d, v, t2, 30)
            split = max(split, abs(theta(ch, u, v, om) - prod))
    checks["tau12=0 factorization"] = (split, 1e-10)

    ok = all(value < bound for value, bound in checks.values())
    detail = ", ".join(f"{name} {value:.1e}<{bound:.0e}" for name, (value, bound) in checks.items())
    return report(capsys, 7, ok, detail)


def criterion_8(capsys=None, workdir=None):
    import pathlib
    import tempfile

    workdir = pathlib.Path(workdir or tempfile.mkdtemp())
    paths = [workdir / "out1.json", workdir / "out2.json"]
    codes = []
    for path in paths:
        cmd = [sys.executable, "-m", "g2theta", "verify", "--family", "all", "--trials", "100",
               "--seed", "42", "--tol", "1e-7", "--json", str(path)]
        codes.append(subprocess.run(cmd, capture_output=True, text=True).returncode)
    same = all(p.exists() for p in paths) and filecmp.cmp(paths[0], paths[1], shallow=False)
    ok = codes == [0, 0] and same
    return report(capsys, 8, ok, f"verify all x100 seed 42: exit codes {codes}, byte-identical JSON {same}")


def criterion_9(capsys=None):
    fixed = builtin_identity("theta-add-1")
    printed = printed_identity("theta-add-1")
    squared = run_identity("theta-add-1", 200, SEED, 1e-8)
    printed_rel = []
    for t in range(200):
        rng = trial_rng(SEED, "typo", t)
        om = sample_moduli(rng)
        binding = sample_binding(rng, fixed, om)
        printed_rel.append(evaluate_identity(printed, binding, om).relative)
    printed_rel = np.array(printed_rel)
    median = float(np.median(printed_rel))
    share = float(np.mean(printed_rel > 1e-3))
    ok = squared.failures == 0 and median > 1e-3
    return report(
        capsys, 9, ok,
        f"squared form max rel {squared.max_rel:.2e} < 1e-8; printed form median rel {median:.2e} > 1e-3 "
        f"({share:.0%} of draws above 1e-3, min {printed_rel.min():.1e})",
    )


def test_criterion_1_theta_addition(capsys):
    assert criterion_1(capsys)


def test_criterion_2_f_addition(capsys):
    assert criterion_2(capsys)


def test_criterion_3_kossak(capsys):
    assert criterion_3(capsys)


def test_criterion_4_riemann_and_master(capsys):
    assert criterion_4(capsys)


def test_criterion_5_appendix(capsys):
    assert criterion_5(capsys)


def test_criterion_6_oracle_equivalence(capsys):
    assert criterion_6(capsys)


def test_criterion_7_structure(capsys):
    assert criterion_7(capsys)


def test_criterion_8_determinism(capsys, tmp_path):
    assert criterion_8(capsys, tmp_path)


def test_criterion_9_typo_regression(capsys):
    assert criterion_9(capsys)


if __name__ == "__main__":
    results = [fn() for fn in (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
                               criterion_6, criterion_7, criterion_8, criterion_9)]
    sys.exit(0 if all(results) else 1)
