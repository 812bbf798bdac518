import cmath

import numpy as np
import pytest

from g2theta import (
    B0,
    CHARACTERISTICS,
    DenominatorNearZero,
    F,
    PoleEncountered,
    builtin_identity,
    evaluate_sides,
    f_addition_residual,
    f_addition_rhs,
    f_addition_spec,
    theta,
)
from g2theta.hyperelliptic import _B0_TERMS
from conftest import random_omega, random_point

TARGETS = {
    1: "0001", 2: "0010", 3: "1001", 4: "0110", 5: "0100", 6: "1000", 7: "1100", 8: "1111",
    9: "0000", 10: "1011", 11: "1010", 12: "1110", 13: "0111", 14: "0101", 15: "1101",
}


def _points(rng, omega, k=4):
    return [random_point(rng, omega) for _ in range(k)]


def _newton_zero(omega, v, u0):
    """Solve theta[0011](u, v) = 0 for u by Newton with a central difference."""
    u, h = u0, 1e-6
    for _ in range(30):
        f = theta("0011", u, v, omega)
        df = (theta("0011", u + h, v, omega) - theta("0011", u - h, v, omega)) / (2 * h)
        step = f / df
        u -= step
        if abs(step) < 1e-15:
            break
    return u


class TestF:
    def test_denominator_is_one(self, rng, omega):
        y, z = _points(rng, omega, 2)
        assert F("0011", y, z, omega) == 1

    def test_odd_at_origin(self, omega):
        assert abs(F("1010", 0, 0, omega)) < 1e-12

    def test_exact_zero_of_denominator(self, omega):
        with pytest.raises(DenominatorNearZero):
            F("0000", omega.tau1 / 2, omega.tau12 / 2, omega)

    def test_newton_zero_of_denominator(self, omega):
        # coarse grid start near a known zero, then polish off the half-period
        v = omega.tau12 / 2 + 0.05
        grid = [omega.tau1 / 2 + dx + 1j * dy for dx in np.linspace(-0.1, 0.1, 5) for dy in np.linspace(-0.1, 0.1, 5)]
        u0 = min(grid, key=lambda u: abs(theta("0011", u, v, omega)))
        u = _newton_zero(omega, v, u0)
        assert abs(theta("0011", u, v, omega)) < 1e-13
        with pytest.raises(DenominatorNearZero):
            F("1001", u, v, omega)

    def test_ratio(self, rng, omega):
        y, z = _points(rng, omega, 2)
        assert F("1101", y, z, omega) == pytest.approx(theta("1101", y, z, omega) / theta("0011", y, z, omega), rel=1e-14)


class TestB0:
    def test_shared_shape(self):
        assert len(_B0_TERMS) == 4
        for i in range(1, 16):
            # one B0 implementation serves every formula
            assert f_addition_spec(i).equation == f"3-{i + 1}"

    def test_second_point_at_origin(self, rng, omega):
        y, z = _points(rng, omega, 2)
        assert abs(B0(y, z, 0, 0, omega) - 1) < 1e-12

    def test_symmetric(self, rng, omega):
        y, z, y2, z2 = _points(rng, omega)
        assert abs(B0(y, z, y2, z2, omega) - B0(y2, z2, y, z, omega)) < 1e-12

    def test_matches_theta_ratio(self, rng):
        for _ in range(5):
            om = random_omega(rng)
            y, z, y2, z2 = _points(rng, om)
            t = lambda u, v: theta("0011", u, v, om)
            expected = t(y + y2, z + z2) * t(y - y2, z - z2) * t(0, 0) ** 2 / (t(y, z) ** 2 * t(y2, z2) ** 2)
            assert abs(B0(y, z, y2, z2, om) - expected) < 1e-9 * abs(expected)


class TestTables:
    def test_target_map(self):
        assert {i: str(f_addition_spec(i).target) for i in range(1, 16)} == TARGETS

    def test_shapes(self):
        for i in range(1, 16):
            spec = f_addition_spec(i)
            assert len(spec.numerator) == 4
            assert len(spec.constants) == (1 if i <= 9 else 2)

    def test_unknown_index(self):
        with pytest.raises(KeyError):
            f_addition_spec(16)


class TestAddition:
    @pytest.mark.parametrize("index", range(1, 16))
    def test_formula(self, rng, index):
        for _ in range(10):
            om = random_omega(rng)
            y, z, y2, z2 = _points(rng, om)
            assert f_addition_residual(index, y, z, y2, z2, om).relative < 1e-7

    @pytest.mark.parametrize("index", [1, 10])
    def test_rhs_predicts_sum(self, rng, omega, index):
        y, z, y2, z2 = _points(rng, omega)
        direct = F(TARGETS[index], y + y2, z + z2, omega)
        assert abs(f_addition_rhs(index, y, z, y2, z2, omega) - direct) < 1e-7 * abs(direct)

    def test_formula_9_collapses(self, rng, omega):
        y, z = _points(rng, omega, 2)
        assert abs(f_addition_rhs(9, y, z, 0, 0, omega) - F("0000", y, z, omega)) < 1e-12

    @pytest.mark.parametrize("index", range(1, 10))
    def test_symmetric_formulas(self, rng, omega, index):
        y, z, y2, z2 = _points(rng, omega)
        a = f_addition_rhs(index, y, z, y2, z2, omega)
        b = f_addition_rhs(index, y2, z2, y, z, omega)
        assert abs(a - b) < 1e-12 * abs(a)

    def test_pole_at_b0_zero(self, rng, omega):
        # B0 vanishes exactly when theta[0011](y - y', z - z') does
        y, z = _points(rng, omega, 2)
        y2, z2 = y - omega.tau1 / 2, z - omega.tau12 / 2
        with pytest.raises(PoleEncountered):
            f_addition_residual(1, y, z, y2, z2, omega)

    def test_guard_is_configurable(self, rng, omega):
        y, z, y2, z2 = _points(rng, omega)
        with pytest.raises((PoleEncountered, DenominatorNearZero)):
            f_addition_rhs(3, y, z, y2, z2, omega, pole_guard=1e6)

    @pytest.mark.parametrize("index", range(1, 16))
    def test_ratio_consistency(self, rng, index):
        # F-level prediction against the quotient of two theta-level formulas
        om = random_omega(rng)
        y, z, y2, z2 = _points(rng, om)
        binding = {"y": y, "z": z, "y'": y2, "z'": z2}
        child = builtin_identity(f"theta-add-{index + 1}")
        base = builtin_identity("theta-add-1")
        child_rhs = evaluate_sides(child, binding, om)[1].sum()
        base_rhs = evaluate_sides(base, binding, om)[1].sum()
        consts = [f for f in child.lhs[0].factors if str(f.u) == "0"]
        c = np.prod([theta(f.ch, 0, 0, om) for f in consts]) / theta("0011", 0, 0, om) ** 2
        predicted = child_rhs / base_rhs / c
        assert abs(f_addition_rhs(index, y, z, y2, z2, om) - predicted) < 1e-7 * abs(predicted)
