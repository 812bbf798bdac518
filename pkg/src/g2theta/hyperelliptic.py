"""Genus-2 hyperelliptic functions and their addition formulas.

``F[ch](y, z) = theta[ch](y, z) / theta[0011](y, z)``.  Each of the fifteen
addition formulas predicts ``F[target](y + y', z + z')`` as
``A_i / (B0 * B_i)``, where ``A_i`` is a signed sum of F-products at
``(y, z)`` and ``(y', z')``, ``B0`` is a denominator shared by all fifteen
formulas, and ``B_i`` is a product of F-constants at the origin.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import catalog
from .core import (
    DEFAULT_OPTIONS,
    Characteristic,
    EvalOptions,
    PeriodMatrix,
    ThetaError,
    as_characteristic,
    theta_many,
)
from .identities import Residual, Side, parse_terms

__all__ = [
    "POLE_GUARD",
    "DENOMINATOR",
    "DenominatorNearZero",
    "PoleEncountered",
    "FAdditionSpec",
    "f_addition_spec",
    "F",
    "B0",
    "f_addition_rhs",
    "f_addition_residual",
]

POLE_GUARD = 1e-10
DENOMINATOR = Characteristic(0, 0, 1, 1)


class DenominatorNearZero(ThetaError):
    """``theta[0011]`` is numerically zero at the requested point."""


class PoleEncountered(ThetaError):
    """``B0`` or ``B_i`` is numerically zero, so the formula has a pole."""


@dataclass(frozen=True)
class FAdditionSpec:
    index: int
    target: Characteristic
    numerator: Side
    constants: tuple[Characteristic, ...]
    theta_identity: str
    equation: str

    def __post_init__(self):
        if len(self.numerator) != 4 or not 1 <= len(self.constants) <= 2:
            raise ValueError(f"malformed F-addition table {self.index}")


_B0_TERMS: Side = parse_terms(catalog.F_DENOMINATOR_B0)[0]
_specs: dict[int, FAdditionSpec] = {}


def f_addition_spec(index: int) -> FAdditionSpec:
    """Tabulated addition formula ``index`` (1..15)."""
    if index not in catalog.F_ADDITIONS:
        raise KeyError(f"no F-addition formula {index!r}; expected 1..15")
    if index not in _specs:
        target, constants, numerator = catalog.F_ADDITIONS[index]
        _specs[index] = FAdditionSpec(
            index=index,
            target=Characteristic.from_string(target),
            numerator=parse_terms(numerator)[0],
            constants=tuple(Characteristic.from_string(c) for c in constants),
            theta_identity=f"theta-add-{index + 1}",
            equation=f"3-{index + 1}",
        )
    return _specs[index]


class _FTable:
    """F-values at a handful of points, computed in one batch."""

    def __init__(self, requests, omega, opts, pole_guard):
        keys = list(dict.fromkeys(requests))
        points = list(dict.fromkeys(point for _, point in keys))
        chars = [ch for ch, _ in keys] + [DENOMINATOR] * len(points)
        us = [p[0] for _, p in keys] + [p[0] for p in points]
        vs = [p[1] for _, p in keys] + [p[1] for p in points]
        values, scales = theta_many(chars, us, vs, omega, opts, with_scale=True)
        den = dict(zip(points, zip(values[len(keys):], scales[len(keys):])))
        self.values = {}
        for key, num in zip(keys, values[: len(keys)]):
            d, d_scale = den[key[1]]
            if abs(d) < pole_guard * max(abs(num), d_scale):
                raise DenominatorNearZero(
                    f"|theta[0011]{key[1]}| = {abs(d):.3e} below guard"
                )
            self.values[key] = complex(num / d)

    def __getitem__(self, key) -> complex:
        return self.values[key]


def F(
    ch: Characteristic | str,
    y: complex,
    z: complex,
    omega: PeriodMatrix,
    opts: EvalOptions = DEFAULT_OPTIONS,
    pole_guard: float = POLE_GUARD,
) -> complex:
    """``theta[ch](y, z) / theta[0011](y, z)``.

    Raises :class:`DenominatorNearZero` when ``|theta[0011](y, z)|`` is
    below ``pole_guard`` times the larger of the numerator modulus and the
    denominator's summand scale.
    """
    key = (as_characteristic(ch), (complex(y), complex(z)))
    return _FTable([key], omega, opts, pole_guard)[key]


def _product(term, table, points) -> complex:
    value = complex(term.coeff)
    for f in term.factors:
        value *= table[(f.ch, points[(str(f.u), str(f.v))])]
    return value


def _points(y, z, y2, z2):
    return {("y", "z"): (complex(y), complex(z)), ("y'", "z'"): (complex(y2), complex(z2)), ("0", "0"): (0j, 0j)}


def _requests(terms, points):
    return [(f.ch, points[(str(f.u), str(f.v))]) for t in terms for f in t.factors]


def _b0_value(table, points, pole_guard) -> complex:
    parts = [_product(t, table, points) for t in _B0_TERMS]
    value = sum(parts)
    if abs(value) < pole_guard * max(abs(p) for p in parts):
        raise PoleEncountered(f"|B0| = {abs(value):.3e} below guard")
    return value


def B0(y, z, y2, z2, omega: PeriodMatrix, opts: EvalOptions = DEFAULT_OPTIONS,
       pole_guard: float = POLE_GUARD) -> complex:
    """Shared denominator ``1 - F1011^2 F1011'^2 - F0101^2 F0101'^2 + F1101^2 F1101'^2``.

    Primes mark evaluation at ``(y2, z2)``.
    """
    points = _points(y, z, y2, z2)
    table = _FTable(_requests(_B0_TERMS, points), omega, opts, pole_guard)
    parts = [_product(t, table, points) for t in _B0_TERMS]
    return complex(sum(parts))


def _evaluate(index, y, z, y2, z2, omega, opts, pole_guard, with_direct):
    spec = f_addition_spec(index)
    points = _points(y, z, y2, z2)
    requests = _requests(spec.numerator, points) + _requests(_B0_TERMS, points)
    requests += [(c, points[("0", "0")]) for c in spec.constants]
    target_point = (complex(y) + complex(y2), complex(z) + complex(z2))
    if with_direct:
        requests.append((spec.target, target_point))
    table = _FTable(requests, omega, opts, pole_guard)

    b0 = _b0_value(table, points, pole_guard)
    bi = complex(np.prod([table[(c, points[("0", "0")])] for c in spec.constants]))
    if abs(bi) < pole_guard:
        raise PoleEncountered(f"|B_{index}| = {abs(bi):.3e} below guard")
    parts = [_product(t, table, points) for t in spec.numerator]
    denom = b0 * bi
    rhs = sum(parts) / denom
    direct = table[(spec.target, target_point)] if with_direct else None
    return rhs, [p / denom for p in parts], direct


def f_addition_rhs(index: int, y, z, y2, z2, omega: PeriodMatrix,
                   opts: EvalOptions = DEFAULT_OPTIONS, pole_guard: float = POLE_GUARD) -> complex:
    """Predicted ``F[target](y + y2, z + z2)`` from addition formula ``index``."""
    rhs, _, _ = _evaluate(index, y, z, y2, z2, omega, opts, pole_guard, False)
    return complex(rhs)


def f_addition_residual(index: int, y, z, y2, z2, omega: PeriodMatrix,
                        opts: EvalOptions = DEFAULT_OPTIONS,
                        pole_guard: float = POLE_GUARD) -> Residual:
    """Prediction versus direct evaluation at the summed point.

    The scale is the largest of the direct value and the individual
    numerator terms divided by ``B0 * B_i``.
    """
    rhs, parts, direct = _evaluate(index, y, z, y2, z2, omega, opts, pole_guard, True)
    scale = max([abs(direct)] + [abs(p) for p in parts])
    return Residual(float(abs(rhs - direct)), float(scale))
