"""Slow reference sums used to check the fast evaluator.

Nothing here imports the series code in :mod:`g2theta.core`; the exponent
is written out again term by term so that a transcription slip in one
place shows up as a disagreement.
"""
from __future__ import annotations

import cmath
import math

from .core import Characteristic, PeriodMatrix, as_characteristic

__all__ = ["brute_force_theta", "genus1_theta"]


def _entries(ch) -> tuple[int, int, int, int]:
    if isinstance(ch, (Characteristic, str)):
        ch = as_characteristic(ch)
        return ch.a, ch.c, ch.b, ch.d
    a, c, b, d = (int(k) for k in ch)
    return a, c, b, d


def brute_force_theta(
    ch: Characteristic | str | tuple[int, int, int, int],
    u: complex,
    v: complex,
    omega: PeriodMatrix,
    radius: int,
) -> complex:
    """Literal double sum over ``|m| <= radius``, ``|n| <= radius``.

    Terms are added in plain row order, ``m`` outer and ``n`` inner.
    A plain 4-tuple ``(a, c, b, d)`` of arbitrary integers is accepted
    as an unreduced characteristic.
    """
    a, c, b, d = _entries(ch)
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    t1, t2, t12 = omega.tau1, omega.tau2, omega.tau12
    total = 0j
    for m in range(-radius, radius + 1):
        p = m + a / 2
        for n in range(-radius, radius + 1):
            q = n + c / 2
            exponent = math.pi * 1j * (t1 * p**2 + t2 * q**2 + 2 * t12 * p * q)
            exponent += 2 * math.pi * 1j * (p * (u + b / 2) + q * (v + d / 2))
            total += cmath.exp(exponent)
    return total


def genus1_theta(a: int, b: int, u: complex, tau: complex, radius: int) -> complex:
    """One-variable theta ``sum exp(pi i tau (m + a/2)^2 + 2 pi i (m + a/2)(u + b/2))``."""
    if complex(tau).imag <= 0:
        raise ValueError("Im(tau) must be positive")
    total = 0j
    for m in range(-radius, radius + 1):
        p = m + a / 2
        total += cmath.exp(math.pi * 1j * tau * p * p + 2 * math.pi * 1j * p * (u + b / 2))
    return total
