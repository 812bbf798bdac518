"""Genus-2 theta functions with half-integer characteristics.

The series is

.. math::

    \\theta\\left[{a\\ c \\atop b\\ d}\\right](u, v)
        = \\sum_{m, n \\in \\mathbb{Z}} \\exp\\{\\pi i\\, x^T \\Omega x
          + 2 \\pi i\\, x^T (w + B)\\}

with ``x = (m + a/2, n + c/2)``, ``w = (u, v)`` and ``B = (b/2, d/2)``.
It is summed over the square window ``max(|m|, |n|) <= R`` where ``R`` comes
from a Gaussian tail bound, so the absolute truncation error is below the
requested tolerance.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "ThetaError",
    "NotConvergent",
    "NegativeTau12Im",
    "TolTooSmall",
    "PeriodMatrix",
    "Characteristic",
    "EvalOptions",
    "DEFAULT_OPTIONS",
    "MAX_RADIUS",
    "CHARACTERISTICS",
    "EVEN_CHARACTERISTICS",
    "ODD_CHARACTERISTICS",
    "make_period_matrix",
    "parity",
    "reduce_characteristic",
    "truncation_radius",
    "theta",
    "theta_many",
    "theta_with_scale",
    "half_period_shifted_theta",
    "as_characteristic",
]

MAX_RADIUS = 10_000


class ThetaError(ValueError):
    """Base class for evaluation and validation errors."""


class NotConvergent(ThetaError):
    """The imaginary part of the period matrix is not positive definite."""


class NegativeTau12Im(ThetaError):
    """``Im(tau12) <= 0``; only the ``Im(tau12) > 0`` convention is accepted."""


class TolTooSmall(ThetaError):
    """The tail bound would need a truncation radius above ``MAX_RADIUS``."""


@dataclass(frozen=True)
class PeriodMatrix:
    """Symmetric genus-2 period matrix ``[[tau1, tau12], [tau12, tau2]]``.

    Construction validates convergence, so every instance is usable.
    ``Im(tau12) <= 0`` is rejected unless ``allow_nonpositive_tau12`` is
    set; the series itself only needs a positive-definite imaginary part.
    """

    tau1: complex
    tau2: complex
    tau12: complex
    allow_nonpositive_tau12: bool = field(default=False, repr=False, compare=False)

    def __post_init__(self):
        for name in ("tau1", "tau2", "tau12"):
            value = complex(getattr(self, name))
            if not cmath.isfinite(value):
                raise NotConvergent(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)
        y1, y2, y12 = self.tau1.imag, self.tau2.imag, self.tau12.imag
        if y1 <= 0 or y2 <= 0 or y1 * y2 - y12 * y12 <= 0:
            raise NotConvergent(
                f"Im part not positive definite: Im(tau1)={y1!r}, "
                f"Im(tau2)={y2!r}, Im(tau12)={y12!r}"
            )
        if y12 <= 0 and not self.allow_nonpositive_tau12:
            raise NegativeTau12Im(f"Im(tau12) must be > 0, got {y12!r}")

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.tau1, self.tau12], [self.tau12, self.tau2]])

    @property
    def imag_matrix(self) -> np.ndarray:
        return self.matrix.imag

    @property
    def min_eigenvalue(self) -> float:
        """Smallest eigenvalue of the imaginary part."""
        y1, y2, y12 = self.tau1.imag, self.tau2.imag, self.tau12.imag
        half_trace = 0.5 * (y1 + y2)
        return half_trace - math.hypot(0.5 * (y1 - y2), y12)

    def swapped(self) -> "PeriodMatrix":
        """The matrix with ``tau1`` and ``tau2`` exchanged."""
        return PeriodMatrix(self.tau2, self.tau1, self.tau12, self.allow_nonpositive_tau12)


def make_period_matrix(
    tau1: complex, tau2: complex, tau12: complex, allow_nonpositive_tau12: bool = False
) -> PeriodMatrix:
    """Validate a modulus triple.

    ``allow_nonpositive_tau12=True`` admits ``Im(tau12) <= 0`` (for example
    the decoupled case ``tau12 = 0``) as long as the matrix converges.

    Raises
    ------
    NotConvergent
        If ``Im(tau1) <= 0``, ``Im(tau2) <= 0`` or the determinant of the
        imaginary part is not positive.
    NegativeTau12Im
        If the matrix converges but ``Im(tau12) <= 0``.
    """
    return PeriodMatrix(tau1, tau2, tau12, allow_nonpositive_tau12)


@dataclass(frozen=True, order=True)
class Characteristic:
    """Theta characteristic ``[a c; b d]`` with entries in ``{0, 1}``.

    The text form is the four digits ``"acbd"``: top row first, then the
    bottom row.
    """

    a: int
    c: int
    b: int
    d: int

    def __post_init__(self):
        for name in ("a", "c", "b", "d"):
            if getattr(self, name) not in (0, 1):
                raise ValueError(
                    f"characteristic digit out of range: {name}={getattr(self, name)!r}"
                )

    @classmethod
    def from_string(cls, text: str) -> "Characteristic":
        if len(text) != 4 or any(ch not in "0123456789" for ch in text):
            raise ValueError(f"characteristic must be four digits 'acbd', got {text!r}")
        if any(ch not in "01" for ch in text):
            raise ValueError(f"characteristic digit out of range in {text!r}")
        a, c, b, d = (int(ch) for ch in text)
        return cls(a, c, b, d)

    def __str__(self) -> str:
        return f"{self.a}{self.c}{self.b}{self.d}"

    @property
    def is_odd(self) -> bool:
        return (self.a * self.b + self.c * self.d) % 2 == 1

    def swapped(self) -> "Characteristic":
        """Exchange the two columns: ``[a c; b d] -> [c a; d b]``."""
        return Characteristic(self.c, self.a, self.d, self.b)


def as_characteristic(ch: Characteristic | str | Sequence[int]) -> Characteristic:
    if isinstance(ch, Characteristic):
        return ch
    if isinstance(ch, str):
        return Characteristic.from_string(ch)
    return Characteristic(*ch)


CHARACTERISTICS = tuple(
    Characteristic(a, c, b, d) for a in (0, 1) for c in (0, 1) for b in (0, 1) for d in (0, 1)
)
EVEN_CHARACTERISTICS = tuple(ch for ch in CHARACTERISTICS if not ch.is_odd)
ODD_CHARACTERISTICS = tuple(ch for ch in CHARACTERISTICS if ch.is_odd)


def parity(ch: Characteristic | str) -> str:
    """Return ``"odd"`` if ``(a*b + c*d)`` is odd, else ``"even"``."""
    return "odd" if as_characteristic(ch).is_odd else "even"


def reduce_characteristic(a: int, c: int, b: int, d: int) -> tuple[Characteristic, complex]:
    """Reduce integer characteristic entries mod 2.

    Returns ``(ch, phase)`` with ``theta[a c; b d] == phase * theta[ch]``.
    Shifting ``a`` or ``c`` by 2 only reindexes the sum.  Shifting ``b`` by
    ``2j`` multiplies every summand by ``exp(2 pi i j (m + a/2))``, i.e. by
    ``(-1)**(a*j)``; likewise ``d`` with ``c``.
    """
    jb, b0 = divmod(int(b), 2)
    jd, d0 = divmod(int(d), 2)
    sign = -1.0 if (int(a) * jb + int(c) * jd) % 2 else 1.0
    return Characteristic(int(a) % 2, int(c) % 2, b0, d0), complex(sign, 0.0)


@dataclass(frozen=True)
class EvalOptions:
    """Series evaluation options.

    ``tail_tolerance`` is an absolute bound on the discarded tail;
    ``radius_override`` forces a fixed window and skips the bound.
    """

    tail_tolerance: float = 1e-12
    radius_override: int | None = None

    def __post_init__(self):
        if not (0.0 < self.tail_tolerance < 1.0):
            raise ValueError(f"tail_tolerance must lie in (0, 1), got {self.tail_tolerance!r}")
        if self.radius_override is not None and self.radius_override < 0:
            raise ValueError("radius_override must be nonnegative")


DEFAULT_OPTIONS = EvalOptions()


def _tail_radius(lam: float, s: float, tol: float) -> int:
    # Shell k = max(|m|,|n|) holds 8k points, each with |x| >= k - 1/2, and
    # |term| <= g(|x|) = exp(-pi lam |x|^2 + 2 pi s |x|).  Once g is decreasing
    # the shell bounds t_k = 8k g(k - 1/2) have a decreasing ratio rho_k, so
    # sum_{k > R} t_k <= t_{R+1} / (1 - rho_{R+1}).
    k = np.arange(1, MAX_RADIUS + 2, dtype=float)
    r = k - 0.5
    log_t = np.log(8.0 * k) - math.pi * lam * r * r + 2.0 * math.pi * s * r
    log_rho = np.log1p(1.0 / k) - 2.0 * math.pi * lam * k + 2.0 * math.pi * s
    with np.errstate(over="ignore", divide="ignore"):
        valid = (r * lam >= s) & (log_rho < 0.0)
        log_tail = log_t - np.log(-np.expm1(np.minimum(log_rho, 0.0)))
    ok = valid & (log_tail < math.log(tol))
    hits = np.flatnonzero(ok)
    if hits.size == 0:
        raise TolTooSmall(
            f"tail bound needs radius > {MAX_RADIUS} (min eigenvalue {lam:.3e}, tol {tol:.1e})"
        )
    # ok[i] concerns the tail after shell k[i] - 1.
    return int(k[hits[0]]) - 1


def truncation_radius(
    omega: PeriodMatrix,
    u: complex,
    v: complex,
    ch: Characteristic | str | None = None,
    tol: float = 1e-12,
) -> int:
    """Smallest square-window radius whose discarded tail is provably below ``tol``.

    The bound uses the smallest eigenvalue of ``Im(Omega)`` and the norm of
    ``(Im u, Im v)``; the characteristic only shifts the lattice by a half
    and is already covered by the ``k - 1/2`` lower bound on ``|x|``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    s = math.hypot(complex(u).imag, complex(v).imag)
    return _tail_radius(omega.min_eigenvalue, s, tol)


@lru_cache(maxsize=64)
def _window(radius: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Lattice points of the square window ordered by shell, plus shell starts."""
    span = np.arange(-radius, radius + 1)
    m, n = np.meshgrid(span, span, indexing="ij")
    m = m.ravel()
    n = n.ravel()
    shell = np.maximum(np.abs(m), np.abs(n))
    order = np.lexsort((n, m, shell))
    m, n, shell = m[order], n[order], shell[order]
    starts = np.searchsorted(shell, np.arange(radius + 1))
    for arr in (m, n, starts):
        arr.setflags(write=False)
    return m.astype(float), n.astype(float), starts


def _radius_for(omega: PeriodMatrix, u: np.ndarray, v: np.ndarray, opts: EvalOptions) -> int:
    if opts.radius_override is not None:
        return int(opts.radius_override)
    s = float(np.max(np.hypot(np.imag(u), np.imag(v)))) if np.size(u) else 0.0
    return _tail_radius(omega.min_eigenvalue, s, opts.tail_tolerance)


def _series(chars: np.ndarray, u: np.ndarray, v: np.ndarray, omega: PeriodMatrix, radius: int):
    """Sum the series for a batch; ``chars`` has rows ``(a, c, b, d)``."""
    m, n, starts = _window(radius)
    x1 = m[None, :] + 0.5 * chars[:, 0:1]
    x2 = n[None, :] + 0.5 * chars[:, 1:2]
    w1 = u[:, None] + 0.5 * chars[:, 2:3]
    w2 = v[:, None] + 0.5 * chars[:, 3:4]
    quad = omega.tau1 * x1 * x1 + omega.tau2 * x2 * x2 + 2.0 * omega.tau12 * x1 * x2
    terms = np.exp(1j * math.pi * quad + 2j * math.pi * (x1 * w1 + x2 * w2))
    shells = np.add.reduceat(terms, starts, axis=1)
    total = np.zeros(len(chars), dtype=complex)
    for k in range(shells.shape[1]):
        total += shells[:, k]
    return total, terms


def theta_many(
    chars: Iterable[Characteristic | str],
    us: Sequence[complex],
    vs: Sequence[complex],
    omega: PeriodMatrix,
    opts: EvalOptions = DEFAULT_OPTIONS,
    with_scale: bool = False,
):
    """Evaluate a batch of thetas sharing one period matrix.

    A single window, large enough for the worst argument in the batch, is
    used for all entries.  With ``with_scale`` the sums of summand moduli
    are returned as a second array.
    """
    table = np.array([[ch.a, ch.c, ch.b, ch.d] for ch in map(as_characteristic, chars)], dtype=float)
    u = np.asarray(us, dtype=complex).reshape(-1)
    v = np.asarray(vs, dtype=complex).reshape(-1)
    if not (len(table) == len(u) == len(v)):
        raise ValueError("chars, us and vs must have equal length")
    if len(table) == 0:
        empty = np.zeros(0, dtype=complex)
        return (empty, empty.real) if with_scale else empty
    if not (np.all(np.isfinite(u)) and np.all(np.isfinite(v))):
        raise ValueError("theta arguments must be finite")
    radius = _radius_for(omega, u, v, opts)
    total, terms = _series(table, u, v, omega, radius)
    if with_scale:
        return total, np.abs(terms).sum(axis=1)
    return total


def theta(
    ch: Characteristic | str,
    u: complex,
    v: complex,
    omega: PeriodMatrix,
    opts: EvalOptions = DEFAULT_OPTIONS,
) -> complex:
    """Theta function with characteristic ``ch`` at ``(u, v)``.

    Examples
    --------
    >>> omega = make_period_matrix(10j, 10j, 1j)
    >>> abs(theta("0000", 0, 0, omega) - 1) < 1e-12
    True
    >>> abs(theta("1010", 0, 0, omega)) < 1e-12
    True
    """
    return complex(theta_many([ch], [u], [v], omega, opts)[0])


def theta_with_scale(
    ch: Characteristic | str,
    u: complex,
    v: complex,
    omega: PeriodMatrix,
    opts: EvalOptions = DEFAULT_OPTIONS,
) -> tuple[complex, float]:
    """Theta value together with the sum of summand moduli.

    A value that is tiny relative to its scale is numerically zero.
    """
    values, scales = theta_many([ch], [u], [v], omega, opts, with_scale=True)
    return complex(values[0]), float(scales[0])


def half_period_shifted_theta(
    ch: Characteristic | str,
    shift: tuple[int, int, int, int],
    u: complex,
    v: complex,
    omega: PeriodMatrix,
    opts: EvalOptions = DEFAULT_OPTIONS,
) -> complex:
    """``theta[ch](u + du, v + dv)`` for a half-period shift, via the characteristic.

    ``shift = (p, q, r, s)`` means::

        du = p/2 + q*tau1/2 + s*tau12/2
        dv = r/2 + s*tau2/2 + q*tau12/2

    Completing the square moves the shift into the characteristic
    ``[a+q, c+s; b+p, d+r]`` at the unshifted argument, times
    ``exp(-pi i Q.Omega.Q/4 - pi i (q (u + b/2 + p/2) + s (v + d/2 + r/2)))``
    with ``Q = (q, s)``.  The shifted argument is never formed.
    """
    ch = as_characteristic(ch)
    p, q, r, s = (int(k) for k in shift)
    u = complex(u)
    v = complex(v)
    reduced, phase = reduce_characteristic(ch.a + q, ch.c + s, ch.b + p, ch.d + r)
    quad = q * q * omega.tau1 + 2 * q * s * omega.tau12 + s * s * omega.tau2
    linear = q * (u + 0.5 * ch.b + 0.5 * p) + s * (v + 0.5 * ch.d + 0.5 * r)
    prefactor = cmath.exp(-0.25j * math.pi * quad - 1j * math.pi * linear)
    return phase * prefactor * theta(reduced, u, v, omega, opts)
