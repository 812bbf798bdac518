"""Seeded verification runs over the identity tables.

Every trial draws its period matrix and binding from a PCG64 substream
keyed by ``(seed, crc32(identity id), trial index)``.  A report is
therefore a pure function of the configuration, and adding identities
never perturbs the streams of existing ones.
"""
from __future__ import annotations

import json
import math
import zlib
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .core import EvalOptions, PeriodMatrix, ThetaError, make_period_matrix
from .hyperelliptic import f_addition_residual, f_addition_spec
from .identities import (
    FAMILIES as THETA_FAMILIES,
    IdentitySpec,
    builtin_identity,
    evaluate_identity,
    odd_half_periods,
)

__all__ = [
    "FAMILY_NAMES",
    "InvalidConfig",
    "SuiteConfig",
    "IdentityResult",
    "Report",
    "family_ids",
    "trial_rng",
    "sample_moduli",
    "sample_point",
    "sample_binding",
    "run_identity",
    "run_suite",
]

FAMILY_NAMES = ("riemann", "master", "kossak", "theta-addition", "f-addition", "appendix")
F_ADDITION_IDS = tuple(f"f-add-{i}" for i in range(1, 16))

IM_DIAG = (0.8, 2.0)
RE_RANGE = (-0.5, 0.5)
COUPLING = 0.5
POINT_RE = 1.0
POINT_IM_FRACTION = 0.25

MAX_ATTEMPTS = 50
RESAMPLE_LIMIT = 0.20


class InvalidConfig(ValueError):
    pass


@dataclass(frozen=True)
class SuiteConfig:
    families: tuple[str, ...] = FAMILY_NAMES
    trials: int = 100
    seed: int = 0
    tol: float = 1e-7
    tail_tolerance: float = 1e-12
    family_tol: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self):
        families = tuple(self.families)
        if not families:
            raise InvalidConfig("no families requested")
        unknown = sorted(set(families) - set(FAMILY_NAMES))
        if unknown:
            raise InvalidConfig(f"unknown families {unknown}; choose from {list(FAMILY_NAMES)}")
        if isinstance(self.trials, bool) or not isinstance(self.trials, (int, np.integer)) or self.trials < 1:
            raise InvalidConfig(f"trials must be a positive integer, got {self.trials!r}")
        if not 0 <= int(self.seed) < 2**64:
            raise InvalidConfig("seed must be an unsigned 64-bit integer")
        for name, value in [("tol", self.tol), ("tail_tolerance", self.tail_tolerance)] + [
            (f"tol[{k}]", v) for k, v in dict(self.family_tol).items()
        ]:
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
                raise InvalidConfig(f"{name} must be a positive number, got {value!r}")
        bad = sorted(set(dict(self.family_tol)) - set(FAMILY_NAMES))
        if bad:
            raise InvalidConfig(f"tolerance override for unknown families {bad}")
        # canonical order keeps the serialized config independent of input order
        object.__setattr__(self, "families", tuple(f for f in FAMILY_NAMES if f in families))
        object.__setattr__(self, "family_tol", dict(sorted(dict(self.family_tol).items())))

    def tolerance(self, family: str) -> float:
        return float(self.family_tol.get(family, self.tol))

    def as_dict(self) -> dict:
        return {
            "families": list(self.families),
            "trials": int(self.trials),
            "seed": int(self.seed),
            "tol": float(self.tol),
            "tail_tolerance": float(self.tail_tolerance),
            "family_tol": {k: float(v) for k, v in self.family_tol.items()},
        }


@dataclass(frozen=True)
class IdentityResult:
    id: str
    paper_eq: str
    trials: int
    max_rel: float
    mean_rel: float
    failures: int
    resamples: int

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "paper_eq": self.paper_eq,
            "trials": self.trials,
            "max_rel": self.max_rel,
            "mean_rel": self.mean_rel,
            "failures": self.failures,
            "resamples": self.resamples,
        }


@dataclass(frozen=True)
class Report:
    config: SuiteConfig
    results: tuple[IdentityResult, ...]

    @property
    def resample_limit_exceeded(self) -> bool:
        return any(r.resamples > RESAMPLE_LIMIT * r.trials for r in self.results)

    @property
    def passed(self) -> bool:
        return all(r.failures == 0 for r in self.results) and not self.resample_limit_exceeded

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def as_dict(self) -> dict:
        return {
            "config": self.config.as_dict(),
            "results": [r.as_dict() for r in self.results],
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2) + "\n"

    def summary(self) -> str:
        lines = [f"{'id':<14} {'eq':>6} {'trials':>6} {'max_rel':>10} {'mean_rel':>10} {'fail':>5} {'resmp':>5}"]
        for r in self.results:
            lines.append(
                f"{r.id:<14} {r.paper_eq:>6} {r.trials:>6} {r.max_rel:>10.2e} "
                f"{r.mean_rel:>10.2e} {r.failures:>5} {r.resamples:>5}"
            )
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines)


def family_ids(family: str) -> tuple[str, ...]:
    if family == "f-addition":
        return F_ADDITION_IDS
    if family in THETA_FAMILIES:
        return THETA_FAMILIES[family]
    raise InvalidConfig(f"unknown family {family!r}")


def trial_rng(seed: int, identity_id: str, trial: int) -> np.random.Generator:
    """Independent PCG64 stream for one trial of one identity."""
    ss = np.random.SeedSequence(int(seed), spawn_key=(zlib.crc32(identity_id.encode()), int(trial)))
    return np.random.Generator(np.random.PCG64(ss))


def sample_moduli(rng: np.random.Generator) -> PeriodMatrix:
    """Uniform draw from the default moduli box.

    ``Im tau12`` lies in ``(0, sqrt(Im tau1 Im tau2) / 2]``, so the
    imaginary part keeps at least three quarters of its determinant.
    """
    im1, im2 = rng.uniform(*IM_DIAG, size=2)
    re1, re2, re12 = rng.uniform(*RE_RANGE, size=3)
    im12 = COUPLING * math.sqrt(im1 * im2) * (1.0 - rng.random())
    return make_period_matrix(complex(re1, im1), complex(re2, im2), complex(re12, im12))


def sample_point(rng: np.random.Generator, omega: PeriodMatrix) -> complex:
    im_max = POINT_IM_FRACTION * min(omega.tau1.imag, omega.tau2.imag)
    return complex(rng.uniform(-POINT_RE, POINT_RE), rng.uniform(-im_max, im_max))


def sample_binding(
    rng: np.random.Generator,
    spec: IdentitySpec,
    omega: PeriodMatrix,
    zero_index: int | None = None,
) -> dict[str, complex]:
    """Draw every free symbol of ``spec`` from the point box.

    Relations restricted to the zero set of ``theta[0000]`` get ``(alpha,
    beta)`` from :func:`odd_half_periods`, chosen uniformly unless
    ``zero_index`` pins it.
    """
    binding = {}
    for name in sorted(spec.free_symbols):
        binding[name] = sample_point(rng, omega)
    if spec.preconditions:
        if zero_index is None:
            zero_index = int(rng.integers(6))
        binding["alpha"], binding["beta"] = odd_half_periods(omega)[zero_index]
    return binding


def _trial(identity_id: str, rng, opts: EvalOptions) -> float:
    omega = sample_moduli(rng)
    if identity_id.startswith("f-add-"):
        index = int(identity_id.rsplit("-", 1)[1])
        y, z, y2, z2 = (sample_point(rng, omega) for _ in range(4))
        return f_addition_residual(index, y, z, y2, z2, omega, opts).relative
    spec = builtin_identity(identity_id)
    return evaluate_identity(spec, sample_binding(rng, spec, omega), omega, opts).relative


def equation_label(identity_id: str) -> str:
    if identity_id.startswith("f-add-"):
        return f_addition_spec(int(identity_id.rsplit("-", 1)[1])).equation
    return builtin_identity(identity_id).equation


def run_identity(identity_id: str, trials: int, seed: int, tol: float,
                 opts: EvalOptions = EvalOptions()) -> IdentityResult:
    """Run ``trials`` seeded residual checks of one identity.

    A guard error (pole, vanishing denominator, unmet precondition, or a
    tolerance the truncation cannot reach) discards the draw and continues
    the same stream; each discard counts as a resample.
    """
    residuals = []
    resamples = 0
    for t in range(trials):
        rng = trial_rng(seed, identity_id, t)
        for _ in range(MAX_ATTEMPTS):
            try:
                residuals.append(_trial(identity_id, rng, opts))
                break
            except ThetaError:
                resamples += 1
        else:
            residuals.append(math.inf)
    rel = np.array(residuals)
    return IdentityResult(
        id=identity_id,
        paper_eq=equation_label(identity_id),
        trials=trials,
        max_rel=float(rel.max()),
        mean_rel=float(rel.mean()),
        failures=int(np.count_nonzero(~(rel <= tol))),
        resamples=resamples,
    )


def run_suite(config: SuiteConfig) -> Report:
    opts = EvalOptions(tail_tolerance=config.tail_tolerance)
    results = []
    for family in config.families:
        tol = config.tolerance(family)
        for identity_id in family_ids(family):
            results.append(run_identity(identity_id, config.trials, config.seed, tol, opts))
    return Report(config, tuple(results))
