"""Theta identities as data, and their numerical residuals.

An identity is a chain of equal expressions; each expression is a signed
sum of products of at most four theta factors with affine arguments.
:func:`builtin_identity` builds them from the tables in
:mod:`g2theta.catalog`, and :func:`evaluate_identity` measures how well a
binding of the free symbols satisfies one.
"""
from __future__ import annotations

import re
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import catalog
from .argexpr import SWAP, ArgExpr, parse_arg
from .core import (
    DEFAULT_OPTIONS,
    Characteristic,
    EvalOptions,
    PeriodMatrix,
    ThetaError,
    as_characteristic,
    theta_many,
)

__all__ = [
    "Factor",
    "Term",
    "IdentitySpec",
    "Residual",
    "UnknownIdentity",
    "PreconditionViolated",
    "IDENTITY_IDS",
    "FAMILIES",
    "tilde_transform",
    "parse_terms",
    "builtin_identity",
    "printed_identity",
    "evaluate_identity",
    "evaluate_sides",
    "odd_half_periods",
    "swap_columns",
    "swap_binding",
    "addition_substitution",
    "export_catalog",
]

PRECONDITION_TOLERANCE = 1e-8


class UnknownIdentity(KeyError):
    pass


class PreconditionViolated(ThetaError):
    """A factor required to vanish does not."""

    def __init__(self, ch: Characteristic, value: complex):
        super().__init__(f"theta[{ch}] = {value!r} at the precondition point, expected 0")
        self.characteristic = ch
        self.value = value


@dataclass(frozen=True)
class Factor:
    ch: Characteristic
    u: ArgExpr
    v: ArgExpr

    def __str__(self) -> str:
        return f"{self.ch}({self.u},{self.v})"


@dataclass(frozen=True)
class Term:
    """``coeff * prod(factors)``; ``coeff`` is +-1 except in a few appendix steps."""

    coeff: int
    factors: tuple[Factor, ...]

    def __post_init__(self):
        if len(self.factors) > 4:
            raise ValueError("a term has at most four factors")


Side = tuple[Term, ...]


@dataclass(frozen=True)
class IdentitySpec:
    """A chain ``sides[0] == sides[1] == ...`` of theta expressions.

    ``preconditions`` lists factors that must vanish for the relation to
    hold (the zero set of ``theta[0000](alpha, beta)``).
    """

    id: str
    equation: str
    sides: tuple[Side, ...]
    preconditions: tuple[Factor, ...] = ()
    free_symbols: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        if len(self.sides) < 2:
            raise ValueError("an identity needs at least two sides")
        used = set()
        for factor in self.factors():
            used |= factor.u.symbols | factor.v.symbols
        for factor in self.preconditions:
            used |= factor.u.symbols | factor.v.symbols
        if not used <= self.free_symbols:
            raise ValueError(f"{self.id}: symbols {sorted(used - self.free_symbols)} not declared")

    @property
    def lhs(self) -> Side:
        return self.sides[0]

    @property
    def rhs(self) -> Side:
        return self.sides[1]

    def factors(self) -> Iterable[Factor]:
        for side in self.sides:
            for term in side:
                yield from term.factors

    def to_text(self) -> str:
        """Serialize in the table syntax; ``parse_terms`` reads it back."""
        return "\n".join(
            ("= " if k else "") + _side_text(side) for k, side in enumerate(self.sides)
        )


def _term_text(term: Term, first: bool) -> str:
    sign = "-" if term.coeff < 0 else ("" if first else "+")
    mag = abs(term.coeff)
    parts = []
    k = 0
    fs = term.factors
    while k < len(fs):
        if k + 1 < len(fs) and fs[k + 1] == fs[k]:
            parts.append(f"{fs[k].ch}^2({fs[k].u},{fs[k].v})")
            k += 2
        else:
            parts.append(str(fs[k]))
            k += 1
    if mag != 1 or not parts:
        parts.insert(0, str(mag))
    return (sign + " " if sign else "") + " ".join(parts)


def _side_text(side: Side) -> str:
    if not side:
        return "0"
    return "\n".join(_term_text(t, k == 0) for k, t in enumerate(side))


@dataclass(frozen=True)
class Residual:
    """``relative = absolute / max(scale, 1e-300)``; ``scale`` is the largest term modulus."""

    absolute: float
    scale: float

    @property
    def relative(self) -> float:
        return self.absolute / max(self.scale, 1e-300)


_TOKEN = re.compile(r"\s*(?:(=)|([+-])|(\d{4})(\^2)?\(([^()]*)\)|(\d+))")


def parse_terms(text: str) -> tuple[Side, ...]:
    """Parse the table syntax into sides (see :mod:`g2theta.catalog`)."""
    sides: list[list[Term]] = [[]]
    coeff = None
    factors: list[Factor] = []
    sign = 1
    pending = False

    def flush():
        nonlocal coeff, factors, sign, pending
        if pending:
            if coeff == 0 and not factors:
                pass  # an explicit empty side
            else:
                sides[-1].append(Term(sign * (1 if coeff is None else coeff), tuple(factors)))
        coeff, factors, sign, pending = None, [], 1, False

    pos = 0
    src = text.strip()
    while pos < len(src):
        match = _TOKEN.match(src, pos)
        if not match:
            raise ValueError(f"cannot parse identity text at {src[pos:pos + 30]!r}")
        eq, sgn, ch, sq, args, num = match.groups()
        if eq:
            flush()
            sides.append([])
        elif sgn:
            flush()
            sign = -1 if sgn == "-" else 1
        elif ch:
            u_text, v_text = args.split(",")
            factor = Factor(Characteristic.from_string(ch), parse_arg(u_text), parse_arg(v_text))
            factors.extend([factor, factor] if sq else [factor])
            pending = True
        else:
            if factors:
                raise ValueError("a numeric coefficient must precede the factors")
            coeff = int(num)
            pending = True
        pos = match.end()
    flush()
    return tuple(tuple(side) for side in sides)


def tilde_transform(u: Sequence, v: Sequence):
    """Half-Hadamard transform of the four argument pairs.

    ``u~1 = (u1+u2+u3+u4)/2``, ``u~2 = (u1+u2-u3-u4)/2``,
    ``u~3 = (u1-u2+u3-u4)/2``, ``u~4 = (u1-u2-u3+u4)/2``, and the same for
    ``v``.  Works for numbers and for :class:`ArgExpr`; it is an involution.
    """
    if len(u) != 4 or len(v) != 4:
        raise ValueError("tilde_transform needs four u and four v values")
    signs = ((1, 1, 1, 1), (1, 1, -1, -1), (1, -1, 1, -1), (1, -1, -1, 1))

    def mix(vals):
        out = []
        for row in signs:
            if isinstance(vals[0], ArgExpr):
                acc = ArgExpr()
                for s, x in zip(row, vals):
                    acc = acc + x.scale(s)
                out.append(acc.scale(Fraction(1, 2)))
            else:
                out.append(sum(s * x for s, x in zip(row, vals)) / 2)
        return tuple(out)

    return mix(list(u)), mix(list(v))


def _riemann() -> IdentitySpec:
    us = [ArgExpr.symbol(f"u{k}") for k in range(1, 5)]
    vs = [ArgExpr.symbol(f"v{k}") for k in range(1, 5)]
    ut, vt = tilde_transform(us, vs)
    chars = [Characteristic.from_string(s) for s in ("0000", "0100", "1000", "1100")]
    lhs = tuple(Term(1, tuple(Factor(ch, u, v) for u, v in zip(us, vs))) for ch in chars)
    rhs = tuple(Term(1, tuple(Factor(ch, u, v) for u, v in zip(ut, vt))) for ch in chars)
    free = frozenset(f"{s}{k}" for s in "uv" for k in range(1, 5))
    return IdentitySpec("riemann", catalog.EQUATION_LABELS["riemann"], (lhs, rhs), (), free)


IDENTITY_IDS = (
    ("riemann", "master")
    + tuple(f"kossak-{i}" for i in range(1, 4))
    + tuple(f"theta-add-{i}" for i in range(1, 17))
    + tuple(f"appendix-A{i}" for i in range(1, 16))
)

FAMILIES = {
    "riemann": ("riemann",),
    "master": ("master",),
    "kossak": tuple(f"kossak-{i}" for i in range(1, 4)),
    "theta-addition": tuple(f"theta-add-{i}" for i in range(1, 17)),
    "appendix": tuple(f"appendix-A{i}" for i in range(1, 16)),
}

_ZERO_PRECONDITION = Factor(
    Characteristic(0, 0, 0, 0), ArgExpr.symbol("alpha"), ArgExpr.symbol("beta")
)

_cache: dict[str, IdentitySpec] = {}


def _from_text(identity_id: str, text: str) -> IdentitySpec:
    sides = parse_terms(text)
    free = set()
    for side in sides:
        for term in side:
            for f in term.factors:
                free |= f.u.symbols | f.v.symbols
    pre = ()
    if identity_id in catalog.ZERO_LOCUS_IDENTITIES:
        pre = (_ZERO_PRECONDITION,)
        free |= {"alpha", "beta"}
    return IdentitySpec(identity_id, catalog.EQUATION_LABELS[identity_id], sides, pre, frozenset(free))


def builtin_identity(identity_id: str) -> IdentitySpec:
    """Return the tabulated identity with the given id.

    Ids: ``riemann``, ``master``, ``kossak-1..3``, ``theta-add-1..16`` and
    ``appendix-A1..A15``.
    """
    if identity_id in _cache:
        return _cache[identity_id]
    if identity_id == "riemann":
        spec = _riemann()
    elif identity_id in catalog.THETA_IDENTITIES:
        spec = _from_text(identity_id, catalog.THETA_IDENTITIES[identity_id])
    else:
        raise UnknownIdentity(identity_id)
    _cache[identity_id] = spec
    return spec


def printed_identity(identity_id: str) -> IdentitySpec:
    """The literally printed form where it differs from the tabulated one.

    Only ``theta-add-1`` differs (one unsquared factor).
    """
    if identity_id != "theta-add-1":
        raise UnknownIdentity(f"no separate printed form for {identity_id!r}")
    return _from_text(identity_id, catalog.PRINTED_THETA_ADD_1)


def addition_substitution(index: int) -> tuple[str, ArgExpr, ArgExpr]:
    """``(parent relation id, alpha, beta)`` behind ``theta-add-<index>``."""
    parent, alpha, beta = catalog.ADDITION_SUBSTITUTIONS[index]
    return parent, parse_arg(alpha), parse_arg(beta)


def odd_half_periods(omega: PeriodMatrix) -> list[tuple[complex, complex]]:
    """The six ``(alpha, beta)`` used with the zero-set relations.

    Each is ``(q tau1/2 + s tau12/2 + p/2, s tau2/2 + q tau12/2 + r/2)`` with
    ``[q s; p r]`` odd, so ``theta[0000](alpha, beta) == 0``.
    """
    return [
        (parse_arg(a).evaluate({}, omega), parse_arg(b).evaluate({}, omega))
        for a, b in catalog.ODD_HALF_PERIODS
    ]


def _theta_lookup(factors: Sequence[Factor], binding, omega, opts):
    """Evaluate each distinct ``(ch, u, v)`` once; returns the table and the numeric args."""
    us = [f.u.evaluate(binding, omega) for f in factors]
    vs = [f.v.evaluate(binding, omega) for f in factors]
    order = list(dict.fromkeys((f.ch, u, v) for f, u, v in zip(factors, us, vs)))
    values = theta_many([k[0] for k in order], [k[1] for k in order], [k[2] for k in order], omega, opts)
    return dict(zip(order, values)), us, vs


def _check_preconditions(spec, binding, omega, opts, tolerance):
    if not spec.preconditions:
        return
    table, us, vs = _theta_lookup(spec.preconditions, binding, omega, opts)
    for f, u, v in zip(spec.preconditions, us, vs):
        value = table[(f.ch, u, v)]
        if abs(value) >= tolerance:
            raise PreconditionViolated(f.ch, complex(value))


def evaluate_sides(
    spec: IdentitySpec,
    binding: Mapping[str, complex],
    omega: PeriodMatrix,
    opts: EvalOptions = DEFAULT_OPTIONS,
) -> list[np.ndarray]:
    """Numeric value of every term, one array per side (no precondition check)."""
    missing = spec.free_symbols - set(binding)
    if missing:
        raise KeyError(f"{spec.id}: unbound symbols {sorted(missing)}")
    factors = list(spec.factors())
    lookup: dict = {}
    if factors:
        table, us, vs = _theta_lookup(factors, binding, omega, opts)
        lookup = {(f.ch, f.u, f.v): table[(f.ch, u, v)] for f, u, v in zip(factors, us, vs)}
    out = []
    for side in spec.sides:
        vals = []
        for term in side:
            value = complex(term.coeff)
            for f in term.factors:
                value *= lookup[(f.ch, f.u, f.v)]
            vals.append(value)
        out.append(np.array(vals, dtype=complex))
    return out


def evaluate_identity(
    spec: IdentitySpec,
    binding: Mapping[str, complex],
    omega: PeriodMatrix,
    opts: EvalOptions = DEFAULT_OPTIONS,
    precondition_tolerance: float = PRECONDITION_TOLERANCE,
) -> Residual:
    """Residual of ``spec`` at one binding.

    Preconditions are checked first; any vanishing factor with
    ``|theta| >= precondition_tolerance`` raises :class:`PreconditionViolated`.
    For a chain of sides the absolute residual is the largest deviation of
    a later side from the first.
    """
    _check_preconditions(spec, binding, omega, opts, precondition_tolerance)
    sides = evaluate_sides(spec, binding, omega, opts)
    sums = [side.sum() if side.size else 0j for side in sides]
    absolute = max(abs(sums[0] - s) for s in sums[1:])
    scale = max((float(np.abs(side).max()) for side in sides if side.size), default=0.0)
    return Residual(float(absolute), scale)


def _swap_factor(f: Factor) -> Factor:
    return Factor(f.ch.swapped(), f.v.rename(SWAP), f.u.rename(SWAP))


def swap_columns(spec: IdentitySpec) -> IdentitySpec:
    """Rename ``y<->z``, ``y'<->z'``, ``alpha<->beta``, ``tau1<->tau2`` and swap
    characteristic columns.

    The result holds at the swapped binding and swapped period matrix
    whenever ``spec`` holds at the original ones.
    """
    sides = tuple(
        tuple(Term(t.coeff, tuple(_swap_factor(f) for f in t.factors)) for t in side)
        for side in spec.sides
    )
    pre = tuple(_swap_factor(f) for f in spec.preconditions)
    free = frozenset(SWAP.get(s, s) for s in spec.free_symbols)
    return IdentitySpec(spec.id + "~swap", spec.equation, sides, pre, free)


def swap_binding(binding: Mapping[str, complex]) -> dict[str, complex]:
    return {SWAP.get(k, k): v for k, v in binding.items()}


def export_catalog(ids: Iterable[str] = IDENTITY_IDS) -> str:
    """Human-readable listing of the identity tables."""
    blocks = []
    for identity_id in ids:
        spec = builtin_identity(identity_id)
        head = f"[{spec.id}]  eq {spec.equation}"
        if spec.preconditions:
            head += "  requires " + ", ".join(f"{f} = 0" for f in spec.preconditions)
        body = "\n".join("    " + line for line in spec.to_text().splitlines())
        blocks.append(head + "\n" + body)
    return "\n\n".join(blocks) + "\n"
