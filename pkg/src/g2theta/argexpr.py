"""Affine theta arguments with exact rational coefficients.

An :class:`ArgExpr` is a linear form in the free symbols plus a constant
``c0 + c1*tau1 + c2*tau2 + c3*tau12``.  Everything stays in
:class:`fractions.Fraction` until :meth:`ArgExpr.evaluate` substitutes
numbers.

Text form, used by the identity tables::

    y+y'+alpha          tau1/2+tau12/2+1/2          -3*u2/2+v1
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .core import PeriodMatrix

__all__ = ["SYMBOLS", "PERIODS", "SWAP", "ArgExpr", "parse_arg"]

SYMBOLS = (
    "y", "z", "y'", "z'",
    "alpha", "beta", "alpha'", "beta'",
    "u1", "u2", "u3", "u4",
    "v1", "v2", "v3", "v4",
)
PERIODS = ("tau1", "tau2", "tau12")

# column-swap rename; tau12 is fixed
SWAP = {
    "y": "z", "z": "y", "y'": "z'", "z'": "y'",
    "alpha": "beta", "beta": "alpha", "alpha'": "beta'", "beta'": "alpha'",
    "u1": "v1", "u2": "v2", "u3": "v3", "u4": "v4",
    "v1": "u1", "v2": "u2", "v3": "u3", "v4": "u4",
    "tau1": "tau2", "tau2": "tau1", "tau12": "tau12",
}

_ORDER = {name: k for k, name in enumerate(SYMBOLS + PERIODS)}
_TERM = re.compile(
    r"([+-])?(?:(\d+)\*)?(u[1-4]|v[1-4]|alpha'|beta'|alpha|beta|tau12|tau1|tau2|y'|z'|y|z|\d+)(?:/(\d+))?"
)

@dataclass(frozen=True)
class ArgExpr:
    """Exact affine form; ``coeffs`` maps names (symbols and periods) to rationals.

    The constant ``1`` is stored under the key ``"1"``.  Zero coefficients
    are dropped, so structural equality is mathematical equality.
    """

    coeffs: tuple[tuple[str, Fraction], ...] = ()

    @classmethod
    def from_dict(cls, mapping: Mapping[str, Fraction | int]) -> "ArgExpr":
        items = [(k, Fraction(v)) for k, v in mapping.items() if Fraction(v) != 0]
        for k, _ in items:
            if k != "1" and k not in _ORDER:
                raise ValueError(f"unknown symbol {k!r}")
        items.sort(key=lambda kv: _ORDER.get(kv[0], len(_ORDER)))
        return cls(tuple(items))

    @classmethod
    def symbol(cls, name: str) -> "ArgExpr":
        return cls.from_dict({name: 1})

    @classmethod
    def constant(cls, value: Fraction | int) -> "ArgExpr":
        return cls.from_dict({"1": value})

    def as_dict(self) -> dict[str, Fraction]:
        return dict(self.coeffs)

    @property
    def symbols(self) -> frozenset[str]:
        return frozenset(k for k, _ in self.coeffs if k in SYMBOLS)

    def __add__(self, other: "ArgExpr") -> "ArgExpr":
        out = self.as_dict()
        for k, v in other.coeffs:
            out[k] = out.get(k, Fraction(0)) + v
        return ArgExpr.from_dict(out)

    def __neg__(self) -> "ArgExpr":
        return ArgExpr(tuple((k, -v) for k, v in self.coeffs))

    def __sub__(self, other: "ArgExpr") -> "ArgExpr":
        return self + (-other)

    def scale(self, factor: Fraction | int) -> "ArgExpr":
        return ArgExpr.from_dict({k: v * Fraction(factor) for k, v in self.coeffs})

    def rename(self, mapping: Mapping[str, str]) -> "ArgExpr":
        out: dict[str, Fraction] = {}
        for k, v in self.coeffs:
            key = mapping.get(k, k)
            out[key] = out.get(key, Fraction(0)) + v
        return ArgExpr.from_dict(out)

    def substitute(self, values: Mapping[str, "ArgExpr"]) -> "ArgExpr":
        """Replace symbols by other expressions (exactly)."""
        out = ArgExpr()
        for k, v in self.coeffs:
            part = values[k] if k in values else ArgExpr.from_dict({k: 1})
            out = out + part.scale(v)
        return out

    def evaluate(self, binding: Mapping[str, complex], omega: PeriodMatrix) -> complex:
        total = 0j
        for k, v in self.coeffs:
            if k == "1":
                value = 1.0
            elif k in PERIODS:
                value = getattr(omega, k)
            else:
                try:
                    value = binding[k]
                except KeyError:
                    raise KeyError(f"no value bound for symbol {k!r}") from None
            total += float(v) * complex(value)
        return total

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, v in self.coeffs:
            sign = "-" if v < 0 else "+"
            num, den = abs(v.numerator), v.denominator
            if k == "1":
                body = str(num)
            else:
                body = k if num == 1 else f"{num}*{k}"
            if den != 1:
                body += f"/{den}"
            parts.append(sign + body)
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text

def parse_arg(text: str) -> ArgExpr:
    """Parse the text form; the inverse of ``str(ArgExpr)``.

    >>> str(parse_arg("y - y' + tau12/2 + 1/2"))
    "y-y'+tau12/2+1/2"
    """
    src = text.replace(" ", "")
    if src in ("", "0"):
        return ArgExpr()
    out: dict[str, Fraction] = {}
    pos = 0
    while pos < len(src):
        match = _TERM.match(src, pos)
        if not match or match.end() == pos or (pos > 0 and not match.group(1)):
            raise ValueError(f"cannot parse argument {text!r} at offset {pos}")
        sign, mult, atom, den = match.groups()
        value = Fraction(int(mult or 1), int(den or 1))
        if sign == "-":
            value = -value
        key = "1" if atom.isdigit() else atom
        if atom.isdigit():
            if mult:
                raise ValueError(f"cannot parse argument {text!r}: '*' before a number")
            value *= int(atom)
        out[key] = out.get(key, Fraction(0)) + value
        pos = match.end()
    return ArgExpr.from_dict(out)
