"""Small expression trees over the atom catalogue.

Handy for building structured classes once and evaluating them to exact
counts at any truncation, e.g. permutations with restricted cycle lengths
as a composition of atoms, or two-sort classes like E(X * E(Y)).

Evaluation returns a CoeffSeq when the expression mentions only sort X and
a CoeffTable as soon as sort Y appears anywhere; unisort operands are
embedded on sort X when mixed with two-sort ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from recdig.series import atom
from recdig.tables import CoeffTable, compose_table

Expr = Union[
    "Atom",
    "Sum",
    "Product",
    "Compose",
    "PointingX",
    "PointingY",
    "DerivativeX",
    "DerivativeY",
    "Integral",
    "RestrictSize",
    "Log",
]


@dataclass(frozen=True)
class Atom:
    name: str
    param: int | None = None


@dataclass(frozen=True)
class Sum:
    parts: tuple


@dataclass(frozen=True)
class Product:
    parts: tuple


@dataclass(frozen=True)
class Compose:
    outer: object  # must evaluate to a unisort sequence
    inner: object


@dataclass(frozen=True)
class PointingX:
    arg: object


@dataclass(frozen=True)
class PointingY:
    arg: object


@dataclass(frozen=True)
class DerivativeX:
    arg: object


@dataclass(frozen=True)
class DerivativeY:
    arg: object


@dataclass(frozen=True)
class Integral:
    arg: object


@dataclass(frozen=True)
class RestrictSize:
    arg: object
    size: int

    def __post_init__(self):
        if self.size < 0:
            raise ValueError("restriction size must be nonnegative")


@dataclass(frozen=True)
class Log:
    arg: object


def _as_table(value, nmax: int) -> CoeffTable:
    if isinstance(value, CoeffTable):
        return value
    return CoeffTable.from_seq_x(value.truncate(min(nmax, value.truncation)))


def evaluate(expr, nmax: int):
    """Evaluate an expression to exact counts truncated at nmax."""
    if isinstance(expr, Atom):
        if expr.name == "Y":
            return CoeffTable.y_singleton(nmax)
        return atom(expr.name, nmax, expr.param)

    if isinstance(expr, (Sum, Product)):
        values = [evaluate(p, nmax) for p in expr.parts]
        if not values:
            raise ValueError("empty sum or product")
        if any(isinstance(v, CoeffTable) for v in values):
            values = [_as_table(v, nmax) for v in values]
        out = values[0]
        for v in values[1:]:
            out = out + v if isinstance(expr, Sum) else out * v
        return out

    if isinstance(expr, Compose):
        outer = evaluate(expr.outer, nmax)
        if isinstance(outer, CoeffTable):
            raise TypeError("outer operand of a composition must be unisort")
        inner = evaluate(expr.inner, nmax)
        if isinstance(inner, CoeffTable):
            return compose_table(outer, inner)
        return outer.compose(inner)

    if isinstance(expr, PointingX):
        v = evaluate(expr.arg, nmax)
        return v.pointing_x() if isinstance(v, CoeffTable) else v.pointing()

    if isinstance(expr, PointingY):
        v = evaluate(expr.arg, nmax)
        if not isinstance(v, CoeffTable):
            raise TypeError("pointing in sort Y needs a two-sort operand")
        return v.pointing_y()

    if isinstance(expr, DerivativeX):
        v = evaluate(expr.arg, nmax)
        return v.partial_x() if isinstance(v, CoeffTable) else v.derivative()

    if isinstance(expr, DerivativeY):
        v = evaluate(expr.arg, nmax)
        if not isinstance(v, CoeffTable):
            raise TypeError("derivative in sort Y needs a two-sort operand")
        return v.partial_y()

    if isinstance(expr, Integral):
        v = evaluate(expr.arg, nmax)
        if isinstance(v, CoeffTable):
            raise TypeError("the integral operator is unisort-only")
        return v.integral()

    if isinstance(expr, RestrictSize):
        v = evaluate(expr.arg, nmax)
        if isinstance(v, CoeffTable):
            raise TypeError("size restriction is unisort-only")
        return v.restrict(expr.size)

    if isinstance(expr, Log):
        v = evaluate(expr.arg, nmax)
        if isinstance(v, CoeffTable):
            raise TypeError("the logarithm is unisort-only")
        return v.log()

    raise TypeError(f"not an expression node: {expr!r}")
