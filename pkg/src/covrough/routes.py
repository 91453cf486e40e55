"""One entry point over the three ways of computing an approximation."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import oracle
from .boolmat import BoolMatrix, from_set, to_set
from .covering import Covering, ElementSet
from .errors import RouteSchemeMismatch
from .matrix_route import (
    CharacteristicMatrices,
    MatrixFormula,
    characteristic_matrices,
    evaluate,
    formula_for,
)
from .oracle import Bound, Scheme

LEGACY_WARNING = (
    "WARNING: the legacy formula (Π^T • Π) ⊙ χ_X does not compute the sixth lower "
    "approximation; it computes the sixth dual lower approximation. Corrected formula: Π ⊙ χ_X."
)


class Route(str, Enum):
    ORACLE = "oracle"
    MATRIX = "matrix"
    LEGACY = "legacy"


@dataclass(frozen=True)
class ApproxResult:
    result: ElementSet
    scheme: Scheme
    bound: Bound
    route: Route
    formula: MatrixFormula | None = None
    vector: BoolMatrix | None = None


def route_formula(scheme: Scheme | str, bound: Bound | str, route: Route | str) -> MatrixFormula | None:
    """Matrix formula a route uses for an operator, or ``None`` for the oracle."""
    scheme, bound, route = Scheme(scheme), Bound(bound), Route(route)
    if route is Route.ORACLE:
        return None
    if route is Route.LEGACY:
        if (scheme, bound) != (Scheme.SIXTH, Bound.LOWER):
            raise RouteSchemeMismatch("the legacy route only exists for the sixth lower approximation")
        return MatrixFormula.SIXTH_LOWER_LEGACY_WRONG
    return formula_for(scheme, bound)


def compute(
    cov: Covering,
    x: ElementSet,
    scheme: Scheme | str,
    bound: Bound | str,
    route: Route | str = Route.MATRIX,
    cm: CharacteristicMatrices | None = None,
) -> ApproxResult:
    scheme, bound, route = Scheme(scheme), Bound(bound), Route(route)
    formula = route_formula(scheme, bound, route)
    if formula is None:
        res = oracle.approx(cov, x, scheme, bound)
        return ApproxResult(res, scheme, bound, route, None, from_set(res))
    if cm is None:
        cm = characteristic_matrices(cov)
    vec = evaluate(cm, x, formula)
    return ApproxResult(to_set(vec, cov.universe), scheme, bound, route, formula, vec)
