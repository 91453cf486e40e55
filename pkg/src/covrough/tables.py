"""Tab-separated approximation tables in the layout X | χ_X | result vector | result set."""

from __future__ import annotations

from typing import Sequence

from .boolmat import format_vector, from_set
from .covering import Covering, ElementSet, format_set
from .matrix_route import characteristic_matrices
from .oracle import Bound, Scheme
from .routes import Route, compute, route_formula

_OPERATOR_NAMES = {
    (Scheme.SECOND, Bound.UPPER): "SH(X)",
    (Scheme.SECOND, Bound.LOWER): "SL(X)",
    (Scheme.FIFTH, Bound.UPPER): "IH(X)",
    (Scheme.FIFTH, Bound.LOWER): "IL(X)",
    (Scheme.SIXTH, Bound.UPPER): "XH(X)",
    (Scheme.SIXTH, Bound.LOWER): "XL(X)",
    (Scheme.SIXTH_DUAL, Bound.UPPER): "XH^d(X)",
    (Scheme.SIXTH_DUAL, Bound.LOWER): "XL^d(X)",
}


def operator_name(scheme: Scheme | str, bound: Bound | str) -> str:
    return _OPERATOR_NAMES[Scheme(scheme), Bound(bound)]


def render_table(
    cov: Covering,
    sets: Sequence[ElementSet],
    scheme: Scheme | str,
    bound: Bound | str,
    route: str = "matrix",
) -> str:
    """Render one row per input set.

    ``route="both"`` computes the matrix route, checks it against the
    oracle and appends a ``DIFF`` column that reads ``-`` on agreement and
    shows the oracle's answer otherwise.
    """
    scheme, bound = Scheme(scheme), Bound(bound)
    both = route == "both"
    main_route = Route.MATRIX if both else Route(route)
    formula = route_formula(scheme, bound, main_route)
    middle = formula.expression if formula is not None else "χ_" + operator_name(scheme, bound)
    header = ["X", "χ_X", middle, operator_name(scheme, bound)]
    if both:
        header.append("DIFF")
    lines = ["\t".join(header)]
    cm = characteristic_matrices(cov)
    for x in sets:
        res = compute(cov, x, scheme, bound, main_route, cm=cm)
        row = [format_set(x), format_vector(from_set(x)), format_vector(res.vector), format_set(res.result)]
        if both:
            ref = compute(cov, x, scheme, bound, Route.ORACLE)
            row.append("-" if ref.result == res.result else "oracle=" + format_set(ref.result))
        lines.append("\t".join(row))
    return "\n".join(lines) + "\n"
