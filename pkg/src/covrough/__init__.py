"""Covering-based rough set approximations, by definition and by Boolean characteristic matrices."""

from .boolmat import BoolMatrix, bool_product, from_set, impl_product, to_set, transpose
from .covering import (
    Covering,
    ElementSet,
    Universe,
    build_covering,
    induced_covering,
    membership_matrix,
    neighborhood,
    star_neighborhood,
)
from .errors import (
    CovroughError,
    DimensionMismatch,
    EmptyBlock,
    NotACovering,
    ParseError,
    RouteSchemeMismatch,
    UniverseMismatch,
    UniverseTooLarge,
    UnknownElement,
)
from .matrix_route import (
    CharacteristicMatrices,
    MatrixFormula,
    approx_by_matrix,
    characteristic_matrices,
    verify_identities,
)
from .oracle import Bound, Scheme, lower_approx, upper_approx
from .routes import ApproxResult, Route, compute

__all__ = [name for name in dir() if not name.startswith("_")]
