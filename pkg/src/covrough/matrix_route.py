"""Approximations computed from characteristic matrices.

``gamma = M • M^T`` (type-1) and ``pi = M ⊙ M^T`` (type-2) are derived from
the membership matrix ``M``.  Row ``i`` of ``pi`` is the characteristic vector
of the neighborhood ``N(x_i)``; ``pi^T`` has one column per neighborhood and
so represents the induced covering, duplicates included.

Composite formulas associate to the left: ``pi^T • pi ⊙ chi`` means
``(pi^T • pi) ⊙ chi``.

``MatrixFormula.SIXTH_LOWER_LEGACY_WRONG`` is deliberately kept. It is the
historical formula ``(pi^T • pi) ⊙ chi`` that was published for the sixth
lower approximation. It actually computes the sixth *dual* lower
approximation and disagrees with the sixth lower approximation in general.
Do not use it for real work; it exists so the discrepancy stays executable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Callable, Iterable

from . import oracle
from .boolmat import BoolMatrix, bool_product, from_set, impl_product, to_set, transpose
from .covering import (
    Covering,
    ElementSet,
    induced_covering,
    membership_matrix,
    neighborhood,
    star_neighborhood,
)
from .errors import UniverseMismatch, UniverseTooLarge
from .oracle import Bound, Scheme

EXHAUSTIVE_LIMIT = 10


class MatrixFormula(str, Enum):
    SECOND_UPPER = "second_upper"
    SECOND_LOWER = "second_lower"
    FIFTH_UPPER = "fifth_upper"
    FIFTH_LOWER = "fifth_lower"
    SIXTH_UPPER = "sixth_upper"
    SIXTH_LOWER_CORRECTED = "sixth_lower_corrected"
    SIXTH_LOWER_COV = "sixth_lower_cov"
    SIXTH_DUAL_UPPER = "sixth_dual_upper"
    SIXTH_DUAL_LOWER = "sixth_dual_lower"
    #: Deprecated on purpose: computes the sixth dual lower approximation, not the sixth lower one.
    SIXTH_LOWER_LEGACY_WRONG = "sixth_lower_LEGACY_WRONG"

    @property
    def expression(self) -> str:
        return _EXPRESSIONS[self]


_EXPRESSIONS = {
    MatrixFormula.SECOND_UPPER: "Γ • χ_X",
    MatrixFormula.SECOND_LOWER: "Γ ⊙ χ_X",
    MatrixFormula.FIFTH_UPPER: "Π • χ_X",
    MatrixFormula.FIFTH_LOWER: "Π ⊙ χ_X",
    MatrixFormula.SIXTH_UPPER: "Π^T • Π • χ_X",
    MatrixFormula.SIXTH_LOWER_CORRECTED: "Π ⊙ χ_X",
    MatrixFormula.SIXTH_LOWER_COV: "Π^T ⊙ Π ⊙ χ_X",
    MatrixFormula.SIXTH_DUAL_UPPER: "Π^T • Π • χ_X",
    MatrixFormula.SIXTH_DUAL_LOWER: "Π^T • Π ⊙ χ_X",
    MatrixFormula.SIXTH_LOWER_LEGACY_WRONG: "Π^T • Π ⊙ χ_X",
}

_DEFAULT_FORMULA = {
    (Scheme.SECOND, Bound.UPPER): MatrixFormula.SECOND_UPPER,
    (Scheme.SECOND, Bound.LOWER): MatrixFormula.SECOND_LOWER,
    (Scheme.FIFTH, Bound.UPPER): MatrixFormula.FIFTH_UPPER,
    (Scheme.FIFTH, Bound.LOWER): MatrixFormula.FIFTH_LOWER,
    (Scheme.SIXTH, Bound.UPPER): MatrixFormula.SIXTH_UPPER,
    (Scheme.SIXTH, Bound.LOWER): MatrixFormula.SIXTH_LOWER_CORRECTED,
    (Scheme.SIXTH_DUAL, Bound.UPPER): MatrixFormula.SIXTH_DUAL_UPPER,
    (Scheme.SIXTH_DUAL, Bound.LOWER): MatrixFormula.SIXTH_DUAL_LOWER,
}


def formula_for(scheme: Scheme | str, bound: Bound | str) -> MatrixFormula:
    """The correct matrix formula for an operator."""
    return _DEFAULT_FORMULA[Scheme(scheme), Bound(bound)]


@dataclass(frozen=True)
class CharacteristicMatrices:
    covering: Covering
    membership: BoolMatrix
    gamma: BoolMatrix
    pi: BoolMatrix

    @cached_property
    def pi_t(self) -> BoolMatrix:
        return transpose(self.pi)

    @cached_property
    def pi_t_bool_pi(self) -> BoolMatrix:
        return bool_product(self.pi_t, self.pi)

    @cached_property
    def pi_t_impl_pi(self) -> BoolMatrix:
        return impl_product(self.pi_t, self.pi)


def characteristic_matrices(cov: Covering) -> CharacteristicMatrices:
    m = membership_matrix(cov)
    mt = transpose(m)
    return CharacteristicMatrices(cov, m, bool_product(m, mt), impl_product(m, mt))


_Evaluator = Callable[[CharacteristicMatrices, BoolMatrix], BoolMatrix]

# Each entry evaluates its composite expression left to right.
FORMULAS: dict[MatrixFormula, _Evaluator] = {
    MatrixFormula.SECOND_UPPER: lambda cm, chi: bool_product(cm.gamma, chi),
    MatrixFormula.SECOND_LOWER: lambda cm, chi: impl_product(cm.gamma, chi),
    MatrixFormula.FIFTH_UPPER: lambda cm, chi: bool_product(cm.pi, chi),
    MatrixFormula.FIFTH_LOWER: lambda cm, chi: impl_product(cm.pi, chi),
    MatrixFormula.SIXTH_UPPER: lambda cm, chi: bool_product(cm.pi_t_bool_pi, chi),
    MatrixFormula.SIXTH_LOWER_CORRECTED: lambda cm, chi: impl_product(cm.pi, chi),
    MatrixFormula.SIXTH_LOWER_COV: lambda cm, chi: impl_product(cm.pi_t_impl_pi, chi),
    MatrixFormula.SIXTH_DUAL_UPPER: lambda cm, chi: bool_product(cm.pi_t_bool_pi, chi),
    MatrixFormula.SIXTH_DUAL_LOWER: lambda cm, chi: impl_product(cm.pi_t_bool_pi, chi),
    MatrixFormula.SIXTH_LOWER_LEGACY_WRONG: lambda cm, chi: impl_product(cm.pi_t_bool_pi, chi),
}


def evaluate(cm: CharacteristicMatrices, x: ElementSet, formula: MatrixFormula | str) -> BoolMatrix:
    """Result vector of ``formula`` applied to the characteristic vector of ``x``."""
    if x.universe != cm.covering.universe:
        raise UniverseMismatch("set and covering are over different universes")
    return FORMULAS[MatrixFormula(formula)](cm, from_set(x))


def approx_by_matrix(cm: CharacteristicMatrices, x: ElementSet, formula: MatrixFormula | str) -> ElementSet:
    return to_set(evaluate(cm, x, formula), cm.covering.universe)


# ---------------------------------------------------------------------------
# identity verification


@dataclass
class IdentityResult:
    name: str
    description: str
    checked: int = 0
    counterexample: ElementSet | None = None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.counterexample is None and not self.detail


@dataclass
class IdentityReport:
    covering: Covering
    subsets_checked: int
    results: list[IdentityResult]
    legacy_witnesses: list[ElementSet] = field(default_factory=list)
    witness_expected: bool = False

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[IdentityResult]:
        return [r for r in self.results if not r.passed]


IDENTITIES = [
    ("second-upper-matrix", "Γ • χ_X equals the second upper approximation"),
    ("second-lower-matrix", "Γ ⊙ χ_X equals the second lower approximation"),
    ("fifth-upper-matrix", "Π • χ_X equals the fifth upper approximation"),
    ("fifth-lower-matrix", "Π ⊙ χ_X equals the fifth lower approximation"),
    ("fifth-lower-eq-sixth-lower", "fifth lower equals sixth lower"),
    ("sixth-upper-matrix", "Π^T • Π • χ_X equals the sixth upper approximation"),
    ("sixth-lower-matrix", "Π ⊙ χ_X equals the sixth lower approximation"),
    ("fifth-lower-induced", "fifth lower over C equals fifth lower over Cov(C)"),
    ("star-neighborhood", "N*(x) equals N(x) for every element"),
    ("sixth-lower-induced", "sixth lower over C equals sixth lower over Cov(C)"),
    ("sixth-lower-cov-matrix", "Π^T ⊙ Π ⊙ χ_X equals the sixth lower approximation"),
    ("dual-upper-matrix", "Π^T • Π • χ_X equals the sixth dual upper approximation"),
    ("dual-lower-matrix", "Π^T • Π ⊙ χ_X equals the sixth dual lower approximation"),
    ("legacy-eq-dual-lower", "legacy formula equals the sixth dual lower approximation"),
    ("legacy-detects-gap", "legacy differs from corrected wherever sixth lower differs from its dual"),
]


def _probe_sets(cov: Covering, exhaustive: bool, samples: int, seed: int) -> Iterable[ElementSet]:
    u = cov.universe
    n = len(u)
    if exhaustive:
        if n > EXHAUSTIVE_LIMIT:
            raise UniverseTooLarge(
                f"exhaustive verification supports at most {EXHAUSTIVE_LIMIT} elements, got {n}"
            )
        return list(u.all_subsets())
    total = 1 << n
    if total <= samples:
        return list(u.all_subsets())
    rng = random.Random(seed)
    masks = {0, u.full_mask}
    while len(masks) < samples:
        masks.add(rng.getrandbits(n))
    return [u.from_mask(mk) for mk in sorted(masks)]


def verify_identities(
    cov: Covering,
    exhaustive: bool = True,
    samples: int = 256,
    seed: int = 0,
) -> IdentityReport:
    """Check every matrix formula against the set definitions over many subsets.

    With ``exhaustive`` all ``2^n`` subsets are probed (``n`` at most
    ``EXHAUSTIVE_LIMIT``); otherwise ``samples`` distinct random subsets,
    always including the empty set and the universe.  Each identity records
    the first counterexample in increasing bitmask order; every probe on
    which the legacy and corrected formulas disagree is collected as a
    witness.
    """
    probes = _probe_sets(cov, exhaustive, samples, seed)
    cm = characteristic_matrices(cov)
    induced = induced_covering(cov)
    results = {name: IdentityResult(name, desc) for name, desc in IDENTITIES}

    def check(name: str, ok: bool, x: ElementSet) -> None:
        r = results[name]
        r.checked += 1
        if not ok and r.counterexample is None:
            r.counterexample = x

    star = results["star-neighborhood"]
    for x_name in cov.universe:
        star.checked += 1
        if star_neighborhood(cov, x_name) != neighborhood(cov, x_name) and not star.detail:
            star.detail = f"N*({x_name}) != N({x_name})"

    witnesses = []
    witness_expected = False
    for x in probes:
        o = {
            (s, b): oracle.approx(cov, x, s, b)
            for s in Scheme
            for b in Bound
        }
        mat = {f: approx_by_matrix(cm, x, f) for f in MatrixFormula}

        check("second-upper-matrix", mat[MatrixFormula.SECOND_UPPER] == o[Scheme.SECOND, Bound.UPPER], x)
        check("second-lower-matrix", mat[MatrixFormula.SECOND_LOWER] == o[Scheme.SECOND, Bound.LOWER], x)
        check("fifth-upper-matrix", mat[MatrixFormula.FIFTH_UPPER] == o[Scheme.FIFTH, Bound.UPPER], x)
        check("fifth-lower-matrix", mat[MatrixFormula.FIFTH_LOWER] == o[Scheme.FIFTH, Bound.LOWER], x)
        check("fifth-lower-eq-sixth-lower", o[Scheme.FIFTH, Bound.LOWER] == o[Scheme.SIXTH, Bound.LOWER], x)
        check("sixth-upper-matrix", mat[MatrixFormula.SIXTH_UPPER] == o[Scheme.SIXTH, Bound.UPPER], x)
        check(
            "sixth-lower-matrix",
            mat[MatrixFormula.SIXTH_LOWER_CORRECTED] == o[Scheme.SIXTH, Bound.LOWER],
            x,
        )
        check(
            "fifth-lower-induced",
            o[Scheme.FIFTH, Bound.LOWER] == oracle.lower_approx(induced, x, Scheme.FIFTH),
            x,
        )
        check(
            "sixth-lower-induced",
            o[Scheme.SIXTH, Bound.LOWER] == oracle.lower_approx(induced, x, Scheme.SIXTH),
            x,
        )
        check("sixth-lower-cov-matrix", mat[MatrixFormula.SIXTH_LOWER_COV] == o[Scheme.SIXTH, Bound.LOWER], x)
        check(
            "dual-upper-matrix",
            mat[MatrixFormula.SIXTH_DUAL_UPPER] == o[Scheme.SIXTH_DUAL, Bound.UPPER],
            x,
        )
        check(
            "dual-lower-matrix",
            mat[MatrixFormula.SIXTH_DUAL_LOWER] == o[Scheme.SIXTH_DUAL, Bound.LOWER],
            x,
        )
        legacy = mat[MatrixFormula.SIXTH_LOWER_LEGACY_WRONG]
        corrected = mat[MatrixFormula.SIXTH_LOWER_CORRECTED]
        check("legacy-eq-dual-lower", legacy == o[Scheme.SIXTH_DUAL, Bound.LOWER], x)
        gap = o[Scheme.SIXTH, Bound.LOWER] != o[Scheme.SIXTH_DUAL, Bound.LOWER]
        check("legacy-detects-gap", not gap or legacy != corrected, x)
        if gap:
            witness_expected = True
        if legacy != corrected:
            witnesses.append(x)

    return IdentityReport(
        covering=cov,
        subsets_checked=len(probes),
        results=list(results.values()),
        legacy_witnesses=witnesses,
        witness_expected=witness_expected,
    )
