"""Exit criteria. Each test records one PASS/FAIL line, printed in the terminal summary."""

import random
import time
from contextlib import contextmanager

import pytest

from covrough import (
    BoolMatrix,
    MatrixFormula,
    Scheme,
    Universe,
    approx_by_matrix,
    bool_product,
    build_covering,
    characteristic_matrices,
    impl_product,
    induced_covering,
    lower_approx,
    neighborhood,
    star_neighborhood,
    upper_approx,
)
from covrough import matrix_route
from covrough.cli import main

from .conftest import ACCEPTANCE_LINES, EXAMPLE_COV, GOLDEN
from .helpers import brute_neighborhoods, naive_bool_product, naive_impl_product, random_bits, random_raw_covering
from .test_boolmat import clamped_integer_impl


@contextmanager
def criterion(label, budget_s):
    start = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < budget_s, f"took {elapsed:.2f}s, budget {budget_s}s"
    except BaseException as exc:
        ACCEPTANCE_LINES.append(f"FAIL  {label}: {exc}")
        raise
    ACCEPTANCE_LINES.append(f"PASS  {label} ({elapsed:.2f}s)")


def S(x):
    return set(x.members)


UPPER = [("a", "abcd"), ("ab", "abcd"), ("abc", "abcd"), ("def", "acdef"), ("adef", "abcdef")]
LOWER_CORRECTED = [
    ("a", "a"),
    ("ab", "ab"),
    ("abc", "ab"),
    ("abcd", "abcd"),
    ("abdef", "abdef"),
    ("abcdef", "abcdef"),
]
LOWER_LEGACY = [
    ("a", ""),
    ("ab", "b"),
    ("abc", "b"),
    ("abcd", "abc"),
    ("abdef", "bef"),
    ("abcdef", "abcdef"),
]


def test_ac1_golden_tables(example):
    with criterion("AC1 golden tables (upper, corrected lower, legacy/dual lower, oracle lower)", 1.0):
        cm = characteristic_matrices(example)
        u = example.universe
        for x, want in UPPER:
            xs = u.subset(x)
            assert S(approx_by_matrix(cm, xs, MatrixFormula.SIXTH_UPPER)) == set(want)
            assert S(approx_by_matrix(cm, xs, MatrixFormula.SIXTH_DUAL_UPPER)) == set(want)
            assert S(upper_approx(example, xs, Scheme.SIXTH)) == set(want)
        for x, want in LOWER_CORRECTED:
            xs = u.subset(x)
            assert S(approx_by_matrix(cm, xs, MatrixFormula.SIXTH_LOWER_CORRECTED)) == set(want)
            assert S(lower_approx(example, xs, Scheme.SIXTH)) == set(want)
        for x, want in LOWER_LEGACY:
            xs = u.subset(x)
            assert S(approx_by_matrix(cm, xs, MatrixFormula.SIXTH_LOWER_LEGACY_WRONG)) == set(want)
            assert S(approx_by_matrix(cm, xs, MatrixFormula.SIXTH_DUAL_LOWER)) == set(want)
            assert S(lower_approx(example, xs, Scheme.SIXTH_DUAL)) == set(want)


def test_ac2_bug_witness(example):
    with criterion("AC2 bug witness X={a,b,c}: corrected {a,b}, legacy {b}", 1.0):
        cm = characteristic_matrices(example)
        x = example.universe.subset("abc")
        corrected = approx_by_matrix(cm, x, MatrixFormula.SIXTH_LOWER_CORRECTED)
        legacy = approx_by_matrix(cm, x, MatrixFormula.SIXTH_LOWER_LEGACY_WRONG)
        assert S(corrected) == {"a", "b"}
        assert S(legacy) == {"b"}
        assert corrected != legacy


def test_ac3_theorem_identities():
    with criterion("AC3 identity suite, 1000 random coverings x all subsets, zero violations", 60.0):
        rng = random.Random(31337)
        violations = []
        coverings = 0
        for _ in range(1000):
            n, m = rng.randint(1, 8), rng.randint(1, 6)
            elems, blocks = random_raw_covering(rng, n, m)
            cov = build_covering(Universe(elems), blocks)
            coverings += 1
            cm = characteristic_matrices(cov)
            ind = induced_covering(cov)
            for x in elems:
                if star_neighborhood(cov, x) != neighborhood(cov, x):
                    violations.append(("g", blocks, x))
            for x in cov.universe.all_subsets():
                lo = {s: lower_approx(cov, x, s) for s in Scheme}
                up = {s: upper_approx(cov, x, s) for s in Scheme}
                expect = {
                    MatrixFormula.SECOND_UPPER: up[Scheme.SECOND],
                    MatrixFormula.SECOND_LOWER: lo[Scheme.SECOND],
                    MatrixFormula.FIFTH_UPPER: up[Scheme.FIFTH],
                    MatrixFormula.FIFTH_LOWER: lo[Scheme.FIFTH],
                    MatrixFormula.SIXTH_UPPER: up[Scheme.SIXTH],
                    MatrixFormula.SIXTH_LOWER_CORRECTED: lo[Scheme.SIXTH],
                    MatrixFormula.SIXTH_LOWER_COV: lo[Scheme.SIXTH],
                    MatrixFormula.SIXTH_DUAL_UPPER: up[Scheme.SIXTH_DUAL],
                    MatrixFormula.SIXTH_DUAL_LOWER: lo[Scheme.SIXTH_DUAL],
                }
                got = {f: approx_by_matrix(cm, x, f) for f in MatrixFormula}
                for f, want in expect.items():
                    if got[f] != want:
                        violations.append(("a", f.value, blocks, x))
                if lo[Scheme.FIFTH] != lo[Scheme.SIXTH]:
                    violations.append(("b", blocks, x))
                if lo[Scheme.FIFTH] != lower_approx(ind, x, Scheme.FIFTH):
                    violations.append(("c", blocks, x))
                if lo[Scheme.SIXTH] != lower_approx(ind, x, Scheme.SIXTH):
                    violations.append(("d", blocks, x))
                if got[MatrixFormula.SIXTH_LOWER_CORRECTED] != got[MatrixFormula.SIXTH_LOWER_COV]:
                    violations.append(("e", blocks, x))
                if got[MatrixFormula.SIXTH_LOWER_LEGACY_WRONG] != lo[Scheme.SIXTH_DUAL]:
                    violations.append(("f", blocks, x))
        assert coverings >= 1000
        assert violations == []


def test_ac4_kernel_oracle():
    with criterion("AC4 word-packed products == naive loops on 500 pairs up to 64x64; clamped == implication", 10.0):
        rng = random.Random(4242)
        for _ in range(500):
            n, p, q = (rng.randint(1, 64) for _ in range(3))
            a, b = random_bits(rng, n, p), random_bits(rng, p, q)
            A, B = BoolMatrix.from_lists(a), BoolMatrix.from_lists(b)
            assert bool_product(A, B).to_lists() == naive_bool_product(a, b)
            assert impl_product(A, B).to_lists() == naive_impl_product(a, b)
        for _ in range(200):
            n, p, q = (rng.randint(1, 24) for _ in range(3))
            a, b = random_bits(rng, n, p), random_bits(rng, p, q)
            assert impl_product(BoolMatrix.from_lists(a), BoolMatrix.from_lists(b)).to_lists() == (
                clamped_integer_impl(a, b).tolist()
            )


def test_ac5_structural_invariants():
    with criterion("AC5 structural invariants on 1000 random coverings", 60.0):
        rng = random.Random(555)
        for _ in range(1000):
            elems, blocks = random_raw_covering(rng, rng.randint(1, 8), rng.randint(1, 6))
            cov = build_covering(Universe(elems), blocks)
            cm = characteristic_matrices(cov)
            n = len(elems)
            assert cm.gamma.is_symmetric()
            assert cm.gamma.diagonal() == [1] * n
            assert cm.pi.diagonal() == [1] * n
            nb = brute_neighborhoods(elems, [set(b) for b in blocks])
            for i, x in enumerate(elems):
                assert {elems[j] for j in range(n) if cm.pi[i, j]} == nb[x]
            for _ in range(8):
                x = cov.universe.from_mask(rng.getrandbits(n))
                lo, up = lower_approx(cov, x, Scheme.SIXTH), upper_approx(cov, x, Scheme.SIXTH)
                assert lo <= x <= up
                assert up == upper_approx(cov, x, Scheme.SIXTH_DUAL)


def _table(capsys, *argv):
    code = main(["table", str(EXAMPLE_COV), *argv])
    out, _ = capsys.readouterr()
    return code, out


def test_ac6_cli_contract(capsys, monkeypatch, tmp_path):
    with criterion("AC6 CLI: verify exits 0, mutations fail loudly, gen is deterministic", 10.0):
        assert main(["verify", str(EXAMPLE_COV), "--exhaustive"]) == 0
        capsys.readouterr()

        # corrupted fixture: a golden row altered by one set no longer matches the output
        sets = str(GOLDEN / "lower.sets")
        code, out = _table(capsys, "--sets", sets, "--scheme", "sixth", "--bound", "lower", "--route", "matrix")
        golden = (GOLDEN / "table6_sixth_lower_matrix.txt").read_text(encoding="utf-8")
        assert code == 0 and out == golden
        corrupted = tmp_path / "corrupt.txt"
        corrupted.write_text(golden.replace("[1 1 0 0 0 0]^T\t{a, b}", "[0 1 0 0 0 0]^T\t{b}", 1))
        assert corrupted.read_text() != golden
        assert out != corrupted.read_text()

        # legacy flipped to the corrected formula: verify must fail with exit 1
        with monkeypatch.context() as mp:
            mp.setitem(
                matrix_route.FORMULAS,
                MatrixFormula.SIXTH_LOWER_LEGACY_WRONG,
                matrix_route.FORMULAS[MatrixFormula.SIXTH_LOWER_CORRECTED],
            )
            assert main(["verify", str(EXAMPLE_COV), "--exhaustive"]) == 1
            out, _ = capsys.readouterr()
            assert "FAIL  legacy-eq-dual-lower" in out

        outputs = []
        for _ in range(2):
            assert main(["gen", "8", "3", "--seed", "1"]) == 0
            outputs.append(capsys.readouterr()[0])
        assert outputs[0] == outputs[1] and outputs[0]
