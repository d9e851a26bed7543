from __future__ import annotations

import math
from fractions import Fraction

import pytest

from polycount.exact import binom
from polycount.recurrences import diagonal_rhs
from polycount.weights import (
    RhsModel,
    accumulate_lhs,
    accumulate_rhs,
    alpha_p1,
    build_weight_grid,
    cell_region,
    grid_applied_to_counts,
    rhs_closed_form,
    third_term_residual_sum,
    verify_quadrant_lemmas,
    verify_rhs_column_sums,
)


def _weight_map(grid, tag):
    return {
        (p.orientation, p.i, p.j): p.weight
        for p in grid.placements
        if p.set_tag == tag
    }


def test_placement_examples():
    g4 = build_weight_grid(4)
    p1 = _weight_map(g4, "P1")
    assert p1[("vertical", 0, 0)] == 1
    assert p1[("vertical", 2, 1)] == -4
    p2 = _weight_map(g4, "P2")
    assert p2[("vertical", 1, 3)] == -20
    g5 = build_weight_grid(5)
    p2 = _weight_map(g5, "P2")
    assert p2[("vertical", 8, 1)] == -125


def test_placement_counts():
    for s in range(1, 7):
        grid = build_weight_grid(s)
        p1v = [p for p in grid.placements if p.set_tag == "P1" and p.orientation == "vertical"]
        assert len(p1v) == (s + 1) * (s + 2) // 2 + s * (s + 1) // 2
        # every footprint stays inside the square
        for p in grid.placements:
            assert 0 <= p.i <= 2 * s and 0 <= p.j <= 2 * s
            end = p.j + s if p.orientation == "vertical" else p.i + s
            assert end <= 2 * s


def test_mirror_symmetry():
    for s in range(1, 6):
        grid = build_weight_grid(s)
        vert = {(p.i, p.j, p.set_tag): p.weight
                for p in grid.placements if p.orientation == "vertical"}
        horiz = {(p.i, p.j, p.set_tag): p.weight
                 for p in grid.placements if p.orientation == "horizontal"}
        assert {(j, i, t): w for (i, j, t), w in vert.items()} == horiz


def test_accumulate_lhs_examples():
    g1 = build_weight_grid(1)
    cells = accumulate_lhs(g1)
    assert [cells[i][i] for i in range(3)] == [2, -4, 2]
    assert all(cells[i][j] == 0 for i in range(3) for j in range(3) if i != j)
    g4 = build_weight_grid(4)
    assert accumulate_lhs(g4)[2][2] == 2 * binom(8, 2)
    g5 = build_weight_grid(5)
    assert accumulate_lhs(g5)[7][3] == 0


def test_full_cancellation():
    for s in range(1, 7):
        cells = accumulate_lhs(build_weight_grid(s))
        for i in range(2 * s + 1):
            for j in range(2 * s + 1):
                expected = 2 * (-1) ** i * binom(2 * s, i) if i == j else 0
                assert cells[i][j] == expected, (s, i, j)


def test_alpha_formula_matches_accumulation():
    from polycount.weights import _accumulate

    for s in range(1, 7):
        grid = build_weight_grid(s)
        p1_cells = _accumulate(grid, ("P1",))
        for i in range(2 * s + 1):
            for j in range(2 * s + 1):
                assert alpha_p1(s, i, j) == p1_cells[i][j], (s, i, j)


def test_alpha_examples():
    assert alpha_p1(4, 3, 3) == 2 * (-1) ** 3 * binom(8, 3)
    assert alpha_p1(2, 0, 1) == -1
    assert alpha_p1(3, 6, 6) == 2


def test_rhs_accumulation():
    assert accumulate_rhs(build_weight_grid(1), RhsModel(Fraction(2), Fraction(-1), 10)) == 4
    assert accumulate_rhs(build_weight_grid(3), RhsModel(Fraction(2), Fraction(5), 40)) == 960
    assert accumulate_rhs(build_weight_grid(2), RhsModel(Fraction(1), Fraction(0), 9)) == 12
    assert accumulate_rhs(build_weight_grid(4), RhsModel(Fraction(2), Fraction(-1), 30)) == 26880


def test_rhs_invariance():
    for s in range(1, 7):
        grid = build_weight_grid(s)
        for lam, eta, n in (
            (Fraction(2), Fraction(-1), 4 * s + 1),
            (Fraction(2), Fraction(7, 3), 100),
            (Fraction(5, 2), Fraction(0), 2 * s + 9),
        ):
            total = accumulate_rhs(grid, RhsModel(lam, eta, n))
            assert total == rhs_closed_form(s, lam), (s, lam, eta, n)


def test_rhs_column_sums():
    for s in range(1, 7):
        assert verify_rhs_column_sums(s).ok
    r = verify_rhs_column_sums(4)
    by_key = {(c.name, c.params["i"]): c for c in r.checks}
    assert by_key[("binomial-column-sum", 0)].actual == "1"
    assert by_key[("h-column-sum", 1)].actual == "-39"
    r2 = verify_rhs_column_sums(2)
    by_key = {(c.name, c.params["i"]): c for c in r2.checks}
    assert by_key[("binomial-column-sum", 2)].actual == "0"


def test_quadrant_lemmas():
    for s in range(1, 7):
        report = verify_quadrant_lemmas(s)
        assert report.ok, report.failures[:3]


def test_cell_regions_partition():
    for s in (1, 2, 3):
        seen = {}
        for i in range(2 * s + 1):
            for j in range(2 * s + 1):
                seen[(i, j)] = cell_region(s, i, j)
        assert seen[(s, s)] == "q3-diagonal"
        assert len(seen) == (2 * s + 1) ** 2


def test_residual_double_sum_values():
    assert third_term_residual_sum(4, 7, 5) == (-1) ** 6 * binom(8, 5) == 56
    assert third_term_residual_sum(3, 4, 4) == 0
    for s in (1, 2, 3):
        for j in range(s, 2 * s + 1):
            for i in range(j + 1, 2 * s + 1):
                assert third_term_residual_sum(s, i, j) == (-1) ** (j + 1) * binom(2 * s, j)
            assert third_term_residual_sum(s, j, j) == 0


def test_stirling_power_sums():
    for s in range(1, 11):
        for t in range(0, s + 2):
            total = sum((-1) ** (i + s) * i ** (s + 1 - t) * math.comb(s, i)
                        for i in range(s + 1))
            if t == 0:
                assert total == s * math.factorial(s + 1) // 2
            elif t == 1:
                assert total == math.factorial(s)
            else:
                assert total == 0


def test_grid_applied_to_real_counts():
    for s in (1, 2):
        k = 2
        n = m = k * s + 2 * s + 1
        grid = build_weight_grid(s)
        assert grid_applied_to_counts(grid, k, n, m) == 2 * diagonal_rhs(s)
        assert grid_applied_to_counts(grid, k, n, m + 2) == 2 * diagonal_rhs(s)
    with pytest.raises(Exception):
        grid_applied_to_counts(build_weight_grid(2), 2, 5, 5)
