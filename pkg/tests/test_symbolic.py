from __future__ import annotations

from fractions import Fraction

import pytest

from polycount.symbolic import (
    Const,
    PoleError,
    Sum,
    binom_expr as C,
    count_constants,
    eval_term,
    fact_expr,
    perturb_constant,
    perturbations,
    sign_expr as SG,
    syms,
)

s, j, i = syms("s j i")


def test_eval_examples():
    assert eval_term(C(7, 2), {}) == 21
    assert eval_term(SG(j) * C(s, j), {"s": 4, "j": 3}) == -4
    assert eval_term(C(s + j - 1, j) * (s - j) / s, {"s": 5, "j": 2}) == 9


def test_binomial_conventions():
    assert eval_term(C(5, -1), {}) == 0
    assert eval_term(C(3, 5), {}) == 0
    assert eval_term(C(-1, 3), {}) == -1
    assert eval_term(C(-2, 2), {}) == 3
    for n in range(0, 9):
        for k in range(0, n + 1):
            assert eval_term(C(n, k), {}) == eval_term(C(n, n - k), {})


def test_sign_and_pow():
    assert eval_term(SG(-3), {}) == -1
    assert eval_term(SG(0), {}) == 1
    assert eval_term((s + 1) ** 2, {"s": 3}) == 16
    assert eval_term(Const(Fraction(2)) ** (0 - s), {"s": 2}) == Fraction(1, 4)
    assert eval_term(i ** s, {"i": 0, "s": 0}) == 1  # 0**0 in the power-sum lemma


def test_factorial_and_sum():
    assert eval_term(fact_expr(s), {"s": 5}) == 120
    total = Sum("j", Const(Fraction(0)), s, C(s, j))
    assert eval_term(total, {"s": 6}) == 64
    empty = Sum("j", Const(Fraction(3)), Const(Fraction(1)), C(s, j))
    assert eval_term(empty, {"s": 6}) == 0


def test_poles():
    with pytest.raises(PoleError):
        eval_term(s / (s - 3), {"s": 3})
    with pytest.raises(PoleError):
        eval_term(fact_expr(s), {"s": -1})
    with pytest.raises(PoleError):
        eval_term(Const(Fraction(0)) ** (0 - s), {"s": 1})
    with pytest.raises(PoleError):
        eval_term(s, {})  # unbound variable


def test_perturbations():
    expr = (i - j) * (2 * s - j) / (j + 1)
    total = count_constants(expr)
    assert total >= 2
    originals = eval_term(expr, {"i": 5, "j": 2, "s": 4})
    mutated_values = set()
    for idx in range(total):
        mutated = perturb_constant(expr, idx)
        mutated_values.add(eval_term(mutated, {"i": 5, "j": 2, "s": 4}))
    assert originals == Fraction(18, 3)
    assert all(v != originals for v in mutated_values)
    assert len(list(perturbations(expr))) == total
    with pytest.raises(IndexError):
        perturb_constant(expr, total)
