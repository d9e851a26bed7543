from __future__ import annotations

import pytest

from polycount.errors import ParameterError, ResourceLimitError
from polycount.lattice import (
    LatticeSpec,
    brute_force_count,
    count_configurations,
    count_polynomial,
)


def a(n, m, k, s):
    return count_configurations(LatticeSpec(n=n, m=m, k=k), s)


def test_single_counts():
    assert a(2, 2, 2, 0) == 1
    assert a(2, 2, 2, 1) == 4
    assert a(2, 3, 2, 1) == 7
    assert a(2, 2, 2, 2) == 2


def test_count_polynomial_examples():
    assert count_polynomial(LatticeSpec(2, 2, 2)).counts == (1, 4, 2)
    assert count_polynomial(LatticeSpec(1, 3, 3)).counts == (1, 1)
    assert count_polynomial(LatticeSpec(3, 3, 3)).counts[1] == 6


def test_brute_force_examples():
    assert brute_force_count(LatticeSpec(2, 2, 2), 2) == 2
    assert brute_force_count(LatticeSpec(3, 3, 4), 1) == 0
    assert brute_force_count(LatticeSpec(4, 4, 2), 8) == a(4, 4, 2, 8)


def test_one_rod_closed_form():
    for n in range(1, 7):
        for m in range(1, 7):
            for k in (2, 3, 4):
                expected = n * max(0, m - k + 1) + m * max(0, n - k + 1)
                assert a(n, m, k, 1) == expected


def test_transpose_symmetry():
    for n in range(1, 7):
        for m in range(n, 7):
            for k in (2, 3):
                spec = LatticeSpec(n, m, k)
                flipped = LatticeSpec(m, n, k)
                assert count_polynomial(spec).counts == count_polynomial(flipped).counts


def test_capacity_bounds():
    for n in range(1, 5):
        for m in range(1, 5):
            for k in (2, 3):
                table = count_polynomial(LatticeSpec(n, m, k))
                assert table.counts[0] == 1
                assert table.count(table.spec.capacity + 1) == 0
                assert table.count(table.spec.capacity + 7) == 0


def test_monotone_in_length():
    for n in range(1, 6):
        for m in range(2, 7):
            for k in (2, 3):
                spec = LatticeSpec(n, m, k)
                for s in range(spec.capacity + 1):
                    assert a(n, m, k, s) <= a(n, m + 1, k, s)


def test_oracle_equivalence_small():
    for n in range(1, 5):
        for m in range(n, 9):
            if n * m > 16:
                continue
            for k in (2, 3, 4):
                spec = LatticeSpec(n, m, k)
                for s in range(spec.capacity + 2):
                    assert brute_force_count(spec, s) == count_configurations(spec, s)


def test_invalid_parameters():
    with pytest.raises(ParameterError):
        LatticeSpec(0, 3, 2)
    with pytest.raises(ParameterError):
        LatticeSpec(3, 0, 2)
    with pytest.raises(ParameterError):
        LatticeSpec(3, 3, 1)
    with pytest.raises(ParameterError):
        count_configurations(LatticeSpec(2, 2, 2), -1)


def test_state_cap():
    with pytest.raises(ResourceLimitError):
        count_polynomial(LatticeSpec(60, 60, 2), s_max=1, state_cap=2**20)
    # the cap applies to the shorter side
    assert count_configurations(LatticeSpec(3, 50, 2), 1, state_cap=2**10) == 3 * 49 + 50 * 2


def test_work_cap():
    with pytest.raises(ResourceLimitError):
        brute_force_count(LatticeSpec(6, 6, 2), 10, work_cap=1000)
