"""Exact enumeration of k-mer coverings on open rectangular lattices.

A configuration places s rigid rods, each covering k consecutive sites of a
single row or a single column, with no site covered twice.  Counting is done
two independent ways: a column-sweep dynamic program over horizontal-overhang
states, and a brute-force subset search used as an oracle on small lattices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import ParameterError, ResourceLimitError

#: Hard ceiling on the k**width state space of the dynamic program.
DEFAULT_STATE_CAP = 2**24

#: Ceiling on C(positions, s) for the brute-force oracle.
DEFAULT_WORK_CAP = 2 * 10**6


@dataclass(frozen=True)
class LatticeSpec:
    """An n-row by m-column lattice holding rods of length k, open boundaries."""

    n: int
    m: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.m < 1:
            raise ParameterError(f"lattice dimensions must be >= 1, got {self.n}x{self.m}")
        if self.k < 2:
            raise ParameterError(f"rod length must be >= 2, got k={self.k}")

    @property
    def capacity(self) -> int:
        """Largest s for which a configuration could exist: floor(n*m/k)."""
        return (self.n * self.m) // self.k


@dataclass(frozen=True)
class CountTable:
    """counts[s] = number of configurations of exactly s rods on spec."""

    spec: LatticeSpec
    counts: tuple[int, ...]

    def count(self, s: int) -> int:
        if s < 0:
            raise ParameterError(f"s must be >= 0, got {s}")
        if s >= len(self.counts):
            return 0
        return self.counts[s]


@lru_cache(maxsize=None)
def _column_fills(
    in_digits: tuple[int, ...], k: int, hstart: bool, room: int
) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Every way to fill one column given incoming horizontal overhangs.

    Returns (out_digits, rods_placed) pairs.  A digit d>0 means the cell is
    covered by a horizontal rod that still extends d more columns.  Vertical
    rods are consumed within the column, so they leave digits of 0 behind.
    """
    n = len(in_digits)
    out: list[int] = [0] * n
    results: list[tuple[tuple[int, ...], int]] = []

    def walk(r: int, used: int) -> None:
        if r == n:
            results.append((tuple(out), used))
            return
        d = in_digits[r]
        if d > 0:
            out[r] = d - 1
            walk(r + 1, used)
            out[r] = 0
            return
        # empty cell: monomer
        walk(r + 1, used)
        if used < room:
            if hstart:
                out[r] = k - 1
                walk(r + 1, used + 1)
                out[r] = 0
            if r + k <= n and all(d2 == 0 for d2 in in_digits[r + 1 : r + k]):
                # vertical rod: rows r..r+k-1 of this column, no overhang
                walk(r + k, used + 1)

    walk(0, 0)
    return tuple(results)


@lru_cache(maxsize=None)
def _count_vector(n: int, m: int, k: int, s_cap: int, state_cap: int) -> tuple[int, ...]:
    """DP over columns; returns (a_0, ..., a_{s_cap}) for the n x m lattice."""
    if k**n > state_cap:
        raise ResourceLimitError(
            f"state space {k}^{n} exceeds cap {state_cap}; "
            f"raise the cap or use the diagonal recurrence"
        )
    zero = (0,) * n
    # profile -> list of counts indexed by rods placed so far
    frontier: dict[tuple[int, ...], list[int]] = {zero: [1] + [0] * s_cap}
    for c in range(m):
        hstart = c + k <= m
        nxt: dict[tuple[int, ...], list[int]] = {}
        for digits, per_s in frontier.items():
            for out_digits, used in _column_fills(digits, k, hstart, s_cap):
                acc = nxt.get(out_digits)
                if acc is None:
                    acc = [0] * (s_cap + 1)
                    nxt[out_digits] = acc
                for s in range(s_cap + 1 - used):
                    v = per_s[s]
                    if v:
                        acc[s + used] += v
        frontier = nxt
    final = frontier.get(zero)
    if final is None:  # unreachable: the all-monomer column always survives
        return (0,) * (s_cap + 1)
    return tuple(final)


def count_polynomial(
    spec: LatticeSpec,
    s_max: int | None = None,
    state_cap: int = DEFAULT_STATE_CAP,
) -> CountTable:
    """All counts a(n,m,k,s) for s = 0..s_max (default: full capacity).

    The lattice is swept along its longer side so the DP state lives on the
    shorter one; results are exact integers.
    """
    cap = spec.capacity
    if s_max is None:
        s_max = cap
    if s_max < 0:
        raise ParameterError(f"s_max must be >= 0, got {s_max}")
    s_eff = min(s_max, cap)
    n, m = spec.n, spec.m
    if n > m:
        n, m = m, n
    counts = _count_vector(n, m, spec.k, s_eff, state_cap)
    if s_max > s_eff:
        counts = counts + (0,) * (s_max - s_eff)
    return CountTable(spec=spec, counts=counts)


def count_configurations(
    spec: LatticeSpec, s: int, state_cap: int = DEFAULT_STATE_CAP
) -> int:
    """Exact number of ways to place s disjoint k-rods on the lattice."""
    if s < 0:
        raise ParameterError(f"s must be >= 0, got {s}")
    if s > spec.capacity:
        return 0
    return count_polynomial(spec, s_max=s, state_cap=state_cap).counts[s]


def _rod_masks(spec: LatticeSpec) -> list[int]:
    """Bitmasks of all candidate rod placements, cell index = row*m + col."""
    n, m, k = spec.n, spec.m, spec.k
    masks: list[int] = []
    for r in range(n):
        for c in range(m - k + 1):
            mask = 0
            for t in range(k):
                mask |= 1 << (r * m + c + t)
            masks.append(mask)
    for c in range(m):
        for r in range(n - k + 1):
            mask = 0
            for t in range(k):
                mask |= 1 << ((r + t) * m + c)
            masks.append(mask)
    return masks


def brute_force_count(
    spec: LatticeSpec, s: int, work_cap: int = DEFAULT_WORK_CAP
) -> int:
    """Oracle count by explicit subset search over rod placements."""
    if s < 0:
        raise ParameterError(f"s must be >= 0, got {s}")
    if s == 0:
        return 1
    masks = _rod_masks(spec)
    p = len(masks)
    if s > p:
        return 0
    if math.comb(p, s) > work_cap:
        raise ResourceLimitError(
            f"C({p},{s}) exceeds brute-force work cap {work_cap}"
        )

    def rec(start: int, left: int, occupied: int) -> int:
        if left == 0:
            return 1
        total = 0
        for q in range(start, p - left + 1):
            if masks[q] & occupied == 0:
                total += rec(q + 1, left - 1, occupied | masks[q])
        return total

    return rec(0, s, 0)
