"""Exact LCWIS / WLCWIS solvers and brute-force oracles.

The solvers run the quadratic row-by-row DP known from LCIS with the strict
comparison relaxed to ``<=``.  ``dp[j]`` holds the best total weight of a common
weakly increasing subsequence of the processed prefix of ``a`` and ``b[:j+1]``
that ends exactly at ``b[j]``.  While scanning a row for symbol ``x`` the
running maximum over ``dp[k]`` with ``b[k] <= x`` is the best prefix that can be
extended by ``x``; it is read before the row updates ``dp[j]`` so ``a[i]`` is
never used twice.
"""

from dataclasses import dataclass
from typing import Mapping, Optional

import numpy as np
from numba import njit

from .core import Sequence, total_weight

ORACLE_MAX_LEN = 14


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: Optional[Sequence] = None


@njit(cache=True)
def _value_kernel(a, wa, b):
    m = b.shape[0]
    dp = np.zeros(m, dtype=np.int64)
    for i in range(a.shape[0]):
        x = a[i]
        gain = wa[i]
        cur = 0
        for j in range(m):
            y = b[j]
            if y <= x:
                old = dp[j]
                if y == x and cur + gain > old:
                    dp[j] = cur + gain
                if old > cur:
                    cur = old
    best = 0
    for j in range(m):
        if dp[j] > best:
            best = dp[j]
    return best


@njit(cache=True)
def _witness_kernel(a, wa, b):
    n = a.shape[0]
    m = b.shape[0]
    dp = np.zeros(m, dtype=np.int64)
    last_row = np.full(m, -1, dtype=np.int32)
    prev_col = np.full((n, m), -1, dtype=np.int32)
    prev_row = np.full((n, m), -1, dtype=np.int32)
    for i in range(n):
        x = a[i]
        gain = wa[i]
        cur = 0
        cur_col = -1
        cur_row = -1
        for j in range(m):
            y = b[j]
            if y <= x:
                old = dp[j]
                old_row = last_row[j]
                if y == x and cur + gain > old:
                    dp[j] = cur + gain
                    prev_col[i, j] = cur_col
                    prev_row[i, j] = cur_row
                    last_row[j] = i
                if old > cur:
                    cur = old
                    cur_col = j
                    cur_row = old_row
    best = 0
    end = -1
    for j in range(m):
        if dp[j] > best:
            best = dp[j]
            end = j
    cols = []
    if end >= 0:
        j = end
        r = last_row[end]
        while j >= 0:
            cols.append(j)
            nj = prev_col[r, j]
            r = prev_row[r, j]
            j = nj
    return best, cols


def _as_array(s) -> np.ndarray:
    return np.fromiter(s, dtype=np.int64, count=len(s))


def _weights_for(s, w: Mapping[int, int]) -> np.ndarray:
    try:
        return np.fromiter((w[x] for x in s), dtype=np.int64, count=len(s))
    except KeyError as exc:
        raise KeyError(f"unweighted symbol in input: {exc.args[0]}") from None


def _solve(a, b, w, want_witness: bool) -> SolveResult:
    a = Sequence(a)
    b = Sequence(b)
    if w is not None:
        # rejects unweighted symbols and totals beyond the int64 budget
        total_weight(a, w)
        total_weight(b, w)
    if not a or not b:
        return SolveResult(0, Sequence() if want_witness else None)
    if want_witness:
        wb = _weights_for(b, w) if w is not None else np.ones(len(b), np.int64)
        # rows iterate over b so that column indices are positions in a
        value, cols = _witness_kernel(_as_array(b), wb, _as_array(a))
        witness = Sequence(a[c] for c in reversed(cols))
        return SolveResult(int(value), witness)
    if len(b) > len(a):
        a, b = b, a
    wa = _weights_for(a, w) if w is not None else np.ones(len(a), np.int64)
    return SolveResult(int(_value_kernel(_as_array(a), wa, _as_array(b))))


def lcwis(a, b, want_witness: bool = False) -> SolveResult:
    """Longest common weakly increasing subsequence of ``a`` and ``b``.

    Runs in O(|a|*|b|) time.  Without a witness the memory is linear in
    ``min(|a|, |b|)``; with ``want_witness`` two |a|x|b| int32 parent tables are
    allocated.  Among optimal witnesses the one using the earliest positions
    of ``a`` is returned.
    """
    return _solve(a, b, None, want_witness)


def wlcwis(a, b, w: Mapping[int, int], want_witness: bool = False) -> SolveResult:
    """Weighted variant of :func:`lcwis`; ``value`` is the total weight."""
    return _solve(a, b, w, want_witness)


def _enumerate_best(a, b, w) -> int:
    a, b = tuple(a), tuple(b)
    if len(a) > len(b):
        a, b = b, a
    if len(a) > ORACLE_MAX_LEN:
        raise ValueError(
            f"oracle limited to shorter input of length <= {ORACLE_MAX_LEN}, got {len(a)}"
        )
    try:
        gains = [w[x] for x in a]
        for x in b:
            w[x]
    except KeyError as exc:
        raise KeyError(f"unweighted symbol in input: {exc.args[0]}") from None
    best = 0

    # Every weakly increasing index subset of the shorter input is visited;
    # a subset that fails to embed greedily is not extended since no
    # extension of it can embed either.
    def visit(start, last, pos, weight):
        nonlocal best
        if weight > best:
            best = weight
        for i in range(start, len(a)):
            x = a[i]
            if x < last:
                continue
            try:
                p = b.index(x, pos)
            except ValueError:
                continue
            visit(i + 1, x, p + 1, weight + gains[i])

    visit(0, -1, 0, 0)
    return best


class _Ones(dict):
    def __missing__(self, key):
        return 1


def lcwis_oracle(a, b) -> int:
    """Brute force LCWIS over all weakly increasing subsequences of the shorter input."""
    return _enumerate_best(a, b, _Ones())


def wlcwis_oracle(a, b, w: Mapping[int, int]) -> int:
    return _enumerate_best(a, b, w)


__all__ = [
    "SolveResult",
    "lcwis",
    "wlcwis",
    "lcwis_oracle",
    "wlcwis_oracle",
]
