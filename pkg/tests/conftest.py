"""Shared brute-force oracles, deliberately written unlike the library code.

The library builds its series by product/recurrence tricks; these helpers
count and enumerate directly, so agreement between the two is evidence rather
than tautology.
"""

from functools import cache

import pytest


@cache
def _partitions_bounded(k: int, largest: int) -> int:
    # partitions of k into parts of size at most largest
    if k == 0:
        return 1
    if largest == 0:
        return 0
    count = _partitions_bounded(k, largest - 1)
    if k >= largest:
        count += _partitions_bounded(k - largest, largest)
    return count


def partition_count(k: int) -> int:
    """Number of partitions of k, by bounded-part recursion."""
    return _partitions_bounded(k, k)


def divisor_sum_naive(k: int) -> int:
    """Sum of divisors by scanning every candidate up to k."""
    return sum(d for d in range(1, k + 1) if k % d == 0)


def convolve(a, b):
    """Plain double-loop Cauchy product of two coefficient lists (min length)."""
    n = min(len(a), len(b))
    out = [0] * n
    for i in range(n):
        for j in range(n - i):
            out[i + j] += a[i] * b[j]
    return out


@pytest.fixture
def oracle():
    class Oracle:
        partition_count = staticmethod(partition_count)
        divisor_sum = staticmethod(divisor_sum_naive)
        convolve = staticmethod(convolve)

    return Oracle
