"""Iterators over integer compositions and related multiplicity vectors.

A composition of n into k parts is an ordered k-tuple of positive integers
summing to n; there are C(n-1, k-1) of them.  The enumeration recursions
sum products of table cells over such tuples, and the per-gall-count series
formulas sum over multiplicity vectors (k_1, ..., k_m) weighted by
1*k_1 + 2*k_2 + ... + m*k_m.
"""

from __future__ import annotations

from math import comb
from typing import Iterator


def compositions(n: int, k: int) -> Iterator[tuple]:
    """All compositions of n into k positive parts, in lexicographic order.

    The stream is empty when k > n or either argument is nonpositive.
    """
    if k < 1 or n < k:
        return
    if k == 1:
        yield (n,)
        return
    for first in range(1, n - k + 2):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


def palindromic_compositions(n: int, k: int) -> Iterator[tuple]:
    """Compositions of n into k parts equal to their own reversal.

    A palindromic composition is determined by its first ceil(k/2) parts;
    tuples come out in lexicographic order.
    """
    if k < 1 or n < k:
        return
    if k == 1:
        yield (n,)
        return
    half, odd = divmod(k, 2)

    def fill(slot, remaining, acc):
        if slot == half:
            if odd:
                if remaining >= 1:
                    yield acc + (remaining,) + acc[::-1]
            elif remaining == 0:
                yield acc + acc[::-1]
            return
        # keep room for the remaining mirrored slots and the optional middle
        reserve = 2 * (half - slot - 1) + (1 if odd else 0)
        top = (remaining - reserve) // 2
        for part in range(1, top + 1):
            yield from fill(slot + 1, remaining - 2 * part, acc + (part,))

    yield from fill(0, n, ())


def composition_count(n: int, k: int) -> int:
    """C(n-1, k-1), the number of compositions of n into k positive parts."""
    if k < 1 or n < k:
        return 0
    return comb(n - 1, k - 1)


def weighted_compositions(total: int) -> Iterator[tuple]:
    """Multiplicity vectors (k_1, ..., k_total) with sum i*k_i = total.

    Equivalent to the partitions of ``total`` recorded by part multiplicity.
    For total = 0 the single empty tuple is produced.
    """
    if total < 0:
        return
    if total == 0:
        yield ()
        return
    out = [0] * total

    def fill(slot, remaining):
        if slot == 1:
            out[0] = remaining
            yield tuple(out)
            out[0] = 0
            return
        for count in range(remaining // slot + 1):
            out[slot - 1] = count
            yield from fill(slot - 1, remaining - slot * count)
        out[slot - 1] = 0

    yield from fill(total, total)


def multinomial(parts) -> int:
    """Multinomial coefficient (sum parts)! / prod(parts!) via exact binomials."""
    result = 1
    total = 0
    for p in parts:
        total += p
        result *= comb(total, p)
    return result
