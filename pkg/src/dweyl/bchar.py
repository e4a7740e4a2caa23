"""Character data of the hyperoctahedral groups (signed permutations).

Conjugacy classes of the group of all signed permutations of n points
are indexed by pairs of partitions (positive cycle type, negative cycle
type); irreducible characters by bipartitions (alpha; beta) of n.

The fixed labelling convention, pinned by anchor characters and frozen
by a table fixture in the test suite:

* [(n); ()] is the trivial character;
* [(); (1^n)] is the determinant of the reflection representation;
* [(1^n); ()] is the sign of the underlying permutation.

Values follow the wreath-product border-strip recursion: a cycle of
length k is peeled as a k-box border strip from either component, with
the usual sign (-1)**height, and a *negative* cycle peeled from the
second component contributes an extra factor -1.
"""

from __future__ import annotations

from collections import Counter
from functools import cache
from math import comb, factorial
from typing import NamedTuple

from .partitions import Bipartition, Partition, enumerate_partitions, size
from .symchar import border_strips, sym_degree


class BClassType(NamedTuple):
    """Conjugacy class label: cycle types of positive and negative cycles."""

    positive: Partition
    negative: Partition


def group_order_b(n: int) -> int:
    return 2**n * factorial(n)


@cache
def b_classes(n: int) -> tuple[BClassType, ...]:
    """All classes of the rank-n group, |positive| + |negative| = n.

    Frozen order: |negative| ascending, then each component in
    partition enumeration order.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    out = []
    for m in range(n + 1):
        for lam in enumerate_partitions(n - m):
            for mu in enumerate_partitions(m):
                out.append(BClassType(lam, mu))
    return tuple(out)


def b_centralizer_order(c: BClassType) -> int:
    """Centralizer order: prod (2i)^a_i a_i! over both cycle types."""
    out = 1
    for part, m in Counter(c.positive).items():
        out *= (2 * part) ** m * factorial(m)
    for part, m in Counter(c.negative).items():
        out *= (2 * part) ** m * factorial(m)
    return out


@cache
def _wreath_value(alpha: Partition, beta: Partition, pos: Partition, neg: Partition) -> int:
    if not pos and not neg:
        return 1 if not alpha and not beta else 0
    if pos:
        k, rest = pos[0], pos[1:]
        total = 0
        for sub, sign in border_strips(alpha, k):
            total += sign * _wreath_value(sub, beta, rest, neg)
        for sub, sign in border_strips(beta, k):
            total += sign * _wreath_value(alpha, sub, rest, neg)
        return total
    k, rest = neg[0], neg[1:]
    total = 0
    for sub, sign in border_strips(alpha, k):
        total += sign * _wreath_value(sub, beta, pos, rest)
    for sub, sign in border_strips(beta, k):
        total -= sign * _wreath_value(alpha, sub, pos, rest)
    return total


def b_char_value(label: Bipartition, c: BClassType) -> int:
    """Value of the irreducible character [alpha; beta] on class c."""
    alpha, beta = label
    if size(alpha) + size(beta) != size(c.positive) + size(c.negative):
        raise ValueError(f"size mismatch between {label} and {c}")
    return _wreath_value(alpha, beta, c.positive, c.negative)


def b_degree(label: Bipartition) -> int:
    """Degree of [alpha; beta]: binom(n, |alpha|) * f(alpha) * f(beta)."""
    alpha, beta = label
    n = size(alpha) + size(beta)
    return comb(n, size(alpha)) * sym_degree(alpha) * sym_degree(beta)
