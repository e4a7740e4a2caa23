"""Character values of symmetric groups.

Irreducible characters of S_n are indexed by partitions of n, with (n)
the trivial character and (1,...,1) the sign character.  Values are
computed by recursive border-strip removal and are exact integers.
All functions are pure; the memo caches are compute-once.
"""

from __future__ import annotations

from collections import Counter
from functools import cache
from math import factorial

from .partitions import Partition, size


def _conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for row in p if row > col) for col in range(p[0]))


def border_strips(shape: Partition, k: int) -> list[tuple[Partition, int]]:
    """All removals of a k-box border strip from shape.

    Returns (smaller_shape, sign) pairs with sign = (-1)**height, where
    height is one less than the number of rows the strip occupies.
    Implemented on first-column hook lengths (beta numbers): removing a
    strip of size k moves one beta number b to b - k, allowed exactly
    when b - k is nonnegative and not already a beta number.
    """
    m = len(shape)
    out: list[tuple[Partition, int]] = []
    if k <= 0 or k > size(shape):
        return out
    beta = [shape[i] + m - 1 - i for i in range(m)]
    bset = set(beta)
    for i, b in enumerate(beta):
        nb = b - k
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for c in beta if nb < c < b)
        newbeta = sorted((nb if j == i else beta[j] for j in range(m)), reverse=True)
        newshape = tuple(x for x in (newbeta[j] - (m - 1 - j) for j in range(m)) if x > 0)
        out.append((newshape, -1 if height % 2 else 1))
    return out


@cache
def sym_char_value(lam: Partition, mu: Partition) -> int:
    """Value of the irreducible character [lam] at cycle type mu."""
    if size(lam) != size(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    return sum(sign * sym_char_value(sub, rest) for sub, sign in border_strips(lam, k))


def sym_centralizer_order(mu: Partition) -> int:
    """Centralizer order of a permutation of cycle type mu: prod i^m_i m_i!."""
    out = 1
    for i, m in Counter(mu).items():
        out *= i**m * factorial(m)
    return out


def sym_degree(lam: Partition) -> int:
    """Number of standard Young tableaux of shape lam (hook length formula)."""
    n = size(lam)
    if n == 0:
        return 1
    conj = _conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= row - j + conj[j] - i - 1
    return factorial(n) // hooks
