"""Littlewood-Richardson coefficients by skew-tableau enumeration.

c(alpha, beta; gamma) is the multiplicity of the irreducible character
[gamma] of S_n in the character induced from [alpha] x [beta] along the
Young subgroup S_a x S_b, n = a + b.  It is computed here as the number
of Littlewood-Richardson fillings of the skew shape gamma/alpha with
content beta: rows weakly increase, columns strictly increase, and the
reverse reading word (each row right to left, rows top to bottom) is a
ballot sequence.  The representation-theoretic definition is kept as an
independent check in the verification engine.
"""

from __future__ import annotations

from functools import cache

from .partitions import Partition, enumerate_partitions, size


def _contains(outer: Partition, inner: Partition) -> bool:
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


@cache
def lr_coefficient(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    """Littlewood-Richardson coefficient of gamma in alpha * beta.

    Zero whenever |gamma| != |alpha| + |beta| or gamma does not contain
    alpha.  The memo cache makes repeated queries cheap; duplicated
    computation under concurrent first calls is harmless.
    """
    if size(gamma) != size(alpha) + size(beta) or not _contains(gamma, alpha):
        return 0
    if not beta:
        return 1
    inner = tuple(alpha) + (0,) * (len(gamma) - len(alpha))
    # Cells of gamma/alpha in reverse reading order, so that placement
    # order matches the ballot condition's prefix order.
    cells = [
        (r, c)
        for r in range(len(gamma))
        for c in range(gamma[r] - 1, inner[r] - 1, -1)
    ]
    nvals = len(beta)
    fill: dict[tuple[int, int], int] = {}
    counts = [0] * (nvals + 1)

    def place(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        right = fill.get((r, c + 1))
        hi = nvals if right is None else right
        lo = fill.get((r - 1, c), 0) + 1
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= beta[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            counts[v] += 1
            fill[(r, c)] = v
            total += place(idx + 1)
            del fill[(r, c)]
            counts[v] -= 1
        return total

    return place(0)


def lr_expand(alpha: Partition, beta: Partition) -> dict[Partition, int]:
    """All gamma with nonzero coefficient in alpha * beta, with coefficients."""
    n = size(alpha) + size(beta)
    out: dict[Partition, int] = {}
    for gamma in enumerate_partitions(n):
        c = lr_coefficient(alpha, beta, gamma)
        if c:
            out[gamma] = c
    return out
