"""Brute-force verification engine on explicit signed permutations.

Everything here works with concrete group elements so that the closed
formulas in the rest of the package can be checked against independent
computations: groups are stored as full element lists, conjugacy
classes come from orbit enumeration, and induced characters from
explicit summation over elements or subgroup classes.

A signed permutation of {1..n} is a tuple w of length n whose entry
w[i] = +j or -j says that point i+1 maps to point j with that sign.
An element lies in the even-signed (type D) group exactly when the
number of negative entries is even.

Construction is capped at n = 6 (23040 elements); the formula side of
the package has no such bound.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from fractions import Fraction
from functools import cache
from math import factorial
from typing import Callable, NamedTuple

from .dchar import (
    DClassType,
    DIrrLabel,
    d_char_value,
    d_irr_labels,
    group_order_d,
)
from .decomp import DecompositionResult, InducedQuery, induced_multiplicity
from .partitions import Partition, enumerate_partitions, size
from .symchar import sym_centralizer_order, sym_char_value

MAX_RANK = 6

SignedPerm = tuple[int, ...]


# ---------------------------------------------------------------------------
# Signed permutation arithmetic

def sp_identity(n: int) -> SignedPerm:
    return tuple(range(1, n + 1))


def sp_mul(u: SignedPerm, v: SignedPerm) -> SignedPerm:
    """Composition (u * v)(i) = u(v(i))."""
    return tuple(u[x - 1] if x > 0 else -u[-x - 1] for x in v)


def sp_inv(u: SignedPerm) -> SignedPerm:
    out = [0] * len(u)
    for i, x in enumerate(u, start=1):
        if x > 0:
            out[x - 1] = i
        else:
            out[-x - 1] = -i
    return tuple(out)


def sp_flips(w: SignedPerm) -> int:
    return sum(1 for x in w if x < 0)


def signed_cycle_type(w: SignedPerm) -> tuple[Partition, Partition]:
    """Cycle types of the positive and negative cycles of w."""
    n = len(w)
    seen = [False] * n
    pos: list[int] = []
    neg: list[int] = []
    for start in range(1, n + 1):
        if seen[start - 1]:
            continue
        count = 0
        sign = 1
        i = start
        while not seen[i - 1]:
            seen[i - 1] = True
            count += 1
            x = w[i - 1]
            if x < 0:
                sign = -sign
            i = abs(x)
        (pos if sign > 0 else neg).append(count)
    return tuple(sorted(pos, reverse=True)), tuple(sorted(neg, reverse=True))


def plain_element(lam: Partition, n: int) -> SignedPerm:
    """The sign-free permutation with consecutive cycles of type lam."""
    if size(lam) != n:
        raise ValueError(f"cycle type {lam} does not fill {n} points")
    w = list(range(1, n + 1))
    start = 1
    for part in lam:
        for i in range(start, start + part - 1):
            w[i - 1] = i + 1
        w[start + part - 2] = start
        start += part
    return tuple(w)


def flip_at(n: int, point: int) -> SignedPerm:
    """Sign change at a single point (an element of the ambient group only)."""
    w = list(range(1, n + 1))
    w[point - 1] = -point
    return tuple(w)


def _generators(n: int) -> list[SignedPerm]:
    gens = []
    for i in range(1, n):
        w = list(range(1, n + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        gens.append(tuple(w))
    if n >= 2:
        w = list(range(1, n + 1))
        w[n - 2], w[n - 1] = -n, -(n - 1)
        gens.append(tuple(w))
    return gens


# ---------------------------------------------------------------------------
# Group tables

class GroupTable:
    """Fully enumerated even-signed permutation group of rank n.

    Immutable after construction: element list, element -> index map,
    conjugacy classes from orbit enumeration, and the class label of
    each class.  For a splittable cycle type the class containing the
    sign-free representative gets the + tag.
    """

    def __init__(self, n: int):
        self.n = n
        elements: list[SignedPerm] = []
        for perm in itertools.permutations(range(1, n + 1)):
            for mask in range(1 << n):
                if bin(mask).count("1") % 2:
                    continue
                elements.append(
                    tuple(-perm[i] if mask >> i & 1 else perm[i] for i in range(n))
                )
        self.elements = elements
        self.index = {w: i for i, w in enumerate(elements)}
        gens = _generators(n)

        class_of = [-1] * len(elements)
        classes: list[list[int]] = []
        for i0, w0 in enumerate(elements):
            if class_of[i0] >= 0:
                continue
            cid = len(classes)
            members = [i0]
            class_of[i0] = cid
            stack = [w0]
            while stack:
                x = stack.pop()
                for g in gens:
                    y = sp_mul(g, sp_mul(x, g))  # generators are involutions
                    j = self.index[y]
                    if class_of[j] < 0:
                        class_of[j] = cid
                        members.append(j)
                        stack.append(y)
            classes.append(members)
        self.class_of = class_of
        self.classes = classes
        self.centralizer_orders = [len(elements) // len(m) for m in classes]

        raw_of_class = [signed_cycle_type(elements[m[0]]) for m in classes]
        by_raw: dict[tuple[Partition, Partition], list[int]] = defaultdict(list)
        for cid, raw in enumerate(raw_of_class):
            by_raw[raw].append(cid)
        class_types: list[DClassType] = [DClassType((), ())] * len(classes)
        for (positive, negative), cids in by_raw.items():
            if not negative and all(part % 2 == 0 for part in positive):
                if len(cids) != 2:
                    raise AssertionError(f"type {(positive, negative)} should split into 2 classes, got {len(cids)}")
                plus = class_of[self.index[plain_element(positive, n)]]
                for cid in cids:
                    class_types[cid] = DClassType(positive, negative, 1 if cid == plus else -1)
            else:
                if len(cids) != 1:
                    raise AssertionError(f"type {(positive, negative)} should be a single class, got {len(cids)}")
                class_types[cids[0]] = DClassType(positive, negative, None)
        self.class_types = class_types
        self.type_to_class = {t: cid for cid, t in enumerate(class_types)}

    def class_size(self, cid: int) -> int:
        return len(self.classes[cid])

    def class_id_of(self, w: SignedPerm) -> int:
        return self.class_of[self.index[w]]


@cache
def build_group(n: int) -> GroupTable:
    if not 1 <= n <= MAX_RANK:
        raise ValueError(f"explicit group construction is capped at n = {MAX_RANK}")
    return GroupTable(n)


def classify_element(w: SignedPerm, table: GroupTable) -> DClassType:
    """Class label of an explicit element, split tag decided by conjugacy."""
    if len(w) != table.n:
        raise ValueError(f"element acts on {len(w)} points, table is rank {table.n}")
    if w not in table.index:
        raise ValueError(f"{w} is not an even-signed permutation of rank {table.n}")
    return table.class_types[table.class_of[table.index[w]]]


# ---------------------------------------------------------------------------
# The block subgroup and explicit induction

def _in_block_subgroup(w: SignedPerm, a: int) -> bool:
    # Preserves {1..a} setwise with an even number of sign changes in
    # the block (the complementary block is then automatically even).
    flips = 0
    for i in range(a):
        x = w[i]
        if abs(x) > a:
            return False
        if x < 0:
            flips += 1
    return flips % 2 == 0


def _block_parts(w: SignedPerm, a: int) -> tuple[SignedPerm, SignedPerm]:
    wa = w[:a]
    wb = tuple(x - a if x > 0 else x + a for x in w[a:])
    return wa, wb


def _embed_blocks(wa: SignedPerm, wb: SignedPerm) -> SignedPerm:
    a = len(wa)
    return wa + tuple(x + a if x > 0 else x - a for x in wb)


@cache
def _fused_counts(n: int, a: int, b: int) -> tuple[dict[tuple[DClassType, DClassType], int], ...]:
    """Per ambient class: how many subgroup elements of each block-type pair it contains."""
    if a + b != n:
        raise ValueError(f"blocks {a}+{b} do not fill {n}")
    t = build_group(n)
    ta = build_group(a)
    tb = build_group(b)
    counts: list[dict[tuple[DClassType, DClassType], int]] = [defaultdict(int) for _ in t.classes]
    for i, w in enumerate(t.elements):
        if not _in_block_subgroup(w, a):
            continue
        wa, wb = _block_parts(w, a)
        pa = ta.class_types[ta.class_of[ta.index[wa]]]
        pb = tb.class_types[tb.class_of[tb.index[wb]]]
        counts[t.class_of[i]][(pa, pb)] += 1
    return tuple(dict(c) for c in counts)


BlockFn = Callable[[DClassType], int]


def induce_class_function(n: int, a: int, b: int, fa: BlockFn, fb: BlockFn) -> list[Fraction]:
    """Values, per ambient class, of the class function induced from fa x fb.

    fa and fb give the block function on block class labels; virtual
    characters (negative values) are fine.  Computed from the explicit
    element counts, i.e. this is the elementwise induction sum grouped
    by conjugacy class.
    """
    t = build_group(n)
    counts = _fused_counts(n, a, b)
    h_order = group_order_d(a) * group_order_d(b)
    out = []
    for cid in range(len(t.classes)):
        s = 0
        for (pa, pb), cnt in counts[cid].items():
            s += cnt * fa(pa) * fb(pb)
        out.append(Fraction(t.centralizer_orders[cid] * s, h_order))
    return out


def induced_value_elementwise(n: int, a: int, b: int, fa: BlockFn, fb: BlockFn, g: SignedPerm) -> Fraction:
    """Literal induction sum (1/|H|) * sum over x of (fa x fb)(x g x^-1)."""
    t = build_group(n)
    total = 0
    for x in t.elements:
        y = sp_mul(sp_mul(x, g), sp_inv(x))
        if not _in_block_subgroup(y, a):
            continue
        ya, yb = _block_parts(y, a)
        pa = classify_element(ya, build_group(a))
        pb = classify_element(yb, build_group(b))
        total += fa(pa) * fb(pb)
    return Fraction(total, group_order_d(a) * group_order_d(b))


def induced_value_from_subgroup_classes(n: int, a: int, b: int, fa: BlockFn, fb: BlockFn, g: SignedPerm) -> Fraction:
    """Induction via subgroup class representatives and centralizer orders."""
    t = build_group(n)
    ta = build_group(a)
    tb = build_group(b)
    cid_g = t.class_id_of(g)
    total = Fraction(0)
    for ca, members_a in enumerate(ta.classes):
        ra = ta.elements[members_a[0]]
        for cb, members_b in enumerate(tb.classes):
            rb = tb.elements[members_b[0]]
            h = _embed_blocks(ra, rb)
            if t.class_id_of(h) != cid_g:
                continue
            total += Fraction(
                fa(ta.class_types[ca]) * fb(tb.class_types[cb]),
                ta.centralizer_orders[ca] * tb.centralizer_orders[cb],
            )
    return t.centralizer_orders[cid_g] * total


def oracle_char_table(n: int) -> dict[tuple[DIrrLabel, int], int]:
    """Character values attached to the explicit classes of the rank-n group."""
    t = build_group(n)
    return {
        (chi, cid): d_char_value(chi, ty)
        for chi in d_irr_labels(n)
        for cid, ty in enumerate(t.class_types)
    }


def oracle_induce(n: int, a: int, b: int, A: DIrrLabel, B: DIrrLabel) -> DecompositionResult:
    """Decompose the induced character of A x B by explicit summation."""
    t = build_group(n)
    ind = induce_class_function(n, a, b, lambda ca: d_char_value(A, ca), lambda cb: d_char_value(B, cb))
    order = group_order_d(n)
    mults: dict[DIrrLabel, int] = {}
    for X in d_irr_labels(n):
        total = Fraction(0)
        for cid, ty in enumerate(t.class_types):
            total += t.class_size(cid) * ind[cid] * d_char_value(X, ty)
        total /= order
        if total.denominator != 1 or total < 0:
            raise ArithmeticError(f"non-character inner product {total} for {A} x {B} vs {X}")
        if total:
            mults[X] = int(total)
    return DecompositionResult(n, a, b, A, B, mults, method="oracle")


class VerificationReport(NamedTuple):
    n: int
    a: int
    b: int
    pairs_checked: int
    mismatches: tuple


def verify_formula(n: int, a: int, b: int) -> VerificationReport:
    """Compare the closed formula with explicit induction for all (E, X)."""
    mismatches = []
    pairs = 0
    labels_n = d_irr_labels(n)
    for A in d_irr_labels(a):
        for B in d_irr_labels(b):
            explicit = oracle_induce(n, a, b, A, B).multiplicities
            q = InducedQuery(n, a, b, A, B)
            for X in labels_n:
                pairs += 1
                formula = induced_multiplicity(q, X)
                actual = explicit.get(X, 0)
                if formula != actual:
                    mismatches.append((A, B, X, formula, actual))
    return VerificationReport(n, a, b, pairs, tuple(mismatches))


# ---------------------------------------------------------------------------
# Independent formulas used to cross-check individual steps

def iter_ambient_elements(n: int):
    """All signed permutations of rank n (both parities)."""
    for perm in itertools.permutations(range(1, n + 1)):
        for mask in range(1 << n):
            yield tuple(-perm[i] if mask >> i & 1 else perm[i] for i in range(n))


def centralizer_chain_values(n: int, pi: Partition) -> dict[str, int]:
    """The four centralizer orders attached to a doubled cycle type.

    For the class of the sign-free element of cycle type 2*pi: its
    centralizer order in the even-signed group, in the ambient group,
    the sign-free centralizer scaled by 2**len(pi), and the symmetric
    group centralizer of pi scaled by 2**(2 len(pi)).  All four are
    computed by direct counting and should agree.
    """
    if 2 * size(pi) != n:
        raise ValueError(f"2 * |{pi}| != {n}")
    t = build_group(n)
    w = plain_element(tuple(2 * x for x in pi), n)
    in_d = t.centralizer_orders[t.class_id_of(w)]
    in_b = sum(1 for x in iter_ambient_elements(n) if sp_mul(x, w) == sp_mul(w, x))
    plain = [tuple(p) for p in itertools.permutations(range(1, n + 1))]
    in_plain = sum(1 for x in plain if sp_mul(x, w) == sp_mul(w, x))
    m = n // 2
    wp = plain_element(pi, m)
    small = [tuple(p) for p in itertools.permutations(range(1, m + 1))]
    in_small = sum(1 for x in small if sp_mul(x, wp) == sp_mul(wp, x))
    return {
        "even_signed": in_d,
        "ambient": in_b,
        "scaled_plain": 2 ** len(pi) * in_plain,
        "scaled_symmetric": 2 ** (2 * len(pi)) * in_small,
    }


def split_partition_pairs(pi: Partition, left_size: int) -> set[tuple[Partition, Partition]]:
    """All (delta, eps) with delta u eps = pi and |delta| = left_size."""
    out = set()
    for mask in range(1 << len(pi)):
        delta = tuple(pi[i] for i in range(len(pi)) if mask >> i & 1)
        if sum(delta) == left_size:
            eps = tuple(pi[i] for i in range(len(pi)) if not mask >> i & 1)
            out.add((delta, eps))
    return out


def sym_induced_product_value(alpha: Partition, beta: Partition, pi: Partition) -> int:
    """Value at cycle type pi of the character induced from [alpha] x [beta].

    Uses the class-representative induction formula over the Young
    subgroup: the classes meeting cycle type pi are exactly the splits
    of pi into the two blocks.
    """
    a, b, m = size(alpha), size(beta), size(pi)
    if a + b != m:
        raise ValueError(f"|{alpha}| + |{beta}| != |{pi}|")
    total = Fraction(0)
    for delta, eps in split_partition_pairs(pi, a):
        total += Fraction(
            sym_char_value(alpha, delta) * sym_char_value(beta, eps),
            sym_centralizer_order(delta) * sym_centralizer_order(eps),
        )
    total *= sym_centralizer_order(pi)
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral induced value {total}")
    return int(total)


def lr_coefficient_by_characters(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    """LR coefficient from the defining inner product over class sums.

    Completely independent of the tableau enumeration: sums character
    values over pairs of cycle types weighted by class sizes.
    """
    a, b = size(alpha), size(beta)
    if size(gamma) != a + b:
        return 0
    num = 0
    for mu in enumerate_partitions(a):
        mu_classes = factorial(a) // sym_centralizer_order(mu)
        for nu in enumerate_partitions(b):
            nu_classes = factorial(b) // sym_centralizer_order(nu)
            fused = tuple(sorted(mu + nu, reverse=True))
            num += mu_classes * nu_classes * sym_char_value(alpha, mu) * sym_char_value(beta, nu) * sym_char_value(gamma, fused)
    denom = factorial(a) * factorial(b)
    if num % denom:
        raise ArithmeticError("inner product is not an integer")
    return num // denom
