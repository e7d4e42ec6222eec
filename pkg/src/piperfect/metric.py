"""Weighted Hamming weight, distance and spheres."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, prod

import numpy as np

from .core import (
    InstanceTooLarge,
    LengthMismatch,
    WeightVector,
    Word,
    as_bits,
)

# Bounded-support sphere searches refuse to produce more patterns than this.
MAX_SPHERE_PATTERNS = 1 << 24


def pi_weight(x: Word, pi: WeightVector) -> int:
    return pi.weight(as_bits(x, pi.n))


def pi_distance(x: Word, y: Word, pi: WeightVector) -> int:
    return pi.weight(as_bits(x, pi.n) ^ as_bits(y, pi.n))


def error_patterns(pi: WeightVector, r: int) -> list[int]:
    """All e with w_pi(e) <= r, in increasing bitmask order.

    Depth-first over positions with a running budget; positions are tried in
    order of increasing weight so a branch stops at the first one too heavy.
    """
    if r < 0:
        return []
    size = sphere_size(pi, r).total
    if size > MAX_SPHERE_PATTERNS:
        raise InstanceTooLarge(f"sphere of radius {r} holds {size} words")
    order = sorted(range(pi.n), key=lambda i: pi.weights[i])
    weights = [pi.weights[i] for i in order]
    out: list[int] = []

    def descend(start: int, budget: int, acc: int) -> None:
        out.append(acc)
        for j in range(start, len(order)):
            w = weights[j]
            if w > budget:
                break
            descend(j + 1, budget - w, acc | 1 << order[j])

    descend(0, r, 0)
    out.sort()
    return out


def sphere_enumerate(x: Word, r: int, pi: WeightVector) -> frozenset[int]:
    """The pi-sphere S(x; r) as a set of bitmasks."""
    xb = as_bits(x, pi.n)
    return frozenset(xb ^ e for e in error_patterns(pi, r))


def sphere_enumerate_scan(x: Word, r: int, pi: WeightVector) -> frozenset[int]:
    """Same as :func:`sphere_enumerate`, by scanning all of F_2^n."""
    xb = as_bits(x, pi.n)
    table = pi.weight_table()  # raises past the exhaustive cap
    ys = np.arange(1 << pi.n, dtype=np.int64)
    return frozenset(int(y) for y in ys[table[ys ^ xb] <= r])


@dataclass(frozen=True)
class SphereSizeBreakdown:
    """|S_pi(x; r)| split by composition.

    Each key is a tuple of ``(weight class i, count k_i)`` pairs with
    ``k_i > 0``, and maps to prod C(x_i, k_i).
    """

    radius: int
    total: int
    compositions: dict[tuple[tuple[int, int], ...], int]


def sphere_size(pi: WeightVector, r: int) -> SphereSizeBreakdown:
    if r < 0:
        raise ValueError("radius must be nonnegative")
    classes = [(i, x) for i, x in pi.sizes.items() if i <= r]

    # counts[s] = number of patterns of pi-weight exactly s
    counts = [1] + [0] * r
    for i, x in classes:
        nxt = [0] * (r + 1)
        for s, c in enumerate(counts):
            if not c:
                continue
            for k in range(0, min(x, (r - s) // i) + 1):
                nxt[s + i * k] += c * comb(x, k)
        counts = nxt
    total = sum(counts)

    comps: dict[tuple[tuple[int, int], ...], int] = {}

    def walk(idx: int, budget: int, chosen: tuple[tuple[int, int], ...]) -> None:
        if idx == len(classes):
            comps[chosen] = prod(comb(pi.size_of(i), k) for i, k in chosen)
            return
        i, x = classes[idx]
        for k in range(0, min(x, budget // i) + 1):
            walk(idx + 1, budget - i * k, chosen + ((i, k),) if k else chosen)

    walk(0, r, ())
    if sum(comps.values()) != total:
        raise AssertionError("sphere composition breakdown disagrees with DP total")
    return SphereSizeBreakdown(r, total, comps)


def check_lengths(pi: WeightVector, n: int) -> None:
    if pi.n != n:
        raise LengthMismatch(f"weight vector has length {pi.n}, code has length {n}")


__all__ = [
    "pi_weight",
    "pi_distance",
    "error_patterns",
    "sphere_enumerate",
    "sphere_enumerate_scan",
    "sphere_size",
    "SphereSizeBreakdown",
]
