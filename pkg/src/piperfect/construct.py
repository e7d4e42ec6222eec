"""Parity-check matrices whose codes are 2-perfect under a two-valued weight.

A t x n matrix belongs to the family when

* P1: its columns are nonzero and pairwise distinct,
* P2: no sum of two of the first m columns equals one of the last n - m,
* P3: no sum of two or three of the first m columns equals one of the first m,

where n = 2^t - 1 - C(m, 2).  Columns are t-bit integers, top row = bit 0.
Once the first m columns are fixed the remaining columns are forced: they
are every nonzero vector not among the head or its pair sums.  They are
laid out in ascending order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Sequence

from .core import (
    InfeasibleParameters,
    LengthMismatch,
    LinearCode,
    TwoValuedProfile,
    WeightVector,
    rank,
)
from .weightsearch import greedy_independent


@dataclass(frozen=True)
class FamilyViolation:
    prop: str
    columns: tuple[int, ...]  # 1-based column indices


@dataclass(frozen=True)
class FamilyVerdict:
    ok: bool
    violation: FamilyViolation | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class FamilyMatrix:
    t: int
    m: int
    columns: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.columns)

    @property
    def profile(self) -> TwoValuedProfile:
        return TwoValuedProfile(self.n, self.m)

    def parity_check(self) -> LinearCode:
        return LinearCode.from_columns(self.columns, self.t)

    def to_json(self) -> dict:
        return {"t": self.t, "m": self.m, "n": self.n, "columns": list(self.columns)}


def family_check(columns: Sequence[int], t: int, m: int) -> FamilyVerdict:
    n = len(columns)
    if n != 2**t - 1 - comb(m, 2):
        raise LengthMismatch(f"n = {n} but 2^t - 1 - C(m,2) = {2**t - 1 - comb(m, 2)}")
    if not 0 <= m <= n:
        raise ValueError(f"m = {m} out of range for n = {n}")
    if any(c < 0 or c >> t for c in columns):
        raise LengthMismatch(f"columns must be {t}-bit values")

    seen: dict[int, int] = {}
    for i, c in enumerate(columns, 1):
        if c == 0:
            return FamilyVerdict(False, FamilyViolation("P1", (i,)))
        if c in seen:
            return FamilyVerdict(False, FamilyViolation("P1", (seen[c], i)))
        seen[c] = i

    head = columns[:m]
    for (i, a), (j, b) in combinations(enumerate(head, 1), 2):
        k = seen.get(a ^ b)
        if k is not None and k > m:
            return FamilyVerdict(False, FamilyViolation("P2", (i, j, k)))
    for size in (2, 3):
        for sub in combinations(range(1, m + 1), size):
            acc = 0
            for i in sub:
                acc ^= head[i - 1]
            k = seen.get(acc)
            if k is not None and k <= m:
                return FamilyVerdict(False, FamilyViolation("P3", sub + (k,)))
    return FamilyVerdict(True)


def forced_tail(head: Sequence[int], t: int) -> list[int]:
    used = set(head) | {a ^ b for a, b in combinations(head, 2)}
    return [v for v in range(1, 1 << t) if v not in used]


def family_build(t: int, m: int, seed: Sequence[int] | None = None) -> FamilyMatrix:
    if t < 1 or m < 0:
        raise ValueError("need t >= 1 and m >= 0")
    n = 2**t - 1 - comb(m, 2)
    if n - m <= 0:
        raise InfeasibleParameters(f"2^t - 1 - m - C(m,2) = {n - m} must be positive")
    if seed and any(c <= 0 or c >> t for c in seed):
        raise ValueError(f"seed columns must be nonzero {t}-bit values")
    units = [1 << r for r in range(t)]
    order = units + [v for v in range(1, 1 << t) if v not in units]
    try:
        head = greedy_independent(m, order, seed or ())
    except InfeasibleParameters as exc:
        raise InfeasibleParameters(f"no valid head of {m} columns in {t} rows: {exc}") from None
    cols = tuple(head) + tuple(forced_tail(head, t))
    assert len(cols) == n
    return FamilyMatrix(t, m, cols)


def code_from_family(F: FamilyMatrix) -> tuple[LinearCode, WeightVector]:
    return F.parity_check(), F.profile.weight_vector()


def canonical_form(F: FamilyMatrix) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Row-reduce so the head becomes e_1..e_m (head must be independent).

    Returns the transformed head and the sorted transformed tail.  Two
    family matrices with the same (t, m) agree here exactly when one is a
    row transform plus tail permutation of the other.
    """
    t, m = F.t, F.m
    head = list(F.columns[:m])
    # Extend the head to a basis with unit vectors, then invert that basis.
    basis = list(head)
    for u in (1 << r for r in range(t)):
        if len(basis) == t:
            break
        trial = basis + [u]
        if _independent(trial):
            basis = trial
    if len(basis) != t or not _independent(basis):
        raise ValueError("head columns are not linearly independent")
    inv = _inverse(basis, t)

    def apply(v: int) -> int:
        out = 0
        for r in range(t):
            if v >> r & 1:
                out ^= inv[r]
        return out

    return tuple(apply(c) for c in head), tuple(sorted(apply(c) for c in F.columns[m:]))


def _independent(vectors: Sequence[int]) -> bool:
    return rank(vectors) == len(vectors)


def _inverse(basis: Sequence[int], t: int) -> list[int]:
    """inv[r] = image of unit e_r under the map sending basis[j] to e_j."""
    # Solve for each unit vector as a combination of the basis (Gauss-Jordan).
    rows = [(b, 1 << j) for j, b in enumerate(basis)]
    for col in range(t):
        piv = next(i for i in range(col, t) if rows[i][0] >> col & 1)
        rows[col], rows[piv] = rows[piv], rows[col]
        for i in range(t):
            if i != col and rows[i][0] >> col & 1:
                rows[i] = (rows[i][0] ^ rows[col][0], rows[i][1] ^ rows[col][1])
    return [rows[r][1] for r in range(t)]
