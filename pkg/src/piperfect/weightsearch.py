"""Weight vectors that make (extended) Hamming codes 2- or 3-perfect."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb, isqrt
from typing import Iterable, Sequence

from .core import (
    InfeasibleParameters,
    LinearCode,
    WeightVector,
    enumerate_codewords,
    max_exhaustive_n,
    popcount,
)
from .hamming import EXTENDED, STANDARD, build, fourth_point
from .perfect import PerfectnessReport, verify_exhaustive, verify_structural

NAGELL = "nagell-no-solution"
PARITY = "parity-fail"
M12 = "proven-infeasible-m12"
CONSTRUCTIVE = "constructive"


@dataclass(frozen=True)
class WeightAssignment:
    m: int
    radius: int
    code: LinearCode
    pi: WeightVector
    notes: tuple[str, ...] = field(default=(), compare=False)

    @property
    def X1(self) -> frozenset[int]:
        return self.pi.class_of(1)

    @property
    def X2(self) -> frozenset[int]:
        return self.pi.class_of(2)

    @property
    def Y(self) -> frozenset[int]:
        """Positions heavier than the radius."""
        return frozenset(i for i, w in enumerate(self.pi.weights, 1) if w > self.radius)

    def verify(self, method: str | None = None, jobs: int = 1) -> PerfectnessReport:
        if method is None:
            small = self.code.n <= max_exhaustive_n() and self.code.k <= 24
            method = "exhaustive" if small else "structural"
        if method == "exhaustive":
            return verify_exhaustive(enumerate_codewords(self.code), self.pi, self.radius, jobs)
        return verify_structural(self.code, self.pi, self.radius)

    def to_json(self, verified: bool | None = None) -> dict:
        return {
            "m": self.m,
            "radius": self.radius,
            "X1": sorted(self.X1),
            "X2": sorted(self.X2),
            "Y": sorted(self.Y),
            "classes": {str(w): sorted(s) for w, s in self.pi.classes.items()},
            "pi": list(self.pi.weights),
            "verified": verified,
        }


@dataclass(frozen=True)
class FeasibilityVerdict:
    m: int
    feasible: bool
    reason: str
    x1: int | None = None
    x2: int | None = None

    def to_json(self) -> dict:
        return {"m": self.m, "feasible": self.feasible, "reason": self.reason,
                "x1": self.x1, "x2": self.x2}


def nagell_solutions(limit: int) -> list[tuple[int, int]]:
    """All (x, n) with x^2 + 7 = 2^n, x >= 1 and n <= limit."""
    if limit > 63:
        raise ValueError("limit must be at most 63")
    out = []
    for n in range(1, limit + 1):
        v = (1 << n) - 7
        if v >= 1 and isqrt(v) ** 2 == v:
            out.append((isqrt(v), n))
    return out


def small_dependency(vectors: Sequence[int], max_size: int = 4) -> tuple[int, ...] | None:
    """A nonempty subset of at most ``max_size`` vectors XOR-ing to zero."""
    for size in range(1, max_size + 1):
        for sub in combinations(vectors, size):
            acc = 0
            for v in sub:
                acc ^= v
            if not acc:
                return sub
    return None


def greedy_independent(
    count: int, candidates: Iterable[int], seed: Sequence[int] = ()
) -> list[int]:
    """Pick ``count`` vectors, no <= 4 of them XOR-ing to zero.

    Seed vectors are taken first; then candidates in the given order,
    skipping any equal to an XOR of at most three already chosen.
    """
    chosen: list[int] = []
    sums1: set[int] = set()
    sums2: set[int] = set()
    sums3: set[int] = set()

    def blocked(v: int) -> bool:
        return v == 0 or v in sums1 or v in sums2 or v in sums3

    def take(v: int) -> None:
        sums3.update(v ^ s for s in sums2)
        sums2.update(v ^ s for s in sums1)
        sums1.add(v)
        chosen.append(v)

    for v in seed:
        if blocked(v):
            raise ValueError(f"seed vector {v} creates a dependency of size <= 4")
        take(v)
    if len(chosen) > count:
        raise ValueError(f"seed has {len(chosen)} vectors, only {count} wanted")
    for v in candidates:
        if len(chosen) == count:
            break
        if not blocked(v):
            take(v)
    if len(chosen) < count:
        raise InfeasibleParameters(f"greedy search exhausted after {len(chosen)} of {count}")
    return chosen


def hamming_conditions(m: int, x1: int) -> tuple[bool, bool, int]:
    """The two sufficient conditions for the H_m construction, and x2."""
    n = (1 << m) - 1
    gv = 1 + comb(x1 - 1, 1) + comb(x1 - 1, 2) + comb(x1 - 1, 3) < (1 << m) if x1 >= 1 else True
    x2 = n - x1 - comb(x1, 2)
    return gv, x2 >= 0, x2


def max_hamming_x1(m: int) -> int:
    x1 = 0
    while all(hamming_conditions(m, x1 + 1)[:2]):
        x1 += 1
    return x1


def hamming_2perfect_pi(m: int, x1: int, seed: Sequence[int] = ()) -> WeightAssignment:
    """Weights making H_m 2-perfect with |X_1| = x1.

    X_1 has no dependency of size <= 4, every pair sum a ^ b of X_1 gets
    weight 3 and the rest gets weight 2.
    """
    if x1 < 0:
        raise ValueError("x1 must be nonnegative")
    gv, packing, x2 = hamming_conditions(m, x1)
    if not gv:
        raise InfeasibleParameters(f"x1={x1} violates the independence bound for m={m}")
    if not packing:
        raise InfeasibleParameters(f"x2 = {x2} < 0 for m={m}, x1={x1}")
    family = build(m, STANDARD)
    n = family.n
    if any(not 1 <= s <= n for s in seed):
        raise ValueError(f"seed positions must lie in 1..{n}")
    X1 = greedy_independent(x1, range(1, n + 1), seed)
    Y = {a ^ b for a, b in combinations(X1, 2)}
    if len(Y) != comb(x1, 2) or Y & set(X1):
        raise AssertionError("pair-sum map is not injective or meets X1")
    X2 = set(range(1, n + 1)) - set(X1) - Y
    assert len(X2) == x2
    pi = WeightVector.from_classes(n, {1: X1, 2: X2, 3: Y})
    notes = (
        f"X1 chosen greedily{' from seed ' + str(list(seed)) if seed else ''}: {X1}",
        "pair sums of X1 weighted 3",
        f"x2 = 2^m - 1 - x1 - C(x1,2) = {x2}",
    )
    return WeightAssignment(m, 2, family.code, pi, notes)


def ext_hamming_2perfect_feasibility(m: int) -> FeasibilityVerdict:
    """Whether some weight vector makes the extended code 2-perfect.

    Weights must be 1 or 2, and packing forces C(x1, 2) = 2^m - 1, i.e.
    x1 = (1 + s) / 2 with s^2 = 2^(m+3) - 7.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    v = (1 << (m + 3)) - 7
    s = isqrt(v)
    if s * s != v:
        return FeasibilityVerdict(m, False, NAGELL)
    if (1 + s) % 2 or (1 + s) // 2 > 1 << m:
        return FeasibilityVerdict(m, False, PARITY)
    x1 = (1 + s) // 2
    x2 = (1 << m) - x1
    if m == 12:
        return FeasibilityVerdict(m, False, M12, x1, x2)
    return FeasibilityVerdict(m, True, CONSTRUCTIVE, x1, x2)


def ext_hamming_2perfect_pi(m: int) -> WeightAssignment:
    verdict = ext_hamming_2perfect_feasibility(m)
    if not verdict.feasible:
        raise InfeasibleParameters(f"extended Hamming code m={m} cannot be 2-perfect ({verdict.reason})")
    family = build(m, EXTENDED)
    n = family.n
    if m == 2:
        X1 = {1, 2, 3}
        note = "X1 = any three positions"
    else:
        word = next(int(c) for c in enumerate_codewords(family.code).words
                    if popcount(int(c)) == verdict.x1)
        X1 = {i + 1 for i in range(n) if word >> i & 1}
        note = f"X1 = support of the lowest weight-{verdict.x1} codeword"
    pi = WeightVector.from_classes(n, {1: X1, 2: set(range(1, n + 1)) - X1})
    return WeightAssignment(m, 2, family.code, pi, (note,))


def ext_hamming_3perfect_pi(m: int, x1: int) -> WeightAssignment:
    if x1 not in (1, 2, 3):
        raise InfeasibleParameters("a 3-perfect extended Hamming code needs 1 <= x1 <= 3")
    if x1 == 3 and m != 2:
        raise InfeasibleParameters("x1 = 3 forces m = 2")
    family = build(m, EXTENDED)
    n = family.n
    rest = set(range(1, n + 1))
    if x1 == 1:
        classes = {1: {1}, 2: rest - {1}}
        notes = ("X1 = {1}, every other position weight 2",)
    elif x1 == 2:
        X2: set[int] = set()
        X3: set[int] = set()
        remaining = sorted(rest - {1, 2})
        paired: set[int] = set()
        for g in remaining:
            if g in paired:
                continue
            d = fourth_point(1, 2, g, m)
            X2.add(min(g, d))
            X3.add(max(g, d))
            paired.update((g, d))
        classes = {1: {1, 2}, 2: X2, 3: X3}
        notes = ("X1 = {1, 2}; each {1, 2, g, d} codeword puts min(g, d) in X2, max in X3",)
    else:
        d = fourth_point(1, 2, 3, m)
        classes = {1: {1, 2, 3}, 4: {d}}
        notes = (f"X1 = {{1, 2, 3}}, completing position {d} weighted 4",)
    pi = WeightVector.from_classes(n, classes)
    return WeightAssignment(m, 3, family.code, pi, notes)


def three_perfect_sphere_formula(pi: WeightVector) -> int:
    """1 + x1 + x2 + C(x1,2) + x3 + C(x1,3) + x1*x2."""
    x1, x2, x3 = pi.size_of(1), pi.size_of(2), pi.size_of(3)
    return 1 + x1 + x2 + comb(x1, 2) + x3 + comb(x1, 3) + x1 * x2
