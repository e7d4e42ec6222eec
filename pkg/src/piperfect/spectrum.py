"""Fourier analysis of 2-perfect codes under the two-valued weight vector.

Throughout, ``profile`` is a :class:`~piperfect.core.TwoValuedProfile`:
weight 1 on positions 1..m (the set M), weight 2 on the rest, with
1 + n + C(m,2) = 2^t.  All arithmetic is exact (int64 for dense tables,
Python ints and Fractions elsewhere).

The Fourier coefficient of a code at frequency d is
A_d = sum over c in C of (-1)^(c.d).  For a 2-perfect code it vanishes
unless d = 0 or d lies in one of the classes

    D_k = {d : |d & M| = k, |d| = 2^(t-1) - k(m-k)},   k = 0..m.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, lcm
from typing import Sequence

import numpy as np

from .core import (
    BitWord,
    ExplicitCode,
    InconsistentInput,
    InstanceTooLarge,
    LengthMismatch,
    TwoValuedProfile,
    WeightVector,
    Word,
    as_bits,
)
from .metric import error_patterns

MAX_SPECTRUM_N = 20


def _check_n(n: int) -> None:
    if n > MAX_SPECTRUM_N:
        raise InstanceTooLarge(f"dense tables over F_2^{n} exceed n <= {MAX_SPECTRUM_N}")


def _popcount(a: np.ndarray) -> np.ndarray:
    return np.bitwise_count(a).astype(np.int64)


def walsh_hadamard(values: np.ndarray) -> np.ndarray:
    """Unnormalised transform: out[d] = sum_x (-1)^(x.d) values[x]."""
    a = np.array(values, dtype=np.int64)
    size = a.size
    if size & (size - 1):
        raise ValueError("length must be a power of two")
    h = 1
    while h < size:
        a = a.reshape(-1, 2, h)
        a = np.concatenate((a[:, :1] + a[:, 1:], a[:, :1] - a[:, 1:]), axis=1)
        h *= 2
    return a.reshape(-1)


@dataclass(frozen=True, eq=False)
class FourierTable:
    n: int
    coeffs: np.ndarray

    def __getitem__(self, d: Word) -> int:
        return int(self.coeffs[as_bits(d, self.n)])

    def grouped(self, profile: TwoValuedProfile) -> tuple[int, ...]:
        """sum of A_d over D_k, for k = 0..m."""
        k, in_d = _d_class_masks(profile)
        return tuple(int(self.coeffs[in_d & (k == j)].sum()) for j in range(profile.m + 1))

    def class_counts(self, profile: TwoValuedProfile) -> tuple[int, ...]:
        k, in_d = _d_class_masks(profile)
        return tuple(int((in_d & (k == j)).sum()) for j in range(profile.m + 1))


def fourier(code: ExplicitCode) -> FourierTable:
    _check_n(code.n)
    indicator = np.zeros(1 << code.n, dtype=np.int64)
    indicator[code.words.astype(np.int64)] = 1
    out = walsh_hadamard(indicator)
    out.flags.writeable = False
    return FourierTable(code.n, out)


def fourier_naive(code: ExplicitCode) -> FourierTable:
    """Direct character sums, one codeword at a time."""
    _check_n(code.n)
    d = np.arange(1 << code.n, dtype=np.int64)
    out = np.zeros(d.size, dtype=np.int64)
    for c in code:
        out += 1 - 2 * (_popcount(d & c) & 1)
    out.flags.writeable = False
    return FourierTable(code.n, out)


def _d_class_masks(profile: TwoValuedProfile) -> tuple[np.ndarray, np.ndarray]:
    _check_n(profile.n)
    d = np.arange(1 << profile.n, dtype=np.int64)
    k = _popcount(d & profile.head_mask)
    w = _popcount(d)
    in_d = (w == 2 ** (profile.t - 1) - k * (profile.m - k)) & (d != 0)
    return k, in_d


@dataclass(frozen=True)
class DkClass:
    k: int
    members: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)


def tail_weight(profile: TwoValuedProfile, k: int) -> int:
    """|d & ~M| for every d in D_k."""
    return 2 ** (profile.t - 1) - k * (profile.m - k + 1)


def dk_members(profile: TwoValuedProfile, k: int) -> DkClass:
    m, n = profile.m, profile.n
    if not 0 <= k <= m:
        raise ValueError(f"k must lie in 0..{m}")
    s = tail_weight(profile, k)
    if not 0 <= s <= n - m:
        return DkClass(k, ())
    members = []
    for head in combinations(range(m), k):
        hb = sum(1 << i for i in head)
        for tail in combinations(range(m, n), s):
            members.append(hb | sum(1 << i for i in tail))
    return DkClass(k, tuple(sorted(members)))


@dataclass(frozen=True)
class SupportVerdict:
    ok: bool
    witness: int | None = None
    coefficient: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def support_characterization(code: ExplicitCode, profile: TwoValuedProfile) -> SupportVerdict:
    """True iff A_d != 0 only at d = 0 or d in some D_k."""
    if code.n != profile.n:
        raise LengthMismatch("code and profile lengths differ")
    table = fourier(code)
    _, in_d = _d_class_masks(profile)
    allowed = in_d.copy()
    allowed[0] = True
    bad = np.flatnonzero((table.coeffs != 0) & ~allowed)
    if bad.size:
        d = int(bad[0])
        return SupportVerdict(False, d, int(table.coeffs[d]))
    return SupportVerdict(True)


def sphere_character_sum(d: int, x: int, profile: TwoValuedProfile) -> int:
    """sum over y in S(x; 2) of (-1)^(d.y), by enumeration."""
    return sum(
        -1 if bin(d & (x ^ e)).count("1") & 1 else 1
        for e in error_patterns(profile.weight_vector(), 2)
    )


def sphere_character_formula(d: int, x: int, profile: TwoValuedProfile) -> int:
    n, m = profile.n, profile.m
    k = bin(d & profile.head_mask).count("1")
    sign = -1 if bin(d & x).count("1") & 1 else 1
    return sign * (1 + n - 2 * bin(d).count("1") + comb(m, 2) - 2 * k * (m - k))


# ---------- functions on the cube


@dataclass(frozen=True)
class RationalFunctionOnCube:
    n: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        _check_n(self.n)
        if len(self.values) != 1 << self.n:
            raise LengthMismatch(f"need {1 << self.n} values, got {len(self.values)}")

    @classmethod
    def indicator(cls, code: ExplicitCode) -> "RationalFunctionOnCube":
        vals = [Fraction(0)] * (1 << code.n)
        for c in code:
            vals[c] = Fraction(1)
        return cls(code.n, tuple(vals))

    @classmethod
    def constant(cls, n: int, value: Fraction) -> "RationalFunctionOnCube":
        return cls(n, (Fraction(value),) * (1 << n))

    @classmethod
    def from_coefficients(cls, n: int, coeffs: dict[int, Fraction]) -> "RationalFunctionOnCube":
        """f(v) = 2^-n * sum_d A_d (-1)^(d.v)."""
        _check_n(n)
        v = np.arange(1 << n, dtype=np.int64)
        num = [Fraction(0)] * (1 << n)
        for d, a in coeffs.items():
            signs = 1 - 2 * (_popcount(v & d) & 1)
            a = Fraction(a)
            for i, s in enumerate(signs.tolist()):
                num[i] += a if s > 0 else -a
        scale = Fraction(1, 1 << n)
        return cls(n, tuple(x * scale for x in num))


@dataclass(frozen=True)
class WeightedPerfectVerdict:
    ok: bool
    center: int | None = None
    total: Fraction | None = None

    def __bool__(self) -> bool:
        return self.ok


def weighted_perfect_check(f: RationalFunctionOnCube, profile: TwoValuedProfile) -> WeightedPerfectVerdict:
    """Whether every radius-2 sphere sum of f equals 1."""
    if f.n != profile.n:
        raise LengthMismatch("function and profile lengths differ")
    den = lcm(*(v.denominator for v in f.values))
    scaled = np.array([int(v * den) for v in f.values], dtype=object)
    idx = np.arange(1 << f.n, dtype=np.int64)
    sums = np.zeros(idx.size, dtype=object)
    for e in error_patterns(profile.weight_vector(), 2):
        sums = sums + scaled[idx ^ e]
    bad = np.flatnonzero(sums != den)
    if bad.size:
        x = int(bad[0])
        return WeightedPerfectVerdict(False, x, Fraction(sums[x], den))
    return WeightedPerfectVerdict(True)


def translation_vector(profile: TwoValuedProfile) -> BitWord:
    """u with C + u = C for every 2-perfect code under this profile."""
    bits = (1 << profile.n) - 1 if profile.m % 2 else profile.tail_mask
    return BitWord(bits, profile.n)


# ---------- recovering the weight distribution


Matrix = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class EMatrix:
    m: int
    entries: Matrix

    @property
    def inverse(self) -> Matrix:
        return invert_lower_triangular(self.entries)


def build_E(m: int) -> EMatrix:
    """Lower-triangular E with E[l][k] = (-1)^k C(m-k, l-k).

    Row l comes from the l-th Taylor coefficient at x = 1 of the restricted
    enumerator identity, so E x = y links grouped Fourier sums x to y.
    """
    if not 0 <= m <= 30:
        raise ValueError("m must lie in 0..30")
    rows = tuple(
        tuple(Fraction((-1) ** j * comb(m - j, i - j)) if i >= j else Fraction(0) for j in range(m + 1))
        for i in range(m + 1)
    )
    return EMatrix(m, rows)


def printed_E(m: int) -> EMatrix:
    """The variant with entries (-1)^j C(m-j, i-j) / C(i, j); kept for comparison only."""
    rows = tuple(
        tuple(
            Fraction((-1) ** j * comb(m - j, i - j), comb(i, j)) if i >= j else Fraction(0)
            for j in range(m + 1)
        )
        for i in range(m + 1)
    )
    return EMatrix(m, rows)


def invert_lower_triangular(L: Sequence[Sequence[Fraction]]) -> Matrix:
    size = len(L)
    inv = [[Fraction(0)] * size for _ in range(size)]
    for col in range(size):
        # forward substitution for L z = e_col
        for i in range(size):
            acc = Fraction(int(i == col))
            for j in range(i):
                acc -= L[i][j] * inv[j][col]
            if L[i][i] == 0:
                raise ZeroDivisionError("singular triangular matrix")
            inv[i][col] = acc / L[i][i]
    return tuple(tuple(r) for r in inv)


def matmul(A: Sequence[Sequence[Fraction]], B: Sequence[Sequence[Fraction]]) -> Matrix:
    return tuple(
        tuple(sum((A[i][k] * B[k][j] for k in range(len(B))), Fraction(0)) for j in range(len(B[0])))
        for i in range(len(A))
    )


@dataclass(frozen=True)
class DistributionTable:
    """a[i][j]: codewords with i ones in M and j ones outside M."""

    m: int
    tail: int
    counts: tuple[tuple[int, ...], ...]

    @classmethod
    def from_code(cls, code: ExplicitCode, profile: TwoValuedProfile) -> "DistributionTable":
        m, tail = profile.m, profile.n - profile.m
        a = [[0] * (tail + 1) for _ in range(m + 1)]
        for c in code:
            a[bin(c & profile.head_mask).count("1")][bin(c & profile.tail_mask).count("1")] += 1
        return cls(m, tail, tuple(tuple(r) for r in a))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.counts[i][j]

    @property
    def head(self) -> tuple[int, ...]:
        return tuple(r[0] for r in self.counts)

    @property
    def total(self) -> int:
        return sum(map(sum, self.counts))

    def pi_enumerator(self) -> list[int]:
        """Coefficients of sum a[i][j] x^(i + 2j)."""
        out = [0] * (self.m + 2 * self.tail + 1)
        for i, row in enumerate(self.counts):
            for j, a in enumerate(row):
                out[i + 2 * j] += a
        return _trim(out)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i\\j"] + list(range(self.tail + 1)))
        for i, row in enumerate(self.counts):
            w.writerow([i] + list(row))
        return buf.getvalue()

    def to_json(self) -> dict:
        return {"m": self.m, "tail": self.tail, "a": [list(r) for r in self.counts]}


@dataclass(frozen=True)
class Recovery:
    table: DistributionTable
    grouped: tuple[int, ...]


def _poly_pow_product(a: int, b: int, sign_first: int) -> list[int]:
    """Coefficients of (1 + sign*x)^a (1 + x)^b."""
    p = [comb(a, i) * sign_first**i for i in range(a + 1)]
    q = [comb(b, i) for i in range(b + 1)]
    out = [0] * (a + b + 1)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            out[i + j] += x * y
    return out


def _trim(coeffs: list[int]) -> list[int]:
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def recover_distribution(
    a_head: Sequence[int], profile: TwoValuedProfile, code_size: int | None = None
) -> Recovery:
    """All a[i][j] of a 2-perfect code from the counts a[i][0] inside M."""
    n, m, t = profile.n, profile.m, profile.t
    tail = n - m
    if len(a_head) != m + 1:
        raise InconsistentInput(f"need {m + 1} head counts, got {len(a_head)}")
    if any(int(a) != a or a < 0 for a in a_head) or a_head[0] != 1:
        raise InconsistentInput("head counts must be nonnegative integers with a[0][0] = 1")
    size = 1 << (n - t)
    if code_size is not None and code_size != size:
        raise InconsistentInput(f"|C| = {code_size} but a 2-perfect code has 2^(n-t) = {size} words")

    y = [
        (1 << (n - m + l)) * sum(comb(i, l) * a_head[i] for i in range(l, m + 1)) - size * comb(m, l)
        for l in range(m + 1)
    ]
    inv = build_E(m).inverse
    x = [sum((inv[i][j] * y[j] for j in range(m + 1)), Fraction(0)) for i in range(m + 1)]
    if any(v.denominator != 1 for v in x):
        raise InconsistentInput(f"grouped Fourier sums are not integers: {x}")
    grouped = tuple(int(v) for v in x)

    # 2^n * sum a[i][j] X^i Y^j = |C| (1+X)^m (1+Y)^tail
    #     + sum_k x_k (1-X)^k (1+X)^(m-k) (1-Y)^s_k (1+Y)^(tail-s_k)
    terms = [(size, _poly_pow_product(0, m, 1), _poly_pow_product(0, tail, 1))]
    for k, xk in enumerate(grouped):
        s = tail_weight(profile, k)
        if not 0 <= s <= tail:
            if xk:
                raise InconsistentInput(f"D_{k} is empty but its grouped sum is {xk}")
            continue
        terms.append((xk, _poly_pow_product(k, m - k, -1), _poly_pow_product(s, tail - s, -1)))
    scaled = [[0] * (tail + 1) for _ in range(m + 1)]
    for coef, px, py in terms:
        for i, a in enumerate(px):
            if a:
                for j, b in enumerate(py):
                    scaled[i][j] += coef * a * b
    denom = 1 << n
    if any(v % denom or v < 0 for row in scaled for v in row):
        raise InconsistentInput("head counts do not come from a 2-perfect code")
    table = DistributionTable(m, tail, tuple(tuple(v // denom for v in row) for row in scaled))
    if list(table.head) != list(a_head):
        raise InconsistentInput("recovered table does not reproduce the head counts")
    return Recovery(table, grouped)


def recover_from_code(code: ExplicitCode, profile: TwoValuedProfile) -> Recovery:
    head = DistributionTable.from_code(code, profile).head
    return recover_distribution(head, profile, code_size=len(code))


def pi_weight_enumerator(code: ExplicitCode, pi: WeightVector) -> list[int]:
    """Coefficient list of sum over c of x^(w_pi(c))."""
    if code.n != pi.n:
        raise LengthMismatch("code and weight vector lengths differ")
    w = pi.weights_array(code.words)
    return _trim(np.bincount(w, minlength=1).astype(int).tolist()) if w.size else [0]
