"""Binary Hamming codes H_m and extended Hamming codes.

Column ``i`` of H_m is the binary expansion of ``i`` (row r holds bit r),
for i = 1..2^m - 1.  The extended matrix has an all-ones first row and
column ``i`` carries the expansion of ``i mod 2^m`` below it, so column
2^m is (1, 0, ..., 0)^T.  Deleting the first row and that column gives
H_m back with positions unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import LinearCode

STANDARD = "standard"
EXTENDED = "extended"


@dataclass(frozen=True)
class HammingFamily:
    m: int
    variant: str
    code: LinearCode

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def dimension(self) -> int:
        return (1 << self.m) - 1 - self.m

    @property
    def min_distance(self) -> int:
        return 3 if self.variant == STANDARD else 4


def build(m: int, variant: str = STANDARD) -> HammingFamily:
    if not 2 <= m <= 20:
        raise ValueError(f"m must be in 2..20, got {m}")
    size = 1 << m
    if variant == STANDARD:
        cols = list(range(1, size))
        code = LinearCode.from_columns(cols, m)
    elif variant == EXTENDED:
        cols = [1 | (i % size) << 1 for i in range(1, size + 1)]
        code = LinearCode.from_columns(cols, m + 1)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return HammingFamily(m, variant, code)


def delete_parity(ext: HammingFamily) -> LinearCode:
    """Drop the all-ones row and the column carrying binary(0)."""
    if ext.variant != EXTENDED:
        raise ValueError("expected an extended Hamming matrix")
    cols = [c >> 1 for c in ext.code.columns]
    zero = cols.index(0)
    return LinearCode.from_columns(cols[:zero] + cols[zero + 1 :], ext.m)


def third_point(a: int, b: int, m: int) -> int:
    """The position c with {a, b, c} a weight-3 codeword of H_m."""
    n = (1 << m) - 1
    if not (1 <= a <= n and 1 <= b <= n):
        raise ValueError(f"positions must lie in 1..{n}")
    if a == b:
        raise ValueError("a and b must differ")
    return a ^ b


def fourth_point(a: int, b: int, c: int, m: int) -> int:
    """The position d with {a, b, c, d} a weight-4 codeword of the extended code."""
    size = 1 << m
    if len({a, b, c}) != 3 or not all(1 <= p <= size for p in (a, b, c)):
        raise ValueError(f"need three distinct positions in 1..{size}")
    v = (a % size) ^ (b % size) ^ (c % size)
    d = v if v else size
    if d in (a, b, c):
        raise ValueError(f"degenerate triple {a, b, c}")
    return d
