"""Binary words, weight vectors and codes over GF(2).

Words are stored as integer bitmasks: position ``i`` (1-based, as printed)
lives in bit ``i - 1``.  Printed words have position 1 leftmost.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from pathlib import Path
from typing import Iterable, Iterator, Sequence, Union

import numpy as np

MAX_WORD_BITS = 64
MAX_DIMENSION = 24


class PiPerfectError(Exception):
    """Base class for errors raised by this package."""


class InstanceTooLarge(PiPerfectError):
    pass


class LengthMismatch(PiPerfectError, ValueError):
    pass


class InfeasibleParameters(PiPerfectError, ValueError):
    pass


class InconsistentInput(PiPerfectError, ValueError):
    pass


def max_exhaustive_n() -> int:
    """Cap on n for scans over all of F_2^n (env ``PIPERFECT_MAX_N``)."""
    return int(os.environ.get("PIPERFECT_MAX_N", "24"))


def check_exhaustive(n: int) -> None:
    cap = max_exhaustive_n()
    if n > cap:
        raise InstanceTooLarge(f"exhaustive scan over F_2^{n} exceeds cap n <= {cap}")


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits_to_positions(bits: int) -> frozenset[int]:
    out = []
    i = 1
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return frozenset(out)


def positions_to_bits(positions: Iterable[int]) -> int:
    bits = 0
    for p in positions:
        if p < 1:
            raise ValueError(f"positions are 1-based, got {p}")
        bits |= 1 << (p - 1)
    return bits


def word_to_str(bits: int, n: int) -> str:
    return "".join("1" if bits >> i & 1 else "0" for i in range(n))


def str_to_word(s: str) -> int:
    s = s.strip()
    if not s or set(s) - {"0", "1"}:
        raise ValueError(f"not a 0/1 string: {s!r}")
    return sum(1 << i for i, ch in enumerate(s) if ch == "1")


@dataclass(frozen=True, order=True)
class BitWord:
    bits: int
    n: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_WORD_BITS:
            raise ValueError(f"word length must be in 1..{MAX_WORD_BITS}, got {self.n}")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bits {self.bits:#x} do not fit in length {self.n}")

    @classmethod
    def parse(cls, s: str) -> "BitWord":
        s = s.strip()
        return cls(str_to_word(s), len(s))

    @classmethod
    def from_support(cls, positions: Iterable[int], n: int) -> "BitWord":
        return cls(positions_to_bits(positions), n)

    def support(self) -> frozenset[int]:
        return bits_to_positions(self.bits)

    @property
    def hamming_weight(self) -> int:
        return popcount(self.bits)

    def __xor__(self, other: "BitWord") -> "BitWord":
        if other.n != self.n:
            raise LengthMismatch(f"lengths {self.n} and {other.n} differ")
        return BitWord(self.bits ^ other.bits, self.n)

    def __str__(self) -> str:
        return word_to_str(self.bits, self.n)


def support(w: BitWord) -> frozenset[int]:
    return w.support()


Word = Union[BitWord, int]


def as_bits(w: Word, n: int) -> int:
    """Coerce a BitWord or raw bitmask to a bitmask of length ``n``."""
    if isinstance(w, BitWord):
        if w.n != n:
            raise LengthMismatch(f"word length {w.n} != {n}")
        return w.bits
    if w < 0 or w >> n:
        raise LengthMismatch(f"bitmask {w:#x} does not fit in length {n}")
    return int(w)


@dataclass(frozen=True)
class WeightVector:
    """Position weights pi = (pi_1, ..., pi_n), all positive integers."""

    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if not self.weights:
            raise ValueError("empty weight vector")
        if any(w < 1 for w in self.weights):
            raise ValueError(f"weights must be positive: {self.weights}")

    @classmethod
    def ones(cls, n: int) -> "WeightVector":
        return cls((1,) * n)

    @classmethod
    def from_classes(cls, n: int, classes: dict[int, Iterable[int]]) -> "WeightVector":
        """Build from ``{weight: positions}``; every position 1..n must be assigned once."""
        pi = [0] * n
        for w, positions in classes.items():
            for p in positions:
                if pi[p - 1]:
                    raise ValueError(f"position {p} assigned twice")
                pi[p - 1] = w
        missing = [i + 1 for i, w in enumerate(pi) if not w]
        if missing:
            raise ValueError(f"positions without a weight: {missing}")
        return cls(tuple(pi))

    @classmethod
    def parse(cls, text: str) -> "WeightVector":
        return cls(tuple(int(x) for x in text.replace("\n", ",").split(",") if x.strip()))

    def serialize(self) -> str:
        return ",".join(map(str, self.weights))

    @property
    def n(self) -> int:
        return len(self.weights)

    @cached_property
    def classes(self) -> dict[int, frozenset[int]]:
        """Map weight i to X_i, the set of positions carrying weight i."""
        out: dict[int, set[int]] = {}
        for pos, w in enumerate(self.weights, start=1):
            out.setdefault(w, set()).add(pos)
        return {w: frozenset(s) for w, s in sorted(out.items())}

    @cached_property
    def sizes(self) -> dict[int, int]:
        return {w: len(s) for w, s in self.classes.items()}

    def class_of(self, i: int) -> frozenset[int]:
        return self.classes.get(i, frozenset())

    def size_of(self, i: int) -> int:
        return self.sizes.get(i, 0)

    def weight(self, bits: int) -> int:
        total = 0
        i = 0
        while bits:
            if bits & 1:
                total += self.weights[i]
            bits >>= 1
            i += 1
        return total

    def weights_array(self, words: np.ndarray) -> np.ndarray:
        """pi-weights of an array of bitmasks."""
        words = np.asarray(words, dtype=np.uint64)
        out = np.zeros(words.shape, dtype=np.int64)
        for i, w in enumerate(self.weights):
            out += w * ((words >> np.uint64(i)) & np.uint64(1)).astype(np.int64)
        return out

    def weight_table(self) -> np.ndarray:
        """pi-weight of every word of F_2^n, indexed by bitmask."""
        check_exhaustive(self.n)
        table = np.zeros(1, dtype=np.int64)
        for w in self.weights:
            table = np.concatenate([table, table + w])
        return table


@dataclass(frozen=True)
class TwoValuedProfile:
    """Weight 1 on positions 1..m, weight 2 on m+1..n, with 1 + n + C(m,2) = 2^t."""

    n: int
    m: int

    def __post_init__(self):
        if not 0 <= self.m <= self.n:
            raise ValueError(f"need 0 <= m <= n, got m={self.m}, n={self.n}")
        size = 1 + self.n + comb(self.m, 2)
        if size & (size - 1):
            raise InfeasibleParameters(f"1 + n + C(m,2) = {size} is not a power of two")

    @classmethod
    def from_tm(cls, t: int, m: int) -> "TwoValuedProfile":
        n = 2**t - 1 - comb(m, 2)
        if n - m <= 0:
            raise InfeasibleParameters(f"2^t - 1 - m - C(m,2) = {n - m} must be positive")
        return cls(n, m)

    @property
    def t(self) -> int:
        return (1 + self.n + comb(self.m, 2)).bit_length() - 1

    @property
    def head_mask(self) -> int:
        """The indicator vector M of the weight-1 positions."""
        return (1 << self.m) - 1

    @property
    def tail_mask(self) -> int:
        return ((1 << self.n) - 1) ^ self.head_mask

    def weight_vector(self) -> WeightVector:
        return WeightVector((1,) * self.m + (2,) * (self.n - self.m))


# ---------- GF(2) linear algebra on row bitmasks


def rref(rows: Sequence[int]) -> tuple[list[int], list[int]]:
    """Reduced row echelon form. Returns (nonzero rows, pivot bit of each row)."""
    rows = [r for r in rows if r]
    basis: list[int] = []
    pivots: list[int] = []
    for r in rows:
        for b, p in zip(basis, pivots):
            if r >> p & 1:
                r ^= b
        if not r:
            continue
        p = (r & -r).bit_length() - 1
        for i, b in enumerate(basis):
            if b >> p & 1:
                basis[i] = b ^ r
        basis.append(r)
        pivots.append(p)
    return basis, pivots


def rank(rows: Sequence[int]) -> int:
    return len(rref(rows)[0])


def nullspace(rows: Sequence[int], n: int) -> list[int]:
    """Basis of {x in F_2^n : popcount(row & x) even for every row}."""
    basis, pivots = rref(rows)
    pivot_set = set(pivots)
    out = []
    for f in range(n):
        if f in pivot_set:
            continue
        x = 1 << f
        for b, p in zip(basis, pivots):
            if b >> f & 1:
                x |= 1 << p
        out.append(x)
    return out


def span(basis: Sequence[int]) -> np.ndarray:
    """All XOR combinations of ``basis`` as a sorted uint64 array."""
    words = np.zeros(1, dtype=np.uint64)
    for g in basis:
        words = np.concatenate([words, words ^ np.uint64(g)])
    words.sort()
    return words


# ---------- codes


class ExplicitCode:
    """A finite set of words of common length n, kept sorted and duplicate free."""

    def __init__(self, n: int, words: Iterable[Word] | np.ndarray):
        if not 1 <= n <= MAX_WORD_BITS:
            raise ValueError(f"code length must be in 1..{MAX_WORD_BITS}")
        if isinstance(words, np.ndarray):
            arr = np.unique(words.astype(np.uint64))
        else:
            arr = np.unique(np.array([as_bits(w, n) for w in words], dtype=np.uint64))
        if arr.size and int(arr[-1]) >> n:
            raise LengthMismatch(f"word {int(arr[-1]):#x} does not fit in length {n}")
        arr.flags.writeable = False
        self.n = n
        self.words = arr

    @classmethod
    def parse(cls, text: str) -> "ExplicitCode":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
        if not lines:
            raise ValueError("empty code file")
        lengths = {len(ln) for ln in lines}
        if len(lengths) != 1:
            raise LengthMismatch(f"codewords of differing lengths {sorted(lengths)}")
        return cls(lengths.pop(), [str_to_word(ln) for ln in lines])

    @classmethod
    def load(cls, path: str | Path) -> "ExplicitCode":
        return cls.parse(Path(path).read_text())

    def serialize(self) -> str:
        return "".join(word_to_str(w, self.n) + "\n" for w in self)

    def __len__(self) -> int:
        return int(self.words.size)

    def __iter__(self) -> Iterator[int]:
        return (int(w) for w in self.words)

    def __contains__(self, w: Word) -> bool:
        b = np.uint64(as_bits(w, self.n))
        i = np.searchsorted(self.words, b)
        return bool(i < self.words.size and self.words[i] == b)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExplicitCode)
            and self.n == other.n
            and np.array_equal(self.words, other.words)
        )

    def __hash__(self):
        return hash((self.n, self.words.tobytes()))

    def __repr__(self) -> str:
        return f"ExplicitCode(n={self.n}, size={len(self)})"

    def bitwords(self) -> list[BitWord]:
        return [BitWord(w, self.n) for w in self]

    def strings(self) -> list[str]:
        return [word_to_str(w, self.n) for w in self]

    def translate(self, u: Word) -> "ExplicitCode":
        return ExplicitCode(self.n, self.words ^ np.uint64(as_bits(u, self.n)))

    def is_linear(self) -> bool:
        return len(self) == 1 << rank([int(w) for w in self.words]) and 0 in self

    def to_linear(self) -> "LinearCode":
        if not self.is_linear():
            raise ValueError("code is not closed under XOR")
        return LinearCode.from_generators(self.n, list(self))


@dataclass(frozen=True)
class LinearCode:
    """Binary linear code given by a parity-check matrix.

    ``rows`` holds one bitmask per check, bit ``i - 1`` being the entry in
    column ``i``.  Read as an integer, column ``i`` has row ``r`` (0 = top)
    at bit ``r``.
    """

    n: int
    rows: tuple[int, ...]
    columns: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(int(r) for r in self.rows))
        if self.n < 1:
            raise ValueError("code length must be positive")
        if any(r < 0 or r >> self.n for r in self.rows):
            raise LengthMismatch("parity-check row wider than n")
        cols = [0] * self.n
        for r, row in enumerate(self.rows):
            for i in bits_to_positions(row):
                cols[i - 1] |= 1 << r
        object.__setattr__(self, "columns", tuple(cols))

    @classmethod
    def from_columns(cls, columns: Sequence[int], t: int) -> "LinearCode":
        rows = [0] * t
        for i, c in enumerate(columns):
            if c < 0 or c >> t:
                raise LengthMismatch(f"column {i + 1} value {c} does not fit in {t} rows")
            for r in range(t):
                if c >> r & 1:
                    rows[r] |= 1 << i
        return cls(len(columns), tuple(rows))

    @classmethod
    def from_generators(cls, n: int, generators: Sequence[int]) -> "LinearCode":
        return cls(n, tuple(nullspace(generators, n)))

    @classmethod
    def parse(cls, text: str) -> "LinearCode":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
        if not lines:
            raise ValueError("empty matrix file")
        lengths = {len(ln) for ln in lines}
        if len(lengths) != 1:
            raise LengthMismatch(f"matrix rows of differing lengths {sorted(lengths)}")
        return cls(lengths.pop(), tuple(str_to_word(ln) for ln in lines))

    @classmethod
    def load(cls, path: str | Path) -> "LinearCode":
        return cls.parse(Path(path).read_text())

    def serialize(self) -> str:
        return "".join(word_to_str(r, self.n) + "\n" for r in self.rows)

    @property
    def t(self) -> int:
        return len(self.rows)

    @cached_property
    def rank(self) -> int:
        return rank(self.rows)

    @property
    def k(self) -> int:
        return self.n - self.rank

    def syndrome(self, w: Word) -> int:
        bits = w.bits if isinstance(w, BitWord) else w
        s = 0
        i = 0
        while bits:
            if bits & 1:
                s ^= self.columns[i]
            bits >>= 1
            i += 1
        return s

    def syndromes(self, words: np.ndarray) -> np.ndarray:
        words = np.asarray(words, dtype=np.uint64)
        out = np.zeros(words.shape, dtype=np.uint64)
        for i, c in enumerate(self.columns):
            sel = ((words >> np.uint64(i)) & np.uint64(1)).astype(bool)
            out[sel] ^= np.uint64(c)
        return out

    def __contains__(self, w: Word) -> bool:
        return self.syndrome(w) == 0

    def generator_basis(self) -> list[int]:
        return nullspace(self.rows, self.n)

    def enumerate(self) -> ExplicitCode:
        return enumerate_codewords(self)


def enumerate_codewords(code: LinearCode) -> ExplicitCode:
    """All 2^k codewords in increasing bitmask order."""
    if code.k > MAX_DIMENSION:
        raise InstanceTooLarge(f"dimension {code.k} exceeds {MAX_DIMENSION}")
    if code.n > MAX_WORD_BITS:
        raise InstanceTooLarge(f"length {code.n} exceeds {MAX_WORD_BITS}")
    return ExplicitCode(code.n, span(code.generator_basis()))
