"""Boolean matrix and vector algebra over a fixed set of alternatives.

Rows are packed into Python integers: bit ``j`` of ``rows[i]`` is entry
``(i, j)``. Addition is OR, multiplication is AND, and the matrix product is
the Boolean (OR of ANDs) product. Every value is immutable.

Operators mirror the algebra::

    A | B     add (elementwise OR)
    A & B     elementwise AND
    A @ B     Boolean product (also A @ v for a vector)
    ~A        complement
    A.T       transpose
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class DimensionError(ValueError):
    """Operands have incompatible (or zero) dimensions."""


def _full(n: int) -> int:
    return (1 << n) - 1


def iter_bits(x: int) -> Iterator[int]:
    """Yield the positions of set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _check_dim(n: int) -> None:
    if n < 1:
        raise DimensionError(f"dimension must be at least 1, got {n}")


@dataclass(frozen=True)
class BoolVec:
    """Characteristic vector of a subset of ``n`` alternatives."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        _check_dim(self.n)
        if self.bits < 0 or self.bits >> self.n:
            raise DimensionError(f"bits do not fit in a vector of length {self.n}")

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> BoolVec:
        bits = 0
        for i in indices:
            if not 0 <= i < n:
                raise IndexError(f"index {i} out of range for n={n}")
            bits |= 1 << i
        return cls(n, bits)

    @classmethod
    def from_dense(cls, values: Sequence[int | bool]) -> BoolVec:
        return cls.from_indices(len(values), (i for i, v in enumerate(values) if v))

    def to_dense(self) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(self.n)]

    def indices(self) -> list[int]:
        """Members as 0-based indices, ascending."""
        return list(iter_bits(self.bits))

    def labels(self) -> list[int]:
        """Members as 1-based alternative labels, ascending."""
        return [i + 1 for i in iter_bits(self.bits)]

    def count(self) -> int:
        return bin(self.bits).count("1")

    def is_empty(self) -> bool:
        return self.bits == 0

    def issubset(self, other: BoolVec) -> bool:
        _same(self, other)
        return self.bits & ~other.bits == 0

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.n and bool((self.bits >> i) & 1)

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __len__(self) -> int:
        return self.n

    def __or__(self, other: BoolVec) -> BoolVec:
        return add_vec(self, other)

    def __and__(self, other: BoolVec) -> BoolVec:
        _same(self, other)
        return BoolVec(self.n, self.bits & other.bits)

    def __invert__(self) -> BoolVec:
        return complement_vec(self)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.labels())) + "]"


@dataclass(frozen=True)
class BoolMatrix:
    """Square 0/1 matrix; row ``i`` bit ``j`` is set iff ``(i, j)`` is in the relation."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_dim(self.n)
        if len(self.rows) != self.n:
            raise DimensionError(f"expected {self.n} rows, got {len(self.rows)}")
        limit = 1 << self.n
        for i, r in enumerate(self.rows):
            if r < 0 or r >= limit:
                raise DimensionError(f"row {i} has bits outside {self.n} columns")

    @classmethod
    def from_dense(cls, array: Sequence[Sequence[int | bool]]) -> BoolMatrix:
        n = len(array)
        rows = []
        for i, row in enumerate(array):
            if len(row) != n:
                raise DimensionError(f"row {i} has length {len(row)}, expected {n}")
            bits = 0
            for j, v in enumerate(row):
                if v:
                    bits |= 1 << j
            rows.append(bits)
        return cls(n, tuple(rows))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> BoolMatrix:
        rows = [0] * n
        for i, j in pairs:
            rows[i] |= 1 << j
        return cls(n, tuple(rows))

    def to_dense(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.n)] for r in self.rows]

    def pairs(self) -> list[tuple[int, int]]:
        """Set entries as 0-based ``(row, column)`` pairs in row-major order."""
        return [(i, j) for i, r in enumerate(self.rows) for j in iter_bits(r)]

    def row(self, i: int) -> BoolVec:
        return BoolVec(self.n, self.rows[i])

    def count(self) -> int:
        return sum(bin(r).count("1") for r in self.rows)

    def is_zero(self) -> bool:
        return not any(self.rows)

    @property
    def T(self) -> BoolMatrix:
        return transpose(self)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise IndexError(ij)
        return (self.rows[i] >> j) & 1

    def __or__(self, other: BoolMatrix) -> BoolMatrix:
        return add(self, other)

    def __and__(self, other: BoolMatrix) -> BoolMatrix:
        _same(self, other)
        return BoolMatrix(self.n, tuple(a & b for a, b in zip(self.rows, other.rows)))

    def __invert__(self) -> BoolMatrix:
        return complement(self)

    def __matmul__(self, other):
        if isinstance(other, BoolVec):
            return mul_vec(self, other)
        return mul(self, other)

    def __str__(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self.to_dense())


def _same(a, b) -> None:
    if a.n != b.n:
        raise DimensionError(f"dimension mismatch: {a.n} vs {b.n}")


def identity(n: int) -> BoolMatrix:
    _check_dim(n)
    return BoolMatrix(n, tuple(1 << i for i in range(n)))


def zeros(n: int) -> BoolMatrix:
    _check_dim(n)
    return BoolMatrix(n, (0,) * n)


def ones(n: int) -> BoolMatrix:
    _check_dim(n)
    return BoolMatrix(n, (_full(n),) * n)


def all_ones_vec(n: int) -> BoolVec:
    _check_dim(n)
    return BoolVec(n, _full(n))


def zeros_vec(n: int) -> BoolVec:
    _check_dim(n)
    return BoolVec(n, 0)


def unit_vec(n: int, j: int) -> BoolVec:
    _check_dim(n)
    if not 0 <= j < n:
        raise IndexError(f"index {j} out of range for n={n}")
    return BoolVec(n, 1 << j)


def add(a: BoolMatrix, b: BoolMatrix) -> BoolMatrix:
    _same(a, b)
    return BoolMatrix(a.n, tuple(x | y for x, y in zip(a.rows, b.rows)))


def add_vec(u: BoolVec, v: BoolVec) -> BoolVec:
    _same(u, v)
    return BoolVec(u.n, u.bits | v.bits)


def mul(a: BoolMatrix, b: BoolMatrix) -> BoolMatrix:
    """Boolean product: row i of the result is the OR of rows k of ``b`` with a[i, k] set."""
    _same(a, b)
    full = _full(a.n)
    brows = b.rows
    out = []
    for r in a.rows:
        acc = 0
        while r:
            low = r & -r
            acc |= brows[low.bit_length() - 1]
            if acc == full:
                break
            r ^= low
        out.append(acc)
    return BoolMatrix(a.n, tuple(out))


def mul_vec(a: BoolMatrix, v: BoolVec) -> BoolVec:
    _same(a, v)
    x = v.bits
    bits = 0
    for i, r in enumerate(a.rows):
        if r & x:
            bits |= 1 << i
    return BoolVec(a.n, bits)


def transpose(a: BoolMatrix) -> BoolMatrix:
    cols = [0] * a.n
    for i, r in enumerate(a.rows):
        bit = 1 << i
        while r:
            low = r & -r
            cols[low.bit_length() - 1] |= bit
            r ^= low
    return BoolMatrix(a.n, tuple(cols))


def complement(a: BoolMatrix) -> BoolMatrix:
    full = _full(a.n)
    return BoolMatrix(a.n, tuple(r ^ full for r in a.rows))


def complement_vec(v: BoolVec) -> BoolVec:
    return BoolVec(v.n, v.bits ^ _full(v.n))


def diag(a: BoolMatrix) -> BoolVec:
    bits = 0
    for i, r in enumerate(a.rows):
        bits |= r & (1 << i)
    return BoolVec(a.n, bits)


def power(a: BoolMatrix, k: int) -> BoolMatrix:
    """k-fold Boolean product; ``power(a, 0)`` is the identity."""
    if k < 0:
        raise ValueError(f"power must be non-negative, got {k}")
    result = identity(a.n)
    base = a
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def equal(a: BoolMatrix, b: BoolMatrix) -> bool:
    _same(a, b)
    return a.rows == b.rows


def asym_part(r: BoolMatrix) -> BoolMatrix:
    """Pairs in ``r`` whose reverse is absent: complement(R^tr + complement(R))."""
    return complement(add(transpose(r), complement(r)))


def sym_part(r: BoolMatrix) -> BoolMatrix:
    """Pairs in ``r`` whose reverse is also present."""
    return complement(add(complement(transpose(r)), complement(r)))


def max_general(r: BoolMatrix) -> BoolVec:
    """Maximal elements of an arbitrary relation."""
    q = complement(add(r, complement(transpose(r))))
    return complement_vec(mul_vec(q, all_ones_vec(r.n)))


def max_complete(r: BoolMatrix) -> BoolVec:
    """Maximal elements of a complete relation."""
    q = complement(add(r, identity(r.n)))
    return complement_vec(mul_vec(q, all_ones_vec(r.n)))


def max_asymmetric(r: BoolMatrix) -> BoolVec:
    """Maximal elements of an asymmetric relation."""
    return complement_vec(mul_vec(transpose(r), all_ones_vec(r.n)))

