"""Linear algebra over GF(2) on bit-packed vectors.

Vectors are stored as Python integers used as bitsets: coordinate ``j``
is bit ``j``.  XOR of two integers is vector addition, and CPython performs
it word-by-word, so elimination runs on packed machine words without any
per-entry Python loop.

All reductions pick the lowest set bit (the leftmost coordinate) as pivot and
process vectors in input order, so every returned basis is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "BitVectorF2",
    "MatrixF2",
    "SpanReducer",
    "rank",
    "nullspace_basis",
    "in_span",
    "intersect_dim",
    "span_dim",
    "rank_of_bits",
    "kernel_of_columns",
    "express_in_basis",
    "low_bit",
    "bit_indices",
]


def low_bit(x: int) -> int:
    """Index of the lowest set bit of a nonzero integer."""
    return (x & -x).bit_length() - 1


def bit_indices(x: int) -> list[int]:
    """Indices of the set bits of ``x`` in increasing order."""
    out = []
    while x:
        lsb = x & -x
        out.append(lsb.bit_length() - 1)
        x ^= lsb
    return out


@dataclass(frozen=True)
class BitVectorF2:
    """A vector in GF(2)^length, packed into an integer."""

    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("length must be non-negative")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError(f"bits exceed vector length {self.length}")

    @classmethod
    def from_indices(cls, length: int, indices: Iterable[int]) -> "BitVectorF2":
        bits = 0
        for j in indices:
            if not 0 <= j < length:
                raise ValueError(f"index {j} out of range for length {length}")
            bits ^= 1 << j
        return cls(length, bits)

    @classmethod
    def from_list(cls, entries: Sequence[int]) -> "BitVectorF2":
        return cls.from_indices(len(entries), (j for j, e in enumerate(entries) if e % 2))

    def indices(self) -> list[int]:
        return bit_indices(self.bits)

    def to_list(self) -> list[int]:
        return [(self.bits >> j) & 1 for j in range(self.length)]

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def __add__(self, other: "BitVectorF2") -> "BitVectorF2":
        _check_lengths([self, other])
        return BitVectorF2(self.length, self.bits ^ other.bits)

    def __bool__(self) -> bool:
        return self.bits != 0

    def __getitem__(self, j: int) -> int:
        if not 0 <= j < self.length:
            raise IndexError(j)
        return (self.bits >> j) & 1


@dataclass(frozen=True)
class MatrixF2:
    """A dense GF(2) matrix stored as a tuple of packed rows."""

    nrows: int
    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.nrows:
            raise ValueError("row count does not match nrows")
        for r in self.rows:
            if r < 0 or r >> self.ncols:
                raise ValueError(f"row exceeds column count {self.ncols}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int] | BitVectorF2], ncols: int | None = None) -> "MatrixF2":
        packed = []
        for r in rows:
            v = r if isinstance(r, BitVectorF2) else BitVectorF2.from_list(r)
            if ncols is None:
                ncols = v.length
            elif v.length != ncols:
                raise ValueError("rows have unequal lengths")
            packed.append(v.bits)
        return cls(len(packed), ncols or 0, tuple(packed))

    @classmethod
    def from_columns(cls, columns: Sequence[int], nrows: int) -> "MatrixF2":
        """Build a matrix from packed columns (bit ``i`` of column ``j`` is entry (i, j))."""
        rows = [0] * nrows
        for j, col in enumerate(columns):
            for i in bit_indices(col):
                rows[i] |= 1 << j
        return cls(nrows, len(columns), tuple(rows))

    @classmethod
    def from_dense(cls, array) -> "MatrixF2":
        a = np.asarray(array, dtype=np.int64) % 2
        if a.ndim != 2:
            raise ValueError("expected a 2-d array")
        return cls.from_rows([list(row) for row in a], ncols=a.shape[1])

    @classmethod
    def identity(cls, n: int) -> "MatrixF2":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "MatrixF2":
        return cls(nrows, ncols, (0,) * nrows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.nrows, self.ncols), dtype=np.uint8)
        for i, r in enumerate(self.rows):
            out[i, bit_indices(r)] = 1
        return out

    def columns(self) -> list[int]:
        cols = [0] * self.ncols
        for i, r in enumerate(self.rows):
            for j in bit_indices(r):
                cols[j] |= 1 << i
        return cols

    def transpose(self) -> "MatrixF2":
        return MatrixF2(self.ncols, self.nrows, tuple(self.columns()))

    def row(self, i: int) -> BitVectorF2:
        return BitVectorF2(self.ncols, self.rows[i])

    def matvec(self, v: BitVectorF2) -> BitVectorF2:
        if v.length != self.ncols:
            raise ValueError("vector length does not match column count")
        out = 0
        for i, r in enumerate(self.rows):
            if (r & v.bits).bit_count() & 1:
                out |= 1 << i
        return BitVectorF2(self.nrows, out)


class SpanReducer:
    """Incrementally maintained echelon basis of a subspace.

    Pivots are lowest set bits; each stored vector has a distinct pivot.
    """

    def __init__(self, vectors: Iterable[int] = ()):
        self._pivots: dict[int, int] = {}
        for v in vectors:
            self.add(v)

    def __len__(self) -> int:
        return len(self._pivots)

    @property
    def dim(self) -> int:
        return len(self._pivots)

    def reduce(self, v: int) -> int:
        pivots = self._pivots
        while v:
            p = pivots.get(low_bit(v))
            if p is None:
                return v
            v ^= p
        return 0

    def add(self, v: int) -> bool:
        """Add ``v`` to the span; return True if the dimension grew."""
        r = self.reduce(v)
        if r:
            self._pivots[low_bit(r)] = r
            return True
        return False

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    def copy(self) -> "SpanReducer":
        other = SpanReducer()
        other._pivots = dict(self._pivots)
        return other


def rank_of_bits(vectors: Iterable[int]) -> int:
    return SpanReducer(vectors).dim


def kernel_of_columns(columns: Sequence[int]) -> list[int]:
    """Kernel of the matrix whose packed columns are given.

    Returns packed vectors over the column index.  Column ``j`` that reduces
    to zero yields a kernel vector whose highest set bit is ``j``, so the
    result is linearly independent and ordered by that bit.
    """
    pivots: dict[int, tuple[int, int]] = {}
    kernel = []
    for j, col in enumerate(columns):
        combo = 1 << j
        while col:
            low = low_bit(col)
            hit = pivots.get(low)
            if hit is None:
                pivots[low] = (col, combo)
                break
            col ^= hit[0]
            combo ^= hit[1]
        else:
            kernel.append(combo)
    return kernel


def express_in_basis(basis: Sequence[int], vectors: Iterable[int]) -> list[int]:
    """Coordinates of each vector in an independent packed basis.

    Coordinates are packed over the basis index.  Raises ValueError if the
    basis is dependent or a vector lies outside its span.
    """
    pivots: dict[int, tuple[int, int]] = {}
    for j, b in enumerate(basis):
        combo = 1 << j
        while b:
            low = low_bit(b)
            hit = pivots.get(low)
            if hit is None:
                pivots[low] = (b, combo)
                break
            b ^= hit[0]
            combo ^= hit[1]
        else:
            raise ValueError(f"basis vector {j} is dependent on earlier ones")
    out = []
    for v in vectors:
        combo = 0
        while v:
            hit = pivots.get(low_bit(v))
            if hit is None:
                raise ValueError("vector not in span of basis")
            v ^= hit[0]
            combo ^= hit[1]
        out.append(combo)
    return out


def rank(M: MatrixF2) -> int:
    """Dimension of the row space of ``M`` over GF(2)."""
    return rank_of_bits(M.rows)


def nullspace_basis(M: MatrixF2) -> list[BitVectorF2]:
    """Basis of ``{v : M v = 0}``; it has ``M.ncols - rank(M)`` elements."""
    if M.nrows == 0:
        return [BitVectorF2(M.ncols, 1 << j) for j in range(M.ncols)]
    return [BitVectorF2(M.ncols, k) for k in kernel_of_columns(M.columns())]


def _check_lengths(vectors: Iterable[BitVectorF2], length: int | None = None) -> int | None:
    for v in vectors:
        if length is None:
            length = v.length
        elif v.length != length:
            raise ValueError(f"length mismatch: {v.length} != {length}")
    return length


def span_dim(vectors: Sequence[BitVectorF2]) -> int:
    _check_lengths(vectors)
    return rank_of_bits(v.bits for v in vectors)


def in_span(v: BitVectorF2, basis: Sequence[BitVectorF2]) -> bool:
    """True iff ``v`` is a GF(2)-linear combination of ``basis``."""
    _check_lengths(basis, v.length)
    return SpanReducer(b.bits for b in basis).contains(v.bits)


def intersect_dim(U: Sequence[BitVectorF2], V: Sequence[BitVectorF2]) -> int:
    """dim(span U ∩ span V), by dim U + dim V - dim(U + V)."""
    length = _check_lengths(U)
    _check_lengths(V, length)
    du = rank_of_bits(u.bits for u in U)
    dv = rank_of_bits(v.bits for v in V)
    return du + dv - rank_of_bits([u.bits for u in U] + [v.bits for v in V])
