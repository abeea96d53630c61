"""Bit-packed vectors and matrices over the two-element field.

A vector of length n is a single Python int whose bit i-1 holds the
coefficient of vertex s_i (little-endian on the vertex index).  A matrix
is stored column-major as a tuple of n such ints.  Everything here is
immutable and hashable, so matrices can serve as set keys; the canonical
key is the packed n*n bit image with column j occupying bits [j*n, (j+1)*n).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import DimensionError, SingularError, ValidationError

# Columns are kept inside one conceptual machine word; the interesting
# range for the puzzles is n <= 20, so this leaves plenty of headroom.
N_MAX = 64


def _check_dim(n: int) -> None:
    if not 1 <= n <= N_MAX:
        raise DimensionError(f"dimension must be in 1..{N_MAX}, got {n}")


# ---------------------------------------------------------------------------
# raw helpers on packed ints (used by the hot loops in groups/orbits)

def vec_apply(cols: tuple[int, ...], v: int) -> int:
    """XOR of the columns selected by the set bits of v."""
    acc = 0
    i = 0
    while v:
        if v & 1:
            acc ^= cols[i]
        v >>= 1
        i += 1
    return acc


def mul_cols(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Column tuple of the product a*b."""
    return tuple(vec_apply(a, col) for col in b)


def identity_cols(n: int) -> tuple[int, ...]:
    return tuple(1 << i for i in range(n))


def pack_cols(cols: tuple[int, ...], n: int) -> int:
    key = 0
    for j, c in enumerate(cols):
        key |= c << (j * n)
    return key


def unpack_cols(key: int, n: int) -> tuple[int, ...]:
    mask = (1 << n) - 1
    return tuple((key >> (j * n)) & mask for j in range(n))


def transpose_cols(cols: tuple[int, ...], n: int) -> tuple[int, ...]:
    out = [0] * n
    for j, c in enumerate(cols):
        i = 0
        while c:
            if c & 1:
                out[i] |= 1 << j
            c >>= 1
            i += 1
    return tuple(out)


def invert_cols(cols: tuple[int, ...], n: int) -> tuple[int, ...] | None:
    """Inverse of a column-major packed matrix, or None if singular.

    Gauss-Jordan on the rows of [M | I]; rows are packed with the M part
    in bits 0..n-1 and the identity part in bits n..2n-1.
    """
    rows = list(transpose_cols(cols, n))
    for i in range(n):
        rows[i] |= 1 << (n + i)
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if (rows[r] >> col) & 1:
                pivot = r
                break
        if pivot is None:
            return None
        rows[col], rows[pivot] = rows[pivot], rows[col]
        for r in range(n):
            if r != col and ((rows[r] >> col) & 1):
                rows[r] ^= rows[col]
    inv_rows = tuple(r >> n for r in rows)
    return transpose_cols(inv_rows, n)


def rank_of_vectors(vectors: Iterable[int]) -> int:
    """GF(2) rank of a collection of packed vectors."""
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return len(basis)


class SpanBasis:
    """Incrementally maintained reduced basis of a GF(2) subspace."""

    def __init__(self, vectors: Iterable[int] = ()) -> None:
        # pivots[p] is the basis vector whose top set bit is p
        self.pivots: dict[int, int] = {}
        for v in vectors:
            self.add(v)

    def reduce(self, v: int) -> int:
        while v:
            p = v.bit_length() - 1
            b = self.pivots.get(p)
            if b is None:
                return v
            v ^= b
        return 0

    def add(self, v: int) -> bool:
        """Insert v; return True if it enlarged the span."""
        v = self.reduce(v)
        if v == 0:
            return False
        self.pivots[v.bit_length() - 1] = v
        return True

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def vectors(self) -> list[int]:
        return [self.pivots[p] for p in sorted(self.pivots)]


# ---------------------------------------------------------------------------
# public value types

@dataclass(frozen=True)
class Gf2Vector:
    """Length-n column vector over GF(2); bit i-1 is the s_i coordinate."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        _check_dim(self.n)
        if not 0 <= self.bits < (1 << self.n):
            raise DimensionError(f"bits 0x{self.bits:x} out of range for n={self.n}")

    @staticmethod
    def zero(n: int) -> "Gf2Vector":
        return Gf2Vector(n, 0)

    @staticmethod
    def unit(n: int, s: int) -> "Gf2Vector":
        """Characteristic vector of vertex s (1-based)."""
        if not 1 <= s <= n:
            raise DimensionError(f"vertex {s} out of range 1..{n}")
        return Gf2Vector(n, 1 << (s - 1))

    @staticmethod
    def from_string(text: str) -> "Gf2Vector":
        """Parse a bitstring; the leftmost character is the s_1 coordinate."""
        if not text or any(c not in "01" for c in text):
            raise ValidationError(f"not a bitstring: {text!r}")
        bits = 0
        for i, c in enumerate(text):
            if c == "1":
                bits |= 1 << i
        return Gf2Vector(len(text), bits)

    def bit(self, s: int) -> int:
        if not 1 <= s <= self.n:
            raise DimensionError(f"vertex {s} out of range 1..{self.n}")
        return (self.bits >> (s - 1)) & 1

    def support(self) -> frozenset[int]:
        return frozenset(s for s in range(1, self.n + 1) if self.bit(s))

    def popcount(self) -> int:
        return self.bits.bit_count()

    def __xor__(self, other: "Gf2Vector") -> "Gf2Vector":
        if self.n != other.n:
            raise DimensionError(f"length mismatch: {self.n} vs {other.n}")
        return Gf2Vector(self.n, self.bits ^ other.bits)

    def to_string(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.n))

    def __str__(self) -> str:
        return self.to_string()


@dataclass(frozen=True)
class Gf2Matrix:
    """Square n-by-n matrix over GF(2), stored as a tuple of column bitmasks."""

    n: int
    cols: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_dim(self.n)
        if len(self.cols) != self.n:
            raise DimensionError(f"expected {self.n} columns, got {len(self.cols)}")
        top = 1 << self.n
        if any(not 0 <= c < top for c in self.cols):
            raise DimensionError("column has bits beyond the matrix dimension")

    @staticmethod
    def identity(n: int) -> "Gf2Matrix":
        return Gf2Matrix(n, identity_cols(n))

    @staticmethod
    def zero(n: int) -> "Gf2Matrix":
        return Gf2Matrix(n, (0,) * n)

    @staticmethod
    def from_columns(columns: Iterable[Gf2Vector]) -> "Gf2Matrix":
        cols = tuple(columns)
        if not cols:
            raise DimensionError("a matrix needs at least one column")
        n = cols[0].n
        if any(c.n != n for c in cols):
            raise DimensionError("columns have mixed lengths")
        return Gf2Matrix(n, tuple(c.bits for c in cols))

    @staticmethod
    def from_packed(key: int, n: int) -> "Gf2Matrix":
        return Gf2Matrix(n, unpack_cols(key, n))

    @cached_property
    def packed(self) -> int:
        """Canonical n*n bit image; column j occupies bits [j*n, (j+1)*n)."""
        return pack_cols(self.cols, self.n)

    def column(self, s: int) -> Gf2Vector:
        if not 1 <= s <= self.n:
            raise DimensionError(f"vertex {s} out of range 1..{self.n}")
        return Gf2Vector(self.n, self.cols[s - 1])

    def entry(self, u: int, v: int) -> int:
        """Entry in row u, column v (1-based)."""
        return (self.cols[v - 1] >> (u - 1)) & 1

    def is_identity(self) -> bool:
        return self.cols == identity_cols(self.n)

    def transpose(self) -> "Gf2Matrix":
        return Gf2Matrix(self.n, transpose_cols(self.cols, self.n))

    def __matmul__(self, other: "Gf2Matrix") -> "Gf2Matrix":
        return mat_mul(self, other)

    def __xor__(self, other: "Gf2Matrix") -> "Gf2Matrix":
        if self.n != other.n:
            raise DimensionError(f"dimension mismatch: {self.n} vs {other.n}")
        return Gf2Matrix(self.n, tuple(a ^ b for a, b in zip(self.cols, other.cols)))

    def rows(self) -> Iterator[str]:
        for i in range(self.n):
            yield "".join(str((c >> i) & 1) for c in self.cols)

    def to_json(self) -> list[str]:
        """List of column bitstrings (leftmost char = s_1 coordinate)."""
        return [Gf2Vector(self.n, c).to_string() for c in self.cols]

    @staticmethod
    def from_json(columns: list[str]) -> "Gf2Matrix":
        return Gf2Matrix.from_columns([Gf2Vector.from_string(c) for c in columns])

    def __str__(self) -> str:
        return "\n".join(self.rows())


# ---------------------------------------------------------------------------
# operations

def mat_vec(m: Gf2Matrix, v: Gf2Vector) -> Gf2Vector:
    """Matrix-vector product: XOR of the columns of m selected by v."""
    if m.n != v.n:
        raise DimensionError(f"dimension mismatch: {m.n} vs {v.n}")
    return Gf2Vector(m.n, vec_apply(m.cols, v.bits))


def mat_mul(a: Gf2Matrix, b: Gf2Matrix) -> Gf2Matrix:
    if a.n != b.n:
        raise DimensionError(f"dimension mismatch: {a.n} vs {b.n}")
    return Gf2Matrix(a.n, mul_cols(a.cols, b.cols))


def mat_inverse(m: Gf2Matrix) -> Gf2Matrix:
    inv = invert_cols(m.cols, m.n)
    if inv is None:
        raise SingularError(f"matrix of rank {rank(m)} < {m.n} is not invertible")
    return Gf2Matrix(m.n, inv)


def rank(m: Gf2Matrix) -> int:
    """GF(2) rank (row rank = column rank)."""
    return rank_of_vectors(m.cols)
