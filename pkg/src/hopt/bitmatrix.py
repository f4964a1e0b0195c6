"""Bit-packed GF(2) matrices backed by Python integers.

Each row is stored as a single arbitrary-precision integer; bit j of
``data[i]`` is the entry (i, j). Row XOR and row swap are then one integer
operation regardless of width, which keeps Gaussian elimination and the
synthesis passes fast in pure Python. Bits at positions >= ``cols`` are kept
zero so that equality and popcounts stay meaningful.
"""

from __future__ import annotations


class DimensionError(ValueError):
    """Operands have incompatible shapes or lengths."""


class BitMatrix:
    """Dense Boolean matrix over GF(2) with integer-packed rows."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: list[int] | None = None):
        if rows < 0 or cols < 0:
            raise DimensionError(f"negative shape ({rows}, {cols})")
        self.rows = rows
        self.cols = cols
        if data is None:
            self.data = [0] * rows
        else:
            if len(data) != rows:
                raise DimensionError(f"expected {rows} rows, got {len(data)}")
            mask = (1 << cols) - 1
            self.data = [r & mask for r in data]

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BitMatrix:
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(n, n, [1 << i for i in range(n)])

    @classmethod
    def from_lists(cls, lists: list[list[int]], cols: int | None = None) -> BitMatrix:
        """Build from a list of 0/1 row lists (entry [i][j] is bit (i, j))."""
        if cols is None:
            cols = len(lists[0]) if lists else 0
        data = []
        for row in lists:
            if len(row) != cols:
                raise DimensionError("ragged rows")
            data.append(sum(bit << j for j, bit in enumerate(row)))
        return cls(len(lists), cols, data)

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.cols)] for r in self.data]

    def copy(self) -> BitMatrix:
        out = BitMatrix.__new__(BitMatrix)
        out.rows = self.rows
        out.cols = self.cols
        out.data = list(self.data)
        return out

    def get(self, i: int, j: int) -> int:
        return (self.data[i] >> j) & 1

    def set(self, i: int, j: int, bit: int) -> None:
        if bit:
            self.data[i] |= 1 << j
        else:
            self.data[i] &= ~(1 << j)

    def row_xor(self, dst: int, src: int) -> None:
        """data[dst] ^= data[src]."""
        self.data[dst] ^= self.data[src]

    def swap_rows(self, i: int, j: int) -> None:
        self.data[i], self.data[j] = self.data[j], self.data[i]

    def column(self, j: int) -> int:
        """Column j packed as an integer with bit i = entry (i, j)."""
        if not 0 <= j < self.cols:
            raise DimensionError(f"column {j} out of range for {self.cols} columns")
        out = 0
        for i, r in enumerate(self.data):
            out |= ((r >> j) & 1) << i
        return out

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BitMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(self.data)))

    def __repr__(self) -> str:
        if self.rows * self.cols > 400:
            return f"BitMatrix({self.rows}x{self.cols})"
        body = "\n".join(
            "".join(str((r >> j) & 1) for j in range(self.cols)) for r in self.data
        )
        return f"BitMatrix({self.rows}x{self.cols})\n{body}"


def vstack(top: BitMatrix, bottom: BitMatrix) -> BitMatrix:
    if top.cols != bottom.cols:
        raise DimensionError(f"column mismatch: {top.cols} vs {bottom.cols}")
    return BitMatrix(top.rows + bottom.rows, top.cols, top.data + bottom.data)


def gf2_rank(mat: BitMatrix) -> int:
    """Rank over GF(2), by elimination on a scratch copy of the rows."""
    pivots: dict[int, int] = {}  # highest set bit -> reduced row
    for row in mat.data:
        cur = row
        while cur:
            msb = cur.bit_length() - 1
            piv = pivots.get(msb)
            if piv is None:
                pivots[msb] = cur
                break
            cur ^= piv
    return len(pivots)


def reverse_bits(value: int, width: int) -> int:
    """Reverse the low ``width`` bits of ``value``."""
    out = 0
    for j in range(width):
        if (value >> j) & 1:
            out |= 1 << (width - 1 - j)
    return out
