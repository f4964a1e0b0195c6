"""Sign-free Pauli products in the binary symplectic encoding.

A product on n qubits is a pair of n-bit vectors (z, x): qubit i carries
(z_i, x_i) with (0,0)=I, (0,1)=X, (1,1)=Y, (1,0)=Z. A sequence of m products
is the 2n x m block matrix [Z; X], stored as two n x m :class:`BitMatrix`
blocks whose column j is product j.

Signs are deliberately not part of the sequence: conjugating by a Clifford
gate acts on the bits in the same way whatever the sign, so the passes that
only care about which Hadamards are needed can ignore phases entirely. The
passes that do need them (tableau, rotation insertion) carry a separate sign
word, updated here by :func:`signed_update` so the phase rules live in one
place.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple

from .bitmatrix import BitMatrix, DimensionError, reverse_bits, vstack


class Pauli(NamedTuple):
    """One sign-free Pauli product: n-bit z and x vectors."""

    n_qubits: int
    z: int
    x: int

    @property
    def is_diagonal(self) -> bool:
        return self.x == 0

    @property
    def is_identity(self) -> bool:
        return self.z == 0 and self.x == 0


def commutes(p: Pauli, q: Pauli) -> bool:
    """True iff p and q commute: <z_p, x_q> + <x_p, z_q> = 0 over GF(2)."""
    if p.n_qubits != q.n_qubits:
        raise DimensionError(f"qubit count mismatch: {p.n_qubits} vs {q.n_qubits}")
    return ((p.z & q.x).bit_count() + (p.x & q.z).bit_count()) % 2 == 0


def iter_bits(value: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while value:
        low = value & -value
        yield low.bit_length() - 1
        value ^= low


# Row-level conjugation rules, shared by sequences and tableaus. The update
# sends every encoded product P to g P g^dag; the bit rules are the classic
# ones (CNOT adds rows, S folds X into Z, H swaps) and the sign word gets the
# standard stabilizer-formalism phase flips, validated exhaustively against
# dense conjugation in the tests.
def signed_update(
    name: str,
    qubits: tuple[int, ...],
    zrows: list[int],
    xrows: list[int],
    signs: int,
    mask: int,
) -> int:
    """Apply gate conjugation to packed (z, x) rows; return the new sign word."""
    if name == "h":
        (i,) = qubits
        signs ^= zrows[i] & xrows[i]
        zrows[i], xrows[i] = xrows[i], zrows[i]
    elif name == "s":
        (i,) = qubits
        signs ^= zrows[i] & xrows[i]
        zrows[i] ^= xrows[i]
    elif name == "sdg":
        (i,) = qubits
        signs ^= xrows[i] & ~zrows[i] & mask
        zrows[i] ^= xrows[i]
    elif name == "x":
        (i,) = qubits
        signs ^= zrows[i]
    elif name == "cnot":
        c, t = qubits
        signs ^= xrows[c] & zrows[t] & (xrows[t] ^ zrows[c] ^ mask)
        zrows[c] ^= zrows[t]
        xrows[t] ^= xrows[c]
    else:
        raise ValueError(f"cannot conjugate by non-Clifford gate {name!r}")
    return signs


class PauliSequence:
    """Ordered sequence of m sign-free Pauli products on n qubits."""

    __slots__ = ("n_qubits", "z", "x")

    def __init__(self, n_qubits: int, z: BitMatrix, x: BitMatrix):
        if z.rows != n_qubits or x.rows != n_qubits or z.cols != x.cols:
            raise DimensionError(
                f"blocks must both be {n_qubits} x m, got "
                f"{z.rows}x{z.cols} and {x.rows}x{x.cols}"
            )
        self.n_qubits = n_qubits
        self.z = z
        self.x = x

    @property
    def m(self) -> int:
        return self.z.cols

    @classmethod
    def empty(cls, n_qubits: int) -> PauliSequence:
        return cls(n_qubits, BitMatrix.zeros(n_qubits, 0), BitMatrix.zeros(n_qubits, 0))

    @classmethod
    def from_columns(cls, n_qubits: int, columns: list[Pauli]) -> PauliSequence:
        z = BitMatrix.zeros(n_qubits, len(columns))
        x = BitMatrix.zeros(n_qubits, len(columns))
        for j, p in enumerate(columns):
            if p.n_qubits != n_qubits:
                raise DimensionError("column width mismatch")
            for i in range(n_qubits):
                if (p.z >> i) & 1:
                    z.data[i] |= 1 << j
                if (p.x >> i) & 1:
                    x.data[i] |= 1 << j
        return cls(n_qubits, z, x)

    @classmethod
    def from_lists(cls, z_lists: list[list[int]], x_lists: list[list[int]]) -> PauliSequence:
        z = BitMatrix.from_lists(z_lists)
        x = BitMatrix.from_lists(x_lists)
        return cls(z.rows, z, x)

    def column(self, j: int) -> Pauli:
        return Pauli(self.n_qubits, self.z.column(j), self.x.column(j))

    def columns(self) -> list[Pauli]:
        return [self.column(j) for j in range(self.m)]

    def copy(self) -> PauliSequence:
        return PauliSequence(self.n_qubits, self.z.copy(), self.x.copy())

    def apply_gate(self, gate) -> None:
        """Conjugate every column by a Clifford gate, in place (signs dropped)."""
        self.apply_gate_signed(gate, 0)

    def apply_gate_signed(self, gate, signs: int) -> int:
        """Conjugate every column, tracking a per-column sign word."""
        name, qubits = gate.name, gate.qubits
        for q in qubits:
            if not 0 <= q < self.n_qubits:
                raise DimensionError(f"qubit {q} out of range for {self.n_qubits}")
        mask = (1 << self.m) - 1
        return signed_update(name, qubits, self.z.data, self.x.data, signs, mask)

    def reversed_columns(self) -> PauliSequence:
        m = self.m
        z = BitMatrix(self.n_qubits, m, [reverse_bits(r, m) for r in self.z.data])
        x = BitMatrix(self.n_qubits, m, [reverse_bits(r, m) for r in self.x.data])
        return PauliSequence(self.n_qubits, z, x)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PauliSequence)
            and self.n_qubits == other.n_qubits
            and self.z == other.z
            and self.x == other.x
        )

    def __repr__(self) -> str:
        return f"PauliSequence(n={self.n_qubits}, m={self.m})"


def hstack(a: PauliSequence, b: PauliSequence) -> PauliSequence:
    if a.n_qubits != b.n_qubits:
        raise DimensionError("qubit count mismatch")
    n, ma = a.n_qubits, a.m
    z = BitMatrix(n, ma + b.m, [a.z.data[i] | (b.z.data[i] << ma) for i in range(n)])
    x = BitMatrix(n, ma + b.m, [a.x.data[i] | (b.x.data[i] << ma) for i in range(n)])
    return PauliSequence(n, z, x)


def commutativity_matrix(seq: PauliSequence) -> BitMatrix:
    """Strictly upper triangular m x m matrix; (i, j) = 1 iff columns i, j anticommute."""
    m = seq.m
    cols = seq.columns()
    out = BitMatrix.zeros(m, m)
    for i in range(m):
        zi, xi = cols[i].z, cols[i].x
        row = 0
        for j in range(i + 1, m):
            if ((zi & cols[j].x).bit_count() + (xi & cols[j].z).bit_count()) & 1:
                row |= 1 << j
        out.data[i] = row
    return out


def stack_xa(seq: PauliSequence, comm: BitMatrix) -> BitMatrix:
    """The (n + m) x m stack of the X block on top of the commutativity matrix.

    Its GF(2) rank is the exact Hadamard cost of diagonalizing the sequence
    in order, and the rank of ``comm`` alone is the internal-Hadamard cost.
    """
    if comm.rows != seq.m or comm.cols != seq.m:
        raise DimensionError(f"commutativity matrix must be {seq.m} x {seq.m}")
    return vstack(seq.x, comm)
