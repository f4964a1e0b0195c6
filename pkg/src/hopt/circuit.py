"""Gate-level circuits over {X, CNOT, S, Sdg, H, Rz(theta)}.

Angles are exact for dyadic multiples of pi (numerator over a power-of-two
denominator, normalized into [0, 2pi)) and plain float radians otherwise.
The Clifford / T-like classification that drives every pass is exact in the
dyadic case; floats compare against multiples of pi/2 and pi/4 with a 1e-12
tolerance so the classification is deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

FLOAT_TOL = 1e-12


class Angle:
    """Rotation angle: exact dyadic fraction of pi, or float radians."""

    __slots__ = ("num", "den", "rad")

    def __init__(self, num: int | None, den: int, rad: float | None):
        self.num = num
        self.den = den
        self.rad = rad

    @classmethod
    def exact(cls, num: int, den: int) -> Angle:
        """Angle num*pi/den with den a power of two; normalized and reduced."""
        if den <= 0 or den & (den - 1):
            raise ValueError(f"denominator must be a positive power of two, got {den}")
        num %= 2 * den
        while den > 1 and num % 2 == 0:
            num //= 2
            den //= 2
        return cls(num, den, None)

    @classmethod
    def radians(cls, value: float) -> Angle:
        return cls(None, 1, float(value))

    @property
    def is_exact(self) -> bool:
        return self.num is not None

    def value(self) -> float:
        if self.num is not None:
            return self.num * math.pi / self.den
        return self.rad

    def _quarter_turns(self) -> int | None:
        """k with angle = k*pi/2 (mod 2pi), or None if not a multiple of pi/2."""
        if self.num is not None:
            if self.den <= 2:
                return (self.num * (2 // self.den)) % 4
            return None
        k = round(self.rad / (math.pi / 2))
        if abs(self.rad - k * (math.pi / 2)) <= FLOAT_TOL:
            return k % 4
        return None

    @property
    def is_clifford(self) -> bool:
        return self._quarter_turns() is not None

    @property
    def is_zero(self) -> bool:
        return self._quarter_turns() == 0 if self.is_clifford else False

    @property
    def is_t_like(self) -> bool:
        """True iff the angle is an odd multiple of pi/4."""
        if self.num is not None:
            return self.den == 4
        k = round(self.rad / (math.pi / 4))
        return k % 2 == 1 and abs(self.rad - k * (math.pi / 4)) <= FLOAT_TOL

    def __add__(self, other: Angle) -> Angle:
        if self.num is not None and other.num is not None:
            den = max(self.den, other.den)
            num = self.num * (den // self.den) + other.num * (den // other.den)
            return Angle.exact(num, den)
        return Angle.radians(self.value() + other.value())

    def __neg__(self) -> Angle:
        if self.num is not None:
            return Angle.exact(-self.num, self.den)
        return Angle.radians(-self.rad)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Angle):
            return NotImplemented
        if (self.num is None) != (other.num is None):
            return False
        if self.num is not None:
            return self.num == other.num and self.den == other.den
        return self.rad == other.rad

    def __hash__(self):
        return hash((self.num, self.den, self.rad))

    def __repr__(self) -> str:
        if self.num is not None:
            return f"Angle({self.num}pi/{self.den})" if self.den > 1 else f"Angle({self.num}pi)"
        return f"Angle({self.rad!r} rad)"


PI = Angle.exact(1, 1)
PI_2 = Angle.exact(1, 2)
PI_4 = Angle.exact(1, 4)
ZERO = Angle.exact(0, 1)


@dataclass(frozen=True)
class Gate:
    name: str  # "x", "cnot", "s", "sdg", "h", "rz"
    qubits: tuple[int, ...]
    angle: Angle | None = None

    @property
    def is_clifford(self) -> bool:
        if self.name != "rz":
            return True
        return self.angle.is_clifford

    def dagger(self) -> Gate:
        if self.name == "s":
            return Gate("sdg", self.qubits)
        if self.name == "sdg":
            return Gate("s", self.qubits)
        if self.name == "rz":
            return Gate("rz", self.qubits, -self.angle)
        return self  # x, h, cnot are self-inverse

    def __repr__(self) -> str:
        if self.name == "rz":
            return f"Rz({self.qubits[0]}, {self.angle!r})"
        return f"{self.name.upper()}({', '.join(map(str, self.qubits))})"


def X(q: int) -> Gate:
    return Gate("x", (q,))


def S(q: int) -> Gate:
    return Gate("s", (q,))


def Sdg(q: int) -> Gate:
    return Gate("sdg", (q,))


def H(q: int) -> Gate:
    return Gate("h", (q,))


def CNOT(control: int, target: int) -> Gate:
    if control == target:
        raise ValueError("CNOT control and target must differ")
    return Gate("cnot", (control, target))


def Rz(q: int, angle: Angle) -> Gate:
    return Gate("rz", (q,), angle)


@dataclass
class Circuit:
    n_qubits: int
    gates: list[Gate] = field(default_factory=list)

    def __post_init__(self):
        for g in self.gates:
            self._check(g)

    def _check(self, gate: Gate) -> None:
        for q in gate.qubits:
            if not 0 <= q < self.n_qubits:
                raise ValueError(f"qubit {q} out of range for width {self.n_qubits}")

    def append(self, gate: Gate) -> None:
        self._check(gate)
        self.gates.append(gate)

    def extend(self, gates) -> None:
        for g in gates:
            self.append(g)

    def copy(self) -> Circuit:
        return Circuit(self.n_qubits, list(self.gates))

    def __len__(self) -> int:
        return len(self.gates)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Circuit)
            and self.n_qubits == other.n_qubits
            and self.gates == other.gates
        )


@dataclass(frozen=True)
class Counts:
    gate_count: int
    h_count: int
    internal_h_count: int
    t_count: int


def concat(a: Circuit, b: Circuit) -> Circuit:
    if a.n_qubits != b.n_qubits:
        raise ValueError(f"width mismatch: {a.n_qubits} vs {b.n_qubits}")
    return Circuit(a.n_qubits, a.gates + b.gates)


def inverse(c: Circuit) -> Circuit:
    return Circuit(c.n_qubits, [g.dagger() for g in reversed(c.gates)])


def clifford_part(c: Circuit) -> Circuit:
    """The circuit with its non-Clifford rotations removed."""
    return Circuit(c.n_qubits, [g for g in c.gates if g.is_clifford])


def counts(c: Circuit) -> Counts:
    """Gate statistics. An internal H sits strictly between the first and the
    last non-Clifford Rz gate by list position; t_count is the number of Rz
    gates at odd multiples of pi/4."""
    h_count = 0
    t_count = 0
    first_rot = None
    last_rot = None
    for i, g in enumerate(c.gates):
        if g.name == "h":
            h_count += 1
        elif g.name == "rz":
            if g.angle.is_t_like:
                t_count += 1
            if not g.angle.is_clifford:
                if first_rot is None:
                    first_rot = i
                last_rot = i
    internal = 0
    if first_rot is not None and last_rot > first_rot:
        internal = sum(
            1 for g in c.gates[first_rot + 1 : last_rot] if g.name == "h"
        )
    return Counts(len(c.gates), h_count, internal, t_count)
