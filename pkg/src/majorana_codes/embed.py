"""Embedding n qubits into the Fock space of M = 2n fermionic modes.

Qubit ``j`` owns fermionic modes ``2j-1, 2j`` and Majorana modes
``4j-3 .. 4j``. Qubit states are indexed by bitstrings ``b_1 ... b_n`` with
``b_1`` leftmost (most significant in the integer index).

* single occupancy: ``b_j = 0 -> occupations 01``, ``b_j = 1 -> 10``
* double occupancy: ``b_j = 0 -> 11``, ``b_j = 1 -> 00``
* mixed occupancy ``alpha``: ``c_1^{alpha_1} c_5^{alpha_2} ...`` applied to
  the single-occupancy embedding
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .fock import FockVector, apply_majorana, occupation_key
from .majorana import MajoranaOperator, majorana_from_support, multiply
from .scalar import Scalar, ScalarLike, parse_scalar

FAMILIES = ("single", "double", "shared")
AXES = ("x", "y", "z")


@dataclass(frozen=True)
class EmbeddedQubitState:
    """Amplitudes of an n-qubit state, index ``b_1 b_2 ... b_n`` read as binary."""

    n: int
    amplitudes: tuple[Scalar, ...]

    def __post_init__(self) -> None:
        if len(self.amplitudes) != 1 << self.n:
            raise ValueError(f"expected {1 << self.n} amplitudes, got {len(self.amplitudes)}")

    @classmethod
    def from_amplitudes(cls, amplitudes: Sequence[ScalarLike]) -> EmbeddedQubitState:
        n = len(amplitudes).bit_length() - 1
        if 1 << n != len(amplitudes):
            raise ValueError("number of amplitudes must be a power of two")
        return cls(n, tuple(Scalar.coerce(a) for a in amplitudes))

    @classmethod
    def basis(cls, bits: str) -> EmbeddedQubitState:
        n = len(bits)
        amps = [Scalar(0)] * (1 << n)
        amps[int(bits, 2) if bits else 0] = Scalar(1)
        return cls(n, tuple(amps))

    def items(self):
        for index, a in enumerate(self.amplitudes):
            if a:
                yield format(index, f"0{self.n}b") if self.n else "", a


def parse_qubit_state(text: str) -> EmbeddedQubitState:
    """One amplitude per line, in index order ``00..0, 00..1, ..., 11..1``."""
    amps = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            amps.append(parse_scalar(line))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    return EmbeddedQubitState.from_amplitudes(amps)


def single_occupation(bits: str) -> str:
    return "".join("10" if b == "1" else "01" for b in bits)


def double_occupation(bits: str) -> str:
    return "".join("00" if b == "1" else "11" for b in bits)


def _embed(psi: EmbeddedQubitState, occupation) -> FockVector:
    # creation operators in ascending mode order give |k> with coefficient +1
    terms = {occupation_key(occupation(b)): a for b, a in psi.items()}
    return FockVector(2 * psi.n, terms)


def embed_single(psi: EmbeddedQubitState) -> FockVector:
    return _embed(psi, single_occupation)


def embed_double(psi: EmbeddedQubitState) -> FockVector:
    return _embed(psi, double_occupation)


def intertwiner(n: int, alpha: str | None = None) -> MajoranaOperator:
    """``c_1 c_5 ... c_{4n-3}``, or the sub-product selected by ``alpha``."""
    if alpha is None:
        alpha = "1" * n
    if len(alpha) != n:
        raise ValueError(f"occupancy label must have {n} bits")
    return majorana_from_support(2 * n, [4 * j + 1 for j, a in enumerate(alpha) if a == "1"])


def embed_mixed(psi: EmbeddedQubitState, alpha: str) -> FockVector:
    return apply_majorana(intertwiner(psi.n, alpha), embed_single(psi))


def mixed_subspace(alpha: str) -> list[FockVector]:
    """Basis of K^(alpha), one vector per qubit bitstring in index order."""
    n = len(alpha)
    if set(alpha) - {"0", "1"}:
        raise ValueError(f"invalid occupancy label {alpha!r}")
    return [embed_mixed(EmbeddedQubitState.basis(format(i, f"0{n}b")), alpha) for i in range(1 << n)]


@dataclass(frozen=True)
class TransportEntry:
    source: str
    target: str
    sign: Scalar


def intertwiner_transport(n: int) -> list[TransportEntry]:
    """How the intertwiner maps single-occupancy basis states to double ones.

    For each qubit bitstring ``b``: ``Omega |b>_single = sign * |b'>_double``.
    """
    omega = intertwiner(n)
    table = []
    for i in range(1 << n):
        bits = format(i, f"0{n}b")
        image = apply_majorana(omega, embed_single(EmbeddedQubitState.basis(bits)))
        ((occ, amp),) = image.terms()
        target = "".join("1" if occ[2 * j : 2 * j + 2] == "00" else "0" for j in range(n))
        if double_occupation(target) != occ:
            raise AssertionError(f"intertwiner left the double-occupancy subspace: {occ}")
        table.append(TransportEntry(bits, target, amp))
    return table


def embedded_pauli(family: str, axis: str, j: int, n: int) -> MajoranaOperator:
    """Weight-2 Majorana representative of a Pauli matrix on embedded qubit ``j``.

    ``single``: valid on single occupancy; ``double``: the conjugate
    ``c_{4j-3} sigma c_{4j-3}`` of the single one, valid on double occupancy;
    ``shared``: valid on both.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if axis not in AXES:
        raise ValueError(f"unknown axis {axis!r}; expected one of {AXES}")
    if not 1 <= j <= n:
        raise IndexError(f"qubit index {j} outside 1..{n}")
    M = 2 * n
    c1, c2, c3, c4 = (4 * j - 3, 4 * j - 2, 4 * j - 1, 4 * j)
    if family == "shared":
        support, phase = {"x": ((c2, c3), 3), "y": ((c2, c4), 1), "z": ((c3, c4), 1)}[axis]
        return majorana_from_support(M, support, phase)
    single = majorana_from_support(M, {"x": (c1, c4), "y": (c2, c4), "z": (c3, c4)}[axis], 1)
    if family == "single":
        return single
    c = majorana_from_support(M, (c1,))
    return multiply(multiply(c, single), c)


def occupancy_parity(alpha: str) -> int:
    return alpha.count("1") % 2

