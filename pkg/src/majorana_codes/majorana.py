"""The Majorana group Maj(2M), the Pauli group on M qubits, and the
Jordan-Wigner map between them.

Phases are stored as exponents ``k`` of ``i**k`` (mod 4) so that every group
operation is exact.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Union

from .gf2 import (
    BitVec,
    basis_change_matrices,
    popcount,
    symplectic_form_words,
    word_from_support,
    word_support,
)

PHASE_LABELS = ("+1", "+i", "-1", "-i")


def phase_label(k: int) -> str:
    return PHASE_LABELS[k % 4]


@dataclass(frozen=True)
class MajoranaOperator:
    """``i**phase * c_{mu_1} c_{mu_2} ...`` with ``mu_1 < mu_2 < ...``.

    ``modes`` is the number of fermionic modes M; supports live in 1..2M.
    """

    modes: int
    support_word: int = 0
    phase: int = 0

    def __post_init__(self) -> None:
        if self.support_word >> (2 * self.modes):
            raise ValueError(f"support exceeds {2 * self.modes} Majorana modes")
        object.__setattr__(self, "phase", self.phase % 4)

    @classmethod
    def from_indices(cls, modes: int, indices: Iterable[int], phase: int = 0) -> MajoranaOperator:
        """Product of ``c_mu`` taken in the given order (any order, repeats allowed)."""
        op = cls(modes, 0, phase)
        for mu in indices:
            if not 1 <= mu <= 2 * modes:
                raise IndexError(f"Majorana index {mu} outside 1..{2 * modes}")
            op = op * cls(modes, 1 << (mu - 1))
        return op

    @classmethod
    def identity(cls, modes: int) -> MajoranaOperator:
        return cls(modes)

    @property
    def num_majoranas(self) -> int:
        return 2 * self.modes

    @property
    def support(self) -> tuple[int, ...]:
        return word_support(self.support_word)

    @property
    def bits(self) -> BitVec:
        return BitVec(2 * self.modes, self.support_word)

    @property
    def weight(self) -> int:
        return popcount(self.support_word)

    def is_even(self) -> bool:
        return self.weight % 2 == 0

    def is_hermitian(self) -> bool:
        w = self.weight
        return (2 * self.phase + 2 * (w * (w - 1) // 2)) % 4 == 0

    def is_scalar(self) -> bool:
        return self.support_word == 0

    def dagger(self) -> MajoranaOperator:
        w = self.weight
        return MajoranaOperator(self.modes, self.support_word, -self.phase + 2 * (w * (w - 1) // 2))

    def with_phase(self, phase: int) -> MajoranaOperator:
        return MajoranaOperator(self.modes, self.support_word, phase)

    def __neg__(self) -> MajoranaOperator:
        return MajoranaOperator(self.modes, self.support_word, self.phase + 2)

    def __mul__(self, other: MajoranaOperator) -> MajoranaOperator:
        return multiply(self, other)

    def __str__(self) -> str:
        body = " ".join(f"c{mu}" for mu in self.support)
        return f"{phase_label(self.phase)} {body}".rstrip()


def _reorder_sign(a: int, b: int) -> int:
    """Parity of pairs (alpha in A, beta in B) with alpha > beta."""
    parity = 0
    while b:
        low = b & -b
        parity ^= popcount(a & ~((low << 1) - 1)) & 1
        b ^= low
    return parity


def _check_modes(a: MajoranaOperator, b: MajoranaOperator) -> None:
    if a.modes != b.modes:
        raise ValueError(f"mode-count mismatch: {a.modes} vs {b.modes}")


def multiply(a: MajoranaOperator, b: MajoranaOperator) -> MajoranaOperator:
    """Group product; moving each ``c_beta`` of ``b`` left past larger indices of ``a``."""
    _check_modes(a, b)
    sign = _reorder_sign(a.support_word, b.support_word)
    return MajoranaOperator(a.modes, a.support_word ^ b.support_word, a.phase + b.phase + 2 * sign)


def commutes(a: MajoranaOperator, b: MajoranaOperator) -> bool:
    _check_modes(a, b)
    return symplectic_form_words(a.support_word, b.support_word) == 0


def weight(op: MajoranaOperator) -> int:
    return op.weight


def is_even(op: MajoranaOperator) -> bool:
    return op.is_even()


def is_hermitian(op: MajoranaOperator) -> bool:
    return op.is_hermitian()


# --- Pauli group ------------------------------------------------------------

_LETTER = {(0, 0): "I", (0, 1): "X", (1, 1): "Y", (1, 0): "Z"}
_BITS = {v: k for k, v in _LETTER.items()}


@dataclass(frozen=True)
class PauliOperator:
    """``i**phase`` times a tensor product of I, X, Y, Z on qubits 1..n.

    Bit ``I - 1`` of ``zbits``/``xbits`` holds qubit ``I``; the (z, x) pair
    (0,0), (0,1), (1,1), (1,0) denotes I, X, Y, Z. Y is the literal Pauli Y.
    """

    num_qubits: int
    zbits: int = 0
    xbits: int = 0
    phase: int = 0

    def __post_init__(self) -> None:
        if (self.zbits | self.xbits) >> self.num_qubits:
            raise ValueError("Pauli bits exceed qubit count")
        object.__setattr__(self, "phase", self.phase % 4)

    @classmethod
    def from_string(cls, letters: str, phase: int = 0) -> PauliOperator:
        z = x = 0
        for i, ch in enumerate(letters):
            try:
                zb, xb = _BITS[ch]
            except KeyError:
                raise ValueError(f"invalid Pauli letter {ch!r}") from None
            z |= zb << i
            x |= xb << i
        return cls(len(letters), z, x, phase)

    @property
    def letters(self) -> str:
        return "".join(
            _LETTER[((self.zbits >> i) & 1, (self.xbits >> i) & 1)] for i in range(self.num_qubits)
        )

    @property
    def weight(self) -> int:
        return popcount(self.zbits | self.xbits)

    def symplectic_coordinates(self) -> BitVec:
        """Coordinates in the symplectic basis: 2I-1 -> z_I, 2I -> x_I."""
        word = 0
        for i in range(self.num_qubits):
            word |= ((self.zbits >> i) & 1) << (2 * i)
            word |= ((self.xbits >> i) & 1) << (2 * i + 1)
        return BitVec(2 * self.num_qubits, word)

    @classmethod
    def from_symplectic(cls, v: BitVec, phase: int = 0) -> PauliOperator:
        if v.length % 2:
            raise ValueError("symplectic vector must have even length")
        n = v.length // 2
        z = x = 0
        for i in range(n):
            z |= ((v.word >> (2 * i)) & 1) << i
            x |= ((v.word >> (2 * i + 1)) & 1) << i
        return cls(n, z, x, phase)

    def __mul__(self, other: PauliOperator) -> PauliOperator:
        return pauli_multiply(self, other)

    def __neg__(self) -> PauliOperator:
        return PauliOperator(self.num_qubits, self.zbits, self.xbits, self.phase + 2)

    def commutes(self, other: PauliOperator) -> bool:
        sym = popcount(self.zbits & other.xbits) + popcount(self.xbits & other.zbits)
        return sym % 2 == 0

    def __str__(self) -> str:
        return f"{phase_label(self.phase)} {self.letters}"


def pauli_multiply(a: PauliOperator, b: PauliOperator) -> PauliOperator:
    # Y = i X Z, so a literal-letter string is i^{|z&x|} X^x Z^z.
    if a.num_qubits != b.num_qubits:
        raise ValueError(f"qubit-count mismatch: {a.num_qubits} vs {b.num_qubits}")
    z = a.zbits ^ b.zbits
    x = a.xbits ^ b.xbits
    k = (
        a.phase
        + b.phase
        + popcount(a.zbits & a.xbits)
        + popcount(b.zbits & b.xbits)
        + 2 * popcount(a.zbits & b.xbits)
        - popcount(z & x)
    )
    return PauliOperator(a.num_qubits, z, x, k)


@lru_cache(maxsize=None)
def jordan_wigner_string(mu: int, modes: int) -> PauliOperator:
    """Pauli string of ``c_mu``: Z on qubits before I, then X (odd mu) or Y (even mu)."""
    if not 1 <= mu <= 2 * modes:
        raise IndexError(f"Majorana index {mu} outside 1..{2 * modes}")
    qubit = (mu + 1) // 2
    zstring = (1 << (qubit - 1)) - 1
    last = 1 << (qubit - 1)
    if mu % 2:
        return PauliOperator(modes, zstring, last)
    return PauliOperator(modes, zstring | last, last)


def majorana_to_pauli(op: MajoranaOperator) -> PauliOperator:
    result = PauliOperator(op.modes, 0, 0, op.phase)
    for mu in op.support:
        result = result * jordan_wigner_string(mu, op.modes)
    return result


def pauli_to_majorana(op: PauliOperator) -> MajoranaOperator:
    _, B = basis_change_matrices(op.num_qubits)
    support = B.apply(op.symplectic_coordinates())
    bare = MajoranaOperator(op.num_qubits, support.word)
    image = majorana_to_pauli(bare)
    if (image.zbits, image.xbits) != (op.zbits, op.xbits):
        raise AssertionError("basis-change matrix disagrees with Jordan-Wigner strings")
    return bare.with_phase(op.phase - image.phase)


# --- text syntax ------------------------------------------------------------

Operator = Union[MajoranaOperator, PauliOperator]

_PHASE_TOKEN = {"+1": 0, "1": 0, "+": 0, "+i": 1, "i": 1, "-1": 2, "-": 2, "-i": 3}
_MAJ_TOKEN = re.compile(r"c_?(\d+)")
_PAULI_BODY = re.compile(r"[IXYZ]+")


def parse_operator(text: str, modes: int | None = None) -> Operator:
    """Parse ``"-i c1 c4 c5"`` (Majorana) or ``"+1 XYXYXYXY"`` / ``"-ZZII"`` (Pauli).

    Majorana tokens are multiplied in the order written. ``modes`` defaults
    to the smallest M holding the largest index.
    """
    s = text.strip().replace("−", "-")
    if not s:
        raise ValueError("empty operator")
    tokens = s.split()
    phase = 0
    head = tokens[0]
    if head in _PHASE_TOKEN:
        phase = _PHASE_TOKEN[head]
        tokens = tokens[1:]
    elif head[0] in "+-" and len(head) > 1:
        # attached sign, e.g. "-ZZII" or "-c1"
        sign_end = 2 if head[1] == "i" else 1
        phase = _PHASE_TOKEN[head[:sign_end]]
        tokens = [head[sign_end:]] + tokens[1:]
    if len(tokens) == 1 and _PAULI_BODY.fullmatch(tokens[0]):
        op = PauliOperator.from_string(tokens[0], phase)
        if modes is not None and modes != op.num_qubits:
            raise ValueError(f"Pauli string has {op.num_qubits} qubits, expected {modes}")
        return op
    indices = []
    for tok in tokens:
        m = _MAJ_TOKEN.fullmatch(tok)
        if not m:
            raise ValueError(f"cannot parse operator token {tok!r} in {text!r}")
        indices.append(int(m.group(1)))
    if modes is None:
        if not indices:
            raise ValueError("mode count required for a bare phase")
        modes = (max(indices) + 1) // 2
    return MajoranaOperator.from_indices(modes, indices, phase)


def majorana_from_support(modes: int, indices: Iterable[int], phase: int = 0) -> MajoranaOperator:
    """Standard-ordered ``c_A`` from a support set (no reordering sign)."""
    return MajoranaOperator(modes, word_from_support(indices, 2 * modes), phase)
