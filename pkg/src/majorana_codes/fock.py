"""Sparse exact Fock-space vectors in the occupation-number basis.

A basis state ``|k_1 k_2 ... k_M>`` is ``p_1^{k_1} ... p_M^{k_M} |vac>`` and is
stored under the integer key with bit ``I - 1`` equal to ``k_I``. Amplitudes
are :class:`~majorana_codes.scalar.Scalar` values; zero amplitudes are never
stored.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping

from .gf2 import popcount
from .majorana import MajoranaOperator, PauliOperator
from .scalar import Scalar, ScalarLike, parse_scalar

MAX_MODES = 62


class FockVector:
    """Immutable sparse vector in the 2^M-dimensional Fock space."""

    __slots__ = ("modes", "_amps")

    def __init__(self, modes: int, amplitudes: Mapping[int, ScalarLike] | None = None) -> None:
        if not 0 <= modes <= MAX_MODES:
            raise ValueError(f"modes must be in 0..{MAX_MODES}")
        self.modes = modes
        amps: dict[int, Scalar] = {}
        limit = 1 << modes
        for key, val in (amplitudes or {}).items():
            if not 0 <= key < limit:
                raise ValueError(f"occupation key {key} out of range for {modes} modes")
            s = Scalar.coerce(val)
            if s:
                amps[key] = s
        self._amps = amps

    @classmethod
    def _trusted(cls, modes: int, amps: dict[int, Scalar]) -> FockVector:
        v = cls.__new__(cls)
        v.modes = modes
        v._amps = {k: a for k, a in amps.items() if a}
        return v

    @classmethod
    def vacuum(cls, modes: int) -> FockVector:
        return cls(modes, {0: 1})

    @classmethod
    def basis(cls, occupation: str | int, modes: int | None = None, amplitude: ScalarLike = 1) -> FockVector:
        """``|k_1...k_M>`` from a bitstring like ``"0101"`` or an integer key."""
        if isinstance(occupation, str):
            modes = len(occupation)
            key = occupation_key(occupation)
        else:
            if modes is None:
                raise ValueError("modes required with an integer key")
            key = occupation
        return cls(modes, {key: amplitude})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[str, ScalarLike]]) -> FockVector:
        modes = None
        acc: dict[int, Scalar] = {}
        for bits, amp in terms:
            if modes is None:
                modes = len(bits)
            elif len(bits) != modes:
                raise ValueError("inconsistent bitstring lengths")
            key = occupation_key(bits)
            acc[key] = acc.get(key, Scalar(0)) + Scalar.coerce(amp)
        if modes is None:
            raise ValueError("no terms given")
        return cls._trusted(modes, acc)

    # --- mapping-like access ---

    def items(self) -> Iterator[tuple[int, Scalar]]:
        return iter(sorted(self._amps.items(), key=lambda kv: occupation_string(kv[0], self.modes)))

    def keys(self) -> list[int]:
        return [k for k, _ in self.items()]

    def terms(self) -> list[tuple[str, Scalar]]:
        return [(occupation_string(k, self.modes), a) for k, a in self.items()]

    def __getitem__(self, occupation: str | int) -> Scalar:
        key = occupation_key(occupation) if isinstance(occupation, str) else occupation
        return self._amps.get(key, Scalar(0))

    def __len__(self) -> int:
        return len(self._amps)

    def is_zero(self) -> bool:
        return not self._amps

    # --- linear structure ---

    def _check(self, other: FockVector) -> None:
        if self.modes != other.modes:
            raise ValueError(f"mode-count mismatch: {self.modes} vs {other.modes}")

    def __add__(self, other: FockVector) -> FockVector:
        self._check(other)
        acc = dict(self._amps)
        for k, a in other._amps.items():
            acc[k] = acc[k] + a if k in acc else a
        return FockVector._trusted(self.modes, acc)

    def __sub__(self, other: FockVector) -> FockVector:
        return self + (-other)

    def __neg__(self) -> FockVector:
        return FockVector._trusted(self.modes, {k: -a for k, a in self._amps.items()})

    def scale(self, c: ScalarLike) -> FockVector:
        c = Scalar.coerce(c)
        return FockVector._trusted(self.modes, {k: a * c for k, a in self._amps.items()})

    def __rmul__(self, c: ScalarLike) -> FockVector:
        return self.scale(c)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.modes == other.modes and self._amps == other._amps

    def __hash__(self) -> int:
        return hash((self.modes, frozenset(self._amps.items())))

    def __repr__(self) -> str:
        return f"FockVector({self})"

    def __str__(self) -> str:
        if not self._amps:
            return "0"
        return " ".join(f"({a})|{bits}>" for bits, a in self.terms())


def occupation_key(bits: str) -> int:
    if not re.fullmatch(r"[01]*", bits):
        raise ValueError(f"not an occupation bitstring: {bits!r}")
    return sum(1 << i for i, ch in enumerate(bits) if ch == "1")


def occupation_string(key: int, modes: int) -> str:
    return "".join("1" if (key >> i) & 1 else "0" for i in range(modes))


def _check_index(index: int, modes: int) -> None:
    if not 1 <= index <= modes:
        raise IndexError(f"mode index {index} outside 1..{modes}")


def _parity_below(key: int, index: int) -> int:
    return popcount(key & ((1 << (index - 1)) - 1)) & 1


def create(index: int, v: FockVector) -> FockVector:
    """``p_I v``."""
    _check_index(index, v.modes)
    bit = 1 << (index - 1)
    out = {}
    for key, a in v._amps.items():
        if not key & bit:
            out[key | bit] = -a if _parity_below(key, index) else a
    return FockVector._trusted(v.modes, out)


def annihilate(index: int, v: FockVector) -> FockVector:
    """``n_I v``."""
    _check_index(index, v.modes)
    bit = 1 << (index - 1)
    out = {}
    for key, a in v._amps.items():
        if key & bit:
            out[key ^ bit] = -a if _parity_below(key, index) else a
    return FockVector._trusted(v.modes, out)


def majorana_on_basis(support_word: int, phase: int, key: int) -> tuple[int, int]:
    """Image of ``|key>`` under ``i**phase c_A``: returns (new key, i-exponent).

    Applies each ``c_mu`` right to left with ``c_{2I-1} = p_I + n_I`` and
    ``c_{2I} = i (p_I - n_I)``.
    """
    k = phase
    word = support_word
    while word:
        top = word.bit_length() - 1  # 0-based Majorana index mu - 1
        word ^= 1 << top
        mode = top >> 1  # 0-based fermionic mode
        bit = 1 << mode
        occupied = key & bit
        if popcount(key & (bit - 1)) & 1:
            k += 2
        if top & 1:  # c_{2I}: +i on create, -i on annihilate
            k += 3 if occupied else 1
        key ^= bit
    return key, k % 4


def apply_majorana(op: MajoranaOperator, v: FockVector) -> FockVector:
    if op.modes != v.modes:
        raise ValueError(f"mode-count mismatch: {op.modes} vs {v.modes}")
    out = {}
    for key, a in v._amps.items():
        new, k = majorana_on_basis(op.support_word, op.phase, key)
        out[new] = a.times_i_power(k)
    return FockVector._trusted(v.modes, out)


def apply_pauli(op: PauliOperator, v: FockVector) -> FockVector:
    """Tensor-product Pauli action, qubit I acting on occupation ``k_I``.

    Z|0> = |0>, Z|1> = -|1>, X flips, Y = i X Z.
    """
    if op.num_qubits != v.modes:
        raise ValueError(f"qubit-count mismatch: {op.num_qubits} vs {v.modes}")
    zx = popcount(op.zbits & op.xbits)
    out = {}
    for key, a in v._amps.items():
        k = op.phase + zx + 2 * popcount(key & op.zbits)
        out[key ^ op.xbits] = a.times_i_power(k)
    return FockVector._trusted(v.modes, out)


def chirality(modes: int) -> MajoranaOperator:
    """``(-i)^M c_1 c_2 ... c_{2M}``; +1 on even and -1 on odd particle number."""
    return MajoranaOperator(modes, (1 << (2 * modes)) - 1, -modes)


def inner(u: FockVector, v: FockVector) -> Scalar:
    """``<u|v>``, conjugate-linear in ``u``."""
    u._check(v)
    total = Scalar(0)
    small, large = (u, v) if len(u) <= len(v) else (v, u)
    for key in small._amps:
        if key in large._amps:
            total = total + u._amps[key].conjugate() * v._amps[key]
    return total


def sector(v: FockVector) -> dict[int, FockVector]:
    """Split into particle-number components, keyed by particle number."""
    parts: dict[int, dict[int, Scalar]] = {}
    for key, a in v._amps.items():
        parts.setdefault(popcount(key), {})[key] = a
    return {m: FockVector._trusted(v.modes, amps) for m, amps in sorted(parts.items())}


def chirality_sector(v: FockVector) -> str:
    """``"+"``, ``"-"`` or ``"mixed"`` by parity of occupation weight (``"+"`` for zero)."""
    parities = {popcount(k) & 1 for k in v._amps}
    if parities == {1}:
        return "-"
    if len(parities) == 2:
        return "mixed"
    return "+"


# --- exact span computations ------------------------------------------------


class SpanBasis:
    """Incremental exact row reduction of sparse Fock vectors over Q(i)."""

    def __init__(self, modes: int) -> None:
        self.modes = modes
        self._rows: list[tuple[int, dict[int, Scalar]]] = []  # (pivot key, monic row)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _reduce(self, v: FockVector) -> dict[int, Scalar]:
        amps = dict(v._amps)
        for pivot, row in self._rows:
            c = amps.get(pivot)
            if c:
                for k, a in row.items():
                    new = amps.get(k, Scalar(0)) - c * a
                    if new:
                        amps[k] = new
                    else:
                        amps.pop(k, None)
        return amps

    def contains(self, v: FockVector) -> bool:
        if v.modes != self.modes:
            raise ValueError("mode-count mismatch")
        return not self._reduce(v)

    def add(self, v: FockVector) -> bool:
        if v.modes != self.modes:
            raise ValueError("mode-count mismatch")
        amps = self._reduce(v)
        if not amps:
            return False
        pivot = min(amps)
        c = amps[pivot]
        row = {k: a / c for k, a in amps.items()}
        self._rows.append((pivot, row))
        return True


def span_rank(vectors: Iterable[FockVector], modes: int | None = None) -> int:
    vectors = list(vectors)
    if modes is None:
        if not vectors:
            return 0
        modes = vectors[0].modes
    basis = SpanBasis(modes)
    for v in vectors:
        basis.add(v)
    return basis.rank


def same_span(a: Iterable[FockVector], b: Iterable[FockVector]) -> bool:
    a, b = list(a), list(b)
    if not a or not b:
        return not any(not v.is_zero() for v in a + b)
    ra, rb = span_rank(a), span_rank(b)
    return ra == rb == span_rank(a + b)


# --- state file format ------------------------------------------------------

_TERM = re.compile(r"^\s*(?P<amp>\S+)\s*\|(?P<bits>[01]+)(?:>|⟩)\s*$")


def format_state(v: FockVector) -> str:
    """One ``+a/b+c/d*i |bits>`` line per nonzero term, in bitstring order."""
    return "".join(f"{a.signed_str()} |{bits}⟩\n" for bits, a in v.terms())


def parse_state(text: str, modes: int | None = None) -> FockVector:
    terms = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        m = _TERM.match(line)
        if not m:
            raise ValueError(f"line {lineno}: expected '<amplitude> |bits>', got {line!r}")
        try:
            amp = parse_scalar(m["amp"])
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        terms.append((m["bits"], amp))
    if not terms:
        if modes is None:
            raise ValueError("empty state file and no mode count")
        return FockVector(modes)
    v = FockVector.from_terms(terms)
    if modes is not None and v.modes != modes:
        raise ValueError(f"state has {v.modes} modes, expected {modes}")
    return v
