"""Binary linear algebra over GF(2) on packed integer words.

Bit ``i`` of a word holds coordinate ``i + 1``; the public API is 1-indexed
so that Majorana mode ``c_mu`` corresponds to coordinate ``mu``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def popcount(word: int) -> int:
    return bin(word).count("1")


def word_support(word: int) -> tuple[int, ...]:
    """1-based indices of the set bits of ``word``, ascending."""
    out = []
    i = 1
    while word:
        if word & 1:
            out.append(i)
        word >>= 1
        i += 1
    return tuple(out)


def word_from_support(indices: Iterable[int], length: int | None = None) -> int:
    word = 0
    for i in indices:
        if i < 1 or (length is not None and i > length):
            raise IndexError(f"index {i} outside 1..{length}")
        word ^= 1 << (i - 1)
    return word


@dataclass(frozen=True)
class BitVec:
    """Fixed-length vector over GF(2)."""

    length: int
    word: int = 0

    def __post_init__(self) -> None:
        if self.word >> self.length:
            raise ValueError(f"word has bits beyond length {self.length}")

    @classmethod
    def from_support(cls, length: int, indices: Iterable[int]) -> BitVec:
        return cls(length, word_from_support(indices, length))

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> BitVec:
        return cls(len(bits), word_from_support(i + 1 for i, b in enumerate(bits) if b % 2))

    @property
    def support(self) -> tuple[int, ...]:
        return word_support(self.word)

    @property
    def weight(self) -> int:
        return popcount(self.word)

    def bits(self) -> list[int]:
        return [(self.word >> i) & 1 for i in range(self.length)]

    def __getitem__(self, index: int) -> int:
        if not 1 <= index <= self.length:
            raise IndexError(index)
        return (self.word >> (index - 1)) & 1

    def __xor__(self, other: BitVec) -> BitVec:
        _check_lengths(self, other)
        return BitVec(self.length, self.word ^ other.word)

    __add__ = __xor__

    def __len__(self) -> int:
        return self.length

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits())


def _check_lengths(a: BitVec, b: BitVec) -> None:
    if a.length != b.length:
        raise ValueError(f"length mismatch: {a.length} vs {b.length}")


def symplectic_form_words(a: int, b: int) -> int:
    """|A||B| + |A & B| mod 2 on raw support words."""
    return (popcount(a) * popcount(b) + popcount(a & b)) & 1


def symplectic_form(a: BitVec, b: BitVec) -> int:
    """Commutation form of two Majorana supports.

    Returns 0 when ``c_A`` and ``c_B`` commute and 1 when they anticommute.
    """
    _check_lengths(a, b)
    return symplectic_form_words(a.word, b.word)


def dot(a: BitVec, b: BitVec) -> int:
    _check_lengths(a, b)
    return popcount(a.word & b.word) & 1


@dataclass(frozen=True)
class GF2Matrix:
    """Dense binary matrix; each row is a packed word of ``ncols`` bits."""

    ncols: int
    rows: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for r in self.rows:
            if r >> self.ncols:
                raise ValueError("row wider than ncols")

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]], ncols: int | None = None) -> GF2Matrix:
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        words = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            words.append(BitVec.from_bits(r).word)
        return cls(ncols, tuple(words))

    @classmethod
    def from_bitvecs(cls, vecs: Sequence[BitVec], ncols: int | None = None) -> GF2Matrix:
        if ncols is None:
            if not vecs:
                raise ValueError("ncols required for an empty matrix")
            ncols = vecs[0].length
        for v in vecs:
            if v.length != ncols:
                raise ValueError("length mismatch")
        return cls(ncols, tuple(v.word for v in vecs))

    @classmethod
    def identity(cls, n: int) -> GF2Matrix:
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> GF2Matrix:
        return cls(ncols, (0,) * nrows)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.ncols

    def row(self, i: int) -> BitVec:
        """Row ``i`` (1-based)."""
        return BitVec(self.ncols, self.rows[i - 1])

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i - 1] >> (j - 1)) & 1

    def column(self, j: int) -> BitVec:
        return BitVec(len(self.rows), sum(((r >> (j - 1)) & 1) << i for i, r in enumerate(self.rows)))

    def to_lists(self) -> list[list[int]]:
        return [BitVec(self.ncols, r).bits() for r in self.rows]

    def transpose(self) -> GF2Matrix:
        return GF2Matrix(len(self.rows), tuple(self.column(j).word for j in range(1, self.ncols + 1)))

    @property
    def T(self) -> GF2Matrix:
        return self.transpose()

    def apply(self, v: BitVec) -> BitVec:
        """Matrix-vector product ``M v``."""
        if v.length != self.ncols:
            raise ValueError("length mismatch")
        out = 0
        for i, r in enumerate(self.rows):
            out |= (popcount(r & v.word) & 1) << i
        return BitVec(len(self.rows), out)

    def __matmul__(self, other: GF2Matrix) -> GF2Matrix:
        if self.ncols != len(other.rows):
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for r in self.rows:
            acc = 0
            for k, orow in enumerate(other.rows):
                if (r >> k) & 1:
                    acc ^= orow
            out.append(acc)
        return GF2Matrix(other.ncols, tuple(out))

    def append_row(self, v: BitVec) -> GF2Matrix:
        if v.length != self.ncols:
            raise ValueError("length mismatch")
        return GF2Matrix(self.ncols, self.rows + (v.word,))

    def __str__(self) -> str:
        return "\n".join(str(BitVec(self.ncols, r)) for r in self.rows)


# --- elimination ------------------------------------------------------------


class Echelon:
    """Incremental reduced basis of a row space, tracking row combinations.

    Pivot is the lowest set coordinate (leftmost in 1-based order). Each
    stored basis word carries the set of original rows that sum to it, so
    membership queries return a deterministic witness.
    """

    def __init__(self) -> None:
        self._pivots: dict[int, tuple[int, int]] = {}  # pivot bit -> (word, combo)
        self._order: list[int] = []
        self.dependencies: list[int] = []  # combos that reduced to zero
        self.nrows = 0

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def reduce(self, word: int) -> tuple[int, int]:
        """Return (residual, combo) with word = residual + sum(rows in combo)."""
        combo = 0
        for bit in self._order:
            if (word >> bit) & 1:
                w, c = self._pivots[bit]
                word ^= w
                combo ^= c
        return word, combo

    def add(self, word: int) -> bool:
        """Append a row; return True if it increased the rank."""
        tag = 1 << self.nrows
        self.nrows += 1
        residual, combo = self.reduce(word)
        combo ^= tag
        if residual == 0:
            self.dependencies.append(combo)
            return False
        bit = (residual & -residual).bit_length() - 1
        # keep the basis fully reduced so reduce() may walk pivots in any order
        for b in self._order:
            w, c = self._pivots[b]
            if (w >> bit) & 1:
                self._pivots[b] = (w ^ residual, c ^ combo)
        self._pivots[bit] = (residual, combo)
        self._order.append(bit)
        return True

    def basis(self) -> list[int]:
        return [self._pivots[b][0] for b in sorted(self._pivots)]


def echelon(words: Iterable[int]) -> Echelon:
    e = Echelon()
    for w in words:
        e.add(w)
    return e


def rank(m: GF2Matrix) -> int:
    return echelon(m.rows).rank


def in_span(v: BitVec, m: GF2Matrix) -> tuple[bool, tuple[int, ...]]:
    """Whether ``v`` is a GF(2) combination of the rows of ``m``.

    The witness lists the 1-based rows summing to ``v`` (empty when false or
    when ``v`` is zero).
    """
    if v.length != m.ncols:
        raise ValueError(f"length mismatch: {v.length} vs {m.ncols}")
    residual, combo = echelon(m.rows).reduce(v.word)
    if residual:
        return False, ()
    return True, word_support(combo)


def nullspace(m: GF2Matrix) -> list[BitVec]:
    """Basis of {x : M x = 0}, one vector per free column."""
    ncols = m.ncols
    rows = list(m.rows)
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if (rows[i] >> col) & 1), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and (rows[i] >> col) & 1:
                rows[i] ^= rows[r]
        pivots.append(col)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = 1 << f
        for i, pc in enumerate(pivots):
            if (rows[i] >> f) & 1:
                x |= 1 << pc
        basis.append(BitVec(ncols, x))
    return basis


def left_nullspace(m: GF2Matrix) -> list[BitVec]:
    """Row combinations summing to zero, as vectors indexed by row."""
    return nullspace(m.transpose())


def span_equal(a: GF2Matrix, b: GF2Matrix) -> bool:
    if a.ncols != b.ncols:
        return False
    ra, rb = rank(a), rank(b)
    return ra == rb == rank(GF2Matrix(a.ncols, a.rows + b.rows))


# --- symplectic structure ---------------------------------------------------


def commutation_matrix(num_majoranas: int) -> GF2Matrix:
    """Form matrix in the canonical basis: all ones off the diagonal."""
    full = (1 << num_majoranas) - 1
    return GF2Matrix(num_majoranas, tuple(full ^ (1 << i) for i in range(num_majoranas)))


def basis_change_matrices(modes: int) -> tuple[GF2Matrix, GF2Matrix]:
    """Change of basis between Majorana coordinates and the symplectic basis.

    Column ``mu`` of ``B`` expresses ``f_mu`` in the canonical basis, where
    ``f_{2I-1} = e_{2I-1} + e_{2I}`` and ``f_{2I} = e_1 + ... + e_{2I-1}``.
    ``A`` is the inverse of ``B``. Read in (z, x) pairs, ``A v`` gives the
    Pauli coordinates of the Majorana support ``v``.
    """
    if modes < 1:
        raise ValueError("modes must be >= 1")
    n = 2 * modes
    cols = []
    for i in range(1, modes + 1):
        cols.append(word_from_support((2 * i - 1, 2 * i)))
        cols.append((1 << (2 * i - 1)) - 1)
    B = GF2Matrix(n, tuple(cols)).transpose()
    A = inverse(B)
    return A, B


def inverse(m: GF2Matrix) -> GF2Matrix:
    n = m.ncols
    if len(m.rows) != n:
        raise ValueError("matrix is not square")
    aug = [r | (1 << (n + i)) for i, r in enumerate(m.rows)]
    for col in range(n):
        piv = next((i for i in range(col, n) if (aug[i] >> col) & 1), None)
        if piv is None:
            raise ValueError("matrix is singular over GF(2)")
        aug[col], aug[piv] = aug[piv], aug[col]
        for i in range(n):
            if i != col and (aug[i] >> col) & 1:
                aug[i] ^= aug[col]
    return GF2Matrix(n, tuple(r >> n for r in aug))
