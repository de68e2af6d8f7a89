"""E8 root system over the eight glued-code amplitudes and its Weyl-invariant
power sums.

The roots are the 112 vectors ``+-e_p +- e_q`` and the 128 vectors
``(+-1/2, ..., +-1/2)`` with an even number of minus signs. For an amplitude
vector ``psi`` the invariants are ``Pi_d(psi) = sum_roots (root . psi)^d`` for
``d`` in :data:`DEGREES`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .fock import FockVector, apply_majorana, chirality_sector, inner
from .majorana import majorana_from_support
from .scalar import Scalar, ScalarLike

DEGREES = (2, 8, 12, 14, 18, 20, 24, 30)

Root = tuple[Fraction, ...]
Amplitudes = Sequence[ScalarLike]

HALF = Fraction(1, 2)


@lru_cache(maxsize=None)
def roots() -> tuple[Root, ...]:
    """The 240 roots: integer type first (lexicographic by p, q, signs), then half-integer type."""
    out: list[Root] = []
    for p, q in itertools.combinations(range(8), 2):
        for sp, sq in itertools.product((1, -1), repeat=2):
            v = [Fraction(0)] * 8
            v[p], v[q] = Fraction(sp), Fraction(sq)
            out.append(tuple(v))
    for signs in itertools.product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            out.append(tuple(s * HALF for s in signs))
    return tuple(out)


@lru_cache(maxsize=None)
def _root_set() -> frozenset[Root]:
    return frozenset(roots())


@lru_cache(maxsize=None)
def positive_roots() -> tuple[Root, ...]:
    """One root from each {alpha, -alpha} pair: the one whose first nonzero entry is positive."""
    return tuple(r for r in roots() if next(x for x in r if x) > 0)


@dataclass(frozen=True)
class E8RootSystem:
    roots: tuple[Root, ...]

    @classmethod
    def build(cls) -> E8RootSystem:
        return cls(roots())

    def __len__(self) -> int:
        return len(self.roots)

    def __contains__(self, v: object) -> bool:
        return tuple(Fraction(x) for x in v) in _root_set()  # type: ignore[union-attr]

    def evaluate(self, psi: Amplitudes) -> tuple[Scalar, ...]:
        return evaluate_invariants(psi)

    def reflect(self, alpha: Root, psi: Amplitudes) -> tuple[Scalar, ...]:
        return reflect(alpha, psi)


def _as_scalars(psi: Amplitudes) -> tuple[Scalar, ...]:
    if len(psi) != 8:
        raise ValueError(f"expected 8 amplitudes, got {len(psi)}")
    return tuple(Scalar.coerce(x) for x in psi)


def root_values(psi: Amplitudes) -> list[Scalar]:
    """``e_s(psi) = root . psi`` for all 240 roots, in :func:`roots` order."""
    vals = _as_scalars(psi)
    out = []
    for r in roots():
        acc = Scalar(0)
        for c, x in zip(r, vals):
            if c:
                acc = acc + x * c
        out.append(acc)
    return out


def _power_sums_int(values: Sequence[int]) -> dict[int, int]:
    sums = dict.fromkeys(DEGREES, 0)
    for d in values:
        d2 = d * d
        d4 = d2 * d2
        d8 = d4 * d4
        d12 = d8 * d4
        d14 = d12 * d2
        d18 = d14 * d4
        d20 = d18 * d2
        d24 = d20 * d4
        d30 = d24 * d4 * d2
        sums[2] += d2
        sums[8] += d8
        sums[12] += d12
        sums[14] += d14
        sums[18] += d18
        sums[20] += d20
        sums[24] += d24
        sums[30] += d30
    return sums


def _invariants_rational(xs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    # scale to integers: psi = x / L; half-type roots give (signed sum of x) / (2L)
    L = math.lcm(*(x.denominator for x in xs))
    x = [int(v * L) for v in xs]
    integer_vals = []
    for p, q in itertools.combinations(range(8), 2):
        integer_vals.append(x[p] + x[q])
        integer_vals.append(x[p] - x[q])
    # first coordinate fixed to +: one representative per +-pair
    half_vals = [
        sum(s * v for s, v in zip((1,) + signs, x))
        for signs in itertools.product((1, -1), repeat=7)
        if signs.count(-1) % 2 == 0
    ]
    a = _power_sums_int(integer_vals)
    b = _power_sums_int(half_vals)
    # each value stands for a +-pair, hence the factor 2
    return tuple(
        Fraction(2 * a[d], L**d) + Fraction(2 * b[d], (2 * L) ** d) for d in DEGREES
    )


def evaluate_invariants(psi: Amplitudes) -> tuple[Scalar, ...]:
    """``(Pi_2, Pi_8, Pi_12, Pi_14, Pi_18, Pi_20, Pi_24, Pi_30)`` at ``psi``, exactly."""
    vals = _as_scalars(psi)
    if all(not v.im for v in vals):
        return tuple(Scalar(v) for v in _invariants_rational([v.re for v in vals]))
    sums = [Scalar(0)] * len(DEGREES)
    for e in root_values(vals):
        for i, d in enumerate(DEGREES):
            sums[i] = sums[i] + e**d
    return tuple(sums)


def reflect(alpha: Sequence[ScalarLike], psi: Amplitudes) -> tuple[Scalar, ...]:
    """``psi - (alpha . psi) alpha`` for a root ``alpha`` (norm^2 = 2)."""
    a = tuple(Fraction(x) for x in alpha)
    if a not in _root_set():
        raise ValueError(f"{alpha!r} is not an E8 root")
    vals = _as_scalars(psi)
    proj = Scalar(0)
    for c, x in zip(a, vals):
        proj = proj + x * c
    return tuple(x - proj * c for c, x in zip(a, vals))


# --- algebraic independence witness --------------------------------------------


def jacobian(psi: Amplitudes) -> list[list[Scalar]]:
    """``J[p][i] = d Pi_{DEGREES[p]} / d psi_i = sum_s d * e_s^(d-1) * root_s[i]``."""
    vals = _as_scalars(psi)
    es = root_values(vals)
    rows = []
    for d in DEGREES:
        row = [Scalar(0)] * 8
        for r, e in zip(roots(), es):
            if not e:
                continue
            w = e ** (d - 1) * d
            for i, c in enumerate(r):
                if c:
                    row[i] = row[i] + w * c
        rows.append(row)
    return rows


def exact_rank(matrix: Sequence[Sequence[ScalarLike]]) -> int:
    rows = [[Scalar.coerce(x) for x in row] for row in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][col]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col] / p
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def jacobian_rank_check(psi: Amplitudes) -> int:
    return exact_rank(jacobian(psi))


# A fixed rational point off every reflecting hyperplane; rank 8 there.
GENERIC_POINT = tuple(
    Fraction(n, d) for n, d in [(1, 2), (1, 3), (2, 5), (3, 7), (5, 11), (7, 13), (11, 17), (13, 19)]
)


# --- Cartan commutativity proxy --------------------------------------------------


@dataclass
class CartanReport:
    pairs_checked: int
    nonzero: list[tuple[int, int, int, int, Scalar]]  # (alpha, beta, mu, nu, value), 0-based basis indices

    @property
    def ok(self) -> bool:
        return not self.nonzero

    def to_dict(self, limit: int = 20) -> dict:
        return {
            "ok": self.ok,
            "elements_checked": self.pairs_checked,
            "nonzero_count": len(self.nonzero),
            "nonzero": [
                {"alpha": a, "beta": b, "mu": mu, "nu": nu, "value": str(v)}
                for a, b, mu, nu, v in self.nonzero[:limit]
            ],
        }


def cartan_commutativity_check(basis: Sequence[FockVector]) -> CartanReport:
    """Compute ``<B_a| c_mu c_nu |B_b>`` for all mu < nu and a != b; report nonzero ones."""
    if not basis:
        raise ValueError("empty basis")
    modes = basis[0].modes
    for v in basis:
        if v.modes != modes:
            raise ValueError("basis vectors disagree on mode count")
        if chirality_sector(v) != "+":
            raise ValueError("basis vectors must have positive chirality")
    nonzero = []
    checked = 0
    for mu, nu in itertools.combinations(range(1, 2 * modes + 1), 2):
        op = majorana_from_support(modes, (mu, nu))
        images = [apply_majorana(op, v) for v in basis]
        for a, u in enumerate(basis):
            for b, img in enumerate(images):
                if a == b:
                    continue
                checked += 1
                val = inner(u, img)
                if val:
                    nonzero.append((a, b, mu, nu, val))
    return CartanReport(checked, nonzero)
