"""Named constructions: the four-qubit [4,2,2] code, its single/double
occupancy embeddings as [16,2,4] fermionic codes, the Hastings 2^l family,
and the glued [16,3,4] code.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache, reduce
from typing import Sequence

from .embed import EmbeddedQubitState, embed_single, intertwiner
from .fock import FockVector, apply_majorana, apply_pauli, chirality
from .gf2 import GF2Matrix
from .majorana import (
    MajoranaOperator,
    PauliOperator,
    majorana_from_support,
    multiply,
    parse_operator,
    pauli_multiply,
)
from .scalar import Scalar, ScalarLike
from .stab import LogicalCheck, StabilizerCode, logical_action, verify_logical

CODE_NAMES = (
    "four-qubit-[4,2,2]",
    "single-occupancy-[4n,n,2]",
    "embedded-[16,2,4]-single",
    "embedded-[16,2,4]-double",
    "hastings-2^l",
    "glued-[16,3,4]",
)


def pauli_permutation(pauli: PauliOperator) -> dict[int, tuple[int, Scalar]]:
    """Signed permutation of a Pauli string on the computational basis.

    Basis index ``a`` is the bitstring ``b_1 ... b_k`` read as binary.
    """
    k = pauli.num_qubits
    action = {}
    for a in range(1 << k):
        bits = format(a, f"0{k}b")
        image = apply_pauli(pauli, FockVector.basis(bits))
        ((target_bits, amp),) = image.terms()
        action[a] = (int(target_bits, 2), amp)
    return action


# --- four-qubit code (qubit level) -----------------------------------------------


@dataclass
class FourQubitCode:
    stabilizers: tuple[PauliOperator, ...]
    basis: dict[str, FockVector]  # logical label "ab" -> 4-qubit register state
    logicals: dict[str, PauliOperator]  # "IX", "XI", "IZ", "ZI"

    def G(self, a: ScalarLike, b: ScalarLike, c: ScalarLike, d: ScalarLike) -> FockVector:
        """``a|00> + b|01> + c|10> + d|11>`` in encoded form."""
        out = FockVector(4)
        for coeff, label in zip((a, b, c, d), ("00", "01", "10", "11")):
            out = out + self.basis[label].scale(coeff)
        return out


def _register(*bitstrings: str) -> FockVector:
    return FockVector.from_terms([(b, 1) for b in bitstrings])


@lru_cache(maxsize=None)
def four_qubit_code() -> FourQubitCode:
    return FourQubitCode(
        stabilizers=(PauliOperator.from_string("XXXX"), PauliOperator.from_string("ZZZZ")),
        basis={
            "00": _register("0000", "1111"),
            "01": _register("0101", "1010"),
            "10": _register("1001", "0110"),
            "11": _register("0011", "1100"),
        },
        logicals={
            "IX": PauliOperator.from_string("XIXI"),
            "XI": PauliOperator.from_string("XIIX"),
            "IZ": PauliOperator.from_string("ZIIZ"),
            "ZI": PauliOperator.from_string("ZIZI"),
        },
    )


MERMIN_GRID = (
    (("XXII", "+XX"), ("XIXI", "+IX"), ("XIIX", "+XI")),
    (("YYII", "+YY"), ("YIYI", "-ZX"), ("YIIY", "-XZ")),
    (("ZZII", "+ZZ"), ("ZIZI", "+ZI"), ("ZIIZ", "+IZ")),
)


@dataclass
class MerminReport:
    checks: dict[str, bool] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks[name] = passed
        if not passed:
            self.failures.append(f"{name}: {detail}" if detail else name)

    def to_dict(self) -> dict:
        return {"ok": self.ok, "checks": self.checks, "failures": self.failures}


def _acts_on(code: FourQubitCode, op: PauliOperator, logical: PauliOperator) -> bool:
    labels = ("00", "01", "10", "11")
    expected = pauli_permutation(logical)
    for a, label in enumerate(labels):
        target, sign = expected[a]
        if apply_pauli(op, code.basis[label]) != code.basis[labels[target]].scale(sign):
            return False
    return True


def mermin_square_check() -> MerminReport:
    """Verify the nine-cell magic square realised by weight-2 four-qubit operators."""
    code = four_qubit_code()
    rep = MerminReport()
    grid = [[PauliOperator.from_string(p) for p, _ in row] for row in MERMIN_GRID]
    identity = PauliOperator.from_string("IIII")
    for r, row in enumerate(MERMIN_GRID):
        for c, (p, logical) in enumerate(row):
            op = grid[r][c]
            rep.record(f"cell[{r + 1},{c + 1}] {p} weight 2", op.weight == 2, f"weight {op.weight}")
            lop = parse_operator(logical)
            rep.record(
                f"cell[{r + 1},{c + 1}] {p} acts as {logical}",
                _acts_on(code, op, lop),
            )
    lines = [("row", i, grid[i]) for i in range(3)] + [
        ("column", j, [grid[i][j] for i in range(3)]) for j in range(3)
    ]
    for kind, idx, ops in lines:
        commuting = all(a.commutes(b) for a in ops for b in ops)
        rep.record(f"{kind} {idx + 1} mutually commuting", commuting)
        product = reduce(pauli_multiply, ops)
        if kind == "row":
            fixes = all(apply_pauli(product, v) == v for v in code.basis.values())
            rep.record(f"row {idx + 1} product {product} acts as +1 on V_S", fixes)
        else:
            rep.record(
                f"column {idx + 1} product equals -IIII",
                product == -identity,
                f"got {product}",
            )
    return rep


# --- Majorana-level codes ------------------------------------------------------


def g(j: int, n: int = 4) -> MajoranaOperator:
    """``c_{4j-3} c_{4j-2} c_{4j-1} c_{4j}``."""
    return majorana_from_support(2 * n, range(4 * j - 3, 4 * j + 1))


G5_SUPPORT = (1, 4, 5, 8, 9, 12, 13, 16)
G6_SUPPORT = (3, 4, 7, 8, 11, 12, 15, 16)

# two-qubit logicals of the embedded four-qubit code, shared by both occupancies
FOUR_QUBIT_LOGICALS = {
    "IX": "-c2 c3 c10 c11",
    "XI": "-c2 c3 c14 c15",
    "IZ": "-c3 c4 c15 c16",
    "ZI": "-c3 c4 c11 c12",
}


@dataclass
class LogicalEntry:
    label: str
    operator: MajoranaOperator
    action: dict[int, tuple[int, Scalar]]  # expected signed permutation on basis indices
    sign: Scalar = field(default_factory=lambda: Scalar(1))  # found op = sign * label


@dataclass
class NamedCode:
    name: str
    code: StabilizerCode
    logicals: dict[str, LogicalEntry] = field(default_factory=dict)
    basis_labels: tuple[str, ...] = ()
    notes: list[str] = field(default_factory=list)

    def verify_logicals(self) -> dict[str, LogicalCheck]:
        return {
            label: verify_logical(self.code, e.operator, e.action) for label, e in self.logicals.items()
        }


def single_occupancy_code(n: int) -> NamedCode:
    code = StabilizerCode([g(j, n) for j in range(1, n + 1)], 2 * n)
    return NamedCode("single-occupancy-[4n,n,2]", code)


def s2_generators() -> list[MajoranaOperator]:
    return [g(j) for j in range(1, 5)] + [
        majorana_from_support(8, G5_SUPPORT),
        majorana_from_support(8, G6_SUPPORT),
    ]


@lru_cache(maxsize=None)
def e_bar() -> tuple[FockVector, ...]:
    """Single-occupancy embeddings of the four-qubit code basis, in order 00, 01, 10, 11."""
    fq = four_qubit_code()
    out = []
    for label in ("00", "01", "10", "11"):
        reg = fq.basis[label]
        amps = [Scalar(0)] * 16
        for bits, a in reg.terms():
            amps[int(bits, 2)] = a
        out.append(embed_single(EmbeddedQubitState(4, tuple(amps))))
    return tuple(out)


@lru_cache(maxsize=None)
def e_tilde() -> tuple[FockVector, ...]:
    omega = intertwiner(4)
    return tuple(apply_majorana(omega, v) for v in e_bar())


def conjugate(op: MajoranaOperator, by: MajoranaOperator) -> MajoranaOperator:
    """``by * op * by^dagger``."""
    return multiply(multiply(by, op), by.dagger())


def _logical_entries(spec: dict[str, MajoranaOperator], num_logical: int) -> dict[str, LogicalEntry]:
    entries = {}
    for label, op in spec.items():
        padded = label.rjust(num_logical, "I")
        action = pauli_permutation(PauliOperator.from_string(padded))
        entries[padded] = LogicalEntry(padded, op, action)
    return entries


def embedded_16_2_4(occupancy: str = "single") -> NamedCode:
    if occupancy in ("s", "single"):
        gens, basis, name = s2_generators(), e_bar(), "embedded-[16,2,4]-single"
    elif occupancy in ("d", "double"):
        omega = intertwiner(4)
        gens = [conjugate(x, omega) for x in s2_generators()]
        basis, name = e_tilde(), "embedded-[16,2,4]-double"
    else:
        raise ValueError(f"occupancy must be 'single' or 'double', got {occupancy!r}")
    code = StabilizerCode(gens, 8, basis=basis)
    ops = {label: parse_operator(text, 8) for label, text in FOUR_QUBIT_LOGICALS.items()}
    return NamedCode(name, code, _logical_entries(ops, 2), ("00", "01", "10", "11"))


# --- Hastings family and glueing ------------------------------------------------


def hastings_generator_matrix(l: int) -> GF2Matrix:
    """l x 2^l matrix whose column mu is the binary form of mu - 1 (row 1 least significant)."""
    if l < 1:
        raise ValueError("l must be positive")
    n = 1 << l
    return GF2Matrix(n, tuple(sum(1 << (mu - 1) for mu in range(1, n + 1) if (mu - 1) >> j & 1) for j in range(l)))


def hastings_generators(l: int) -> list[MajoranaOperator]:
    if l < 3:
        raise ValueError(f"Hastings codes need l >= 3, got {l}")
    modes = 1 << (l - 1)
    rows = hastings_generator_matrix(l).rows
    return [MajoranaOperator(modes, w) for w in rows] + [chirality(modes)]


GLUED_LABELS = ("000", "001", "010", "011", "100", "101", "110", "111")


@lru_cache(maxsize=None)
def glued_basis() -> tuple[FockVector, ...]:
    """``E_0..E_3`` followed by ``Omega E_0 .. Omega E_3`` (labels 000..111)."""
    return e_bar() + e_tilde()


def glue(single_block: Sequence[ScalarLike], double_block: Sequence[ScalarLike]) -> FockVector:
    """``sum_a Psi_a E_a + Psi_{a+4} Omega E_a``."""
    if len(single_block) != 4 or len(double_block) != 4:
        raise ValueError("glue takes four single-occupancy and four double-occupancy amplitudes")
    out = FockVector(8)
    for coeff, v in zip(list(single_block) + list(double_block), glued_basis()):
        out = out + v.scale(coeff)
    return out


GLUED_LOGICALS = {
    "XII": "c1 c5 c9 c13",
    "ZII": "c1 c2 c3 c4",
    "IIX": "-c2 c3 c10 c11",
    "IXI": "-c2 c3 c14 c15",
    "IIZ": "-c3 c4 c15 c16",
    "IZI": "-c3 c4 c11 c12",
}


def hastings_code(l: int = 4) -> NamedCode:
    gens = hastings_generators(l)
    modes = 1 << (l - 1)
    if l != 4:
        return NamedCode(
            "hastings-2^l",
            StabilizerCode(gens, modes),
            notes=[f"parameters for l={l} are computed here, not taken from the literature"],
        )
    code = StabilizerCode(gens, modes, basis=glued_basis())
    named = NamedCode("hastings-2^l", code, basis_labels=GLUED_LABELS)
    ops = {label: parse_operator(text, 8) for label, text in GLUED_LOGICALS.items()}
    named.logicals = _logical_entries(ops, 3)
    # g_1's sign as logical Z on the first qubit depends on conventions; record what is found
    entry = named.logicals["ZII"]
    found = logical_action(code, entry.operator)
    if found is not None and found[0][1] != entry.action[0][1]:
        entry.sign = found[0][1] / entry.action[0][1]
        entry.action = found
    named.notes.append(f"g_1 = c1 c2 c3 c4 acts as {entry.sign} * ZII on the glued basis")
    return named


def glued_code() -> NamedCode:
    named = hastings_code(4)
    named.name = "glued-[16,3,4]"
    return named
