"""Majorana stabilizer codes: validation, code space, distance, syndromes and
logical-operator checks."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .fock import FockVector, SpanBasis, apply_majorana, inner, majorana_on_basis
from .gf2 import GF2Matrix, echelon, nullspace, symplectic_form_words, word_support
from .majorana import MajoranaOperator, PauliOperator, multiply, parse_operator, pauli_to_majorana
from .scalar import Scalar


class CodeValidationError(ValueError):
    def __init__(self, violations: list[Violation]) -> None:
        self.violations = violations
        super().__init__("; ".join(v.message for v in violations))


@dataclass(frozen=True)
class Violation:
    kind: str  # "not_commuting" | "odd_weight" | "not_involution" | "dependent" | "contains_minus_one" | "mode_mismatch"
    generators: tuple[int, ...]  # 1-based generator indices involved
    message: str

    def to_dict(self) -> dict:
        return {"kind": self.kind, "generators": list(self.generators), "message": self.message}


def check_generators(gens: Sequence[MajoranaOperator]) -> list[Violation]:
    """All violations of the stabilizer-group conditions, in a fixed order."""
    out: list[Violation] = []
    if not gens:
        return out
    modes = gens[0].modes
    for i, g in enumerate(gens, 1):
        if g.modes != modes:
            out.append(Violation("mode_mismatch", (i,), f"generator {i} has {g.modes} modes, expected {modes}"))
    if out:
        return out
    for i, g in enumerate(gens, 1):
        if not g.is_even():
            out.append(Violation("odd_weight", (i,), f"generator {i} ({g}) has odd weight {g.weight}"))
        if not g.is_hermitian():
            out.append(Violation("not_involution", (i,), f"generator {i} ({g}) squares to -1"))
    for (i, a), (j, b) in itertools.combinations(enumerate(gens, 1), 2):
        if symplectic_form_words(a.support_word, b.support_word):
            out.append(Violation("not_commuting", (i, j), f"generators {i} and {j} anticommute"))
    ech = echelon(g.support_word for g in gens)
    for combo in ech.dependencies:
        members = word_support(combo)
        product = MajoranaOperator.identity(modes)
        for idx in members:
            product = multiply(product, gens[idx - 1])
        names = ",".join(str(m) for m in members)
        if product.phase == 0:
            out.append(Violation("dependent", members, f"generators {{{names}}} multiply to the identity"))
        else:
            out.append(
                Violation(
                    "contains_minus_one",
                    members,
                    f"generators {{{names}}} multiply to {product} (group contains a nontrivial scalar)",
                )
            )
    return out


def _project_basis_state(gens: Sequence[MajoranaOperator], key: int) -> dict[int, Scalar]:
    """prod_i (1 + g_i) |key>, unnormalised."""
    amps = {key: Scalar(1)}
    for g in gens:
        new = dict(amps)
        for k, a in amps.items():
            k2, ph = majorana_on_basis(g.support_word, g.phase, k)
            val = new.get(k2, Scalar(0)) + a.times_i_power(ph)
            if val:
                new[k2] = val
            else:
                new.pop(k2, None)
        amps = new
    return amps


class StabilizerCode:
    """A validated Majorana stabilizer code on ``modes`` fermionic modes.

    ``basis`` may be supplied to fix a preferred code-space basis; it is then
    checked against the generators. Otherwise the projector-extracted basis is
    used.
    """

    def __init__(
        self,
        generators: Iterable[MajoranaOperator],
        modes: int | None = None,
        basis: Sequence[FockVector] | None = None,
    ) -> None:
        gens = tuple(generators)
        if modes is None:
            if not gens:
                raise ValueError("modes required for a code without generators")
            modes = gens[0].modes
        if any(g.modes != modes for g in gens):
            raise CodeValidationError([Violation("mode_mismatch", (), "generators disagree on mode count")])
        violations = check_generators(gens)
        if violations:
            raise CodeValidationError(violations)
        self.generators = gens
        self.modes = modes
        self._basis = None
        if basis is not None:
            self._basis = tuple(basis)
            self._check_basis(self._basis)

    @property
    def num_majoranas(self) -> int:
        return 2 * self.modes

    @property
    def num_generators(self) -> int:
        return len(self.generators)

    @property
    def k(self) -> int:
        return self.modes - len(self.generators)

    @cached_property
    def support_matrix(self) -> GF2Matrix:
        return GF2Matrix(2 * self.modes, tuple(g.support_word for g in self.generators))

    @cached_property
    def _stabilizer_echelon(self):
        return echelon(self.support_matrix.rows)

    def in_stabilizer_span(self, support_word: int) -> bool:
        residual, _ = self._stabilizer_echelon.reduce(support_word)
        return residual == 0

    def is_logical_support(self, support_word: int) -> bool:
        return all(
            not symplectic_form_words(support_word, g.support_word) for g in self.generators
        ) and not self.in_stabilizer_span(support_word)

    @cached_property
    def projected_basis(self) -> tuple[FockVector, ...]:
        return tuple(codespace(self))

    @property
    def basis(self) -> tuple[FockVector, ...]:
        return self._basis if self._basis is not None else self.projected_basis

    def _check_basis(self, basis: Sequence[FockVector]) -> None:
        if len(basis) != 1 << self.k:
            raise ValueError(f"basis has {len(basis)} vectors, code space has dimension {1 << self.k}")
        span = SpanBasis(self.modes)
        for i, v in enumerate(basis):
            if v.modes != self.modes:
                raise ValueError("basis vector has wrong mode count")
            for j, g in enumerate(self.generators, 1):
                if apply_majorana(g, v) != v:
                    raise ValueError(f"basis vector {i} is not fixed by generator {j}")
            if not span.add(v):
                raise ValueError(f"basis vector {i} is linearly dependent on earlier ones")


def validate(gens: Sequence[MajoranaOperator], modes: int | None = None) -> StabilizerCode:
    """Build a code from generators or raise :class:`CodeValidationError`."""
    return StabilizerCode(gens, modes)


def codespace(code: StabilizerCode) -> list[FockVector]:
    """Exact code-space basis extracted by projecting basis states in lex order.

    Each vector is scaled so its amplitude on its pivot occupation string
    (the basis state it was projected from) is 1.
    """
    M = code.modes
    keys = sorted(range(1 << M), key=lambda k: format(k, f"0{M}b")[::-1])
    covered: set[int] = set()
    basis: list[FockVector] = []
    span = SpanBasis(M)
    target = 1 << code.k
    for key in keys:
        if len(basis) == target:
            break
        if key in covered:
            continue
        amps = _project_basis_state(code.generators, key)
        if not amps:
            continue
        # <key|P|key> = |P|key>|^2, so a nonzero projection has weight on key
        v = FockVector(M, amps).scale(Scalar(1) / amps[key])
        if span.add(v):
            basis.append(v)
            covered.update(amps)
    if len(basis) != target:
        raise AssertionError(f"code space dimension {len(basis)} != 2^k = {target}")
    return basis


# --- distance ---------------------------------------------------------------


@dataclass(frozen=True)
class DistanceResult:
    distance: int | None  # exact distance, or None if not found within the budget
    max_weight: int
    witness: tuple[int, ...] | None = None  # support of a minimum-weight logical
    candidates_checked: int = 0
    no_logicals: bool = False  # k = 0: every centralizer element is a stabilizer

    @property
    def exact(self) -> bool:
        return self.distance is not None

    def label(self) -> int | str | None:
        if self.distance is not None:
            return self.distance
        if self.no_logicals:
            return None
        return f">{self.max_weight}"


def _scan_weight(args) -> tuple[int | None, int]:
    gen_words, stab_rows, nmaj, weight, first_range = args
    ech = echelon(stab_rows)
    checked = 0
    for first in first_range:
        for rest in itertools.combinations(range(first + 1, nmaj), weight - 1):
            word = 1 << first
            for r in rest:
                word |= 1 << r
            checked += 1
            if any(symplectic_form_words(word, g) for g in gen_words):
                continue
            if ech.reduce(word)[0]:
                return word, checked
    return None, checked


def distance(code: StabilizerCode, max_weight: int, jobs: int = 1) -> DistanceResult:
    """Minimum weight of a logical operator, by exhaustive search up to ``max_weight``.

    Supports are scanned by increasing weight and, within a weight, in
    lexicographic order, so the witness is deterministic. ``jobs > 1``
    partitions each weight by its smallest index.
    """
    if code.k == 0:
        # the centralizer has dimension M and contains the stabilizer span of rank M
        return DistanceResult(None, max_weight, no_logicals=True)
    nmaj = 2 * code.modes
    gen_words = tuple(g.support_word for g in code.generators)
    rows = code.support_matrix.rows
    checked = 0
    limit = min(max_weight, nmaj)
    for w in range(1, limit + 1):
        firsts = list(range(0, nmaj - w + 1))
        if jobs > 1:
            chunks = [firsts[i::jobs] for i in range(jobs)]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_scan_weight, [(gen_words, rows, nmaj, w, c) for c in chunks]))
            found = [r for r, _ in results if r is not None]
            checked += sum(n for _, n in results)
            if found:
                witness = min((word_support(wd) for wd in found))
                return DistanceResult(w, max_weight, witness, checked)
        else:
            witness, n = _scan_weight((gen_words, rows, nmaj, w, firsts))
            checked += n
            if witness is not None:
                return DistanceResult(w, max_weight, word_support(witness), checked)
    return DistanceResult(None, max_weight, None, checked)


# --- syndromes and logicals ---------------------------------------------------


def syndrome(code: StabilizerCode, error: MajoranaOperator) -> tuple[int, ...]:
    if error.modes != code.modes:
        raise ValueError("mode-count mismatch")
    return tuple(symplectic_form_words(error.support_word, g.support_word) for g in code.generators)


def syndrome_value(bits: Sequence[int]) -> int:
    """Bit j (1-based) of the syndrome taken as the 2^(j-1) place."""
    return sum(b << j for j, b in enumerate(bits))


def single_majorana_syndromes(code: StabilizerCode) -> list[tuple[int, tuple[int, ...]]]:
    return [
        (mu, syndrome(code, MajoranaOperator(code.modes, 1 << (mu - 1))))
        for mu in range(1, 2 * code.modes + 1)
    ]


@dataclass(frozen=True)
class Deviation:
    basis_index: int
    message: str


@dataclass
class LogicalCheck:
    ok: bool
    commutes_with_stabilizer: bool
    outside_stabilizer: bool
    deviations: list[Deviation]

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "commutes_with_stabilizer": self.commutes_with_stabilizer,
            "outside_stabilizer": self.outside_stabilizer,
            "deviations": [f"B_{d.basis_index}: {d.message}" for d in self.deviations],
        }


Action = Mapping[int, tuple[int, Scalar | int]]


def verify_logical(
    code: StabilizerCode,
    op: MajoranaOperator,
    expected_action: Action,
    basis: Sequence[FockVector] | None = None,
) -> LogicalCheck:
    """Check ``op |B_a> = s_a |B_{pi(a)}>`` for every basis index ``a``.

    ``expected_action`` maps ``a`` to ``(pi(a), s_a)``.
    """
    basis = list(code.basis if basis is None else basis)
    centralizes = all(
        not symplectic_form_words(op.support_word, g.support_word) for g in code.generators
    )
    outside = not code.in_stabilizer_span(op.support_word)
    deviations = []
    for a, v in enumerate(basis):
        if a not in expected_action:
            deviations.append(Deviation(a, "no expected action given"))
            continue
        target, sign = expected_action[a]
        image = apply_majorana(op, v)
        expected = basis[target].scale(sign)
        if image == expected:
            continue
        ratio = _proportionality(image, basis[target])
        if ratio is not None:
            deviations.append(Deviation(a, f"maps to {ratio} * B_{target}, expected {Scalar.coerce(sign)} * B_{target}"))
        else:
            deviations.append(Deviation(a, f"image is not a multiple of B_{target}"))
    ok = centralizes and outside and not deviations
    return LogicalCheck(ok, centralizes, outside, deviations)


def _proportionality(u: FockVector, v: FockVector) -> Scalar | None:
    """Scalar c with u = c v, or None."""
    if v.is_zero():
        return None
    key, a = next(v.items())
    c = u[key] / a
    return c if u == v.scale(c) else None


def logical_action(code: StabilizerCode, op: MajoranaOperator, basis: Sequence[FockVector] | None = None) -> dict[int, tuple[int, Scalar]] | None:
    """Signed permutation realised by ``op`` on the basis, or None if it is not one."""
    basis = list(code.basis if basis is None else basis)
    out = {}
    for a, v in enumerate(basis):
        image = apply_majorana(op, v)
        for b, w in enumerate(basis):
            c = _proportionality(image, w)
            if c is not None:
                out[a] = (b, c)
                break
        else:
            return None
    return out


# --- centralizer --------------------------------------------------------------


def centralizer_generators(code: StabilizerCode, even_only: bool = False) -> list[MajoranaOperator]:
    """GF(2) basis of supports commuting with every generator, as phase-+1 operators.

    For even-weight generators the commutation form with a support ``v``
    reduces to ``|v & g| mod 2``, so the centralizer is a null space. The
    result has ``M + k`` elements; ``even_only`` additionally imposes even
    weight.
    """
    rows = list(code.support_matrix.rows)
    nmaj = 2 * code.modes
    if even_only:
        rows.append((1 << nmaj) - 1)
    basis = nullspace(GF2Matrix(nmaj, tuple(rows)))
    return [MajoranaOperator(code.modes, v.word) for v in basis]


# --- detection property -------------------------------------------------------


@dataclass(frozen=True)
class DetectionResult:
    operators_checked: int
    failures: tuple[tuple[int, ...], ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def error_detection_check(
    code: StabilizerCode, max_weight: int, basis: Sequence[FockVector] | None = None
) -> DetectionResult:
    """For every support of weight 1..max_weight, check <B_a|E|B_b> = lambda <B_a|B_b>."""
    basis = list(code.basis if basis is None else basis)
    gram = [[inner(u, v) for v in basis] for u in basis]
    failures = []
    checked = 0
    for w in range(1, max_weight + 1):
        for support in itertools.combinations(range(2 * code.modes), w):
            word = sum(1 << s for s in support)
            op = MajoranaOperator(code.modes, word)
            checked += 1
            images = [apply_majorana(op, v) for v in basis]
            block = [[inner(u, img) for img in images] for u in basis]
            if not _is_multiple(block, gram):
                failures.append(tuple(s + 1 for s in support))
    return DetectionResult(checked, tuple(failures))


def _is_multiple(block, gram) -> bool:
    lam = None
    for brow, grow in zip(block, gram):
        for b, g in zip(brow, grow):
            if g:
                c = b / g
                if lam is None:
                    lam = c
                elif c != lam:
                    return False
            elif b:
                return False
    return True


def parameters(code: StabilizerCode, max_weight: int | None = None) -> dict:
    result = distance(code, 2 * code.modes if max_weight is None else max_weight)
    return {
        "majorana_modes": code.num_majoranas,
        "k": code.k,
        "distance": result.label(),
    }



# --- code-spec files ------------------------------------------------------------


def format_code_spec(generators: Sequence[MajoranaOperator], modes: int) -> str:
    """``modes: M`` followed by one Majorana generator per line."""
    lines = [f"modes: {modes}"]
    lines += [str(g) for g in generators]
    return "\n".join(lines) + "\n"


def parse_code_spec(text: str) -> tuple[int, list[MajoranaOperator]]:
    """Read a code-spec file; generators may be Majorana or Pauli strings.

    Blank lines and ``#`` comments are skipped. Errors name the line.
    """
    modes = None
    gens: list[MajoranaOperator] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if modes is None:
            key, sep, value = line.partition(":")
            if not sep or key.strip() != "modes":
                raise ValueError(f"line {lineno}: expected header 'modes: M'")
            try:
                modes = int(value)
            except ValueError:
                raise ValueError(f"line {lineno}: bad mode count {value.strip()!r}") from None
            if modes < 1:
                raise ValueError(f"line {lineno}: mode count must be positive")
            continue
        try:
            op = parse_operator(line, modes)
        except (ValueError, IndexError) as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        if isinstance(op, PauliOperator):
            op = pauli_to_majorana(op)
        gens.append(op)
    if modes is None:
        raise ValueError("missing header 'modes: M'")
    return modes, gens


def code_report(generators: Sequence[MajoranaOperator], modes: int, max_weight: int, jobs: int = 1) -> dict:
    """Verification summary; violations are listed rather than raised."""
    violations = [Violation("mode_mismatch", (i,), f"generator {i} has {g.modes} modes, expected {modes}")
                  for i, g in enumerate(generators, 1) if g.modes != modes]
    if not violations:
        violations = check_generators(generators)
    report = {
        "majorana_modes": 2 * modes,
        "num_generators": len(generators),
        "valid": not violations,
        "k": None,
        "distance": None,
        "syndrome_table": [],
        "violations": [v.to_dict() for v in violations],
    }
    if violations:
        return report
    code = StabilizerCode(generators, modes)
    result = distance(code, max_weight, jobs)
    report["k"] = code.k
    report["distance"] = result.label()
    report["distance_exact"] = result.exact
    if result.witness is not None:
        report["distance_witness"] = list(result.witness)
    report["syndrome_table"] = [
        {"majorana": mu, "syndrome": "".join(map(str, bits))} for mu, bits in single_majorana_syndromes(code)
    ]
    return report
