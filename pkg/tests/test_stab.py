import itertools
from functools import reduce

import numpy as np
import pytest

from majorana_codes.codes import g, hastings_generators, s2_generators
from majorana_codes.fock import FockVector
from majorana_codes.majorana import MajoranaOperator, majorana_from_support, parse_operator
from majorana_codes.stab import (
    CodeValidationError,
    StabilizerCode,
    centralizer_generators,
    check_generators,
    code_report,
    codespace,
    distance,
    error_detection_check,
    format_code_spec,
    logical_action,
    parameters,
    parse_code_spec,
    single_majorana_syndromes,
    syndrome,
    syndrome_value,
    verify_logical,
)
from oracles import majorana_matrix


def group_elements(gens):
    """Every product of a subset of the generators, computed by explicit multiplication."""
    modes = gens[0].modes
    out = []
    for mask in range(1 << len(gens)):
        chosen = [x for i, x in enumerate(gens) if mask >> i & 1]
        out.append(reduce(lambda a, b: a * b, chosen, MajoranaOperator.identity(modes)))
    return out


def brute_distance(gens, max_weight):
    modes = gens[0].modes
    stab_supports = {e.support_word for e in group_elements(gens)}
    for w in range(1, max_weight + 1):
        for support in itertools.combinations(range(1, 2 * modes + 1), w):
            op = majorana_from_support(modes, support)
            if all(op * s == s * op for s in gens) and op.support_word not in stab_supports:
                return w
    return None


def dense_projector(gens):
    modes = gens[0].modes
    eye = np.eye(1 << modes, dtype=complex)
    return reduce(lambda p, x: p @ (eye + majorana_matrix(modes, x.support, x.phase)) / 2, gens, eye)


SMALL_CODES = {
    "single-occupancy n=2": [g(1, 2), g(2, 2)],
    "one quartet, M=3": [g(1, 3)],
    "S_2": s2_generators(),
    "hastings l=4": hastings_generators(4),
}


@pytest.mark.parametrize("name", list(SMALL_CODES))
def test_distance_matches_brute_force(name):
    gens = SMALL_CODES[name]
    code = StabilizerCode(gens)
    result = distance(code, 4)
    assert result.distance == brute_distance(gens, 4)
    assert code.is_logical_support(word := sum(1 << (m - 1) for m in result.witness))
    assert len(result.witness) == result.distance and word


@pytest.mark.parametrize("name", list(SMALL_CODES))
def test_codespace_matches_dense_projector(name):
    gens = SMALL_CODES[name]
    code = StabilizerCode(gens)
    p = dense_projector(gens)
    assert round(np.trace(p).real) == 1 << code.k
    basis = codespace(code)
    assert len(basis) == 1 << code.k
    for v in basis:
        dense = np.zeros(1 << code.modes, dtype=complex)
        for bits, a in v.terms():
            dense[int(bits, 2)] = a.to_complex()
        assert np.allclose(p @ dense, dense)


def test_distance_parallel_agrees():
    code = StabilizerCode(hastings_generators(4))
    par, seq = distance(code, 4, jobs=2), distance(code, 4)
    assert (par.distance, par.witness) == (seq.distance, seq.witness)


def test_distance_budget_reports_bound():
    code = StabilizerCode(s2_generators())
    result = distance(code, 3)
    assert not result.exact
    assert result.label() == ">3"


def test_k_zero_has_no_distance():
    code = StabilizerCode(hastings_generators(3))
    assert code.k == 0
    result = distance(code, 8)
    assert result.no_logicals and result.label() is None


def test_validation_catches_each_violation():
    kinds = lambda gens: {v.kind for v in check_generators(gens)}
    assert kinds([parse_operator("i c1 c2 c3", 2)]) == {"odd_weight"}
    assert kinds([parse_operator("c1 c2", 2)]) == {"not_involution"}
    assert "not_commuting" in kinds([parse_operator("i c1 c2", 2), parse_operator("i c2 c3", 2)])
    a = parse_operator("i c1 c2", 2)
    assert kinds([a, a]) == {"dependent"}
    assert kinds([a, -a]) == {"contains_minus_one"}
    with pytest.raises(CodeValidationError) as info:
        StabilizerCode([parse_operator("i c1 c2", 2), parse_operator("i c2 c3", 2)])
    assert info.value.violations[0].generators == (1, 2)


def test_supplied_basis_is_checked():
    gens = [g(1, 2), g(2, 2)]
    with pytest.raises(ValueError, match="not fixed"):
        StabilizerCode(gens, basis=[FockVector.basis(b) for b in ("1111", "1010", "0101", "0000")])
    with pytest.raises(ValueError, match="dimension"):
        StabilizerCode(gens, basis=[FockVector.basis("0000")])


def test_syndromes():
    code = StabilizerCode(hastings_generators(4))
    table = single_majorana_syndromes(code)
    for mu, bits in table:
        assert syndrome_value(bits[:4]) == mu - 1
        assert bits[4] == 1
    assert syndrome(code, MajoranaOperator.identity(8)) == (0,) * 5


def test_logical_checks():
    code = StabilizerCode([g(1, 2), g(2, 2)])
    basis = code.basis
    op = parse_operator("i c1 c4", 4)
    action = logical_action(code, op)
    assert action is not None
    assert verify_logical(code, op, action).ok
    wrong = {a: (b, -s) for a, (b, s) in action.items()}
    check = verify_logical(code, op, wrong)
    assert not check.ok and len(check.deviations) == len(basis)
    assert not verify_logical(code, g(1, 2), {a: (a, 1) for a in range(len(basis))}).outside_stabilizer


def test_centralizer_dimension_and_commutation():
    for gens in SMALL_CODES.values():
        code = StabilizerCode(gens)
        cent = centralizer_generators(code)
        assert len(cent) == code.modes + code.k
        for c in cent:
            assert all(c * x == x * c for x in gens)
        even = centralizer_generators(code, even_only=True)
        assert all(c.is_even() for c in even)


def test_error_detection_on_distance_two_code():
    code = StabilizerCode([g(1, 2), g(2, 2)])
    assert error_detection_check(code, 1).ok
    assert not error_detection_check(code, 2).ok


def test_parameters():
    assert parameters(StabilizerCode(s2_generators())) == {"majorana_modes": 16, "k": 2, "distance": 4}


def test_code_spec_roundtrip_and_pauli_lines():
    gens = hastings_generators(4)
    modes, parsed = parse_code_spec(format_code_spec(gens, 8))
    assert modes == 8 and parsed == gens
    modes, parsed = parse_code_spec("# comment\nmodes: 8\n+1 YYYYYYYY\n-1 ZZIIIIII\n")
    assert [p.support for p in parsed] == [(1, 4, 5, 8, 9, 12, 13, 16), (1, 2, 3, 4)]
    assert parsed[1].phase == 0


@pytest.mark.parametrize(
    "text, line",
    [("modes: x\n", 1), ("c1 c2\n", 1), ("modes: 2\nc1 c2 c3 c4\nc9\n", 3), ("modes: 2\n\nfoo bar\n", 3)],
)
def test_code_spec_errors_name_line(text, line):
    with pytest.raises(ValueError, match=f"line {line}"):
        parse_code_spec(text)


def test_code_report_lists_violations():
    report = code_report([parse_operator("i c1 c2", 2), parse_operator("i c2 c3", 2)], 2, 4)
    assert report["valid"] is False
    assert report["violations"][0]["generators"] == [1, 2]
    assert report["k"] is None
