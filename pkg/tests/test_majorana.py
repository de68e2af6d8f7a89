import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from majorana_codes.majorana import (
    MajoranaOperator,
    PauliOperator,
    commutes,
    jordan_wigner_string,
    majorana_from_support,
    majorana_to_pauli,
    multiply,
    parse_operator,
    pauli_multiply,
    pauli_to_majorana,
)
from oracles import majorana_matrix, pauli_matrix

M = 3


def majoranas(modes=M):
    return st.builds(
        lambda w, k: MajoranaOperator(modes, w, k),
        st.integers(0, (1 << (2 * modes)) - 1),
        st.integers(0, 3),
    )


def paulis(n=M):
    return st.builds(
        lambda z, x, k: PauliOperator(n, z, x, k),
        st.integers(0, (1 << n) - 1),
        st.integers(0, (1 << n) - 1),
        st.integers(0, 3),
    )


def dense(op: MajoranaOperator) -> np.ndarray:
    return majorana_matrix(op.modes, op.support, op.phase)


@given(majoranas(), majoranas())
def test_product_matches_matrix_product(a, b):
    assert np.allclose(dense(multiply(a, b)), dense(a) @ dense(b))


@given(majoranas(), majoranas(), majoranas())
def test_product_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(majoranas(), majoranas())
def test_commutes_matches_symplectic_form(a, b):
    assert commutes(a, b) == ((a * b) == (b * a))


def test_anticommutation_relations():
    modes = 4
    one = MajoranaOperator.identity(modes)
    for mu, nu in itertools.product(range(1, 2 * modes + 1), repeat=2):
        a = majorana_from_support(modes, (mu,))
        b = majorana_from_support(modes, (nu,))
        if mu == nu:
            assert a * b == one
        else:
            assert a * b == -(b * a)


def test_from_indices_orders_and_cancels():
    assert MajoranaOperator.from_indices(2, (2, 1)) == majorana_from_support(2, (1, 2), 2)
    assert MajoranaOperator.from_indices(2, (3, 3)) == MajoranaOperator.identity(2)
    with pytest.raises(IndexError):
        MajoranaOperator.from_indices(2, (5,))


@given(majoranas())
def test_hermitian_predicate_matches_matrix(op):
    m = dense(op)
    assert op.is_hermitian() == np.allclose(m, m.conj().T)
    assert np.allclose(dense(op.dagger()), m.conj().T)


def test_weight_and_parity():
    op = parse_operator("c1 c4 c5")
    assert op.weight == 3 and not op.is_even()
    assert str(op) == "+1 c1 c4 c5"


@given(paulis(), paulis())
def test_pauli_product_matches_matrices(a, b):
    assert np.allclose(pauli_matrix((a * b).letters, (a * b).phase), pauli_matrix(a.letters, a.phase) @ pauli_matrix(b.letters, b.phase))
    assert a.commutes(b) == ((a * b) == (b * a))


@pytest.mark.parametrize("modes", [1, 2, 3, 4])
def test_jordan_wigner_strings_match_dense(modes):
    for mu in range(1, 2 * modes + 1):
        p = jordan_wigner_string(mu, modes)
        assert np.allclose(pauli_matrix(p.letters, p.phase), majorana_matrix(modes, (mu,)))


@given(majoranas())
def test_majorana_to_pauli_matches_dense(op):
    p = majorana_to_pauli(op)
    assert np.allclose(pauli_matrix(p.letters, p.phase), dense(op))


@given(paulis())
def test_pauli_to_majorana_roundtrip(p):
    op = pauli_to_majorana(p)
    assert majorana_to_pauli(op) == p
    assert np.allclose(dense(op), pauli_matrix(p.letters, p.phase))


def test_conversion_roundtrip_low_weight_all_phases():
    modes = 8
    count = 0
    for w in range(3):
        for support in itertools.combinations(range(1, 17), w):
            for phase in range(4):
                op = majorana_from_support(modes, support, phase)
                assert pauli_to_majorana(majorana_to_pauli(op)) == op
                count += 1
    assert count == 4 * (1 + 16 + 120)


@pytest.mark.parametrize(
    "majorana, pauli",
    [
        ("c1", "+1 X"),
        ("c2", "+1 Y"),
        ("c3", "+1 ZXIIIIII"),
        ("c1 c4 c5 c8 c9 c12 c13 c16", "+1 YYYYYYYY"),
        ("c3 c4 c7 c8 c11 c12 c15 c16", "+1 IZIZIZIZ"),
        ("c1 c2 c3 c4", "-1 ZZIIIIII"),
        ("c1 c2 c3 c4 c5 c6 c7 c8 c9 c10 c11 c12 c13 c14 c15 c16", "+1 ZZZZZZZZ"),
    ],
)
def test_printed_conversions(majorana, pauli):
    modes = 1 if majorana in ("c1", "c2") else 8
    assert str(majorana_to_pauli(parse_operator(majorana, modes))) == pauli


def test_intertwiner_conversion_letters_and_sign():
    # matches the printed letters YZXIYZXI; the overall sign comes out -1
    p = majorana_to_pauli(parse_operator("c1 c5 c9 c13", 8))
    assert p.letters == "YZXIYZXI"
    assert p.phase == 2


@pytest.mark.parametrize(
    "text, expected",
    [
        ("+i c1 c2", "+i c1 c2"),
        ("-c1", "-1 c1"),
        ("−1 c_3", "-1 c3"),
        ("-i XYZ", "-i XYZ"),
        ("-ZZII", "-1 ZZII"),
        ("YYYYYYYY", "+1 YYYYYYYY"),
        ("c2 c1", "-1 c1 c2"),
    ],
)
def test_parse_operator(text, expected):
    assert str(parse_operator(text)) == expected


@pytest.mark.parametrize("text", ["", "c1 q2", "XYQ", "+1"])
def test_parse_operator_errors(text):
    with pytest.raises(ValueError):
        parse_operator(text)


def test_symplectic_coordinates_interleaved():
    p = PauliOperator.from_string("XZY")
    assert p.symplectic_coordinates().bits() == [0, 1, 1, 0, 1, 1]
    assert PauliOperator.from_symplectic(p.symplectic_coordinates()) == p


def test_pauli_multiply_mismatch():
    with pytest.raises(ValueError):
        pauli_multiply(PauliOperator.from_string("X"), PauliOperator.from_string("XX"))
