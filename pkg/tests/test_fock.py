import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from majorana_codes.fock import (
    FockVector,
    SpanBasis,
    annihilate,
    apply_majorana,
    apply_pauli,
    chirality,
    chirality_sector,
    create,
    format_state,
    inner,
    occupation_key,
    occupation_string,
    parse_state,
    same_span,
    sector,
    span_rank,
)
from majorana_codes.majorana import MajoranaOperator, PauliOperator
from majorana_codes.scalar import Scalar
from oracles import fock_column, majorana_matrix, pauli_matrix

small = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 6))
gaussian = st.builds(Scalar, small, small)


def fock_vectors(modes=3):
    return st.dictionaries(st.integers(0, (1 << modes) - 1), gaussian, max_size=6).map(
        lambda d: FockVector(modes, d)
    )


def to_dense(v: FockVector) -> np.ndarray:
    out = np.zeros(1 << v.modes, dtype=complex)
    for bits, a in v.terms():
        out[int(bits, 2)] = a.to_complex()
    return out


def test_keys_and_strings():
    assert occupation_key("100") == 1
    assert occupation_string(1, 3) == "100"
    v = FockVector.basis("0101")
    assert v.terms() == [("0101", Scalar(1))]
    assert str(v) == "(1)|0101>"


def test_zero_amplitudes_dropped():
    v = FockVector(2, {0: 1, 3: 0})
    assert len(v) == 1
    assert (v - v).is_zero()


def test_creation_annihilation_anticommutators():
    # {p_I, n_J} = delta_IJ and {p_I, p_J} = 0, checked on every basis state
    modes = 3
    for key in range(1 << modes):
        v = FockVector(modes, {key: 1})
        for i, j in itertools.product(range(1, modes + 1), repeat=2):
            pn = create(i, annihilate(j, v)) + annihilate(j, create(i, v))
            assert pn == (v if i == j else FockVector(modes))
            pp = create(i, create(j, v)) + create(j, create(i, v))
            assert pp.is_zero()
            nn = annihilate(i, annihilate(j, v)) + annihilate(j, annihilate(i, v))
            assert nn.is_zero()


def test_create_sign_convention():
    # p_2 |10> picks up (-1)^{k_1}
    assert create(2, FockVector.basis("10")) == FockVector.basis("11", amplitude=-1)
    assert create(1, FockVector.basis("01")) == FockVector.basis("11")
    assert create(1, FockVector.basis("10")).is_zero()


@pytest.mark.parametrize("modes", [1, 2, 3, 4])
def test_apply_majorana_matches_jordan_wigner_exhaustively(modes):
    for word in range(1 << (2 * modes)):
        op = MajoranaOperator(modes, word)
        dense = majorana_matrix(modes, op.support)
        for key in range(1 << modes):
            bits = occupation_string(key, modes)
            image = apply_majorana(op, FockVector.basis(bits))
            assert np.allclose(to_dense(image), dense @ fock_column(modes, bits))


def test_majorana_from_ladder_operators():
    v = FockVector.basis("01")
    c3 = MajoranaOperator.from_indices(2, (3,))
    c4 = MajoranaOperator.from_indices(2, (4,))
    assert apply_majorana(c3, v) == create(2, v) + annihilate(2, v)
    assert apply_majorana(c4, v) == (create(2, v) - annihilate(2, v)).scale(Scalar(0, 1))


@given(st.integers(0, 63), st.integers(0, 63), st.integers(0, 3))
def test_apply_pauli_matches_dense(z, x, k):
    p = PauliOperator(6, z, x, k)
    dense = pauli_matrix(p.letters, p.phase)
    for key in (0, 5, 42, 63):
        bits = occupation_string(key, 6)
        assert np.allclose(to_dense(apply_pauli(p, FockVector.basis(bits))), dense @ fock_column(6, bits))


def test_chirality_eigenvalues():
    for modes in (1, 2, 3, 4):
        gamma = chirality(modes)
        assert gamma.is_hermitian()
        for key in range(1 << modes):
            v = FockVector(modes, {key: 1})
            sign = -1 if bin(key).count("1") % 2 else 1
            assert apply_majorana(gamma, v) == v.scale(sign)


def test_sector_and_chirality_sector():
    v = FockVector.from_terms([("00", 1), ("11", 2), ("10", 3)])
    parts = sector(v)
    assert sorted(parts) == [0, 1, 2]
    assert chirality_sector(v) == "mixed"
    assert chirality_sector(FockVector.basis("11")) == "+"
    assert chirality_sector(FockVector.basis("10")) == "-"


@given(fock_vectors(), fock_vectors())
def test_inner_is_hermitian(u, v):
    assert inner(u, v) == inner(v, u).conjugate()
    assert inner(u, u).im == 0 and inner(u, u).re >= 0


@given(fock_vectors())
def test_state_format_roundtrip(v):
    text = format_state(v)
    assert parse_state(text, v.modes) == v


def test_state_format_example():
    v = FockVector.from_terms([("0101", Scalar(1, 0)), ("1010", Scalar(-1, 2))])
    text = format_state(v)
    assert text.splitlines()[0].endswith("|0101⟩")
    assert parse_state(text.replace("⟩", ">")) == v


def test_parse_state_errors():
    with pytest.raises(ValueError, match="line 2"):
        parse_state("1 |01>\nbogus\n")
    with pytest.raises(ValueError):
        parse_state("1 |01>\n", modes=3)


def test_span_rank_and_same_span():
    a = FockVector.basis("00") + FockVector.basis("11")
    b = FockVector.basis("00") - FockVector.basis("11")
    assert span_rank([a, b, a + b]) == 2
    assert same_span([a, b], [FockVector.basis("00"), FockVector.basis("11")])
    assert not same_span([a], [b])
    basis = SpanBasis(2)
    assert basis.add(a)
    assert not basis.add(a.scale(Scalar(0, 3)))
    assert basis.contains(a.scale(2))


def test_mode_mismatch_raises():
    with pytest.raises(ValueError):
        FockVector.basis("0") + FockVector.basis("00")
    with pytest.raises(IndexError):
        create(3, FockVector.basis("00"))
