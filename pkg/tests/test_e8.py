import itertools
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from majorana_codes.codes import glued_basis
from majorana_codes.e8 import (
    DEGREES,
    GENERIC_POINT,
    E8RootSystem,
    cartan_commutativity_check,
    evaluate_invariants,
    exact_rank,
    jacobian,
    jacobian_rank_check,
    positive_roots,
    reflect,
    root_values,
    roots,
)
from majorana_codes.fock import FockVector
from majorana_codes.scalar import Scalar

small = st.builds(Fraction, st.integers(-7, 7), st.integers(1, 5))
points = st.lists(small, min_size=8, max_size=8)


def lattice_roots():
    """Norm-2 vectors of the even E8 lattice, found by scanning doubled coordinates."""
    out = set()
    for doubled in itertools.product(range(-2, 3), repeat=8):
        if sum(d * d for d in doubled) != 8:
            continue
        parities = {d % 2 for d in doubled}
        if len(parities) != 1 or sum(doubled) % 4:
            continue
        out.add(tuple(Fraction(d, 2) for d in doubled))
    return out


def test_roots_match_lattice_enumeration():
    rs = roots()
    assert len(rs) == 240
    assert set(rs) == lattice_roots()
    assert len(positive_roots()) == 120


def test_root_system_axioms():
    rs = set(roots())
    for a in roots():
        assert tuple(-x for x in a) in rs
        for b in roots()[::17]:
            assert sum(x * y for x, y in zip(a, b)) in (-2, -1, 0, 1, 2)
    system = E8RootSystem.build()
    assert len(system) == 240 and roots()[0] in system


def test_pi2_at_unit_vector():
    values = evaluate_invariants([1, 0, 0, 0, 0, 0, 0, 0])
    assert values[0] == 60


@given(points)
def test_pi2_is_sixty_times_norm(x):
    assert evaluate_invariants(x)[0] == 60 * sum(v * v for v in x)


def test_zero_point():
    assert all(v == 0 for v in evaluate_invariants([0] * 8))


@settings(max_examples=10, deadline=None)
@given(points)
def test_fast_path_agrees_with_root_sum(x):
    slow = [sum((e**d for e in root_values(x)), Scalar(0)) for d in DEGREES]
    assert list(evaluate_invariants(x)) == slow


def test_complex_amplitudes():
    x = [Scalar(1, 1), 0, Scalar(0, 2), 1, 0, 0, 0, Fraction(1, 2)]
    values = evaluate_invariants(x)
    assert values[0] == 60 * sum((Scalar.coerce(v) ** 2 for v in x), Scalar(0))
    assert evaluate_invariants(reflect(roots()[100], x)) == values


def test_reflections_permute_roots():
    rs = set(roots())
    for alpha in roots()[::29]:
        image = {tuple(v.re for v in reflect(alpha, r)) for r in roots()}
        assert image == rs


def test_reflection_rejects_non_root():
    with pytest.raises(ValueError):
        reflect((1, 0, 0, 0, 0, 0, 0, 0), [1] * 8)


def test_invariance_under_sampled_reflections():
    rng = random.Random(7)
    x = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(8)]
    base = evaluate_invariants(x)
    for alpha in rng.sample(roots(), 20):
        assert evaluate_invariants(reflect(alpha, x)) == base


def test_invariance_under_sampled_permutations_and_sign_flips():
    rng = random.Random(11)
    x = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(8)]
    base = evaluate_invariants(x)
    for _ in range(100):
        perm = rng.sample(range(8), 8)
        assert evaluate_invariants([x[i] for i in perm]) == base
    for flips in itertools.combinations(range(8), 2):
        y = [-v if i in flips else v for i, v in enumerate(x)]
        assert evaluate_invariants(y) == base


def test_jacobian_rank_at_generic_point():
    assert jacobian_rank_check(GENERIC_POINT) == 8
    m = sympy.Matrix([[sympy.Rational(v.re.numerator, v.re.denominator) for v in row] for row in jacobian(GENERIC_POINT)])
    assert m.rank() == 8


def test_jacobian_degenerates_on_mirror():
    assert jacobian_rank_check([1, 0, 0, 0, 0, 0, 0, 0]) < 8
    # a point on the mirror of e_1 - e_2
    assert jacobian_rank_check([Fraction(1, 3)] * 2 + [Fraction(1, 5), Fraction(2, 7), 1, 2, 3, 5]) < 8


def test_jacobian_entries_against_symbolic_derivative():
    # differentiate along each coordinate line x + t e_i with sympy
    t = sympy.Symbol("t")
    x = [sympy.Rational(v.numerator, v.denominator) for v in GENERIC_POINT]
    j = jacobian(GENERIC_POINT)
    for row, d in [(0, 2), (1, 8), (7, 30)]:
        for i in (0, 4, 7):
            line = sum(
                (sum(sympy.Rational(c) * v for c, v in zip(r, x)) + sympy.Rational(r[i]) * t) ** d for r in roots()
            )
            expected = sympy.diff(line, t).subs(t, 0)
            got = j[row][i].re
            assert expected == sympy.Rational(got.numerator, got.denominator)


def _det_over_root_product(x):
    m = sympy.Matrix([[sympy.Rational(v.re.numerator, v.re.denominator) for v in row] for row in jacobian(x)])
    prod = sympy.Integer(1)
    for r in positive_roots():
        prod *= sympy.Rational(sum(a * b for a, b in zip(r, x)))
    return m.det() / prod


def test_jacobian_determinant_proportional_to_root_product():
    # each coordinate exceeds the sum of the smaller ones, so no root is orthogonal to it
    other = tuple(Fraction(2**k - 1, 256) for k in range(1, 9))
    ratio = _det_over_root_product(GENERIC_POINT)
    assert ratio != 0
    assert ratio == _det_over_root_product(other)


def test_exact_rank_small():
    assert exact_rank([[1, 2], [2, 4]]) == 1
    assert exact_rank([[Scalar(0, 1), 1], [1, Scalar(0, -1)]]) == 1
    assert exact_rank([[1, 0], [0, 1]]) == 2


def test_cartan_property_on_glued_basis():
    report = cartan_commutativity_check(glued_basis())
    assert report.ok
    assert report.pairs_checked == 120 * 8 * 7


def test_cartan_negative_control():
    report = cartan_commutativity_check([FockVector.vacuum(8), FockVector.basis("11000000")])
    assert not report.ok
    assert any((mu, nu) == (1, 3) for _, _, mu, nu, _ in report.nonzero)


def test_cartan_rejects_odd_vectors():
    with pytest.raises(ValueError):
        cartan_commutativity_check([FockVector.basis("10000000")])
