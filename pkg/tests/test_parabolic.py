import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from linkquandle import sl2
from linkquandle.gaussian import GaussQ, I
from linkquandle.parabolic import (
    ParabolicElement,
    canonical_sign,
    element_from_dict,
    element_to_dict,
    fixed_point_det,
    matrix_of,
    par_op,
    par_op_inv,
    projective_eq,
    same_class,
    star,
    star_inv,
    to_matrix,
)

# ---------------------------------------------------------------------------
# symbolic oracle: expand everything with sympy

x1, y1, x2, y2 = sympy.symbols("x1 y1 x2 y2")


def P(x, y):
    return sympy.Matrix([[1 - x * y, x ** 2], [-y ** 2, 1 + x * y]])


def test_symbolic_det_and_trace():
    m = sympy.Matrix(matrix_of((x1, y1)))
    assert sympy.expand(m.det()) == 1
    assert sympy.expand(m.trace()) == 2
    assert m == P(x1, y1)


def test_symbolic_star_is_linear_action():
    v = sympy.Matrix([x1, y1])
    w = P(x2, y2)
    assert sympy.expand(sympy.Matrix(star((x1, y1), (x2, y2))) - w.inv() * v) == sympy.zeros(2, 1)
    assert sympy.expand(sympy.Matrix(star_inv((x1, y1), (x2, y2))) - w * v) == sympy.zeros(2, 1)


def test_symbolic_equivariance():
    # P(v * w) = P(w)^-1 P(v) P(w) and P(v *^-1 w) = P(w) P(v) P(w)^-1
    v, w = (x1, y1), (x2, y2)
    lhs = sympy.Matrix(matrix_of(star(v, w)))
    rhs = P(x2, y2).inv() * P(x1, y1) * P(x2, y2)
    assert sympy.expand(lhs - rhs) == sympy.zeros(2, 2)
    lhs = sympy.Matrix(matrix_of(star_inv(v, w)))
    rhs = P(x2, y2) * P(x1, y1) * P(x2, y2).inv()
    assert sympy.expand(lhs - rhs) == sympy.zeros(2, 2)


def test_symbolic_fixed_vector():
    # v spans the fixed line of P(v), so v * v = v
    assert sympy.expand(P(x1, y1) * sympy.Matrix([x1, y1]) - sympy.Matrix([x1, y1])) == sympy.zeros(2, 1)


# ---------------------------------------------------------------------------
# exact random checks

def _rand_gauss(rng):
    def part():
        return Fraction(rng.randint(-6, 6), rng.randint(1, 4))
    return GaussQ(part(), part())


def _rand_element(rng):
    while True:
        x, y = _rand_gauss(rng), _rand_gauss(rng)
        if x != 0 or y != 0:
            return ParabolicElement(x, y)


def test_par_axioms_exact_1000():
    rng = random.Random(20240601)
    for _ in range(1000):
        u, v, w = (_rand_element(rng) for _ in range(3))
        assert same_class(par_op(u, u), u)
        assert same_class(par_op_inv(par_op(u, v), v), u)
        assert same_class(par_op(par_op_inv(u, v), v), u)
        assert same_class(par_op(par_op(u, v), w), par_op(par_op(u, w), par_op(v, w)))
        # the operation is well defined on classes
        assert same_class(par_op(u, -v), par_op(u, v))
        assert same_class(par_op(-u, v), -par_op(u, v))


def test_matrix_identities_exact_random():
    rng = random.Random(7)
    for _ in range(300):
        v, w = _rand_element(rng), _rand_element(rng)
        m = to_matrix(v)
        assert sl2.det(m) == 1 and sl2.trace(m) == 2
        lhs = to_matrix(par_op(v, w))
        rhs = sl2.mul(sl2.mul(sl2.inv(to_matrix(w)), m), to_matrix(w))
        assert lhs == rhs


complex_st = st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False)


@given(complex_st, complex_st, complex_st, complex_st)
def test_matrix_identities_numeric(a, b, c, d):
    if abs(a) + abs(b) < 1e-3 or abs(c) + abs(d) < 1e-3:
        return
    v, w = ParabolicElement(a, b), ParabolicElement(c, d)
    m = to_matrix(v)
    scale = (1 + abs(a) + abs(b)) ** 2
    assert abs(sl2.det(m) - 1) <= 1e-12 * scale ** 2
    assert abs(sl2.trace(m) - 2) <= 1e-12 * scale
    lhs = to_matrix(par_op(v, w))
    rhs = sl2.mul(sl2.mul(sl2.inv(to_matrix(w)), m), to_matrix(w))
    big = scale * (1 + abs(c) + abs(d)) ** 4
    assert sl2.max_entry_distance(lhs, rhs) <= 1e-10 * big


def test_zero_rejected():
    with pytest.raises(ValueError):
        ParabolicElement(0, 0)
    with pytest.raises(ValueError):
        ParabolicElement(GaussQ(0), 0j)


def test_canonical_sign_and_projective_eq():
    v = ParabolicElement(-1 + 0j, 2j)
    c = canonical_sign(v)
    assert c.x == 1 and c.y == -2j
    assert projective_eq(v, c) and projective_eq(v, ParabolicElement(1 + 1e-12, -2j))
    assert not projective_eq(v, ParabolicElement(1, 2j))
    assert canonical_sign(ParabolicElement(0j, -1j)).y == 1j


def test_element_json_round_trip():
    v = ParabolicElement(1 + 2j, -3j)
    assert projective_eq(element_from_dict(element_to_dict(v)), v)


def test_fixed_point_det():
    a, b = ParabolicElement(1, 0), ParabolicElement(0, 1 + I)
    assert fixed_point_det(a, b) == 1 + I
    assert fixed_point_det(a, ParabolicElement(2, 0)) == 0


def test_coloring_convention_matches_group():
    # *^-1 realizes x * y = y x y^-1 on matrices
    rng = random.Random(3)
    for _ in range(50):
        v, w = _rand_element(rng), _rand_element(rng)
        lhs = to_matrix(par_op_inv(v, w))
        mw = to_matrix(w)
        assert lhs == sl2.mul(sl2.mul(mw, to_matrix(v)), sl2.inv(mw))
