# SPDX-License-Identifier: Apache-2.0
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

import descentcodes.qpoly as test_module
from descentcodes.exceptions import IntegrityError, InvalidArgumentError
from descentcodes.qpoly import QPoly, ResiduePoly


def test_qpoly_canonical_form():
    assert QPoly((1, 2, 0, 0)).coefficients == (1, 2)
    assert QPoly((0, 0)).is_zero()
    assert QPoly().degree == -1
    assert QPoly((1, 2)).degree == 1
    assert QPoly((1, 2))[1] == 2
    assert QPoly((1, 2))[7] == 0

    with pytest.raises(TypeError):
        QPoly((1.5,))


def test_qpoly_from_terms():
    assert QPoly.from_terms({0: 1, 2: 3}) == QPoly((1, 0, 3))
    assert QPoly.from_terms({}) == QPoly()
    assert QPoly.monomial(3, 2) == QPoly((0, 0, 0, 2))

    with pytest.raises(InvalidArgumentError):
        QPoly.from_terms({-1: 1})


def test_qpoly_arithmetic():
    p = QPoly((1, 1))
    assert p * p == QPoly((1, 2, 1))
    assert (p - p).is_zero()
    assert p + 1 == QPoly((2, 1))
    assert 1 + p == QPoly((2, 1))
    assert 3 * p == QPoly((3, 3))
    assert -p == QPoly((-1, -1))
    assert p * QPoly() == QPoly()
    assert p.shift(2) == QPoly((0, 0, 1, 1))
    assert QPoly().shift(3) == QPoly()

    with pytest.raises(InvalidArgumentError):
        p.shift(-1)


def test_qpoly_divmod():
    quotient, remainder = divmod(QPoly((-1, 0, 1)), QPoly((-1, 1)))
    assert quotient == QPoly((1, 1))
    assert remainder.is_zero()

    quotient, remainder = divmod(QPoly((1, 0, 1)), QPoly((1, 1)))
    assert quotient == QPoly((-1, 1))
    assert remainder == QPoly((2,))

    quotient, remainder = divmod(QPoly((1, 1)), QPoly((1, 0, 1)))
    assert quotient.is_zero()
    assert remainder == QPoly((1, 1))


def test_qpoly_divmod_raises():
    with pytest.raises(ZeroDivisionError):
        divmod(QPoly((1,)), QPoly())
    with pytest.raises(InvalidArgumentError):
        divmod(QPoly((1, 1)), QPoly((1, 2)))
    with pytest.raises(IntegrityError):
        QPoly((1, 0, 1)).exact_quotient(QPoly((1, 1)))


def test_qpoly_evaluate():
    p = test_module.q_binomial(4, 2)
    assert p.evaluate(2) == 35
    assert p.evaluate(1) == p.at_one() == 6
    assert QPoly().evaluate(3) == 0


def test_qpoly_render():
    assert str(test_module.q_binomial(4, 2)) == "1 + q + 2q^2 + q^3 + q^4"
    assert str(QPoly((0, -1, 0, 3))) == "-q + 3q^3"
    assert str(QPoly((-2,))) == "-2"
    assert str(QPoly()) == "0"
    assert QPoly((1, 2)).to_json() == ["1", "2"]


def test_residue_poly():
    residue = ResiduePoly.from_counts(3, {0: 1, 4: 2})
    assert residue.coefficients == (1, 2, 0)
    assert residue.lift() == QPoly((1, 2))
    assert residue + residue == ResiduePoly(3, (2, 4, 0))
    assert str(residue) == "1 + 2q"
    assert residue.to_json() == ["1", "2", "0"]


def test_residue_poly_raises():
    with pytest.raises(InvalidArgumentError):
        ResiduePoly(3, (1, 2))
    with pytest.raises(InvalidArgumentError):
        ResiduePoly(0, ())
    with pytest.raises(InvalidArgumentError):
        ResiduePoly(2, (1, 0)) + ResiduePoly(3, (1, 0, 0))


def test_q_integer_and_factorial():
    assert test_module.q_integer(3) == QPoly((1, 1, 1))
    assert test_module.q_factorial(0) == QPoly((1,))
    assert test_module.q_factorial(3) == QPoly((1, 2, 2, 1))

    with pytest.raises(InvalidArgumentError):
        test_module.q_integer(0)
    with pytest.raises(InvalidArgumentError):
        test_module.q_factorial(-1)


def test_q_binomial():
    assert test_module.q_binomial(4, 2).coefficients == (1, 1, 2, 1, 1)
    assert test_module.q_binomial(2, 3).is_zero()
    assert test_module.q_binomial(5, 0) == QPoly((1,))
    assert test_module.q_binomial(5, 5) == QPoly((1,))
    assert test_module.q_binomial(0, 0) == QPoly((1,))


@given(st.integers(0, 14), st.data())
def test_q_binomial_properties(i, data):
    j = data.draw(st.integers(0, i))
    binomial = test_module.q_binomial(i, j)
    assert binomial.at_one() == math.comb(i, j)
    assert binomial.degree == j * (i - j)
    assert binomial == test_module.q_binomial(i, i - j)
    if 1 <= j < i:
        pascal = test_module.q_binomial(i - 1, j - 1) + test_module.q_binomial(i - 1, j).shift(j)
        assert binomial == pascal


def test_reduce_mod():
    reduced = test_module.reduce_mod(test_module.q_binomial(4, 2), 4)
    assert reduced == ResiduePoly(4, (2, 1, 2, 1))
    assert str(reduced) == "2 + q + 2q^2 + q^3"
    assert test_module.reduce_mod(QPoly(), 2) == ResiduePoly(2, (0, 0))

    with pytest.raises(InvalidArgumentError):
        test_module.reduce_mod(QPoly((1,)), 0)


def test_primitive_root_indices():
    assert test_module.primitive_root_indices(1) == [0]
    assert test_module.primitive_root_indices(4) == [1, 3]
    assert test_module.primitive_root_indices(6) == [1, 5]

    with pytest.raises(InvalidArgumentError):
        test_module.primitive_root_indices(0)


def test_eval_at_root_of_unity():
    value = test_module.eval_at_root_of_unity(test_module.q_binomial(4, 2), 2, 1)
    assert abs(value - 2) < 1e-9
    value = test_module.eval_at_root_of_unity(test_module.q_binomial(4, 2), 4, 1)
    assert abs(value) < 1e-9
    assert test_module.eval_at_root_of_unity(QPoly(), 3, 1) == 0


def test_q_binomial_limit_at_primitive_root():
    assert test_module.q_binomial_limit_at_primitive_root(2, 2, 1) == 6
    assert test_module.q_binomial_limit_at_primitive_root(2, 2, 2) == 2
    assert test_module.q_binomial_limit_at_primitive_root(2, 2, 4) == 0
    assert test_module.q_binomial_limit_at_primitive_root(3, 6, 3) == 3

    with pytest.raises(InvalidArgumentError):
        test_module.q_binomial_limit_at_primitive_root(2, 2, 3)


def test_lattice_paths():
    paths = list(test_module.lattice_paths(2, 1))
    assert [str(p) for p in paths] == ["EN", "NE"]
    assert [p.weight for p in paths] == [1, 0]
    assert [str(p) for p in test_module.lattice_paths(2, 0)] == ["NN"]

    with pytest.raises(InvalidArgumentError):
        list(test_module.lattice_paths(2, 3))


@given(st.integers(0, 9), st.data())
def test_lattice_path_weight_distribution(i, data):
    j = data.draw(st.integers(0, i))
    expected = test_module.q_binomial(i, j)
    assert test_module.lattice_path_weight_distribution(i, j) == expected


@given(st.integers(0, 14), st.data())
def test_q_binomial_coefficients_are_nonnegative(i, data):
    j = data.draw(st.integers(0, i))
    assert all(c >= 0 for c in test_module.q_binomial(i, j).coefficients)


@given(st.integers(0, 10), st.data())
def test_reduce_mod_agrees_at_roots_of_unity(i, data):
    p = test_module.q_binomial(i, data.draw(st.integers(0, i)))
    n = data.draw(st.integers(1, 12))
    reduced = test_module.reduce_mod(p, n).lift()
    for k in range(n):
        expected = test_module.eval_at_root_of_unity(p, n, k)
        assert abs(test_module.eval_at_root_of_unity(reduced, n, k) - expected) < 1e-6
