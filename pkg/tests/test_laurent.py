"""Exact arithmetic: ring operations, substitution, division, z-basis,
valuation, rendering."""

import random
from fractions import Fraction

import pytest

from klmov.errors import NotDivisible, NotZRepresentable, ZeroInput
from klmov.laurent import (
    LaurentQT,
    RationalQT,
    ZTPoly,
    exact_div,
    parse_qt,
    to_z_basis,
    valuation_at_q1,
)

Q = RationalQT({(1, 0): 1})
QI = RationalQT({(-1, 0): 1})
T = RationalQT({(0, 1): 1})
TI = RationalQT({(0, -1): 1})
Z = Q - QI
X = RationalQT({(1, 0): 1, (-1, 0): -1, (0, 1): 1, (0, -1): -1}, {1: 1, -1: -1})


def test_difference_of_squares():
    assert (Q - QI) * (Q + QI) == RationalQT({(2, 0): 1, (-2, 0): -1})


def test_additive_inverse():
    assert (X + (-X)).is_zero


def test_loop_weight_times_z():
    assert X * Z == RationalQT({(1, 0): 1, (-1, 0): -1, (0, 1): 1, (0, -1): -1})


def test_substitute_t_sign():
    v = T - TI
    assert v.substitute(tsign=-1) == -(T - TI)


def test_substitute_q_power():
    assert Z.substitute(qpow=2, tpow=2) == RationalQT({(2, 0): 1, (-2, 0): -1})


def test_substitute_loop_weight():
    got = X.substitute(qpow=2, tpow=2)
    want = RationalQT(
        {(2, 0): 1, (-2, 0): -1, (0, 2): 1, (0, -2): -1}, {2: 1, -2: -1}
    )
    assert got == want


def test_substitute_identity_and_composition():
    assert X.substitute() == X
    assert X.substitute(qpow=2, tpow=3).substitute(qpow=3, tpow=2) == X.substitute(
        qpow=6, tpow=6
    )


def test_exact_div_q_only():
    num = RationalQT({(2, 0): 1, (-2, 0): -1})
    assert exact_div(num, LaurentQT({(1, 0): 1, (-1, 0): -1})) == Q + QI


def test_exact_div_t_only():
    num = RationalQT({(0, 2): 1, (0, -2): -1})
    assert exact_div(num, LaurentQT({(0, 1): 1, (0, -1): -1})) == T + TI


def test_exact_div_failure():
    num = RationalQT({(1, 0): 1, (-1, 0): -1, (0, 1): 1, (0, -1): -1})
    with pytest.raises(NotDivisible):
        exact_div(num, LaurentQT({(0, 2): 1, (0, 0): -1}))


def test_exact_div_zero_divisor():
    with pytest.raises(ZeroInput):
        exact_div(Q, LaurentQT(0))


def test_division_by_rational():
    w = X * (T - TI) + X * X
    assert w / X == (T - TI) + X


def test_z_basis_simple():
    assert to_z_basis(Z) == ZTPoly({(1, 0): 1})


def test_z_basis_even():
    got = to_z_basis(RationalQT({(2, 0): 1, (-2, 0): 1}))
    assert got == ZTPoly({(2, 0): 1, (0, 0): 2})


def test_z_basis_failure():
    with pytest.raises(NotZRepresentable):
        to_z_basis(Q + QI)


def test_z_basis_mixed_parity():
    value = Z * Z * Z + (T - TI) * Z * Z + RationalQT(5)
    got = to_z_basis(value)
    assert got == ZTPoly({(3, 0): 1, (2, 1): 1, (2, -1): -1, (0, 0): 5})
    assert got.expand() == value


def test_is_integral():
    assert ZTPoly({(1, 0): 1, (0, 1): 1, (0, -1): -1}).is_integral()
    assert not ZTPoly({(1, 0): Fraction(1, 2)}).is_integral()
    assert ZTPoly({}).is_integral()


def test_valuation_basics():
    assert valuation_at_q1(Z) == 1
    assert valuation_at_q1(RationalQT(1) / Z) == -1
    k5 = exact_div(
        RationalQT({(5, 0): 1, (-5, 0): -1}), LaurentQT({(1, 0): 1, (-1, 0): -1})
    )
    assert valuation_at_q1(k5) == 0


def test_valuation_zero_input():
    with pytest.raises(ZeroInput):
        valuation_at_q1(RationalQT(0))


def test_valuation_additive_random():
    rng = random.Random(7)
    for _ in range(25):
        a = RationalQT(
            {(rng.randint(-3, 3), rng.randint(-2, 2)): rng.randint(1, 4)},
            {1: 1, -1: -1} if rng.random() < 0.5 else {0: 1},
        ) + RationalQT(rng.randint(1, 3))
        b = Z ** rng.randint(0, 3) * rng.randint(1, 2)
        assert valuation_at_q1(a * b) == valuation_at_q1(a) + valuation_at_q1(b)


def test_render_parse_roundtrip():
    rng = random.Random(11)
    for _ in range(25):
        num = {
            (rng.randint(-3, 3), rng.randint(-2, 2)): rng.randint(-5, 5)
            for _ in range(rng.randint(1, 4))
        }
        den = rng.choice([{0: 1}, {1: 1, -1: -1}, {2: 1, 0: 1}])
        x = RationalQT(num, den)
        assert parse_qt(str(x)) == x


def test_parse_examples():
    assert parse_qt("(q^2-q^-2)/(q-q^-1)") == Q + QI
    assert parse_qt("1/2") == RationalQT(Fraction(1, 2))
    assert parse_qt("3/2*q*t^-1") == RationalQT({(1, -1): Fraction(3, 2)})


def test_canonical_denominator_is_monic_with_constant_term():
    x = RationalQT({(0, 0): 1}, {3: 2, 1: -2})
    assert min(x.den) == 0
    assert x.den[max(x.den)] == 1


def test_ring_axioms_random():
    rng = random.Random(3)
    dens = [{0: 1}, {1: 1, -1: -1}, {1: 1, -1: 1}, {2: 1, 0: -2, -2: 1}]
    vals = []
    for _ in range(12):
        num = {
            (rng.randint(-3, 3), rng.randint(-2, 2)): rng.randint(-3, 3)
            for _ in range(rng.randint(1, 3))
        }
        vals.append(RationalQT(num, rng.choice(dens)))
    for i in range(0, 12, 3):
        x, y, z = vals[i], vals[i + 1], vals[i + 2]
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z


def _eval_at(x, q0, t0):
    # independent oracle: evaluate the exact value at rational (q0, t0)
    num = sum(Fraction(c) * q0**a * t0**b for (a, b), c in x.num.items())
    den = sum(Fraction(c) * q0**a for a, c in x.den.items())
    return num / den


def test_arithmetic_matches_pointwise_evaluation():
    rng = random.Random(19)
    q0, t0 = Fraction(3, 2), Fraction(5, 7)
    dens = [{0: 1}, {1: 1, -1: -1}, {2: 1, 0: 3, -1: 1}]
    for _ in range(30):
        xs = []
        for _ in range(2):
            num = {
                (rng.randint(-3, 3), rng.randint(-2, 2)): rng.randint(-4, 4)
                for _ in range(rng.randint(1, 4))
            }
            xs.append(RationalQT(num, rng.choice(dens)))
        x, y = xs
        assert _eval_at(x + y, q0, t0) == _eval_at(x, q0, t0) + _eval_at(y, q0, t0)
        assert _eval_at(x * y, q0, t0) == _eval_at(x, q0, t0) * _eval_at(y, q0, t0)
        assert _eval_at(x - y, q0, t0) == _eval_at(x, q0, t0) - _eval_at(y, q0, t0)
        # substitution evaluates to the value at the powered point
        assert _eval_at(x.substitute(qpow=2, tpow=3), q0, t0) == _eval_at(
            x, q0**2, t0**3
        )


def test_exact_div_matches_pointwise_evaluation():
    q0, t0 = Fraction(2), Fraction(3)
    w = LaurentQT({(1, 0): 1, (-1, 0): -1, (0, 1): 1, (0, -1): -1})
    x = RationalQT(w) * RationalQT({(2, 1): 3, (0, -1): 1}, {1: 1, -1: -1})
    quot = exact_div(x, w)
    wval = q0 - 1 / q0 + t0 - 1 / t0
    assert _eval_at(quot, q0, t0) == _eval_at(x, q0, t0) / wval
