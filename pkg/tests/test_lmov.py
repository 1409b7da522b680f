"""Partition-function coefficients, free energy, reformulated invariants,
and the integrality / degree machinery."""

from fractions import Fraction

import pytest

from klmov.errors import NonIntegerCoefficient
from klmov.laurent import LaurentQT, RationalQT, ZTPoly, exact_div
from klmov.lmov import (
    UnlinkSpec,
    column_integrality_check,
    conjecture_lhs,
    degree_check,
    extract_n_table,
    free_energy,
    lickorish_millett_check,
    reformulated_g,
    z_coefficient,
)
from klmov.schur import pb_value, sb_closed_form
from klmov.torus import TorusLinkSpec, torus_invariant


def _mono(qe, te, c=1):
    return RationalQT({(qe, te): c})


def test_z_coefficient_single_label():
    spec = TorusLinkSpec(1, 1, 2)
    assert z_coefficient(spec, ((1,), (1,))) == torus_invariant(spec, ((1,), (1,)))


def test_z_coefficient_row_two():
    # the coloring ((2), empty) sees only the unknot component
    spec = TorusLinkSpec(1, 1, 2)
    got = z_coefficient(spec, ((2,), ()))
    want = (
        sb_closed_form((2,)) - sb_closed_form((1, 1)) + RationalQT(1)
    ) * Fraction(1, 2)
    assert got == want


def test_z_coefficient_unlink_column():
    got = z_coefficient(UnlinkSpec(1), ((1, 1),))
    want = (
        sb_closed_form((2,)) + sb_closed_form((1, 1)) + RationalQT(1)
    ) * Fraction(1, 2)
    assert got == want


def test_free_energy_hopf_column():
    # F on ((1,1),(1)) decomposes through the four splittings
    spec = TorusLinkSpec(1, 1, 2)
    z11_1 = z_coefficient(spec, ((1, 1), (1,)))
    z11 = z_coefficient(spec, ((1, 1), ()))
    z1_1 = z_coefficient(spec, ((1,), (1,)))
    z1 = z_coefficient(spec, ((1,), ()))
    zb = z_coefficient(spec, ((), (1,)))
    want = z11_1 - z11 * zb - z1_1 * z1 + z1 * z1 * zb
    assert free_energy(spec, ((1, 1), (1,))) == want


def test_free_energy_unlink():
    assert free_energy(UnlinkSpec(1), ((1, 1),)).is_zero
    for n in range(1, 7):
        assert free_energy(UnlinkSpec(1), ((n,),)) * n == pb_value(n)


def test_free_energy_vector_vector_closed_form():
    # F on ((1),(1)) for T(2,2k): odd t-part is (t - 1/t)(q^k - q^-k)^2 / z
    for k in (1, 2, 3):
        spec = TorusLinkSpec(1, k, 2)
        f = free_energy(spec, ((1,), (1,)))
        odd = (f - f.substitute(tsign=-1)) * Fraction(1, 2)
        want = exact_div(
            _mono(k, 1) - _mono(-k, 1) - _mono(k, -1) + _mono(-k, -1),
            LaurentQT({(1, 0): 1, (-1, 0): -1}),
        ) * (_mono(k, 0) - _mono(-k, 0))
        assert odd == want


def test_reformulated_g_mobius():
    spec = TorusLinkSpec(1, 1, 2)
    mu = ((2,), (2,))
    got = reformulated_g(spec, mu)
    want = free_energy(spec, mu) - free_energy(spec, ((1,), (1,))).substitute(
        qpow=2, tpow=2
    ) * Fraction(1, 2)
    assert got == want
    assert reformulated_g(spec, ((1,), (1,))) == free_energy(spec, ((1,), (1,)))
    assert reformulated_g(spec, ((2,), (1,))) == free_energy(spec, ((2,), (1,)))


def test_reformulated_g_unknot_rows_vanish():
    for n in range(2, 7):
        assert reformulated_g(UnlinkSpec(1), ((n,),)).is_zero


def test_conjecture_lhs_display_row():
    got = conjecture_lhs(TorusLinkSpec(1, 1, 2), ((2,), (1,)), antisymmetrize=False)
    want = ZTPoly({(0, -3): 1, (0, -1): -1, (0, 1): -1, (0, 3): 1, (1, -2): -1, (1, 2): 1})
    assert got == want


def test_conjecture_lhs_display_column():
    got = conjecture_lhs(TorusLinkSpec(1, 1, 2), ((1, 1), (1,)), antisymmetrize=False)
    want = ZTPoly(
        {(0, -3): -1, (0, -1): 3, (0, 1): -3, (0, 3): 1, (1, -2): 1, (1, 0): -2, (1, 2): 1}
    )
    assert got == want


def test_conjecture_lhs_hopf_mixed():
    got = conjecture_lhs(TorusLinkSpec(1, 1, 2), ((1,), (2,)), antisymmetrize=False)
    want = ZTPoly({(0, 3): 1, (0, 1): -1, (0, -1): -1, (0, -3): 1, (1, 2): 1, (1, -2): -1})
    assert got == want


def test_extract_n_table():
    spec = TorusLinkSpec(1, 1, 2)
    table = extract_n_table(conjecture_lhs(spec, ((2,), (1,))), ((2,), (1,)))
    assert table.entries == {
        (Fraction(0), -3): 1,
        (Fraction(0), -1): -1,
        (Fraction(0), 1): -1,
        (Fraction(0), 3): 1,
    }
    table = extract_n_table(conjecture_lhs(spec, ((3,), (1,))), ((3,), (1,)))
    assert table.entries == {(Fraction(1, 2), -3): -1, (Fraction(1, 2), 3): 1}
    empty = extract_n_table(ZTPoly({}), ((1,),))
    assert empty.is_empty()


def test_extract_n_table_rejects_fractions():
    with pytest.raises(NonIntegerCoefficient):
        extract_n_table(ZTPoly({(0, 0): Fraction(1, 2)}), ((1,),))


def test_integrality_regression_includes_larger_k():
    # knots at k = 5 are not tabulated but must still land in the ring
    for mu in [((1, 1),), ((2,),)]:
        assert conjecture_lhs(TorusLinkSpec(2, 5, 1), mu).is_integral()


def test_degree_check():
    spec = TorusLinkSpec(1, 1, 2)
    res = degree_check(spec, ((1,), (1,)))
    assert res.passed and res.bound == 0 and res.valuation >= 0
    res = degree_check(TorusLinkSpec(2, 3, 1), ((1, 1),))
    assert res.passed and res.bound == 0
    res = degree_check(UnlinkSpec(1), ((3,),))
    assert res == (-1, -1, True)
    res = degree_check(UnlinkSpec(1), ((1, 1),))
    assert res.valuation is None and res.passed


def test_column_integrality():
    assert column_integrality_check(TorusLinkSpec(1, 1, 2), (1, 1))
    assert column_integrality_check(TorusLinkSpec(1, 2, 2), (2, 1))
    assert column_integrality_check(UnlinkSpec(2), (1, 1))


def test_lickorish_millett():
    for k in (1, 2, 3):
        assert lickorish_millett_check(TorusLinkSpec(1, k, 2))
    for k in (1, 2):
        assert lickorish_millett_check(TorusLinkSpec(1, k, 3))
    assert lickorish_millett_check(TorusLinkSpec(2, 3, 1))  # vacuous for knots


def test_case_a_family_closed_form():
    # the two-box coloring of T(2,2k): z_mu * g equals the expansion
    # ((q^(2k+1)+q^(-2k-1))/(q+1/q) - 1)/z^2 * t^2 + ... with an odd part
    # z (t - 1/t) [k]^2; spot-check the full value at k=1
    spec = TorusLinkSpec(1, 1, 2)
    f = free_energy(spec, ((1,), (1,)))
    z = RationalQT({(1, 0): 1, (-1, 0): -1})
    tau = RationalQT({(0, 1): 1, (0, -1): -1})
    want = z * tau + RationalQT({(0, 2): 1, (0, 0): -2, (0, -2): 1})
    assert f == want


def test_color_bound():
    import pytest as _pytest

    from klmov.errors import BoundExceeded

    with _pytest.raises(BoundExceeded):
        z_coefficient(UnlinkSpec(1), ((7,),))
    # explicit bound overrides the default
    assert not z_coefficient(UnlinkSpec(1), ((7,),), bound=8).is_zero


def test_knot_row_antisymmetrized_closed_form():
    # the antisymmetrized combination z_mu (g(q,t) - g(q,-t))/2 for the row
    # color on T(2,k) has a closed form valid for every odd k; checked well
    # beyond the tabulated range
    from klmov.laurent import exact_div as _div

    def mono(a, b, c=1):
        return RationalQT({(a, b): c})

    def qd(n):
        return LaurentQT({(n, 0): 1, (-n, 0): -1})

    for k in (3, 5, 7):
        g = reformulated_g(TorusLinkSpec(2, k, 1), ((2,),))
        lhs = (g - g.substitute(tsign=-1)) * Fraction(1, 2) * 2
        inner_a = (
            -(mono(0, 2) + mono(0, -2))
            * (mono(2 * k, 0) + mono(-2 * k, 0) - mono(2, 0) - mono(-2, 0))
            + (mono(4, 0) + mono(-4, 0)) * (mono(2 * k, 0) + mono(-2 * k, 0))
            - mono(4, 0)
            - mono(0, 0, 2)
            - mono(-4, 0)
        )
        part_a = _div(_div(RationalQT(qd(2 * k)) * inner_a, qd(1)), qd(3))
        inner_b = -mono(k + 1, 1) + mono(-k - 1, 1) + mono(k - 1, -1) - mono(1 - k, -1)
        part_b = _div(RationalQT(qd(4 * k)) * inner_b * mono(0, -k), qd(2))
        tau = RationalQT(LaurentQT({(0, 1): 1, (0, -1): -1}))
        closed = mono(0, -2 * k) * _div(tau * (part_a + part_b), qd(1))
        assert lhs == closed, k
