"""Cabling constants and torus-link invariants."""

import pytest

from klmov.errors import ComponentCountMismatch
from klmov.golden import (
    CTILDE_R1_L2,
    CTILDE_R1_L3,
    CTILDE_R2_L1,
    TORUS_SB_EXPANSIONS_2COMP,
    TORUS_SB_EXPANSIONS_KNOT,
)
from klmov.laurent import LaurentQT, RationalQT
from klmov.schur import loop_weight, sb_closed_form
from klmov.torus import (
    TorusLinkSpec,
    bracket_coefficients,
    ctilde,
    kauffman_bracket,
    torus_invariant,
    unlink_invariant,
)


def _mono(qe, te, c=1):
    return RationalQT({(qe, te): c})


def test_spec_validation():
    with pytest.raises(ValueError):
        TorusLinkSpec(2, 4, 1).validate()
    assert TorusLinkSpec(1, 1, 2).validate().describe() == "T(2,2)"


def test_ctilde_tables():
    for table, r in ((CTILDE_R2_L1, 2), (CTILDE_R1_L2, 1), (CTILDE_R1_L3, 1)):
        for colors, want in table.items():
            got = ctilde(colors, r).entries
            for lam, val in want.items():
                assert got.get(lam, 0) == val, (colors, r, lam)
            assert not {k for k, v in got.items() if v} - set(want)


def test_ctilde_defining_identity():
    for colors in [((1,),), ((2,),), ((1, 1),), ((1,), (1,)), ((2,), (1,))]:
        for r in (1, 2):
            lhs = RationalQT(0)
            for lam, c in ctilde(colors, r).entries.items():
                lhs = lhs + sb_closed_form(lam) * c
            rhs = RationalQT(1)
            for a in colors:
                rhs = rhs * sb_closed_form(a).substitute(qpow=r, tpow=r)
            assert lhs == rhs


def test_hopf_invariant():
    spec = TorusLinkSpec(1, 1, 2)
    got = torus_invariant(spec, ((1,), (1,)))
    want = (
        sb_closed_form((2,)) * _mono(2, 0)
        + sb_closed_form((1, 1)) * _mono(-2, 0)
        + _mono(0, -2)
    )
    assert got == want
    # the alternative closed form from the trace computation
    x = loop_weight()
    z = RationalQT({(1, 0): 1, (-1, 0): -1})
    tt = RationalQT({(0, 1): 1, (0, -1): -1})
    assert got == x * (tt / z + RationalQT(1) + z * tt)


def test_trefoil_invariant():
    got = torus_invariant(TorusLinkSpec(2, 3, 1), ((1,),))
    want = (
        sb_closed_form((2,)) * _mono(3, 0)
        - sb_closed_form((1, 1)) * _mono(-3, 0)
        + _mono(0, -3)
    ) * _mono(0, -3)
    assert got == want


def test_torus_expansion_sample():
    # one multi-term case from each family at one k value
    spec = TorusLinkSpec(1, 2, 2)
    terms = TORUS_SB_EXPANSIONS_2COMP[((2,), (2,))]
    want = RationalQT(0)
    for c, qs, ts, lam in terms:
        want = want + sb_closed_form(lam) * _mono(qs * 2, ts * 2, c)
    assert torus_invariant(spec, ((2,), (2,))) == want

    spec = TorusLinkSpec(2, 5, 1)
    terms = TORUS_SB_EXPANSIONS_KNOT[((1, 1),)]
    want = RationalQT(0)
    for c, qs, ts, lam in terms:
        want = want + sb_closed_form(lam) * _mono(qs * 5, ts * 5, c)
    assert torus_invariant(spec, ((1, 1),)) == want


def test_empty_component_deletion():
    spec = TorusLinkSpec(1, 1, 2)
    assert torus_invariant(spec, ((1,), ())) == sb_closed_form((1,))
    assert torus_invariant(spec, ((), ())) == RationalQT(1)
    spec3 = TorusLinkSpec(1, 1, 3)
    pairwise = torus_invariant(spec3, ((1,), (1,), ()))
    assert pairwise == torus_invariant(spec, ((1,), (1,)))


def test_component_count_mismatch():
    with pytest.raises(ComponentCountMismatch):
        torus_invariant(TorusLinkSpec(1, 1, 2), ((1,),))


def test_unlink_invariant():
    assert unlink_invariant(((1,),)) == sb_closed_form((1,))
    assert unlink_invariant(((), ())) == RationalQT(1)
    assert unlink_invariant(((1,), (1,))) == sb_closed_form((1,)) ** 2


def test_kauffman_bracket_unknot():
    assert kauffman_bracket(TorusLinkSpec(1, 1, 1)) == RationalQT(1)


def test_bracket_coefficients_hopf():
    got = bracket_coefficients(TorusLinkSpec(1, 1, 2))
    tau = LaurentQT({(0, 1): 1, (0, -1): -1})
    assert got[-1] == tau
    assert got[0] == LaurentQT(1)
    assert got[1] == tau
    assert set(got) == {-1, 0, 1}


def test_bracket_coefficients_t33():
    got = bracket_coefficients(TorusLinkSpec(1, 1, 3))
    tau = LaurentQT({(0, 1): 1, (0, -1): -1})
    assert got[-2] == tau * tau
    assert got[-1] == 2 * tau
    assert got[0] == LaurentQT(1) + 3 * tau * tau


def test_knot_exponents_integral_where_supported():
    # for one-component cables stray fractional framing exponents may only
    # occur where the cabling constant vanishes (checked for n*r <= 8)
    from fractions import Fraction

    from klmov.partitions import kappa, partitions_of

    for r, max_n in ((2, 4), (3, 2), (4, 2)):
        for n in range(1, max_n + 1):
            for a in partitions_of(n):
                table = ctilde((a,), r)
                for lam, c in table.entries.items():
                    if not c:
                        continue
                    f2 = r * n - sum(lam)
                    assert Fraction(kappa(lam), r).denominator == 1, (r, a, lam)
                    assert Fraction(f2, r).denominator == 1, (r, a, lam)
