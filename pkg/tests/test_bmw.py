"""Rank-2 algebra: relations, idempotents, trace, torus crosschecks."""

import random

from klmov import bmw
from klmov.laurent import RationalQT


def test_multiplication_table():
    x = bmw._X
    ge = bmw.c2_mul(bmw.G, bmw.E)
    assert ge == bmw.E.scale(bmw._TINV)
    assert bmw.c2_mul(bmw.E, bmw.G) == ge
    assert bmw.c2_mul(bmw.E, bmw.E) == bmw.E.scale(x)


def test_inverse():
    assert bmw.inverse_check()


def test_cubic_relation():
    assert bmw.cubic_relation_holds()


def test_skein_relation():
    assert bmw.relation_a5_holds()


def test_idempotents():
    assert bmw.idempotent_checks()


def test_eigenvalues():
    assert bmw.eigenvalue_checks()


def test_trace_values():
    assert bmw.markov_trace(bmw.ONE) == bmw.XRational(RationalQT(1))
    z = RationalQT({(1, 0): 1, (-1, 0): -1})
    t = RationalQT({(0, 1): 1})
    assert bmw.markov_trace(bmw.G) == bmw.XRational(t * z, 1)
    assert bmw.markov_trace(bmw.E) == bmw.XRational(z, 1)


def test_trace_symmetry_random():
    rng = random.Random(5)

    def rand():
        return bmw.C2Element(
            bmw.XRational(RationalQT({(rng.randint(-2, 2), rng.randint(-1, 1)): rng.randint(1, 3)})),
            bmw.XRational(RationalQT(rng.randint(-2, 2))),
            bmw.XRational(RationalQT({(rng.randint(-1, 1), 0): rng.randint(-2, 2)})),
        )

    for _ in range(5):
        a, b = rand(), rand()
        assert bmw.markov_trace(bmw.c2_mul(a, b)) == bmw.markov_trace(bmw.c2_mul(b, a))


def test_power_trace_crosschecks():
    for m in range(1, 7):
        assert bmw.power_trace_crosscheck(m), m


def test_xrational_reduction():
    z = RationalQT({(1, 0): 1, (-1, 0): -1})
    one = bmw.XRational(RationalQT(1))
    # w/w reduces to 1, and (z/w) * x = (z/w) * (w/z) = 1
    assert bmw.XRational(bmw._W_R, 1) == one
    assert bmw.XRational(z, 1) * bmw._X == one
