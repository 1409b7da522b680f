"""Published reference values used by the regression suite.

Everything here is data: character tables of small symmetric groups and
Brauer algebras, the basis conversions between power sums and type-B Schur
symbols, closed-form quantum dimensions, cabling-constant tables, the
sb-expansions of small torus links, explicit z-expansions of reformulated
invariants, and the integer coefficient tables they produce.
"""

from __future__ import annotations

from fractions import Fraction

from .laurent import RationalQT

F = Fraction

# -- symmetric group character tables (rows: irreducible, cols: class) -------

SN_TABLES = {
    2: {
        ((2,), (2,)): 1, ((2,), (1, 1)): 1,
        ((1, 1), (2,)): -1, ((1, 1), (1, 1)): 1,
    },
    3: {
        ((3,), (3,)): 1, ((3,), (2, 1)): 1, ((3,), (1, 1, 1)): 1,
        ((2, 1), (3,)): -1, ((2, 1), (2, 1)): 0, ((2, 1), (1, 1, 1)): 2,
        ((1, 1, 1), (3,)): 1, ((1, 1, 1), (2, 1)): -1, ((1, 1, 1), (1, 1, 1)): 1,
    },
    4: {
        ((4,), (4,)): 1, ((4,), (3, 1)): 1, ((4,), (2, 2)): 1,
        ((4,), (2, 1, 1)): 1, ((4,), (1, 1, 1, 1)): 1,
        ((3, 1), (4,)): -1, ((3, 1), (3, 1)): 0, ((3, 1), (2, 2)): -1,
        ((3, 1), (2, 1, 1)): 1, ((3, 1), (1, 1, 1, 1)): 3,
        ((2, 2), (4,)): 0, ((2, 2), (3, 1)): -1, ((2, 2), (2, 2)): 2,
        ((2, 2), (2, 1, 1)): 0, ((2, 2), (1, 1, 1, 1)): 2,
        ((2, 1, 1), (4,)): 1, ((2, 1, 1), (3, 1)): 0, ((2, 1, 1), (2, 2)): -1,
        ((2, 1, 1), (2, 1, 1)): -1, ((2, 1, 1), (1, 1, 1, 1)): 3,
        ((1, 1, 1, 1), (4,)): -1, ((1, 1, 1, 1), (3, 1)): 1,
        ((1, 1, 1, 1), (2, 2)): 1, ((1, 1, 1, 1), (2, 1, 1)): -1,
        ((1, 1, 1, 1), (1, 1, 1, 1)): 1,
    },
}

# extra Brauer rows below the symmetric-group block

BRAUER_EXTRA_ROWS = {
    2: {
        ((), (2,)): 1, ((), (1, 1)): 1,
    },
    3: {
        ((1,), (3,)): 0, ((1,), (2, 1)): 1, ((1,), (1, 1, 1)): 3,
    },
    4: {
        ((2,), (4,)): 0, ((2,), (3, 1)): 0, ((2,), (2, 2)): 2,
        ((2,), (2, 1, 1)): 2, ((2,), (1, 1, 1, 1)): 6,
        ((1, 1), (4,)): 0, ((1, 1), (3, 1)): 0, ((1, 1), (2, 2)): -2,
        ((1, 1), (2, 1, 1)): 0, ((1, 1), (1, 1, 1, 1)): 6,
        ((), (4,)): 1, ((), (3, 1)): 0, ((), (2, 2)): 3,
        ((), (2, 1, 1)): 1, ((), (1, 1, 1, 1)): 3,
    },
}

# -- basis conversions (power sums <-> type-B Schur symbols) ------------------

PB_IN_SB = {
    (1,): {(1,): 1},
    (2,): {(2,): 1, (1, 1): -1, (): 1},
    (1, 1): {(2,): 1, (1, 1): 1, (): 1},
    (3,): {(3,): 1, (2, 1): -1, (1, 1, 1): 1},
    (2, 1): {(3,): 1, (1, 1, 1): -1, (1,): 1},
    (1, 1, 1): {(3,): 1, (2, 1): 2, (1, 1, 1): 1, (1,): 3},
    (4,): {(4,): 1, (3, 1): -1, (2, 1, 1): 1, (1, 1, 1, 1): -1, (): 1},
    (3, 1): {(4,): 1, (2, 2): -1, (1, 1, 1, 1): 1},
    (2, 2): {
        (4,): 1, (3, 1): -1, (2, 2): 2, (2, 1, 1): -1, (1, 1, 1, 1): 1,
        (2,): 2, (1, 1): -2, (): 3,
    },
    (2, 1, 1): {
        (4,): 1, (3, 1): 1, (2, 1, 1): -1, (1, 1, 1, 1): -1, (2,): 2, (): 1,
    },
    (1, 1, 1, 1): {
        (4,): 1, (3, 1): 3, (2, 2): 2, (2, 1, 1): 3, (1, 1, 1, 1): 1,
        (2,): 6, (1, 1): 6, (): 3,
    },
}

SB_IN_PB = {
    (1,): {(1,): 1},
    (2,): {(2,): F(1, 2), (1, 1): F(1, 2), (): -1},
    (1, 1): {(2,): F(-1, 2), (1, 1): F(1, 2)},
    (3,): {(3,): F(1, 3), (2, 1): F(1, 2), (1, 1, 1): F(1, 6), (1,): -1},
    (2, 1): {(3,): F(-1, 3), (1, 1, 1): F(1, 3), (1,): -1},
    (1, 1, 1): {(3,): F(1, 3), (2, 1): F(-1, 2), (1, 1, 1): F(1, 6)},
    (4,): {
        (4,): F(1, 4), (3, 1): F(1, 3), (2, 2): F(1, 8), (2, 1, 1): F(1, 4),
        (1, 1, 1, 1): F(1, 24), (2,): F(-1, 2), (1, 1): F(-1, 2),
    },
    (3, 1): {
        (4,): F(-1, 4), (2, 2): F(-1, 8), (2, 1, 1): F(1, 4),
        (1, 1, 1, 1): F(1, 8), (1, 1): -1, (): 1,
    },
    (2, 2): {
        (3, 1): F(-1, 3), (2, 2): F(1, 4), (1, 1, 1, 1): F(1, 12),
        (2,): F(-1, 2), (1, 1): F(-1, 2),
    },
    (2, 1, 1): {
        (4,): F(1, 4), (2, 2): F(-1, 8), (2, 1, 1): F(-1, 4),
        (1, 1, 1, 1): F(1, 8), (2,): F(1, 2), (1, 1): F(-1, 2),
    },
    (1, 1, 1, 1): {
        (4,): F(-1, 4), (3, 1): F(1, 3), (2, 2): F(1, 8), (2, 1, 1): F(-1, 4),
        (1, 1, 1, 1): F(1, 24),
    },
}

# -- closed-form quantum dimensions -------------------------------------------


def _brk(e, h):
    """(t q^e - t^-1 q^-e) / (q^h - q^-h)."""
    return RationalQT({(e, 1): 1, (-e, -1): -1}, {h: 1, -h: -1})


def _one_plus(e, h):
    num = {(e, 1): 1, (-e, -1): -1}
    num[(h, 0)] = num.get((h, 0), 0) + 1
    num[(-h, 0)] = num.get((-h, 0), 0) - 1
    return RationalQT(num, {h: 1, -h: -1})


def sb_closed_reference():
    """The closed-form quantum dimensions for all labels up to size four."""
    return {
        (1,): _one_plus(0, 1),
        (2,): _one_plus(1, 2) * _brk(0, 1),
        (1, 1): _one_plus(-1, 2) * _brk(0, 1),
        (3,): _one_plus(2, 3) * _brk(0, 2) * _brk(1, 1),
        (2, 1): _one_plus(0, 3) * _brk(-1, 1) * _brk(1, 1),
        (1, 1, 1): _one_plus(-2, 3) * _brk(0, 2) * _brk(-1, 1),
        (4,): _one_plus(3, 4) * _brk(0, 3) * _brk(1, 2) * _brk(2, 1),
        (3, 1): _one_plus(1, 4) * _brk(-1, 2) * _brk(0, 1) * _brk(2, 1),
        (2, 2): _one_plus(0, 3) * _one_plus(0, 1) * _brk(-2, 2) * _brk(2, 2),
        (2, 1, 1): _one_plus(-1, 4) * _brk(-2, 1) * _brk(1, 2) * _brk(0, 1),
        (1, 1, 1, 1): _one_plus(-3, 4) * _brk(0, 3) * _brk(-1, 2) * _brk(-2, 1),
    }


# -- cabling-constant tables ---------------------------------------------------

CTILDE_R2_L1 = {
    ((1,),): {(): 1, (2,): 1, (1, 1): -1},
    ((2,),): {
        (): 1, (2,): 1, (1, 1): -1,
        (4,): 1, (3, 1): -1, (2, 2): 1, (2, 1, 1): 0, (1, 1, 1, 1): 0,
    },
    ((1, 1),): {
        (): 1, (2,): 1, (1, 1): -1,
        (4,): 0, (3, 1): 0, (2, 2): 1, (2, 1, 1): -1, (1, 1, 1, 1): 1,
    },
}

CTILDE_R1_L2 = {
    ((1,), (1,)): {(): 1, (2,): 1, (1, 1): 1},
    ((2,), (1,)): {(1,): 1, (3,): 1, (2, 1): 1, (1, 1, 1): 0},
    ((1, 1), (1,)): {(1,): 1, (3,): 0, (2, 1): 1, (1, 1, 1): 1},
    ((2,), (2,)): {
        (): 1, (2,): 1, (1, 1): 1,
        (4,): 1, (3, 1): 1, (2, 2): 1, (2, 1, 1): 0, (1, 1, 1, 1): 0,
    },
    ((2,), (1, 1)): {
        (): 0, (2,): 1, (1, 1): 1,
        (4,): 0, (3, 1): 1, (2, 2): 0, (2, 1, 1): 1, (1, 1, 1, 1): 0,
    },
    ((1, 1), (1, 1)): {
        (): 1, (2,): 1, (1, 1): 1,
        (4,): 0, (3, 1): 0, (2, 2): 1, (2, 1, 1): 1, (1, 1, 1, 1): 1,
    },
    ((3,), (1,)): {
        (): 0, (2,): 1, (1, 1): 0,
        (4,): 1, (3, 1): 1, (2, 2): 0, (2, 1, 1): 0, (1, 1, 1, 1): 0,
    },
    ((2, 1), (1,)): {
        (): 0, (2,): 1, (1, 1): 1,
        (4,): 0, (3, 1): 1, (2, 2): 1, (2, 1, 1): 1, (1, 1, 1, 1): 0,
    },
    ((1, 1, 1), (1,)): {
        (): 0, (2,): 0, (1, 1): 1,
        (4,): 0, (3, 1): 0, (2, 2): 0, (2, 1, 1): 1, (1, 1, 1, 1): 1,
    },
}

CTILDE_R1_L3 = {
    ((1,), (1,), (1,)): {(1,): 3, (3,): 1, (2, 1): 2, (1, 1, 1): 1},
    ((2,), (1,), (1,)): {
        (): 1, (2,): 3, (1, 1): 2,
        (4,): 1, (3, 1): 2, (2, 2): 1, (2, 1, 1): 1, (1, 1, 1, 1): 0,
    },
    ((1, 1), (1,), (1,)): {
        (): 1, (2,): 2, (1, 1): 3,
        (4,): 0, (3, 1): 1, (2, 2): 1, (2, 1, 1): 2, (1, 1, 1, 1): 1,
    },
}

# -- torus invariants as sb-expansions ----------------------------------------
# Each term is (coefficient, q-slope, t-slope, label): the term contributes
# coefficient * q^(q-slope * k) * t^(t-slope * k) * sb_label.

TORUS_SB_EXPANSIONS_2COMP = {  # T(2, 2k), two vector-type components
    ((1,), (1,)): [(1, 2, 0, (2,)), (1, -2, 0, (1, 1)), (1, 0, -2, ())],
    ((2,), (1,)): [(1, 4, 0, (3,)), (1, -2, 0, (2, 1)), (1, -2, -2, (1,))],
    ((1, 1), (1,)): [(1, 2, 0, (2, 1)), (1, -4, 0, (1, 1, 1)), (1, 2, -2, (1,))],
    ((2,), (2,)): [
        (1, 8, 0, (4,)), (1, 0, 0, (3, 1)), (1, -4, 0, (2, 2)),
        (1, -2, -2, (2,)), (1, -6, -2, (1, 1)), (1, -4, -4, ()),
    ],
    ((2,), (1, 1)): [
        (1, 4, 0, (3, 1)), (1, -4, 0, (2, 1, 1)),
        (1, 2, -2, (2,)), (1, -2, -2, (1, 1)),
    ],
    ((1, 1), (1, 1)): [
        (1, 4, 0, (2, 2)), (1, 0, 0, (2, 1, 1)), (1, -8, 0, (1, 1, 1, 1)),
        (1, 6, -2, (2,)), (1, 2, -2, (1, 1)), (1, 4, -4, ()),
    ],
    ((3,), (1,)): [(1, 6, 0, (4,)), (1, -2, 0, (3, 1)), (1, -4, -2, (2,))],
    ((2, 1), (1,)): [
        (1, 4, 0, (3, 1)), (1, 0, 0, (2, 2)), (1, -4, 0, (2, 1, 1)),
        (1, 2, -2, (2,)), (1, -2, -2, (1, 1)),
    ],
    ((1, 1, 1), (1,)): [
        (1, 2, 0, (2, 1, 1)), (1, -6, 0, (1, 1, 1, 1)), (1, 4, -2, (1, 1)),
    ],
}

TORUS_SB_EXPANSIONS_KNOT = {  # T(2, k) for odd k, one component
    ((1,),): [(1, 1, -1, (2,)), (-1, -1, -1, (1, 1)), (1, 0, -2, ())],
    ((2,),): [
        (1, 2, -2, (4,)), (-1, -2, -2, (3, 1)), (1, -4, -2, (2, 2)),
        (1, -3, -3, (2,)), (-1, -5, -3, (1, 1)), (1, -4, -4, ()),
    ],
    ((1, 1),): [
        (1, 4, -2, (2, 2)), (-1, 2, -2, (2, 1, 1)), (1, -2, -2, (1, 1, 1, 1)),
        (1, 5, -3, (2,)), (-1, 3, -3, (1, 1)), (1, 4, -4, ()),
    ],
}

TORUS_SB_EXPANSIONS_3COMP = {  # T(3, 3k), three components
    ((1,), (1,), (1,)): [
        (1, 6, 0, (3,)), (2, 0, 0, (2, 1)), (1, -6, 0, (1, 1, 1)),
        (3, 0, -2, (1,)),
    ],
    ((2,), (1,), (1,)): [
        (1, 10, 0, (4,)), (2, 2, 0, (3, 1)), (1, -2, 0, (2, 2)),
        (1, -6, 0, (2, 1, 1)),
        (3, 0, -2, (2,)), (2, -4, -2, (1, 1)), (1, -2, -4, ()),
    ],
    ((1, 1), (1,), (1,)): [
        (1, 6, 0, (3, 1)), (1, 2, 0, (2, 2)), (2, -2, 0, (2, 1, 1)),
        (1, -10, 0, (1, 1, 1, 1)),
        (2, 4, -2, (2,)), (3, 0, -2, (1, 1)), (1, 2, -4, ()),
    ],
}

# -- explicit z-expansions of the reformulated invariants ----------------------
# {zpow: {tpow: coefficient}}; these are the candidate integer polynomials
# before anti-symmetrization.

Z_EXPANSION_COLUMN_2COMP = {  # T(2, 2k), colors ((1,1),(1))
    1: {
        0: {-3: -1, -1: 3, 1: -3, 3: 1},
        1: {-2: 1, 0: -2, 2: 1},
    },
    2: {
        0: {-5: -4, -3: 4, -1: 12, 1: -20, 3: 8},
        1: {-4: 4, -2: 4, 0: -20, 2: 12},
        2: {-5: -1, -3: 1, -1: 3, 1: -9, 3: 6},
        3: {-4: 1, -2: 1, 0: -9, 2: 7},
        4: {1: -1, 3: 1},
        5: {0: -1, 2: 1},
    },
    3: {
        0: {-7: -9, -5: 9, -3: -3, -1: 45, 1: -72, 3: 30},
        1: {-6: 9, -2: 27, 0: -90, 2: 54},
        2: {-7: -6, -5: 6, -3: -1, -1: 39, 1: -93, 3: 55},
        3: {-6: 6, -2: 27, 0: -114, 2: 81},
        4: {-7: -1, -5: 1, -1: 11, 1: -47, 3: 36},
        5: {-6: 1, -2: 9, 0: -55, 2: 45},
        6: {-1: 1, 1: -11, 3: 10},
        7: {-2: 1, 0: -12, 2: 11},
        8: {1: -1, 3: 1},
        9: {0: -1, 2: 1},
    },
}

Z_EXPANSION_ROW_2COMP = {  # T(2, 2k), colors ((2),(1))
    1: {
        0: {-3: 1, -1: -1, 1: -1, 3: 1},
        1: {-2: -1, 2: 1},
    },
    2: {
        0: {-5: 2, -3: -2, -1: 2, 1: -6, 3: 4},
        1: {-4: -2, -2: 2, 0: -6, 2: 6},
        2: {-5: 1, -3: -1, -1: 1, 1: -5, 3: 4},
        3: {-4: -1, -2: 1, 0: -5, 2: 5},
        4: {1: -1, 3: 1},
        5: {0: -1, 2: 1},
    },
    3: {
        0: {-7: 3, -5: -3, -3: -1, -1: 9, 1: -18, 3: 10},
        1: {-6: -3, -2: 9, 0: -24, 2: 18},
        2: {-7: 4, -5: -4, -3: -1, -1: 15, 1: -39, 3: 25},
        3: {-6: -4, -2: 15, 0: -50, 2: 39},
        4: {-7: 1, -5: -1, -1: 7, 1: -29, 3: 22},
        5: {-6: -1, -2: 7, 0: -35, 2: 29},
        6: {-1: 1, 1: -9, 3: 8},
        7: {-2: 1, 0: -10, 2: 9},
        8: {1: -1, 3: 1},
        9: {0: -1, 2: 1},
    },
}

Z_EXPANSION_TREFOIL_COLUMN = {  # T(2, 3), color ((1,1),)
    0: {-12: 1, -10: 6, -8: -33, -6: 52, -4: -33, -2: 6, 0: 1},
    1: {-11: 36, -9: -132, -7: 180, -5: -108, -3: 24},
    2: {-12: 36, -10: -103, -8: 76, -6: 18, -4: -32, -2: 5},
    3: {-11: 105, -9: -377, -7: 453, -5: -207, -3: 26},
    4: {-12: 105, -10: -350, -8: 341, -6: -87, -4: -10, -2: 1},
    5: {-11: 112, -9: -450, -7: 494, -5: -165, -3: 9},
    6: {-12: 112, -10: -441, -8: 440, -6: -110, -4: -1},
    7: {-11: 54, -9: -275, -7: 286, -5: -66, -3: 1},
    8: {-12: 54, -10: -274, -8: 274, -6: -54},
    9: {-11: 12, -9: -90, -7: 91, -5: -13},
    10: {-12: 12, -10: -90, -8: 90, -6: -12},
    11: {-11: 1, -9: -15, -7: 15, -5: -1},
    12: {-12: 1, -10: -15, -8: 15, -6: -1},
    13: {-9: -1, -7: 1},
    14: {-10: -1, -8: 1},
}

Z_EXPANSION_3COMP = {  # T(3, 3k), colors ((2),(1),(1))
    1: {
        0: {-4: -1, -2: 4, 0: 2, 2: -12, 4: 7},
        1: {-3: 2, -1: -2, 1: -10, 3: 10},
        2: {0: 1, 2: -6, 4: 5},
        3: {1: -6, 3: 6},
        4: {2: -1, 4: 1},
        5: {1: -1, 3: 1},
    },
    2: {
        0: {-8: -2, -6: -4, -4: 22, -2: -48, 0: 146, 2: -204, 4: 90},
        1: {-5: 16, -3: -48, -1: 176, 1: -336, 3: 192},
        2: {-8: -1, -6: -2, -4: 15, -2: -68, 0: 361, 2: -650, 4: 345},
        3: {-5: 12, -3: -68, -1: 452, 1: -1036, 3: 640},
        4: {-4: 2, -2: -38, 0: 398, 2: -950, 4: 588},
        5: {-5: 2, -3: -38, -1: 494, 1: -1406, 3: 948},
        6: {-2: -10, 0: 239, 2: -780, 4: 551},
        7: {-3: -10, -1: 286, 1: -1056, 3: 780},
        8: {-2: -1, 0: 80, 2: -377, 4: 298},
        9: {-3: -1, -1: 91, 1: -467, 3: 377},
        10: {0: 14, 2: -106, 4: 92},
        11: {-1: 15, 1: -121, 3: 106},
        12: {0: 1, 2: -16, 4: 15},
        13: {-1: 1, 1: -17, 3: 16},
        14: {2: -1, 4: 1},
        15: {1: -1, 3: 1},
    },
}

Z_EXPANSION_HOPF_MIXED = {  # T(2, 2), colors ((1),(2))
    0: {3: 1, 1: -1, -1: -1, -3: 1},
    1: {2: 1, -2: -1},
}

# -- integer coefficient tables ------------------------------------------------
# {k: {genus (as 2g): {beta: N}}}; genus keys are twice the genus so every key
# stays an integer.

N_TABLE_COLUMN_2COMP = {
    1: {0: {-3: -1, -1: 3, 1: -3, 3: 1}},
    2: {
        0: {-5: -4, -3: 4, -1: 12, 1: -20, 3: 8},
        2: {-5: -1, -3: 1, -1: 3, 1: -9, 3: 6},
        4: {1: -1, 3: 1},
    },
    3: {
        0: {-7: -9, -5: 9, -3: -3, -1: 45, 1: -72, 3: 30},
        2: {-7: -6, -5: 6, -3: -1, -1: 39, 1: -93, 3: 55},
        4: {-7: -1, -5: 1, -1: 11, 1: -47, 3: 36},
        6: {-1: 1, 1: -11, 3: 10},
        8: {1: -1, 3: 1},
    },
}

N_TABLE_ROW_2COMP = {
    1: {0: {-3: 1, -1: -1, 1: -1, 3: 1}},
    2: {
        0: {-5: 2, -3: -2, -1: 2, 1: -6, 3: 4},
        2: {-5: 1, -3: -1, -1: 1, 1: -5, 3: 4},
        4: {1: -1, 3: 1},
    },
    3: {
        0: {-7: 3, -5: -3, -3: -1, -1: 9, 1: -18, 3: 10},
        2: {-7: 4, -5: -4, -3: -1, -1: 15, 1: -39, 3: 25},
        4: {-7: 1, -5: -1, -1: 7, 1: -29, 3: 22},
        6: {-1: 1, 1: -9, 3: 8},
        8: {1: -1, 3: 1},
    },
}

N_TABLE_ROW_ROW_2COMP = {
    1: {
        1: {-3: -2, -1: 2, 1: -2, 3: 2},
        3: {-3: -1, -1: 1, 1: -1, 3: 1},
    },
    2: {
        1: {-5: -8, -3: 4, -1: 20, 1: -36, 3: 20},
        3: {-5: -24, -3: 20, -1: 40, 1: -96, 3: 60},
        5: {-5: -22, -3: 21, -1: 29, 1: -97, 3: 69},
        7: {-5: -8, -3: 8, -1: 9, 1: -47, 3: 38},
        9: {-5: -1, -3: 1, -1: 1, 1: -11, 3: 10},
        11: {1: -1, 3: 1},
    },
}

N_TABLE_LONGROW_2COMP = {
    1: {1: {-3: -1, 3: 1}},
    2: {
        1: {-5: -4, -3: 4, 1: -8, 3: 8},
        3: {-5: -5, -3: 5, 1: -14, 3: 14},
        5: {-5: -1, -3: 1, 1: -7, 3: 7},
        7: {1: -1, 3: 1},
    },
}

N_TABLE_TREFOIL_COLUMN = {
    3: {
        1: {-11: 36, -9: -132, -7: 180, -5: -108, -3: 24},
        3: {-11: 105, -9: -377, -7: 453, -5: -207, -3: 26},
        5: {-11: 112, -9: -450, -7: 494, -5: -165, -3: 9},
        7: {-11: 54, -9: -275, -7: 286, -5: -66, -3: 1},
        9: {-11: 12, -9: -90, -7: 91, -5: -13},
        11: {-11: 1, -9: -15, -7: 15, -5: -1},
        13: {-9: -1, -7: 1},
    },
}

N_TABLE_TREFOIL_ROW = {
    3: {
        1: {-11: -6, -9: 26, -7: -42, -5: 30, -3: -8},
        3: {-11: -35, -9: 125, -7: -161, -5: 85, -3: -14},
        5: {-11: -56, -9: 210, -7: -238, -5: 91, -3: -7},
        7: {-11: -36, -9: 165, -7: -174, -5: 46, -3: -1},
        9: {-11: -10, -9: 66, -7: -67, -5: 11},
        11: {-11: -1, -9: 13, -7: -13, -5: 1},
        13: {-9: 1, -7: -1},
    },
}

N_TABLE_3COMP = {
    1: {
        1: {-3: 2, -1: -2, 1: -10, 3: 10},
        3: {1: -6, 3: 6},
        5: {1: -1, 3: 1},
    },
    2: {
        1: {-5: 16, -3: -48, -1: 176, 1: -336, 3: 192},
        3: {-5: 12, -3: -68, -1: 452, 1: -1036, 3: 640},
        5: {-5: 2, -3: -38, -1: 494, 1: -1406, 3: 948},
        7: {-3: -10, -1: 286, 1: -1056, 3: 780},
        9: {-3: -1, -1: 91, 1: -467, 3: 377},
        11: {-1: 15, 1: -121, 3: 106},
        13: {-1: 1, 1: -17, 3: 16},
        15: {1: -1, 3: 1},
    },
}
