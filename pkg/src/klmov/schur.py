"""Power-sum and type-B Schur basis elements, and quantum dimensions.

``PbElement`` is a finite rational combination of power-sum symbols pb_mu
indexed by partitions (the empty partition is the constant 1); ``SbElement``
is the analogous combination of sb_A symbols over Brauer labels.  The two
bases are exchanged through the Brauer character transition, and sb symbols
evaluate to exact rational functions of (q, t) through the hook-content
product formula for quantum dimensions.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import BoundExceeded
from .characters import brauer_character, brauer_labels, sn_character
from .laurent import RationalQT, q_minus_qinv
from .partitions import partitions_of, transpose, z_stat

DEFAULT_SIZE_BOUND = 12


class _BasisElement:
    """Shared bookkeeping for finite linear combinations over partition keys."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        if coeffs:
            for key, c in coeffs.items():
                if c:
                    self.coeffs[tuple(key)] = c

    @property
    def is_zero(self):
        return not self.coeffs

    def items(self):
        return self.coeffs.items()

    def __eq__(self, other):
        if isinstance(other, type(self)):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return type(self)(out)

    def __sub__(self, other):
        return self + (other * -1)

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        if not scalar:
            return type(self)()
        return type(self)({k: scalar * c for k, c in self.coeffs.items()})

    __rmul__ = __mul__

    def _render(self, symbol):
        if not self.coeffs:
            return "0"
        bits = []
        for key in sorted(self.coeffs, key=lambda k: (sum(k), k), reverse=True):
            c = self.coeffs[key]
            name = f"{symbol}({','.join(map(str, key))})" if key else ""
            mag = abs(c)
            if not name:
                body = str(mag)
            elif mag == 1:
                body = name
            else:
                body = f"{mag}*{name}"
            if not bits:
                bits.append(body if c > 0 else f"-{body}")
            else:
                bits.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(bits)


class PbElement(_BasisElement):
    """Rational combination of power-sum symbols pb_mu."""

    def pb_mul(self, other):
        """Bilinear extension of pb_mu * pb_nu = pb_{mu union nu}."""
        out = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                key = tuple(sorted(k1 + k2, reverse=True))
                v = out.get(key, 0) + c1 * c2
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return PbElement(out)

    def adams(self, r):
        """Scale every row by r (evaluation at r-th power variables)."""
        if r < 1:
            raise ValueError("adams wants r >= 1")
        return PbElement({tuple(r * p for p in k): c for k, c in self.coeffs.items()})

    def __str__(self):
        return self._render("pb")


class SbElement(_BasisElement):
    """Rational combination of type-B Schur symbols sb_A."""

    def __str__(self):
        return self._render("sb")


def pb_one():
    return PbElement({(): 1})


@lru_cache(maxsize=None)
def pb_in_sb(mu, bound=DEFAULT_SIZE_BOUND):
    """Expand pb_mu over sb symbols via the Brauer character transition."""
    mu = tuple(mu)
    if sum(mu) > bound:
        raise BoundExceeded(f"|mu| = {sum(mu)} exceeds bound {bound}")
    out = {}
    for a in brauer_labels(sum(mu)):
        ch = brauer_character(a, mu)
        if ch:
            out[a] = ch
    return SbElement(out)


@lru_cache(maxsize=None)
def sb_in_pb(a, bound=DEFAULT_SIZE_BOUND):
    """Invert the transition: express sb_a in power sums.

    The top block of the Brauer character table is the S_n table, so
    orthogonality peels off the size-n layer once all smaller labels are
    (recursively) known.
    """
    a = tuple(a)
    n = sum(a)
    if n > bound:
        raise BoundExceeded(f"|a| = {n} exceeds bound {bound}")
    if n == 0:
        return pb_one()
    lower = [b for b in brauer_labels(n) if sum(b) < n]
    out = PbElement()
    for mu in partitions_of(n):
        chi = sn_character(a, mu)
        if not chi:
            continue
        residual = PbElement({mu: 1})
        for b in lower:
            ch_b = brauer_character(b, mu)
            if ch_b:
                residual = residual - sb_in_pb(b, bound) * ch_b
        out = out + residual * Fraction(chi, z_stat(mu))
    return out


@lru_cache(maxsize=None)
def sb_closed_form(a):
    """Quantum dimension of the label a, as an exact rational function.

    Product over the Young diagram of a: diagonal cells (j, j) contribute
    1 + (t q^{a_j - a'_j} - t^-1 q^{a'_j - a_j}) / (q^h - q^-h) and every
    other cell (i, j) contributes (t q^d - t^-1 q^-d) / (q^h - q^-h), where
    h is the hook length and d the arm/leg displacement (with the transposed
    form when the cell sits below the diagonal).
    """
    a = tuple(a)
    at = transpose(a)
    out = RationalQT(1)

    def row(i):
        return a[i - 1] if i <= len(a) else 0

    def col(j):
        return at[j - 1] if j <= len(at) else 0

    for i in range(1, len(a) + 1):
        for j in range(1, a[i - 1] + 1):
            h = row(i) + col(j) - i - j + 1
            den = q_minus_qinv(h)
            if i == j:
                e = row(j) - col(j)
                num = {(e, 1): 1, (-e, -1): -1}
                num[(h, 0)] = num.get((h, 0), 0) + 1
                num[(-h, 0)] = num.get((-h, 0), 0) - 1
                out = out * RationalQT(num, den)
            else:
                if i <= j:
                    d = row(i) + row(j) - i - j + 1
                else:
                    d = -col(i) - col(j) + i + j - 1
                out = out * RationalQT({(d, 1): 1, (-d, -1): -1}, den)
    return out


def evaluate_sb_element(x):
    """Evaluate an SbElement to a RationalQT through the closed forms."""
    out = RationalQT(0)
    for a, c in x.items():
        out = out + sb_closed_form(a) * c
    return out


def pb_value(n):
    """Value of pb_n under the principal evaluation: 1 + (t^n - t^-n)/(q^n - q^-n)."""
    num = {(n, 0): 1, (-n, 0): -1, (0, n): 1, (0, -n): -1}
    return RationalQT(num, q_minus_qinv(n))


def pb_product_value(mu):
    out = RationalQT(1)
    for part in mu:
        out = out * pb_value(part)
    return out


def unknot_identity_check(mu, bound=DEFAULT_SIZE_BOUND):
    """Character sum of quantum dimensions against the product formula."""
    mu = tuple(mu)
    return evaluate_sb_element(pb_in_sb(mu, bound)) == pb_product_value(mu)


def loop_weight():
    """Quantum dimension of the vector representation: 1 + (t - 1/t)/(q - 1/q)."""
    return sb_closed_form((1,))
