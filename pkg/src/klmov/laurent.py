"""Exact bivariate Laurent arithmetic over arbitrary-precision rationals.

Three value types live here:

* ``LaurentQT``: a Laurent polynomial in q and t with rational coefficients,
  stored sparsely as ``{(qexp, texp): coefficient}``.
* ``RationalQT``: a quotient ``num / den`` where ``num`` is a LaurentQT and
  ``den`` is a Laurent polynomial in q alone.  Every denominator that occurs
  in the invariant formulas (quantum integers, hook products, q^n - q^-n)
  has this shape once t-monomial units are moved into the numerator, which
  lets canonicalization use univariate gcd only.
* ``ZTPoly``: a polynomial in z = q - 1/q and t, the target ring of the
  integrality checks.

All coefficients are ints or ``fractions.Fraction``; nothing here ever
touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import (
    NotDivisible,
    NotPolynomial,
    NotZRepresentable,
    ZeroInput,
)
from .kernel import qp_iadd, qp_mul, qt_iadd, qt_mul, qt_mul_qp

# ---------------------------------------------------------------------------
# univariate helpers ({exp: coef} dicts, used for q-only and t-only values)
# ---------------------------------------------------------------------------


def p1_normalize(p):
    return {a: c for a, c in p.items() if c}

def p1_add(p1, p2):
    out = dict(p1)
    return qp_iadd(out, p2)

def p1_scale(p, c):
    if not c:
        return {}
    return {a: c * v for a, v in p.items()}

def p1_shift(p, k):
    if k == 0:
        return dict(p)
    return {a + k: c for a, c in p.items()}


def p1_divmod(num, den):
    """Ordinary polynomial division; all exponents must be >= 0."""
    if not den:
        raise ZeroInput("division by zero polynomial")
    quo = {}
    rem = dict(num)
    dmax = max(den)
    dlc = den[dmax]
    while rem:
        rmax = max(rem)
        if rmax < dmax:
            break
        c = Fraction(rem[rmax]) / dlc
        e = rmax - dmax
        quo[e] = c
        for a, cc in den.items():
            k = a + e
            v = rem.get(k, 0) - c * cc
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return quo, rem


def p1_div_exact(num, den):
    """Exact division of univariate Laurent polynomials.

    Raises NotDivisible when the quotient is not a Laurent polynomial.
    """
    if not den:
        raise ZeroInput("division by zero polynomial")
    if not num:
        return {}
    sn, sd = min(num), min(den)
    quo, rem = p1_divmod(p1_shift(num, -sn), p1_shift(den, -sd))
    if rem:
        raise NotDivisible(f"remainder {rem} in univariate division")
    return p1_shift(quo, sn - sd)


def p1_gcd(p1, p2):
    """Monic gcd of two Laurent polynomials, normalized to min exponent 0."""
    a = p1_shift(p1, -min(p1)) if p1 else {}
    b = p1_shift(p2, -min(p2)) if p2 else {}
    while b:
        _, r = p1_divmod(a, b)
        a = b
        b = p1_shift(r, -min(r)) if r else {}
    if not a:
        return {}
    lc = a[max(a)]
    if lc != 1:
        inv = 1 / Fraction(lc)
        a = {k: inv * c for k, c in a.items()}
    return a


def p1_pow(p, n):
    out = {0: 1}
    for _ in range(n):
        out = qp_mul(out, p)
    return out


# ---------------------------------------------------------------------------
# bivariate helpers on raw {(a, b): coef} dicts
# ---------------------------------------------------------------------------


def qt_normalize(d):
    return {k: c for k, c in d.items() if c}

def qt_t_slices(d):
    """Group terms by t-exponent: {texp: {qexp: coef}}."""
    out = {}
    for (a, b), c in d.items():
        out.setdefault(b, {})[a] = c
    return out

def qt_q_slices(d):
    """Group terms by q-exponent: {qexp: {texp: coef}}."""
    out = {}
    for (a, b), c in d.items():
        out.setdefault(a, {})[b] = c
    return out

def qt_from_t_slices(slices):
    return {(a, b): c for b, sl in slices.items() for a, c in sl.items()}


def qt_q_content(d):
    """Monic gcd (in q, over Q) of the t-slice polynomials of d."""
    g = {}
    for sl in qt_t_slices(d).values():
        g = p1_gcd(g, sl) if g else p1_gcd(sl, sl)
        if g == {0: 1}:
            break
    return g


def qt_div_qonly(d, den, error=NotDivisible):
    """Divide a bivariate Laurent polynomial by a q-only one, exactly."""
    out = {}
    for b, sl in qt_t_slices(d).items():
        try:
            quo = p1_div_exact(sl, den)
        except NotDivisible as exc:
            raise error(str(exc)) from None
        for a, c in quo.items():
            out[(a, b)] = c
    return out


def qt_div_exact(num, den):
    """Exact division of bivariate Laurent polynomials.

    Division runs on q-degree with coefficients in Q[t, 1/t]; each leading
    coefficient step must divide exactly in the t-Laurent ring and the final
    remainder must vanish, otherwise NotDivisible is raised.
    """
    if not den:
        raise ZeroInput("division by zero polynomial")
    if not num:
        return {}
    ns = qt_q_slices(num)
    ds = qt_q_slices(den)
    dmax = max(ds)
    dlead = ds[dmax]
    qmin_bound = min(ns) - min(ds)
    quot = {}
    while ns:
        nmax = max(ns)
        e = nmax - dmax
        if e < qmin_bound:
            raise NotDivisible("quotient support exceeded in bivariate division")
        cq = p1_div_exact(ns[nmax], dlead)
        quot[e] = cq
        for a, tco in ds.items():
            tgt = ns.get(a + e)
            if tgt is None:
                tgt = ns[a + e] = {}
            qp_iadd(tgt, qp_mul(cq, tco), -1)
            if not tgt:
                del ns[a + e]
    return {(a, b): c for a, sl in quot.items() for b, c in sl.items()}


def qt_substitute(d, qpow, tsign, tpow):
    out = {}
    for (a, b), c in d.items():
        if tsign == -1 and b % 2:
            c = -c
        out[(a * qpow, b * tpow)] = c
    return out


# ---------------------------------------------------------------------------
# LaurentQT
# ---------------------------------------------------------------------------


class LaurentQT:
    """Sparse exact Laurent polynomial in q and t."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            self.terms = {}
        elif isinstance(terms, LaurentQT):
            self.terms = dict(terms.terms)
        elif isinstance(terms, dict):
            self.terms = qt_normalize(terms)
        elif isinstance(terms, (int, Fraction)):
            self.terms = {(0, 0): terms} if terms else {}
        else:
            raise TypeError(f"cannot build LaurentQT from {type(terms)!r}")

    @classmethod
    def monomial(cls, coef=1, qexp=0, texp=0):
        return cls({(qexp, texp): coef})

    @property
    def is_zero(self):
        return not self.terms

    def items(self):
        return self.terms.items()

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentQT(other)
        if not isinstance(other, LaurentQT):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = other if isinstance(other, LaurentQT) else LaurentQT(other)
        out = dict(self.terms)
        return LaurentQT(qt_iadd(out, other.terms))

    __radd__ = __add__

    def __sub__(self, other):
        other = other if isinstance(other, LaurentQT) else LaurentQT(other)
        out = dict(self.terms)
        return LaurentQT(qt_iadd(out, other.terms, -1))

    def __rsub__(self, other):
        return LaurentQT(other) - self

    def __neg__(self):
        return LaurentQT({k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentQT({k: other * c for k, c in self.terms.items()} if other else {})
        if isinstance(other, LaurentQT):
            return LaurentQT(qt_mul(self.terms, other.terms))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = LaurentQT(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def substitute(self, qpow=1, tsign=1, tpow=1):
        return LaurentQT(qt_substitute(self.terms, qpow, tsign, tpow))

    def __str__(self):
        return render_qt(self.terms)

    def __repr__(self):
        return f"LaurentQT({self})"


# handy generators
Q = LaurentQT({(1, 0): 1})
T = LaurentQT({(0, 1): 1})
ZQT = LaurentQT({(1, 0): 1, (-1, 0): -1})  # q - 1/q


def q_minus_qinv(n):
    """q^n - q^-n as a raw q-only dict."""
    return {n: 1, -n: -1}


def t_minus_tinv(n):
    return LaurentQT({(0, n): 1, (0, -n): -1})


# ---------------------------------------------------------------------------
# RationalQT
# ---------------------------------------------------------------------------


def _canonical(num, den):
    """Canonical form: den is monic in q, has constant term, and shares no
    nontrivial q-only factor with the numerator."""
    num = qt_normalize(num)
    den = p1_normalize(den)
    if not den:
        raise ZeroInput("zero denominator")
    if not num:
        return {}, {0: 1}
    s = min(den)
    if s:
        den = p1_shift(den, -s)
        num = {(a - s, b): c for (a, b), c in num.items()}
    lc = den[max(den)]
    if lc != 1:
        inv = 1 / Fraction(lc)
        den = {a: inv * c for a, c in den.items()}
        num = {k: inv * c for k, c in num.items()}
    if den != {0: 1}:
        g = p1_gcd(den, qt_q_content(num))
        if g != {0: 1}:
            den = p1_div_exact(den, g)
            num = qt_div_qonly(num, g)
    return num, den


class RationalQT:
    """Quotient of a bivariate Laurent polynomial by a q-only one."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, RationalQT):
            if den is not None:
                raise TypeError("den not allowed when copying a RationalQT")
            self.num, self.den = num.num, num.den
            return
        if isinstance(num, LaurentQT):
            num = num.terms
        elif isinstance(num, (int, Fraction)):
            num = {(0, 0): num} if num else {}
        if isinstance(den, LaurentQT):
            den = {a: c for (a, b), c in den.terms.items()}
        if den is None:
            den = {0: 1}
        self.num, self.den = _canonical(num, den)

    @classmethod
    def monomial(cls, coef=1, qexp=0, texp=0):
        return cls({(qexp, texp): coef})

    @property
    def is_zero(self):
        return not self.num

    @property
    def is_laurent(self):
        return self.den == {0: 1}

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((frozenset(self.num.items()), frozenset(self.den.items())))

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            out = dict(self.num)
            return RationalQT(qt_iadd(out, other.num), dict(self.den))
        g = p1_gcd(self.den, other.den)
        da = p1_div_exact(self.den, g)
        db = p1_div_exact(other.den, g)
        num = qt_mul_qp(self.num, db)
        qt_iadd(num, qt_mul_qp(other.num, da))
        return RationalQT(num, qp_mul(self.den, db))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_coerce_strict(other))

    def __rsub__(self, other):
        return _coerce_strict(other) - self

    def __neg__(self):
        out = RationalQT.__new__(RationalQT)
        out.num = {k: -c for k, c in self.num.items()}
        out.den = self.den
        return out

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return RationalQT(0)
            out = RationalQT.__new__(RationalQT)
            out.num = {k: other * c for k, c in self.num.items()}
            out.den = self.den
            return out
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalQT(qt_mul(self.num, other.num), qp_mul(self.den, other.den))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power; use exact_div")
        out = RationalQT(1)
        for _ in range(n):
            out = out * self
        return out

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if isinstance(other, LaurentQT):
            return exact_div(self, other)
        if isinstance(other, RationalQT):
            scaled = self * RationalQT({(a, 0): c for a, c in other.den.items()})
            return exact_div(scaled, LaurentQT(other.num))
        return NotImplemented

    def substitute(self, qpow=1, tsign=1, tpow=1):
        """Map q -> q^qpow and t -> (tsign * t)^... i.e. t^b -> tsign^b t^(b*tpow)."""
        if qpow < 1 or tpow < 1 or tsign not in (1, -1):
            raise ValueError("substitution wants positive powers and tsign in {1,-1}")
        num = qt_substitute(self.num, qpow, tsign, tpow)
        den = {a * qpow: c for a, c in self.den.items()}
        return RationalQT(num, den)

    def as_laurent(self):
        """Reduce to a LaurentQT; raises NotPolynomial when den does not divide."""
        if self.den == {0: 1}:
            return LaurentQT(dict(self.num))
        return LaurentQT(qt_div_qonly(self.num, self.den, error=NotPolynomial))

    def specialize_t(self, m):
        """Substitute t = q^m; result is a q-only dict and must be polynomial."""
        merged = {}
        for (a, b), c in self.num.items():
            k = a + m * b
            v = merged.get(k, 0) + c
            if v:
                merged[k] = v
            else:
                merged.pop(k, None)
        return p1_div_exact(merged, self.den)

    def valuation_at_q1(self):
        return valuation_at_q1(self)

    def __str__(self):
        num = render_qt(self.num)
        if self.den == {0: 1}:
            return num
        den = render_qt({(a, 0): c for a, c in self.den.items()})
        return f"({num})/({den})"

    def __repr__(self):
        return f"RationalQT({self})"


def _coerce(x):
    if isinstance(x, RationalQT):
        return x
    if isinstance(x, (int, Fraction, LaurentQT)):
        return RationalQT(x)
    return NotImplemented


def _coerce_strict(x):
    out = _coerce(x)
    if out is NotImplemented:
        raise TypeError(f"cannot coerce {type(x)!r} to RationalQT")
    return out


ONE = RationalQT(1)
ZERO = RationalQT(0)


def exact_div(x, d):
    """Divide x by the Laurent polynomial d, exactly.

    The q-only content of d joins the denominator; the remaining t-dependent
    cofactor must divide the numerator exactly or NotDivisible is raised.
    """
    x = _coerce_strict(x)
    if isinstance(d, LaurentQT):
        d = d.terms
    elif isinstance(d, (int, Fraction)):
        d = {(0, 0): d} if d else {}
    d = qt_normalize(d)
    if not d:
        raise ZeroInput("division by zero")
    content = qt_q_content(d)
    prim = qt_div_qonly(d, content)
    den = qp_mul(x.den, content)
    tslices = qt_t_slices(prim)
    if len(tslices) == 1:
        # pure t-monomial times q-only content: a unit, divide directly
        (b0, sl0), = tslices.items()
        if len(sl0) == 1:
            (a0, c0), = sl0.items()
            inv = 1 / Fraction(c0)
            num = {(a - a0, b - b0): inv * c for (a, b), c in x.num.items()}
            return RationalQT(num, den)
    num = qt_div_exact(x.num, prim)
    return RationalQT(num, den)


# ---------------------------------------------------------------------------
# z-basis (z = q - 1/q)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _z_power_q(d):
    """(q - 1/q)^d as a q-only tuple of (exp, coef)."""
    return tuple(((d - 2 * i), ((-1) ** i) * comb(d, i)) for i in range(d + 1))


class ZTPoly:
    """Polynomial in z = q - 1/q and t: ``{(zpow >= 0, texp): coef}``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = qt_normalize(terms or {})
        if any(z < 0 for z, _ in self.terms):
            raise ValueError("negative z-power")

    @property
    def is_zero(self):
        return not self.terms

    def items(self):
        return self.terms.items()

    def is_integral(self):
        return all(Fraction(c).denominator == 1 for c in self.terms.values())

    def rows(self):
        """{zpow: {texp: coef}} with plain int coefficients where possible."""
        out = {}
        for (z, b), c in sorted(self.terms.items()):
            out.setdefault(z, {})[b] = int(c) if Fraction(c).denominator == 1 else c
        return out

    def expand(self):
        """Re-expand with z := q - 1/q, returning a RationalQT."""
        acc = {}
        for (zp, b), c in self.terms.items():
            for a, bc in _z_power_q(zp):
                k = (a, b)
                v = acc.get(k, 0) + c * bc
                if v:
                    acc[k] = v
                else:
                    acc.pop(k, None)
        return RationalQT(acc)

    def __eq__(self, other):
        if isinstance(other, ZTPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for z, row in sorted(self.rows().items()):
            body = render_qt({(0, b): c for b, c in row.items()})
            if z == 0:
                parts.append(f"({body})")
            elif z == 1:
                parts.append(f"({body})*z")
            else:
                parts.append(f"({body})*z^{z}")
        return " + ".join(parts)

    def __repr__(self):
        return f"ZTPoly({self})"


def _reduce_parity_class(part, out):
    """Peel c * z^d * t^b terms off one q-parity class of a Laurent dict."""
    while part:
        d = max(a for a, _ in part)
        if d < 0:
            witness = render_qt(part)
            raise NotZRepresentable(
                f"value is not symmetric under q -> -1/q; residual terms {witness}"
            )
        top = {b: c for (a, b), c in part.items() if a == d}
        for b, c in top.items():
            out[(d, b)] = out.get((d, b), 0) + c
        for b, c in top.items():
            for a, bc in _z_power_q(d):
                k = (a, b)
                v = part.get(k, 0) - c * bc
                if v:
                    part[k] = v
                else:
                    part.pop(k, None)


def to_z_basis(x):
    """Rewrite x as a polynomial in z = q - 1/q with t-Laurent coefficients.

    Requires x to reduce to a Laurent polynomial (else NotPolynomial) that is
    invariant under q -> -1/q (else NotZRepresentable).  The two q-parity
    classes reduce independently since z^d only contains exponents of the
    parity of d.
    """
    x = _coerce_strict(x)
    lau = x.as_laurent().terms
    even = {k: c for k, c in lau.items() if k[0] % 2 == 0}
    odd = {k: c for k, c in lau.items() if k[0] % 2}
    out = {}
    _reduce_parity_class(even, out)
    _reduce_parity_class(odd, out)
    return ZTPoly(out)


# ---------------------------------------------------------------------------
# valuation at q = 1
# ---------------------------------------------------------------------------


def _p1_q1_multiplicity(p):
    """Order of vanishing at q = 1 of a univariate Laurent polynomial."""
    p = p1_shift(p, -min(p))
    m = 0
    while True:
        if sum(p.values()) != 0:
            return m
        # synthetic division by (q - 1)
        deg = max(p)
        dense = [p.get(i, 0) for i in range(deg + 1)]
        out = [0] * deg
        acc = 0
        for i in range(deg, 0, -1):
            acc = acc + dense[i]
            out[i - 1] = acc
        p = {i: c for i, c in enumerate(out) if c}
        if not p:
            return m + 1
        m += 1


def valuation_at_q1(x):
    """Order of vanishing at q = 1: mult(num) - mult(den).

    With q = e^u this equals the u-valuation, since u has a simple zero there.
    """
    x = _coerce_strict(x)
    if not x.num:
        raise ZeroInput("valuation of zero")
    m_num = min(_p1_q1_multiplicity(sl) for sl in qt_t_slices(x.num).values())
    m_den = _p1_q1_multiplicity(x.den)
    return m_num - m_den


# ---------------------------------------------------------------------------
# rendering and parsing
# ---------------------------------------------------------------------------


def _render_coef(c):
    f = Fraction(c)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def render_qt(terms):
    """q-exponents descending, then t-exponents descending."""
    if not terms:
        return "0"
    pieces = []
    for (a, b) in sorted(terms, key=lambda k: (-k[0], -k[1])):
        c = Fraction(terms[(a, b)])
        mono = []
        if a:
            mono.append("q" if a == 1 else f"q^{a}")
        if b:
            mono.append("t" if b == 1 else f"t^{b}")
        mag = abs(c)
        if not mono:
            body = _render_coef(mag)
        elif mag == 1:
            body = "*".join(mono)
        else:
            body = "*".join([_render_coef(mag)] + mono)
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces)


class _Parser:
    """Recursive-descent parser for the rendered grammar (plus parentheses).

    Accepts q, t, integers, + - * / ^ and implicit exactness: every "/" is an
    exact division, so "(q^2-q^-2)/(q-q^-1)" parses to q + q^-1.
    """

    def __init__(self, text):
        self.toks = self._lex(text)
        self.pos = 0

    @staticmethod
    def _lex(text):
        toks = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                toks.append(("num", int(text[i:j])))
                i = j
            elif ch in "qt+-*/^()":
                toks.append((ch, ch))
                i += 1
            else:
                raise ValueError(f"unexpected character {ch!r}")
        toks.append(("end", None))
        return toks

    def _peek(self):
        return self.toks[self.pos][0]

    def _next(self):
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def parse(self):
        value = self._expr()
        if self._peek() != "end":
            raise ValueError("trailing input")
        return value

    def _expr(self):
        sign = 1
        while self._peek() in "+-":
            if self._next()[0] == "-":
                sign = -sign
        value = self._term() * sign
        while self._peek() in "+-":
            op = self._next()[0]
            rhs = self._term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _term(self):
        value = self._factor()
        while self._peek() in "*/":
            op = self._next()[0]
            rhs = self._factor()
            value = value * rhs if op == "*" else value / rhs
        return value

    def _factor(self):
        base = self._atom()
        if self._peek() == "^":
            self._next()
            sign = 1
            while self._peek() == "-":
                self._next()
                sign = -sign
            kind, val = self._next()
            if kind != "num":
                raise ValueError("exponent must be an integer")
            n = sign * val
            if n >= 0:
                return base ** n
            inv = ONE / base
            return inv ** (-n)
        return base

    def _atom(self):
        kind, val = self._next()
        if kind == "num":
            return RationalQT(val)
        if kind == "q":
            return RationalQT({(1, 0): 1})
        if kind == "t":
            return RationalQT({(0, 1): 1})
        if kind == "(":
            value = self._expr()
            if self._next()[0] != ")":
                raise ValueError("missing closing parenthesis")
            return value
        if kind == "-":
            return -self._atom()
        raise ValueError(f"unexpected token {kind!r}")


def parse_qt(text):
    """Parse the textual grammar into a RationalQT."""
    return _Parser(text).parse()
