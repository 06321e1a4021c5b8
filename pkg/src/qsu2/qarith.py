"""Exact scalar arithmetic in the deformation parameter q.

Scalars live in the fraction field Q(q^(1/2)): Laurent polynomials in
q^(1/2) with rational coefficients, divided by one another and kept in a
canonical reduced form.  Exponents are stored doubled, so the lattice of
allowed powers is (1/2)Z exactly; q^(1/2)- and q^(H/2)-type symbols
therefore never need floating point.

On top of the field sits QRadical, a formal finite sum  sum_i c_i*sqrt(r_i)
with c_i, r_i in Q(q^(1/2)).  Radicands are canonical (square factors are
extracted via gcd-based square-free decomposition), so products of square
roots drop back into the base field whenever they can.

q_int(2n) is the q-integer [n]_q = (q^n - q^-n)/(q - q^-1); QPoint is a
positive numeric evaluation point carrying b_q = max(q, 1/q).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

__all__ = [
    "QScalar",
    "QRadical",
    "QPoint",
    "q_int",
    "q_power",
    "from_fraction",
    "sqrt_scalar",
    "evaluate",
    "bq_asymptotic_ratio",
    "ZERO",
    "ONE",
    "Q",
]


# ---------------------------------------------------------------------------
# Laurent polynomials in u = q^(1/2): dict  u-exponent (int) -> Fraction
# ---------------------------------------------------------------------------

def _lp_trim(terms):
    return {e: c for e, c in terms.items() if c != 0}


def _lp_add(p1, p2):
    out = dict(p1)
    for e, c in p2.items():
        s = out.get(e, Fraction(0)) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def _lp_neg(p):
    return {e: -c for e, c in p.items()}


def _lp_mul(p1, p2):
    if not p1 or not p2:
        return {}
    out = {}
    for e1, c1 in p1.items():
        for e2, c2 in p2.items():
            e = e1 + e2
            s = out.get(e, Fraction(0)) + c1 * c2
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def _lp_scale(p, c):
    if c == 0:
        return {}
    return {e: cc * c for e, cc in p.items()}


def _lp_shift(p, k):
    """Multiply by u^k."""
    if k == 0:
        return dict(p)
    return {e + k: c for e, c in p.items()}


def _lp_min_exp(p):
    return min(p) if p else 0


def _lp_max_exp(p):
    return max(p) if p else 0


def _lp_divmod(p1, p2):
    """Polynomial division in Q[u]; exponents must be nonnegative."""
    num = dict(p1)
    den = p2
    dmax = _lp_max_exp(den)
    dlead = den[dmax]
    quo = {}
    while num and _lp_max_exp(num) >= dmax:
        e = _lp_max_exp(num)
        c = num[e] / dlead
        quo[e - dmax] = c
        num = _lp_add(num, _lp_neg(_lp_shift(_lp_scale(den, c), e - dmax)))
    return quo, num


def _lp_gcd(p1, p2):
    """Monic gcd in Q[u]; exponents must be nonnegative."""
    a, b = dict(p1), dict(p2)
    while b:
        _, r = _lp_divmod(a, b)
        a, b = b, r
    if not a:
        return {0: Fraction(1)}
    lead = a[_lp_max_exp(a)]
    return {e: c / lead for e, c in a.items()}


def _lp_eval(p, u_val):
    total = Fraction(0) if isinstance(u_val, Fraction) else 0.0
    for e, c in p.items():
        total += c * u_val ** e
    return total


# ---------------------------------------------------------------------------
# QScalar: reduced fraction of Laurent polynomials
# ---------------------------------------------------------------------------

_FRACTIONABLE = (int, Fraction)
ScalarLike = Union["QScalar", "QRadical", int, Fraction]


class QScalar:
    """An exact element of Q(q^(1/2)).

    Internally a pair num/den of Laurent polynomials in u = q^(1/2).
    The denominator is canonical: a genuine polynomial in u with nonzero
    constant term and leading coefficient 1, coprime to the numerator
    (the numerator absorbs all u-power shifts).  Equality, hashing and
    zero-testing are therefore structural.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, _canonical=False):
        if den is None:
            den = {0: Fraction(1)}
        if _canonical:
            self.num = num
            self.den = den
        else:
            self.num, self.den = self._canonicalize(num, den)
        self._hash = None

    @staticmethod
    def _canonicalize(num, den):
        num = _lp_trim(num)
        den = _lp_trim(den)
        if not den:
            raise ZeroDivisionError("zero denominator in QScalar")
        if not num:
            return {}, {0: Fraction(1)}
        if set(den) == {0}:
            c = den[0]
            if c != 1:
                num = _lp_scale(num, 1 / c)
            return num, {0: Fraction(1)}
        # make both sides polynomials for the gcd step
        shift = -min(_lp_min_exp(num), _lp_min_exp(den), 0)
        n = _lp_shift(num, shift)
        d = _lp_shift(den, shift)
        g = _lp_gcd(n, d)
        if g != {0: Fraction(1)}:
            n, rn = _lp_divmod(n, g)
            d, rd = _lp_divmod(d, g)
            assert not rn and not rd
        # denominator canonical: constant term nonzero, monic
        mn = _lp_min_exp(d)
        if mn:
            n = _lp_shift(n, -mn)
            d = _lp_shift(d, -mn)
        lead = d[_lp_max_exp(d)]
        if lead != 1:
            n = _lp_scale(n, 1 / lead)
            d = _lp_scale(d, 1 / lead)
        return n, d

    # -- constructors ---------------------------------------------------

    @staticmethod
    def promote(x):
        if isinstance(x, QScalar):
            return x
        if isinstance(x, _FRACTIONABLE):
            x = Fraction(x)
            return QScalar({0: x} if x else {}, _canonical=True)
        raise TypeError(f"cannot promote {type(x).__name__} to QScalar")

    # -- structure ------------------------------------------------------

    def is_zero(self):
        return not self.num

    def is_polynomial(self):
        return self.den == {0: Fraction(1)}

    def is_rational(self):
        return self.is_polynomial() and set(self.num) <= {0}

    def as_fraction(self):
        if not self.is_rational():
            raise ValueError(f"not a pure rational: {self}")
        return self.num.get(0, Fraction(0))

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, QRadical):
            return QRadical.promote(self) + other
        other = QScalar.promote(other)
        if self.den == other.den:
            return QScalar(_lp_add(self.num, other.num), dict(self.den))
        num = _lp_add(_lp_mul(self.num, other.den), _lp_mul(other.num, self.den))
        return QScalar(num, _lp_mul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return QScalar(_lp_neg(self.num), dict(self.den), _canonical=True)

    def __sub__(self, other):
        if isinstance(other, QRadical):
            return QRadical.promote(self) - other
        return self + (-QScalar.promote(other))

    def __rsub__(self, other):
        return QScalar.promote(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, QRadical):
            return other * self
        other = QScalar.promote(other)
        if self.is_polynomial() and other.is_polynomial():
            return QScalar(_lp_mul(self.num, other.num),
                           {0: Fraction(1)}, _canonical=True)
        return QScalar(_lp_mul(self.num, other.num),
                       _lp_mul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, QRadical):
            return QRadical.promote(self) / other
        other = QScalar.promote(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero QScalar")
        return QScalar(_lp_mul(self.num, other.den),
                       _lp_mul(self.den, other.num))

    def __rtruediv__(self, other):
        return QScalar.promote(other) / self

    def __pow__(self, n):
        if not isinstance(n, int):
            raise TypeError("QScalar power must be an integer")
        if n < 0:
            return (ONE / self) ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, QRadical):
            return QRadical.promote(self) == other
        try:
            other = QScalar.promote(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self.num.items()),
                               frozenset(self.den.items())))
        return self._hash

    # -- evaluation / display ----------------------------------------------

    def evaluate(self, point):
        """Numeric value at a QPoint; a Fraction when the point allows it."""
        if isinstance(point.q0, Fraction) and all(
                e % 2 == 0 for e in self.num) and all(
                e % 2 == 0 for e in self.den):
            # integral q-powers only: evaluate exactly in q0
            num = sum((c * point.q0 ** (e // 2) for e, c in self.num.items()),
                      Fraction(0))
            den = sum((c * point.q0 ** (e // 2) for e, c in self.den.items()),
                      Fraction(0))
        else:
            u = point.sqrt_q
            num = _lp_eval(self.num, u)
            den = _lp_eval(self.den, u)
        if den == 0:
            raise ZeroDivisionError(f"denominator vanishes at q={point.q0}")
        return num / den

    def subs_q_inverse(self):
        """Image under the field automorphism q -> 1/q."""
        return QScalar({-e: c for e, c in self.num.items()},
                       {-e: c for e, c in self.den.items()})

    def __repr__(self):
        return f"QScalar({self})"

    def __str__(self):
        if self.is_polynomial():
            return _lp_str(self.num)
        return f"({_lp_str(self.num)})/({_lp_str(self.den)})"


def _lp_str(p):
    if not p:
        return "0"
    bits = []
    for e in sorted(p, reverse=True):
        c = p[e]
        if e == 0:
            bits.append(f"{c}")
        else:
            ez = Fraction(e, 2)
            power = "q" if ez == 1 else f"q^{ez}"
            if c == 1:
                bits.append(power)
            elif c == -1:
                bits.append(f"-{power}")
            else:
                bits.append(f"{c}*{power}")
    return " + ".join(bits).replace("+ -", "- ")


ZERO = QScalar({}, _canonical=True)
ONE = QScalar({0: Fraction(1)}, _canonical=True)
Q = QScalar({2: Fraction(1)}, _canonical=True)     # the generator q itself


def q_power(doubled_exponent):
    """q^(k/2) where k = doubled_exponent (an integer)."""
    return QScalar({doubled_exponent: Fraction(1)}, _canonical=True)


def from_fraction(x):
    return QScalar.promote(Fraction(x))


def q_int(two_n):
    """The q-integer [n]_q for n = two_n/2, as an exact QScalar.

    [n]_q = (q^n - q^-n)/(q - q^-1); half-integer n lands on the q^(1/2)
    exponent lattice.  evaluate(q_int(2n), q0=1) == n.
    """
    if not isinstance(two_n, int):
        raise TypeError("q_int takes the doubled index 2n as an integer")
    if two_n == 0:
        return ZERO
    num = QScalar({two_n: Fraction(1), -two_n: Fraction(-1)})
    den = QScalar({2: Fraction(1), -2: Fraction(-1)})
    return num / den


# ---------------------------------------------------------------------------
# Radical extension: finite sums  sum c_i sqrt(r_i)
# ---------------------------------------------------------------------------

def _int_square_part(n):
    """Largest a with a^2 | n (n >= 0), via trial division + isqrt check."""
    if n in (0, 1):
        return 1, n
    root = math.isqrt(n)
    if root * root == n:
        return root, 1
    a, rest = 1, n
    p = 2
    while p * p <= rest and p < 100000:
        while rest % (p * p) == 0:
            a *= p
            rest //= p * p
        p += 1 if p == 2 else 2
    root = math.isqrt(rest)
    if root * root == rest:
        return a * root, 1
    return a, rest


def _fraction_square_part(c):
    """c = s^2 * r with r square-free-ish; c must be positive."""
    sn, rn = _int_square_part(c.numerator)
    sd, rd = _int_square_part(c.denominator)
    return Fraction(sn, sd), Fraction(rn, rd)


def _poly_square_free_split(p):
    """p = content * s^2 * r with s, r monic and r square-free.

    p is a dict polynomial in Q[u] with nonnegative exponents; returns
    (content, s, r) with content a Fraction.
    """
    one = {0: Fraction(1)}
    if not p:
        return Fraction(0), dict(one), dict(one)
    lead = p[_lp_max_exp(p)]
    mono = {e: c / lead for e, c in p.items()}
    if _lp_max_exp(mono) == 0:
        return lead, dict(one), dict(one)
    deriv = _lp_trim({e - 1: c * e for e, c in mono.items() if e})
    g = _lp_gcd(mono, deriv)
    if _lp_max_exp(g) == 0:
        return lead, dict(one), mono
    w, rem = _lp_divmod(mono, g)
    assert not rem
    # mono = g*w with w = product of the distinct irreducible factors;
    # recursing on g and dividing w by the even-multiplicity part gives
    # mono = (s1*r1)^2 * (w/r1) with w/r1 square-free.
    _, s1, r1 = _poly_square_free_split(g)
    quo, rem2 = _lp_divmod(w, r1)
    assert not rem2
    return lead, _lp_mul(s1, r1), quo


def _canonical_radicand(r):
    """Split sqrt(r) = coeff * sqrt(core) with core canonical.

    core is ONE for perfect squares; otherwise the square-free residue
    (times a square-free rational and possibly a single power of u).
    """
    if r.is_zero():
        return ZERO, ONE
    # sqrt(num/den) = sqrt(num*den)/den
    p = _lp_mul(r.num, r.den)
    den = QScalar(dict(r.den), _canonical=True)
    shift = _lp_min_exp(p)
    even = shift - (shift % 2)
    p0 = _lp_shift(p, -even)              # min exponent now 0 or 1
    content, s, core = _poly_square_free_split(p0)
    neg = content < 0
    if neg:
        content = -content
    csq, crem = _fraction_square_part(content)
    coeff = QScalar(_lp_shift(s, even // 2)) * QScalar.promote(csq) / den
    core_scalar = QScalar(_lp_scale(core, crem))
    if neg:
        core_scalar = -core_scalar
    if core_scalar == ONE:
        return coeff, ONE
    return coeff, core_scalar


def sqrt_scalar(x):
    """Formal square root of a QScalar, as a QRadical (exact when square)."""
    x = QScalar.promote(x)
    coeff, core = _canonical_radicand(x)
    if coeff.is_zero():
        return QRadical({})
    return QRadical({core: coeff})


class QRadical:
    """Finite sum  sum_i c_i * sqrt(r_i)  over Q(q^(1/2)).

    Radicands are canonical, so sqrt(u)*sqrt(v) simplifies to sqrt(uv)
    with square factors extracted, and squaring a single term always
    lands back in QScalar.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        merged = {}
        for rad, coeff in (terms or {}).items():
            coeff = QScalar.promote(coeff)
            if coeff.is_zero():
                continue
            rad = QScalar.promote(rad)
            acc = merged.get(rad)
            merged[rad] = coeff if acc is None else acc + coeff
        self.terms = {r: c for r, c in merged.items() if not c.is_zero()}
        self._hash = None

    @staticmethod
    def promote(x):
        if isinstance(x, QRadical):
            return x
        x = QScalar.promote(x)
        return QRadical({ONE: x})

    def is_zero(self):
        return not self.terms

    def is_scalar(self):
        return set(self.terms) <= {ONE}

    def as_scalar(self):
        if not self.is_scalar():
            raise ValueError(f"radical does not simplify to Q(q^(1/2)): {self}")
        return self.terms.get(ONE, ZERO)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = QRadical.promote(other)
        out = dict(self.terms)
        for r, c in other.terms.items():
            s = out.get(r, ZERO) + c
            if s.is_zero():
                out.pop(r, None)
            else:
                out[r] = s
        return QRadical(out)

    __radd__ = __add__

    def __neg__(self):
        return QRadical({r: -c for r, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-QRadical.promote(other))

    def __rsub__(self, other):
        return QRadical.promote(other) + (-self)

    def __mul__(self, other):
        other = QRadical.promote(other)
        out = {}
        for r1, c1 in self.terms.items():
            for r2, c2 in other.terms.items():
                c = c1 * c2
                if r1 == r2:
                    rad, cc = ONE, c * r1
                elif r1 == ONE:
                    rad, cc = r2, c
                elif r2 == ONE:
                    rad, cc = r1, c
                else:
                    extra, rad = _canonical_radicand(r1 * r2)
                    cc = c * extra
                acc = out.get(rad, ZERO) + cc
                if acc.is_zero():
                    out.pop(rad, None)
                else:
                    out[rad] = acc
        return QRadical(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, QRadical) and not other.is_scalar():
            terms = list(other.terms.items())
            if len(terms) == 1:
                r, c = terms[0]
                return self * QRadical({r: ONE / (c * r)})
            raise ValueError("division by a multi-term radical")
        if isinstance(other, QRadical):
            other = other.as_scalar()
        other = QScalar.promote(other)
        return QRadical({r: c / other for r, c in self.terms.items()})

    def __rtruediv__(self, other):
        return QRadical.promote(other) / self

    def square(self):
        """self*self; returned as a QScalar whenever it is one."""
        out = self * self
        return out.as_scalar() if out.is_scalar() else out

    def __eq__(self, other):
        try:
            other = QRadical.promote(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def evaluate(self, point):
        total = 0.0
        for r, c in self.terms.items():
            rv = r.evaluate(point)
            if rv < 0:
                raise ValueError(f"negative radicand {r} at q={point.q0}")
            total += float(c.evaluate(point)) * math.sqrt(float(rv))
        return total

    def __repr__(self):
        if not self.terms:
            return "QRadical(0)"
        bits = []
        for r, c in sorted(self.terms.items(), key=lambda t: str(t[0])):
            if r == ONE:
                bits.append(f"{c}")
            else:
                bits.append(f"({c})*sqrt({r})")
        return "QRadical(" + " + ".join(bits) + ")"


# ---------------------------------------------------------------------------
# Evaluation points
# ---------------------------------------------------------------------------

class QPoint:
    """A numeric evaluation point q0 > 0, with b_q = max(q0, 1/q0).

    A rational q0 whose square root is rational keeps evaluation exact;
    anything else evaluates through floats.
    """

    __slots__ = ("q0", "sqrt_q")

    def __init__(self, q0):
        if isinstance(q0, str):
            q0 = Fraction(q0)
        if isinstance(q0, _FRACTIONABLE):
            q0 = Fraction(q0)
            if q0 <= 0:
                raise ValueError("q0 must be positive")
            root = _fraction_sqrt(q0)
            self.sqrt_q = root if root is not None else math.sqrt(float(q0))
        else:
            q0 = float(q0)
            if q0 <= 0:
                raise ValueError("q0 must be positive")
            self.sqrt_q = math.sqrt(q0)
        self.q0 = q0

    @property
    def b_q(self):
        return max(self.q0, 1 / self.q0)

    @property
    def is_one(self):
        return self.q0 == 1

    def __repr__(self):
        return f"QPoint({self.q0})"


def _fraction_sqrt(x):
    rn = math.isqrt(x.numerator)
    rd = math.isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


def evaluate(x, point):
    """Numeric value of an exact scalar at a QPoint."""
    if isinstance(x, (QScalar, QRadical)):
        return x.evaluate(point)
    if isinstance(x, _FRACTIONABLE):
        return Fraction(x)
    if isinstance(x, float):
        return x
    raise TypeError(f"cannot evaluate {type(x).__name__}")


def bq_asymptotic_ratio(n_max, point):
    """Ratios [n]_q / b_q^n for n = 1..n_max at a numeric point q0 != 1.

    With b = b_q one has [n]_q = (b^n - b^-n)/(b - b^-1), so the ratios
    increase monotonically from 1/b towards 1/(1 - b^-2) and stay inside
    a fixed positive interval independent of n.
    """
    if point.is_one:
        raise ValueError("b_q asymptotics degenerate at q0 = 1; [n]_1 = n")
    out = []
    b = float(point.b_q)
    for n in range(1, n_max + 1):
        val = float(evaluate(q_int(2 * n), point))
        out.append(val / b ** n)
    return out
