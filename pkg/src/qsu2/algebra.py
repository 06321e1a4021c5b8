"""The polynomial Hopf *-algebra of the quantum SU(2).

Generators a, b, c, d with the relations

    ba = q ab,  ca = q ac,  db = q bd,  dc = q cd,  bc = cb,
    ad = 1 + q^-1 bc,       da = 1 + q bc,

unit determinant ad - q^-1 bc = 1, and the compact *-structure

    a* = d,  b* = -q^-1 c,  c* = -q b,  d* = a.

This relation/star pair is the one that passes the Peter-Weyl
orthogonality suite with the quantum-trace matrix diag(q^-2i): the
defining tests, not any particular printed convention, pin it down.

Normal form: every element is a combination of monomials
a^i b^j c^k (i >= 0) or d^i b^j c^k (i >= 1); rewriting is oriented
toward this PBW order and confluence is asserted by tests.

The Haar state is computed from invariance: it vanishes off the
doubly-graded-zero component (spanned by (bc)^k), and h((bc)^k) is
obtained by solving (h (x) id) Delta((bc)^k) = h((bc)^k) 1 degree by
degree.  No closed form is hard-coded.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .qarith import QScalar, QRadical, ZERO, ONE, q_power

__all__ = [
    "Spin", "NormalMonomial", "AlgebraElement", "TensorElement",
    "A", "B", "C", "D", "UNIT",
    "multiply", "coproduct", "counit", "antipode", "star", "grade",
    "row_grade", "haar", "l2_inner", "random_element",
]


class Spin(NamedTuple):
    """A spin l in (1/2)N, stored as twice_l."""
    twice_l: int

    @property
    def l(self):
        return Fraction(self.twice_l, 2)

    @property
    def dim(self):
        return self.twice_l + 1

    def weights(self):
        """Doubled weights 2m for m = -l..l."""
        return range(-self.twice_l, self.twice_l + 1, 2)

    def __str__(self):
        return str(self.l)


class NormalMonomial(NamedTuple):
    """a^i b^j c^k (head 'a', i >= 0) or d^i b^j c^k (head 'd', i >= 1)."""
    head: str
    head_pow: int
    b_pow: int
    c_pow: int

    def degree(self):
        return self.head_pow + self.b_pow + self.c_pow

    def __str__(self):
        if self.degree() == 0:
            return "1"
        bits = []
        if self.head_pow:
            bits.append(self.head if self.head_pow == 1
                        else f"{self.head}^{self.head_pow}")
        if self.b_pow:
            bits.append("b" if self.b_pow == 1 else f"b^{self.b_pow}")
        if self.c_pow:
            bits.append("c" if self.c_pow == 1 else f"c^{self.c_pow}")
        return "*".join(bits)


_ID = NormalMonomial("a", 0, 0, 0)


def grade(mono):
    """The Z-grading: number of a, c letters minus number of b, d."""
    i, j, k = mono.head_pow, mono.b_pow, mono.c_pow
    return (i if mono.head == "a" else -i) - j + k


def row_grade(mono):
    """The companion grading from the left coaction (a, b: +1; c, d: -1)."""
    i, j, k = mono.head_pow, mono.b_pow, mono.c_pow
    return (i if mono.head == "a" else -i) + j - k


# ---------------------------------------------------------------------------
# normal-form multiplication
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _head_mul_ad(p, r):
    """Normal form of a^p d^r, as a tuple of (monomial, coeff) pairs.

    a d = 1 + q^-1 bc, and bc hops left over d with q^-2 per d.
    """
    if p == 0:
        return ((NormalMonomial("d", r, 0, 0) if r else _ID, ONE),)
    if r == 0:
        return ((NormalMonomial("a", p, 0, 0), ONE),)
    out = {}
    for mono, coeff in _head_mul_ad(p - 1, r - 1):
        _acc(out, mono, coeff)
        bumped = mono._replace(b_pow=mono.b_pow + 1, c_pow=mono.c_pow + 1)
        _acc(out, bumped, coeff * q_power(2 * (1 - 2 * r)))
    return tuple(out.items())


@lru_cache(maxsize=None)
def _head_mul_da(r, p):
    """Normal form of d^r a^p.

    d a = 1 + q bc, and bc hops right over a... rather: a^p hops left over
    bc with q^2 per a, leaving d^(r-1) a^(p-1) (1 + q^(2p-1) bc).
    """
    if r == 0:
        return ((NormalMonomial("a", p, 0, 0) if p else _ID, ONE),)
    if p == 0:
        return ((NormalMonomial("d", r, 0, 0), ONE),)
    out = {}
    for mono, coeff in _head_mul_da(r - 1, p - 1):
        _acc(out, mono, coeff)
        bumped = mono._replace(b_pow=mono.b_pow + 1, c_pow=mono.c_pow + 1)
        _acc(out, bumped, coeff * q_power(2 * (2 * p - 1)))
    return tuple(out.items())


def _acc(out, mono, coeff):
    acc = out.get(mono)
    acc = coeff if acc is None else acc + coeff
    if isinstance(acc, QScalar) and acc.is_zero():
        out.pop(mono, None)
    elif isinstance(acc, QRadical) and acc.is_zero():
        out.pop(mono, None)
    else:
        out[mono] = acc


@lru_cache(maxsize=None)
def _mono_mul(m1, m2):
    """Product of two normal monomials as a tuple of (monomial, coeff)."""
    h1, i1, j1, k1 = m1
    h2, i2, j2, k2 = m2
    # slide the head letters of m2 leftwards past b^j1 c^k1
    swaps = i2 * (j1 + k1)
    factor = q_power(2 * swaps if h2 == "a" else -2 * swaps)
    jt, kt = j1 + j2, k1 + k2
    if i1 == 0 or i2 == 0 or h1 == h2:
        if i1 and i2:
            head, hp = h1, i1 + i2
        elif i1:
            head, hp = h1, i1
        elif i2:
            head, hp = h2, i2
        else:
            head, hp = "a", 0
        return ((NormalMonomial(head if hp else "a", hp, jt, kt), factor),)
    pieces = _head_mul_ad(i1, i2) if h1 == "a" else _head_mul_da(i1, i2)
    out = {}
    for mono, coeff in pieces:
        joined = mono._replace(b_pow=mono.b_pow + jt, c_pow=mono.c_pow + kt)
        _acc(out, joined, coeff * factor)
    return tuple(out.items())


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------

class AlgebraElement:
    """A finite combination of normal monomials with exact coefficients.

    Coefficients are QScalar (or, on demand, QRadical); the zero element
    stores no terms.  All operations return new elements.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        cleaned = {}
        for mono, coeff in (terms or {}).items():
            if isinstance(coeff, (int, Fraction)):
                coeff = QScalar.promote(coeff)
            if coeff.is_zero():
                continue
            cleaned[mono] = coeff
        self.terms = cleaned

    # -- constructors ---------------------------------------------------

    @staticmethod
    def scalar(c):
        c = c if isinstance(c, (QScalar, QRadical)) else QScalar.promote(c)
        return AlgebraElement({_ID: c})

    @staticmethod
    def generator(name):
        if name in ("a", "d"):
            return AlgebraElement({NormalMonomial(name, 1, 0, 0): ONE})
        if name == "b":
            return AlgebraElement({NormalMonomial("a", 0, 1, 0): ONE})
        if name == "c":
            return AlgebraElement({NormalMonomial("a", 0, 0, 1): ONE})
        raise ValueError(f"unknown generator {name!r}")

    # -- linear structure ------------------------------------------------

    def __add__(self, other):
        other = _promote_elem(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            _acc(out, mono, coeff)
        return AlgebraElement(out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_promote_elem(other))

    def __rsub__(self, other):
        return _promote_elem(other) + (-self)

    def scale(self, c):
        if isinstance(c, (int, Fraction)):
            c = QScalar.promote(c)
        return AlgebraElement({m: cc * c for m, cc in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QScalar, QRadical)):
            return self.scale(other)
        other = _promote_elem(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c12 = c1 * c2
                for mono, coeff in _mono_mul(m1, m2):
                    _acc(out, mono, coeff * c12)
        return AlgebraElement(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, QScalar, QRadical)):
            return self.scale(other)
        return _promote_elem(other) * self

    def __eq__(self, other):
        try:
            other = _promote_elem(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((m.degree() for m in self.terms), default=0)

    def coefficient(self, mono):
        return self.terms.get(mono, ZERO)

    def evaluate_coefficients(self, point):
        """Map monomial -> numeric coefficient at a QPoint."""
        from .qarith import evaluate
        return {m: evaluate(c, point) for m, c in self.terms.items()}

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for mono in sorted(self.terms, key=lambda m: (m.degree(), str(m))):
            bits.append(f"({self.terms[mono]})*{mono}")
        return " + ".join(bits)


def _promote_elem(x):
    if isinstance(x, AlgebraElement):
        return x
    if isinstance(x, (int, Fraction, QScalar, QRadical)):
        return AlgebraElement.scalar(x)
    raise TypeError(f"cannot promote {type(x).__name__} to AlgebraElement")


A = AlgebraElement.generator("a")
B = AlgebraElement.generator("b")
C = AlgebraElement.generator("c")
D = AlgebraElement.generator("d")
UNIT = AlgebraElement.scalar(1)


def multiply(x, y):
    """Normal form of the product xy."""
    return _promote_elem(x) * _promote_elem(y)


# ---------------------------------------------------------------------------
# coalgebra structure
# ---------------------------------------------------------------------------

class TensorElement:
    """A finite sum of monomial tensor pairs with exact coefficients."""

    __slots__ = ("pairs",)

    def __init__(self, pairs=None):
        cleaned = {}
        for key, coeff in (pairs or {}).items():
            if isinstance(coeff, (int, Fraction)):
                coeff = QScalar.promote(coeff)
            if coeff.is_zero():
                continue
            cleaned[key] = coeff
        self.pairs = cleaned

    def __add__(self, other):
        out = dict(self.pairs)
        for key, coeff in other.pairs.items():
            _acc(out, key, coeff)
        return TensorElement(out)

    def __mul__(self, other):
        out = {}
        for (l1, r1), c1 in self.pairs.items():
            for (l2, r2), c2 in other.pairs.items():
                c12 = c1 * c2
                for ml, cl in _mono_mul(l1, l2):
                    for mr, cr in _mono_mul(r1, r2):
                        _acc(out, (ml, mr), c12 * cl * cr)
        return TensorElement(out)

    def scale(self, c):
        return TensorElement({k: cc * c for k, cc in self.pairs.items()})

    def __eq__(self, other):
        return isinstance(other, TensorElement) and self.pairs == other.pairs

    def legs(self):
        return dict(self.pairs)

    def __repr__(self):
        bits = [f"({c})*{l}(x){r}" for (l, r), c in self.pairs.items()]
        return " + ".join(bits) if bits else "0"


_GEN_COPRODUCT = {
    "a": ((("a", "a"), 1), (("b", "c"), 1)),
    "b": ((("a", "b"), 1), (("b", "d"), 1)),
    "c": ((("c", "a"), 1), (("d", "c"), 1)),
    "d": ((("c", "b"), 1), (("d", "d"), 1)),
}


def _gen_mono(name):
    if name in ("a", "d"):
        return NormalMonomial(name, 1, 0, 0)
    return NormalMonomial("a", 0, 1 if name == "b" else 0,
                          1 if name == "c" else 0)


@lru_cache(maxsize=None)
def _coproduct_mono(mono):
    h, i, j, k = mono
    if i == 0 and j == 0 and k == 0:
        return TensorElement({(_ID, _ID): ONE})
    if k > 0:
        prefix, gen = mono._replace(c_pow=k - 1), "c"
    elif j > 0:
        prefix, gen = mono._replace(b_pow=j - 1), "b"
    else:
        prefix, gen = mono._replace(head_pow=i - 1), h
    delta_gen = TensorElement({
        (_gen_mono(l), _gen_mono(r)): QScalar.promote(c)
        for (l, r), c in _GEN_COPRODUCT[gen]})
    return _coproduct_mono(prefix) * delta_gen


def coproduct(x):
    """Delta(x) as a TensorElement; an algebra homomorphism by build."""
    x = _promote_elem(x)
    out = TensorElement({})
    for mono, coeff in x.terms.items():
        out = out + _coproduct_mono(mono).scale(coeff)
    return out


def counit(x):
    """epsilon: a, d -> 1; b, c -> 0."""
    x = _promote_elem(x)
    total = ZERO
    for mono, coeff in x.terms.items():
        if mono.b_pow == 0 and mono.c_pow == 0:
            total = total + coeff
    return total


def star(x):
    """The *-involution: a*=d, b*=-q^-1 c, c*=-q b, d*=a (q real).

    Each generator maps to a scalar multiple of a single generator, so a
    normal monomial maps to a single normal monomial; only a commutation
    factor from re-normal-ordering appears.
    """
    x = _promote_elem(x)
    out = {}
    for mono, coeff in x.terms.items():
        h, i, j, k = mono
        # (h^i b^j c^k)* = (c*)^k (b*)^j (h*)^i
        #               = (-q)^k b^k (-q^-1)^j c^j (h*)^i
        scale = (q_power(-2) * -1) ** j * (q_power(2) * -1) ** k
        if h == "a":
            new_head, hp = ("d", i) if i else ("a", 0)
            # move d^i left past b^k c^j: factor q^{-i(j+k)}
            scale = scale * q_power(-2 * i * (j + k))
        else:
            new_head, hp = "a", i
            scale = scale * q_power(2 * i * (j + k))
        new = NormalMonomial(new_head if hp else "a", hp, k, j)
        _acc(out, new, coeff * scale)
    return AlgebraElement(out)


def antipode(x):
    """The antipode: S(a)=d, S(b)=-q b, S(c)=-q^-1 c, S(d)=a."""
    x = _promote_elem(x)
    out = {}
    for mono, coeff in x.terms.items():
        h, i, j, k = mono
        # S(h^i b^j c^k) = S(c)^k S(b)^j S(h)^i
        scale = (q_power(2) * -1) ** j * (q_power(-2) * -1) ** k
        if h == "a":
            new_head, hp = ("d", i) if i else ("a", 0)
            scale = scale * q_power(-2 * i * (j + k))
        else:
            new_head, hp = "a", i
            scale = scale * q_power(2 * i * (j + k))
        new = NormalMonomial(new_head if hp else "a", hp, j, k)
        _acc(out, new, coeff * scale)
    return AlgebraElement(out)


# ---------------------------------------------------------------------------
# Haar state
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _delta_bc_power(k):
    if k == 0:
        return TensorElement({(_ID, _ID): ONE})
    bc = NormalMonomial("a", 0, 1, 1)
    return _delta_bc_power(k - 1) * _coproduct_mono(bc)


@lru_cache(maxsize=None)
def _haar_bc(k):
    """h((bc)^k), from invariance (h (x) id) Delta = h(.) 1, solved by degree."""
    if k == 0:
        return ONE
    delta = _delta_bc_power(k)
    # (h (x) id) Delta((bc)^k) = sum_s h_s * E_s  with  E_s collecting the
    # second legs whose first leg is (bc)^s; the invariance identity
    # sum_{s<k} h_s E_s + h_k E_k = h_k * 1 determines h_k.
    collected = {}
    for (ml, mr), coeff in delta.pairs.items():
        if ml.head_pow == 0 and ml.b_pow == ml.c_pow:
            s = ml.b_pow
            bucket = collected.setdefault(s, {})
            _acc(bucket, mr, coeff)
    known = AlgebraElement({})
    for s, bucket in collected.items():
        if s < k:
            known = known + AlgebraElement(bucket).scale(_haar_bc(s))
    ek = AlgebraElement(collected.get(k, {}))
    lhs = AlgebraElement({_ID: ONE}) - ek      # (1 - E_k) * h_k = known
    probe = next(iter(lhs.terms))
    hk = known.coefficient(probe) / lhs.coefficient(probe)
    # consistency across every monomial, not just the probe
    residual = lhs.scale(hk) - known
    if not residual.is_zero():
        raise ArithmeticError(f"Haar invariance system inconsistent at k={k}")
    return hk


def haar(x):
    """The Haar state h(x), exact.

    h kills every monomial with a nonzero grade in either of the two
    gradings (invariance forces this); on the doubly-graded-zero
    component, spanned by (bc)^k, the value comes from the invariance
    linear system.
    """
    x = _promote_elem(x)
    total = ZERO
    for mono, coeff in x.terms.items():
        if mono.head_pow == 0 and mono.b_pow == mono.c_pow:
            total = total + coeff * _haar_bc(mono.b_pow)
    return total


def l2_inner(f, g):
    """(f, g) = h(f g*): linear in f, conjugate-linear in g."""
    return haar(_promote_elem(f) * star(g))


# ---------------------------------------------------------------------------
# seeded random elements (shared by tests and the CLI)
# ---------------------------------------------------------------------------

def random_element(rng, max_degree=3, n_terms=4, heads="ad"):
    """Random combination of normal monomials, coefficients in {-3..3}\\{0}."""
    terms = {}
    for _ in range(n_terms):
        deg = rng.randint(0, max_degree)
        head = rng.choice(heads)
        if head == "d":
            hp = rng.randint(1, deg) if deg >= 1 else 0
            if hp == 0:
                head = "a"
        else:
            hp = rng.randint(0, deg)
        rest = deg - hp
        j = rng.randint(0, rest)
        kk = rest - j
        mono = NormalMonomial(head if hp else "a", hp, j, kk)
        coeff = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]))
        _acc(terms, mono, QScalar.promote(coeff))
    return AlgebraElement(terms)
