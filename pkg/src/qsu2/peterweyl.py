"""Peter-Weyl coefficient matrices of the quantum SU(2).

For each spin l the (2l+1)x(2l+1) matrix T^l of algebra elements is built
by coacting on the degree-2l monomial basis of the quantum plane
(y x = q x y,  x -> x(x)a + y(x)c,  y -> x(x)b + y(x)d), so the
corepresentation law and the counit normalization hold by construction.
T^(1/2) is the generator matrix [[a, b], [c, d]] with weights ascending
-l..l; rows and columns are indexed by doubled weights.

Entries are kept unnormalized together with squared row normalizers
N^l_m, so every orthogonality and product-decomposition identity can be
tested in pure Q(q^(1/2)) arithmetic; the unitary entries
t^l_mn = sqrt(N_m/N_n) T^l_mn are materialized only on demand.

The quantum-trace weights are q^l_i = q^(-2i), i = -l..l, with quantum
dimension d_l = [2l+1]_q = Tr Q^l = Tr (Q^l)^(-1).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .qarith import QScalar, QRadical, ZERO, ONE, q_power, q_int, sqrt_scalar
from .algebra import AlgebraElement, haar, star, _promote_elem

__all__ = ["PWTable", "spin_range", "quantum_dimension", "q_weight"]


def quantum_dimension(twice_l):
    """d_l = [2l+1]_q."""
    return q_int(2 * (twice_l + 1))


def q_weight(tw):
    """Q-matrix entry at doubled weight tw: q^(-2i) with i = tw/2."""
    return q_power(-2 * tw)


def spin_range(twice_l_max):
    """All spins 0, 1/2, ..., l_max as doubled integers."""
    return range(0, twice_l_max + 1)


# -- quantum plane helpers ---------------------------------------------------
# a plane tensor is a dict  (x_pow, y_pow) -> AlgebraElement

def _plane_mul(p1, p2):
    out = {}
    for (a1, b1), f1 in p1.items():
        for (a2, b2), f2 in p2.items():
            # y^b1 x^a2 = q^(b1 a2) x^a2 y^b1
            coeff = q_power(2 * b1 * a2)
            key = (a1 + a2, b1 + b2)
            term = (f1 * f2).scale(coeff)
            if key in out:
                out[key] = out[key] + term
            else:
                out[key] = term
    return {k: v for k, v in out.items() if not v.is_zero()}


class PWTable:
    """Coefficient matrices, normalizers and product decompositions.

    All data is exact and symbolic in q.  The table is built lazily up
    to the configured spin cap; requests beyond the cap raise ValueError
    (inside the cap there is no truncation error of any kind).
    """

    def __init__(self, twice_l_max=6):
        self.twice_l_max = twice_l_max
        self._entries = {}      # twice_l -> {(tm, tn): AlgebraElement}
        self._norms = {}        # twice_l -> {tm: QScalar}
        self._gram = {}         # (twice_l, tm, tn) -> QScalar h(T T*)
        self._star_entries = {}
        self._clebsch = {}      # (twice_k, twice_s) -> coefficient map
        self._clebsch_sq = {}

    # -- construction ----------------------------------------------------

    def _check(self, twice_l):
        if twice_l < 0 or twice_l > self.twice_l_max:
            raise ValueError(
                f"spin {Fraction(twice_l, 2)} outside table cap "
                f"{Fraction(self.twice_l_max, 2)}")

    @staticmethod
    @lru_cache(maxsize=None)
    def _coaction_powers(letter, power):
        from .algebra import A, B, C, D
        if power == 0:
            return {(0, 0): AlgebraElement.scalar(1)}
        base = {(1, 0): A, (0, 1): C} if letter == "x" else \
               {(1, 0): B, (0, 1): D}
        prev = PWTable._coaction_powers(letter, power - 1)
        return _plane_mul(prev, base)

    def entries(self, twice_l):
        """The unnormalized matrix {(tm, tn): T^l_mn}."""
        self._check(twice_l)
        tl = twice_l
        if tl not in self._entries:
            mat = {}
            for tn in range(-tl, tl + 1, 2):
                x_pow = (tl - tn) // 2
                y_pow = (tl + tn) // 2
                col = _plane_mul(self._coaction_powers("x", x_pow),
                                 self._coaction_powers("y", y_pow))
                for (xa, yb), f in col.items():
                    tm = yb * 2 - tl        # v_m = x^(l-m) y^(l+m)
                    assert xa + yb == tl and xa == (tl - tm) // 2
                    mat[(tm, tn)] = f
            self._entries[tl] = mat
        return self._entries[tl]

    def entry(self, twice_l, tm, tn):
        return self.entries(twice_l)[(tm, tn)]

    def star_entry(self, twice_l, tm, tn):
        key = (twice_l, tm, tn)
        if key not in self._star_entries:
            self._star_entries[key] = star(self.entry(twice_l, tm, tn))
        return self._star_entries[key]

    def gram(self, twice_l, tm, tn):
        """h(T_mn (T_mn)*), cached."""
        key = (twice_l, tm, tn)
        if key not in self._gram:
            t = self.entry(twice_l, tm, tn)
            self._gram[key] = haar(t * self.star_entry(twice_l, tm, tn))
        return self._gram[key]

    def norm_sq(self, twice_l):
        """Squared row normalizers {tm: N^l_m}.

        Pinned through the first column: the unitary entries must satisfy
        h(t_mn t_mn*) = q_n / d_l, so with n = -l,
        N_m = N_(-l) (q_(-l)/d_l) / h(T_(m,-l) T_(m,-l)*), and N_(-l) = 1.
        Every other instance of the orthogonality relations is then a
        genuine theorem, checked by the test suite.
        """
        self._check(twice_l)
        tl = twice_l
        if tl not in self._norms:
            d = quantum_dimension(tl)
            base = q_weight(-tl) / d
            norms = {}
            for tm in range(-tl, tl + 1, 2):
                norms[tm] = base / self.gram(tl, tm, -tl)
            scale = norms[-tl]
            self._norms[tl] = {tm: v / scale for tm, v in norms.items()}
        return self._norms[tl]

    def gauge_ratio_sq(self, twice_l, tm, tn):
        """N_m / N_n: the square of the unitary gauge factor gamma_m/gamma_n."""
        norms = self.norm_sq(twice_l)
        return norms[tm] / norms[tn]

    def unitary_entry(self, twice_l, tm, tn):
        """t^l_mn = sqrt(N_m/N_n) T^l_mn, with a QRadical coefficient."""
        ratio = sqrt_scalar(self.gauge_ratio_sq(twice_l, tm, tn))
        t = self.entry(twice_l, tm, tn)
        return AlgebraElement({m: ratio * c for m, c in t.terms.items()})

    def matrix_coefficients(self, twice_l):
        """The table entry for one spin: matrix of entries plus norms."""
        return {
            "twice_l": twice_l,
            "entries": self.entries(twice_l),
            "norm_sq": self.norm_sq(twice_l),
            "quantum_dimension": quantum_dimension(twice_l),
            "q_weights": {tw: q_weight(tw)
                          for tw in range(-twice_l, twice_l + 1, 2)},
        }

    # -- expansion in the coefficient basis --------------------------------

    def pw_expand(self, f):
        """Coefficients {twice_l: {(tm,tn): c}} with f = sum c T^l_mn.

        Every entry T^l_mn is homogeneous of bidegree (-tm, -tn) in the
        two weight gradings, so each graded component of f meets exactly
        one matrix position per spin; spins are scanned up to the
        polynomial degree of f (a degree-D element lives inside spins
        <= D), and exactness is asserted through the final residual.
        """
        from .algebra import grade, row_grade

        f = _promote_elem(f)
        out = {}
        if f.is_zero():
            return out
        deg = f.degree()
        if deg > self.twice_l_max:
            raise ValueError(
                f"degree {deg} exceeds spin cap {self.twice_l_max}/2 support")
        # split into bigraded components
        components = {}
        for mono, coeff in f.terms.items():
            key = (row_grade(mono), grade(mono))
            components.setdefault(key, {})[mono] = coeff
        residual = AlgebraElement({})
        for (gr, gc), terms in components.items():
            piece = AlgebraElement(terms)
            tm, tn = -gr, -gc
            for tl in range(deg, abs(max(abs(tm), abs(tn))) - 1, -1):
                if abs(tm) > tl or abs(tn) > tl or (tl - tm) % 2:
                    continue
                num = haar(piece * self.star_entry(tl, tm, tn))
                if num.is_zero():
                    continue
                c = num / self.gram(tl, tm, tn)
                out.setdefault(tl, {})[(tm, tn)] = c
                piece = piece - self.entry(tl, tm, tn).scale(c)
            residual = residual + piece
        if not residual.is_zero():
            raise ArithmeticError("Peter-Weyl expansion left a residual")
        return out

    def reconstruct(self, coeffs):
        out = AlgebraElement({})
        for tl, mat in coeffs.items():
            for (tm, tn), c in mat.items():
                out = out + self.entry(tl, tm, tn).scale(c)
        return out

    # -- product decomposition ---------------------------------------------

    def clebsch_coefficients(self, twice_k, twice_s):
        """Expansion coefficients of t^k_ij t^s_pr in the unitary basis.

        Returns {(ti,tj,tp,tr,tm,tu,tt): C} where

            t^k_ij t^s_pr = sum_m sum_(u,t) C * t^m_ut

        holds exactly, m running over |k-s|..k+s.  Both weight gradings
        are conserved, so only (u, t) = (i+p, j+r) contributes.  C is a
        QRadical in general; its square is always a plain QScalar.
        """
        self._check(twice_k + twice_s)
        cache_key = (twice_k, twice_s)
        if cache_key in self._clebsch:
            return self._clebsch[cache_key]
        out = {}
        ek, es = self.entries(twice_k), self.entries(twice_s)
        for (ti, tj) in _index_pairs(twice_k):
            for (tp, tr) in _index_pairs(twice_s):
                prod = ek[(ti, tj)] * es[(tp, tr)]
                expansion = self.pw_expand(prod)
                for tm, mat in expansion.items():
                    for (tu, tt), c_t in mat.items():
                        # gauge transport T-basis -> unitary basis
                        ratio = (self.gauge_ratio_sq(twice_k, ti, tj)
                                 * self.gauge_ratio_sq(twice_s, tp, tr)
                                 * self.gauge_ratio_sq(tm, tt, tu))
                        val = sqrt_scalar(ratio) * c_t
                        if isinstance(val, QRadical) and val.is_scalar():
                            val = val.as_scalar()
                        out[(ti, tj, tp, tr, tm, tu, tt)] = val
        self._clebsch[cache_key] = out
        return out

    def clebsch_squared(self, twice_k, twice_s):
        """{keys: |C|^2} in pure QScalar arithmetic."""
        cache_key = (twice_k, twice_s)
        if cache_key in self._clebsch_sq:
            return self._clebsch_sq[cache_key]
        out = {}
        for key, val in self.clebsch_coefficients(twice_k, twice_s).items():
            sq = val.square() if isinstance(val, QRadical) else val * val
            out[key] = sq
        self._clebsch_sq[cache_key] = out
        return out

    # -- identity suites (used by tests and the CLI) -------------------------

    def orthogonality_violations(self, twice_l_cap):
        """Exact check of both Peter-Weyl orthogonality relations.

        Returns a list of violation descriptions (empty when the suite
        passes) covering all spins l, l' <= cap and all index tuples:

            h((t_ij)* t'_kl) = delta delta delta / (d_l q_i)
            h(t_ij (t'_kl)*) = delta delta delta q_j / d_l
        """
        bad = []
        spins = [tl for tl in spin_range(twice_l_cap)]
        for tl1 in spins:
            for tl2 in spins:
                for (ti, tj) in _index_pairs(tl1):
                    for (tk, tn) in _index_pairs(tl2):
                        first = haar(self.star_entry(tl1, ti, tj)
                                     * self.entry(tl2, tk, tn))
                        second = haar(self.entry(tl1, ti, tj)
                                      * self.star_entry(tl2, tk, tn))
                        same = tl1 == tl2 and ti == tk and tj == tn
                        if not same:
                            if not first.is_zero():
                                bad.append(("first", tl1, ti, tj, tl2, tk, tn))
                            if not second.is_zero():
                                bad.append(("second", tl1, ti, tj, tl2, tk, tn))
                            continue
                        d = quantum_dimension(tl1)
                        ratio = self.gauge_ratio_sq(tl1, ti, tj)
                        ok1 = ratio * first == ONE / (d * q_weight(ti))
                        ok2 = ratio * second == q_weight(tj) / d
                        if not ok1:
                            bad.append(("first-diag", tl1, ti, tj))
                        if not ok2:
                            bad.append(("second-diag", tl1, ti, tj))
        return bad

    def trace_identity_holds(self, twice_l):
        """Tr Q^l == Tr (Q^l)^(-1) == d_l, exactly."""
        tq = sum((q_weight(tw) for tw in range(-twice_l, twice_l + 1, 2)),
                 ZERO)
        tq_inv = sum((ONE / q_weight(tw)
                      for tw in range(-twice_l, twice_l + 1, 2)), ZERO)
        d = quantum_dimension(twice_l)
        return tq == d and tq_inv == d


def _index_pairs(twice_l):
    rng = range(-twice_l, twice_l + 1, 2)
    return [(tm, tn) for tm in rng for tn in rng]
