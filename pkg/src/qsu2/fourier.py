"""Fourier analysis on the dual of the quantum SU(2).

The transform pairs an algebra element f with its matrix coefficients
fhat(l)_ij = h(f (t^l_ji)*) over the unitary Peter-Weyl entries; the
inverse is f = sum_l d_l Tr((Q^l)^-1 fhat(l) t^l).  Both directions are
exact: entries are QScalar or single-term QRadical values whose gauge
radicals cancel against the entries' own normalizers on the way back.

Dual-space norms follow the quantum-dimension weighting

    ||sigma||_p = ( sum_l d_l n_l (||sigma(l)||_HS / sqrt(n_l))^p )^(1/p),

with ||sigma(l)||_HS^2 = Tr (Q^l)^-1 sigma sigma* = sum_m q^(2m) sum_n
|sigma_mn|^2 (the displayed trace is homogeneous of degree two, so it is
read as the squared norm).  The Paley constant, the classical-limit
quadrature oracle for L^p norms, and the inequality verification harness
(Hausdorff-Young, Paley, Hausdorff-Young-Paley, Hardy-Littlewood, and
the Dirac-weighted variant) live here as well.

L^p(G) norms at q != 1 are only available for p = 2 (through the Haar
state); the harness verifies the q-generic Fourier-side quantities
exactly and the full two-sided inequalities in the classical limit.
"""

from __future__ import annotations

import math
from fractions import Fraction
import numpy as np

from .qarith import (
    QScalar, QRadical, QPoint, ZERO, ONE, q_power, sqrt_scalar, evaluate,
)
from .algebra import AlgebraElement, haar, star, _promote_elem, random_element
from .peterweyl import quantum_dimension, q_weight, spin_range

__all__ = [
    "FourierArray", "DualWeightTable",
    "fourier_transform", "inverse_fourier",
    "hs_norm_sq", "hs_norm_sq_float", "matrix_multiply", "matrix_adjoint",
    "dual_lp_norm", "plancherel_sum",
    "paley_constant", "paley_constant_bruteforce",
    "SU2Grid", "lp_norm_classical", "inequality_ratio",
    "random_trig_polynomial",
]


# ---------------------------------------------------------------------------
# matrices on the dual: dict (tm, tn) -> scalar, weights doubled
# ---------------------------------------------------------------------------

class FourierArray:
    """Finite map  spin -> (2l+1)x(2l+1) matrix  in the unitary gauge.

    Matrices are sparse dicts keyed by doubled weights; entries are exact
    scalars (QScalar/QRadical) or floats after numeric spectral scaling.
    The same container represents transforms fhat and multiplier symbols.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        # a declared spin block is kept even when its entries all vanish:
        # symbol support is authoritative, a zero block is not a missing one
        cleaned = {}
        for tl, mat in (coeffs or {}).items():
            entries = {}
            for key, val in mat.items():
                val = _normalize_scalar(val)
                if _is_zero(val):
                    continue
                _check_key(tl, key)
                entries[key] = val
            cleaned[tl] = entries
        self.coeffs = cleaned

    @staticmethod
    def identity(twice_ls):
        out = {}
        for tl in twice_ls:
            out[tl] = {(tw, tw): ONE for tw in range(-tl, tl + 1, 2)}
        return FourierArray(out)

    @staticmethod
    def diagonal(values):
        """values: {twice_l: scalar or {tw: scalar}} -> diagonal array."""
        out = {}
        for tl, val in values.items():
            if isinstance(val, dict):
                out[tl] = {(tw, tw): v for tw, v in val.items()}
            else:
                out[tl] = {(tw, tw): val for tw in range(-tl, tl + 1, 2)}
        return FourierArray(out)

    def spins(self):
        return sorted(self.coeffs)

    def matrix(self, tl):
        return dict(self.coeffs.get(tl, {}))

    def entry(self, tl, tm, tn):
        return self.coeffs.get(tl, {}).get((tm, tn), ZERO)

    def map_entries(self, fn):
        return FourierArray({tl: {k: fn(tl, k, v) for k, v in mat.items()}
                             for tl, mat in self.coeffs.items()})

    def scale_spin(self, weights):
        """Multiply each spin-l block by weights[tl] (missing -> drop)."""
        out = {}
        for tl, mat in self.coeffs.items():
            w = weights(tl) if callable(weights) else weights.get(tl)
            if w is None:
                raise KeyError(f"missing spin {Fraction(tl, 2)} in weights")
            out[tl] = {k: _scalar_mul(v, w) for k, v in mat.items()}
        return FourierArray(out)

    def __add__(self, other):
        out = {tl: dict(mat) for tl, mat in self.coeffs.items()}
        for tl, mat in other.coeffs.items():
            dst = out.setdefault(tl, {})
            for k, v in mat.items():
                dst[k] = dst.get(k, ZERO) + v
        return FourierArray(out)

    def __sub__(self, other):
        return self + other.map_entries(lambda tl, k, v: _scalar_mul(v, -1))

    def __eq__(self, other):
        return isinstance(other, FourierArray) and self.coeffs == other.coeffs

    def is_zero(self):
        return all(not mat for mat in self.coeffs.values())

    def __repr__(self):
        lines = []
        for tl in self.spins():
            lines.append(f"l={Fraction(tl, 2)}: {self.coeffs[tl]}")
        return "FourierArray(" + "; ".join(lines) + ")"


def _check_key(tl, key):
    tm, tn = key
    rng = range(-tl, tl + 1, 2)
    if tm not in rng or tn not in rng:
        raise ValueError(f"entry {key} outside the spin-{Fraction(tl,2)} block")


def _normalize_scalar(val):
    if isinstance(val, (int, Fraction)):
        return QScalar.promote(val)
    if isinstance(val, QRadical) and val.is_scalar():
        return val.as_scalar()
    return val


def _is_zero(val):
    if isinstance(val, (QScalar, QRadical)):
        return val.is_zero()
    return val == 0


def _scalar_mul(x, y):
    if isinstance(x, float) or isinstance(y, float):
        return _to_float_static(x) * _to_float_static(y)
    return x * y


def _to_float_static(x, point=None):
    if isinstance(x, float):
        return x
    if isinstance(x, (int, Fraction)):
        return float(x)
    if point is None:
        raise TypeError("exact scalar needs a QPoint to become a float")
    return float(evaluate(x, point))


def matrix_multiply(m1, m2, tl):
    """Sparse product of two spin-l blocks."""
    out = {}
    by_row = {}
    for (tm, tk), v in m1.items():
        by_row.setdefault(tk, []).append((tm, v))
    for (tk, tn), w in m2.items():
        for tm, v in by_row.get(tk, []):
            cur = out.get((tm, tn))
            term = _scalar_mul(v, w)
            out[(tm, tn)] = term if cur is None else cur + term
    return {k: v for k, v in out.items() if not _is_zero(_normalize_scalar(v))}


def matrix_adjoint(mat):
    """Conjugate transpose; all exact scalars here are real."""
    return {(tn, tm): v for (tm, tn), v in mat.items()}


# ---------------------------------------------------------------------------
# dual weight data
# ---------------------------------------------------------------------------

class DualWeightTable:
    """Per-spin weights: n_l = 2l+1, d_l = [2l+1]_q, Q^l = diag(q^(-2i))."""

    def __init__(self, twice_l_max):
        self.twice_l_max = twice_l_max

    def n(self, tl):
        return tl + 1

    def d(self, tl):
        return quantum_dimension(tl)

    def q_diag(self, tl):
        return {tw: q_weight(tw) for tw in range(-tl, tl + 1, 2)}

    def spins(self):
        return list(spin_range(self.twice_l_max))

    def trace_identities_hold(self, tl):
        total = sum((q_weight(tw) for tw in range(-tl, tl + 1, 2)), ZERO)
        inv = sum((ONE / q_weight(tw) for tw in range(-tl, tl + 1, 2)), ZERO)
        return total == self.d(tl) and inv == self.d(tl)


# ---------------------------------------------------------------------------
# transform and inverse
# ---------------------------------------------------------------------------

def fourier_transform(f, pw):
    """fhat(l)_ij = h(f (t^l_ji)*), exactly, over the spins where f lives.

    In terms of the T-basis expansion f = sum c_mn T_mn and the gram data
    this is fhat_ij = gamma(i,j) q_i c_(j,i) / d_l, where gamma is the
    unitary gauge radical and q_i the Q-weight of the row index.
    """
    f = _promote_elem(f)
    expansion = pw.pw_expand(f)
    out = {}
    for tl, cmat in expansion.items():
        d = quantum_dimension(tl)
        entries = {}
        for (tm, tn), c in cmat.items():
            base = q_weight(tn) * c / d
            gauge = pw_gauge_radical(pw, tl, tn, tm)
            entries[(tn, tm)] = _normalize_scalar(gauge * base)
        out[tl] = entries
    return FourierArray(out)


def inverse_fourier(arr, pw):
    """f = sum_l d_l Tr((Q^l)^-1 fhat(l) t^l), exactly.

    Note the trace ordering: (Q^l)^-1 fhat pi is the unique ordering
    consistent with the transform and the orthogonality relations (the
    round trip and the Plancherel identity both hold exactly with it).
    Componentwise: f = sum_l d_l sum_ij (1/q_i) fhat(l)_ij t^l_ji.
    """
    out = AlgebraElement({})
    for tl, mat in arr.coeffs.items():
        d = quantum_dimension(tl)
        for (ti, tj), val in mat.items():
            coeff = _scalar_mul(val, d / q_weight(ti))
            gauge = pw_gauge_radical(pw, tl, tj, ti)
            coeff = _normalize_scalar(_scalar_mul(coeff, gauge))
            t_entry = pw.entry(tl, tj, ti)
            out = out + AlgebraElement(
                {mono: _scalar_mul(coeff, c) for mono, c in t_entry.terms.items()})
    return out


def pw_gauge_radical(pw, tl, tm, tn):
    """sqrt(N_m/N_n) as a cached QRadical (the unitary gauge factor)."""
    cache = getattr(pw, "_gauge_cache", None)
    if cache is None:
        cache = {}
        pw._gauge_cache = cache
    key = (tl, tm, tn)
    if key not in cache:
        cache[key] = sqrt_scalar(pw.gauge_ratio_sq(tl, tm, tn))
    return cache[key]


# ---------------------------------------------------------------------------
# Hilbert-Schmidt and lp norms on the dual
# ---------------------------------------------------------------------------

def hs_norm_sq(mat, tl, orientation=+1):
    """||sigma(l)||_HS^2 = sum_m q^(2m) sum_n |sigma_mn|^2, exactly.

    orientation=-1 replaces the row weight q^(2m) by q^(-2m); the flipped
    weight is what the growth tables of the source computations use, and
    the two differ only by the weight-label reversal m -> -m.
    """
    total = ZERO
    exact = True
    ftotal = 0.0
    for (tm, tn), v in mat.items():
        _check_key(tl, (tm, tn))
        w = q_power(2 * tm * orientation)
        if isinstance(v, float) or not exact:
            exact = False
            continue
        if isinstance(v, QRadical):
            sq = v.square()
            if isinstance(sq, QRadical):
                raise ArithmeticError("entry square left the base field")
            total = total + w * sq
        else:
            total = total + w * v * v
    if exact:
        return total
    raise TypeError("float entries: use hs_norm_sq_float with a QPoint")


def hs_norm_sq_float(mat, tl, point, orientation=+1):
    total = 0.0
    for (tm, tn), v in mat.items():
        w = float(point.q0) ** (tm * orientation)
        fv = _to_float_static(v, point)
        total += w * fv * fv
    return total


def plancherel_sum(arr, pw=None):
    """sum_l d_l ||fhat(l)||_HS^2, exactly (equals h(f f*))."""
    total = ZERO
    for tl, mat in arr.coeffs.items():
        total = total + quantum_dimension(tl) * hs_norm_sq(mat, tl)
    return total


def dual_lp_norm(arr, p, point):
    """The lp(dual) norm at a numeric point; p in [1, inf]."""
    if p != math.inf and p < 1:
        raise ValueError("p must be >= 1")
    vals = []
    for tl, mat in arr.coeffs.items():
        n = tl + 1
        d = float(evaluate(quantum_dimension(tl), point))
        hs = math.sqrt(hs_norm_sq_float(mat, tl, point))
        vals.append((d, n, hs))
    if p == math.inf:
        return max((hs / math.sqrt(n) for _, n, hs in vals), default=0.0)
    total = sum(d * n * (hs / math.sqrt(n)) ** p for d, n, hs in vals)
    return total ** (1 / p)


# ---------------------------------------------------------------------------
# Paley constant
# ---------------------------------------------------------------------------

def _dn_at(tl, point):
    return float(evaluate(quantum_dimension(tl), point)) * (tl + 1)


def paley_constant(phi, point):
    """M_phi = sup_t t * sum_{phi(l) >= t} d_l n_l.

    The sup over t > 0 is attained at one of the values of phi (between
    consecutive values the map t -> t * sum is linear increasing), so the
    candidate set is finite.
    """
    if not phi:
        raise ValueError("empty support")
    items = sorted(phi.items(), key=lambda kv: -kv[1])
    if any(v <= 0 for _, v in items):
        raise ValueError("phi must be positive on its support")
    best = 0.0
    running = 0.0
    i = 0
    while i < len(items):
        # consume all spins with the same phi value
        t = items[i][1]
        while i < len(items) and items[i][1] == t:
            running += _dn_at(items[i][0], point)
            i += 1
        best = max(best, t * running)
    return best


def paley_constant_bruteforce(phi, point):
    """Independent double-loop oracle over all candidate thresholds."""
    best = 0.0
    for _, t in phi.items():
        total = 0.0
        for tl, v in phi.items():
            if v >= t:
                total += _dn_at(tl, point)
        best = max(best, t * total)
    return best


# ---------------------------------------------------------------------------
# classical limit: quadrature on SU(2)
# ---------------------------------------------------------------------------

class SU2Grid:
    """Product quadrature on SU(2) in Euler angles.

    Gauss-Legendre in cos(theta), trapezoid in the two periodic angles
    (phi of period 2pi, psi of period 4pi); the normalized Haar measure
    is sin(theta) dtheta dphi dpsi / (16 pi^2).  Matrix entries:

        a = cos(theta/2) e^(i(phi+psi)/2)     b = sin(theta/2) e^(i(phi-psi)/2)
        c = -conj(b)                          d = conj(a)
    """

    def __init__(self, n_polar=64, n_phi=64, n_psi=64):
        x, wx = np.polynomial.legendre.leggauss(n_polar)
        phi = np.arange(n_phi) * (2 * np.pi / n_phi)
        psi = np.arange(n_psi) * (4 * np.pi / n_psi)
        X, PHI, PSI = np.meshgrid(x, phi, psi, indexing="ij")
        half = np.arccos(X) / 2.0
        cos_h, sin_h = np.cos(half), np.sin(half)
        self.a = cos_h * np.exp(0.5j * (PHI + PSI))
        self.b = sin_h * np.exp(0.5j * (PHI - PSI))
        self.c = -np.conj(self.b)
        self.d = np.conj(self.a)
        w = np.ones_like(X) * wx[:, None, None]
        w *= (2 * np.pi / n_phi) * (4 * np.pi / n_psi) / (16 * np.pi ** 2)
        self.weights = w

    def evaluate(self, f, point):
        """Pointwise values of f on the grid (complex array)."""
        f = _promote_elem(f)
        total = np.zeros_like(self.a)
        for mono, coeff in f.terms.items():
            cval = complex(_to_float_static(coeff, point))
            head = self.a if mono.head == "a" else self.d
            vals = np.ones_like(self.a)
            if mono.head_pow:
                vals = vals * head ** mono.head_pow
            if mono.b_pow:
                vals = vals * self.b ** mono.b_pow
            if mono.c_pow:
                vals = vals * self.c ** mono.c_pow
            total = total + cval * vals
        return total

    def integrate(self, values):
        return float(np.sum(values * self.weights).real)


def lp_norm_classical(f, p, grid, point=None):
    """(integral |f|^p dg)^(1/p) on the classical group; q must be 1."""
    point = point or QPoint(1)
    if not point.is_one:
        raise ValueError("classical L^p quadrature requires q = 1")
    vals = np.abs(grid.evaluate(f, point))
    return grid.integrate(vals ** p) ** (1 / p)


# ---------------------------------------------------------------------------
# inequality harness
# ---------------------------------------------------------------------------

_KINDS = ("hausdorff-young", "paley", "hy-paley", "hardy-littlewood",
          "cor-5.8")


def _lp_side(f, p, point, grid, pw):
    """||f||_Lp: quadrature at q=1, Haar state when p=2, else unsupported."""
    if p == 2:
        val = haar(_promote_elem(f) * star(f))
        return math.sqrt(float(evaluate(val, point)))
    if not point.is_one:
        raise ValueError(
            f"L^{p} at q={point.q0} is unsupported (only p=2 away from q=1)")
    if grid is None:
        raise ValueError("a quadrature grid is required for p != 2")
    return lp_norm_classical(f, p, grid, point)


def inequality_ratio(kind, f, params, pw, point, grid=None):
    """Both sides of one inequality, with the constant-free ratio.

    params is a dict with the exponents the kind needs: p always; b for
    hy-paley; beta and lambda_weights (a {twice_l: positive value} map)
    for hardy-littlewood and cor-5.8; phi (same shape) for the Paley
    kinds.  Returns {"lhs", "rhs_without_constant", "ratio"}.
    """
    if kind not in _KINDS:
        raise ValueError(f"unknown inequality kind {kind!r}")
    p = params["p"]
    if not 1 < p <= 2:
        raise ValueError("the inequalities need 1 < p <= 2")
    pprime = p / (p - 1)
    fhat = fourier_transform(f, pw)
    rhs_lp = _lp_side(f, p, point, grid, pw)

    def block_data():
        for tl, mat in fhat.coeffs.items():
            n = tl + 1
            d = float(evaluate(quantum_dimension(tl), point))
            hs = math.sqrt(hs_norm_sq_float(mat, tl, point))
            yield tl, d, n, hs

    if kind == "hausdorff-young":
        lhs = dual_lp_norm(fhat, pprime, point)
        return {"lhs": lhs, "rhs_without_constant": rhs_lp,
                "ratio": _safe_ratio(lhs, rhs_lp)}

    if kind == "paley":
        phi = params["phi"]
        m_phi = paley_constant(phi, point)
        total = sum(d * n * (hs / math.sqrt(n)) ** p * phi[tl] ** (2 - p)
                    for tl, d, n, hs in block_data())
        lhs = total ** (1 / p)
        rhs = m_phi ** ((2 - p) / p) * rhs_lp
        return {"lhs": lhs, "rhs_without_constant": rhs,
                "ratio": _safe_ratio(lhs, rhs)}

    if kind == "hy-paley":
        phi = params["phi"]
        b = params["b"]
        if not p <= b <= pprime:
            raise ValueError("hy-paley needs p <= b <= p'")
        expo = 1 / b - 1 / pprime
        m_phi = paley_constant(phi, point)
        total = sum(d * n * (hs / math.sqrt(n) * phi[tl] ** expo) ** b
                    for tl, d, n, hs in block_data())
        lhs = total ** (1 / b)
        rhs = m_phi ** expo * rhs_lp
        return {"lhs": lhs, "rhs_without_constant": rhs,
                "ratio": _safe_ratio(lhs, rhs)}

    lam = params["lambda_weights"]
    beta = params["beta"]
    if kind == "hardy-littlewood":
        total = sum(d * n * abs(_to_float_static(lam[tl], point))
                    ** (beta * (p - 2)) * (hs / math.sqrt(n)) ** p
                    for tl, d, n, hs in block_data())
        lhs = total ** (1 / p)
        return {"lhs": lhs, "rhs_without_constant": rhs_lp,
                "ratio": _safe_ratio(lhs, rhs_lp)}

    # cor-5.8: || F |D|^(beta(1/2 - 1/p)) f ||_(lp(dual))
    expo = beta * (0.5 - 1 / p)
    scaled = FourierArray({
        tl: {k: _to_float_static(v, point)
             * abs(_to_float_static(lam[tl], point)) ** expo
             for k, v in mat.items()}
        for tl, mat in fhat.coeffs.items()})
    lhs = dual_lp_norm(scaled, p, point)
    return {"lhs": lhs, "rhs_without_constant": rhs_lp,
            "ratio": _safe_ratio(lhs, rhs_lp)}


def _safe_ratio(lhs, rhs):
    return lhs / rhs if rhs else math.inf if lhs else 0.0


def random_trig_polynomial(rng, twice_l_max=3, n_terms=5):
    """Seeded random polynomial with spin support <= l_max."""
    return random_element(rng, max_degree=twice_l_max, n_terms=n_terms)
