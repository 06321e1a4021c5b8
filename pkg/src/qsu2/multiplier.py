"""Left Fourier multipliers: symbol action, extraction, bounds.

A coinvariant operator acts across the Peter-Weyl blocks through one
matrix per spin.  Because the quantum trace weights rows and columns
differently at q != 1, the same operator has three natural per-spin
matrices, conjugate to each other by powers of Q^l = diag(q^(-2i)):

    algebraic    sigma_alg:  A t^l_mj = sum_s t^l_ms sigma_alg(l)_sj
    transform    sigma_hat:  (Af)hat(l) = sigma_hat(l) fhat(l)
    symmetrized  sigma:      sigma = Q^(1/2) sigma_alg Q^(-1/2)
                                   = Q^(-1/2) sigma_hat Q^(1/2)

This module works with the symmetrized normalization: it is the unique
dressing in which the adjoint relation sigma_(A*) = sigma_A^* is exact
and in which the plain largest singular value of sigma(l) equals the
true L^2 -> L^2 operator norm.  All three coincide on diagonal symbols
(every Dirac-type family), and the conversions are exact q-power scalings.

quantize is the opposite ordering (fhat combined on the other side); it
agrees with apply_symbol for scalar families, reduces to the inversion
formula for the identity symbol, and differs by the commutator of the
orderings on non-scalar blocks.

A symbol table is authoritative about its support: a spin of f outside
the table is an error, never an implicit identity.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .qarith import QScalar, QRadical, ZERO, ONE, q_power, evaluate
from .algebra import AlgebraElement, _promote_elem
from .peterweyl import quantum_dimension
from .fourier import (
    FourierArray, fourier_transform, inverse_fourier, pw_gauge_radical,
    matrix_multiply, matrix_adjoint, hs_norm_sq_float, _to_float_static,
    _scalar_mul,
)

__all__ = [
    "MultiplierSymbol", "MultiplierError",
    "apply_symbol", "apply_algebraic_symbol", "extract_symbol",
    "extract_algebraic_symbol", "symmetrize_algebraic", "algebraic_from_symmetrized",
    "adjoint_symbol", "operator_norm", "l2_operator_norm", "lp_lq_bound",
    "quantize", "schwartz_seminorms", "coinvariance_defect",
]

MultiplierSymbol = FourierArray  # same container, operator semantics


class MultiplierError(ValueError):
    pass


def _dress(mat, row_exp, col_exp):
    """Entrywise q-power dressing: entry(s, j) *= q^(row_exp*s + col_exp*j).

    Exponents are per unit weight; doubled indices make them half-integer
    powers of q, which stay exact on the q^(1/2) lattice.
    """
    out = {}
    for (ts, tj), v in mat.items():
        factor = q_power(row_exp * ts + col_exp * tj)
        out[(ts, tj)] = _scalar_mul(v, factor) if isinstance(v, float) \
            else factor * v
    return out


def symmetrize_algebraic(sigma_alg):
    """sigma = Q^(1/2) sigma_alg Q^(-1/2): entry (s,j) *= q^(j - s)."""
    return FourierArray({tl: _dress(mat, -1, 1)
                         for tl, mat in sigma_alg.coeffs.items()})


def algebraic_from_symmetrized(sigma):
    """sigma_alg = Q^(-1/2) sigma Q^(1/2): entry (s,j) *= q^(s - j)."""
    return FourierArray({tl: _dress(mat, 1, -1)
                         for tl, mat in sigma.coeffs.items()})


def apply_algebraic_symbol(sigma_alg, f, pw):
    """The operator with A t^l_mj = sum_s t^l_ms sigma_alg(l)_sj.

    On the transform side this is fhat -> (Q sigma_alg Q^-1) fhat
    followed by the inversion formula; everything stays exact.
    """
    fhat = fourier_transform(f, pw)
    out = {}
    for tl, mat in fhat.coeffs.items():
        if tl not in sigma_alg.coeffs:
            raise MultiplierError(
                f"symbol has no spin-{Fraction(tl, 2)} block; identity is "
                "not assumed outside the declared support")
        dressed = _dress(sigma_alg.coeffs[tl], -2, 2)   # Q sigma Q^-1
        out[tl] = matrix_multiply(dressed, mat, tl)
    return inverse_fourier(FourierArray(out), pw)


def apply_symbol(symbol, f, pw):
    """Apply a symmetrized-normalization multiplier symbol to f."""
    return apply_algebraic_symbol(algebraic_from_symmetrized(symbol), f, pw)


def quantize(symbol, f, pw):
    """The opposite ordering: fhat(l) combined with the symbol on the right.

    Scalar symbol families commute through and agree with apply_symbol;
    the identity-compatible case reduces to the inversion formula; for a
    non-scalar block the difference against apply_symbol is exactly the
    commutator of the two orderings pushed through the inverse transform.
    """
    sigma_alg = algebraic_from_symmetrized(symbol)
    fhat = fourier_transform(f, pw)
    out = {}
    for tl, mat in fhat.coeffs.items():
        if tl not in sigma_alg.coeffs:
            raise MultiplierError(
                f"symbol has no spin-{Fraction(tl, 2)} block")
        dressed = _dress(sigma_alg.coeffs[tl], -2, 2)
        out[tl] = matrix_multiply(mat, dressed, tl)
    return inverse_fourier(FourierArray(out), pw)


def extract_algebraic_symbol(op, twice_l_max, pw):
    """Recover sigma_alg(l) from  A t^l_mj = sum_s t^l_ms sigma_alg(l)_sj.

    op is any map AlgebraElement -> AlgebraElement.  Every row m gives a
    candidate symbol column; coinvariance says the candidates coincide
    and that A preserves each coefficient block.  Violations raise
    MultiplierError with the offending indices.
    """
    out = {}
    for tl in range(0, twice_l_max + 1):
        weights = list(range(-tl, tl + 1, 2))
        sigma_t = None      # T-gauge symbol {(ts, tj): QScalar}
        for tm in weights:
            candidate = {}
            for tj in weights:
                image = op(pw.entry(tl, tm, tj))
                expansion = pw.pw_expand(image)
                for tl2 in expansion:
                    if tl2 != tl:
                        raise MultiplierError(
                            f"operator leaks spin {Fraction(tl,2)} -> "
                            f"{Fraction(tl2,2)}: not coinvariant")
                for (tm2, ts), c in expansion.get(tl, {}).items():
                    if tm2 != tm:
                        raise MultiplierError(
                            f"operator moves row {tm} -> {tm2} at spin "
                            f"{Fraction(tl,2)}: not coinvariant")
                    candidate[(ts, tj)] = c
            if sigma_t is None:
                sigma_t = candidate
            elif sigma_t != candidate:
                raise MultiplierError(
                    f"row-dependent symbol at spin {Fraction(tl,2)} "
                    f"(row {tm}): not coinvariant")
        entries = {}
        for (ts, tj), c in sigma_t.items():
            gauge = pw_gauge_radical(pw, tl, ts, tj)
            entries[(ts, tj)] = gauge * c
        out[tl] = entries
    return FourierArray(out)


def extract_symbol(op, twice_l_max, pw):
    """Symbol of a coinvariant operator, symmetrized normalization."""
    return symmetrize_algebraic(extract_algebraic_symbol(op, twice_l_max, pw))


def adjoint_symbol(symbol):
    """sigma_(A*)(l) = sigma_A(l)*: exact in this normalization."""
    return FourierArray({tl: matrix_adjoint(mat)
                         for tl, mat in symbol.coeffs.items()})


def coinvariance_defect(op, element, pw):
    """Delta(A f) - (id (x) A) Delta(f), as a dict of tensor pairs.

    Empty means the operator commutes with the left coaction on this
    element; symbol-defined operators satisfy this identically.
    """
    from .algebra import coproduct

    f = _promote_elem(element)
    lhs = coproduct(op(f))
    rhs_pairs = {}
    for (ml, mr), coeff in coproduct(f).pairs.items():
        image = op(AlgebraElement({mr: ONE}))
        for mono, c in image.terms.items():
            key = (ml, mono)
            acc = rhs_pairs.get(key, ZERO) + coeff * c
            if (acc.is_zero() if isinstance(acc, (QScalar, QRadical))
                    else acc == 0):
                rhs_pairs.pop(key, None)
            else:
                rhs_pairs[key] = acc
    defect = {}
    for key in set(lhs.pairs) | set(rhs_pairs):
        diff = lhs.pairs.get(key, ZERO) - rhs_pairs.get(key, ZERO)
        if not (diff.is_zero() if isinstance(diff, (QScalar, QRadical))
                else diff == 0):
            defect[key] = diff
    return defect


# ---------------------------------------------------------------------------
# norms and bounds
# ---------------------------------------------------------------------------

def _dense(mat, tl, point):
    weights = list(range(-tl, tl + 1, 2))
    idx = {tw: i for i, tw in enumerate(weights)}
    dense = np.zeros((tl + 1, tl + 1))
    for (tm, tn), v in mat.items():
        dense[idx[tm], idx[tn]] = _to_float_static(v, point)
    return dense


def operator_norm(mat, tl, point):
    """Largest singular value of the spin-l block at a numeric point.

    Diagonal blocks take the exact-evaluation path (max |entry|); dense
    blocks go through numpy's SVD.
    """
    if all(tm == tn for (tm, tn) in mat):
        return max((abs(_to_float_static(v, point)) for v in mat.values()),
                   default=0.0)
    s = np.linalg.svd(_dense(mat, tl, point), compute_uv=False)
    return float(s[0]) if len(s) else 0.0


def l2_operator_norm(symbol, point):
    """sup over spins of ||sigma(l)||_op: the exact L2 -> L2 norm."""
    return max((operator_norm(mat, tl, point)
                for tl, mat in symbol.coeffs.items()), default=0.0)


def lp_lq_bound(symbol, p, q_exp, twice_l_max, point):
    """sup_s s (sum_(||sigma(l)||_op > s) d_l n_l)^(1/p - 1/q).

    The sup over s > 0 is taken over attained operator norms minus an
    infinitesimal (the level set is then closed at the attained value);
    candidates with empty level sets are skipped, and the p = q case
    reads the empty-set power 0^0 as 0 so the identity symbol scores 1.
    """
    if not (1 < p <= 2 <= q_exp < math.inf):
        raise ValueError("need 1 < p <= 2 <= q < infinity")
    expo = 1 / p - 1 / q_exp
    norms = {}
    for tl in range(0, twice_l_max + 1):
        mat = symbol.coeffs.get(tl)
        if mat is None:
            continue
        norms[tl] = operator_norm(mat, tl, point)
    if not norms:
        return 0.0
    best = 0.0
    for s in sorted(set(norms.values()), reverse=True):
        if s <= 0:
            continue
        mass = sum(float(evaluate(quantum_dimension(tl), point)) * (tl + 1)
                   for tl, v in norms.items() if v >= s)
        if mass == 0:
            continue
        best = max(best, s * mass ** expo if expo > 0 else s)
    return best


def schwartz_seminorms(symbol, alpha, gamma, lambda_weights, point):
    """The dual-side smoothness seminorms over the finite support.

    p_alpha = (sum d_l n_l |lambda_l|^(2 alpha) ||sigma(l)||_HS^2)^(1/2)
    q_gamma = sup |lambda_l|^gamma ||sigma(l)||_op
    """
    if alpha < 0 or gamma < 0:
        raise ValueError("seminorm orders must be nonnegative")
    p_total = 0.0
    q_total = 0.0
    for tl, mat in symbol.coeffs.items():
        lam = abs(_to_float_static(lambda_weights[tl], point))
        d = float(evaluate(quantum_dimension(tl), point))
        hs2 = hs_norm_sq_float(mat, tl, point)
        p_total += d * (tl + 1) * lam ** (2 * alpha) * hs2
        q_total = max(q_total, lam ** gamma * operator_norm(mat, tl, point))
    return {"p_alpha": math.sqrt(p_total), "q_gamma": q_total}
