"""Dirac-type operators given by per-spin eigenvalue families.

A DiracSpec carries |lambda_l| for each spin: the classical family
+-(2l+1), its q-deformation +-[2l+1]_q, or an explicit table.  Signs are
metadata only -- every implemented operation (powers, commutators,
summability, growth ratios) depends on |D| alone.

Summability is classified analytically (exponent comparison for the
polynomial family at q = 1, ratio test for the geometric regimes), never
by numeric extrapolation; partial-sum tables are emitted as evidence
only.  Two multiplicity conventions are computed side by side: the
quantum weight d_l n_l of the defining series, and the plain
Hilbert-space multiplicity n_l^2 -- at q != 1 the classical eigenvalue
family is summable in the second convention and in none of the first.

The commutator d(a)b = |D|(ab) - a(|D|b) is exact; polynomial products
have finite spin support, so there is no truncation error inside the
configured cap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .qarith import QScalar, QRadical, ZERO, q_int, sqrt_scalar, evaluate
from .algebra import _promote_elem
from .peterweyl import quantum_dimension, q_weight
from .fourier import (
    FourierArray, fourier_transform, inverse_fourier, _to_float_static,
)

__all__ = [
    "DiracSpec", "SummabilityReport", "summability_classify",
    "abs_dirac_power", "commutator_apply", "boundedness_ratio",
    "boundedness_scan",
]


@dataclass(frozen=True)
class DiracSpec:
    """Eigenvalue family of a Dirac-type operator.

    family: "classical"  -> |lambda_l| = 2l+1
            "q-deformed" -> |lambda_l| = [2l+1]_q
            "table"      -> explicit {twice_l: scalar}
    signs is an optional {twice_l: +-1} assignment, irrelevant to every
    implemented operation; beta optionally records a summability order.
    """

    family: str = "classical"
    table: dict = field(default=None, compare=False, hash=False)
    signs: dict = field(default=None, compare=False, hash=False)
    beta: float = None

    def __post_init__(self):
        if self.family not in ("classical", "q-deformed", "table"):
            raise ValueError(f"unknown Dirac family {self.family!r}")
        if self.family == "table" and not self.table:
            raise ValueError("table family needs an explicit eigenvalue map")

    def abs_eigenvalue(self, twice_l):
        """|lambda_l| as an exact scalar."""
        if self.family == "classical":
            return QScalar.promote(twice_l + 1)
        if self.family == "q-deformed":
            return q_int(2 * (twice_l + 1))
        val = self.table.get(twice_l)
        if val is None:
            raise KeyError(f"no eigenvalue for spin {Fraction(twice_l, 2)}")
        return val if isinstance(val, (QScalar, QRadical)) \
            else QScalar.promote(val)

    def label(self):
        return self.family


# ---------------------------------------------------------------------------
# summability
# ---------------------------------------------------------------------------

@dataclass
class SummabilityReport:
    spectral_dimension: object            # float or None
    plain_multiplicity_dimension: object  # the n^2 convention, for comparison
    evidence: list                        # rows (beta, cutoff, partial sum)
    reasoning: str


def summability_classify(spec, point, evidence_betas=(1.5, 3.0, 3.5),
                         cutoff=40):
    """Infimum beta with sum_l d_l n_l / |lambda_l|^beta finite.

    Classified analytically: at q = 1 the summand of the classical family
    is (2l+1)^(2-beta) (a p-series, finite iff beta > 3); at q != 1 the
    q-deformed family satisfies a geometric ratio test (finite iff
    beta > 1), while the classical family diverges for every beta since
    d_l grows geometrically against a polynomial |lambda_l|.
    """
    if spec.family == "table":
        raise ValueError("closed-form family required; a table carries no "
                         "decay information to classify")
    q_is_one = point.is_one
    if spec.family == "classical" and q_is_one:
        dim, why = 3.0, "summand (2l+1)^(2-beta): p-series threshold beta=3"
    elif spec.family == "q-deformed" and q_is_one:
        dim, why = 3.0, "q=1 collapses [2l+1]_q to 2l+1: classical threshold"
    elif spec.family == "q-deformed":
        dim, why = 1.0, ("summand (2l+1) [2l+1]_q^(1-beta): geometric ratio "
                         "b_q^(2(1-beta)) < 1 iff beta > 1")
    else:
        dim, why = None, ("d_l n_l/|lambda_l|^beta has geometric growth "
                          "b_q^(2l) against polynomial decay: divergent for "
                          "every beta")

    if spec.family == "classical" or q_is_one:
        alt = 3.0   # n^2 (2l+1)^(-beta) = (2l+1)^(2-beta)
    else:
        alt = 0.0   # n^2 [2l+1]_q^(-beta): geometric for every beta > 0

    evidence = []
    for beta in evidence_betas:
        total = 0.0
        for tl in range(0, cutoff + 1):
            d = float(evaluate(quantum_dimension(tl), point))
            lam = abs(float(evaluate(spec.abs_eigenvalue(tl), point)))
            total += d * (tl + 1) / lam ** beta
            if tl in (10, 20, cutoff):
                evidence.append((beta, Fraction(tl, 2), total))
    return SummabilityReport(dim, alt, evidence, why)


# ---------------------------------------------------------------------------
# powers of |D|
# ---------------------------------------------------------------------------

def abs_dirac_power(arr, alpha, spec, point=None):
    """Per-spin scaling by |lambda_l|^alpha.

    alpha = 0 is the identity.  Integer alpha stays in QScalar; half
    integer alpha scales by an exact formal square root; anything else
    takes the float path and needs an evaluation point.
    """
    frac = _as_fraction(alpha)
    out = {}
    for tl, mat in arr.coeffs.items():
        lam = spec.abs_eigenvalue(tl)
        if frac is not None and frac.denominator == 1:
            scale = lam ** frac.numerator
            out[tl] = {k: scale * v if not isinstance(v, float)
                       else v * float(evaluate(scale, point))
                       for k, v in mat.items()}
        elif frac is not None and frac.denominator == 2:
            if isinstance(lam, QRadical):
                raise ValueError("half-integer powers need a QScalar family")
            scale = sqrt_scalar(lam ** frac.numerator)
            out[tl] = {k: _radical_scale(scale, v, point)
                       for k, v in mat.items()}
        else:
            if point is None:
                raise ValueError(
                    f"power {alpha} is numeric; an evaluation point is needed")
            s = abs(float(evaluate(lam, point))) ** float(alpha)
            out[tl] = {k: _to_float_static(v, point) * s
                       for k, v in mat.items()}
    return FourierArray(out)


def _as_fraction(alpha):
    if isinstance(alpha, int):
        return Fraction(alpha)
    if isinstance(alpha, Fraction):
        return alpha
    if isinstance(alpha, float) and float(alpha).is_integer():
        return Fraction(int(alpha))
    return None


def _radical_scale(scale, v, point):
    if isinstance(v, float):
        return v * float(scale.evaluate(point))
    out = scale * v
    if isinstance(out, QRadical) and out.is_scalar():
        return out.as_scalar()
    return out


# ---------------------------------------------------------------------------
# commutators
# ---------------------------------------------------------------------------

def apply_abs_dirac(f, spec, pw, alpha=1):
    """|D|^alpha f through the transform; exact for integer alpha."""
    return inverse_fourier(
        abs_dirac_power(fourier_transform(f, pw), alpha, spec), pw)


def commutator_apply(a, b, spec, pw):
    """d(a)(b) = [|D|, a] b = |D|(ab) - a (|D| b), exactly."""
    a = _promote_elem(a)
    b = _promote_elem(b)
    return apply_abs_dirac(a * b, spec, pw) - a * apply_abs_dirac(b, spec, pw)


# ---------------------------------------------------------------------------
# the boundedness-condition ratio
# ---------------------------------------------------------------------------

def boundedness_ratio_sq(twice_k, twice_s, indices, spec, pw):
    """Exact square of the boundedness-condition quotient.

        |lam_k - lam_s|^2 sum_m sum_(u,t) |C^{ksm}|^2 q_t/d_m / (q_r/d_s)

    Both weight gradings lock (u, t) = (i+p, j+r), so the inner sum has
    one term per admissible m; everything stays in QScalar.
    """
    ti, tj, tp, tr = indices
    lam_diff = spec.abs_eigenvalue(twice_k) - spec.abs_eigenvalue(twice_s)
    if isinstance(lam_diff, QRadical):
        diff_sq = lam_diff.square()
    else:
        diff_sq = lam_diff * lam_diff
    if (isinstance(diff_sq, QScalar) and diff_sq.is_zero()):
        return ZERO
    csq = pw.clebsch_squared(twice_k, twice_s)
    total = ZERO
    for (i2, j2, p2, r2, tm, tu, tt), c2 in csq.items():
        if (i2, j2, p2, r2) != (ti, tj, tp, tr):
            continue
        total = total + c2 * q_weight(tt) / quantum_dimension(tm)
    denom = q_weight(tr) / quantum_dimension(twice_s)
    return diff_sq * total / denom


def boundedness_ratio(twice_k, twice_s, indices, spec, pw, point=None):
    """The quotient itself; exact square root when possible, else float."""
    sq = boundedness_ratio_sq(twice_k, twice_s, indices, spec, pw)
    root = sqrt_scalar(sq)
    if root.is_scalar():
        return root.as_scalar()
    if point is None:
        return root
    return root.evaluate(point)


def boundedness_scan(twice_cap, spec, pw, point):
    """All ratios for k, s <= cap; rows (k, s, i, j, p, r, family, q, ratio)."""
    rows = []
    for tk in range(0, twice_cap + 1):
        for ts in range(0, twice_cap + 1):
            csq = pw.clebsch_squared(tk, ts)
            lam_diff = (spec.abs_eigenvalue(tk) - spec.abs_eigenvalue(ts))
            diff_sq = lam_diff * lam_diff
            denom_base = quantum_dimension(ts)
            totals = {}
            for (ti, tj, tp, tr, tm, tu, tt), c2 in csq.items():
                key = (ti, tj, tp, tr)
                add = c2 * q_weight(tt) / quantum_dimension(tm)
                totals[key] = totals.get(key, ZERO) + add
            for (ti, tj, tp, tr), total in sorted(totals.items()):
                sq = diff_sq * total * denom_base / q_weight(tr)
                val = math.sqrt(max(float(evaluate(sq, point)), 0.0))
                rows.append({
                    "k": Fraction(tk, 2), "s": Fraction(ts, 2),
                    "i": Fraction(ti, 2), "j": Fraction(tj, 2),
                    "p": Fraction(tp, 2), "r": Fraction(tr, 2),
                    "lambda_family": spec.label(),
                    "q": point.q0, "ratio": val,
                })
    return rows
