import math
import random
from fractions import Fraction

import pytest

from qsu2.qarith import (
    QScalar, QRadical, QPoint, q_int, ZERO, ONE, Q, evaluate, sqrt_scalar,
)
from qsu2.algebra import (
    A, B, C, D, UNIT, AlgebraElement, haar, star, l2_inner, random_element,
)
from qsu2.peterweyl import PWTable, quantum_dimension, q_weight
from qsu2.fourier import FourierArray, fourier_transform, inverse_fourier
from qsu2.spectral import (
    DiracSpec, summability_classify, abs_dirac_power, apply_abs_dirac,
    commutator_apply, boundedness_ratio, boundedness_ratio_sq,
    boundedness_scan,
)


@pytest.fixture(scope="module")
def pw():
    return PWTable(8)


CLASSICAL = DiracSpec("classical")
QDEFORMED = DiracSpec("q-deformed")
HALF = QPoint(Fraction(1, 2))
ONE_PT = QPoint(1)


# -- spec basics ---------------------------------------------------------------

def test_eigenvalues():
    assert CLASSICAL.abs_eigenvalue(2) == QScalar.promote(3)
    assert QDEFORMED.abs_eigenvalue(2) == q_int(6)
    tab = DiracSpec("table", table={0: ONE, 2: Q})
    assert tab.abs_eigenvalue(2) == Q
    with pytest.raises(KeyError):
        tab.abs_eigenvalue(4)
    with pytest.raises(ValueError):
        DiracSpec("table")
    with pytest.raises(ValueError):
        DiracSpec("weird")


# -- summability ------------------------------------------------------------------

def test_classical_at_q1_dimension_3():
    rep = summability_classify(CLASSICAL, ONE_PT)
    assert rep.spectral_dimension == 3.0


def test_qdeformed_at_half_dimension_1():
    rep = summability_classify(QDEFORMED, HALF)
    assert rep.spectral_dimension == 1.0


def test_classical_at_half_not_summable():
    rep = summability_classify(CLASSICAL, HALF)
    assert rep.spectral_dimension is None
    # the plain-multiplicity convention keeps the classical value 3
    assert rep.plain_multiplicity_dimension == 3.0


def test_qdeformed_at_q1_collapses_to_classical():
    rep = summability_classify(QDEFORMED, ONE_PT)
    assert rep.spectral_dimension == 3.0


def test_table_family_rejected():
    with pytest.raises(ValueError):
        summability_classify(DiracSpec("table", table={0: ONE}), HALF)


def test_evidence_rows_emitted():
    rep = summability_classify(QDEFORMED, HALF)
    assert rep.evidence and all(len(row) == 3 for row in rep.evidence)


# -- |D|^alpha ---------------------------------------------------------------------

def test_power_zero_is_identity(pw):
    F = fourier_transform(A * B, pw)
    assert abs_dirac_power(F, 0, CLASSICAL) == F


def test_power_scales_by_three_at_spin_one(pw):
    t = pw.entry(2, 0, 0)
    scaled = apply_abs_dirac(t, CLASSICAL, pw)
    assert scaled == t.scale(3)


def test_power_semigroup_exact_for_half_integers(pw):
    F = fourier_transform(A + B.scale(2), pw)
    for spec in (CLASSICAL, QDEFORMED):
        one_then_one = abs_dirac_power(abs_dirac_power(F, 1, spec), 1, spec)
        assert one_then_one == abs_dirac_power(F, 2, spec)
        half_then_half = abs_dirac_power(
            abs_dirac_power(F, Fraction(1, 2), spec), Fraction(1, 2), spec)
        assert half_then_half == abs_dirac_power(F, 1, spec)
        mixed = abs_dirac_power(
            abs_dirac_power(F, Fraction(3, 2), spec), Fraction(1, 2), spec)
        assert mixed == abs_dirac_power(F, 2, spec)


def test_float_power_needs_point(pw):
    F = fourier_transform(A, pw)
    with pytest.raises(ValueError):
        abs_dirac_power(F, 0.37, CLASSICAL)
    out = abs_dirac_power(F, 0.37, CLASSICAL, HALF)
    assert isinstance(next(iter(out.coeffs[1].values())), float)


def test_smooth_seminorm_composition(pw):
    # || |D|^alpha phi ||_L2 through Plancherel == dual 2-norm of the
    # alpha-scaled transform
    from qsu2.fourier import dual_lp_norm
    rng = random.Random(31)
    f = random_element(rng, 2, 3)
    F = fourier_transform(f, pw)
    lhs = dual_lp_norm(abs_dirac_power(F, 2, CLASSICAL), 2, HALF)
    g = apply_abs_dirac(apply_abs_dirac(f, CLASSICAL, pw), CLASSICAL, pw)
    want = math.sqrt(float(evaluate(haar(g * star(g)), HALF)))
    assert lhs == pytest.approx(want, rel=1e-12)


# -- commutators -------------------------------------------------------------------

def test_commutator_with_scalar_vanishes(pw):
    rng = random.Random(32)
    for _ in range(5):
        b = random_element(rng, 3, 3)
        assert commutator_apply(UNIT, b, CLASSICAL, pw).is_zero()
        assert commutator_apply(UNIT, b, QDEFORMED, pw).is_zero()


def test_commutator_linearity_in_b(pw):
    rng = random.Random(33)
    a = random_element(rng, 2, 2)
    b1 = random_element(rng, 2, 2)
    b2 = random_element(rng, 2, 2)
    lhs = commutator_apply(a, b1 + b2.scale(Q), CLASSICAL, pw)
    rhs = (commutator_apply(a, b1, CLASSICAL, pw)
           + commutator_apply(a, b2, CLASSICAL, pw).scale(Q))
    assert lhs == rhs


def _expansion_norm_sq(a_mono, b_mono, tk, ts, spec, pw):
    """sum_m sum_(u,t) (|lam_m| - |lam_s|)^2 |C|^2 q_t/d_m for the product
    of two unitary entries; the exact transform-side route to the
    commutator's squared L2 norm."""
    total = ZERO
    csq = pw.clebsch_squared(tk, ts)
    (ti, tj), (tp, tr) = a_mono, b_mono
    lam_s = spec.abs_eigenvalue(ts)
    for (i2, j2, p2, r2, tm, tu, tt), c2 in csq.items():
        if (i2, j2, p2, r2) != (ti, tj, tp, tr):
            continue
        diff = spec.abs_eigenvalue(tm) - lam_s
        total = total + diff * diff * c2 * q_weight(tt) / quantum_dimension(tm)
    return total


@pytest.mark.parametrize("spec", [CLASSICAL, QDEFORMED])
def test_commutator_norm_matches_expansion(pw, spec):
    # || d(t^k_ij) t^s_pq ||^2 computed directly equals the product-
    # decomposition expansion, exactly, for k, s <= 1
    for tk in (1, 2):
        for ts in (1, 2):
            pairs_k = [(-tk, -tk), (-tk, tk) if tk else (0, 0)]
            pairs_s = [(ts, -ts) if ts else (0, 0), (ts, ts)]
            for (ti, tj) in pairs_k:
                for (tp, tr) in pairs_s:
                    aa = pw.unitary_entry(tk, ti, tj)
                    bb = pw.unitary_entry(ts, tp, tr)
                    direct = commutator_apply(aa, bb, spec, pw)
                    val = haar(direct * star(direct))
                    if isinstance(val, QRadical):
                        val = val.as_scalar()
                    want = _expansion_norm_sq(
                        (ti, tj), (tp, tr), tk, ts, spec, pw)
                    assert val == want


def test_factorwise_norm_identity(pw):
    # ||(|D|a) b - a (|D| b)||^2 == (lam_k - lam_s)^2 ||ab||^2 exactly
    spec = QDEFORMED
    tk, ts = 2, 1
    aa = pw.unitary_entry(tk, 0, 2)
    bb = pw.unitary_entry(ts, -1, 1)
    lam_k, lam_s = spec.abs_eigenvalue(tk), spec.abs_eigenvalue(ts)
    lhs_elem = (apply_abs_dirac(aa, spec, pw) * bb
                - aa * apply_abs_dirac(bb, spec, pw))
    lhs = haar(lhs_elem * star(lhs_elem))
    prod = aa * bb
    rhs = (lam_k - lam_s) ** 2 * haar(prod * star(prod))
    if isinstance(lhs, QRadical):
        lhs = lhs.as_scalar()
    if isinstance(rhs, QRadical):
        rhs = rhs.as_scalar()
    assert lhs == rhs


# -- boundedness-condition ratios --------------------------------------------

def test_ratio_vanishes_on_equal_spins(pw):
    assert boundedness_ratio_sq(2, 2, (0, 0, 0, 2), CLASSICAL, pw) == ZERO


def test_ratio_spin_zero_case(pw):
    # products with spin 0 are trivial: t^k_ij * 1 = t^k_ij, so the ratio
    # closes through the orthogonality data alone:
    #   ratio^2 = |lam_k - lam_0|^2 * (q_j / d_k) / (q_0 / d_0)
    for spec in (CLASSICAL, QDEFORMED):
        for (ti, tj) in [(-1, -1), (-1, 1), (1, -1), (1, 1)]:
            got_sq = boundedness_ratio_sq(1, 0, (ti, tj, 0, 0), spec, pw)
            diff = spec.abs_eigenvalue(1) - spec.abs_eigenvalue(0)
            want = diff * diff * q_weight(tj) / quantum_dimension(1)
            assert got_sq == want


def test_ratio_finite_and_scan_rows(pw):
    rows = boundedness_scan(3, QDEFORMED, pw, HALF)
    assert rows
    assert all(math.isfinite(r["ratio"]) for r in rows)
    # spot check one value against the single-ratio path
    row = rows[5]
    sq = boundedness_ratio_sq(
        int(2 * row["k"]), int(2 * row["s"]),
        (int(2 * row["i"]), int(2 * row["j"]),
         int(2 * row["p"]), int(2 * row["r"])), QDEFORMED, pw)
    assert math.sqrt(float(evaluate(sq, HALF))) == pytest.approx(row["ratio"])


def test_classical_scan_bounded_at_desk_scale(pw):
    # the classical family's ratios stay below a fixed constant over the
    # scanned range at q in {1/2, 4/5}; reported, not asserted as a theorem
    for q0 in (Fraction(1, 2), Fraction(4, 5)):
        rows = boundedness_scan(3, CLASSICAL, pw, QPoint(q0))
        sup = max(r["ratio"] for r in rows)
        assert sup < 25.0
