"""Fourier multipliers and Dirac-type spectral diagnostics.

A multiplier acts through one matrix per spin; symbols extract back
exactly, the adjoint is the entrywise adjoint, and the L^p -> L^q bound
functional evaluates over the finite set of attained operator norms.
Dirac families classify by exact ratio/exponent tests.
"""

import random
from fractions import Fraction

from qsu2.qarith import QScalar, QPoint, ONE, Q
from qsu2.algebra import A, B, haar, star, random_element
from qsu2.peterweyl import PWTable
from qsu2.fourier import FourierArray
from qsu2.multiplier import (
    apply_symbol, extract_symbol, adjoint_symbol, lp_lq_bound,
    l2_operator_norm, schwartz_seminorms,
)
from qsu2.spectral import (
    DiracSpec, summability_classify, commutator_apply, boundedness_scan,
)

pw = PWTable(8)
half = QPoint(Fraction(1, 2))
rng = random.Random(11)

# a random symbol up to spin 2, round-tripped through its operator
sigma = FourierArray({tl: {(tm, tn): QScalar.promote(rng.randint(-2, 2))
                           for tm in range(-tl, tl + 1, 2)
                           for tn in range(-tl, tl + 1, 2)
                           if rng.random() < 0.5}
                      for tl in range(0, 5)})
recovered = extract_symbol(lambda x: apply_symbol(sigma, x, pw), 4, pw)
print("extract(apply(sigma)) == sigma:", recovered == sigma)

ident = FourierArray.identity(range(0, 5))
print("identity bound at p = q = 2:", lp_lq_bound(ident, 2, 2, 4, half))
print("random-symbol L2 -> L2 norm:", l2_operator_norm(sigma, half))
print("random-symbol bound p=1.5 -> q=3:",
      lp_lq_bound(sigma, 1.5, 3.0, 4, half))

# Dirac families: summability at different points
for family, point in [("classical", QPoint(1)),
                      ("q-deformed", half),
                      ("classical", half)]:
    rep = summability_classify(DiracSpec(family), point)
    print(f"{family:11s} at q={point.q0}: spectral dimension = "
          f"{rep.spectral_dimension}   (plain multiplicity: "
          f"{rep.plain_multiplicity_dimension})")

# commutators: [|D|, a] b is exact; with scalars it vanishes
spec = DiracSpec("q-deformed")
print("[|D|, 1] b == 0:", commutator_apply(1, B, spec, pw).is_zero())
out = commutator_apply(A, B, spec, pw)
print("||[|D|, a] b||^2 =", haar(out * star(out)))

# the boundedness-condition scan (the CSV the CLI writes)
rows = boundedness_scan(2, spec, pw, half)
print(f"condition scan up to spin 1: {len(rows)} rows, "
      f"sup ratio = {max(r['ratio'] for r in rows):.6f}")

# smoothness seminorms of a symbol against the q-deformed eigenvalues
from qsu2.qarith import q_int, evaluate
lam = {tl: float(evaluate(q_int(2 * (tl + 1)), half)) for tl in range(0, 5)}
print("seminorms:", schwartz_seminorms(sigma, 1.0, 2.0, lam, half))
