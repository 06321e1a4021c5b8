"""Exact arithmetic in the deformation parameter.

Scalars live in Q(q^(1/2)): Laurent fractions on the half-integer
exponent lattice, with formal square roots layered on top.  Everything
here is exact until an evaluation point enters.
"""

from fractions import Fraction

from qsu2 import QScalar, QPoint, Q, q_int, sqrt_scalar, bq_asymptotic_ratio

# q-integers [n]_q = (q^n - q^-n)/(q - q^-1); the argument is doubled so
# half-integers stay on the exact lattice
print("[1]_q =", q_int(2))
print("[2]_q =", q_int(4))
print("[1/2]_q =", q_int(1), " (a genuine fraction of half-powers)")

# the defining relation, checked exactly as polynomials
n = 7
lhs = q_int(2 * n) * (Q - 1 / Q)
print(f"[{n}]_q (q - q^-1) == q^{n} - q^-{n}:",
      lhs == Q ** n - (1 / Q) ** n)

# evaluation: rational points stay rational whenever possible
p = QPoint(Fraction(1, 2))
print("[3]_q at q = 1/2:", q_int(6).evaluate(p))
print("[3]_q at q = 2:  ", q_int(6).evaluate(QPoint(2)), "(same, by q <-> 1/q)")

# radicals canonicalize: squares are extracted, products merge
r = sqrt_scalar(q_int(4)) * sqrt_scalar(q_int(4) * Q ** 4)
print("sqrt([2]) * sqrt(q^4 [2]) =", r, " (collapsed to the base field)")

# growth: [n]_q is comparable to b_q^n with b_q = max(q, 1/q);
# the ratios increase monotonically inside a fixed interval
ratios = bq_asymptotic_ratio(12, QPoint(2))
print("[n]_q / b_q^n for n = 1..12 at q = 2:")
print("  ", ", ".join(f"{x:.4f}" for x in ratios))
print("   bounded within [1/b, 1/(1 - b^-2)] =",
      f"[{1/2}, {1/(1 - 0.25):.4f}]")
