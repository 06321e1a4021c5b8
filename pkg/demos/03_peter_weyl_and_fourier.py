"""Peter-Weyl matrices, orthogonality, and the quantum Fourier transform.

The spin-l coefficient matrix is built by coacting on quantum-plane
monomials; orthogonality against the quantum trace diag(q^-2i) holds
exactly, and the Fourier transform inverts and satisfies Plancherel
without any tolerance.
"""

import random

from qsu2.qarith import QPoint
from qsu2.algebra import haar, star, random_element
from qsu2.peterweyl import PWTable, quantum_dimension
from qsu2.fourier import fourier_transform, inverse_fourier, plancherel_sum

pw = PWTable(8)

print("spin 1/2 block is the generator matrix:")
for key, val in sorted(pw.entries(1).items()):
    print("  t[%2d,%2d] = %s" % (key[0], key[1], val))

print("spin 1 block (unnormalized, with separate row normalizers):")
for key, val in sorted(pw.entries(2).items()):
    print("  T[%2d,%2d] = %s" % (key[0], key[1], val))
print("row normalizer squares:", {k: str(v) for k, v in pw.norm_sq(2).items()})
print("quantum dimension d_1 = [3]_q =", quantum_dimension(2))

print("orthogonality relations, all spins up to 3/2, all index tuples:")
print("  violations:", pw.orthogonality_violations(3))

rng = random.Random(0)
f = random_element(rng, 3, 4)
fhat = fourier_transform(f, pw)
print("a random polynomial transforms to:", fhat)
print("round trip is exact:", inverse_fourier(fhat, pw) == f)

lhs = haar(f * star(f))
rhs = plancherel_sum(fhat)
print("Plancherel, exactly: h(f f*) ==", "sum d_l ||fhat||_HS^2:", lhs == rhs)
print("  common value at q = 7/10:", float(lhs.evaluate(QPoint("7/10"))))
