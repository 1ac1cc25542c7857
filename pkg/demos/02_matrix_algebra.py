"""Matrix algebra over max-plus: products, powers, trace, Kleene star.

Run with:  python3 demos/02_matrix_algebra.py
"""

import numpy as np

import tropsolve as ts

A = ts.as_matrix([[0, -3], [-5, -2]])
B = ts.as_matrix([[0, -8], [5, -3]])

# The matrix product replaces sum-of-products with max-of-sums.
print("A (x) B =\n", ts.mat_mul(A, B))
print("A (+) B =\n", ts.mat_add(A, B))
print("A^2 =\n", ts.mat_pow(A, 2))
print("tr A =", ts.trace(A), "   tr(AB) =", ts.trace(ts.mat_mul(A, B)))

# Scalar multiplication shifts every entry.
print("(-2) (x) A =\n", ts.scalar_mul(-2.0, A))

# The bounded star I (+) A (+) ... (+) A^(n-1) accumulates best walks of
# every length below n.
print("A* =\n", ts.kleene_star(A))

# The conjugate of a vector inverts its nonzero entries; for a regular
# vector the conjugate is a one-sided inverse: x^- (x) x = 0.
x = ts.as_vector([0, 5])
xc = ts.conjugate(x)
print("x =", x, "  x^- =", xc, "  x^- x =", np.max(xc + x))

# Collinear vectors differ by one scalar factor; redundant generators are
# dropped while preserving the linear span.
G = ts.as_matrix([[0, -5], [5, 0]])
print("collinearity factor:", ts.collinear(G[:, 0], G[:, 1]))
print("reduced generators:\n", ts.reduce_generators(G))
