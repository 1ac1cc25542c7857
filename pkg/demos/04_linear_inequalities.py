"""Complete regular solutions of B x <= x.

Run with:  python3 demos/04_linear_inequalities.py
"""

import numpy as np

import tropsolve as ts

B = ts.as_matrix([[0, -8], [5, -3]])

# Feasibility is decided by Tr(B) = tr B (+) ... (+) tr B^n: regular
# solutions exist iff Tr(B) <= 0, i.e. no cycle has positive weight.
print("Tr(B) =", ts.big_tr(B))

result = ts.solve_linear_inequality(B)
print("feasible:", result.verdict.feasible)
print("generator matrix B* =\n", result.generators)

# Every regular combination B* u solves the inequality.
rng = np.random.default_rng(1)
for _ in range(3):
    u = rng.integers(-6, 7, size=2).astype(float)
    x = ts.mat_vec(result.generators, u)
    print("  u =", u, " x = B*u =", x, " B x <= x:",
          ts.entrywise_leq(ts.mat_vec(B, x), x))

# Raising one diagonal entry above 0 creates a positive cycle and kills
# every regular solution.
B_bad = B.copy()
B_bad[0, 0] = 1.0
bad = ts.solve_linear_inequality(B_bad)
print("with b11 = 1: feasible:", bad.verdict.feasible, " Tr =", bad.verdict.tr_value)
