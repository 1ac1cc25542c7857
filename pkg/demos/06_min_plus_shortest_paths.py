"""The min-plus twin: the same algebra computes shortest paths.

Run with:  python3 demos/06_min_plus_shortest_paths.py
"""

from tropsolve import MIN_PLUS, as_matrix, big_tr, kleene_star, spectral_radius

inf = float("inf")

# Edge costs of a little digraph; inf marks a missing edge (it is the
# zero element of min-plus).
W = as_matrix(
    [
        [0, 4, inf, 9],
        [inf, 0, 1, inf],
        [2, inf, 0, 3],
        [inf, inf, inf, 0],
    ],
    MIN_PLUS,
)

# The bounded star accumulates the cheapest walk of every length < n,
# which for nonnegative-cycle graphs is the all-pairs shortest path table.
D = kleene_star(W, MIN_PLUS)
print("all-pairs shortest costs:\n", D)
print("cost 0 -> 3:", D[0, 3], "(via 1 and 2)")

# Tr <= identity here means "no negative cycle", the classical
# feasibility condition for shortest paths.
print("Tr(W) =", big_tr(W, MIN_PLUS))

# The spectral radius becomes the minimum cycle mean.
print("minimum cycle mean:", spectral_radius(W, MIN_PLUS))
