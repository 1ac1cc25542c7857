"""Spectral radius, the Tr feasibility function, and irreducibility.

The spectral radius of a square matrix is computed from traces of its
powers; it equals the extremal value ``min over regular x of x^- A x``
and the best cycle mean of the associated digraph.  ``big_tr`` is the
related feasibility function deciding whether ``A x <= x`` has regular
solutions.  ``trace_binomial_rhs`` evaluates the binomial trace expansion
of ``tr (A (+) B)**m`` term by term; it exists chiefly so the identity
can be verified against the direct computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError, ShapeError
from .semiring import MAX_PLUS, Semifield
from .tensor import _mm, as_matrix, identity_matrix, trace

__all__ = [
    "SpectralSummary",
    "spectral_summary",
    "spectral_radius",
    "big_tr",
    "is_irreducible",
    "trace_binomial_rhs",
]


@dataclass(frozen=True)
class SpectralSummary:
    """Spectral radius together with the per-power traces it came from.

    ``per_power_traces`` holds ``(m, tr(A**m))`` for ``m = 1..n``; the
    radius is the idempotent sum of their m-th roots.
    """

    radius: float
    per_power_traces: tuple[tuple[int, float], ...]


def _power_traces(A: np.ndarray, sf: Semifield) -> list[tuple[int, float]]:
    n = A.shape[0]
    out = []
    P = A
    for m in range(1, n + 1):
        out.append((m, float(sf.np_reduce_add(np.diagonal(P)))))
        if m < n:
            P = _mm(P, A, sf)
    return out


def spectral_summary(A, sf: Semifield = MAX_PLUS) -> SpectralSummary:
    A = as_matrix(A, sf)
    if A.shape[0] != A.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {A.shape}")
    traces = _power_traces(A, sf)
    lam = sf.zero
    for m, t in traces:
        lam = sf.add(lam, sf.rational_pow(t, Fraction(1, m)))
    return SpectralSummary(radius=lam, per_power_traces=tuple(traces))


def spectral_radius(A, sf: Semifield = MAX_PLUS) -> float:
    """Maximal eigenvalue: the (+)-sum over m = 1..n of tr(A**m) ** (1/m)."""
    return spectral_summary(A, sf).radius


def big_tr(A, sf: Semifield = MAX_PLUS) -> float:
    """Feasibility function ``Tr(A) = tr A (+) ... (+) tr A**n``.

    ``A x <= x`` has regular solutions iff ``Tr(A) <= 1`` (the identity
    element); equivalently, iff no cycle weight exceeds the identity.
    """
    A = as_matrix(A, sf)
    if A.shape[0] != A.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {A.shape}")
    acc = sf.zero
    for _, t in _power_traces(A, sf):
        acc = sf.add(acc, t)
    return acc


def _reachable(adj: list[list[int]], start: int) -> np.ndarray:
    seen = np.zeros(len(adj), dtype=bool)
    seen[start] = True
    stack = [start]
    while stack:
        i = stack.pop()
        for j in adj[i]:
            if not seen[j]:
                seen[j] = True
                stack.append(j)
    return seen


def is_irreducible(A, sf: Semifield = MAX_PLUS) -> bool:
    """True iff the nonzero-pattern digraph of ``A`` is strongly connected.

    Equivalent to: no simultaneous row/column permutation puts ``A`` in
    block-triangular form.  A 1x1 matrix is irreducible by convention
    regardless of its entry.
    """
    A = as_matrix(A, sf)
    n = A.shape[0]
    if n != A.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {A.shape}")
    if n == 1:
        return True
    pattern = A != sf.zero
    fwd = [list(np.nonzero(pattern[i])[0]) for i in range(n)]
    bwd = [list(np.nonzero(pattern[:, i])[0]) for i in range(n)]
    return bool(_reachable(fwd, 0).all() and _reachable(bwd, 0).all())


def product_trace_sum(
    A: np.ndarray,
    b_powers: list[np.ndarray],
    k: int,
    budget: int,
    exact: bool,
    sf: Semifield,
) -> float:
    """(+)-sum of ``tr(A B**i1 ... A B**ik)`` over exponent tuples.

    Enumerates k-tuples of nonnegative integers with sum equal to
    ``budget`` (``exact=True``) or at most ``budget`` (``exact=False``),
    reusing the prefix product across the recursion.  ``b_powers`` must
    hold ``B**0 .. B**budget`` at least.
    """
    n = A.shape[0]
    ab = [_mm(A, bp, sf) for bp in b_powers[: budget + 1]]
    acc = sf.zero

    def rec(prefix: np.ndarray, parts_left: int, budget_left: int) -> None:
        nonlocal acc
        if parts_left == 0:
            acc = sf.add(acc, float(sf.np_reduce_add(np.diagonal(prefix))))
            return
        if exact and parts_left == 1:
            rec(_mm(prefix, ab[budget_left], sf), 0, 0)
            return
        for i in range(budget_left + 1):
            rec(_mm(prefix, ab[i], sf), parts_left - 1, budget_left - i)

    rec(identity_matrix(n, sf), k, budget)
    return acc


def trace_binomial_rhs(A, B, m: int, sf: Semifield = MAX_PLUS) -> float:
    """Right-hand side of the binomial trace identity for ``tr (A (+) B)**m``.

    Evaluates ``tr B**m  (+)  sum over k = 1..m, over compositions
    i1 + ... + ik = m - k, of tr(A B**i1 ... A B**ik)``.  Exactly equal to
    ``trace(mat_pow(mat_add(A, B), m))``; the term count is ``2**(m-1)``
    plus one.
    """
    A, B = as_matrix(A, sf), as_matrix(B, sf)
    if A.shape != B.shape or A.shape[0] != A.shape[1]:
        raise ShapeError(f"expected equal square matrices, got {A.shape} and {B.shape}")
    if m < 1 or m != int(m):
        raise DomainError(f"the binomial identity wants an integer m >= 1, got {m!r}")
    m = int(m)
    b_powers = [identity_matrix(A.shape[0], sf)]
    for _ in range(m):
        b_powers.append(_mm(b_powers[-1], B, sf))
    acc = trace(b_powers[m], sf)
    for k in range(1, m + 1):
        acc = sf.add(acc, product_trace_sum(A, b_powers, k, m - k, exact=True, sf=sf))
    return acc
