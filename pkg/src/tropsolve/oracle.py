"""Brute-force cross-checks for the closed-form results.

Nothing here reuses the solver's formulas.  ``grid_min`` lower-bounds the
constrained minimum by direct evaluation over a lattice of candidate
vectors, ``cycle_mean_oracle`` recomputes the spectral radius by
exhaustive enumeration of simple cycles, and ``sample_solution_family``
stress-tests a solution cone by drawing random regular combinations.
Reports are deterministic: the same inputs and seed reproduce them
byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ResourceError, ShapeError
from .semiring import MAX_PLUS, Semifield
from .solver import ProblemInstance, SolutionCone, objective
from .tensor import as_matrix, entrywise_leq, is_regular, mat_vec

__all__ = [
    "DEFAULT_TOLERANCE",
    "CYCLE_ENUMERATION_CAP",
    "OracleReport",
    "FamilyFailure",
    "FamilyReport",
    "grid_min",
    "cycle_mean_oracle",
    "sample_solution_family",
    "scalar_close",
]

DEFAULT_TOLERANCE = 1e-9
CYCLE_ENUMERATION_CAP = 8


@dataclass(frozen=True)
class OracleReport:
    """Grid-search estimate of the constrained minimum.

    ``estimated_min`` is the exact minimum of the objective over the
    evaluated lattice points that satisfy the constraint (``None`` when
    no lattice point is feasible); ties in ``argmin`` are broken toward
    the lexicographically smallest vector.
    """

    estimated_min: float | None
    argmin: tuple[float, ...] | None
    grid_step: float
    grid_box: tuple[tuple[float, float], ...]
    samples_evaluated: int
    feasible_found: bool


@dataclass(frozen=True)
class FamilyFailure:
    trial: int
    u: tuple[float, ...]
    kind: str  # "constraint" | "objective" | "regularity"
    observed: float | None


@dataclass(frozen=True)
class FamilyReport:
    trials: int
    seed: int
    failures: tuple[FamilyFailure, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


def _normalize_box(box, n: int) -> tuple[tuple[float, float], ...]:
    box = list(box)
    if len(box) == 2 and np.isscalar(box[0]):
        box = [tuple(box)] * n
    if len(box) != n:
        raise ShapeError(f"expected {n} coordinate intervals, got {len(box)}")
    out = []
    for lo, hi in box:
        lo, hi = float(lo), float(hi)
        if not (np.isfinite(lo) and np.isfinite(hi) and lo <= hi):
            raise DomainError(f"invalid grid interval [{lo}, {hi}]")
        out.append((lo, hi))
    return tuple(out)


def grid_min(
    instance: ProblemInstance,
    box,
    step: float,
    *,
    pin_first: bool = True,
) -> OracleReport:
    """Minimum of ``x^- A x`` over an evaluation lattice, constraints kept.

    ``box`` is one ``(lo, hi)`` pair broadcast to every coordinate or a
    sequence of per-coordinate pairs; lattice points run from ``lo`` to
    ``hi`` inclusive in multiples of ``step``.  Since objective and
    constraints are invariant under scaling, the first coordinate is
    pinned to the identity by default, which drops one grid dimension.
    Max-plus instances only.
    """
    sf = instance.semifield
    if sf is not MAX_PLUS:
        raise DomainError("the grid oracle supports max-plus instances only")
    step = float(step)
    if not (np.isfinite(step) and step > 0):
        raise DomainError(f"grid step must be a positive real, got {step!r}")
    n = instance.n
    grid_box = _normalize_box(box, n)

    axes = []
    for i, (lo, hi) in enumerate(grid_box):
        if i == 0 and pin_first:
            axes.append(np.array([sf.one]))
        else:
            count = int(np.floor((hi - lo) / step + 1e-9)) + 1
            axes.append(lo + step * np.arange(count))
    mesh = np.meshgrid(*axes, indexing="ij")
    X = np.stack([m.reshape(-1) for m in mesh])  # (n, P), lexicographic point order
    total = X.shape[1]

    Bx = np.max(instance.B[:, :, None] + X[None, :, :], axis=1)
    feasible = np.all(Bx <= X, axis=0)
    if not feasible.any():
        return OracleReport(
            estimated_min=None,
            argmin=None,
            grid_step=step,
            grid_box=grid_box,
            samples_evaluated=total,
            feasible_found=False,
        )
    Ax = np.max(instance.A[:, :, None] + X[None, :, :], axis=1)
    obj = np.max(Ax - X, axis=0)
    best = int(np.argmin(np.where(feasible, obj, np.inf)))
    return OracleReport(
        estimated_min=float(obj[best]),
        argmin=tuple(float(v) for v in X[:, best]),
        grid_step=step,
        grid_box=grid_box,
        samples_evaluated=total,
        feasible_found=True,
    )


def cycle_mean_oracle(
    A, sf: Semifield = MAX_PLUS, *, cap: int = CYCLE_ENUMERATION_CAP
) -> float:
    """Spectral radius recomputed as the best mean weight of a simple cycle.

    Enumerates every simple cycle of the nonzero-pattern digraph by
    depth-first search (each cycle rooted at its smallest node) and takes
    the (+)-maximum of ``weight / length``.  Matrices with no cycle at
    all yield the zero element.  Exhaustive, hence capped at ``cap``
    nodes.
    """
    A = as_matrix(A, sf)
    n = A.shape[0]
    if n != A.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {A.shape}")
    if n > cap:
        raise ResourceError(f"cycle enumeration is exhaustive; n = {n} exceeds the cap of {cap}")

    best = sf.zero

    def walk(root: int, node: int, weight: float, length: int, visited: set[int]) -> None:
        nonlocal best
        for j in range(root, n):
            w = A[node, j]
            if w == sf.zero:
                continue
            if j == root:
                best = sf.add(best, (weight + w) / (length + 1))
            elif j not in visited:
                visited.add(j)
                walk(root, j, weight + w, length + 1, visited)
                visited.remove(j)

    for root in range(n):
        walk(root, root, 0.0, 0, {root})
    return best


def sample_solution_family(
    instance: ProblemInstance,
    cone: SolutionCone,
    trials: int,
    seed: int,
    *,
    u_low: int = -10,
    u_high: int = 10,
) -> FamilyReport:
    """Check ``trials`` random members of a solution cone against the instance.

    Draws integer-valued regular ``u`` (integer so the feasibility and
    attainment checks are exact in float64), forms ``x = generators (x) u``
    and records a failure whenever ``B x <= x`` is violated, the objective
    differs from ``cone.theta``, or ``x`` is not regular.
    """
    sf = instance.semifield
    rng = np.random.default_rng(seed)
    failures: list[FamilyFailure] = []
    r = cone.generators.shape[1]
    for t in range(trials):
        u = rng.integers(u_low, u_high + 1, size=r).astype(np.float64)
        x = mat_vec(cone.generators, u, sf)
        if not is_regular(x, sf):
            failures.append(FamilyFailure(t, tuple(u), "regularity", None))
            continue
        if not entrywise_leq(mat_vec(instance.B, x, sf), x, sf):
            failures.append(FamilyFailure(t, tuple(u), "constraint", None))
        value = objective(instance.A, x, sf)
        if value != cone.theta:
            failures.append(FamilyFailure(t, tuple(u), "objective", value))
    return FamilyReport(trials=trials, seed=seed, failures=tuple(failures))


def scalar_close(x: float | None, y: float | None, tolerance: float = DEFAULT_TOLERANCE) -> bool:
    """Exact comparison for integer-aligned scalars, tolerance otherwise."""
    if x is None or y is None:
        return x is y
    if x == y:
        return True
    if float(x).is_integer() and float(y).is_integer():
        return False
    return abs(x - y) <= tolerance
