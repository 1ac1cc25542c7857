"""Closed-form minimization of ``x^- A x`` under the constraint ``B x <= x``.

Everything here works over regular (zero-free) vectors ``x``.  The
centerpiece is :func:`solve_constrained`: the constrained minimum has the
closed form

    theta = (+) over k = 1..n, over exponent tuples with i1+...+ik <= n-k,
            of tr(A B**i1 ... A B**ik) ** (1/k)

and the optimizers are exactly ``x = (theta**-1 A (+) B)* u`` for regular
``u``.  No iteration or refinement is involved; the supporting pieces are
the feasibility function ``Tr``, the bounded Kleene star, and the
spectral radius (which is the unconstrained minimum).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError, HypothesisError, ResourceError, ShapeError
from .semiring import MAX_PLUS, Semifield
from .spectral import big_tr, is_irreducible, product_trace_sum, spectral_radius
from .tensor import (
    as_matrix,
    as_vector,
    conjugate,
    entrywise_leq,
    identity_matrix,
    is_regular,
    kleene_star,
    mat_add,
    mat_vec,
    reduce_generators,
    scalar_mul,
    _mm,
)

__all__ = [
    "THETA_ENUMERATION_CAP",
    "ProblemInstance",
    "FeasibilityVerdict",
    "InequalitySolution",
    "SolutionCone",
    "objective",
    "solve_linear_inequality",
    "compute_theta",
    "check_hypotheses",
    "solve_constrained",
    "solve_unconstrained",
    "is_solution",
]

# 2**n - 1 trace terms; past this the formula is refused rather than left to hang
THETA_ENUMERATION_CAP = 20


@dataclass(frozen=True)
class ProblemInstance:
    """A pair of equal-size square matrices: objective ``A``, constraint ``B``."""

    A: np.ndarray
    B: np.ndarray
    semifield: Semifield = MAX_PLUS

    def __post_init__(self):
        A = as_matrix(self.A, self.semifield)
        B = as_matrix(self.B, self.semifield)
        if A.shape[0] != A.shape[1]:
            raise ShapeError(f"objective matrix must be square, got {A.shape}")
        if B.shape != A.shape:
            raise ShapeError(f"constraint matrix shape {B.shape} does not match {A.shape}")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)

    @property
    def n(self) -> int:
        return self.A.shape[0]


@dataclass(frozen=True)
class FeasibilityVerdict:
    """Outcome of the ``Tr`` test: ``feasible`` iff ``tr_value <= 1``."""

    feasible: bool
    tr_value: float


@dataclass(frozen=True)
class InequalitySolution:
    """Solution of ``A x <= x``: a verdict plus, when feasible, the star
    matrix whose regular combinations enumerate the solutions."""

    verdict: FeasibilityVerdict
    generators: np.ndarray | None
    warnings: tuple[str, ...] = ()


@dataclass(frozen=True)
class SolutionCone:
    """The complete optimizer set ``{generators (x) u : u regular}``.

    ``closure_matrix`` is the full star matrix before collinear columns
    are dropped.  ``degenerate`` flags generator columns containing zero
    elements (possible only for reducible inputs under an override);
    combinations must then still use regular ``u``.
    """

    theta: float
    generators: np.ndarray
    closure_matrix: np.ndarray
    reduced: bool
    degenerate: bool = False
    warnings: tuple[str, ...] = ()


def objective(A, x, sf: Semifield = MAX_PLUS) -> float:
    """Value ``x^- (x) A (x) x`` of the objective at a regular vector."""
    A = as_matrix(A, sf)
    x = as_vector(x, sf)
    if not is_regular(x, sf):
        raise DomainError("objective is defined for regular vectors only")
    if A.shape[0] != A.shape[1] or A.shape[1] != x.shape[0]:
        raise ShapeError(f"dimension mismatch {A.shape} vs {x.shape}")
    return float(sf.np_reduce_add(conjugate(x, sf) + mat_vec(A, x, sf)))


def solve_linear_inequality(A, sf: Semifield = MAX_PLUS) -> InequalitySolution:
    """All regular solutions of ``A x <= x``, or a proof there are none.

    If ``Tr(A) <= 1`` the solutions are ``x = A* u`` over regular ``u``
    and the star matrix is returned; otherwise some cycle weight exceeds
    the identity, which rules out any regular solution.  Completeness of
    the star family is guaranteed for irreducible ``A``; for reducible
    ``A`` the family is still sound and the result carries a warning.
    """
    A = as_matrix(A, sf)
    tr_value = big_tr(A, sf)
    feasible = sf.leq(tr_value, sf.one)
    verdict = FeasibilityVerdict(feasible=feasible, tr_value=tr_value)
    if not feasible:
        return InequalitySolution(verdict=verdict, generators=None)
    warnings = ()
    if not is_irreducible(A, sf):
        warnings = (
            "completeness unverified: matrix is reducible, the star family may omit solutions",
        )
    return InequalitySolution(verdict=verdict, generators=kleene_star(A, sf), warnings=warnings)


def compute_theta(
    A, B, sf: Semifield = MAX_PLUS, enumeration_cap: int = THETA_ENUMERATION_CAP
) -> float:
    """Closed-form constrained minimum of ``x^- A x`` subject to ``B x <= x``.

    Enumerates, for each k = 1..n, every k-tuple of nonnegative integer
    exponents with sum at most n - k, and takes the idempotent sum of the
    k-th roots of ``tr(A B**i1 ... A B**ik)``.  Powers of ``B`` are cached;
    the term count is ``2**n - 1``, so ``n`` beyond ``enumeration_cap``
    raises :class:`ResourceError` instead of hanging.
    """
    A, B = as_matrix(A, sf), as_matrix(B, sf)
    if A.shape[0] != A.shape[1] or A.shape != B.shape:
        raise ShapeError(f"expected equal square matrices, got {A.shape} and {B.shape}")
    n = A.shape[0]
    if n > enumeration_cap:
        raise ResourceError(
            f"theta enumeration has 2**{n} - 1 trace terms; n = {n} exceeds the cap "
            f"of {enumeration_cap} (raise enumeration_cap to override)"
        )
    b_powers = [identity_matrix(n, sf)]
    for _ in range(n - 1):
        b_powers.append(_mm(b_powers[-1], B, sf))
    theta = sf.zero
    for k in range(1, n + 1):
        s = product_trace_sum(A, b_powers, k, n - k, exact=False, sf=sf)
        theta = sf.add(theta, sf.rational_pow(s, Fraction(1, k)))
    return theta


def check_hypotheses(A, B, sf: Semifield = MAX_PLUS) -> dict[str, bool]:
    """Evaluate the hypotheses under which the closed form is complete."""
    return {
        "irreducible_A": is_irreducible(A, sf),
        "irreducible_B": is_irreducible(B, sf),
        "spectral_radius_positive": spectral_radius(A, sf) != sf.zero,
        "constraint_feasible": sf.leq(big_tr(B, sf), sf.one),
    }


def solve_constrained(
    instance: ProblemInstance,
    *,
    override_irreducibility: bool = False,
    enumeration_cap: int = THETA_ENUMERATION_CAP,
    reduce: bool = True,
) -> SolutionCone:
    """Solve ``min x^- A x`` subject to ``B x <= x`` in closed form.

    Hypotheses: at least one of ``A``, ``B`` irreducible, the spectral
    radius of ``A`` nonzero, and ``Tr(B) <= 1``.  The irreducibility
    hypothesis (which backs completeness of the answer) can be overridden
    with ``override_irreducibility``, in which case the returned cone
    carries a warning; the other two cannot, since a zero spectral radius
    makes the minimum non-invertible and ``Tr(B) > 1`` leaves no regular
    feasible point at all.

    Returns the minimum ``theta``, the closure ``(theta**-1 A (+) B)*``,
    and its columns with collinear duplicates removed; every ``x =
    generators (x) u`` with regular ``u`` is feasible and attains
    ``theta``.
    """
    A, B, sf = instance.A, instance.B, instance.semifield
    warnings: list[str] = []
    if not (is_irreducible(A, sf) or is_irreducible(B, sf)):
        if not override_irreducibility:
            raise HypothesisError("neither A nor B irreducible", hypothesis="irreducibility")
        warnings.append("completeness unverified: neither A nor B is irreducible")
    if spectral_radius(A, sf) == sf.zero:
        raise HypothesisError(
            f"spectral radius of A is {sf.format_scalar(sf.zero)}",
            hypothesis="spectral radius",
        )
    tr_b = big_tr(B, sf)
    if not sf.leq(tr_b, sf.one):
        raise HypothesisError(
            f"Tr(B) = {sf.format_scalar(tr_b)} exceeds the identity: "
            "constraint set has no regular point",
            hypothesis="constraint feasibility",
        )
    theta = compute_theta(A, B, sf, enumeration_cap)
    combined = mat_add(scalar_mul(sf.inv(theta), A, sf), B, sf)
    closure = kleene_star(combined, sf)
    if not is_irreducible(combined, sf):
        warnings.append("combined matrix theta**-1 A (+) B is reducible; completeness unverified")
    generators = reduce_generators(closure, sf) if reduce else closure.copy()
    degenerate = bool((generators == sf.zero).any())
    if degenerate:
        warnings.append("some generator columns are not regular; use regular u only")
    return SolutionCone(
        theta=theta,
        generators=generators,
        closure_matrix=closure,
        reduced=reduce,
        degenerate=degenerate,
        warnings=tuple(warnings),
    )


def solve_unconstrained(A, sf: Semifield = MAX_PLUS, *, reduce: bool = True) -> SolutionCone:
    """Minimize ``x^- A x`` over all regular ``x`` (no constraints).

    The minimum is the spectral radius ``lam`` of the irreducible matrix
    ``A`` and the optimizers are ``x = (lam**-1 A)* u`` for regular ``u``.
    """
    A = as_matrix(A, sf)
    if not is_irreducible(A, sf):
        raise HypothesisError("matrix is not irreducible", hypothesis="irreducibility")
    lam = spectral_radius(A, sf)
    if lam == sf.zero:
        raise HypothesisError(
            f"spectral radius is {sf.format_scalar(sf.zero)}", hypothesis="spectral radius"
        )
    closure = kleene_star(scalar_mul(sf.inv(lam), A, sf), sf)
    generators = reduce_generators(closure, sf) if reduce else closure.copy()
    return SolutionCone(
        theta=lam,
        generators=generators,
        closure_matrix=closure,
        reduced=reduce,
        degenerate=bool((generators == sf.zero).any()),
    )


def is_solution(instance: ProblemInstance, theta: float, x) -> bool:
    """Membership test for the optimizer set at minimum value ``theta``.

    A regular ``x`` is an optimizer iff ``(theta**-1 A (+) B) x <= x``
    elementwise, equivalently iff the closure fixes it.
    """
    sf = instance.semifield
    x = as_vector(x, sf)
    if not is_regular(x, sf):
        raise DomainError("optimizer membership is defined for regular vectors only")
    combined = mat_add(scalar_mul(sf.inv(theta), instance.A, sf), instance.B, sf)
    return entrywise_leq(mat_vec(combined, x, sf), x, sf)
