"""Cohomological inputs by exact linear algebra.

The graded pieces of the Jacobian ring R = Q[x_0..x_n]/(dF/dx_0, ..., dF/dx_n)
of a quasi-smooth weighted-homogeneous F compute primitive Hodge numbers:

  * for the degree-6 surface -y^2 + x^3 - s1^3 + t1^2 in P(2,3,2,3), the
    degree-2 piece is 2-dimensional, so h^2 of the surface is 2 + 1 = 3;
  * for a quasi-smooth degree-d threefold in weighted P^4 with weights w,
    h^3 = sum over q of dim R_((q+1)d - sum(w)), q = 0..3.

dim R_k is (number of weighted-degree-k monomials) minus the rank of the
degree-k piece of the Jacobian ideal, computed over the rationals with
Fraction Gaussian elimination (no tolerances exist anywhere; dimensions are
integers).  When every partial is a single monomial (diagonal F), the ideal
piece is spanned by monomials and the rank is a set count.

Milnor numbers of weighted-homogeneous isolated singularities come from the
product formula mu = prod(d / w_i - 1); the Euler characteristic of the
singular member is chi of the smooth member plus the sum of the Milnor
numbers of its singular points.  Even Betti numbers of smooth members of this
family are 1 in each of degrees 0, 2, 4, 6 and are not recomputed.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from . import gridcount
from .counting import PURE_PYTHON_LIMIT
from .curves import fermat_member, local_surface_normalized
from .fields import make_field
from .wpoly import WPolynomial


@dataclass(frozen=True)
class GradedRingSpec:
    """A weighted-homogeneous polynomial whose Jacobian ring is to be graded.

    Quasi-smoothness (partials vanish simultaneously only at the origin) is
    assumed for user-supplied polynomials, not verified; hodge_h3_smooth can
    run a finite-field spot check and warn.
    """

    poly: WPolynomial

    def __post_init__(self):
        if not self.poly.terms:
            raise ValueError("zero polynomial has no Jacobian ring grading")
        if not self.poly.is_weighted_homogeneous():
            raise ValueError("polynomial must be weighted-homogeneous")
        if self.poly.has_eisenstein_coefficients():
            raise ValueError("Jacobian ring dimensions are computed over the rationals")

    @property
    def weights(self) -> tuple[int, ...]:
        return self.poly.weights

    @property
    def degree(self) -> int:
        return self.poly.weighted_degree() or 0


def monomials_of_weighted_degree(weights: tuple[int, ...], k: int) -> list[tuple[int, ...]]:
    """All exponent tuples with sum(w_i * e_i) = k, lexicographic order."""
    if k < 0:
        return []
    out: list[tuple[int, ...]] = []

    def recurse(i: int, remaining: int, prefix: tuple[int, ...]):
        if i == len(weights):
            if remaining == 0:
                out.append(prefix)
            return
        w = weights[i]
        for e in range(remaining // w + 1):
            recurse(i + 1, remaining - e * w, prefix + (e,))

    recurse(0, k, ())
    return out


def _fraction_rank(rows: list[list[Fraction]]) -> int:
    """Exact rank by Gaussian elimination, pivoting on any nonzero entry."""
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    rows = [row[:] for row in rows]
    pivot_row = 0
    for col in range(ncols):
        pivot = None
        for r in range(pivot_row, len(rows)):
            if rows[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        rows[pivot_row], rows[pivot] = rows[pivot], rows[pivot_row]
        pv = rows[pivot_row][col]
        for r in range(pivot_row + 1, len(rows)):
            factor = rows[r][col] / pv
            if factor == 0:
                continue
            row = rows[r]
            top = rows[pivot_row]
            for c in range(col, ncols):
                row[c] -= factor * top[c]
        pivot_row += 1
        rank += 1
        if pivot_row == len(rows):
            break
    return rank


def jacobian_ring_dim(spec: GradedRingSpec, k: int) -> int:
    """Dimension of the degree-k graded piece of the Jacobian ring."""
    if k < 0:
        return 0
    weights = spec.weights
    basis = monomials_of_weighted_degree(weights, k)
    if not basis:
        return 0
    partials = [spec.poly.partial_derivative(v) for v in spec.poly.variables]
    partials = [g for g in partials if g.terms]
    monomial_ideal = all(len(g.terms) == 1 for g in partials)
    if monomial_ideal:
        hit: set[tuple[int, ...]] = set()
        for g in partials:
            (g_exps,) = g.terms.keys()
            shift = k - spec.poly.term_weighted_degree(g_exps)
            for m in monomials_of_weighted_degree(weights, shift):
                hit.add(tuple(a + b for a, b in zip(m, g_exps)))
        return len(basis) - len(hit)
    index = {m: i for i, m in enumerate(basis)}
    rows: list[list[Fraction]] = []
    for g in partials:
        g_degree = g.weighted_degree()
        for m in monomials_of_weighted_degree(weights, k - g_degree):
            row = [Fraction(0)] * len(basis)
            for g_exps, coeff in g.terms.items():
                target = tuple(a + b for a, b in zip(m, g_exps))
                row[index[target]] += coeff
            rows.append(row)
    return len(basis) - _fraction_rank(rows)


def quasi_smooth_spot_check(spec: GradedRingSpec, p: int = 7) -> bool:
    """Finite-field sanity check: do the partials share a nonzero common zero
    over F_p?  Returns True when none is found (consistent with quasi-smooth).

    A reduction can acquire extra singular points, so False is only a warning
    sign, never a proof of failure; True over one prime is likewise only
    evidence.  Skipped (returns True) when the grid is too large.
    """
    if p**spec.poly.nvars > 50 * PURE_PYTHON_LIMIT:
        return True
    field = make_field(p)
    partials = [spec.poly.partial_derivative(v) for v in spec.poly.variables]
    constraints = [g for g in partials if g.terms]
    if not constraints:
        return False
    return all(not any(pt) for pt in gridcount.common_zeros(constraints, field))


def hodge_h3_smooth(spec: GradedRingSpec, check_quasi_smooth: bool = True) -> int:
    """h^3 of a quasi-smooth hypersurface threefold in weighted P^4.

    Sums dim R_((q+1)d - sum(w)) over q = 0..3.  The value depends only on
    (d, weights) among quasi-smooth members, so any representative works; the
    diagonal member is the cheap one.
    """
    if spec.poly.nvars != 5:
        raise ValueError("h^3 formula applies to hypersurface threefolds in weighted P^4")
    if check_quasi_smooth and not quasi_smooth_spot_check(spec):
        warnings.warn("representative may not be quasi-smooth: partials share a "
                      "nonzero common zero over a test prime", stacklevel=2)
    d = spec.degree
    total_weight = sum(spec.weights)
    return sum(jacobian_ring_dim(spec, (q + 1) * d - total_weight) for q in range(4))


def fermat_spec(degree: int, weights: tuple[int, ...],
                variables: tuple[str, ...] | None = None) -> GradedRingSpec:
    """GradedRingSpec for the diagonal member of the given degree and weights."""
    return GradedRingSpec(poly=fermat_member(degree, weights, variables))


def milnor_quasihomogeneous(degree: int, local_weights: tuple[int, ...]) -> int:
    """Milnor number prod(d / w_i - 1) of a quasi-homogeneous isolated
    singularity, evaluated exactly.

    Requires d / w_i > 1 for every i (otherwise the germ is not an isolated
    singularity of this form) and an integral product.
    """
    mu = Fraction(1)
    for w in local_weights:
        factor = Fraction(degree, w) - 1
        if factor <= 0:
            raise ValueError(
                f"d/w = {degree}/{w} <= 1: not an isolated quasi-homogeneous "
                f"singularity of this form")
        mu *= factor
    if mu.denominator != 1:
        raise ValueError(f"product formula gives non-integer {mu}; "
                         f"weights {local_weights} do not define this normal form")
    return int(mu)


def h4_sigma_total(local_h2_prim: int, num_points: int) -> int:
    """Total dimension of cohomology supported on the singular set: every
    singular point contributes its local primitive h^2."""
    if local_h2_prim < 0 or num_points < 0:
        raise ValueError("inputs must be nonnegative")
    return local_h2_prim * num_points


def chi_singular(chi_smooth: int, milnor_numbers: list[int]) -> int:
    """Euler characteristic of the singular member: chi of the smooth member
    plus the sum of the Milnor numbers (odd-dimensional hypersurface case)."""
    return chi_smooth + sum(milnor_numbers)


@dataclass(frozen=True)
class CohomologyInputs:
    """The quadruple of cohomological inputs the rank computation consumes."""

    h4_sigma: int
    chi: int
    milnor_numbers: tuple[int, ...]
    h3_smooth: int
    local_h2_prim: int
    h2_surface: int


def builtin_cohomology_inputs(num_singular: int = 9) -> CohomologyInputs:
    """Assemble the inputs for the built-in threefold.

    local h^2_prim from the degree-2 piece of the local surface's Jacobian
    ring; h^3 of a smooth member from the diagonal degree-6 representative;
    one Milnor number 4 per singular point; chi from h^0 = h^2 = h^4 = h^6 = 1.
    """
    surface_spec = GradedRingSpec(poly=local_surface_normalized())
    local_h2 = jacobian_ring_dim(surface_spec, 2)
    h3 = hodge_h3_smooth(fermat_spec(6, (2, 3, 1, 1, 1), ("x", "y", "z0", "z1", "z2")))
    milnor = milnor_quasihomogeneous(6, (2, 3, 2, 3))
    milnor_numbers = (milnor,) * num_singular
    chi_smooth = 4 - h3
    return CohomologyInputs(
        h4_sigma=h4_sigma_total(local_h2, num_singular),
        chi=chi_singular(chi_smooth, list(milnor_numbers)),
        milnor_numbers=milnor_numbers,
        h3_smooth=h3,
        local_h2_prim=local_h2,
        h2_surface=local_h2 + 1,
    )
