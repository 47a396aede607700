"""Singular locus of a weighted projective hypersurface over F_p.

A point of the hypersurface is singular exactly when every partial derivative
of the defining polynomial vanishes there, provided the ambient space is
smooth at the point.  The ambient P(w_0..w_n) is singular precisely where the
gcd of the weights on a point's support exceeds 1, so such points are set
aside instead of being classified by the partial criterion.

Membership itself comes for free away from characteristic dividing the degree:
the weighted Euler identity sum w_i x_i dF/dx_i = d * F forces F = 0 wherever
all partials vanish, as long as p does not divide d.  It is asserted anyway,
and checked explicitly (as a filter) when p | d.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable

from . import gridcount
from .counting import (DEFAULT_BUDGET, PURE_PYTHON_LIMIT, WeightedSpace,
                       _check_budget, _resolve_omega, canonical_representative)
from .errors import ConsistencyError
from .fields import PrimeField
from .wpoly import WPolynomial, euler_combination, support_gcd


@dataclass(frozen=True)
class ProjectivePoint:
    """Canonical representative of a point of weighted projective space."""

    coordinates: tuple[int, ...]
    weights: tuple[int, ...]

    def __str__(self) -> str:
        return ":".join(str(c) for c in self.coordinates)


@dataclass(frozen=True)
class SingularReport:
    """Outcome of a singular-locus scan.

    matches_expected is None when no expected list was supplied (for example
    p != 1 mod 3, where the reference list does not exist).
    excluded_ambient holds critical points discarded because the ambient
    space itself is singular there.
    """

    points: tuple[ProjectivePoint, ...]
    matches_expected: bool | None
    excluded_ambient: tuple[ProjectivePoint, ...]


def euler_check(poly: WPolynomial, W: WeightedSpace) -> bool:
    """Exact symbolic test of sum w_i x_i dF/dx_i = d * F.

    Holds if and only if F is weighted-homogeneous (of its top degree d),
    so it doubles as a self-test of the derivative code.
    """
    if tuple(W.weights) != poly.weights:
        return False
    d = poly.weighted_degree()
    if d is None:
        return True
    return euler_combination(poly) == poly * d


def _critical_points(field: PrimeField, poly: WPolynomial,
                     threads: int) -> list[tuple[int, ...]]:
    partials = [poly.partial_derivative(v) for v in poly.variables]
    constraints = [g for g in partials if g.terms]
    if not constraints:
        raise ValueError("degenerate input: every partial derivative vanishes identically")
    omega_image = _resolve_omega(field, poly)
    if field.p**poly.nvars <= PURE_PYTHON_LIMIT:
        return [pt for pt in product(range(field.p), repeat=poly.nvars)
                if all(g.evaluate_mod_p(field, pt, omega_image) == 0 for g in constraints)]
    return gridcount.common_zeros(constraints, field, threads=threads,
                                  omega_image=omega_image)


def singular_points(field: PrimeField, poly: WPolynomial, W: WeightedSpace,
                    budget: int = DEFAULT_BUDGET, threads: int = 1,
                    expected: Iterable[ProjectivePoint] | None = None) -> SingularReport:
    """Scan F_p^n for common zeros of all partials and report the orbits.

    Points are canonicalized and deduplicated, so the scan is orbit-exact.
    When ``expected`` is given, matches_expected records set equality of the
    reported points with it.
    """
    if tuple(W.weights) != poly.weights:
        raise ValueError("weighted space disagrees with the polynomial's weights")
    if not poly.is_weighted_homogeneous():
        raise ValueError("polynomial is not weighted-homogeneous for these weights")
    _check_budget(field.p, poly.nvars, budget, "singular scan")
    p = field.p
    d = poly.weighted_degree() or 0
    omega_image = _resolve_omega(field, poly)

    reps: set[tuple[int, ...]] = set()
    for pt in _critical_points(field, poly, threads):
        if not any(pt):
            continue
        on_surface = poly.evaluate_mod_p(field, pt, omega_image) == 0
        if d % p == 0:
            if not on_surface:
                continue  # Euler shortcut unavailable, filter explicitly
        elif not on_surface:
            raise ConsistencyError(
                f"critical point {pt} is off the hypersurface although p does not divide {d}")
        reps.add(canonical_representative(pt, poly.weights, p))

    regular: list[ProjectivePoint] = []
    ambient: list[ProjectivePoint] = []
    for rep in sorted(reps):
        point = ProjectivePoint(coordinates=rep, weights=poly.weights)
        if support_gcd(poly.weights, rep) > 1:
            ambient.append(point)
        else:
            regular.append(point)

    matches: bool | None = None
    if expected is not None:
        matches = set(regular) == set(expected)
    return SingularReport(points=tuple(regular), matches_expected=matches,
                          excluded_ambient=tuple(ambient))


def expected_singularities(field: PrimeField) -> list[ProjectivePoint]:
    """The nine singular points of the built-in threefold over F_p, p = 1 mod 3.

    Built from the cube roots of unity c as (0:0:c:1:0), (0:0:c:0:1) and
    (0:0:0:c:1), then canonicalized.
    """
    if field.p % 3 != 1:
        raise ValueError(f"no primitive cube root in F_{field.p}; expected list unavailable")
    weights = (2, 3, 1, 1, 1)
    raw = []
    for c in field.cube_roots:
        raw.append((0, 0, c, 1, 0))
        raw.append((0, 0, c, 0, 1))
        raw.append((0, 0, 0, c, 1))
    reps = sorted({canonical_representative(pt, weights, field.p) for pt in raw})
    if len(reps) != 9:
        raise ConsistencyError("expected singular list does not have 9 distinct orbits")
    return [ProjectivePoint(coordinates=r, weights=weights) for r in reps]
