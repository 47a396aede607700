"""Point counts of hypersurfaces in weighted projective space over F_p.

Three mutually cross-checking strategies, all exact:

  naive             enumerate the affine cone F_p^n, count zeros, and count
                    projective points by canonicalizing every nonzero solution
                    to its orbit representative;

  burnside          count the cone stratified by coordinate support, with an
                    exact divisibility check per stratum (each stratum's
                    solution count must be a nonnegative multiple of p - 1);

  weierstrass-fast  for equations of the shape y^2 = x^3 + f(z_1..z_k):
                    precompute the fiber table T[c] = #{(x,y): y^2 = x^3 + c}
                    = sum_x (1 + chi(x^3 + c)) once, then sum T over the
                    value histogram of f on F_p^k, reducing an O(p^(k+2))
                    enumeration to O(p^2 + p^k).

Projective counts are counts of F_p-points of the weighted projective
hypersurface.  A point whose support has weight gcd d > 1 carries a mu_d
stabilizer, and its q - 1 rational cone representatives split into
gcd(d, p - 1) plain-scaling orbits; identifying points therefore uses scaling
by the support-reduced weights w_i / d, under which every class has exactly
p - 1 cone representatives and the division by p - 1 is exact.  The classic
single-sum Burnside count of plain-scaling orbits is kept as
rational_orbit_count; it overcounts projective points exactly on strata with
d > 1 and is exposed for diagnostics only.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable

import numpy as np

from . import gridcount
from .errors import BudgetExceededError, ConsistencyError
from .fields import PrimeField, primitive_cube_root
from .wpoly import WPolynomial, support_gcd

DEFAULT_BUDGET = 10**9
# Below this grid size the pure-Python path costs nothing noticeable; it is
# also the reference the numpy engine is checked against in the tests.
PURE_PYTHON_LIMIT = 3_000
METHODS = ("naive", "burnside", "weierstrass-fast")


@dataclass(frozen=True)
class WeightedSpace:
    """Ambient weighted projective space, one positive weight per coordinate."""

    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if not self.weights or any(w < 1 for w in self.weights):
            raise ValueError(f"weights must be positive, got {self.weights}")

    @property
    def dimension(self) -> int:
        return len(self.weights) - 1


@dataclass(frozen=True)
class CountReport:
    """Result of one projective point count.

    cone_count includes the origin whenever the polynomial has no constant
    term (the origin then always solves F = 0).
    """

    p: int
    cone_count: int
    projective_count: int
    method: str
    elapsed: float


def _check_budget(p: int, nvars: int, budget: int, what: str):
    required = p**nvars
    if required > budget:
        raise BudgetExceededError(required=required, budget=budget, what=what)


def _resolve_omega(field: PrimeField, poly: WPolynomial) -> int | None:
    if poly.has_eisenstein_coefficients():
        return primitive_cube_root(field)
    return None


def _zero_count_python(poly: WPolynomial, field: PrimeField,
                       omega_image: int | None = None) -> int:
    """Reference exhaustive count, straight per-point evaluation."""
    p = field.p
    terms = gridcount.reduced_terms(poly, field, omega_image)
    n = poly.nvars
    if n == 0:
        return 1 if sum(c for _, c in terms) % p == 0 else 0
    max_exp = max((max(e) for e, _ in terms), default=0)
    powers = [[pow(v, e, p) for e in range(max_exp + 1)] for v in range(p)]
    compiled = [([(i, e) for i, e in enumerate(exps) if e], c) for exps, c in terms]
    count = 0
    for pt in product(range(p), repeat=n):
        acc = 0
        for active, c in compiled:
            t = c
            for i, e in active:
                t = t * powers[pt[i]][e] % p
            acc += t
        if acc % p == 0:
            count += 1
    return count


def count_cone_naive(field: PrimeField, poly: WPolynomial,
                     budget: int = DEFAULT_BUDGET, threads: int = 1) -> int:
    """Exact number of tuples in F_p^n with f = 0, by exhaustive enumeration.

    Serves as the brute-force oracle for the faster methods.  Refuses grids
    beyond the iteration budget.
    """
    _check_budget(field.p, poly.nvars, budget, "naive cone count")
    omega_image = _resolve_omega(field, poly)
    if field.p**poly.nvars <= PURE_PYTHON_LIMIT:
        return _zero_count_python(poly, field, omega_image)
    return gridcount.zero_count(poly, field, threads=threads, omega_image=omega_image)


def weierstrass_fiber_table(field: PrimeField) -> list[int]:
    """T[c] = #{(x, y) in F_p^2 : y^2 = x^3 + c} = sum_x (1 + chi(x^3 + c)).

    Computed once per prime in O(p^2); satisfies sum_c T[c] = p^2 (each pair
    (x, y) determines c) and 0 <= T[c] <= 2p.
    """
    p = field.p
    x = np.arange(p, dtype=np.int64)
    cubes = x * x % p * x % p
    chi = np.array(field.square_table, dtype=np.int64)
    table = [p + int(chi[(cubes + c) % p].sum()) for c in range(p)]
    return table


def count_cone_weierstrass(field: PrimeField, f_base: WPolynomial,
                           budget: int = DEFAULT_BUDGET, threads: int = 1) -> int:
    """Cone count of y^2 = x^3 + f_base(z) via the fiber table.

    Equals count_cone_naive of the full (k+2)-variable equation: grouping the
    cone by z and counting the Weierstrass fiber over c = f_base(z) with the
    quadratic character replaces the (x, y) loops by table lookups.
    """
    p = field.p
    _check_budget(p, f_base.nvars, budget, "weierstrass base enumeration")
    if p * p > budget:
        raise BudgetExceededError(required=p * p, budget=budget, what="fiber table")
    table = weierstrass_fiber_table(field)
    omega_image = _resolve_omega(field, f_base)
    if p**f_base.nvars <= PURE_PYTHON_LIMIT:
        hist = [0] * p
        for pt in product(range(p), repeat=f_base.nvars):
            hist[f_base.evaluate_mod_p(field, pt, omega_image)] += 1
    else:
        hist = gridcount.value_histogram(f_base, field, threads=threads,
                                         omega_image=omega_image)
    return sum(m * t for m, t in zip(hist, table))


def weierstrass_shape(poly: WPolynomial) -> tuple[int, int, WPolynomial] | None:
    """Detect the shape a*(y^2 - x^3) - a*f_base(z) in f's variables.

    Returns (y_index, x_index, f_base) with f_base over the remaining
    variables, or None.  The square and cube variables must each appear in
    exactly one term and those coefficients must be exact negatives, so that
    f = 0 is equivalent to y^2 = x^3 + f_base(z).
    """
    if poly.has_eisenstein_coefficients():
        return None
    n = poly.nvars
    pure: dict[int, list[tuple[int, object]]] = {}
    occurrences = [0] * n
    for exps, coeff in poly.terms.items():
        active = [i for i, e in enumerate(exps) if e]
        for i in active:
            occurrences[i] += 1
        if len(active) == 1:
            i = active[0]
            pure.setdefault(i, []).append((exps[i], coeff))
    for y_idx in range(n):
        if occurrences[y_idx] != 1 or pure.get(y_idx, []) == []:
            continue
        [(ey, cy)] = pure[y_idx]
        if ey != 2:
            continue
        for x_idx in range(n):
            if x_idx == y_idx or occurrences[x_idx] != 1 or pure.get(x_idx, []) == []:
                continue
            [(ex, cx)] = pure[x_idx]
            if ex != 3 or cx != -cy:
                continue
            rest = {exps: coeff for exps, coeff in poly.terms.items()
                    if not exps[y_idx] and not exps[x_idx]}
            remainder = WPolynomial(poly.variables, poly.weights, rest)
            keep = [i for i in range(n) if i not in (y_idx, x_idx)]
            f_base = remainder.restrict(keep) * (Fraction(-1) / cy)
            return y_idx, x_idx, f_base
    return None


def canonical_representative(point: Iterable[int], weights: tuple[int, ...],
                             p: int) -> tuple[int, ...]:
    """Lexicographically smallest tuple identifying the projective point.

    Scales by mu^(w_i / d) over mu in F_p^*, where d is the gcd of the weights
    on the point's support; for trivial-stabilizer points (d = 1) this is
    plain lex-min over the scaling orbit.
    """
    point = tuple(int(v) % p for v in point)
    d = support_gcd(weights, point)
    if d == 0:
        return point
    best = point
    for mu in range(2, p):
        scaled = tuple(pow(mu, w // d, p) * v % p if v else 0
                       for w, v in zip(weights, point))
        if scaled < best:
            best = scaled
    return best


def _solution_points(field: PrimeField, poly: WPolynomial,
                     threads: int) -> list[tuple[int, ...]]:
    omega_image = _resolve_omega(field, poly)
    if field.p**poly.nvars <= PURE_PYTHON_LIMIT:
        return [pt for pt in product(range(field.p), repeat=poly.nvars)
                if poly.evaluate_mod_p(field, pt, omega_image) == 0]
    return gridcount.common_zeros([poly], field, threads=threads,
                                  omega_image=omega_image)


def _count_projective_naive(field: PrimeField, poly: WPolynomial, W: WeightedSpace,
                            budget: int, threads: int) -> tuple[int, int]:
    _check_budget(field.p, poly.nvars, budget, "naive projective count")
    points = _solution_points(field, poly, threads)
    cone = len(points)
    nonzero = [pt for pt in points if any(pt)]
    if not nonzero:
        return cone, 0
    if len(nonzero) > 1000:
        arr = np.array(nonzero, dtype=np.int64)
        keys = gridcount.orbit_min_keys(arr, W.weights, field.p)
        projective = int(np.unique(keys).size)
    else:
        projective = len({canonical_representative(pt, W.weights, field.p)
                          for pt in nonzero})
    return cone, projective


def _support_zero_counts(field: PrimeField, poly: WPolynomial, budget: int,
                         threads: int) -> dict[frozenset, int]:
    """Zero count of f restricted to every coordinate subset (others = 0)."""
    n = poly.nvars
    counts: dict[frozenset, int] = {}
    for size in range(n + 1):
        for keep in combinations(range(n), size):
            restricted = poly.restrict(keep)
            counts[frozenset(keep)] = count_cone_naive(field, restricted,
                                                       budget=budget, threads=threads)
    return counts


def count_projective_burnside(field: PrimeField, poly: WPolynomial, W: WeightedSpace,
                              budget: int = DEFAULT_BUDGET, threads: int = 1) -> int:
    """Projective count by support-stratified orbit counting.

    For each coordinate subset T, inclusion-exclusion over restricted cone
    counts yields E(T), the number of solutions supported on exactly T.  Under
    scaling by the support-reduced weights each projective point accounts for
    exactly p - 1 of these, so every E(T) must be a nonnegative multiple of
    p - 1; a violation means an implementation bug and aborts.
    """
    _, projective = _burnside_counts(field, poly, W, budget, threads)
    return projective


def _burnside_counts(field: PrimeField, poly: WPolynomial, W: WeightedSpace,
                     budget: int, threads: int) -> tuple[int, int]:
    p = field.p
    n = poly.nvars
    counts = _support_zero_counts(field, poly, budget, threads)
    total_orbits = 0
    for T, _ in counts.items():
        if not T:
            continue
        exact = 0
        for size in range(len(T) + 1):
            for U in combinations(sorted(T), size):
                sign = -1 if (len(T) - size) % 2 else 1
                exact += sign * counts[frozenset(U)]
        if exact < 0 or exact % (p - 1) != 0:
            raise ConsistencyError(
                f"support stratum {sorted(T)} has {exact} solutions, "
                f"not a nonnegative multiple of p - 1 = {p - 1}")
        total_orbits += exact // (p - 1)
    cone = counts[frozenset(range(n))]
    return cone, total_orbits


def rational_orbit_count(field: PrimeField, poly: WPolynomial, W: WeightedSpace,
                         budget: int = DEFAULT_BUDGET, threads: int = 1) -> int:
    """Burnside count of plain F_p^*-scaling orbits on the punctured cone.

    (1/(p-1)) * sum over lambda of #Fix(lambda), where Fix(lambda) is the set
    of nonzero solutions supported on coordinates with lambda^(w_i) = 1.  The
    sum is always divisible by p - 1.  This equals the projective point count
    exactly when all orbits are free; strata whose support weights share a
    common factor d > 1 contribute gcd(d, p-1) orbits per projective point.
    """
    p = field.p
    omega_image = _resolve_omega(field, poly)
    origin_solves = int(poly.evaluate_mod_p(field, (0,) * poly.nvars, omega_image) == 0)
    fixed_total = 0
    cache: dict[frozenset, int] = {}
    for lam in range(1, p):
        support = frozenset(i for i, w in enumerate(W.weights) if pow(lam, w, p) == 1)
        if support not in cache:
            restricted = poly.restrict(sorted(support))
            cache[support] = count_cone_naive(field, restricted,
                                              budget=budget, threads=threads) - origin_solves
        fixed_total += cache[support]
    if fixed_total % (p - 1) != 0:
        raise ConsistencyError("Burnside sum not divisible by p - 1")
    return fixed_total // (p - 1)


def count_projective(field: PrimeField, poly: WPolynomial, W: WeightedSpace,
                     method: str = "weierstrass-fast",
                     budget: int = DEFAULT_BUDGET, threads: int = 1) -> CountReport:
    """Dispatch a projective point count and package the result.

    The fast path divides (cone - 1) by (p - 1) and insists the division is
    exact; on failure it refuses with a pointer to the burnside method rather
    than returning a wrong count.
    """
    if len(W.weights) != poly.nvars:
        raise ValueError("weighted space does not match the polynomial's variables")
    if tuple(W.weights) != poly.weights:
        raise ValueError("weighted space disagrees with the polynomial's weights")
    if not poly.is_weighted_homogeneous():
        raise ValueError("polynomial is not weighted-homogeneous for these weights")
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}, expected one of {METHODS}")
    start = time.perf_counter()
    if method == "naive":
        cone, projective = _count_projective_naive(field, poly, W, budget, threads)
    elif method == "burnside":
        cone, projective = _burnside_counts(field, poly, W, budget, threads)
    else:
        shape = weierstrass_shape(poly)
        if shape is None:
            raise ValueError("equation not in Weierstrass shape y^2 = x^3 + f(z); "
                             "use the naive or burnside method")
        _, _, f_base = shape
        cone = count_cone_weierstrass(field, f_base, budget=budget, threads=threads)
        if (cone - 1) % (field.p - 1) != 0:
            raise ConsistencyError("nontrivial stabilizers; use burnside")
        projective = (cone - 1) // (field.p - 1)
    elapsed = time.perf_counter() - start
    return CountReport(p=field.p, cone_count=cone, projective_count=projective,
                       method=method, elapsed=elapsed)
