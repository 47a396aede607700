"""Exact sparse multivariate polynomials with per-variable weights.

A WPolynomial maps exponent tuples to exact coefficients:

    terms: dict[tuple[int, ...], Fraction | EisensteinInt]

Zero coefficients are never stored, so identity testing is literal dict
equality and "is this the zero polynomial" is ``not poly.terms``.  Every
variable carries a positive integer weight; the weighted degree of a term is
sum(w_i * e_i), which is what grades the defining equations of hypersurfaces
in weighted projective space.

Coefficients live in one of two exact domains and are normalized on
construction: rational (Fraction; plain ints are promoted) or Eisenstein
integers (Z[omega]).  Mixing the two in arithmetic raises TypeError.  No
floating point enters anywhere.

Canonical printing orders terms by graded-lexicographic order on exponent
tuples (highest first) and emits only grammar tokens (integers, names, omega,
+ - * ^, parentheses), so printing then re-parsing is the identity on
integer-coefficient normal forms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Union

from .fields import EisensteinInt, PrimeField, primitive_cube_root

Coefficient = Union[Fraction, EisensteinInt]
Exponents = tuple[int, ...]


def _normalize_terms(terms: Mapping[Exponents, object], nvars: int) -> dict[Exponents, Coefficient]:
    eisenstein = any(isinstance(c, EisensteinInt) for c in terms.values())
    out: dict[Exponents, Coefficient] = {}
    for exps, coeff in terms.items():
        if not isinstance(coeff, (int, Fraction, EisensteinInt)):
            raise TypeError(f"coefficients must be exact (int, Fraction, EisensteinInt), got {type(coeff).__name__}")
        exps = tuple(int(e) for e in exps)
        if len(exps) != nvars:
            raise ValueError(f"exponent tuple {exps} does not match {nvars} variables")
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        if eisenstein:
            if isinstance(coeff, int):
                coeff = EisensteinInt(coeff, 0)
            elif isinstance(coeff, Fraction):
                if coeff.denominator != 1:
                    raise TypeError("cannot mix non-integer rationals with Eisenstein coefficients")
                coeff = EisensteinInt(coeff.numerator, 0)
        elif isinstance(coeff, int):
            coeff = Fraction(coeff)
        if coeff:
            out[exps] = out[exps] + coeff if exps in out else coeff
    return {e: c for e, c in out.items() if c}


@dataclass(frozen=True)
class WPolynomial:
    """Weighted multivariate polynomial in normal form; treat as immutable."""

    variables: tuple[str, ...]
    weights: tuple[int, ...]
    terms: dict[Exponents, Coefficient] = field(default_factory=dict)

    def __post_init__(self):
        variables = tuple(self.variables)
        weights = tuple(int(w) for w in self.weights)
        if len(variables) != len(set(variables)):
            raise ValueError(f"duplicate variable names in {variables}")
        if len(weights) != len(variables):
            raise ValueError("one weight per variable required")
        if any(w < 1 for w in weights):
            raise ValueError(f"weights must be positive, got {weights}")
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "terms", _normalize_terms(self.terms, len(variables)))

    # ---- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, variables: Iterable[str], weights: Iterable[int]) -> "WPolynomial":
        return cls(tuple(variables), tuple(weights), {})

    @classmethod
    def constant(cls, variables: Iterable[str], weights: Iterable[int], value) -> "WPolynomial":
        variables = tuple(variables)
        return cls(variables, tuple(weights), {(0,) * len(variables): value})

    @classmethod
    def variable(cls, variables: Iterable[str], weights: Iterable[int], name: str) -> "WPolynomial":
        variables = tuple(variables)
        exps = [0] * len(variables)
        exps[variables.index(name)] = 1
        return cls(variables, tuple(weights), {tuple(exps): 1})

    # ---- ring structure ---------------------------------------------------

    def _like(self, terms) -> "WPolynomial":
        return WPolynomial(self.variables, self.weights, terms)

    def _check_compatible(self, other: "WPolynomial"):
        if self.variables != other.variables or self.weights != other.weights:
            raise ValueError("polynomials live over different variable systems")

    def _aligned(self, other: "WPolynomial") -> tuple["WPolynomial", "WPolynomial"]:
        """Coerce one operand into Z[omega] when exactly one side lives there
        (only integral rational coefficients can cross over)."""
        a_eis = self.has_eisenstein_coefficients()
        b_eis = other.has_eisenstein_coefficients()
        if a_eis and not b_eis and other.terms:
            return self, other.with_eisenstein_coefficients()
        if b_eis and not a_eis and self.terms:
            return self.with_eisenstein_coefficients(), other
        return self, other

    def __add__(self, other):
        if isinstance(other, WPolynomial):
            self._check_compatible(other)
            a, b = self._aligned(other)
            out = dict(a.terms)
            for e, c in b.terms.items():
                out[e] = out[e] + c if e in out else c
            return self._like(out)
        if isinstance(other, (int, Fraction, EisensteinInt)):
            return self + WPolynomial.constant(self.variables, self.weights, other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return self._like({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (WPolynomial, int, Fraction, EisensteinInt)):
            return self + (-other if isinstance(other, WPolynomial)
                           else WPolynomial.constant(self.variables, self.weights, other) * -1)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, WPolynomial):
            self._check_compatible(other)
            a, b = self._aligned(other)
            out: dict[Exponents, Coefficient] = {}
            for ea, ca in a.terms.items():
                for eb, cb in b.terms.items():
                    e = tuple(x + y for x, y in zip(ea, eb))
                    c = ca * cb
                    out[e] = out[e] + c if e in out else c
            return self._like(out)
        if isinstance(other, EisensteinInt):
            coerced = self.with_eisenstein_coefficients()
            return self._like({e: c * other for e, c in coerced.terms.items()})
        if isinstance(other, (int, Fraction)):
            return self._like({e: c * other for e, c in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        out = WPolynomial.constant(self.variables, self.weights, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __bool__(self) -> bool:
        return bool(self.terms)

    # ---- structure queries ------------------------------------------------

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def constant_term(self) -> Coefficient:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def term_weighted_degree(self, exps: Exponents) -> int:
        return sum(w * e for w, e in zip(self.weights, exps))

    def weighted_degree(self) -> int | None:
        """Maximum weighted degree over terms; None for the zero polynomial."""
        if not self.terms:
            return None
        return max(self.term_weighted_degree(e) for e in self.terms)

    def is_weighted_homogeneous(self) -> bool:
        degrees = {self.term_weighted_degree(e) for e in self.terms}
        return len(degrees) <= 1

    def max_exponent(self, name: str) -> int:
        i = self.variables.index(name)
        return max((e[i] for e in self.terms), default=0)

    def support_variables(self) -> tuple[int, ...]:
        """Indices of variables that actually occur."""
        return tuple(i for i in range(self.nvars)
                     if any(e[i] for e in self.terms))

    def has_eisenstein_coefficients(self) -> bool:
        return any(isinstance(c, EisensteinInt) for c in self.terms.values())

    # ---- calculus and specialization --------------------------------------

    def partial_derivative(self, name: str) -> "WPolynomial":
        """Formal partial derivative; drops weighted degree by the variable's
        weight on homogeneous input."""
        i = self.variables.index(name)
        out: dict[Exponents, Coefficient] = {}
        for exps, coeff in self.terms.items():
            e = exps[i]
            if e == 0:
                continue
            lowered = exps[:i] + (e - 1,) + exps[i + 1:]
            c = coeff * e
            out[lowered] = out[lowered] + c if lowered in out else c
        return self._like(out)

    def restrict(self, keep: Iterable[int]) -> "WPolynomial":
        """Set every variable outside ``keep`` to zero and project onto the
        kept variables (order preserved)."""
        keep = tuple(sorted(set(keep)))
        drop = [i for i in range(self.nvars) if i not in keep]
        out: dict[Exponents, Coefficient] = {}
        for exps, coeff in self.terms.items():
            if any(exps[i] for i in drop):
                continue
            out[tuple(exps[i] for i in keep)] = coeff
        return WPolynomial(tuple(self.variables[i] for i in keep),
                           tuple(self.weights[i] for i in keep), out)

    def with_eisenstein_coefficients(self) -> "WPolynomial":
        """Coerce integer rational coefficients into Z[omega]."""
        out: dict[Exponents, Coefficient] = {}
        for exps, coeff in self.terms.items():
            if isinstance(coeff, EisensteinInt):
                out[exps] = coeff
            else:
                if coeff.denominator != 1:
                    raise TypeError(f"coefficient {coeff} is not an integer")
                out[exps] = EisensteinInt(coeff.numerator, 0)
        return self._like(out)

    def evaluate_mod_p(self, feld: PrimeField, point: Iterable[int],
                       omega_image: int | None = None) -> int:
        """Ring-homomorphic evaluation at a residue tuple.

        Eisenstein coefficients require p = 1 mod 3; omega maps to
        ``omega_image`` (defaults to the field's smallest primitive cube
        root).  Rational coefficients reduce via modular inverse of the
        denominator.
        """
        p = feld.p
        point = tuple(int(v) % p for v in point)
        if len(point) != self.nvars:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.nvars}")
        if self.has_eisenstein_coefficients() and omega_image is None:
            omega_image = primitive_cube_root(feld)  # raises unless p = 1 mod 3
        total = 0
        for exps, coeff in self.terms.items():
            t = reduce_coefficient(coeff, p, omega_image)
            if t == 0:
                continue
            for v, e in zip(point, exps):
                if e:
                    t = t * pow(v, e, p) % p
            total += t
        return total % p

    # ---- printing ----------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Exponents, Coefficient]]:
        """Terms in canonical (descending graded-lex) order."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for exps, coeff in self.sorted_terms():
            negative, body = _format_term(self.variables, exps, coeff)
            if not pieces:
                pieces.append("-" + body if negative else body)
            else:
                pieces.append(("- " if negative else "+ ") + body)
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"WPolynomial({str(self)!r}, vars={self.variables}, weights={self.weights})"


def reduce_coefficient(coeff: Coefficient, p: int, omega_image: int | None = None) -> int:
    """Residue of an exact coefficient mod p."""
    if isinstance(coeff, EisensteinInt):
        if omega_image is None:
            raise ValueError("Eisenstein coefficient needs an omega image (p must be 1 mod 3)")
        return coeff.reduce(p, omega_image)
    if isinstance(coeff, int):
        return coeff % p
    if coeff.denominator % p == 0:
        raise ZeroDivisionError(f"coefficient {coeff} has denominator divisible by {p}")
    return coeff.numerator * pow(coeff.denominator, p - 2, p) % p


def _format_coeff_eisenstein(c: EisensteinInt) -> tuple[bool, str]:
    """(negative, body) for an Eisenstein coefficient, body in grammar tokens."""
    a, b = c.a, c.b
    if b == 0:
        return a < 0, str(abs(a))
    if a == 0:
        body = "omega" if abs(b) == 1 else f"{abs(b)}*omega"
        return b < 0, body
    inner_b = "omega" if abs(b) == 1 else f"{abs(b)}*omega"
    sign_b = "+" if b > 0 else "-"
    return False, f"({a} {sign_b} {inner_b})"


def _format_term(variables: tuple[str, ...], exps: Exponents, coeff: Coefficient) -> tuple[bool, str]:
    mono = "*".join(f"{v}^{e}" if e > 1 else v
                    for v, e in zip(variables, exps) if e)
    if isinstance(coeff, EisensteinInt):
        negative, cbody = _format_coeff_eisenstein(coeff)
        is_one = cbody == "1"
    else:
        negative = coeff < 0
        c = abs(coeff)
        cbody = str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
        is_one = c == 1
    if not mono:
        return negative, cbody
    if is_one:
        return negative, mono
    return negative, f"{cbody}*{mono}"


def euler_combination(poly: WPolynomial) -> WPolynomial:
    """sum_i w_i * x_i * df/dx_i, the left side of the weighted Euler identity."""
    out = WPolynomial.zero(poly.variables, poly.weights)
    for name, w in zip(poly.variables, poly.weights):
        out = out + WPolynomial.variable(poly.variables, poly.weights, name) \
            * poly.partial_derivative(name) * w
    return out


def support_gcd(weights: Iterable[int], exps_or_point: Iterable[int]) -> int:
    """gcd of the weights on the support of a point (0 for the zero point)."""
    d = 0
    for w, v in zip(weights, exps_or_point):
        if v:
            d = gcd(d, w)
    return d
