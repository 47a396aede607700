"""Prime fields with precomputed character tables, and Eisenstein integers.

A PrimeField bundles a prime p >= 5 with the two lookup tables every counting
loop needs:

  * ``square_table[a]``, the quadratic character chi(a) in {-1, 0, +1}, so that
    #{y in F_p : y^2 = a} == 1 + chi(a);
  * ``cube_roots``, the cube roots of unity in F_p (three of them when
    p = 1 mod 3, only 1 otherwise).

EisensteinInt is the ring Z[omega] with omega^2 + omega + 1 = 0.  Reduction to
F_p for p = 1 mod 3 sends omega to a chosen primitive cube root of unity and is
a ring homomorphism, which is what lets symbolic section coordinates be checked
against point counts.
"""

from __future__ import annotations

from dataclasses import dataclass

# Largest prime for which we are willing to materialize length-p tables.
MAX_TABLE_PRIME = 5_000_000

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all n < 3.3e24."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    """A prime field F_p, p >= 5, with its character and cube-root tables.

    Immutable after construction; safe to share across threads.
    """

    p: int
    square_table: tuple[int, ...]
    cube_roots: tuple[int, ...]

    def chi(self, a: int) -> int:
        """Quadratic character of a (0 on 0, +1 on squares, -1 otherwise)."""
        return self.square_table[a % self.p]

    def sqrt_count(self, a: int) -> int:
        """Number of square roots of a in F_p, i.e. 1 + chi(a)."""
        return 1 + self.square_table[a % self.p]

    def inverse(self, a: int) -> int:
        return pow(a, self.p - 2, self.p)


def make_field(p: int) -> PrimeField:
    """Build F_p with populated tables.

    Rejects composites and the characteristics 2 and 3, where the Weierstrass
    form y^2 = x^3 + c degenerates.
    """
    if not isinstance(p, int) or p in (2, 3) or not is_prime(p):
        raise ValueError(f"unsupported characteristic: {p} (need a prime >= 5)")
    if p > MAX_TABLE_PRIME:
        raise ValueError(f"prime {p} too large for table-based field (max {MAX_TABLE_PRIME})")
    table = [0] * p
    for x in range(1, p):
        table[x * x % p] = 1
    for x in range(1, p):
        if table[x] == 0:
            table[x] = -1
    roots = tuple(c for c in range(1, p) if pow(c, 3, p) == 1)
    return PrimeField(p=p, square_table=tuple(table), cube_roots=roots)


def quadratic_character(field: PrimeField, a: int) -> int:
    """chi(a) for 0 <= a < p."""
    if not 0 <= a < field.p:
        raise ValueError(f"residue {a} out of range for F_{field.p}")
    return field.square_table[a]


def primitive_cube_root(field: PrimeField) -> int:
    """Smallest residue c != 1 with c^3 = 1; requires p = 1 mod 3.

    Such a c automatically satisfies c^2 + c + 1 = 0 mod p, making it a valid
    image for omega under reduction.
    """
    for c in field.cube_roots:
        if c != 1:
            return c
    raise ValueError(f"no primitive cube root in F_{field.p} (p = {field.p} is not 1 mod 3)")


@dataclass(frozen=True)
class EisensteinInt:
    """a + b*omega with omega^2 = -1 - omega.

    Supports ring arithmetic with other EisensteinInt values and plain ints.
    The multiplicative norm is N(a + b*omega) = a^2 - a*b + b^2.
    """

    a: int
    b: int

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, EisensteinInt):
            return self.a == other.a and self.b == other.b
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.a) if self.b == 0 else hash((self.a, self.b))

    def __add__(self, other):
        if isinstance(other, EisensteinInt):
            return EisensteinInt(self.a + other.a, self.b + other.b)
        if isinstance(other, int):
            return EisensteinInt(self.a + other, self.b)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return EisensteinInt(-self.a, -self.b)

    def __sub__(self, other):
        if isinstance(other, (EisensteinInt, int)):
            return self + (-other if isinstance(other, EisensteinInt) else -other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return EisensteinInt(other - self.a, -self.b)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, EisensteinInt):
            # (a + b w)(c + d w) = ac + (ad + bc) w + bd (-1 - w)
            a, b, c, d = self.a, self.b, other.a, other.b
            return EisensteinInt(a * c - b * d, a * d + b * c - b * d)
        if isinstance(other, int):
            return EisensteinInt(self.a * other, self.b * other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("EisensteinInt powers must be nonnegative integers")
        out = EisensteinInt(1, 0)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def norm(self) -> int:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def reduce(self, p: int, omega_image: int) -> int:
        """Image in F_p under omega -> omega_image (a ring homomorphism when
        omega_image is a primitive cube root of unity)."""
        return (self.a + self.b * omega_image) % p

    def __repr__(self) -> str:
        return f"EisensteinInt({self.a}, {self.b})"


OMEGA = EisensteinInt(0, 1)
