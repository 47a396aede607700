import random
from fractions import Fraction

import pytest

from ellrank.curves import DEFINING_TEXT, THREEFOLD_VARIABLES, THREEFOLD_WEIGHTS, defining_polynomial
from ellrank.fields import EisensteinInt, make_field, primitive_cube_root
from ellrank.parsing import parse_polynomial
from ellrank.wpoly import WPolynomial, euler_combination
from helpers import random_homogeneous

XY = (("x", "y"), (2, 3))


def poly(text, variables=XY[0], weights=XY[1]):
    return parse_polynomial(text, variables, weights)


def test_defining_polynomial_structure():
    f = defining_polynomial()
    # expanded normal form: y^2, x^3, three z_i^6 and three z_i^3 z_j^3 terms
    assert len(f.terms) == 8
    assert f.is_weighted_homogeneous()
    assert f.weighted_degree() == 6


def test_zero_coefficients_dropped():
    f = poly("x^3 - x^3 + y^2")
    assert f.terms == {(0, 2): Fraction(1)}
    assert poly("x^3 - x^3") == WPolynomial.zero(*XY)
    assert str(poly("x^3 - x^3")) == "0"


def test_weighted_degree_per_term():
    f = poly("y^2 - x^3")
    assert f.weighted_degree() == 6
    assert f.is_weighted_homogeneous()
    g = poly("y^2 - x")
    assert not g.is_weighted_homogeneous()


def test_partial_derivative_examples():
    assert poly("y^2 - x^3").partial_derivative("y") == poly("2*y")
    assert poly("y^2").partial_derivative("x") == WPolynomial.zero(*XY)
    f = defining_polynomial()
    expected = parse_polynomial("-96*z0^5 + 96*z0^2*z1^3 + 96*z0^2*z2^3",
                                THREEFOLD_VARIABLES, THREEFOLD_WEIGHTS)
    assert f.partial_derivative("z0") == expected


def test_partial_derivative_degree_drop():
    f = defining_polynomial()
    for name, w in zip(f.variables, f.weights):
        g = f.partial_derivative(name)
        if g.terms:
            assert g.is_weighted_homogeneous()
            assert g.weighted_degree() == 6 - w


def test_euler_identity_builtin():
    f = defining_polynomial()
    assert euler_combination(f) == f * 6


def test_euler_identity_random():
    rng = random.Random(20240)
    for _ in range(15):
        nvars = rng.randint(2, 4)
        weights = tuple(rng.randint(1, 3) for _ in range(nvars))
        degree = rng.randint(2, 6)
        f = random_homogeneous(rng, nvars, weights, degree)
        if f is None:
            continue
        assert euler_combination(f) == f * degree


def test_evaluate_mod_p_examples():
    f7 = make_field(7)
    assert poly("y^2 - x^3").evaluate_mod_p(f7, (1, 1)) == 0
    curve = defining_polynomial()
    assert curve.evaluate_mod_p(f7, (0, 0, 2, 1, 0)) == 0
    omega_x = parse_polynomial("omega*x", ("x",), (1,))
    assert omega_x.evaluate_mod_p(f7, (1,), omega_image=2) == 2


def test_evaluate_eisenstein_requires_cube_root():
    f5 = make_field(5)
    omega_x = parse_polynomial("omega*x", ("x",), (1,))
    with pytest.raises(ValueError, match="cube root"):
        omega_x.evaluate_mod_p(f5, (1,))


def test_evaluate_is_ring_homomorphism():
    f13 = make_field(13)
    w = primitive_cube_root(f13)
    a = parse_polynomial("x^2 + omega*y", XY[0], XY[1])
    b = parse_polynomial("3*x - omega^2", XY[0], XY[1])
    for pt in [(0, 0), (1, 5), (12, 7), (3, 3)]:
        va, vb = a.evaluate_mod_p(f13, pt, w), b.evaluate_mod_p(f13, pt, w)
        assert (a + b).evaluate_mod_p(f13, pt, w) == (va + vb) % 13
        assert (a * b).evaluate_mod_p(f13, pt, w) == va * vb % 13


def test_rational_coefficient_reduction():
    f = WPolynomial(("x",), (1,), {(1,): Fraction(1, 3)})
    f7 = make_field(7)
    # 1/3 = 3^{-1} = 5 mod 7
    assert f.evaluate_mod_p(f7, (1,)) == 5
    bad = WPolynomial(("x",), (1,), {(1,): Fraction(1, 7)})
    with pytest.raises(ZeroDivisionError):
        bad.evaluate_mod_p(f7, (1,))


def test_restrict():
    f = defining_polynomial()
    g = f.restrict((2, 3, 4))  # only the z variables survive
    assert g.variables == ("z0", "z1", "z2")
    assert len(g.terms) == 6
    h = f.restrict(())
    assert h.nvars == 0 and not h.terms


def test_mixed_domains_rejected():
    rational = WPolynomial(("x",), (1,), {(1,): Fraction(1, 2)})
    eisenstein = WPolynomial(("x",), (1,), {(1,): EisensteinInt(0, 1)})
    with pytest.raises(TypeError):
        rational + eisenstein


def test_float_coefficients_rejected():
    with pytest.raises(TypeError, match="exact"):
        WPolynomial(("x",), (1,), {(1,): 0.5})


def test_canonical_printing_order():
    f = poly("y^2 - x^3 + 1 + x*y")
    # descending graded-lex on exponent tuples: x^3 (3,0), x*y (1,1), y^2 (0,2), 1
    assert str(f) == "-x^3 + x*y + y^2 + 1"


def test_print_parse_roundtrip_integer_polys():
    rng = random.Random(77)
    for _ in range(25):
        nvars = rng.randint(1, 4)
        names = tuple(f"v{i}" for i in range(nvars))
        weights = tuple(rng.randint(1, 3) for _ in range(nvars))
        terms = {}
        for _ in range(rng.randint(1, 7)):
            exps = tuple(rng.randint(0, 4) for _ in range(nvars))
            terms[exps] = rng.randint(-20, 20)
        f = WPolynomial(names, weights, terms)
        assert parse_polynomial(str(f), names, weights) == f


def test_print_parse_roundtrip_eisenstein():
    names, weights = ("s", "t"), (1, 1)
    terms = {
        (3, 0): EisensteinInt(0, 1),
        (1, 1): EisensteinInt(2, -3),
        (0, 0): EisensteinInt(-4, 0),
        (0, 2): EisensteinInt(0, -2),
        (2, 2): EisensteinInt(1, 1),
    }
    f = WPolynomial(names, weights, terms)
    assert parse_polynomial(str(f), names, weights) == f


def test_pow_and_arithmetic():
    x = WPolynomial.variable(XY[0], XY[1], "x")
    y = WPolynomial.variable(XY[0], XY[1], "y")
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y
    assert (x - y) * (x + y) == x * x - y * y
    assert x ** 0 == WPolynomial.constant(XY[0], XY[1], 1)
