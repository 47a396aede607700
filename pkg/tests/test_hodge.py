import pytest

from ellrank.curves import fermat_member, local_surface_normalized
from ellrank.hodge import (CohomologyInputs, GradedRingSpec,
                           builtin_cohomology_inputs, chi_singular, fermat_spec,
                           h4_sigma_total, hodge_h3_smooth, jacobian_ring_dim,
                           milnor_quasihomogeneous, monomials_of_weighted_degree,
                           quasi_smooth_spot_check)
from ellrank.parsing import parse_polynomial
from ellrank.wpoly import WPolynomial

SURFACE = GradedRingSpec(poly=local_surface_normalized())
FERMAT = fermat_spec(6, (2, 3, 1, 1, 1), ("x", "y", "z0", "z1", "z2"))


def test_monomial_enumeration():
    # weights (2,3): degree 6 monomials are x^3, y^2
    assert set(monomials_of_weighted_degree((2, 3), 6)) == {(3, 0), (0, 2)}
    assert monomials_of_weighted_degree((2, 3), -1) == []
    assert monomials_of_weighted_degree((2, 3), 0) == [(0, 0)]
    assert monomials_of_weighted_degree((2, 3), 1) == []


def test_local_surface_degree_two_piece():
    # Jacobian ideal (x^2, y, s1^2, t1): the quotient in degree 2 is <x, s1>
    assert jacobian_ring_dim(SURFACE, 2) == 2


def test_local_surface_symmetric_dimensions():
    assert jacobian_ring_dim(SURFACE, 0) == 1
    assert jacobian_ring_dim(SURFACE, 4) == 1
    assert jacobian_ring_dim(SURFACE, 2) == 2
    assert jacobian_ring_dim(SURFACE, 1) == 0
    assert jacobian_ring_dim(SURFACE, 3) == 0
    assert jacobian_ring_dim(SURFACE, 6) == 0


def test_fermat_threefold_graded_pieces():
    assert jacobian_ring_dim(FERMAT, 4) == 21
    assert jacobian_ring_dim(FERMAT, 10) == 21
    assert jacobian_ring_dim(FERMAT, 16) == 0
    assert jacobian_ring_dim(FERMAT, 0) == 1
    assert jacobian_ring_dim(FERMAT, -2) == 0


def test_jacobian_dim_degree_zero_always_one():
    for spec in (SURFACE, FERMAT):
        assert jacobian_ring_dim(spec, 0) == 1


def test_jacobian_dim_independent_of_variable_order():
    # permuting the variable system permutes the monomial basis; the graded
    # dimension must not change
    base = parse_polynomial("-y^2 + x^3 - s1^3 + t1^2",
                            ("x", "y", "s1", "t1"), (2, 3, 2, 3))
    permuted = parse_polynomial("-y^2 + x^3 - s1^3 + t1^2",
                                ("t1", "s1", "y", "x"), (3, 2, 3, 2))
    for k in range(0, 6):
        assert jacobian_ring_dim(GradedRingSpec(poly=base), k) == \
            jacobian_ring_dim(GradedRingSpec(poly=permuted), k)


def test_jacobian_dim_non_monomial_ideal():
    # partials of x^3 + y^3 + z^3 - 3xyz are not monomials; exercise the
    # exact elimination path and its basis invariance
    f = parse_polynomial("x^3 + y^3 + z^3 - 3*x*y*z", ("x", "y", "z"), (1, 1, 1))
    g = parse_polynomial("x^3 + y^3 + z^3 - 3*x*y*z", ("z", "x", "y"), (1, 1, 1))
    for k in range(0, 5):
        dim_f = jacobian_ring_dim(GradedRingSpec(poly=f), k)
        dim_g = jacobian_ring_dim(GradedRingSpec(poly=g), k)
        assert dim_f == dim_g
    # degree 1: relations 3x^2 - 3yz etc. live in degree 2, so all of x, y, z survive
    assert jacobian_ring_dim(GradedRingSpec(poly=f), 1) == 3


def test_h3_smooth_is_42():
    assert hodge_h3_smooth(FERMAT) == 42


def test_h3_requires_five_variables():
    with pytest.raises(ValueError, match="threefold"):
        hodge_h3_smooth(SURFACE)


def test_quasi_smooth_spot_check():
    assert quasi_smooth_spot_check(FERMAT) is True
    # z1^3 z2^3 in place of z2^6 leaves a whole critical line (z2 free)
    bad = parse_polynomial("x^3 + y^2 + z0^6 + z1^6 + z1^3*z2^3",
                           ("x", "y", "z0", "z1", "z2"), (2, 3, 1, 1, 1))
    spec = GradedRingSpec(poly=bad)
    assert quasi_smooth_spot_check(spec) is False
    with pytest.warns(UserWarning, match="quasi-smooth"):
        hodge_h3_smooth(spec)


def test_milnor_examples():
    assert milnor_quasihomogeneous(6, (2, 3, 2, 3)) == 4
    assert milnor_quasihomogeneous(2, (1, 1, 1)) == 1
    assert milnor_quasihomogeneous(6, (2, 2, 3)) == 4


def test_milnor_symmetry():
    assert milnor_quasihomogeneous(6, (3, 2, 3, 2)) == \
        milnor_quasihomogeneous(6, (2, 3, 2, 3))
    assert milnor_quasihomogeneous(12, (4, 6, 3)) == \
        milnor_quasihomogeneous(12, (3, 4, 6))


def test_milnor_rejects_non_singular_form():
    with pytest.raises(ValueError, match="isolated"):
        milnor_quasihomogeneous(6, (6, 2))
    with pytest.raises(ValueError, match="isolated"):
        milnor_quasihomogeneous(2, (2, 3))


def test_h4_sigma_total():
    assert h4_sigma_total(2, 9) == 18
    assert h4_sigma_total(0, 9) == 0
    assert h4_sigma_total(2, 0) == 0
    with pytest.raises(ValueError):
        h4_sigma_total(-1, 9)


def test_chi_singular():
    assert chi_singular(-38, [4] * 9) == -2
    assert chi_singular(-38, []) == -38
    assert chi_singular(4 - 42, [4, 4]) == -30


def test_chi_linearity_in_milnor_numbers():
    base = chi_singular(-38, [4] * 9)
    bumped = chi_singular(-38, [4] * 8 + [5])
    assert bumped == base + 1


def test_builtin_inputs_pipeline():
    inputs = builtin_cohomology_inputs()
    assert isinstance(inputs, CohomologyInputs)
    assert inputs.h3_smooth == 42
    assert inputs.local_h2_prim == 2
    assert inputs.h2_surface == 3
    assert inputs.milnor_numbers == (4,) * 9
    assert inputs.h4_sigma == 18
    assert inputs.chi == -2
    # chi = chi_smooth + sum of Milnor numbers, chi_smooth = 4 - h3
    assert inputs.chi == (4 - inputs.h3_smooth) + sum(inputs.milnor_numbers)


def test_graded_spec_validation():
    with pytest.raises(ValueError, match="weighted-homogeneous"):
        GradedRingSpec(poly=parse_polynomial("x^2 + x", ("x",), (1,)))
    with pytest.raises(ValueError, match="zero polynomial"):
        GradedRingSpec(poly=WPolynomial.zero(("x",), (1,)))


def test_fermat_member_validation():
    f = fermat_member(6, (2, 3, 1, 1, 1))
    assert len(f.terms) == 5 and f.is_weighted_homogeneous()
    with pytest.raises(ValueError, match="diagonal"):
        fermat_member(6, (4, 3, 1))
