"""Node profiles, matching ranks, smoothness certificates, and the sweep."""

import random
from fractions import Fraction

import pytest

from doublesix.association import exceptional_conics
from doublesix.forms import TernaryForm, resultant_eliminate
from doublesix.linalg import Matrix, determinant, inverse, rank
from doublesix.plane import REF6, Config6, chart_quadratic_part, linear_system, tangent_cone
from doublesix.torsion import (
    NodalSextic,
    NodeDiagnosis,
    _binary_div_exact,
    _binary_mul,
    certify,
    certify_pencil,
    conic_product_pencil,
    node_profile,
    random_nodal_sextic,
    smooth_elsewhere,
    smooth_screen,
    torsion_rank,
)

COLLINEAR = Config6([(1, 0, 0), (0, 1, 0), (1, 1, 0), (1, 1, 1), (1, 2, 3), (2, 5, 1)])


def coefficient_vector(form, degree=6):
    monos = [(i, j, degree - i - j) for i in range(degree + 1) for j in range(degree - i + 1)]
    return [form.coefficient(m) for m in monos]


def parallel(u, v):
    return all(u[i] * v[j] == u[j] * v[i] for i in range(3) for j in range(i + 1, 3))


def test_triple_products_are_rejected_by_the_node_profile():
    pencil = conic_product_pencil(REF6)
    # Each conic of one triple passes through all three opposite points,
    # so the bare product acquires triple points there.
    second = node_profile(REF6, pencil.second)
    assert isinstance(second, NodeDiagnosis)
    assert (second.point_label, second.multiplicity) == (4, 3)
    assert second.describe() == "point 4: multiplicity-3"
    first = node_profile(REF6, pencil.first)
    assert isinstance(first, NodeDiagnosis)
    assert (first.point_label, first.multiplicity) == (1, 3)


def test_generic_member_has_six_nodes():
    pencil = conic_product_pencil(REF6)
    profile = node_profile(REF6, pencil.member(1, 1))
    assert isinstance(profile, NodalSextic)
    assert profile.ok
    assert len(profile.cones) == 6
    assert all(any(c != 0 for c in cone) for cone in profile.cones)


def test_node_profile_input_validation():
    with pytest.raises(ValueError):
        node_profile(REF6, exceptional_conics(REF6)[0])
    with pytest.raises(ValueError):
        node_profile(REF6, TernaryForm.zero(6))


def test_member_requires_nonzero_parameters():
    pencil = conic_product_pencil(REF6)
    with pytest.raises(ValueError):
        pencil.member(0, 0)


def test_member_cones_come_from_the_opposite_triple():
    # At each node only one triple product contributes a quadratic
    # part, so the tangent cone is parameter independent up to the
    # pencil coefficient in front of that product.
    pencil = conic_product_pencil(REF6)
    p1 = node_profile(REF6, pencil.member(1, 1))
    p7 = node_profile(REF6, pencil.member(1, 7))
    for i in range(3):
        assert p7.cones[i] == tuple(7 * c for c in p1.cones[i])
    for i in range(3, 6):
        assert p7.cones[i] == p1.cones[i]
    assert p1.cones[3] == tangent_cone(pencil.first, REF6.points[3]).quadric
    assert tuple(p1.cones[0]) == tangent_cone(pencil.second, REF6.points[0]).quadric


def test_matching_space_contains_both_triple_products():
    pencil = conic_product_pencil(REF6)
    profile = node_profile(REF6, pencil.member(1, 1))
    matched = torsion_rank(profile, "E")
    assert matched.dimension == 2
    vectors = [coefficient_vector(g) for g in matched.basis]
    for extra in (pencil.first.canonical(), pencil.second.canonical()):
        assert rank(Matrix(vectors + [coefficient_vector(extra)])) == 2


def test_matching_members_have_parallel_cones():
    pencil = conic_product_pencil(REF6)
    profile = node_profile(REF6, pencil.member(1, 1))
    matched = torsion_rank(profile, "E")
    for g in matched.basis:
        for i, p in enumerate(REF6.points):
            assert parallel(chart_quadratic_part(g, p), profile.cones[i])


def test_rank_sides_agree_on_the_torsion_candidate():
    pencil = conic_product_pencil(REF6)
    profile = node_profile(REF6, pencil.member(1, 1))
    rank_e = torsion_rank(profile, "E")
    rank_f = torsion_rank(profile, "F")
    assert rank_e.dimension == rank_f.dimension == 2
    assert rank_e.nontrivial and rank_f.nontrivial


def test_rank_is_one_on_a_random_nodal_sextic():
    rng = random.Random("torsion-random-module")
    form = random_nodal_sextic(REF6, rng)
    profile = node_profile(REF6, form)
    assert profile.ok
    rank_e = torsion_rank(profile, "E")
    rank_f = torsion_rank(profile, "F")
    assert rank_e.dimension == rank_f.dimension == 1
    assert not rank_e.nontrivial
    # The only matching member is the candidate itself.
    assert rank_e.basis[0] == form.canonical()


def test_torsion_rank_validates_side():
    pencil = conic_product_pencil(REF6)
    profile = node_profile(REF6, pencil.member(1, 1))
    with pytest.raises(ValueError):
        torsion_rank(profile, "G")


def test_torsion_rank_is_a_projective_invariant():
    g = Matrix([[Fraction(a) for a in row] for row in [(1, 1, 2), (0, 1, 3), (1, 0, 1)]])
    assert determinant(g) != 0
    pencil = conic_product_pencil(REF6)
    member = pencil.member(1, 1)
    moved_config = REF6.apply(g)
    moved_member = member.substitute(inverse(g))
    profile = node_profile(REF6, member)
    moved_profile = node_profile(moved_config, moved_member)
    assert moved_profile.ok
    for side in ("E", "F"):
        assert torsion_rank(moved_profile, side).dimension == torsion_rank(profile, side).dimension


def test_pencil_base_locus_matches_pairwise_conic_intersections():
    # Eliminating x from the two triple products factors the resultant
    # as the product of the nine pairwise conic resultants: the base
    # locus is exactly the 36 = 9 * 4 pairwise intersection points.
    frame = Matrix([[Fraction(a) for a in row] for row in [(1, -2, -2), (3, 1, 0), (2, 1, 3)]])
    assert determinant(frame) != 0
    conics = [c.substitute(frame) for c in exceptional_conics(REF6)]
    assert all(c.coefficient((2, 0, 0)) != 0 for c in conics)
    pencil = conic_product_pencil(REF6)
    res = resultant_eliminate(pencil.first.substitute(frame), pencil.second.substitute(frame), 0)
    expected = None
    for i in (3, 4, 5):
        for j in (0, 1, 2):
            r = resultant_eliminate(conics[i], conics[j], 0)
            expected = r if expected is None else expected * r
    assert res.degree == expected.degree == 36
    assert res == expected


def test_smooth_elsewhere_certifies_the_torsion_candidate():
    pencil = conic_product_pencil(REF6)
    verdict = smooth_elsewhere(pencil.member(1, 1).canonical(), REF6.points)
    assert verdict.certified
    assert verdict.node_orders is not None and len(verdict.node_orders) == 6
    assert all(order >= 1 for order in verdict.node_orders)


def test_smooth_elsewhere_rejects_a_reducible_candidate():
    # A conic times a quartic is nodal at all six points but singular
    # wherever the two components meet besides them.
    conic = exceptional_conics(REF6)[5]
    system = linear_system(4, [(REF6.points[5], 2)] + [(p, 1) for p in REF6.points[:5]])
    rng = random.Random("reducible-pick")
    coeffs = [Fraction(rng.randint(-5, 5)) for _ in system.basis]
    quartic = TernaryForm.zero(4)
    for c, member in zip(coeffs, system.basis):
        if c != 0:
            quartic = quartic + member.scale(c)
    candidate = (conic * quartic).canonical()
    assert node_profile(REF6, candidate).ok
    verdict = smooth_elsewhere(candidate, REF6.points)
    assert not verdict.certified
    assert "residual" in verdict.detail
    assert smooth_screen(candidate, REF6.points) is False


def test_smooth_screen_passes_the_torsion_candidate():
    pencil = conic_product_pencil(REF6)
    assert smooth_screen(pencil.member(1, 1).canonical(), REF6.points) is True


def test_certify_accepts_the_reference_candidate():
    pencil = conic_product_pencil(REF6)
    cert = certify(REF6, pencil.member(1, 1).canonical())
    assert cert.accepted
    assert cert.rank_node_side.dimension == 2
    assert cert.rank_conic_side.dimension == 2
    assert cert.smoothness.certified
    assert cert.screened
    assert cert.reasons == ("six ordinary nodes, matching rank two on both sides, smooth elsewhere",)
    data = cert.to_json()
    assert data["accepted"] is True
    assert data["rank_node_side"] == data["rank_conic_side"] == 2


def test_certify_rejects_triple_point_candidates():
    pencil = conic_product_pencil(REF6)
    cert = certify(REF6, pencil.second)
    assert not cert.accepted
    assert cert.reasons == ("node profile failed: point 4: multiplicity-3",)


def test_certify_rejects_trivial_torsion():
    rng = random.Random("torsion-random-module")
    form = random_nodal_sextic(REF6, rng)
    cert = certify(REF6, form)
    assert not cert.accepted
    assert cert.rank_node_side.dimension == 1
    assert "no independent matching partner: torsion class is trivial" in cert.reasons


def test_certify_rejects_degenerate_configurations():
    pencil = conic_product_pencil(REF6)
    cert = certify(COLLINEAR, pencil.first)
    assert not cert.accepted
    assert cert.reasons == ("configuration is not in general position",)
    sweep = certify_pencil(COLLINEAR)
    assert not sweep.accepted
    assert sweep.reasons == ("configuration is not in general position",)


def test_certify_pencil_accepts_the_reference_configuration():
    cert = certify_pencil(REF6)
    assert cert.accepted
    assert cert.member == ("1", "1")
    assert cert.rank_node_side.dimension == cert.rank_conic_side.dimension == 2
    assert cert.smoothness.certified


def test_random_nodal_sextics_live_in_the_nodal_system():
    rng = random.Random("nodal-system-membership")
    for _ in range(3):
        form = random_nodal_sextic(REF6, rng)
        assert form.degree == 6
        for p in REF6.points:
            assert tangent_cone(form, p).multiplicity >= 2


def test_binary_form_helpers():
    one_plus = [Fraction(1), Fraction(1)]
    one_minus = [Fraction(1), Fraction(-1)]
    square_difference = _binary_mul(one_plus, one_minus)
    assert square_difference == [Fraction(1), Fraction(0), Fraction(-1)]
    assert _binary_div_exact(square_difference, one_plus) == one_minus
    with pytest.raises(ArithmeticError):
        _binary_div_exact([Fraction(1), Fraction(0), Fraction(1)], one_plus)
    with pytest.raises(ZeroDivisionError):
        _binary_div_exact(square_difference, [Fraction(0)])
