from fractions import Fraction

import pytest
from hypothesis import given, settings

from helpers import elimination_orders
from strategies import nonneg_monomial, sums

from powergeom.exponents import Convention, shear_normal, support
from powergeom.parser import parse_differential_sum
from powergeom.polyhedron import convex_hull, facet_contains
from powergeom.presets import preset_sum
from powergeom.truncation import (AssumptionError, DegeneracyKind, InadmissibleFacetError,
                                  InvalidFaceError, NotFullDimensionalError, Regime,
                                  admissible_facets, analyze, candidate_orders,
                                  degeneracy_verdict, format_plane, parse_assumptions,
                                  truncate)


def lattice_of(name, conv=Convention.PLAIN):
    eq = preset_sum(name)
    return eq, convex_hull(support(eq, 4, conv).points)


def test_p3_truncation_on_q1_minus_q4():
    eq, lat = lattice_of("painleve3")
    j = facet_contains(lat, (1, 0, 0, -1), 0)
    assert truncate(eq, lat, j).sum == parse_differential_sum(
        "-z*w*w'' - w*w' + alpha*w^3 + beta*w")


def test_p4_truncation_on_q1_zero():
    eq, lat = lattice_of("painleve4")
    j = facet_contains(lat, (1, 0, 0, 0), 0)
    assert truncate(eq, lat, j).sum == parse_differential_sum(
        "-2*w*w'' + (w')^2 + 3*w^4 - 4*alpha*w^2 + 2*beta")


def test_vertex_faces_give_single_monomials():
    eq, lat = lattice_of("painleve5")
    for k, face in enumerate(lat.faces[0]):
        assert len(truncate(eq, lat, (0, k)).sum) == 1


def test_invalid_face_ids():
    eq, lat = lattice_of("painleve3")
    for bad in (99, -1, (5, 0), (0, 99), "x"):
        with pytest.raises(InvalidFaceError):
            truncate(eq, lat, bad)


@pytest.mark.parametrize("name,count", [("painleve3", 4), ("painleve4", 3), ("painleve5", 4)])
def test_admissible_counts(name, count):
    _, lat = lattice_of(name)
    verdicts = admissible_facets(lat)
    assert sum(v.admissible for v in verdicts) == count
    for v in verdicts:
        assert v.admissible == (lat.facets[v.facet_id].normal[0] != 0)
        assert v.reason.value == ("n1-nonzero" if v.admissible else "n1-zero")


def test_admissibility_needs_full_dimension():
    _, lat = lattice_of("painleve2")
    with pytest.raises(NotFullDimensionalError):
        admissible_facets(lat)


def test_candidate_order_examples():
    t = candidate_orders((-1, -1, 0, 1), offset=-1)
    assert (t.gamma, t.gamma1, t.gamma2, t.regime) == (1, 0, -1, Regime.TO_ZERO)
    t = candidate_orders((1, 1, 2, 3), offset=4)
    assert (t.gamma, t.gamma1, t.gamma2, t.regime) == (1, 2, 3, Regime.TO_INFINITY)
    assert t.shift == -4
    t = candidate_orders((1, 0, -1, -2))
    assert (t.gamma, t.gamma1, t.gamma2) == (0, -1, -2)
    with pytest.raises(InadmissibleFacetError):
        candidate_orders((0, 0, 1, 0))


def test_candidate_orders_fractional():
    t = candidate_orders((2, 1, 0, -1))
    assert (t.gamma, t.gamma1, t.gamma2) == (Fraction(1, 2), 0, Fraction(-1, 2))


@pytest.mark.parametrize("name", ["painleve3", "painleve4", "painleve5"])
def test_candidate_orders_match_elimination_oracle(name):
    _, lat = lattice_of(name)
    for f in lat.facets:
        if f.normal[0] == 0:
            continue
        t = candidate_orders(f)
        orders, regime = elimination_orders([lat.points[i] for i in f.point_ids], lat.points)
        assert (t.gamma, t.gamma1, t.gamma2) == orders
        assert t.regime.value == regime
        # the shift closes the facet equation
        for i in f.point_ids:
            q = lat.points[i]
            assert q[0] + t.gamma * q[1] + t.gamma1 * q[2] + t.gamma2 * q[3] + t.shift == 0


@pytest.mark.parametrize("name", ["painleve3", "painleve4", "painleve5"])
def test_convention_invariance(name):
    eq = preset_sum(name)
    a = analyze(eq, 4, Convention.PLAIN)
    b = analyze(eq, 4, Convention.COUNT_DEPENDENT)
    triples = lambda rep: sorted((r.orders.gamma, r.orders.gamma1, r.orders.gamma2,
                                  r.orders.regime) for r in rep.admissible())
    assert triples(a) == triples(b)
    assert sorted(str(r.truncation) for r in a.facets) == sorted(str(r.truncation)
                                                                 for r in b.facets)
    for r in b.facets:
        assert a.facet_by_plane(shear_normal(r.facet.normal), r.facet.offset) is not None


def test_lower_dimensional_geometries_unfold_orders():
    t = candidate_orders((1, 2, -1), dim=3)
    assert (t.gamma, t.gamma1, t.gamma2) == (2, 1, 0)
    t = candidate_orders((-1, 1), dim=2)
    assert (t.gamma, t.gamma1, t.gamma2) == (-1, -2, -3)
    rep = analyze(preset_sum("painleve3"), 3)
    assert rep.facets and all(r.verdict is None for r in rep.facets)


def test_degeneracy_examples():
    for name, dim in (("painleve1", 2), ("painleve2", 3)):
        eq, lat = lattice_of(name)
        v = degeneracy_verdict(support(eq), lat)
        assert v.kind is DegeneracyKind.HYPERPLANE_N1_ZERO
        assert v.affine_dim == dim
        assert v.witness[0] == 0
    eq, lat = lattice_of("painleve2")
    v = degeneracy_verdict(support(eq), lat)
    assert tuple(abs(x) for x in v.witness) == (0, 0, 1, 0)
    assert "q3 = 0" in v.message
    eq, lat = lattice_of("painleve3")
    assert degeneracy_verdict(support(eq), lat).kind is DegeneracyKind.FULL_DIMENSIONAL


def test_degenerate_other():
    # support inside q1 + q2 = 1 in 4D: every normal direction has n1 != 0
    eq = parse_differential_sum("z + w + w*w' + z*w'' + w*w'*w''")
    rep = analyze(eq)
    assert rep.degeneracy.kind is DegeneracyKind.OTHER
    assert rep.facets == ()
    rel = analyze(eq, force_relative=True)
    assert rel.relative and rel.facets


def test_p2_report_has_no_facets():
    assert analyze(preset_sum("painleve2")).facets == ()


@settings(max_examples=20, deadline=None)
@given(sums(nonneg_monomial, max_size=7))
def test_truncation_support_identity(eq):
    if not eq:
        return
    supp = support(eq)
    lat = convex_hull(supp.points)
    for layer in lat.faces:
        for k, face in enumerate(layer):
            tr = truncate(eq, lat, (face.dim, k)).sum
            assert set(support(tr).points) == {lat.points[i] for i in face.point_ids}
            # truncation is a sub-sum of the equation
            for t in tr.terms:
                assert eq.coefficient(*t.key) == t.coeff


def test_assumptions():
    a = parse_assumptions("alpha!=0, beta = 1/2 ,gamma=0")
    assert a.nonzero == {"alpha"}
    assert str(a) == "alpha!=0,beta=1/2,gamma=0"
    rep = analyze(preset_sum("painleve3"), assumptions=parse_assumptions("gamma=0"))
    assert (1, 4, 0, 0) not in rep.support
    assert len(rep.support) == 6
    with pytest.raises(AssumptionError):
        analyze(preset_sum("painleve3"), assumptions=parse_assumptions("epsilon=1"))
    for bad in ("alpha", "alpha=x", "alpha<0", "z=1"):
        with pytest.raises(AssumptionError):
            parse_assumptions(bad)


def test_format_plane():
    assert format_plane((1, 1, 0, -1), 1) == "q1 + q2 - q4 = 1"
    assert format_plane((0, 0, -1, 0), 0) == "-q3 = 0"
    assert format_plane((2, 0, 0, 0), -3) == "2q1 = -3"
