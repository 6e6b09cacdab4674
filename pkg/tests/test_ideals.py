from fractions import Fraction

import pytest

from poisson_atlas import (
    Exact,
    LaurentPoly,
    PointP,
    PoissonPresentation,
    Scaled,
    SearchBox,
    SubstitutionMap,
    Table,
    VarSet,
    bracket,
    find_poisson_maximal,
    is_poisson_maximal,
    leaf_report,
    relation_in_J_squared,
)
from poisson_atlas.lie import apply_automorphism_to_point
from poisson_atlas.scalars import Scalar


def pts(ideals):
    return [tuple(str(v) for v in i.point.values) for i in ideals]


def test_is_poisson_maximal_torus(torus_pres):
    vs = torus_pres.varset
    assert is_poisson_maximal(torus_pres, PointP(vs, [2, 2, 2]))
    # oracle: {y,z}(1,1,1) = yz - 2x = -1 != 0
    bad = PointP(vs, [1, 1, 1])
    yz = torus_pres.bracket_spec.pair(vs, 1, 2)
    assert yz.evaluate(bad) == Scalar(-1)
    assert not is_poisson_maximal(torus_pres, bad)


def test_abelian_every_point_poisson():
    vs = VarSet(("x1", "x2", "x3"))
    pres = PoissonPresentation(vs, Table(()))
    assert is_poisson_maximal(pres, PointP(vs, [5, -7, Fraction(1, 3)]))
    ideals = find_poisson_maximal(pres, SearchBox(1, 1))
    assert len(ideals) == 3**3


def test_find_a1(a1_pres):
    ideals = find_poisson_maximal(a1_pres, SearchBox(3, 1))
    assert pts(ideals) == [("0", "0", "0")]


def test_find_torus(torus_pres):
    ideals = find_poisson_maximal(torus_pres, SearchBox(3, 1))
    assert set(pts(ideals)) == {
        ("0", "0", "0"),
        ("2", "2", "2"),
        ("2", "-2", "-2"),
        ("-2", "2", "-2"),
        ("-2", "-2", "2"),
    }
    # soundness re-check
    assert all(is_poisson_maximal(torus_pres, i.point) for i in ideals)


def test_find_laurent_inv(xyz):
    vs, x, y, z = xyz
    pres = PoissonPresentation(vs, Exact(x * (4 - z * z) + y * y))
    ideals = find_poisson_maximal(pres, SearchBox(3, 1))
    assert set(pts(ideals)) == {("0", "0", "2"), ("0", "0", "-2")}


def test_box_skips_zero_for_laurent(xyz_laurent):
    vs, x, y, z = xyz_laurent
    pres = PoissonPresentation(vs, Scaled(2 * z, x * y + z + z**-1))
    ideals = find_poisson_maximal(pres, SearchBox(4, 2))
    assert set(pts(ideals)) == {("0", "0", "1"), ("0", "0", "-1")}


def test_explicit_candidates(xyz_laurent):
    vs, x, y, z = xyz_laurent
    pres = PoissonPresentation(vs, Scaled(2 * z, x * y + z * z + z**-2))
    i = Scalar(0, 1, -1)
    box = SearchBox(extra=(PointP(vs, [0, 0, i]), PointP(vs, [0, 0, -i])))
    ideals = find_poisson_maximal(pres, box)
    assert len(ideals) == 4


def test_relation_in_j_squared(torus_pres):
    vs = torus_pres.varset
    f = torus_pres.relations[0]
    origin = PointP(vs, [0, 0, 0])
    assert relation_in_J_squared(torus_pres, f - 4, origin)
    x = LaurentPoly.variable(vs, "x")
    assert not relation_in_J_squared(torus_pres, x, origin)


def test_relation_in_j_squared_kleinian(xyz):
    vs, x, y, z = xyz
    for n in (3, 4, 5):
        pres = PoissonPresentation(vs, Exact(z**n - x * y))
        origin = PointP(vs, [0, 0, 0])
        assert relation_in_J_squared(pres, z ** (n - 1), origin)


def test_relation_warns_off_poisson_point(torus_pres):
    vs = torus_pres.varset
    x = LaurentPoly.variable(vs, "x")
    with pytest.warns(UserWarning):
        relation_in_J_squared(torus_pres, x, PointP(vs, [1, 1, 1]))


def test_leaf_report_torus(torus_pres):
    rep = leaf_report(torus_pres, SearchBox(3, 1))
    assert [str(s) for s in rep.singular_lambdas] == ["0", "4"]
    assert len(rep.points_by_lambda[Scalar(0)]) == 4
    assert len(rep.points_by_lambda[Scalar(4)]) == 1


def test_leaf_report_a1(a1_pres):
    rep = leaf_report(a1_pres, SearchBox(3, 1))
    assert [str(s) for s in rep.singular_lambdas] == ["0"]


def test_leaf_report_whitney(xyz):
    vs, x, y, z = xyz
    pres = PoissonPresentation(vs, Exact(x * y * y - z * z))
    box = SearchBox(3, 1)
    rep = leaf_report(pres, box)
    assert [str(s) for s in rep.singular_lambdas] == ["0"]
    alphas = box.coordinate_values()
    assert len(rep.points_by_lambda[Scalar(0)]) == len(alphas)
    assert all(
        p.values[1].is_zero and p.values[2].is_zero
        for p in rep.points_by_lambda[Scalar(0)]
    )


def test_leaf_report_needs_potential():
    vs = VarSet(("x1", "x2"))
    pres = PoissonPresentation(vs, Table(()))
    with pytest.raises(ValueError):
        leaf_report(pres)


def test_automorphism_preserves_poisson_points(torus_pres):
    vs = torus_pres.varset
    x, y, z = (LaurentPoly.variable(vs, n) for n in vs.names)
    autos = {
        "theta_x": {"x": x, "y": -y, "z": -z},
        "theta_y": {"x": -x, "y": y, "z": -z},
        "theta_z": {"x": -x, "y": -y, "z": z},
    }
    ideals = find_poisson_maximal(torus_pres, SearchBox(3, 1))
    for images in autos.values():
        auto = SubstitutionMap.from_dict(vs, images)
        for ideal in ideals:
            moved = apply_automorphism_to_point(auto, ideal.point)
            assert is_poisson_maximal(torus_pres, moved)


def test_phi_automorphism_laurent_inv(xyz):
    vs, x, y, z = xyz
    pres = PoissonPresentation(vs, Exact(x * (4 - z * z) + y * y))
    phi = SubstitutionMap.from_dict(vs, {"x": x, "y": -y, "z": -z})
    j1 = PointP(vs, [0, 0, 2])
    moved = apply_automorphism_to_point(phi, j1)
    assert moved == PointP(vs, [0, 0, -2])
    assert is_poisson_maximal(pres, moved)


def test_deterministic_order(torus_pres):
    first = find_poisson_maximal(torus_pres, SearchBox(3, 1))
    second = find_poisson_maximal(torus_pres, SearchBox(3, 1))
    assert [i.point for i in first] == [i.point for i in second]


def test_exact_gradient_equivalence(torus_pres):
    # is_poisson_maximal(pt) <=> grad f(pt) = 0 <=> f - f(pt) in J^2
    import warnings

    vs = torus_pres.varset
    f = torus_pres.relations[0]
    rng_points = [(2, 2, 2), (1, 1, 1), (0, 0, 0), (1, -2, 3)]
    for coords in rng_points:
        pt = PointP(vs, list(coords))
        poisson = is_poisson_maximal(torus_pres, pt)
        _, grad = f.linear_part(pt)
        grad_zero = all(g.is_zero for g in grad)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            in_j2 = relation_in_J_squared(
                torus_pres, f - f.evaluate(pt), pt
            )
        assert poisson == grad_zero == in_j2
