from fractions import Fraction

import pytest

from curveorbits.bundles import CHERN_TABLE, predegree
from curveorbits.kazarian import load_local_classes
from curveorbits.orbits import (
    compute_class,
    concurrent_lines_class,
    cubic_table,
    hyperflex_p,
    integrate_over_grassmannian,
    mult_map_class,
    nodal_cuspidal_p,
    points_result,
    predegree_poly_cbn,
    predegree_poly_cflex,
    product_orbit_class,
    quartic_p,
    quartic_table,
    section_counts,
    w_variety_classes,
)
from curveorbits.poly import ConsistencyError, UsageError

from pathlib import Path

c1, c2, c3 = (CHERN_TABLE.var(n) for n in ("c1", "c2", "c3"))
REPO_ROOT = Path(__file__).resolve().parent.parent


def test_quadrilateral_class():
    got = mult_map_class([1, 1, 1, 1], 24, 4)
    expected = 16 * (
        18 * c1**6
        + 33 * c1**4 * c2
        + 12 * c1**2 * c2**2
        + 131 * c1**3 * c3
        + 153 * c1 * c2 * c3
        - 147 * c3**2
    )
    assert got == expected


def test_triple_line_row():
    got = mult_map_class([3], 1, 3)
    expected = -(
        72 * c1**3 * c2**2
        + 36 * c1 * c2**3
        + 36 * c1**4 * c3
        - 162 * c1**2 * c2 * c3
        + 243 * c1 * c3**2
    )
    assert got == expected


def test_conic_plus_line_row():
    assert mult_map_class([2, 1], 1, 3) == 18 * c1**2 + 9 * c2


def test_triangle_row():
    assert mult_map_class([1, 1, 1], 6, 3) == -(12 * c1**3 + 6 * c1 * c2 + 27 * c3)


def test_double_line_plus_line_row():
    got = product_orbit_class([(1, 2), (1, 1)], 1, 3)
    assert got == -(72 * c1**3 * c2 + 36 * c1 * c2**2 - 108 * c1**2 * c3)


def test_concurrent_lines():
    got = concurrent_lines_class()
    assert got == 12 * c1**4 + 6 * c1**2 * c2 + 27 * c1 * c3
    assert got.is_homogeneous() and got.degree() == 4


def test_pencil_tower_matches_direct_product_pipeline():
    # two concurrent lines are just two lines: the point-in-the-tower route
    # must agree with the plain two-factor multiplication map
    from curveorbits.orbits import RingTower, _integrate_alpha
    from curveorbits.bundles import BundleClass, line_bundle, ses_complement

    tower = RingTower(("c1", "c2", "c3"), (1, 2, 3))
    t0 = tower.table
    tower = tower.extend([t0.one(), t0.var("c1"), t0.var("c2"), t0.var("c3")], "h")
    t1 = tower.table
    vd_total = t1.one() - t1.var("c1") + t1.var("c2") - t1.var("c3")
    pencil = ses_complement(
        BundleClass(3, vd_total, None), line_bundle(t1.var("h")), normalize=tower.normal_form
    )
    k_chern = [tower.normal_form(pencil.chern_piece(i)) for i in range(3)]
    for i in range(2):
        tower = tower.extend([c.map_to(tower.table) for c in k_chern], f"k{i + 1}")
    via_pencils = _integrate_alpha(
        tower, 2, tower.table.var("k1") + tower.table.var("k2")
    ) / 2
    direct = product_orbit_class([(1, 1), (1, 1)], 2, 2)
    assert via_pencils == direct


def test_mult_map_rejects_bad_degrees():
    with pytest.raises(UsageError):
        mult_map_class([2, 1], 1, 4)
    with pytest.raises(UsageError):
        product_orbit_class([(1, 2)], 1, 3)


def test_mult_map_non_integral_division_raises():
    with pytest.raises(ConsistencyError):
        product_orbit_class([(1, 1)] * 4, 7, 4)


def test_fixed_j_divisor_entries():
    from curveorbits.orbits import fixed_j_divisor_entries

    rows = {r.name: r for r in fixed_j_divisor_entries()}
    assert rows["cubic:smooth"].affine == 18 * (-12 * c1)
    assert rows["cubic:smooth-j0"].affine == 54 * (-4 * c1)
    assert rows["cubic:smooth-j1728"].affine == 36 * (-6 * c1)
    assert rows["cubic:nodal"].affine == 6 * (-12 * c1)


def test_w_variety_outputs():
    w = w_variety_classes(4)
    assert w.o_cbn == 64 * (
        18 * c1**6
        + 33 * c1**4 * c2
        + 12 * c1**2 * c2**2
        - 85 * c1**3 * c3
        - 11 * c1 * c2 * c3
        - 7 * c3**2
    )
    assert w.o_can == 192 * (
        18 * c1**6
        + 33 * c1**4 * c2
        + 12 * c1**2 * c2**2
        + 19 * c1**3 * c3
        - 7 * c1 * c2 * c3
        - 35 * c3**2
    )


def test_w_variety_crosscheck_against_singularity_pushforward():
    w = w_variety_classes(4)
    assert 3 * w.o_cbn == quartic_p("D6")


def test_w_variety_predegree_polynomial_d5():
    # independent cross-check of the closed quadratics at the next degree
    w = w_variety_classes(5)
    assert predegree(w.o_cbn, 5) == predegree_poly_cbn(5)
    # flex = AN + 2*BN at the predegree level ties the other output down too
    assert predegree(2 * w.o_can, 5) == 2 * predegree_poly_cflex(5) - 2 * (
        3 * predegree_poly_cbn(5)
    )


def test_w_variety_needs_d_at_least_4():
    with pytest.raises(UsageError):
        w_variety_classes(3)


def test_predegree_polynomials():
    assert predegree_poly_cbn(4) == 308
    assert predegree_poly_cflex(4) == 1980 == 12 * 165


def test_predegree_polynomials_reject_small_d():
    with pytest.raises(UsageError):
        predegree_poly_cbn(3)
    with pytest.raises(UsageError):
        predegree_poly_cflex(3)


def test_quartic_relations():
    p_a6 = quartic_p("A6")
    p_d6 = quartic_p("D6")
    p_e6 = quartic_p("E6")
    p_an = quartic_p("AN")
    p_flex = quartic_p("flex")
    assert p_flex == p_an + 2 * p_d6
    assert quartic_p("general") == 8 * p_a6
    p_q = quartic_p("quadrilateral")
    p_d4 = quartic_p("D4")
    assert 4 * p_d4 == 8 * p_a6 - p_q
    assert quartic_p("2lines+conic") == p_q + 2 * p_d4
    assert quartic_p("line+cubic") == p_q + 3 * p_d4
    assert nodal_cuspidal_p(1, 2) == 8 * p_a6 - 2 * p_d6 - 2 * p_flex
    assert hyperflex_p(3) == 8 * p_a6 - 3 * p_e6


def test_quartic_homogeneity():
    for row in quartic_table():
        assert row.affine.is_homogeneous()
        assert row.affine.degree() == 6


def test_quartic_predegrees():
    assert predegree(quartic_p("general"), 4) == 14280
    assert predegree(quartic_p("A6"), 4) == 1785
    assert predegree(quartic_p("E6"), 4) == 294
    assert predegree(quartic_p("D6"), 4) == 3 * 308


def test_h6_coefficients_of_projective_classes():
    # the H^6 coefficient with all c_i = 0 is the aut-weighted orbit degree
    from curveorbits.bundles import projectivize

    for name, value in (("general", 14280), ("A6", 1785)):
        proj = projectivize(quartic_p(name), 4)
        coeff = proj.coefficient("H", 6)
        assert coeff.evaluate({"c1": 0, "c2": 0, "c3": 0, "H": 0}) == value


def test_section_counts():
    expected = {
        "A6": 63840,
        "D6": 21120,
        "E6": 9600,
        "AN": 72960,
        "flex": 115200,
        "quadrilateral": 134400,
        "D4": 94080,
        "2lines+conic": 322560,
        "line+cubic": 416640,
        "general": 510720,
    }
    got = {name: int(count) for name, _aut, count in section_counts()}
    assert got == expected


def test_tricuspidal_identity():
    # weighted count of tricuspidal sections: 510720 - 3 * (2*57600) = 6 * 27520
    got = integrate_over_grassmannian(nodal_cuspidal_p(0, 3))
    assert got == Fraction(510720 - 6 * 57600) == Fraction(6 * 27520)


def test_cubic_table_without_user_locals():
    rows = {r.name for r in cubic_table()}
    assert "cubic:cuspidal" not in rows
    assert "cubic:conic+tangent" not in rows
    assert "cubic:triangle" in rows


def test_cubic_table_with_sample_a2():
    locals_ = load_local_classes(REPO_ROOT / "data" / "kazarian_a2.json")
    rows = {r.name: r for r in cubic_table(locals_)}
    assert rows["cubic:cuspidal"].affine == 24 * c1**2


def test_cubic_smooth_rows_share_the_weighted_class():
    rows = {r.name: r for r in cubic_table()}
    products = {
        name: rows[name].affine
        for name in ("cubic:smooth", "cubic:smooth-j1728", "cubic:smooth-j0")
    }
    assert len({p.key() for p in products.values()}) == 1
    assert rows["cubic:nodal"].affine == -72 * c1


def test_compute_class_identifiers():
    assert compute_class("A6").aut == 3
    assert compute_class("nodal(1,0)").affine == nodal_cuspidal_p(1, 0)
    assert compute_class("smooth(2)").affine == hyperflex_p(2)
    assert compute_class("points:2,1,1").affine == points_result([2, 1, 1]).affine
    with pytest.raises(UsageError):
        compute_class("bogus")
    with pytest.raises(UsageError):
        compute_class("cubic:cuspidal")  # conditional row needs user locals


def test_points_result_predegree():
    res = points_result([1, 1, 1, 1])
    assert res.predegree == 24
    assert res.name == "points:1,1,1,1"
