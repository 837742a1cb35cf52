import pytest

from curveorbits.localization import UV, points_orbit_localization
from curveorbits.points import (
    UVH,
    flip_sign,
    partitions_with_min_parts,
    points_class,
    points_class_distinct,
    points_predegree,
    projectivize_points,
)
from curveorbits.poly import UsageError

u, v = UV.var("u"), UV.var("v")


def test_three_points():
    # oracle: bracket reduces to 2(u-v)^2/(3uv(2u+v)(u+2v)), total collapses to 6
    assert points_class([1, 1, 1]) == UV.const(6)


def test_double_point_configuration():
    # oracle: bracket = 3(u-v)^2/(4uv(3u+v)(u+3v)); hand-cleared to 24(u+v)
    assert points_class([2, 1, 1]) == 24 * (u + v)


def test_four_distinct_points():
    assert points_class([1, 1, 1, 1]) == 48 * (u + v)


def test_distinct_points_products():
    assert points_class_distinct(3) == UVH.const(6)
    U, V, H = (UVH.var(s) for s in ("u", "v", "H"))
    assert points_class_distinct(4) == 24 * (H + 2 * U + 2 * V)


def test_distinct_product_matches_projectivized_class():
    for n in range(3, 9):
        got = projectivize_points(points_class([1] * n), n)
        assert got == points_class_distinct(n)


def test_localization_equivalence_small():
    for mults in ([1, 1, 1], [2, 1, 1], [2, 2, 1], [3, 1, 1], [1, 1, 1, 1, 1]):
        assert points_orbit_localization(mults) == points_class(mults)


def test_flip_sign_involution():
    q = points_class([2, 1, 1])
    assert flip_sign(flip_sign(q)) == q
    assert flip_sign(q) == -24 * (u + v)


def test_predegree_of_four_distinct_points():
    q = points_class([1, 1, 1, 1])
    assert points_predegree(q, 4) == 24


def test_homogeneity_and_symmetry():
    for mults in ([2, 1, 1], [3, 2, 1], [2, 2, 2]):
        q = points_class(mults)
        d = sum(mults)
        assert q.is_homogeneous()
        assert q.degree() == d - 3
        assert q.substitute({"u": v, "v": u}) == q


def test_partition_enumeration():
    parts = partitions_with_min_parts(8)
    assert len(parts) == 42
    assert all(len(p) >= 3 for p in parts)
    assert all(sum(p) <= 8 for p in parts)


def test_points_need_three_parts():
    with pytest.raises(UsageError):
        points_class([5, 3])
    with pytest.raises(UsageError):
        points_class_distinct(2)
