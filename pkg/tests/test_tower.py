import random
from fractions import Fraction

import pytest

from curveorbits.bundles import (
    CHERN_TABLE,
    complete_homogeneous,
    dual,
    from_roots,
    from_roots_symmetric,
    roots_table,
    sym_power,
)
from curveorbits.poly import Poly, Symbols, UsageError
from curveorbits.tower import RingTower


def _simple_tower(rank=2):
    base = RingTower(("c1", "c2"), (1, 2))
    t = base.table
    chern = [t.one(), t.var("c1"), t.var("c2")]
    return base.extend(chern, "H", rank=rank)


def test_rank2_relation():
    tower = _simple_tower()
    level = tower.levels[0]
    t = tower.table
    H = t.var("H")
    assert level.relation(t) == H**2 + t.var("c1") * H + t.var("c2")


def test_rank2_reduction():
    tower = _simple_tower()
    t = tower.table
    H, c1, c2 = t.var("H"), t.var("c1"), t.var("c2")
    assert tower.normal_form(H**2) == -c1 * H - c2


def test_normal_form_idempotent():
    tower = _simple_tower()
    rng = random.Random(5)
    t = tower.table
    for _ in range(25):
        terms = {
            tuple(rng.randint(0, 4) for _ in t.names): Fraction(rng.randint(-5, 5))
            for _ in range(4)
        }
        p = Poly(t, terms)
        nf = tower.normal_form(p)
        assert tower.normal_form(nf) == nf


def test_normal_form_is_multiplicative():
    tower = _simple_tower()
    rng = random.Random(11)
    t = tower.table
    for _ in range(15):
        a = Poly(
            t,
            {
                tuple(rng.randint(0, 3) for _ in t.names): Fraction(rng.randint(-4, 4))
                for _ in range(3)
            },
        )
        b = Poly(
            t,
            {
                tuple(rng.randint(0, 3) for _ in t.names): Fraction(rng.randint(-4, 4))
                for _ in range(3)
            },
        )
        assert tower.normal_form(a * b) == tower.normal_form(
            tower.normal_form(a) * tower.normal_form(b)
        )


def test_fundamental_class_pushforward():
    tower = _simple_tower()
    t = tower.table
    H = t.var("H")
    # fiber is P^1: H integrates to 1, constants to 0
    assert tower.fiber_integrate(H) == t.one()
    assert tower.fiber_integrate(t.one()).is_zero()


def test_integrate_to_base_p2_level():
    base = RingTower(("a",), (1,))
    t = base.table
    tower = base.extend([t.one()], "H", rank=3)
    H = tower.table.var("H")
    assert tower.integrate_to_base(H**2) == tower.base.one()
    # degree below fiber dimension integrates to zero
    assert tower.integrate_to_base(H).is_zero()
    assert tower.integrate_to_base(tower.table.one()).is_zero()


def test_sym4_dual_level_and_alpha_relation():
    # extend by the rank-15 bundle of quartic forms; alpha * H picks up -c15
    rt = roots_table(3)
    V = from_roots([rt.var(n) for n in ("u", "v", "w")])
    S = sym_power(dual(V), 4)
    cs = [from_roots_symmetric(S.chern_piece(i), 3, CHERN_TABLE) for i in range(16)]
    base = RingTower(("c1", "c2", "c3"), (1, 2, 3))
    tower = base.extend([c.map_to(base.table) for c in cs], "H")
    assert tower.levels[0].rank == 15
    t = tower.table
    H = t.var("H")
    alpha = t.zero()
    for i in range(15):
        alpha = alpha + cs[i].map_to(t) * H ** (14 - i)
    assert tower.normal_form(alpha * H) == -cs[15].map_to(t)


def test_segre_oracle_random_towers():
    rng = random.Random(31)
    base_syms = Symbols(("a", "b"))
    for _ in range(30):
        rank = rng.randint(2, 3)
        roots = []
        for _ in range(rank):
            roots.append(
                rng.randint(-2, 2) * base_syms.var("a")
                + rng.randint(-2, 2) * base_syms.var("b")
            )
        bundle = from_roots(roots)
        base = RingTower(("a", "b"))
        chern = [bundle.chern_piece(i) for i in range(rank + 1)]
        tower = base.extend(chern, "H")
        t = tower.table
        H = t.var("H")
        for k in range(0, 5):
            got = tower.fiber_integrate(H ** (rank - 1 + k))
            relation_roots = [(-r).map_to(t) for r in roots]
            expected = complete_homogeneous(relation_roots, k)
            assert got == expected, (roots, k)


def test_projection_formula():
    rng = random.Random(13)
    tower = _simple_tower()
    t = tower.table
    base_like = lambda: Poly(
        t,
        {
            (rng.randint(0, 2), rng.randint(0, 1), 0): Fraction(rng.randint(-3, 3))
            for _ in range(3)
        },
    )
    any_poly = lambda: Poly(
        t,
        {
            tuple(rng.randint(0, 3) for _ in t.names): Fraction(rng.randint(-3, 3))
            for _ in range(3)
        },
    )
    for _ in range(20):
        a = base_like()
        b = any_poly()
        assert tower.fiber_integrate(a * b) == a * tower.fiber_integrate(b)


def test_extend_requires_normal_form():
    tower = _simple_tower()
    t = tower.table
    H = t.var("H")
    bad = [t.one(), H**2, t.zero()]  # H^2 is not in normal form
    with pytest.raises(UsageError):
        tower.extend(bad, "K")


def test_tower_describe_is_json_serializable():
    import json

    tower = _simple_tower()
    text = json.dumps(tower.describe())
    assert "relation" in text


def test_w_tower_shape():
    # the triple-tangency tower: P(V*) -> P(S) -> P(V_flex)
    from curveorbits.orbits import w_variety_classes

    w = w_variety_classes(4)
    assert w.d == 4
