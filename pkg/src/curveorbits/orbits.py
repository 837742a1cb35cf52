"""Orbit-closure classes of plane curves: the headline computations.

Three independent engines feed the result tables:

* singularity-class pushforwards down the universal family (A6/D6/E6 rows),
* multiplication-map pushforwards over products of projective bundles
  (unions of lines and conics),
* the flag tower of (curve, line, point) triples with a line triply tangent
  at the point, whose Riemann-Hurwitz bookkeeping yields the nodal-cubic-
  plus-line classes.

Everything downstream (quartic table, cubic table, plane-section counts,
predegrees) is assembled from these by the exact linear relations between
degenerating orbits, with every division asserted integral.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from . import points as pts
from .bundles import (
    CHERN_TABLE,
    BundleClass,
    dual,
    from_roots,
    from_roots_symmetric,
    jet_bundle,
    line_bundle,
    predegree,
    projectivize,
    roots_table,
    ses_complement,
    sym_power,
)
from .kazarian import (
    BUILTIN_LOCALS,
    KazarianLocalClass,
    kazarian_pushforward,
)
from .localization import grassmann_chern_numbers
from .poly import ConsistencyError, Poly, UsageError
from .tower import RingTower

INFINITE = "infinite"


@dataclass(frozen=True)
class OrbitClassResult:
    """A named orbit closure with its class data.

    ``affine`` is the automorphism-weighted class p_C for finite-automorphism
    curves; rows with infinite automorphisms carry the raw orbit-closure
    class instead (flagged by ``weighted=False``).
    """

    name: str
    affine: Poly
    projective: Poly
    predegree: Fraction
    aut: int | str | None  # stated order, "infinite", or None when unstated
    provenance: str
    d: int
    display: str | None = None  # stored factored form, presentation only
    weighted: bool = True

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "affine": self.affine.to_json_dict(),
            "projective": self.projective.to_json_dict(),
            "predegree": str(self.predegree),
            "aut": self.aut,
            "weighted": self.weighted,
            "provenance": self.provenance,
            "display": self.display,
            "degree": self.d,
        }


def assert_integral(p: Poly, what: str) -> Poly:
    for coeff in p.terms.values():
        if coeff.denominator != 1:
            raise ConsistencyError(f"{what}: non-integral coefficient {coeff}")
    return p


# -- Chern classes of symmetric powers ----------------------------------------


@lru_cache(maxsize=None)
def sym_dual_chern(d: int) -> tuple[Poly, ...]:
    """c_0..c_N of Sym^d(V*) for the rank-3 bundle V, over (c1, c2, c3)."""
    rt = roots_table(3)
    V = from_roots([rt.var(n) for n in ("u", "v", "w")])
    S = sym_power(dual(V), d)
    return tuple(
        from_roots_symmetric(S.chern_piece(i), 3, CHERN_TABLE)
        for i in range(S.rank + 1)
    )


def _integrate_alpha(
    tower: RingTower, total_d: int, pullback: Poly, extra: Poly | None = None
) -> Poly:
    """Integrate alpha(H -> pullback) * extra down the tower.

    alpha is the degree-(N-1) truncation of the Leray relation of
    P(Sym^total_d V*): pairing against it extracts the constant term of a
    pushforward, i.e. the affine orbit class.  Powers of the pullback are
    normal-formed incrementally to keep intermediate sizes down.
    """
    cs = sym_dual_chern(total_d)
    n_top = len(cs) - 1  # alpha has degree n_top - 1 ... c_0 H^{N-1} + ...
    table = tower.table
    powers = [table.one()]
    for _ in range(n_top - 1):
        powers.append(tower.normal_form(powers[-1] * pullback))
    acc = table.zero()
    for i in range(n_top):
        acc = acc + cs[i].map_to(table) * powers[n_top - 1 - i]
    if extra is not None:
        acc = tower.normal_form(acc) * extra
    return tower.integrate_to_base(acc).map_to(CHERN_TABLE)


# -- multiplication-map classes ------------------------------------------------


def product_orbit_class(
    factors: Sequence[tuple[int, int]], map_degree: int, total_d: int
) -> Poly:
    """Orbit class of a product curve via the multiplication map.

    ``factors`` lists (form degree, multiplicity) per component; the source is
    the product of the bundles of degree-e forms and the target hyperplane
    class pulls back to sum(k_i * h_i).  The pushforward is divided by the
    generic fiber size ``map_degree`` and asserted integral.
    """
    if sum(e * k for e, k in factors) != total_d:
        raise UsageError("factor degrees (with multiplicity) must sum to total_d")
    tower = RingTower(("c1", "c2", "c3"), (1, 2, 3))
    for i, (e, _k) in enumerate(factors):
        cs = sym_dual_chern(e)
        tower = tower.extend([c.map_to(tower.table) for c in cs], f"h{i + 1}")
    table = tower.table
    pullback = table.zero()
    for i, (_e, k) in enumerate(factors):
        pullback = pullback + k * table.var(f"h{i + 1}")
    raw = _integrate_alpha(tower, total_d, pullback)
    out = raw / map_degree
    return assert_integral(out, "multiplication-map pushforward")


def mult_map_class(
    factor_degrees: Sequence[int], map_degree: int, total_d: int
) -> Poly:
    """Public wrapper over ``product_orbit_class``.

    A single entry equal to total_d denotes a total_d-fold line (source is
    the space of linear forms, hyperplane pulling back to total_d * h); any
    other list is read as distinct factors of those form degrees.
    """
    degrees = list(factor_degrees)
    if len(degrees) == 1 and degrees[0] == total_d and total_d > 1:
        factors = [(1, total_d)]
    else:
        if sum(degrees) != total_d:
            raise UsageError("factor degrees must sum to total_d")
        factors = [(e, 1) for e in degrees]
    return product_orbit_class(factors, map_degree, total_d)


@lru_cache(maxsize=None)
def concurrent_lines_class() -> Poly:
    """Three concurrent lines: three pencils of lines through a moving point."""
    tower = RingTower(("c1", "c2", "c3"), (1, 2, 3))
    t0 = tower.table
    v_chern = [t0.one(), t0.var("c1"), t0.var("c2"), t0.var("c3")]
    tower = tower.extend(v_chern, "h")
    t1 = tower.table
    h = t1.var("h")
    vd_total = t1.one() - t1.var("c1") + t1.var("c2") - t1.var("c3")
    v_dual = BundleClass(3, vd_total, None)
    # forms vanishing at the moving point: kernel of evaluation V* -> O(1)
    pencil = ses_complement(v_dual, line_bundle(h), normalize=tower.normal_form)
    k_chern = [tower.normal_form(pencil.chern_piece(i)) for i in range(3)]
    for i in range(3):
        tower = tower.extend([c.map_to(tower.table) for c in k_chern], f"k{i + 1}")
    table = tower.table
    pullback = table.var("k1") + table.var("k2") + table.var("k3")
    raw = _integrate_alpha(tower, 3, pullback)
    return assert_integral(raw / 6, "concurrent-lines pushforward")


# -- the (curve, line, point) flag tower ---------------------------------------

CUBIC_DISCRIMINANT_DEGREE = 12


@dataclass(frozen=True)
class WVarietyResult:
    """Classes produced by the triple-tangency flag tower for degree d."""

    d: int
    o_cbn: Poly  # nodal cubic + (d-3)-fold branch-tangent line at the node
    o_can: Poly  # nodal cubic + (d-3)-fold flex line at a smooth point
    relative_canonical: Poly
    conic_component: Poly  # triples where the cubic is a conic union the line
    ramification: Poly
    w_bn: Poly
    w_an: Poly
    tower_description: dict  # level names, ranks, relations (debug output)


@lru_cache(maxsize=None)
def w_variety_classes(d: int) -> WVarietyResult:
    """Run the triple-tangency tower and push forward to the base.

    Builds P(V*) (the line), P(S) (a point on the line), then the rank-7
    bundle of cubics meeting the line to order >= 3 at the point.  The two
    divisor classes of interest come from Riemann-Hurwitz applied to the
    forget-to-the-cubic map, cross-checked against their known expressions.
    """
    if d < 4:
        raise UsageError("need d >= 4")
    tower = RingTower(("c1", "c2", "c3"), (1, 2, 3))
    t0 = tower.table
    c1 = t0.var("c1")
    vd_chern = [t0.one(), -c1, t0.var("c2"), -t0.var("c3")]
    tower = tower.extend(vd_chern, "Hline")

    t1 = tower.table
    hl = t1.var("Hline")
    v_total = t1.one() + t1.var("c1") + t1.var("c2") + t1.var("c3")
    V = BundleClass(3, v_total, None)
    # universal rank-2 subbundle: kernel of V -> O(1)
    S = ses_complement(V, line_bundle(hl), normalize=tower.normal_form)
    s_chern = [tower.normal_form(S.chern_piece(i)) for i in range(3)]
    tower = tower.extend(s_chern, "Hpoint")

    t2 = tower.table
    hp = t2.var("Hpoint")
    s1 = s_chern[1].map_to(t2)
    rel_cotangent = -(2 * hp + s1)
    jets = jet_bundle(3 * hp, 3, rel_cotangent)
    jets_nf = BundleClass(
        3,
        t2.one()
        + sum(
            (tower.normal_form(jets.chern_piece(i)) for i in range(1, 4)),
            t2.zero(),
        ),
        None,
    )
    sym3 = BundleClass(
        10,
        sum((c.map_to(t2) for c in sym_dual_chern(3)), t2.zero()),
        None,
    )
    v_flex = ses_complement(sym3, jets_nf, normalize=tower.normal_form)
    flex_chern = [tower.normal_form(v_flex.chern_piece(i)) for i in range(8)]
    tower = tower.extend(flex_chern, "Hcurve")

    table = tower.table
    hc = table.var("Hcurve")
    hl = table.var("Hline")
    hp = table.var("Hpoint")
    c1 = table.var("c1")

    # relative canonical of the whole tower: -(rank*H + c1(E)) per level
    k_rel = table.zero()
    for level in tower.levels:
        k_rel = k_rel - (
            level.rank * table.var(level.hyperplane) + level.chern[1].map_to(table)
        )
    rel_canonical = tower.normal_form(k_rel)
    if rel_canonical != -7 * hc + hl + hp + 7 * c1:
        raise ConsistencyError("relative canonical class failed its cross-check")

    # conic-union-line triples: zero locus of V_flex -> L(3) * Omega^3
    conic_component = tower.normal_form(hc + 3 * hp + 3 * rel_cotangent.map_to(table))
    if conic_component != hc - 3 * hp + 3 * hl - 3 * c1:
        raise ConsistencyError("conic-component class failed its cross-check")

    # Riemann-Hurwitz for the forget-to-the-cubic map; the target's relative
    # canonical is -(rank*H + c1) for the bundle of cubic forms
    sym3_c1 = sym_dual_chern(3)[1].map_to(table)
    k_target = -(10 * hc + sym3_c1)
    ramification = tower.normal_form(rel_canonical - k_target)
    if ramification != 3 * hc + hl + hp - 3 * c1:
        raise ConsistencyError("ramification class failed its cross-check")

    w_bn = assert_integral((ramification - conic_component) / 2, "branch-node class")
    if w_bn != hc - hl + 2 * hp:
        raise ConsistencyError("branch-tangent divisor failed its cross-check")

    disc = CUBIC_DISCRIMINANT_DEGREE * (hc - c1)
    w_an = tower.normal_form(disc - 3 * w_bn - 2 * conic_component)
    if w_an != 7 * hc - 3 * hl - 6 * c1:
        raise ConsistencyError("flex-at-node divisor failed its cross-check")

    pullback = hc + (d - 3) * hl
    o_cbn = _integrate_alpha(tower, d, pullback, w_bn)
    o_can = _integrate_alpha(tower, d, pullback, w_an)
    return WVarietyResult(
        d=d,
        o_cbn=o_cbn,
        o_can=o_can,
        relative_canonical=rel_canonical,
        conic_component=conic_component,
        ramification=ramification,
        w_bn=w_bn,
        w_an=w_an,
        tower_description=tower.describe(),
    )


# -- predegree closed forms ----------------------------------------------------


def predegree_poly_cbn(d: int) -> Fraction:
    """Orbit degree of the nodal-cubic-plus-line curve: 24 + 144(d-3) + 140(d-3)^2."""
    if d < 4:
        raise UsageError("need d >= 4")
    t = d - 3
    return Fraction(24 + 144 * t + 140 * t * t)


def predegree_cbn(d: int) -> Fraction:
    """Predegree (3 automorphisms)."""
    return 3 * predegree_poly_cbn(d)


def predegree_poly_cflex(d: int) -> Fraction:
    """Orbit degree of the smooth-cubic-plus-flex-line curve: 12(9 + 72(d-3) + 84(d-3)^2)."""
    if d < 4:
        raise UsageError("need d >= 4")
    t = d - 3
    return Fraction(12 * (9 + 72 * t + 84 * t * t))


def predegree_cflex(d: int) -> Fraction:
    """Predegree (2 automorphisms)."""
    return 2 * predegree_poly_cflex(d)


def node_predegree_contribution(d: int) -> Fraction:
    """24(35 d^2 - 174 d + 213): predegree drop from acquiring one node."""
    return Fraction(24 * (35 * d * d - 174 * d + 213))


def cusp_predegree_contribution(d: int) -> Fraction:
    """72(28 d^2 - 144 d + 183): predegree drop from acquiring one cusp."""
    return Fraction(72 * (28 * d * d - 144 * d + 183))


# -- quartic rows ----------------------------------------------------------------


@lru_cache(maxsize=None)
def kazarian_orbit_class(name: str, d: int) -> Poly:
    return kazarian_pushforward(BUILTIN_LOCALS[name], d)


@lru_cache(maxsize=None)
def _quartic_core() -> dict[str, Poly]:
    """Aut-weighted classes p_C for the independent quartic pipelines."""
    o_a6 = kazarian_orbit_class("A6", 4)
    o_d6 = kazarian_orbit_class("D6", 4)
    o_e6 = kazarian_orbit_class("E6", 4)
    w = w_variety_classes(4)
    p = {
        "A6": 3 * o_a6,
        "D6": 3 * o_d6,
        "E6": 2 * o_e6,
        "AN": 2 * w.o_can,
        "quadrilateral": 24 * product_orbit_class([(1, 1)] * 4, 24, 4),
    }
    p["flex"] = p["AN"] + 2 * p["D6"]
    p["general"] = 8 * p["A6"]
    p["D4"] = assert_integral(
        (8 * p["A6"] - p["quadrilateral"]) / 4, "triple-point class"
    )
    p["2lines+conic"] = p["quadrilateral"] + 2 * p["D4"]
    p["line+cubic"] = p["quadrilateral"] + 3 * p["D4"]
    return p


def quartic_p(name: str) -> Poly:
    return _quartic_core()[name]


def nodal_cuspidal_p(delta: int, kappa: int) -> Poly:
    """p_C for an irreducible quartic with delta nodes and kappa cusps."""
    if delta < 0 or kappa < 0:
        raise UsageError("node and cusp counts must be >= 0")
    core = _quartic_core()
    return core["general"] - 2 * delta * core["D6"] - kappa * core["flex"]


def hyperflex_p(n: int) -> Poly:
    """p_C for a smooth quartic with n hyperflexes."""
    if n < 0:
        raise UsageError("hyperflex count must be >= 0")
    core = _quartic_core()
    return core["general"] - n * core["E6"]


_QUARTIC_DISPLAY = {
    "A6": "3*112*(9c1^3 + 12c1c2 - 11c3)*(2c1^3 + c1c2 + c3)",
    "D6": "3*64*(18c1^6 + 33c1^4c2 + 12c1^2c2^2 - 85c1^3c3 - 11c1c2c3 - 7c3^2)",
    "E6": "2*48*(2c1^3 + c1c2 + c3)*(9c1^3 - 6c1c2 + 7c3)",
    "AN": "2*192*(18c1^6 + 33c1^4c2 + 12c1^2c2^2 + 19c1^3c3 - 7c1c2c3 - 35c3^2)",
    "quadrilateral": "24*16*(18c1^6 + 33c1^4c2 + 12c1^2c2^2 + 131c1^3c3 + 153c1c2c3 - 147c3^2)",
}

_QUARTIC_AUT = {
    "A6": 3,
    "D6": 3,
    "E6": 2,
    "AN": 2,
    "flex": 2,
    "quadrilateral": 24,
    "general": 1,
    "D4": None,
    "2lines+conic": None,
    "line+cubic": None,
}

_QUARTIC_PROVENANCE = {
    "A6": "singularity-class pushforward (A6)",
    "D6": "singularity-class pushforward (D6)",
    "E6": "singularity-class pushforward (E6)",
    "AN": "flag-tower pushforward",
    "flex": "relation: flex = AN + 2*D6",
    "quadrilateral": "multiplication-map pushforward (4 lines)",
    "general": "relation: general = 8*A6",
    "D4": "relation: D4 = (8*A6 - quadrilateral)/4",
    "2lines+conic": "relation: quadrilateral + 2*D4",
    "line+cubic": "relation: quadrilateral + 3*D4",
}

QUARTIC_ROW_NAMES = (
    "A6",
    "D6",
    "E6",
    "AN",
    "flex",
    "quadrilateral",
    "D4",
    "2lines+conic",
    "line+cubic",
    "general",
)


def _result_from_affine(
    name: str,
    affine: Poly,
    d: int,
    aut,
    provenance: str,
    display: str | None = None,
    weighted: bool = True,
) -> OrbitClassResult:
    proj = projectivize(affine, d)
    if weighted:
        pdeg = predegree(affine, d)
    else:
        pdeg = Fraction(0)  # orbit is not full-dimensional
    return OrbitClassResult(
        name=name,
        affine=affine,
        projective=proj,
        predegree=pdeg,
        aut=aut,
        provenance=provenance,
        d=d,
        display=display,
        weighted=weighted,
    )


def quartic_table() -> list[OrbitClassResult]:
    """All quartic rows, assembled from the independent pipelines."""
    rows = []
    for name in QUARTIC_ROW_NAMES:
        rows.append(
            _result_from_affine(
                name,
                quartic_p(name),
                4,
                _QUARTIC_AUT[name],
                _QUARTIC_PROVENANCE[name],
                _QUARTIC_DISPLAY.get(name),
            )
        )
    return rows


# -- cubic rows -------------------------------------------------------------------


def invariant_divisor_affine(degree: int) -> Poly:
    """Affine class of the divisor cut by a degree-k invariant of ternary cubics.

    The relative divisor class is k*(H - c1); setting H = 0 leaves -k*c1.
    """
    return -degree * CHERN_TABLE.var("c1")


def fixed_j_divisor_entries() -> list[OrbitClassResult]:
    """Smooth-cubic rows (one per j-stratum) and the nodal cubic."""
    rows = []
    for name, inv_degree, aut in (
        ("cubic:smooth", CUBIC_DISCRIMINANT_DEGREE, 18),
        ("cubic:smooth-j1728", 6, 36),
        ("cubic:smooth-j0", 4, 54),
    ):
        o = invariant_divisor_affine(inv_degree)
        rows.append(
            _result_from_affine(
                name,
                aut * o,
                3,
                aut,
                f"invariant divisor of degree {inv_degree}",
            )
        )
    nodal = kazarian_orbit_class("A1", 3)
    rows.append(
        _result_from_affine(
            "cubic:nodal",
            6 * nodal,
            3,
            6,
            "singularity-class pushforward (A1)",
        )
    )
    return rows


def cubic_table(
    user_locals: Mapping[str, KazarianLocalClass] | None = None,
) -> list[OrbitClassResult]:
    """The cubic rows; A2/A3 rows require user-supplied local classes."""
    user_locals = user_locals or {}
    rows = [
        _result_from_affine(
            "cubic:triple-line",
            product_orbit_class([(1, 3)], 1, 3),
            3,
            INFINITE,
            "multiplication-map pushforward (3-fold line)",
            weighted=False,
        ),
        _result_from_affine(
            "cubic:double-line+line",
            product_orbit_class([(1, 2), (1, 1)], 1, 3),
            3,
            INFINITE,
            "multiplication-map pushforward (double line + line)",
            weighted=False,
        ),
        _result_from_affine(
            "cubic:concurrent-lines",
            concurrent_lines_class(),
            3,
            INFINITE,
            "multiplication-map pushforward (pencils through a point)",
            weighted=False,
        ),
        _result_from_affine(
            "cubic:triangle",
            product_orbit_class([(1, 1)] * 3, 6, 3),
            3,
            INFINITE,
            "multiplication-map pushforward (3 lines)",
            weighted=False,
        ),
        _result_from_affine(
            "cubic:conic+line",
            product_orbit_class([(2, 1), (1, 1)], 1, 3),
            3,
            INFINITE,
            "multiplication-map pushforward (conic + line)",
            weighted=False,
        ),
    ]
    for name, local_name in (
        ("cubic:cuspidal", "A2"),
        ("cubic:conic+tangent", "A3"),
    ):
        if local_name in user_locals:
            rows.append(
                _result_from_affine(
                    name,
                    kazarian_pushforward(user_locals[local_name], 3),
                    3,
                    INFINITE,
                    f"singularity-class pushforward ({local_name}, user-supplied)",
                    weighted=False,
                )
            )
    rows.extend(fixed_j_divisor_entries())
    return rows


# -- plane sections of a quartic threefold ----------------------------------------


@lru_cache(maxsize=None)
def grassmann_integral_table() -> dict[tuple[int, int, int], Fraction]:
    """Integrals of all degree-6 monomials in c(S) over the 6-dim Grassmannian."""
    monos = [
        (a, b, c)
        for a in range(7)
        for b in range(4)
        for c in range(3)
        if a + 2 * b + 3 * c == 6
    ]
    values = grassmann_chern_numbers(3, 5, monos)
    return dict(zip(monos, values))


def integrate_over_grassmannian(p: Poly) -> Fraction:
    """Evaluate a degree-6 class in c1, c2, c3 on the Grassmannian of planes in P^4."""
    table = grassmann_integral_table()
    total = Fraction(0)
    for exps, coeff in p.map_to(CHERN_TABLE).terms.items():
        key = tuple(exps)
        if key not in table:
            raise UsageError("section counts need a homogeneous degree-6 class")
        total += coeff * table[key]
    return total


def section_counts() -> list[tuple[str, int | None, Fraction]]:
    """Aut-weighted counts of plane sections of a general quartic threefold."""
    out = []
    for name in QUARTIC_ROW_NAMES:
        out.append(
            (name, _QUARTIC_AUT[name], integrate_over_grassmannian(quartic_p(name)))
        )
    return out


# -- identifier parsing --------------------------------------------------------------

_NODAL_RE = re.compile(r"^nodal\((\d+),(\d+)\)$")
_SMOOTH_RE = re.compile(r"^smooth\((\d+)\)$")
_POINTS_RE = re.compile(r"^points:(\d+(?:,\d+)*)$")


def compute_class(
    identifier: str,
    user_locals: Mapping[str, KazarianLocalClass] | None = None,
) -> OrbitClassResult:
    """Resolve a stable curve identifier to its orbit-class result."""
    ident = identifier.strip()
    if ident in QUARTIC_ROW_NAMES:
        return _result_from_affine(
            ident,
            quartic_p(ident),
            4,
            _QUARTIC_AUT[ident],
            _QUARTIC_PROVENANCE[ident],
            _QUARTIC_DISPLAY.get(ident),
        )
    m = _NODAL_RE.match(ident)
    if m:
        delta, kappa = int(m.group(1)), int(m.group(2))
        return _result_from_affine(
            ident,
            nodal_cuspidal_p(delta, kappa),
            4,
            1,
            "relation: general - 2*delta*D6 - kappa*flex",
        )
    m = _SMOOTH_RE.match(ident)
    if m:
        n = int(m.group(1))
        return _result_from_affine(
            ident, hyperflex_p(n), 4, 1, "relation: general - n*E6"
        )
    m = _POINTS_RE.match(ident)
    if m:
        mults = [int(x) for x in m.group(1).split(",")]
        return points_result(mults)
    if ident.startswith("cubic:"):
        for row in cubic_table(user_locals):
            if row.name == ident:
                return row
        if ident in {"cubic:cuspidal", "cubic:conic+tangent"}:
            raise UsageError(
                f"{ident} needs a user-supplied local class (--kazarian-file)"
            )
        raise UsageError(f"unknown cubic row {ident!r}")
    raise UsageError(f"unknown curve identifier {identifier!r}")


def points_result(multiplicities: Sequence[int]) -> OrbitClassResult:
    """Orbit-class result for a point configuration, in the flipped convention."""
    mults = list(multiplicities)
    d = sum(mults)
    q = pts.points_class(mults)
    proj = pts.projectivize_points(q, d)
    name = "points:" + ",".join(str(m) for m in mults)
    return OrbitClassResult(
        name=name,
        affine=q,
        projective=proj,
        predegree=pts.points_predegree(q, d),
        aut=None,
        provenance="closed formula (sign convention p(-u,-v))",
        d=d,
    )
