"""Universal singularity classes for curves on surface fibrations.

A local class is a polynomial in c1, c2 (Chern classes of the relative
tangent bundle of the surface fibration) and u = c1 of the line bundle
cutting the curves.  Pushing it down the universal family P(V) -> B counts
members of a degree-d family with the prescribed singularity, as a polynomial
in the Chern classes of V.

The built-in classes are the A6, D6 and E6 ones; further local classes
(A2, A3, D4, ...) can be loaded from a user JSON file.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .bundles import CHERN_TABLE, BundleClass, line_bundle, ses_complement, twist_line
from .poly import Poly, Symbols, UsageError
from .tower import RingTower

# c1, c2 are of the relative tangent bundle; u is c1 of the line bundle
LOCAL_TABLE = Symbols(("c1", "c2", "u"), (1, 2, 1))


@dataclass(frozen=True)
class KazarianLocalClass:
    """A named universal local class, homogeneous and divisible by u."""

    name: str
    polynomial: Poly

    def __post_init__(self):
        p = self.polynomial
        if p.table != LOCAL_TABLE:
            raise UsageError("local class must live over (c1, c2, u)")
        if not p.is_homogeneous():
            raise UsageError(f"local class {self.name} is not homogeneous")
        if not p.substitute({"u": 0}).is_zero():
            raise UsageError(f"local class {self.name} does not vanish at u = 0")


def _local(name: str, build) -> KazarianLocalClass:
    c1, c2, u = (LOCAL_TABLE.var(s) for s in ("c1", "c2", "u"))
    return KazarianLocalClass(name, build(c1, c2, u))


LOCAL_A6 = _local(
    "A6",
    lambda c1, c2, u: u
    * (-c1 + u)
    * (c2 - c1 * u + u**2)
    * (
        720 * c1**4
        - 1248 * c1**2 * c2
        + 156 * c2**2
        - 1500 * c1**3 * u
        + 1514 * c1 * c2 * u
        + 1236 * c1**2 * u**2
        - 485 * c2 * u**2
        - 487 * c1 * u**3
        + 79 * u**4
    ),
)

LOCAL_D6 = _local(
    "D6",
    lambda c1, c2, u: 2
    * u
    * (-c1 + u)
    * (4 * c2 - 2 * c1 * u + u**2)
    * (c2 - c1 * u + u**2)
    * (12 * c1**2 - 6 * c2 - 13 * c1 * u + 4 * u**2),
)

LOCAL_E6 = _local(
    "E6",
    lambda c1, c2, u: 3
    * u
    * (-c1 + u)
    * (2 * c1**2 + c2 - 3 * c1 * u + u**2)
    * (4 * c2 - 2 * c1 * u + u**2)
    * (c2 - c1 * u + u**2),
)

# Euler class of the twisted 1-jet bundle: the locus of singular members.
LOCAL_A1 = _local("A1", lambda c1, c2, u: u * (c2 - c1 * u + u**2))

BUILTIN_LOCALS = {lc.name: lc for lc in (LOCAL_A6, LOCAL_D6, LOCAL_E6, LOCAL_A1)}


def universal_curve_tower() -> RingTower:
    """P(V) over the classifying base, V the rank-3 bundle with classes c1..c3."""
    tower = RingTower(("c1", "c2", "c3"), (1, 2, 3))
    table = tower.table
    chern = [table.one()] + [table.var(f"c{i}") for i in (1, 2, 3)]
    return tower.extend(chern, "h")


def relative_tangent_chern(tower: RingTower) -> BundleClass:
    """c(T) of P(V) -> B from the Euler sequence: twist of V/O(-1) by O(1)."""
    table = tower.table
    h = table.var("h")
    v_total = table.one() + table.var("c1") + table.var("c2") + table.var("c3")
    V = BundleClass(3, v_total, None)
    quotient = ses_complement(V, line_bundle(-h), normalize=tower.normal_form)
    return twist_line(quotient, h)


def kazarian_pushforward(local: KazarianLocalClass, d: int) -> Poly:
    """Push the local class down the universal degree-d family; lands in c1..c3."""
    if d < 1:
        raise UsageError("degree must be >= 1")
    tower = universal_curve_tower()
    table = tower.table
    tangent = relative_tangent_chern(tower)
    work = Symbols(("tc1", "tc2", "u") + table.names, (1, 2, 1) + table.degrees)
    expr = local.polynomial.map_to(work, rename={"c1": "tc1", "c2": "tc2"})
    bindings = {
        "tc1": tangent.chern_piece(1).map_to(work),
        "tc2": tangent.chern_piece(2).map_to(work),
        "u": d * work.var("h"),
    }
    substituted = expr.substitute(bindings).map_to(table)
    return tower.integrate_to_base(substituted).map_to(CHERN_TABLE)


def load_local_classes(path: str | Path) -> dict[str, KazarianLocalClass]:
    """Read user-supplied local classes: a JSON list of {name, polynomial}.

    The polynomial is in canonical form over symbols ["c1", "c2", "u"].
    """
    data = json.loads(Path(path).read_text())
    if not isinstance(data, list):
        raise UsageError("kazarian file must be a JSON list of {name, polynomial}")
    out = {}
    for entry in data:
        name = entry["name"]
        poly = Poly.from_json_dict(entry["polynomial"], LOCAL_TABLE)
        out[name] = KazarianLocalClass(name, poly)
    return out
