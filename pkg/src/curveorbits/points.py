"""Closed-form orbit classes of point configurations on a line.

Building the configuration space from duals flips the natural signs, so
``points_class`` returns q(u, v) = p_X(-u, -v).  ``flip_sign`` recovers
p_X(u, v) and ``projectivize_points`` produces the projective class in that
same flipped convention (substitute u -> u + H/d, v -> v + H/d).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .localization import UV, RationalSum
from .poly import Poly, Symbols, UsageError, divide_exact

UVH = Symbols(("u", "v", "H"))


def total_product(d: int) -> Poly:
    """prod_{i=0}^{d} (i*u + (d-i)*v)."""
    u, v = UV.var("u"), UV.var("v")
    out = UV.one()
    for i in range(d + 1):
        out = out * (i * u + (d - i) * v)
    return out


def points_class(multiplicities: Sequence[int]) -> Poly:
    """p_X(-u, -v) for points with the given multiplicities (n >= 3).

    The bracket sum collapses over a common denominator; its numerator must
    be divisible by (u - v)^2 and everything else must clear exactly, both of
    which are asserted.
    """
    mults = list(multiplicities)
    n = len(mults)
    if n < 3:
        raise UsageError("need at least 3 points")
    if any(m < 1 for m in mults):
        raise UsageError("multiplicities must be positive")
    d = sum(mults)
    u, v = UV.var("u"), UV.var("v")
    bracket = RationalSum(UV)
    bracket.add(UV.const(Fraction(n - 2, d)), [u, v])
    for m in mults:
        bracket.add(
            UV.const(2 * m - d),
            [m * v + (d - m) * u, m * u + (d - m) * v],
        )
    umv = u - v
    reduced = divide_exact(divide_exact(bracket.num, umv), umv)
    out = total_product(d) * reduced
    for _key, (factor, mult) in bracket.factors.items():
        for _ in range(mult):
            out = divide_exact(out, factor)
    return out * (Fraction(1) / bracket.scalar)


def points_class_distinct(n: int) -> Poly:
    """Projective class for n distinct points: n(n-1)(n-2) prod (H + ju + (n-j)v)."""
    if n < 3:
        raise UsageError("need at least 3 points")
    u, v, H = (UVH.var(s) for s in ("u", "v", "H"))
    out = UVH.const(n * (n - 1) * (n - 2))
    for j in range(2, n - 1):
        out = out * (H + j * u + (n - j) * v)
    return out


def projectivize_points(q: Poly, d: int) -> Poly:
    """Flipped-convention projective class: q(u + H/d, v + H/d)."""
    lifted = q.map_to(UVH)
    H = UVH.var("H")
    return lifted.substitute(
        {"u": UVH.var("u") + H / d, "v": UVH.var("v") + H / d}
    )


def flip_sign(q: Poly) -> Poly:
    """Convert between p_X(-u, -v) and p_X(u, v)."""
    return q.substitute({"u": -q.table.var("u"), "v": -q.table.var("v")})


def points_predegree(q: Poly, d: int) -> Fraction:
    """Coefficient of H^(d-3) in the projective class with u = v = 0."""
    proj = projectivize_points(q, d)
    return proj.coefficient("H", d - 3).evaluate({"u": 0, "v": 0})


def partitions_with_min_parts(d_max: int, min_parts: int = 3) -> list[tuple[int, ...]]:
    """All multiplicity partitions with at least `min_parts` parts and total <= d_max."""
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, cap: int, acc: list[int]):
        if remaining == 0:
            if len(acc) >= min_parts:
                out.append(tuple(acc))
            return
        for m in range(min(cap, remaining), 0, -1):
            acc.append(m)
            rec(remaining - m, m, acc)
            acc.pop()

    for d in range(min_parts, d_max + 1):
        rec(d, d, [])
    return out
