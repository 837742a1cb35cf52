"""Formal Chern-class calculus for vector bundles.

Bundles are rank + total Chern class, optionally with a list of degree-1
Chern roots (splitting-principle style).  Roots are the preferred internal
representation when available; bundles produced by exact-sequence quotients
carry the total Chern class alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
from typing import Callable, Sequence

from .poly import ConsistencyError, Poly, Symbols, UsageError, symmetric_reduce


@dataclass(frozen=True)
class BundleClass:
    """A formal vector bundle: rank, total Chern class, optional Chern roots."""

    rank: int
    chern: Poly
    roots: tuple[Poly, ...] | None = None

    def __post_init__(self):
        if self.roots is not None and len(self.roots) != self.rank:
            raise UsageError("number of roots must equal the rank")

    def chern_piece(self, i: int) -> Poly:
        return self.chern.graded_piece(i)

    def chern_list(self) -> list[Poly]:
        return [self.chern_piece(i) for i in range(self.rank + 1)]

    def c1(self) -> Poly:
        return self.chern_piece(1)


def from_roots(roots: Sequence[Poly]) -> BundleClass:
    roots = tuple(roots)
    if not roots:
        raise UsageError("need at least one root")
    table = roots[0].table
    total = table.one()
    for r in roots:
        total = total * (table.one() + r)
    return BundleClass(len(roots), total, roots)


def line_bundle(c1: Poly) -> BundleClass:
    return from_roots([c1])


def trivial_bundle(table: Symbols, rank: int) -> BundleClass:
    return BundleClass(rank, table.one(), tuple(table.zero() for _ in range(rank)))


def sym_power(b: BundleClass, d: int) -> BundleClass:
    """Sym^d via the splitting principle: roots are all degree-d sums."""
    if d < 1:
        raise UsageError("sym power needs d >= 1")
    if b.roots is None:
        raise UsageError("sym_power needs Chern roots")
    table = b.chern.table
    new_roots = []
    for combo in combinations_with_replacement(b.roots, d):
        r = table.zero()
        for x in combo:
            r = r + x
        new_roots.append(r)
    return from_roots(new_roots)


def dual(b: BundleClass) -> BundleClass:
    if b.roots is not None:
        return from_roots([-r for r in b.roots])
    table = b.chern.table
    total = table.zero()
    for i in range(b.rank + 1):
        total = total + b.chern_piece(i) * ((-1) ** i)
    return BundleClass(b.rank, total, None)


def twist_line(b: BundleClass, ell: Poly) -> BundleClass:
    """Tensor with a line bundle of first Chern class ell."""
    if b.roots is not None:
        return from_roots([r + ell for r in b.roots])
    table = b.chern.table
    r = b.rank
    total = table.one()
    for k in range(1, r + 1):
        piece = table.zero()
        for j in range(0, k + 1):
            piece = piece + comb(r - j, k - j) * b.chern_piece(j) * ell ** (k - j)
        total = total + piece
    return BundleClass(r, total, None)


def direct_sum(a: BundleClass, b: BundleClass) -> BundleClass:
    roots = None
    if a.roots is not None and b.roots is not None:
        roots = a.roots + b.roots
    return BundleClass(a.rank + b.rank, a.chern * b.chern, roots)


def ses_complement(
    total: BundleClass,
    sub: BundleClass,
    normalize: Callable[[Poly], Poly] | None = None,
) -> BundleClass:
    """Quotient bundle of 0 -> sub -> total -> Q -> 0 by exact Chern division.

    The quotient's total Chern class is c(total)/c(sub) as a truncated power
    series.  Graded pieces above the quotient rank must vanish (after the
    optional ``normalize`` hook, e.g. a tower normal form, when working
    modulo Leray relations); otherwise the input data is inconsistent.
    """
    if sub.rank > total.rank:
        raise UsageError("sub rank cannot exceed total rank")
    table = total.chern.table
    q_rank = total.rank - sub.rank
    check_to = total.rank
    # invert c(sub) as a series: inv_k = -(sum_{j>=1} c_j(sub) * inv_{k-j})
    inv = [table.one()]
    for k in range(1, check_to + 1):
        piece = table.zero()
        for j in range(1, min(k, sub.rank) + 1):
            piece = piece - sub.chern_piece(j) * inv[k - j]
        inv.append(piece)
    quotient = table.zero()
    for k in range(0, check_to + 1):
        piece = table.zero()
        for j in range(0, k + 1):
            piece = piece + total.chern_piece(j) * inv[k - j]
        if k <= q_rank:
            quotient = quotient + piece
        else:
            if normalize is not None:
                piece = normalize(piece)
            if not piece.is_zero():
                raise ConsistencyError(
                    f"exact-sequence division leaves degree-{k} remainder"
                )
    return BundleClass(q_rank, quotient, None)


def jet_bundle(line_c1: Poly, order: int, rel_cotangent_c1: Poly) -> BundleClass:
    """Relative jets of a line bundle along a curve fibration.

    Filtration has graded pieces L, L*Omega, ..., L*Omega^(order-1), so the
    roots are line_c1 + i * rel_cotangent_c1 for i = 0..order-1.
    """
    if order < 1:
        raise UsageError("jet order must be >= 1")
    return from_roots([line_c1 + i * rel_cotangent_c1 for i in range(order)])


# -- projectivization substitution ------------------------------------------


def roots_table(n_roots: int, extra: Sequence[tuple[str, int]] = ()) -> Symbols:
    """Working table of Chern roots u, v, w[, ...] plus extra symbols."""
    names = ["u", "v", "w"][:n_roots]
    degrees = [1] * n_roots
    for name, deg in extra:
        names.append(name)
        degrees.append(deg)
    return Symbols(names, degrees)


CHERN_TABLE = Symbols(("c1", "c2", "c3"), (1, 2, 3))
CHERN_H_TABLE = Symbols(("c1", "c2", "c3", "H"), (1, 2, 3, 1))


def to_roots(p: Poly, n_roots: int = 3, extra: Sequence[tuple[str, int]] = ()) -> Poly:
    """Rewrite a polynomial in c1..cn as a symmetric polynomial in the roots."""
    rt = roots_table(n_roots, extra)
    root_vars = [rt.var(n) for n in rt.names[:n_roots]]
    from itertools import combinations

    bindings = {}
    for i in range(1, n_roots + 1):
        e = rt.zero()
        for combo in combinations(root_vars, i):
            m = rt.one()
            for r in combo:
                m = m * r
            e = e + m
        bindings[f"c{i}"] = e
    mixed_names = [f"c{i}" for i in range(1, n_roots + 1)] + list(rt.names)
    mixed_degs = list(range(1, n_roots + 1)) + list(rt.degrees)
    mixed = Symbols(mixed_names, mixed_degs)
    lifted = p.map_to(mixed)
    bound = lifted.substitute({k: v.map_to(mixed) for k, v in bindings.items()})
    return bound.map_to(rt)


def from_roots_symmetric(p: Poly, n_roots: int = 3, target: Symbols | None = None) -> Poly:
    """Inverse of to_roots: reduce a symmetric root polynomial back to c's."""
    names = ["u", "v", "w"][:n_roots]
    es = [f"c{i}" for i in range(1, n_roots + 1)]
    if target is None:
        extra = [
            (n, d)
            for n, d in zip(p.table.names, p.table.degrees)
            if n not in names
        ]
        target = Symbols(
            es + [n for n, _ in extra], list(range(1, n_roots + 1)) + [d for _, d in extra]
        )
    return symmetric_reduce(p, names, es, target)


def projectivize(p: Poly, d: int, n_roots: int = 3) -> Poly:
    """Affine class in c's -> projective class in c's and H.

    Substitutes each Chern root u_i -> u_i - H/d and re-expresses the
    (still symmetric) result in Chern classes.
    """
    if d == 0:
        raise UsageError("d must be nonzero")
    rp = to_roots(p, n_roots, extra=(("H", 1),))
    rt = rp.table
    H = rt.var("H")
    shift = {name: rt.var(name) - H / d for name in rt.names[:n_roots]}
    shifted = rp.substitute(shift)
    target_names = [f"c{i}" for i in range(1, n_roots + 1)] + ["H"]
    target = Symbols(target_names, list(range(1, n_roots + 1)) + [1])
    return from_roots_symmetric(shifted, n_roots, target)


def affinize(p: Poly) -> Poly:
    """Projective class -> affine class: set H to zero and drop the symbol."""
    if "H" not in p.table.names:
        return p
    out = p.substitute({"H": 0})
    names = [n for n in p.table.names if n != "H"]
    degrees = [d for n, d in zip(p.table.names, p.table.degrees) if n != "H"]
    return out.map_to(Symbols(names, degrees))


def predegree(p: Poly, d: int, n_roots: int = 3) -> Fraction:
    """Coefficient of H^(codim) in the projectivized class with all c_i = 0.

    For a homogeneous affine class the coefficient is already a constant.
    """
    proj = projectivize(p, d, n_roots)
    coeff = proj.coefficient("H", p.degree())
    for name in coeff.table.names:
        if name != "H" and coeff.max_exponent(name):
            raise ConsistencyError("predegree coefficient is not constant")
    return coeff.constant()


def complete_homogeneous(roots: Sequence[Poly], k: int) -> Poly:
    """Brute-force h_k of the given roots (oracle for Segre pushforwards)."""
    table = roots[0].table
    if k == 0:
        return table.one()
    out = table.zero()
    for combo in combinations_with_replacement(roots, k):
        m = table.one()
        for r in combo:
            m = m * r
        out = out + m
    return out
