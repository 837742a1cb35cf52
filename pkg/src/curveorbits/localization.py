"""Atiyah-Bott fixed-point integration with exact rational-function bookkeeping.

Integrals are sums over torus-fixed loci of (restricted class)/(Euler class
of the normal bundle).  Every locus here is either an isolated point or a P^1
carrying a nilpotent point class z (z^2 = 0); a P^1 locus contributes the
z-coefficient of its integrand.

Contributions are accumulated over a common denominator assembled from the
Euler classes' linear factors (no polynomial GCDs); the final clearing
division must be exact, which doubles as a consistency check on the
fixed-point data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .poly import ConsistencyError, Poly, Symbols, UsageError, divide_exact

UV = Symbols(("u", "v"))
UVZ = Symbols(("u", "v", "z"))


def _truncate_z(p: Poly) -> Poly:
    zi = p.table.index("z")
    return Poly(p.table, {e: c for e, c in p.terms.items() if e[zi] < 2})


def _split_z(p: Poly) -> tuple[Poly, Poly]:
    """p = a + b*z in the P^1 ring; returns (a, b) over the point ring."""
    a = p.coefficient("z", 0).map_to(UV)
    b = p.coefficient("z", 1).map_to(UV)
    return a, b


@dataclass(frozen=True)
class FixedLocus:
    """One torus-fixed component with its restriction map and normal Euler data.

    ``restrictions`` sends each ambient generator to its value in the locus's
    own ring; ``euler_factors`` are the degree-1 factors of the Euler class of
    the normal bundle.
    """

    name: str
    ring: Symbols
    restrictions: Mapping[str, Poly]
    euler_factors: tuple[Poly, ...]
    p1: bool = False

    def restrict(self, cls: Poly) -> Poly:
        """Apply the restriction ring homomorphism to an ambient class.

        Equivariant parameters already present in the locus ring (u, v) pass
        through unchanged; every other symbol needs a declared restriction.
        """
        out = self.ring.zero()
        powers: dict[str, list[Poly]] = {}
        for exps, coeff in cls.terms.items():
            term = self.ring.const(coeff)
            for name, e in zip(cls.table.names, exps):
                if e == 0:
                    continue
                term = term * self._power(powers, name, e)
                if self.p1:
                    term = _truncate_z(term)
            out = out + term
        return _truncate_z(out) if self.p1 else out

    def _value(self, name: str) -> Poly:
        if name in self.restrictions:
            return self.restrictions[name]
        if name in self.ring.names:
            return self.ring.var(name)
        raise UsageError(f"no restriction declared for {name!r} on {self.name}")

    def _power(self, cache, name, e):
        ps = cache.setdefault(name, [self.ring.one(), self._value(name)])
        while len(ps) <= e:
            nxt = ps[-1] * ps[1]
            if self.p1:
                nxt = _truncate_z(nxt)
            ps.append(nxt)
        return ps[e]

    def contribution(self, restricted: Poly) -> tuple[Poly, list[Poly]]:
        """(numerator, denominator factors) of this locus's summand over (u, v)."""
        if not self.p1:
            return restricted.map_to(UV), [f.map_to(UV) for f in self.euler_factors]
        r0, r1 = _split_z(restricted)
        parts = [_split_z(f) for f in self.euler_factors]
        prod_a = UV.one()
        for a, _ in parts:
            prod_a = prod_a * a
        num = r1 * prod_a
        for i, (_, b) in enumerate(parts):
            rest = UV.one()
            for j, (a, _) in enumerate(parts):
                if j != i:
                    rest = rest * a
            num = num - r0 * b * rest
        den = []
        for a, _ in parts:
            den.append(a)
            den.append(a)
        return num, den


class RationalSum:
    """Sum of num/prod(linear factors) over an incrementally-built lcm denominator."""

    def __init__(self, table: Symbols):
        self.table = table
        self.num = table.zero()
        self.scalar = Fraction(1)  # overall denominator scalar
        self.factors: dict = {}  # canonical key -> [Poly, multiplicity]

    @staticmethod
    def _canonical(f: Poly) -> tuple[Poly, Fraction]:
        if f.is_zero():
            raise UsageError("denominator factor is identically zero")
        lead_e, lead_c = f.sorted_terms()[0]
        return f / lead_c, lead_c

    def add(self, num: Poly, factors: Sequence[Poly]):
        from collections import Counter

        scale = Fraction(1)
        counts: Counter = Counter()
        canon: dict = {}
        for f in factors:
            fn, c = self._canonical(f)
            scale *= c
            key = fn.key()
            counts[key] += 1
            canon[key] = fn
        # extend the running lcm
        missing_in_self = []
        for key, mult in counts.items():
            have = self.factors.get(key, [canon[key], 0])[1]
            if mult > have:
                missing_in_self.extend([canon[key]] * (mult - have))
                self.factors[key] = [canon[key], mult]
        for f in missing_in_self:
            self.num = self.num * f
        # multiply incoming numerator by lcm/own-denominator
        complement = self.table.one()
        for key, (f, mult) in self.factors.items():
            extra = mult - counts.get(key, 0)
            for _ in range(extra):
                complement = complement * f
        self.num = self.num + (num * complement) * (self.scalar / scale)

    def finish(self) -> Poly:
        """Clear the denominator; raises ConsistencyError if not a polynomial."""
        out = self.num
        for key, (f, mult) in self.factors.items():
            for _ in range(mult):
                out = divide_exact(out, f)
        return out * (Fraction(1) / self.scalar)


def ab_integrate(loci: Sequence[FixedLocus], cls: Poly) -> Poly:
    """Sum restriction/Euler over the fixed loci; result must clear exactly."""
    acc = RationalSum(UV)
    for locus in loci:
        restricted = locus.restrict(cls)
        num, den = locus.contribution(restricted)
        acc.add(num, den)
    return acc.finish()


# -- points on P^1: resolved orbit map fixed-point data ----------------------


def points_ambient_table(n: int) -> Symbols:
    return Symbols(("H",) + tuple(f"E{i+1}" for i in range(n)))


def p1_points_fixed_loci(multiplicities: Sequence[int]) -> list[FixedLocus]:
    """Fixed loci of the blown-up space resolving the orbit map of d points.

    Two P^1 components (proper transforms of the coordinate lines) and 2n
    isolated points over the pairwise intersections with the blown-up lines.
    """
    mults = list(multiplicities)
    n = len(mults)
    if n < 3:
        raise UsageError("need at least 3 distinct points")
    if any(m < 1 for m in mults):
        raise UsageError("multiplicities must be positive")
    u, v, z = (UVZ.var(s) for s in ("u", "v", "z"))
    pu, pv = (UV.var(s) for s in ("u", "v"))
    loci: list[FixedLocus] = []
    for tag, (a, b, pa, pb) in (("C1", (u, v, pu, pv)), ("C2", (v, u, pv, pu))):
        restrictions = {"H": z - a}
        for i in range(n):
            restrictions[f"E{i+1}"] = z
        loci.append(
            FixedLocus(
                name=f"{tag}~",
                ring=UVZ,
                restrictions=restrictions,
                euler_factors=(z + (b - a), (1 - n) * z + (b - a)),
                p1=True,
            )
        )
        for i in range(n):
            restrictions_pt = {"H": -pa}
            for j in range(n):
                restrictions_pt[f"E{j+1}"] = (pb - pa) if j == i else UV.zero()
            loci.append(
                FixedLocus(
                    name=f"pt:{tag}xR{i+1}",
                    ring=UV,
                    restrictions=restrictions_pt,
                    euler_factors=(pb - pa, pb - pa, pa - pb),
                    p1=False,
                )
            )
    return loci


def points_pullback_class(multiplicities: Sequence[int]) -> Poly:
    """Pullback of the target hyperplane class: d*H - sum(m_i * E_i)."""
    n = len(multiplicities)
    d = sum(multiplicities)
    table = points_ambient_table(n)
    out = d * table.var("H")
    for i, m in enumerate(multiplicities):
        out = out - m * table.var(f"E{i+1}")
    return out


def phi_coefficients(d: int) -> list[Poly]:
    """Coefficients of phi(X) = (G(X) - G(0))/X with G(X) = prod(X + iu + (d-i)v).

    The constant term of G cancels exactly, so phi is the polynomial
    sum_k G_{k+1} X^k; returns [G_1, G_2, ..., G_{d+1}].
    """
    u, v = UV.var("u"), UV.var("v")
    g = [UV.one()]  # coefficients of G in X, ascending
    for i in range(d + 1):
        root = i * u + (d - i) * v
        nxt = [UV.zero()] * (len(g) + 1)
        for k, c in enumerate(g):
            nxt[k] = nxt[k] + c * root
            nxt[k + 1] = nxt[k + 1] + c
        g = nxt
    return g[1:]


def _phi_at(phi: Sequence[Poly], value: Poly, p1: bool) -> Poly:
    """Evaluate phi at a ring element (Horner), truncating z^2 when needed."""
    table = value.table
    acc = phi[-1].map_to(table)
    for coeff in reversed(phi[:-1]):
        acc = acc * value
        if p1:
            acc = _truncate_z(acc)
        acc = acc + coeff.map_to(table)
    return acc


def points_orbit_localization(multiplicities: Sequence[int]) -> Poly:
    """p_X(-u, -v) for a point configuration, via Atiyah-Bott summation.

    Restriction is a ring homomorphism, so phi is composed with the restricted
    pullback class locus by locus, exactly as in the fixed-point evaluation of
    the resolved orbit map.
    """
    mults = list(multiplicities)
    d = sum(mults)
    phi = phi_coefficients(d)
    pullback = points_pullback_class(mults)
    acc = RationalSum(UV)
    for locus in p1_points_fixed_loci(mults):
        value = locus.restrict(pullback)
        restricted = _phi_at(phi, value, locus.p1)
        num, den = locus.contribution(restricted)
        acc.add(num, den)
    return acc.finish()


# -- Grassmannian Chern numbers ----------------------------------------------


def grassmann_chern_numbers(
    k: int, n: int, monomials: Sequence[Sequence[int]]
) -> list[Fraction]:
    """Integrals of monomials in c_i of the rank-k tautological subbundle on G(k, n).

    Fixed points are k-subsets of n distinct torus weights; the Euler class is
    the product of weight differences.  Weights are specialized to 0..n-1,
    which keeps all differences nonzero.
    """
    dim = k * (n - k)
    weights = [Fraction(i) for i in range(n)]
    results = []
    fixed = list(combinations(range(n), k))
    for mono in monomials:
        mono = list(mono)
        if len(mono) != k:
            raise UsageError(f"monomial needs {k} exponents (for c_1..c_{k})")
        deg = sum((i + 1) * e for i, e in enumerate(mono))
        if deg != dim:
            raise UsageError(
                f"monomial degree {deg} != dim G({k},{n}) = {dim}"
            )
        total = Fraction(0)
        for subset in fixed:
            sub_w = [weights[i] for i in subset]
            cs = _elementary_values(sub_w)
            value = Fraction(1)
            for i, e in enumerate(mono):
                value *= cs[i + 1] ** e
            euler = Fraction(1)
            outside = [weights[j] for j in range(n) if j not in subset]
            for wi in sub_w:
                for wj in outside:
                    euler *= wj - wi
            total += value / euler
        if total.denominator != 1:
            raise ConsistencyError("Grassmannian integral is not an integer")
        results.append(total)
    return results


def _elementary_values(ws: Sequence[Fraction]) -> list[Fraction]:
    es = [Fraction(1)] + [Fraction(0)] * len(ws)
    for w in ws:
        for i in range(len(ws), 0, -1):
            es[i] += es[i - 1] * w
    return es


def pieri_chern_integral(k: int, n: int, monomial: Sequence[int]) -> Fraction:
    """Same integrals via Schubert calculus (dual Pieri rule), as an independent oracle.

    c_i of the tautological subbundle is (-1)^i sigma_{1^i}; multiply out in
    the basis of partitions inside the k x (n-k) box and read the coefficient
    of the full box.
    """
    cols = n - k
    deg = sum((i + 1) * e for i, e in enumerate(monomial))
    if deg != k * cols:
        raise UsageError("monomial degree must equal dim G(k,n)")
    classes: dict[tuple[int, ...], int] = {(0,) * k: 1}
    for i, e in enumerate(monomial):
        for _ in range(e):
            classes = _mult_vertical_strip(classes, i + 1, k, cols)
    full = (cols,) * k
    sign = (-1) ** deg
    return Fraction(sign * classes.get(full, 0))


def _mult_vertical_strip(
    classes: dict[tuple[int, ...], int], size: int, rows: int, cols: int
) -> dict[tuple[int, ...], int]:
    out: dict[tuple[int, ...], int] = {}
    for lam, coeff in classes.items():
        for add in combinations(range(rows), size):
            mu = list(lam)
            for r in add:
                mu[r] += 1
            if any(mu[r] > cols for r in add):
                continue
            if any(mu[r] > mu[r - 1] for r in range(1, rows)):
                continue
            key = tuple(mu)
            out[key] = out.get(key, 0) + coeff
    return {lam: c for lam, c in out.items() if c}
