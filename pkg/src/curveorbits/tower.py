"""Intersection rings of towers of projective bundles.

A tower is a base polynomial ring (Chern classes of some bundles) plus an
ordered stack of projectivized-bundle levels.  Level ``P(E)`` of rank ``n``
contributes a degree-1 hyperplane symbol ``H`` and the monic Leray relation

    H^n + c1(E) H^(n-1) + ... + cn(E) = 0,

which is used as a rewrite rule.  Normal form caps every hyperplane exponent
below its level's rank; fiber integration reads off the coefficient of the
top hyperplane power, which is exactly the pushforward down one level.

Towers are immutable once built.  Reduction tables (normal forms of high
hyperplane powers) are memoized per tower behind a lock, so towers can be
shared freely between threads.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .poly import ConsistencyError, Poly, Symbols, UsageError


@dataclass(frozen=True)
class TowerLevel:
    """One projectivized bundle: hyperplane symbol plus the bundle's Chern data.

    ``chern[i]`` is c_i of the projectivized bundle (c_0 = 1), expressed in
    the normal form of the tower below this level.
    """

    hyperplane: str
    rank: int
    chern: tuple[Poly, ...]

    def relation(self, table: Symbols) -> Poly:
        h = table.var(self.hyperplane)
        rel = table.zero()
        for i, c in enumerate(self.chern):
            rel = rel + c.map_to(table) * h ** (self.rank - i)
        return rel


class RingTower:
    """Base ring plus an ordered list of projective-bundle levels."""

    def __init__(self, base_names: Sequence[str], base_degrees: Sequence[int] | None = None):
        self.base = Symbols(base_names, base_degrees)
        self.table = self.base
        self.levels: tuple[TowerLevel, ...] = ()
        self._redpow: dict[int, list[Poly]] = {}
        self._lock = threading.Lock()

    @classmethod
    def _build(cls, base: Symbols, table: Symbols, levels: tuple[TowerLevel, ...]) -> "RingTower":
        t = cls.__new__(cls)
        t.base = base
        t.table = table
        t.levels = levels
        t._redpow = {}
        t._lock = threading.Lock()
        return t

    def extend(self, chern: Sequence[Poly], hyperplane: str, rank: int | None = None) -> "RingTower":
        """Append a level P(E) given E's Chern classes c_0..c_rank.

        The Chern classes must already be in this tower's normal form.
        Returns a new tower; self is unchanged.
        """
        chern = list(chern)
        if not chern or chern[0] != 1:
            raise UsageError("chern list must start with c_0 = 1")
        if rank is None:
            rank = len(chern) - 1
        if rank < 1:
            raise UsageError("rank must be >= 1")
        while len(chern) <= rank:
            chern.append(self.table.zero())
        lifted = [c.map_to(self.table) if c.table != self.table else c for c in chern]
        for c in lifted:
            if self.normal_form(c) != c:
                raise UsageError("bundle Chern classes must be in tower normal form")
        new_table = Symbols(
            self.table.names + (hyperplane,), self.table.degrees + (1,)
        )
        new_level = TowerLevel(
            hyperplane, rank, tuple(c.map_to(new_table) for c in lifted[: rank + 1])
        )
        old_levels = tuple(
            TowerLevel(l.hyperplane, l.rank, tuple(c.map_to(new_table) for c in l.chern))
            for l in self.levels
        )
        return RingTower._build(self.base, new_table, old_levels + (new_level,))

    # -- normal form -----------------------------------------------------

    def _reduced_powers(self, level_idx: int, upto: int) -> list[Poly]:
        level = self.levels[level_idx]
        n = level.rank
        h_idx = self.table.index(level.hyperplane)
        with self._lock:
            cache = self._redpow.setdefault(level_idx, [])
            if not cache:
                for k in range(n):
                    e = [0] * len(self.table)
                    e[h_idx] = k
                    cache.append(Poly(self.table, {tuple(e): Fraction(1)}))
                rho = self.table.zero()
                for i in range(1, n + 1):
                    e = [0] * len(self.table)
                    e[h_idx] = n - i
                    rho = rho - level.chern[i] * Poly(self.table, {tuple(e): Fraction(1)})
                cache.append(rho)
            while len(cache) <= upto:
                nxt = self._mul_h_reduce(cache[-1], h_idx, n, cache[n])
                cache.append(nxt)
            return cache

    def _mul_h_reduce(self, p: Poly, h_idx: int, n: int, rho: Poly) -> Poly:
        """p * H reduced so the exponent of H stays below n."""
        keep: dict = {}
        overflow = self.table.zero()
        for exps, coeff in p.terms.items():
            e = list(exps)
            e[h_idx] += 1
            if e[h_idx] < n:
                keep[tuple(e)] = coeff
            else:
                e[h_idx] = 0
                overflow = overflow + Poly(self.table, {tuple(e): coeff}) * rho
        return Poly(self.table, keep) + overflow

    def normal_form(self, p: Poly) -> Poly:
        """Unique representative with every hyperplane exponent < its rank."""
        if p.table != self.table:
            p = p.map_to(self.table)
        for level_idx in range(len(self.levels) - 1, -1, -1):
            level = self.levels[level_idx]
            h_idx = self.table.index(level.hyperplane)
            maxe = p.max_exponent(level.hyperplane)
            if maxe < level.rank:
                continue
            powers = self._reduced_powers(level_idx, maxe)
            keep: dict = {}
            reduced = self.table.zero()
            for exps, coeff in p.terms.items():
                e = exps[h_idx]
                if e < level.rank:
                    keep[exps] = coeff
                else:
                    rest = list(exps)
                    rest[h_idx] = 0
                    reduced = reduced + Poly(self.table, {tuple(rest): coeff}) * powers[e]
            p = Poly(self.table, keep) + reduced
        return p

    # -- pushforwards ------------------------------------------------------

    def fiber_integrate(self, p: Poly) -> Poly:
        """Pushforward along the top level: coefficient of H_top^(rank-1)."""
        if not self.levels:
            raise UsageError("tower has no levels to integrate")
        p = self.normal_form(p)
        top = self.levels[-1]
        return p.coefficient(top.hyperplane, top.rank - 1)

    def drop_top(self) -> "RingTower":
        if not self.levels:
            raise UsageError("tower has no levels")
        return RingTower._build(self.base, self.table, self.levels[:-1])

    def integrate_to_base(self, p: Poly) -> Poly:
        """Repeated normal_form + fiber_integrate through every level."""
        tower = self
        if p.table != self.table:
            p = p.map_to(self.table)
        while tower.levels:
            p = tower.fiber_integrate(p)
            tower = tower.drop_top()
        for level in self.levels:
            if p.max_exponent(level.hyperplane):
                raise ConsistencyError("hyperplane symbol survived integration")
        return p.map_to(self.base)

    # -- introspection -----------------------------------------------------

    def describe(self) -> dict:
        """JSON-serializable tower description (names, ranks, relations)."""
        return {
            "base": {
                "symbols": list(self.base.names),
                "degrees": list(self.base.degrees),
            },
            "levels": [
                {
                    "hyperplane": l.hyperplane,
                    "rank": l.rank,
                    "relation": l.relation(self.table).to_json_dict(),
                }
                for l in self.levels
            ],
        }
