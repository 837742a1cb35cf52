"""Exact sparse multivariate polynomial arithmetic over the rationals.

A polynomial lives over a fixed, ordered symbol table.  Each symbol carries a
declared degree (so c2 can count as degree 2 while hyperplane classes count as
degree 1), and terms map exponent tuples to nonzero Fractions.  Everything is
exact: no floats anywhere, and identical polynomials always serialize
identically (graded-lex term order).

The zero polynomial is the empty term dict.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

Exponents = tuple[int, ...]


class UsageError(ValueError):
    """Raised when a caller violates an operation's preconditions."""


class ConsistencyError(ArithmeticError):
    """Raised when an internal exactness check fails (wrong input data)."""


class Symbols:
    """Ordered, immutable symbol table with per-symbol degrees.

    Two tables are interchangeable iff their names and degrees agree.
    """

    __slots__ = ("names", "degrees", "_index")

    def __init__(self, names: Sequence[str], degrees: Sequence[int] | None = None):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise UsageError(f"duplicate symbol names in {names}")
        if degrees is None:
            degrees = tuple(1 for _ in names)
        else:
            degrees = tuple(int(d) for d in degrees)
            if len(degrees) != len(names):
                raise UsageError("degrees must match names")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "degrees", degrees)
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    def __setattr__(self, *args):
        raise AttributeError("Symbols is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Symbols)
            and self.names == other.names
            and self.degrees == other.degrees
        )

    def __hash__(self):
        return hash((self.names, self.degrees))

    def __len__(self):
        return len(self.names)

    def __repr__(self):
        return f"Symbols({list(self.names)})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UsageError(f"unknown symbol {name!r} (table: {list(self.names)})")

    def weight(self, exps: Exponents) -> int:
        """Weighted total degree of an exponent tuple."""
        return sum(e * d for e, d in zip(exps, self.degrees))

    def var(self, name: str) -> "Poly":
        exps = [0] * len(self.names)
        exps[self.index(name)] = 1
        return Poly(self, {tuple(exps): Fraction(1)})

    def const(self, value) -> "Poly":
        coeff = Fraction(value)
        if coeff == 0:
            return Poly(self, {})
        return Poly(self, {(0,) * len(self.names): coeff})

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.const(1)


def _term_sort_key(table: Symbols, exps: Exponents):
    # graded-lex, largest first: weighted degree, then exponents in symbol order
    return (table.weight(exps), exps)


class Poly:
    """Sparse polynomial: {exponent tuple -> nonzero Fraction} over a Symbols table.

    Instances are treated as immutable values; all operations return new
    polynomials, so sharing across threads is safe.
    """

    __slots__ = ("table", "terms")

    def __init__(self, table: Symbols, terms: Mapping[Exponents, Fraction]):
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "terms", {e: c for e, c in terms.items() if c != 0})

    def __setattr__(self, *args):
        raise AttributeError("Poly is immutable")

    # -- basics ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Weighted total degree (0 for the zero polynomial)."""
        if not self.terms:
            return 0
        return max(self.table.weight(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {self.table.weight(e) for e in self.terms}
        return len(degs) <= 1

    def graded_piece(self, k: int) -> "Poly":
        """Sum of terms of weighted degree exactly k."""
        return Poly(
            self.table,
            {e: c for e, c in self.terms.items() if self.table.weight(e) == k},
        )

    def constant(self) -> Fraction:
        return self.terms.get((0,) * len(self.table), Fraction(0))

    def key(self):
        """Hashable canonical form (used for factor bookkeeping)."""
        return tuple(sorted(self.terms.items()))

    def _check_table(self, other: "Poly"):
        if self.table != other.table:
            raise UsageError(
                f"symbol-table mismatch: {self.table!r} vs {other.table!r}"
            )

    # -- ring operations ------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = self.table.const(other)
        self._check_table(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Poly(self.table, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.table, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = self.table.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return self.table.const(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            coeff = Fraction(other)
            if coeff == 0:
                return self.table.zero()
            return Poly(self.table, {e: c * coeff for e, c in self.terms.items()})
        self._check_table(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[Exponents, Fraction] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(e)
                if s is None:
                    out[e] = ca * cb
                else:
                    s = s + ca * cb
                    if s:
                        out[e] = s
                    else:
                        del out[e]
        return Poly(self.table, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise UsageError("pow exponent must be >= 0")
        result = self.table.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __truediv__(self, scalar):
        coeff = Fraction(scalar)
        if coeff == 0:
            raise ZeroDivisionError("division of Poly by zero scalar")
        return Poly(self.table, {e: c / coeff for e, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.table == other.table and self.terms == other.terms
        if not self.terms:
            return Fraction(other) == 0
        return (
            len(self.terms) == 1
            and self.constant() == Fraction(other)
        )

    def __hash__(self):
        return hash((self.table, self.key()))

    # -- structural operations -------------------------------------------

    def substitute(self, bindings: Mapping[str, "Poly | Fraction | int"]) -> "Poly":
        """Simultaneous exact substitution; unbound symbols pass through."""
        table = self.table
        idx_vals: dict[int, Poly] = {}
        for name, val in bindings.items():
            i = table.index(name)
            if not isinstance(val, Poly):
                val = table.const(val)
            else:
                self._check_table(val)
            idx_vals[i] = val
        if not idx_vals:
            return self
        # memoized powers of each bound value
        powers: dict[int, list[Poly]] = {i: [table.one(), v] for i, v in idx_vals.items()}

        def power(i: int, k: int) -> Poly:
            ps = powers[i]
            while len(ps) <= k:
                ps.append(ps[-1] * ps[1])
            return ps[k]

        out = table.zero()
        for exps, coeff in self.terms.items():
            rest = list(exps)
            factor = None
            for i in idx_vals:
                k = rest[i]
                if k:
                    rest[i] = 0
                    p = power(i, k)
                    factor = p if factor is None else factor * p
            mono = Poly(table, {tuple(rest): coeff})
            out = out + (mono if factor is None else mono * factor)
        return out

    def coefficient(self, name: str, power: int) -> "Poly":
        """Coefficient of name**power, as a polynomial in the remaining symbols."""
        i = self.table.index(name)
        out = {}
        for exps, coeff in self.terms.items():
            if exps[i] == power:
                e = list(exps)
                e[i] = 0
                out[tuple(e)] = coeff
        return Poly(self.table, out)

    def max_exponent(self, name: str) -> int:
        i = self.table.index(name)
        return max((e[i] for e in self.terms), default=0)

    def evaluate(self, point: Mapping[str, Fraction | int]) -> Fraction:
        """Exact evaluation; every symbol occurring must be bound."""
        table = self.table
        vals: list[Fraction | None] = [None] * len(table)
        for name, v in point.items():
            vals[table.index(name)] = Fraction(v)
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = coeff
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                if vals[i] is None:
                    raise UsageError(f"unbound symbol {table.names[i]!r} in evaluation")
                term *= vals[i] ** e
            total += term
        return total

    def map_to(self, target: Symbols, rename: Mapping[str, str] | None = None) -> "Poly":
        """Re-express over another table; symbols map by (renamed) name.

        Every symbol actually used must exist in the target table.
        """
        rename = rename or {}
        src = self.table
        positions: list[int | None] = []
        for name in src.names:
            tname = rename.get(name, name)
            positions.append(target._index.get(tname))
        out: dict[Exponents, Fraction] = {}
        for exps, coeff in self.terms.items():
            e = [0] * len(target)
            for i, k in enumerate(exps):
                if k == 0:
                    continue
                j = positions[i]
                if j is None:
                    raise UsageError(
                        f"symbol {src.names[i]!r} used but absent from target table"
                    )
                e[j] += k
            key = tuple(e)
            out[key] = out.get(key, Fraction(0)) + coeff
        return Poly(target, out)

    # -- presentation ------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        """Terms in canonical graded-lex order, leading term first."""
        return sorted(
            self.terms.items(),
            key=lambda item: _term_sort_key(self.table, item[0]),
            reverse=True,
        )

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for exps, coeff in self.sorted_terms():
            factors = []
            for name, e in zip(self.table.names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            mag = abs(coeff)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if coeff < 0 else "+"
            chunks.append((sign, body))
        first_sign, first_body = chunks[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in chunks[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Poly({self})"

    def to_json_dict(self) -> dict:
        """Canonical JSON form: symbols plus graded-lex-ordered terms."""
        return {
            "symbols": list(self.table.names),
            "terms": [
                {"coeff": _fraction_str(c), "exps": list(e)}
                for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict, table: Symbols | None = None) -> "Poly":
        names = data["symbols"]
        if table is None:
            table = Symbols(names)
        elif list(table.names) != list(names):
            raise UsageError("JSON symbol list does not match expected table")
        terms = {}
        for t in data["terms"]:
            exps = tuple(int(x) for x in t["exps"])
            if len(exps) != len(table):
                raise UsageError("exponent length does not match symbol table")
            terms[exps] = _parse_fraction(t["coeff"])
        return cls(table, terms)


def _fraction_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _parse_fraction(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    return Fraction(str(s))


def divide_exact(p: Poly, q: Poly) -> Poly:
    """Exact multivariate division p / q; raises ConsistencyError on remainder.

    Single-divisor long division in graded-lex order.  If p = f*q the quotient
    f is recovered term by term; any leading term not divisible by lt(q)
    witnesses a nonzero remainder.
    """
    p._check_table(q)
    if q.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    table = p.table
    q_terms = q.sorted_terms()
    q_lead_e, q_lead_c = q_terms[0]
    rem = dict(p.terms)
    quot: dict[Exponents, Fraction] = {}
    while rem:
        e, c = max(
            rem.items(), key=lambda item: _term_sort_key(table, item[0])
        )
        diff = tuple(a - b for a, b in zip(e, q_lead_e))
        if any(d < 0 for d in diff):
            raise ConsistencyError(
                "non-exact division: leading term not divisible by divisor"
            )
        qc = c / q_lead_c
        quot[diff] = quot.get(diff, Fraction(0)) + qc
        for qe, qcf in q_terms:
            ne = tuple(a + b for a, b in zip(diff, qe))
            s = rem.get(ne, Fraction(0)) - qc * qcf
            if s:
                rem[ne] = s
            else:
                rem.pop(ne, None)
    return Poly(table, quot)


def symmetric_reduce(
    p: Poly,
    roots: Sequence[str],
    elementary: Sequence[str],
    target: Symbols,
) -> Poly:
    """Rewrite a polynomial symmetric in `roots` in the elementary basis.

    Leading-term elimination: the graded-lex leading monomial of a symmetric
    polynomial has weakly decreasing exponents (a >= b >= c), and is matched
    by e1^(a-b) * e2^(b-c) * e3^c.  Symbols outside `roots` pass through and
    must exist in the target table.
    """
    table = p.table
    root_idx = [table.index(r) for r in roots]
    k = len(root_idx)
    if len(elementary) != k:
        raise UsageError("need one elementary symbol per root")
    e_polys = [_elementary_poly(table, root_idx, i) for i in range(1, k + 1)]
    out = target.zero()
    work = p
    while not work.is_zero():
        exps, coeff = work.sorted_terms()[0]
        rexps = [exps[i] for i in root_idx]
        if any(rexps[i] < rexps[i + 1] for i in range(k - 1)):
            raise ConsistencyError(
                "polynomial is not symmetric in the given roots"
            )
        # e-monomial exponents
        epowers = [rexps[i] - rexps[i + 1] for i in range(k - 1)] + [rexps[-1]]
        # subtract coeff * prod(e_i ^ epowers) in root variables
        sub = table.const(coeff)
        for epoly, power in zip(e_polys, epowers):
            if power:
                sub = sub * epoly**power
        passthrough = list(exps)
        for i in root_idx:
            passthrough[i] = 0
        sub = sub * Poly(table, {tuple(passthrough): Fraction(1)})
        work = work - sub
        # emit the reduced term over the target table
        te = [0] * len(target)
        for name, e in zip(table.names, passthrough):
            if e:
                te[target.index(name)] += e
        for ename, power in zip(elementary, epowers):
            if power:
                te[target.index(ename)] += power
        out = out + Poly(target, {tuple(te): coeff})
    return out


def _elementary_poly(table: Symbols, root_idx: Sequence[int], i: int) -> Poly:
    from itertools import combinations

    out: dict[Exponents, Fraction] = {}
    for combo in combinations(root_idx, i):
        e = [0] * len(table)
        for j in combo:
            e[j] = 1
        out[tuple(e)] = Fraction(1)
    return Poly(table, out)
