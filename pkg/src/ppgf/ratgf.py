"""
Rational generating functions whose denominators are products of
binomials (1 - monomial), kept in factored form.
"""

from __future__ import annotations

import json
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping

from .multipoly import (
    ContextMismatchError,
    Monomial,
    NotDivisibleError,
    Polynomial,
    VariableContext,
    grlex_key,
    mono_str,
)


class DenominatorError(ValueError):
    pass


@dataclass(frozen=True)
class FactoredDenominator:
    """A multiset of monomials m, standing for the product of (1 - m)."""

    ctx: VariableContext
    factors: tuple  # ((monomial, multiplicity), ...) in graded lex order

    def __post_init__(self):
        zero = self.ctx.zero_monomial()
        for m, mult in self.factors:
            if len(m) != self.ctx.arity:
                raise ValueError(f"factor {m} does not fit context {self.ctx}")
            if m == zero:
                raise DenominatorError("constant factor 1 - 1 in denominator")
            if mult <= 0:
                raise ValueError("factor multiplicities must be positive")

    @classmethod
    def from_monomials(cls, ctx: VariableContext, monomials: Iterable) -> "FactoredDenominator":
        return cls.from_counter(ctx, Counter(tuple(m) for m in monomials))

    @classmethod
    def from_counter(cls, ctx, counts: Mapping) -> "FactoredDenominator":
        items = sorted(((m, n) for m, n in counts.items() if n > 0), key=lambda t: grlex_key(t[0]))
        return cls(ctx, tuple(items))

    @classmethod
    def empty(cls, ctx) -> "FactoredDenominator":
        return cls(ctx, ())

    def counter(self) -> Counter:
        return Counter(dict(self.factors))

    def monomials(self) -> list:
        """Factor monomials with repetition, in canonical order."""
        return [m for m, n in self.factors for _ in range(n)]

    def distinct(self) -> list:
        return [m for m, _ in self.factors]

    def multiplicity(self, m: Monomial) -> int:
        return dict(self.factors).get(tuple(m), 0)

    def __len__(self):
        return sum(n for _, n in self.factors)

    def __contains__(self, m):
        return self.multiplicity(m) > 0

    def union_max(self, other: "FactoredDenominator") -> "FactoredDenominator":
        a, b = self.counter(), other.counter()
        return FactoredDenominator.from_counter(self.ctx, a | b)

    def merge(self, other: "FactoredDenominator") -> "FactoredDenominator":
        return FactoredDenominator.from_counter(self.ctx, self.counter() + other.counter())

    def issubset(self, other: "FactoredDenominator") -> bool:
        theirs = other.counter()
        return all(theirs[m] >= n for m, n in self.factors)

    def difference(self, other: "FactoredDenominator") -> "FactoredDenominator":
        return FactoredDenominator.from_counter(self.ctx, self.counter() - other.counter())

    def expand(self) -> Polynomial:
        p = Polynomial.constant(self.ctx, 1)
        for m in self.monomials():
            p = p.mul_one_minus(m)
        return p

    def substitute(self, images: Mapping, target: VariableContext | None = None) -> "FactoredDenominator":
        target = target or self.ctx
        counts = Counter()
        for m, n in self.factors:
            img = Polynomial.monomial(self.ctx, m).substitute(images, target)
            (e, _), = img.as_dict().items()
            counts[e] += n
        return FactoredDenominator.from_counter(target, counts)

    def __str__(self):
        if not self.factors:
            return "1"
        parts = []
        for m, n in self.factors:
            f = f"(1 - {mono_str(self.ctx, m)})"
            parts.append(f if n == 1 else f"{f}^{n}")
        return "*".join(parts)

    def to_json(self) -> list:
        return [{"e": list(m), "mult": n} for m, n in self.factors]


@dataclass(frozen=True)
class FactoredGF:
    """num / prod(1 - m) over the denominator multiset."""

    num: Polynomial
    den: FactoredDenominator

    def __post_init__(self):
        if self.num.ctx != self.den.ctx:
            raise ContextMismatchError("numerator and denominator contexts differ")

    @property
    def ctx(self) -> VariableContext:
        return self.num.ctx

    @classmethod
    def polynomial(cls, p: Polynomial) -> "FactoredGF":
        return cls(p, FactoredDenominator.empty(p.ctx))

    @classmethod
    def constant(cls, ctx, c: int = 1) -> "FactoredGF":
        return cls.polynomial(Polynomial.constant(ctx, c))

    @classmethod
    def monomial_over(cls, ctx, num: Monomial, den: Iterable) -> "FactoredGF":
        return cls(Polynomial.monomial(ctx, num), FactoredDenominator.from_monomials(ctx, den))

    def __add__(self, other):
        return gf_add(self, other)

    def __mul__(self, other):
        return gf_mul(self, other)

    def __neg__(self):
        return FactoredGF(-self.num, self.den)

    def __sub__(self, other):
        return gf_add(self, -other)

    def __str__(self):
        return f"({self.num}) / ({self.den})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data) -> "FactoredGF":
        if isinstance(data, str):
            data = json.loads(data)
        num = Polynomial.from_json(data["num"])
        counts = Counter()
        for f in data["den"]:
            counts[tuple(f["e"])] += int(f.get("mult", 1))
        return cls(num, FactoredDenominator.from_counter(num.ctx, counts))


def _check(a: FactoredGF, b: FactoredGF):
    if a.ctx != b.ctx:
        raise ContextMismatchError(f"{a.ctx} vs {b.ctx}")


def _lift(num: Polynomial, missing: Counter) -> Polynomial:
    for m, n in missing.items():
        for _ in range(n):
            num = num.mul_one_minus(m)
    return num


def gf_add(a: FactoredGF, b: FactoredGF) -> FactoredGF:
    _check(a, b)
    if a.num.is_zero():
        return b
    if b.num.is_zero():
        return a
    ca, cb = a.den.counter(), b.den.counter()
    common = ca | cb
    num = _lift(a.num, common - ca) + _lift(b.num, common - cb)
    return FactoredGF(num, FactoredDenominator.from_counter(a.ctx, common))


def gf_mul(a: FactoredGF, b: FactoredGF) -> FactoredGF:
    _check(a, b)
    return FactoredGF(a.num * b.num, a.den.merge(b.den))


def gf_substitute(g: FactoredGF, images: Mapping, target: VariableContext | None = None) -> FactoredGF:
    return FactoredGF(g.num.substitute(images, target), g.den.substitute(images, target))


def gf_reduce(g: FactoredGF) -> FactoredGF:
    """Cancel every denominator factor that divides the numerator."""
    if g.num.is_zero():
        return FactoredGF.polynomial(g.num)
    num = g.num
    counts = g.den.counter()
    changed = True
    while changed:
        changed = False
        for m in sorted(counts, key=grlex_key):
            while counts[m] > 0:
                try:
                    num = num.exact_div(Polynomial.one_minus(num.ctx, m))
                except NotDivisibleError:
                    break
                counts[m] -= 1
                changed = True
    return FactoredGF(num, FactoredDenominator.from_counter(g.ctx, counts))


def series_over(num: Polynomial, factors: Iterable, n: int, degree=sum) -> Polynomial:
    """
    Expand num / prod(1 - m) as a power series, keeping terms of degree <= n.
    ``degree`` grades a monomial; every factor must have positive degree.
    """
    terms = {e: c for e, c in num.as_dict().items() if degree(e) <= n}
    for m in factors:
        dm = degree(m)
        if dm <= 0:
            raise DenominatorError(f"factor 1 - {m} has no power series expansion in this grading")
        out = defaultdict(int)
        for e, c in terms.items():
            d = degree(e)
            while d <= n:
                out[e] += c
                e = tuple([i + j for i, j in zip(e, m)])
                d += dm
        terms = {e: c for e, c in out.items() if c}
    return Polynomial(num.ctx, terms)


def gf_series(g: FactoredGF, n: int, degree=sum) -> Polynomial:
    """
    Power series of g truncated at degree n. The default grading is total
    degree; pass ``degree`` (a function of the exponent tuple) to use
    another one.
    """
    if n < 0:
        raise ValueError("series degree must be nonnegative")
    return series_over(g.num, g.den.monomials(), n, degree)


def truncated_product(series: Polynomial, den: FactoredDenominator, cutoff: int) -> Polynomial:
    """
    series * prod(1 - m) over the factors of ``den``, truncated at total
    degree ``cutoff``. Truncating before each factor keeps this cheap.
    """
    acc = series
    for m in den.monomials():
        acc = acc.truncate(cutoff).mul_one_minus(m)
    return acc.truncate(cutoff)


def gf_clear_to(g: FactoredGF, target: FactoredDenominator) -> Polynomial:
    """The numerator of g when written over the denominator ``target``."""
    if g.ctx != target.ctx:
        raise ContextMismatchError(f"{g.ctx} vs {target.ctx}")
    g = gf_reduce(g)
    if not g.den.issubset(target):
        extra = g.den.difference(target)
        raise DenominatorError(f"denominator factors {extra} are not in the target denominator")
    return _lift(g.num, target.counter() - g.den.counter())
