"""
MacMahon's Omega_>= operator for crude generating functions whose
elimination variables appear with exponent -1, 0 or +1 in every
denominator factor.

A crude form is a sum of terms num / prod(1 - m_i). Omega_>= over v keeps
the part of the Laurent series with nonnegative v-exponents and then sets
v = 1. The elimination uses Elliott's splitting

    1/((1 - A v)(1 - B/v)) = 1/(1 - AB) * (1/(1 - A v) + 1/(1 - B/v) - 1)

until no term mixes positive and negative v factors, after which

    Omega[v^s / prod(1 - A_i v)] : s >= 0 -> set v = 1,
                                   s < 0  -> peel 1/(1 - A v) = 1 + A v/(1 - A v),
    Omega[v^s / prod(1 - B_j/v)] : s < 0  -> 0, else peel 1/(1 - B/v) likewise.

All factor monomials must have positive degree in the base variables, so
every expansion is a well-defined power series in them.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache

from .multipoly import Polynomial, VariableContext
from .ratgf import FactoredDenominator, FactoredGF, gf_add, gf_reduce, series_over


class OmegaError(ValueError):
    pass


@dataclass(frozen=True)
class CrudeForm:
    """
    sum over terms of num / prod(1 - m), where ``terms`` is a tuple of
    (numerator Polynomial, sorted tuple of factor monomials).
    """

    ctx: VariableContext
    elim: tuple  # names of the elimination variables still present
    terms: tuple

    def __post_init__(self):
        for name in self.elim:
            self.ctx.index(name)
        positions = self.elim_positions()
        base = [i for i in range(self.ctx.arity) if i not in positions]
        for num, factors in self.terms:
            if num.ctx != self.ctx:
                raise OmegaError("term numerator lives in a different context")
            for m in factors:
                if any(m[i] < 0 for i in base):
                    raise OmegaError(f"negative base exponent in factor {m}")
                if sum(m[i] for i in base) <= 0:
                    raise OmegaError(f"factor {m} has no positive base degree")

    @classmethod
    def build(cls, ctx: VariableContext, elim, terms) -> "CrudeForm":
        merged = defaultdict(lambda: Polynomial.zero(ctx))
        for num, factors in terms:
            key = tuple(sorted(tuple(m) for m in factors))
            merged[key] = merged[key] + num
        return cls(ctx, tuple(elim), tuple((n, f) for f, n in sorted(merged.items()) if not n.is_zero()))

    @classmethod
    def from_factors(cls, ctx, elim, factors, num: Polynomial | None = None) -> "CrudeForm":
        num = Polynomial.constant(ctx, 1) if num is None else num
        return cls.build(ctx, elim, [(num, factors)])

    def elim_positions(self) -> set:
        return {self.ctx.index(n) for n in self.elim}

    def base_degree(self, e) -> int:
        positions = self.elim_positions()
        return sum(v for i, v in enumerate(e) if i not in positions)

    def series(self, n: int) -> Polynomial:
        """Laurent series truncated at degree n in the base variables only."""
        acc = Polynomial.zero(self.ctx)
        for num, factors in self.terms:
            acc = acc + series_over(num, factors, n, degree=self.base_degree)
        return acc

    def to_gf(self) -> FactoredGF:
        """The sum as a reduced FactoredGF; requires all elimination variables gone."""
        if self.elim:
            raise OmegaError(f"elimination variables {self.elim} still present")
        total = FactoredGF.constant(self.ctx, 0)
        for num, factors in self.terms:
            total = gf_reduce(gf_add(total, FactoredGF(num, FactoredDenominator.from_monomials(self.ctx, factors))))
        return total


def _drop(e: tuple, i: int) -> tuple:
    return e[:i] + e[i + 1:]


def _mul(a: tuple, b: tuple) -> tuple:
    return tuple([x + y for x, y in zip(a, b)])


def _remove(factors: tuple, *ms) -> tuple:
    out = list(factors)
    for m in ms:
        out.remove(m)
    return out


@lru_cache(maxsize=None)
def _omega(mono: tuple, factors: tuple, v: int) -> tuple:
    """
    Omega_>= over coordinate v of x^mono / prod(1 - m). Returns a tuple of
    (coefficient, monomial, factors) with coordinate v still present in the
    vectors but meaning nothing (it is dropped by the caller).
    """
    pos = [m for m in factors if m[v] == 1]
    neg = [m for m in factors if m[v] == -1]
    s = mono[v]
    if pos and neg:
        a, b = pos[0], neg[0]
        ab = _mul(a, b)
        out = []
        for sign, rest in ((1, _remove(factors, b)), (1, _remove(factors, a)), (-1, _remove(factors, a, b))):
            key = tuple(sorted(rest + [ab]))
            out.extend((sign * c, e, f) for c, e, f in _omega(mono, key, v))
        return tuple(out)
    if neg:
        if s < 0:
            return ()
        b = neg[0]
        return _omega(mono, tuple(_remove(factors, b)), v) + _omega(_mul(mono, b), factors, v)
    if s >= 0:
        return ((1, mono, factors),)
    if not pos:
        return ()
    a = pos[0]
    return _omega(mono, tuple(_remove(factors, a)), v) + _omega(_mul(mono, a), factors, v)


def omega_eliminate(form: CrudeForm, name: str) -> CrudeForm:
    """Apply Omega_>= over the elimination variable ``name`` and drop it from the context."""
    if name not in form.elim:
        raise OmegaError(f"{name!r} is not an elimination variable of this form")
    v = form.ctx.index(name)
    for _, factors in form.terms:
        for m in factors:
            if m[v] not in (-1, 0, 1):
                raise OmegaError(f"exponent {m[v]} of {name} in factor {m} is outside {{-1, 0, 1}}")
    ctx = VariableContext(_drop(form.ctx.names, v))
    out = []
    for num, factors in form.terms:
        by_factors = defaultdict(dict)
        for e, c in num.as_dict().items():
            for sign, mono, fs in _omega(e, factors, v):
                key = tuple(_drop(m, v) for m in fs)
                d = by_factors[key]
                me = _drop(mono, v)
                d[me] = d.get(me, 0) + sign * c
        for fs, coeffs in by_factors.items():
            out.append((Polynomial(ctx, coeffs), fs))
    return CrudeForm.build(ctx, tuple(n for n in form.elim if n != name), out)


def omega_nonnegative_part(series: Polynomial, form: CrudeForm, name: str) -> Polynomial:
    """Reference semantics on a truncated series: keep v-exponent >= 0, then set v = 1."""
    v = form.ctx.index(name)
    ctx = VariableContext(_drop(form.ctx.names, v))
    acc = defaultdict(int)
    for e, c in series.as_dict().items():
        if e[v] >= 0:
            acc[_drop(e, v)] += c
    return Polynomial(ctx, acc)


# -- plane partitions in a 2 x n box ----------------------------------------

def box_context(n: int) -> VariableContext:
    return VariableContext(tuple(f"x1{j}" for j in range(1, n + 1)) + tuple(f"x2{j}" for j in range(1, n + 1)))


@dataclass(frozen=True)
class BoxGF:
    """p_{2,n}: generating function of 2 x n plane partitions in the variables x1j, x2j."""

    n: int
    value: FactoredGF

    def __post_init__(self):
        if self.value.ctx != box_context(self.n):
            raise ValueError("BoxGF value must live in the box context")

    def renamed(self) -> FactoredGF:
        """Rename x1j -> xj, x2j -> yj. Both contexts are ordered row by row, so this is positional."""
        target = VariableContext.standard(self.n)
        images = {name: target.monomial(**{new: 1}) for name, new in zip(self.value.ctx.names, target.names)}
        num = self.value.num.substitute(images, target)
        den = self.value.den.substitute(images, target)
        return FactoredGF(num, den)


def p21() -> BoxGF:
    """p_{2,1} = 1/((1 - x11)(1 - x11 x21))."""
    ctx = box_context(1)
    return BoxGF(1, FactoredGF.monomial_over(ctx, ctx.zero_monomial(), [ctx.monomial(x11=1), ctx.monomial(x11=1, x21=1)]))


P22_ELIM = ("mu11", "mu12", "l11", "l21")


def p22_crude_form() -> CrudeForm:
    ctx = VariableContext(("x11", "x12", "x21", "x22") + P22_ELIM)
    m = ctx.monomial
    factors = [
        m(x11=1, l11=1, mu11=1),
        m(x21=1, l21=1, mu11=-1),
        m(x12=1, mu12=1, l11=-1),
        m(x22=1, l21=-1, mu12=-1),
    ]
    return CrudeForm.from_factors(ctx, P22_ELIM, factors)


def p22_stages(order=P22_ELIM) -> list:
    """The crude form before and after each elimination, in the given order."""
    stages = [p22_crude_form()]
    for name in order:
        stages.append(omega_eliminate(stages[-1], name))
    return stages


def p22_via_omega(order=P22_ELIM) -> BoxGF:
    # the base variables already sit in box order x11, x12, x21, x22
    return _as_box(p22_stages(order)[-1], 2)


def ap_step_form(p: BoxGF) -> CrudeForm:
    """
    The crude form whose Omega_>= over l0 then l1 is p_{2,n+1}.

    The last column (x1n, x2n) of p_{2,n} gets tags l0, l1 and the new
    column contributes 1/((1 - x1,n+1/l0)(1 - x1,n+1 x2,n+1/(l0 l1))), so
    the l0 and l1 exponents are x1n - x1,n+1 and x2n - x2,n+1.
    """
    n = p.n
    ctx = VariableContext(box_context(n + 1).names + ("l0", "l1"))
    images = {name: ctx.monomial(**{name: 1}) for name in p.value.ctx.names}
    images[f"x1{n}"] = ctx.monomial(**{f"x1{n}": 1, "l0": 1})
    images[f"x2{n}"] = ctx.monomial(**{f"x2{n}": 1, "l1": 1})
    num = p.value.num.substitute(images, ctx)
    factors = list(p.value.den.substitute(images, ctx).monomials())
    top, bottom = f"x1{n + 1}", f"x2{n + 1}"
    factors.append(ctx.monomial(**{top: 1, "l0": -1}))
    factors.append(ctx.monomial(**{top: 1, bottom: 1, "l0": -1, "l1": -1}))
    return CrudeForm.from_factors(ctx, ("l0", "l1"), factors, num)


def _as_box(form: CrudeForm, n: int) -> BoxGF:
    g = form.to_gf()
    ctx = box_context(n)
    return BoxGF(n, FactoredGF(Polynomial(ctx, g.num.as_dict()), FactoredDenominator(ctx, g.den.factors)))


def ap_step(p: BoxGF, n: int | None = None) -> BoxGF:
    """From p_{2,n} to p_{2,n+1} by two Omega_>= eliminations."""
    n = p.n if n is None else n
    if n != p.n:
        raise ValueError(f"p is p_(2,{p.n}), not p_(2,{n})")
    form = omega_eliminate(omega_eliminate(ap_step_form(p), "l0"), "l1")
    return _as_box(form, n + 1)


def ap_step_with_prefactor(p: BoxGF) -> FactoredGF:
    """
    ap_step multiplied by 1/(1 - x1,n+1 x2,n+1 prod_{i, j <= n} x_ij).
    Kept for comparison only: this overcounts, since the Omega part is
    already all of p_{2,n+1}.
    """
    q = ap_step(p)
    ctx = q.value.ctx
    every = tuple(1 for _ in ctx.names)
    return gf_reduce(q.value * FactoredGF.monomial_over(ctx, ctx.zero_monomial(), [every]))
