"""
Sparse multivariate polynomials with integer coefficients.

A polynomial lives in a :class:`VariableContext`, a fixed ordered tuple of
variable names. Monomials are plain tuples of exponents, one per context
variable. Coefficients are Python ints, so arithmetic is exact.

Terms iterate in graded lexicographic order: total degree ascending, ties
broken lexicographically on the exponent tuple.
"""

from __future__ import annotations

import json
import re
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

Monomial = tuple  # tuple[int, ...], one exponent per context variable


class ContextMismatchError(ValueError):
    pass


class NotDivisibleError(ArithmeticError):
    pass


@dataclass(frozen=True)
class VariableContext:
    names: tuple

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    @classmethod
    def standard(cls, k: int) -> "VariableContext":
        """The context x1..xk, y1..yk."""
        return cls(tuple(f"x{i}" for i in range(1, k + 1)) + tuple(f"y{i}" for i in range(1, k + 1)))

    @property
    def arity(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"variable {name!r} not in context {self.names}") from None

    def __contains__(self, name) -> bool:
        return name in self._index

    def zero_monomial(self) -> Monomial:
        return (0,) * len(self.names)

    def monomial(self, **exponents) -> Monomial:
        e = [0] * len(self.names)
        for name, power in exponents.items():
            e[self.index(name)] = power
        return tuple(e)

    def __repr__(self):
        return f"VariableContext({', '.join(self.names)})"


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple([i + j for i, j in zip(a, b)])


def mono_pow(a: Monomial, n: int) -> Monomial:
    return tuple([i * n for i in a])


def mono_degree(a: Monomial) -> int:
    return sum(a)


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(i <= j for i, j in zip(a, b))


def grlex_key(e: Monomial):
    return (sum(e), e)


def mono_str(ctx: VariableContext, e: Monomial) -> str:
    parts = []
    for name, power in zip(ctx.names, e):
        if power == 1:
            parts.append(name)
        elif power != 0:
            parts.append(f"{name}^{power}")
    return "*".join(parts) if parts else "1"


class Polynomial:
    """An immutable sparse polynomial over the integers."""

    __slots__ = ("ctx", "_terms", "_hash")

    def __init__(self, ctx: VariableContext, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc = defaultdict(int)
        n = ctx.arity
        for e, c in items:
            e = tuple(e)
            if len(e) != n:
                raise ValueError(f"monomial {e} has length {len(e)}, context arity is {n}")
            acc[e] += int(c)
        self.ctx = ctx
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _from_dict(cls, ctx, terms: dict) -> "Polynomial":
        # trusted constructor: terms already nonzero and well formed
        p = cls.__new__(cls)
        p.ctx = ctx
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, ctx) -> "Polynomial":
        return cls._from_dict(ctx, {})

    @classmethod
    def constant(cls, ctx, c: int = 1) -> "Polynomial":
        return cls._from_dict(ctx, {ctx.zero_monomial(): c} if c else {})

    @classmethod
    def monomial(cls, ctx, e: Monomial, c: int = 1) -> "Polynomial":
        e = tuple(e)
        if len(e) != ctx.arity:
            raise ValueError(f"monomial {e} does not fit context of arity {ctx.arity}")
        return cls._from_dict(ctx, {e: c} if c else {})

    @classmethod
    def variable(cls, ctx, name: str) -> "Polynomial":
        return cls.monomial(ctx, ctx.monomial(**{name: 1}))

    @classmethod
    def one_minus(cls, ctx, e: Monomial) -> "Polynomial":
        """The binomial 1 - x^e."""
        e = tuple(e)
        zero = ctx.zero_monomial()
        if e == zero:
            return cls.zero(ctx)
        return cls._from_dict(ctx, {zero: 1, e: -1})

    # -- inspection -------------------------------------------------------

    def terms(self) -> list:
        """(monomial, coefficient) pairs in canonical graded lex order."""
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]))

    def __iter__(self) -> Iterator:
        return iter(self.terms())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, e: Monomial) -> int:
        return self._terms.get(tuple(e), 0)

    def as_dict(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        zero = self.ctx.zero_monomial()
        return all(e == zero for e in self._terms)

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def leading_term(self):
        return max(self._terms.items(), key=lambda t: grlex_key(t[0]))

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.ctx != other.ctx:
            raise ContextMismatchError(f"{self.ctx} vs {other.ctx}")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.ctx, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other._terms) > len(self._terms):
            self, other = other, self
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return Polynomial._from_dict(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._from_dict(self.ctx, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if not a or not b:
            return Polynomial.zero(self.ctx)
        if len(a) < len(b):
            a, b = b, a
        out = defaultdict(int)
        for eb, cb in b.items():
            for ea, ca in a.items():
                out[tuple([i + j for i, j in zip(ea, eb)])] += ca * cb
        return Polynomial._from_dict(self.ctx, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.ctx, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_monomial(self, e: Monomial, c: int = 1) -> "Polynomial":
        if not c:
            return Polynomial.zero(self.ctx)
        return Polynomial._from_dict(
            self.ctx, {tuple([i + j for i, j in zip(f, e)]): v * c for f, v in self._terms.items()}
        )

    def mul_one_minus(self, m: Monomial) -> "Polynomial":
        """self * (1 - x^m), without building the binomial."""
        return self - self.mul_monomial(m)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(self.ctx, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ctx == other.ctx and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, frozenset(self._terms.items())))
        return self._hash

    # -- division ---------------------------------------------------------

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        """The quotient q with q * other == self, or NotDivisibleError."""
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self
        zero = self.ctx.zero_monomial()
        bt = other._terms
        if len(bt) == 2 and bt.get(zero) in (1, -1):
            (m, c), = ((e, c) for e, c in bt.items() if e != zero)
            if c == -bt[zero]:
                q = _div_one_minus(self._terms, m)
                if bt[zero] == -1:
                    q = {e: -c for e, c in q.items()}
                return Polynomial._from_dict(self.ctx, q)
        return self._div_leading(other)

    def _div_leading(self, other: "Polynomial") -> "Polynomial":
        lm, lc = other.leading_term()
        rem = dict(self._terms)
        quot = {}
        while rem:
            e, c = max(rem.items(), key=lambda t: grlex_key(t[0]))
            if not mono_divides(lm, e) or c % lc:
                raise NotDivisibleError("polynomial is not divisible")
            qe = tuple([i - j for i, j in zip(e, lm)])
            qc = c // lc
            quot[qe] = qc
            for f, d in other._terms.items():
                g = tuple([i + j for i, j in zip(f, qe)])
                s = rem.get(g, 0) - qc * d
                if s:
                    rem[g] = s
                else:
                    del rem[g]
        return Polynomial._from_dict(self.ctx, quot)

    def divisible_by_one_minus(self, m: Monomial) -> bool:
        try:
            _div_one_minus(self._terms, m)
        except NotDivisibleError:
            return False
        return True

    # -- substitution and truncation --------------------------------------

    def substitute(self, images: Mapping, target: VariableContext | None = None) -> "Polynomial":
        """
        Apply the ring map sending each source variable to a monomial.

        ``images`` maps source variable names to exponent tuples in the
        target context. Unmapped variables go to the same-named variable of
        the target, which must exist if the variable is used.
        """
        target = target or self.ctx
        columns = []
        for i, name in enumerate(self.ctx.names):
            if name in images:
                img = tuple(images[name])
                if len(img) != target.arity:
                    raise ValueError(f"image of {name} does not fit target context")
            elif name in target:
                img = target.monomial(**{name: 1})
            else:
                used = any(e[i] for e in self._terms)
                if used:
                    raise KeyError(f"variable {name!r} has no image in target context")
                img = None
            columns.append(img)
        zero = target.zero_monomial()
        out = defaultdict(int)
        for e, c in self._terms.items():
            acc = list(zero)
            for power, img in zip(e, columns):
                if power:
                    for j, v in enumerate(img):
                        if v:
                            acc[j] += power * v
            out[tuple(acc)] += c
        return Polynomial._from_dict(target, {e: c for e, c in out.items() if c})

    def truncate(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("truncation degree must be nonnegative")
        return Polynomial._from_dict(self.ctx, {e: c for e, c in self._terms.items() if sum(e) <= n})

    # -- encodings --------------------------------------------------------

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"Polynomial({to_text(self)!r})"

    def to_json(self) -> dict:
        return {
            "vars": list(self.ctx.names),
            "terms": [{"c": str(c), "e": list(e)} for e, c in self.terms()],
        }

    @classmethod
    def from_json(cls, data) -> "Polynomial":
        if isinstance(data, str):
            data = json.loads(data)
        ctx = VariableContext(tuple(data["vars"]))
        return cls(ctx, [(tuple(t["e"]), int(t["c"])) for t in data["terms"]])

    @classmethod
    def parse(cls, text: str, ctx: VariableContext) -> "Polynomial":
        return parse(text, ctx)


def _div_one_minus(terms: dict, m: Monomial) -> dict:
    """
    Divide by (1 - x^m). Each quotient coefficient is a running sum of the
    dividend along the chain e, e+m, e+2m, ...; the division is exact iff
    every chain sums to zero.
    """
    pivot = next((i for i, v in enumerate(m) if v > 0), None)
    if pivot is None:
        raise ValueError("divisor monomial needs a positive exponent")
    step = m[pivot]
    chains = defaultdict(dict)
    for e, c in terms.items():
        t = e[pivot] // step
        base = tuple([i - t * j for i, j in zip(e, m)])
        chains[base][t] = c
    out = {}
    for base, entries in chains.items():
        ts = sorted(entries)
        total = 0
        idx = 0
        for t in range(ts[0], ts[-1]):
            if idx < len(ts) and ts[idx] == t:
                total += entries[t]
                idx += 1
            if total:
                out[tuple([i + t * j for i, j in zip(base, m)])] = total
        if total + entries[ts[-1]] != 0:
            raise NotDivisibleError("polynomial is not divisible by 1 - monomial")
    return out


def to_text(p: Polynomial) -> str:
    """Signed monomials, highest graded-lex term first, e.g. '-x1^2*x2*y1 + 1'."""
    if p.is_zero():
        return "0"
    out = []
    for e, c in reversed(p.terms()):
        m = mono_str(p.ctx, e)
        mag = abs(c)
        if m == "1":
            body = str(mag)
        elif mag == 1:
            body = m
        else:
            body = f"{mag}*{m}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(out)


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse(text: str, ctx: VariableContext) -> Polynomial:
    """
    Parse a sum of signed monomials such as ``-x1^2*y1*x2 + 1``. Factors
    may appear in any order; exponents may be negative when written as
    ``v^-1``.
    """
    text = re.sub(r"\^\s*-", "^~", text.strip())
    if text in ("", "0"):
        return Polynomial.zero(ctx)
    acc = defaultdict(int)
    pos = 0
    while pos < len(text):
        match = _TERM_RE.match(text, pos)
        if not match or match.end() == pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        sign = -1 if match.group(1) == "-" else 1
        coeff = 1
        e = [0] * ctx.arity
        for factor in match.group(2).strip().split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"empty factor in {match.group(2)!r}")
            if factor.isdigit():
                coeff *= int(factor)
                continue
            name, _, power = factor.partition("^")
            power = int(power.replace("~", "-")) if power else 1
            e[ctx.index(name.strip())] += power
        acc[tuple(e)] += sign * coeff
        pos = match.end()
    return Polynomial(ctx, acc)


# Functional spellings of the ring operations.

def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    a._check(b)
    return a + b


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    a._check(b)
    return a * b


def poly_exact_div(a: Polynomial, b: Polynomial) -> Polynomial:
    return a.exact_div(b)


def poly_substitute(p: Polynomial, images: Mapping, target: VariableContext | None = None) -> Polynomial:
    return p.substitute(images, target)


def poly_truncate(p: Polynomial, n: int) -> Polynomial:
    return p.truncate(n)
