"""
The multigraded rational recursion for two-row plane partitions.

Q_k is the generating function of pairs mu <= lam with lam of length
exactly k, weighted x^lam y^mu; Q~_k drops the length condition to "at
most k". With p_r = x1...xr and q_r = y1...yr the recursion reads

    Q_0 = 1,
    Q_k = x_k Q_{k-1} / (1 - p_k)
          + sum_{0 <= i < r <= k} p_k q_r / ((1 - p_k)(1 - p_r q_r))
                                  * Q_i * Q_{k-r}(Z_{r,k}),

where Z_{r,k} substitutes x1 -> p_{r+1} q_r, x_j -> x_{r+j} (j >= 2) and
y_j -> y_{r+j}.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .multipoly import Monomial, Polynomial, VariableContext
from .ratgf import FactoredDenominator, FactoredGF, gf_add, gf_clear_to, gf_mul, gf_reduce, gf_substitute


def staircase_monomial(a: int, c: int, k: int) -> Monomial:
    """Exponents of p_a q_c in the width-k context: (1^a 0^(k-a) | 1^c 0^(k-c))."""
    if not (1 <= a <= k and 0 <= c <= a):
        raise ValueError(f"need 1 <= a <= k and 0 <= c <= a, got a={a}, c={c}, k={k}")
    return (1,) * a + (0,) * (k - a) + (1,) * c + (0,) * (k - c)


def is_staircase(m: Monomial, k: int) -> bool:
    if len(m) != 2 * k:
        return False
    xs, ys = m[:k], m[k:]
    a, c = sum(xs), sum(ys)
    return (
        1 <= a
        and c <= a
        and all(v in (0, 1) for v in m)
        and xs == (1,) * a + (0,) * (k - a)
        and ys == (1,) * c + (0,) * (k - c)
    )


def staircase_pairs(k: int) -> list:
    return [(a, c) for a in range(1, k + 1) for c in range(a + 1)]


def denominator_Dk(k: int) -> FactoredDenominator:
    """The product of (1 - p_a q_c) over 1 <= a <= k, 0 <= c <= a."""
    if k < 1:
        raise ValueError("k must be >= 1")
    ctx = VariableContext.standard(k)
    return FactoredDenominator.from_monomials(ctx, [staircase_monomial(a, c, k) for a, c in staircase_pairs(k)])


@dataclass(frozen=True)
class SubstitutionPlan:
    """Z_{r,k}: images of the width-(k-r) variables in the width-k context."""

    r: int
    k: int
    images: dict

    @classmethod
    def build(cls, r: int, k: int) -> "SubstitutionPlan":
        if not 0 <= r < k:
            raise ValueError("need 0 <= r < k")
        ctx = VariableContext.standard(k)
        w = k - r
        images = {"x1": staircase_monomial(r + 1, r, k)}
        for j in range(2, w + 1):
            images[f"x{j}"] = ctx.monomial(**{f"x{r + j}": 1})
        for j in range(1, w + 1):
            images[f"y{j}"] = ctx.monomial(**{f"y{r + j}": 1})
        return cls(r, k, images)

    def apply(self, g: FactoredGF) -> FactoredGF:
        return gf_substitute(g, self.images, VariableContext.standard(self.k))


def embed(g: FactoredGF, k: int) -> FactoredGF:
    """Prefix embedding of a width-j value into the width-k context."""
    ctx = VariableContext.standard(k)
    if g.ctx == ctx:
        return g
    j = g.ctx.arity // 2
    if g.ctx != VariableContext.standard(j) or j > k:
        raise ValueError(f"cannot embed {g.ctx} into {ctx}")
    images = {}
    for i in range(1, j + 1):
        images[f"x{i}"] = ctx.monomial(**{f"x{i}": 1})
        images[f"y{i}"] = ctx.monomial(**{f"y{i}": 1})
    return gf_substitute(g, images, ctx)


_memo_lock = threading.Lock()
_Q_memo: dict = {}
_Qt_memo: dict = {}


def compute_Q(k: int) -> FactoredGF:
    """Q_k in the context x1..xk, y1..yk, reduced."""
    if k < 0:
        raise ValueError("k must be >= 0")
    with _memo_lock:
        if k in _Q_memo:
            return _Q_memo[k]
    value = _recurse(k)
    with _memo_lock:
        return _Q_memo.setdefault(k, value)


def _recurse(k: int) -> FactoredGF:
    ctx = VariableContext.standard(k)
    if k == 0:
        return FactoredGF.constant(ctx, 1)
    pk = staircase_monomial(k, 0, k)
    xk = ctx.monomial(**{f"x{k}": 1})
    total = gf_mul(FactoredGF.monomial_over(ctx, xk, [pk]), embed(compute_Q(k - 1), k))
    total = gf_reduce(total)
    for r in range(1, k + 1):
        # sum over i < r of Q_i is Q~_{r-1}
        coeff = FactoredGF.monomial_over(ctx, staircase_monomial(k, r, k), [pk, staircase_monomial(r, r, k)])
        inner = embed(compute_Qtilde(r - 1), k)
        if r < k:
            shifted = SubstitutionPlan.build(r, k).apply(compute_Q(k - r))
        else:
            shifted = FactoredGF.constant(ctx, 1)
        term = gf_mul(gf_mul(coeff, inner), shifted)
        total = gf_reduce(gf_add(total, term))
    return total


def compute_Qtilde(k: int) -> FactoredGF:
    """Q~_k = Q_0 + ... + Q_k in the width-k context, reduced."""
    if k < 0:
        raise ValueError("k must be >= 0")
    with _memo_lock:
        if k in _Qt_memo:
            return _Qt_memo[k]
    if k == 0:
        value = compute_Q(0)
    else:
        value = gf_reduce(gf_add(embed(compute_Qtilde(k - 1), k), compute_Q(k)))
    with _memo_lock:
        return _Qt_memo.setdefault(k, value)


def clear_memo():
    with _memo_lock:
        _Q_memo.clear()
        _Qt_memo.clear()


def single_y_context(k: int) -> VariableContext:
    return VariableContext(tuple(f"x{i}" for i in range(1, k + 1)) + ("y",))


def _single_y_images(k: int) -> dict:
    ctx = single_y_context(k)
    y = ctx.monomial(y=1)
    return {f"y{i}": y for i in range(1, k + 1)}


def specialize_single_y(g, k: int):
    """Set y1 = ... = yk = y. Accepts a FactoredGF, FactoredDenominator or Polynomial."""
    target = single_y_context(k)
    images = _single_y_images(k)
    if isinstance(g, FactoredGF):
        return gf_substitute(g, images, target)
    return g.substitute(images, target)


def single_y_denominator(k: int) -> FactoredDenominator:
    """prod_{m=1..k} prod_{j=0..m} (1 - y^j p_m) in the context x1..xk, y."""
    ctx = single_y_context(k)
    factors = [(1,) * m + (0,) * (k - m) + (j,) for m in range(1, k + 1) for j in range(m + 1)]
    return FactoredDenominator.from_monomials(ctx, factors)


def numerator(k: int, tilde: bool = False) -> Polynomial:
    """The numerator of Q_k (or Q~_k) over D_k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    g = compute_Qtilde(k) if tilde else compute_Q(k)
    return gf_clear_to(g, denominator_Dk(k))
