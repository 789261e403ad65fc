"""
Brute-force enumeration of plane partitions with at most two rows.

This is the ground truth every symbolic route is checked against, so it is
kept deliberately naive: nested loops over weakly decreasing rows.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .multipoly import Polynomial, VariableContext


@dataclass(frozen=True, order=True)
class PlanePartition2xK:
    lam: tuple
    mu: tuple

    def __post_init__(self):
        lam, mu = tuple(self.lam), tuple(self.mu)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)
        if len(lam) != len(mu):
            raise ValueError("rows must have the same length")
        if any(v < 0 for v in lam + mu):
            raise ValueError("entries must be nonnegative")
        if any(a < b for a, b in zip(lam, lam[1:])) or any(a < b for a, b in zip(mu, mu[1:])):
            raise ValueError("rows must be weakly decreasing")
        if any(a < b for a, b in zip(lam, mu)):
            raise ValueError("top row must dominate bottom row")

    @property
    def k(self) -> int:
        return len(self.lam)

    @property
    def size(self) -> int:
        return sum(self.lam) + sum(self.mu)

    @property
    def exponents(self) -> tuple:
        return self.lam + self.mu

    def __str__(self):
        return f"({','.join(map(str, self.lam))}|{','.join(map(str, self.mu))})"


def _rows(k: int, budget: int, cap: int):
    """Weakly decreasing length-k rows with entries <= cap and sum <= budget."""
    if k == 0:
        yield ()
        return
    for first in range(min(cap, budget), -1, -1):
        for rest in _rows(k - 1, budget - first, first):
            yield (first,) + rest


def _bottom_rows(lam: tuple, budget: int, i: int = 0, prev: int | None = None):
    if i == len(lam):
        yield ()
        return
    top = lam[i] if prev is None else min(lam[i], prev)
    for v in range(min(top, budget), -1, -1):
        for rest in _bottom_rows(lam, budget - v, i + 1, v):
            yield (v,) + rest


def enumerate_pp(k: int, n: int, strict_last: bool = False) -> list:
    """
    All 2 x k plane partitions (lam | mu) with |lam| + |mu| <= n.

    With ``strict_last`` only those with lam_k >= 1 are kept. The result is
    ordered by size, then by (lam, mu) descending.
    """
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    out = []
    for lam in _rows(k, n, n):
        if strict_last and lam[-1] == 0:
            continue
        for mu in _bottom_rows(lam, n - sum(lam)):
            out.append(PlanePartition2xK(lam, mu))
    out.sort(key=lambda p: (p.size, tuple(-v for v in p.lam + p.mu)))
    return out


def oracle_series(k: int, n: int, strict_last: bool = False) -> Polynomial:
    """Sum of x^lam y^mu over enumerate_pp(k, n, strict_last)."""
    ctx = VariableContext.standard(k)
    acc = defaultdict(int)
    for p in enumerate_pp(k, n, strict_last):
        acc[p.exponents] += 1
    return Polynomial(ctx, acc)


def count_by_size(k: int, n: int) -> list:
    """Number of 2 x k plane partitions of each size 0..n."""
    counts = [0] * (n + 1)
    for p in enumerate_pp(k, n):
        counts[p.size] += 1
    return counts
