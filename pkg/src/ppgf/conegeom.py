"""
Geometry of the cone C_k of 2 x k plane partitions.

Points are vectors (lam_1..lam_k, mu_1..mu_k). The cone is the order cone
of the 2 x k grid poset: cell (0, j) holds lam_{j+1}, cell (1, j) holds
mu_{j+1}, and values decrease to the right and downwards. Its extremal
rays are the indicator vectors of the nonempty up-sets, which are the 0/1
plane partitions (1^a 0^(k-a) | 1^c 0^(k-c)) with a >= max(c, 1).

The triangulation used here is the canonical one of an order cone: one
unimodular simplicial cone per linear extension, spanned by the
indicators of the growing prefixes. Marking the rays at descents of a
fixed natural labeling makes the cones half-open and disjoint, which is
the standard P-partition decomposition.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .multipoly import Polynomial, VariableContext
from .ratgf import FactoredGF, gf_reduce
from .recursion import denominator_Dk, staircase_monomial, staircase_pairs


class NotAMemberError(ValueError):
    pass


def rays_Uk(k: int) -> list:
    """Extremal rays of C_k, ordered lexicographically by (a, c)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return [staircase_monomial(a, c, k) for a, c in staircase_pairs(k)]


def is_ray(v, k: int) -> bool:
    return tuple(v) in set(rays_Uk(k))


def is_member(p, k: int) -> bool:
    """Membership of an integer point in C_k."""
    p = tuple(p)
    if len(p) != 2 * k:
        raise ValueError(f"point has length {len(p)}, expected {2 * k}")
    lam, mu = p[:k], p[k:]
    return (
        all(v >= 0 for v in p)
        and all(a >= b for a, b in zip(lam, lam[1:]))
        and all(a >= b for a, b in zip(mu, mu[1:]))
        and all(a >= b for a, b in zip(lam, mu))
    )


def members_below(p, k: int):
    """All members u of C_k with 0 <= u <= p componentwise."""
    p = tuple(p)
    for u in itertools.product(*(range(v + 1) for v in p)):
        if is_member(u, k):
            yield u


def is_irreducible(p, k: int) -> bool:
    """True when p is a nonzero member that is not a sum of two nonzero members."""
    p = tuple(p)
    if not is_member(p, k):
        raise NotAMemberError(f"{p} is not in C_{k}")
    if not any(p):
        return False
    for u in members_below(p, k):
        if any(u) and u != p and is_member(tuple(a - b for a, b in zip(p, u)), k):
            return False
    return True


def support(p) -> tuple:
    return tuple(1 if v > 0 else 0 for v in p)


def decompose(p, k: int) -> list:
    """
    Write a member as a sum of rays by repeatedly peeling off its support.
    Returns the rays used, largest first.
    """
    p = tuple(p)
    if not is_member(p, k):
        raise NotAMemberError(f"{p} is not in C_{k}")
    out = []
    while any(p):
        s = support(p)
        out.append(s)
        p = tuple(a - b for a, b in zip(p, s))
    return out


# -- the grid poset and its linear extensions -------------------------------

def cells(k: int) -> list:
    """Grid cells in reading order: the lam-row left to right, then the mu-row."""
    return [(0, j) for j in range(k)] + [(1, j) for j in range(k)]


def cell_index(cell, k: int) -> int:
    row, col = cell
    return row * k + col


def _addable(taken_top: int, taken_bottom: int, k: int) -> list:
    # the up-sets are exactly (a, c) = (cells taken in each row) with c <= a
    out = []
    if taken_top < k:
        out.append((0, taken_top))
    if taken_bottom < taken_top:
        out.append((1, taken_bottom))
    return out


@dataclass(frozen=True)
class LinearExtension:
    """Cells listed from top to bottom; every prefix is an up-set."""

    order: tuple

    @property
    def k(self) -> int:
        return len(self.order) // 2

    def is_valid(self) -> bool:
        k = self.k
        if sorted(self.order) != sorted(cells(k)):
            return False
        a = c = 0
        for cell in self.order:
            if cell not in _addable(a, c, k):
                return False
            if cell[0] == 0:
                a += 1
            else:
                c += 1
        return True

    def descents(self) -> list:
        """Positions i (1-based) where the reading label drops from cell i to cell i+1."""
        k = self.k
        labels = [cell_index(c, k) for c in self.order]
        return [i + 1 for i in range(len(labels) - 1) if labels[i] > labels[i + 1]]


def linear_extensions(k: int) -> list:
    """All linear extensions of the 2 x k grid, by backtracking, in lexicographic order of cells."""
    if k < 1:
        raise ValueError("k must be >= 1")
    out = []
    path = []

    def walk(a, c):
        if a == k and c == k:
            out.append(LinearExtension(tuple(path)))
            return
        for cell in _addable(a, c, k):
            path.append(cell)
            if cell[0] == 0:
                walk(a + 1, c)
            else:
                walk(a, c + 1)
            path.pop()

    walk(0, 0)
    return out


def count_linear_extensions(k: int) -> int:
    """Number of linear extensions, by counting maximal chains in the lattice of up-sets."""

    @lru_cache(maxsize=None)
    def paths(a, c):
        if a == k and c == k:
            return 1
        total = 0
        if a < k:
            total += paths(a + 1, c)
        if c < a:
            total += paths(a, c + 1)
        return total

    return paths(0, 0)


def catalan(k: int) -> int:
    return math.comb(2 * k, k) // (k + 1)


# -- simplicial cones --------------------------------------------------------

@dataclass(frozen=True)
class SimplicialCone:
    rays: tuple  # 2k nested 0/1 vectors
    halfopen_marks: frozenset  # 0-based ray indices whose coordinate must be >= 1
    extension: LinearExtension

    @property
    def k(self) -> int:
        return len(self.rays) // 2

    def coordinates(self, p) -> tuple:
        """Coefficients t with p = sum t_i rays_i; the rays are nested, so t are successive differences."""
        k = self.k
        values = [p[cell_index(c, k)] for c in self.extension.order] + [0]
        return tuple(values[i] - values[i + 1] for i in range(2 * k))

    def contains(self, p, halfopen: bool = True) -> bool:
        t = self.coordinates(p)
        if any(v < 0 for v in t):
            return False
        if halfopen:
            return all(t[i] >= 1 for i in self.halfopen_marks)
        return True

    def gf(self, ctx: VariableContext | None = None) -> FactoredGF:
        ctx = ctx or VariableContext.standard(self.k)
        num = ctx.zero_monomial()
        for i in self.halfopen_marks:
            num = tuple(a + b for a, b in zip(num, self.rays[i]))
        return FactoredGF.monomial_over(ctx, num, self.rays)


def cone_of(ext: LinearExtension) -> SimplicialCone:
    k = ext.k
    current = [0] * (2 * k)
    rays = []
    for cell in ext.order:
        current[cell_index(cell, k)] = 1
        rays.append(tuple(current))
    marks = frozenset(i - 1 for i in ext.descents())
    return SimplicialCone(tuple(rays), marks, ext)


def triangulation(k: int) -> list:
    return [cone_of(e) for e in linear_extensions(k)]


def int_det(rows) -> int:
    """Determinant of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    sign, prev = 1, 1
    for i in range(n):
        if m[i][i] == 0:
            swap = next((r for r in range(i + 1, n) if m[r][i] != 0), None)
            if swap is None:
                return 0
            m[i], m[swap] = m[swap], m[i]
            sign = -sign
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) // prev
        prev = m[i][i]
    return sign * m[n - 1][n - 1]


def gf_via_triangulation(k: int) -> FactoredGF:
    """Q~_k as the sum of the half-open simplicial cone series, reduced."""
    den = denominator_Dk(k)
    ctx = den.ctx
    full = den.counter()
    num = Polynomial.zero(ctx)
    for cone in triangulation(k):
        g = cone.gf(ctx)
        part = g.num
        for m, n in (full - g.den.counter()).items():
            for _ in range(n):
                part = part.mul_one_minus(m)
        num = num + part
    return gf_reduce(FactoredGF(num, den))


def inclusion_exclusion_k2() -> Polynomial:
    """
    Numerator of Q~_2 from the two-cone triangulation {r0,r1,r2,r4},
    {r1,r2,r3,r4} of C_2 and their intersection {r1,r2,r4}:
    N = m3 + m0 - m0 m3 with m_i = (xy)^(r_i).
    """
    ctx = VariableContext.standard(2)
    r = rays_Uk(2)
    m0 = Polynomial.monomial(ctx, r[0])
    m3 = Polynomial.monomial(ctx, r[3])
    return (1 - m3) + (1 - m0) - (1 - m0) * (1 - m3)
