"""Truncated double Dirichlet series sum a_{m,n} m^{-s} n^{-t}.

Storage is sparse (dict keyed by index pairs); the convention is the one
with m paired to s and n paired to t throughout.  The row view exposes the
vector-valued perspective: D(s,t) = sum_m row_m(t) m^{-s}.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .series import PRUNE_BELOW, DirichletSeries, _check_finite, evaluate


def _pruned(terms: dict) -> dict:
    return {k: v for k, v in terms.items() if abs(v) >= PRUNE_BELOW}


@dataclass(frozen=True)
class DoubleDirichletSeries:
    """Finite double Dirichlet series with support in [1,M] x [1,N]."""

    terms: dict[tuple[int, int], complex]
    truncations: tuple[int, int]

    def __post_init__(self):
        M, N = self.truncations
        if M < 1 or N < 1:
            raise ValueError("truncations must be positive integers")

    def coefficient(self, m: int, n: int) -> complex:
        return self.terms.get((m, n), 0j)

    def support(self) -> list[tuple[int, int]]:
        return sorted(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def l1_norm(self) -> float:
        return sum(abs(c) for c in self.terms.values())


def make_double_series(terms, truncations) -> DoubleDirichletSeries:
    M, N = truncations
    if M < 1 or N < 1:
        raise ValueError("truncations must be positive integers")
    out: dict[tuple[int, int], complex] = {}
    for (m, n), c in terms:
        if m < 1 or n < 1:
            raise ValueError("index pair (%r, %r) out of range" % (m, n))
        if m > M or n > N:
            raise ValueError("index pair (%d, %d) exceeds truncations (%d, %d)" % (m, n, M, N))
        if (m, n) in out:
            raise ValueError("duplicate index pair (%d, %d)" % (m, n))
        out[(m, n)] = _check_finite(c)
    return DoubleDirichletSeries(_pruned(out), (M, N))


def zero_double(truncations=(1, 1)) -> DoubleDirichletSeries:
    return DoubleDirichletSeries({}, tuple(truncations))


def constant_double(c: complex, truncations=(1, 1)) -> DoubleDirichletSeries:
    return DoubleDirichletSeries(_pruned({(1, 1): _check_finite(c)}), tuple(truncations))


def add2(A: DoubleDirichletSeries, B: DoubleDirichletSeries) -> DoubleDirichletSeries:
    M = min(A.truncations[0], B.truncations[0])
    N = min(A.truncations[1], B.truncations[1])
    out = {k: v for k, v in A.terms.items() if k[0] <= M and k[1] <= N}
    for k, v in B.terms.items():
        if k[0] <= M and k[1] <= N:
            out[k] = out.get(k, 0j) + v
    return DoubleDirichletSeries(_pruned(out), (M, N))


def scale2(A: DoubleDirichletSeries, c: complex) -> DoubleDirichletSeries:
    c = _check_finite(c)
    return DoubleDirichletSeries(_pruned({k: v * c for k, v in A.terms.items()}), A.truncations)


def mul2(A: DoubleDirichletSeries, B: DoubleDirichletSeries, truncations) -> DoubleDirichletSeries:
    """Two-variable Dirichlet convolution, truncated componentwise."""
    M, N = truncations
    out: dict[tuple[int, int], complex] = {}
    for (d, e), a in A.terms.items():
        if d > M or e > N:
            continue
        for (f, g), b in B.terms.items():
            m, n = d * f, e * g
            if m <= M and n <= N:
                out[(m, n)] = out.get((m, n), 0j) + a * b
    return DoubleDirichletSeries(_pruned(out), (M, N))


def evaluate2(D: DoubleDirichletSeries, s: complex, t: complex) -> complex:
    return sum(
        a * cmath.exp(-s * math.log(m) - t * math.log(n)) for (m, n), a in D.terms.items()
    )


def row_series(D: DoubleDirichletSeries, m: int) -> DirichletSeries:
    """Row subseries alpha_m(t) = sum_n a_{m,n} n^{-t}."""
    if not 1 <= m <= D.truncations[0]:
        raise ValueError("row index %d out of range 1..%d" % (m, D.truncations[0]))
    return DirichletSeries(
        {n: a for (mm, n), a in D.terms.items() if mm == m}, D.truncations[1]
    )


def embed_single(D: DirichletSeries, axis: str = "first") -> DoubleDirichletSeries:
    """Embed a single series on the first (column n=1) or second (row m=1) axis."""
    if axis == "first":
        return DoubleDirichletSeries(
            {(n, 1): a for n, a in D.terms.items()}, (D.truncation, 1)
        )
    if axis == "second":
        return DoubleDirichletSeries(
            {(1, n): a for n, a in D.terms.items()}, (1, D.truncation)
        )
    raise ValueError("axis must be 'first' or 'second'")


def rectangular_partial_sum(D: DoubleDirichletSeries, m0: int, n0: int) -> DoubleDirichletSeries:
    """Restriction of D to the index rectangle [1,m0] x [1,n0]."""
    M, N = D.truncations
    if not (1 <= m0 <= M and 1 <= n0 <= N):
        raise ValueError("rectangle (%d, %d) out of range" % (m0, n0))
    return DoubleDirichletSeries(
        {k: v for k, v in D.terms.items() if k[0] <= m0 and k[1] <= n0}, (m0, n0)
    )


def regular_check(D: DoubleDirichletSeries, s: complex, t: complex) -> dict:
    """Compare row-first, column-first and total summation orders at (s, t).

    All three agree exactly up to floating reordering for finite series; the
    report carries the three values and their maximal pairwise deviation.
    """
    total = evaluate2(D, s, t)
    rows = sorted({m for m, _ in D.terms})
    by_rows = sum(
        evaluate(row_series(D, m), t) * cmath.exp(-s * math.log(m)) for m in rows
    )
    cols = sorted({n for _, n in D.terms})
    by_cols = 0j
    for n in cols:
        col = DirichletSeries(
            {m: a for (m, nn), a in D.terms.items() if nn == n}, D.truncations[0]
        )
        by_cols += evaluate(col, s) * cmath.exp(-t * math.log(n))
    spread = max(abs(total - by_rows), abs(total - by_cols), abs(by_rows - by_cols))
    return {
        "total": total,
        "row_first": by_rows,
        "column_first": by_cols,
        "max_deviation": spread,
    }
