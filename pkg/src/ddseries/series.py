"""Truncated single-variable Dirichlet series and their formal algebra.

A series is a finite map index -> complex coefficient together with a
truncation bound N; absent indices are zero.  All operations are pure and
return new values, so instances are safe to share.  Products silently drop
indices above the requested truncation; every result records its own
truncation.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

# Coefficients produced by cancellation are pruned only below this magnitude,
# keeping support semantics deterministic (no epsilon pruning).
PRUNE_BELOW = 1e-300


def _check_finite(c: complex) -> complex:
    c = complex(c)
    if not (math.isfinite(c.real) and math.isfinite(c.imag)):
        raise ValueError("non-finite coefficient: %r" % (c,))
    return c


def _pruned(terms: dict) -> dict:
    return {k: v for k, v in terms.items() if abs(v) >= PRUNE_BELOW}


@dataclass(frozen=True)
class DirichletSeries:
    """Finite Dirichlet series sum a_n n^{-s} with support in 1..truncation."""

    terms: dict[int, complex]
    truncation: int

    def __post_init__(self):
        if self.truncation < 1:
            raise ValueError("truncation must be a positive integer")

    def coefficient(self, n: int) -> complex:
        return self.terms.get(n, 0j)

    def support(self) -> list[int]:
        return sorted(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def l1_norm(self) -> float:
        return sum(abs(c) for c in self.terms.values())


def make_series(terms, truncation: int) -> DirichletSeries:
    """Build a series from (index, coefficient) pairs.

    Duplicate indices, indices outside 1..truncation and non-finite
    coefficients are rejected.
    """
    if truncation < 1:
        raise ValueError("truncation must be a positive integer")
    out: dict[int, complex] = {}
    for n, c in terms:
        if n < 1:
            raise ValueError("index %r out of range (must be >= 1)" % (n,))
        if n > truncation:
            raise ValueError("index %d exceeds truncation %d" % (n, truncation))
        if n in out:
            raise ValueError("duplicate index %d" % n)
        out[n] = _check_finite(c)
    return DirichletSeries(_pruned(out), truncation)


def zero_series(truncation: int = 1) -> DirichletSeries:
    return DirichletSeries({}, truncation)


def constant_series(c: complex, truncation: int = 1) -> DirichletSeries:
    return DirichletSeries(_pruned({1: _check_finite(c)}), truncation)


def add(A: DirichletSeries, B: DirichletSeries) -> DirichletSeries:
    """Termwise sum; the result is truncated to min of the two bounds."""
    trunc = min(A.truncation, B.truncation)
    out = {n: c for n, c in A.terms.items() if n <= trunc}
    for n, c in B.terms.items():
        if n <= trunc:
            out[n] = out.get(n, 0j) + c
    return DirichletSeries(_pruned(out), trunc)


def scale(A: DirichletSeries, c: complex) -> DirichletSeries:
    c = _check_finite(c)
    return DirichletSeries(_pruned({n: a * c for n, a in A.terms.items()}), A.truncation)


def mul(A: DirichletSeries, B: DirichletSeries, truncation: int) -> DirichletSeries:
    """Dirichlet convolution c_n = sum_{d*e=n} a_d b_e, n <= truncation."""
    out: dict[int, complex] = {}
    for d, a in A.terms.items():
        if d > truncation:
            continue
        for e, b in B.terms.items():
            n = d * e
            if n <= truncation:
                out[n] = out.get(n, 0j) + a * b
    return DirichletSeries(_pruned(out), truncation)


def evaluate(D: DirichletSeries, s: complex) -> complex:
    """Pointwise value sum a_n n^{-s}, principal branch n^{-s} = exp(-s ln n)."""
    return sum(a * cmath.exp(-s * math.log(n)) for n, a in D.terms.items())


def translate(D: DirichletSeries, sigma: float) -> DirichletSeries:
    """Horizontal translate: the series of s -> D(s + sigma), sigma >= 0."""
    if sigma < 0:
        raise ValueError("translate requires sigma >= 0")
    return DirichletSeries(
        _pruned({n: a * n ** (-sigma) for n, a in D.terms.items()}), D.truncation
    )


def exp_series(phi: DirichletSeries, truncation: int) -> DirichletSeries:
    """Formal exponential exp(a_1) * sum_r (phi - a_1)^r / r!.

    The constant-free part has minimal index >= 2, so powers beyond
    log2(truncation) vanish under truncation and the sum is finite.
    """
    a1 = phi.terms.get(1, 0j)
    psi = DirichletSeries({n: c for n, c in phi.terms.items() if n != 1}, truncation)
    out = {1: 1 + 0j}
    power = constant_series(1, truncation)
    rmax = int(math.log2(truncation)) if truncation > 1 else 0
    for r in range(1, rmax + 1):
        power = mul(power, psi, truncation)
        if power.is_zero():
            break
        inv_fact = 1.0 / math.factorial(r)
        for n, c in power.terms.items():
            out[n] = out.get(n, 0j) + c * inv_fact
    factor = cmath.exp(a1)
    return DirichletSeries(_pruned({n: factor * c for n, c in out.items()}), truncation)


def log_series(D: DirichletSeries, truncation: int) -> DirichletSeries:
    """Formal logarithm: the inverse of exp_series on indices <= truncation.

    Requires a nonzero constant term; the constant of the result is the
    principal log of it.  Computed by the Mercator expansion of
    log(1 + u) with u = D/a_1 - 1.
    """
    a1 = D.terms.get(1, 0j)
    if a1 == 0:
        raise ValueError("log_series requires a nonzero constant term")
    u = DirichletSeries({n: c / a1 for n, c in D.terms.items() if n != 1}, truncation)
    out = {1: cmath.log(a1)}
    power = constant_series(1, truncation)
    rmax = int(math.log2(truncation)) if truncation > 1 else 0
    for r in range(1, rmax + 1):
        power = mul(power, u, truncation)
        if power.is_zero():
            break
        coef = (-1.0) ** (r + 1) / r
        for n, c in power.terms.items():
            out[n] = out.get(n, 0j) + c * coef
    return DirichletSeries(_pruned(out), truncation)
