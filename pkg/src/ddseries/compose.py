"""Symbol calculus for composition operators on half-planes.

A symbol in one variable is c0*s + phi(s) with c0 a non-negative integer
and phi a truncated Dirichlet series; in two variables each component is
c*s + d*t + phi_j(s,t) with four non-negative integer slopes.  The core
primitive is the expansion of k^{-symbol} as a (double) Dirichlet series,
computed along two independent routes: the production exp-convolution path
and the factorization-sum path used as an oracle.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .bohr import (
    DoublePrimePolynomial,
    PrimePolynomial,
    prime,
    unlift,
    unlift_double,
)
from .double import (
    DoubleDirichletSeries,
    constant_double,
    evaluate2,
    mul2,
    zero_double,
)
from .factor import pair_factorizations
from .series import (
    DirichletSeries,
    evaluate,
    exp_series,
    log_series,
    mul,
    scale,
    zero_series,
)


@dataclass(frozen=True)
class Symbol:
    """Composition-operator symbol c0*s + phi(s)."""

    c0: int
    phi: DirichletSeries

    def __post_init__(self):
        if self.c0 < 0 or int(self.c0) != self.c0:
            raise ValueError("c0 must be a non-negative integer")

    def __call__(self, s: complex) -> complex:
        return self.c0 * s + evaluate(self.phi, s)


@dataclass(frozen=True)
class DoubleSymbol:
    """Two-component symbol, component j being c_j*s + d_j*t + phi_j(s,t)."""

    c1: int
    d1: int
    c2: int
    d2: int
    phi1: DoubleDirichletSeries
    phi2: DoubleDirichletSeries

    def __post_init__(self):
        for v in (self.c1, self.d1, self.c2, self.d2):
            if v < 0 or int(v) != v:
                raise ValueError("slopes must be non-negative integers")

    def component(self, j: int):
        if j == 1:
            return self.c1, self.d1, self.phi1
        if j == 2:
            return self.c2, self.d2, self.phi2
        raise ValueError("component index must be 1 or 2")

    def __call__(self, s: complex, t: complex) -> tuple[complex, complex]:
        return (
            self.c1 * s + self.d1 * t + evaluate2(self.phi1, s, t),
            self.c2 * s + self.d2 * t + evaluate2(self.phi2, s, t),
        )


@dataclass
class ValidationReport:
    """Diagnostic outcome of the sampled symbol checks.

    A sampled check can refute validity but never certify it, so `ok` means
    "no failed condition found on the probes".  Components whose phi part
    has identically zero sampled real part are flagged as boundary cases.
    """

    ok: bool
    failures: list[str] = field(default_factory=list)
    boundary: list[str] = field(default_factory=list)
    min_re: dict[str, float] = field(default_factory=dict)


_BOUNDARY_EPS = 1e-12


def validate_symbol(sym, probes) -> ValidationReport:
    """Structural plus sampled range checks; diagnostics, never raises.

    probes: points s in C_+ for a Symbol, pairs (s, t) in C_+^2 for a
    DoubleSymbol.
    """
    report = ValidationReport(ok=True)
    if isinstance(sym, Symbol):
        comps = [("phi", sym.c0 > 0, lambda p: evaluate(sym.phi, p))]
    elif isinstance(sym, DoubleSymbol):
        comps = [
            ("phi1", sym.c1 > 0 or sym.d1 > 0, lambda p: evaluate2(sym.phi1, *p)),
            ("phi2", sym.c2 > 0 or sym.d2 > 0, lambda p: evaluate2(sym.phi2, *p)),
        ]
    else:
        raise TypeError("expected Symbol or DoubleSymbol")
    for name, has_slope, ev in comps:
        res = [ev(p).real for p in probes]
        mn = min(res) if res else 0.0
        report.min_re[name] = mn
        if has_slope:
            # slope present: phi needs Re >= 0; identically-zero Re is the
            # constant-imaginary boundary case
            if mn < -_BOUNDARY_EPS:
                report.ok = False
                report.failures.append(
                    "%s: Re < 0 on a probe (min %.3g), range leaves C+" % (name, mn)
                )
            elif res and max(abs(r) for r in res) <= _BOUNDARY_EPS:
                report.boundary.append(name)
        else:
            # no linear part: the whole symbol is phi, need Re > 0
            if mn <= 0.0:
                report.ok = False
                report.failures.append(
                    "%s: Re <= 0 on a probe (min %.3g) with zero slopes" % (name, mn)
                )
    return report


def char_power(k: int, sym: Symbol, truncation: int) -> DirichletSeries:
    """The Dirichlet series of k^{-sym(s)}.

    Computed as exp_series(-ln k * phi) with every index shifted by the
    factor k^{c0} coming from k^{-c0 s}.  k == 1 gives the constant 1.
    """
    if k < 1:
        raise ValueError("char_power requires k >= 1")
    shift = k**sym.c0
    if shift > truncation:
        return zero_series(truncation)
    inner = exp_series(scale(sym.phi, -math.log(k)), truncation // shift)
    return DirichletSeries(
        {n * shift: c for n, c in inner.terms.items()}, truncation
    )


def _char_power_component(k: int, c: int, d: int, phi: DoubleDirichletSeries,
                          truncations) -> DoubleDirichletSeries:
    """Double series of k^{-(c s + d t + phi(s,t))}."""
    M, N = truncations
    sm, sn = k**c, k**d
    if sm > M or sn > N:
        return zero_double(truncations)
    inner = exp2(scale_double(phi, -math.log(k)), (M // sm, N // sn))
    return DoubleDirichletSeries(
        {(m * sm, n * sn): v for (m, n), v in inner.terms.items()}, (M, N)
    )


def scale_double(A: DoubleDirichletSeries, c: complex) -> DoubleDirichletSeries:
    from .double import scale2

    return scale2(A, c)


def exp2(phi: DoubleDirichletSeries, truncations) -> DoubleDirichletSeries:
    """Formal exponential of a double series, mirroring exp_series.

    Terms of the constant-free part have m*n >= 2, so the power sum is
    finite with at most log2(M*N) rounds.
    """
    M, N = truncations
    b11 = phi.terms.get((1, 1), 0j)
    psi = DoubleDirichletSeries(
        {k: v for k, v in phi.terms.items() if k != (1, 1)}, truncations
    )
    out = {(1, 1): 1 + 0j}
    power = constant_double(1, truncations)
    rmax = int(math.log2(M * N)) if M * N > 1 else 0
    for r in range(1, rmax + 1):
        power = mul2(power, psi, truncations)
        if power.is_zero():
            break
        inv_fact = 1.0 / math.factorial(r)
        for kk, v in power.terms.items():
            out[kk] = out.get(kk, 0j) + v * inv_fact
    factor = cmath.exp(b11)
    return DoubleDirichletSeries(
        {kk: factor * v for kk, v in out.items() if abs(factor * v) >= 1e-300},
        (M, N),
    )


def char_power_double(k: int, l: int, sym: DoubleSymbol, truncations) -> DoubleDirichletSeries:
    """The double Dirichlet series of k^{-phi_1(s,t)} l^{-phi_2(s,t)} with
    the slope shifts (M, N) -> (k^c1 l^c2 M, k^d1 l^d2 N) applied."""
    if k < 1 or l < 1:
        raise ValueError("char_power_double requires k, l >= 1")
    M, N = truncations
    sm = k**sym.c1 * l**sym.c2
    sn = k**sym.d1 * l**sym.d2
    if sm > M or sn > N:
        return zero_double(truncations)
    inner_t = (M // sm, N // sn)
    e1 = exp2(scale_double(sym.phi1, -math.log(k)), inner_t)
    e2 = exp2(scale_double(sym.phi2, -math.log(l)), inner_t)
    prod = mul2(e1, e2, inner_t)
    return DoubleDirichletSeries(
        {(m * sm, n * sn): v for (m, n), v in prod.terms.items()}, (M, N)
    )


def char_power_via_factorizations(k: int, phi: DoubleDirichletSeries,
                                  truncations) -> DoubleDirichletSeries:
    """Oracle route for the series of k^{-phi(s,t)}: coefficients summed
    over all pair factorizations of each output index.

    Exponential in the worst case; exists to arbitrate the exp-convolution
    path and is exercised by the cross-algorithm tests.
    """
    if k < 2:
        raise ValueError("char_power_via_factorizations requires k >= 2")
    M, N = truncations
    logk = math.log(k)
    b11 = phi.terms.get((1, 1), 0j)
    global_factor = cmath.exp(-logk * b11)
    out = {(1, 1): global_factor}
    for MM in range(1, M + 1):
        for NN in range(1, N + 1):
            if (MM, NN) == (1, 1):
                continue
            total = 0j
            for factorization in pair_factorizations(MM, NN):
                term = 1 + 0j
                for (m, n), r in factorization:
                    b = phi.terms.get((m, n), 0j)
                    if b == 0:
                        term = 0j
                        break
                    term *= (-logk * b) ** r / math.factorial(r)
                total += term
            if total != 0:
                out[(MM, NN)] = global_factor * total
    return DoubleDirichletSeries(
        {kk: v for kk, v in out.items() if abs(v) >= 1e-300}, (M, N)
    )


def apply(sym: Symbol, D: DirichletSeries, truncation: int) -> DirichletSeries:
    """The composition operator: the series of D(sym(s))."""
    out: dict[int, complex] = {}
    for k, a in sorted(D.terms.items()):
        piece = char_power(k, sym, truncation)
        for n, c in piece.terms.items():
            out[n] = out.get(n, 0j) + a * c
    return DirichletSeries({n: c for n, c in out.items() if abs(c) >= 1e-300}, truncation)


def apply_double(sym: DoubleSymbol, D: DoubleDirichletSeries, truncations) -> DoubleDirichletSeries:
    """Two-variable composition; colliding output indices accumulate."""
    out: dict[tuple[int, int], complex] = {}
    for (k, l), a in sorted(D.terms.items()):
        piece = char_power_double(k, l, sym, truncations)
        for kk, c in piece.terms.items():
            out[kk] = out.get(kk, 0j) + a * c
    return DoubleDirichletSeries(
        {kk: c for kk, c in out.items() if abs(c) >= 1e-300}, tuple(truncations)
    )


class SymbolRecoveryError(ValueError):
    """The alleged monomial powers are not consistent with any symbol."""


def recover_symbol(D2: DirichletSeries, D3: DirichletSeries, truncation: int) -> Symbol:
    """Reconstruct the symbol from the series of 2^{-phi} and 3^{-phi}.

    c0 comes from the first nonzero index of D2 (and must match D3 through
    log base 3); the phi part is -log_series / ln 2, cross-validated against
    the same recovery from D3 within 1e-9.
    """
    if D2.is_zero() or D3.is_zero():
        raise SymbolRecoveryError("inputs must be nonzero series")
    m2 = min(D2.terms)
    c0 = round(math.log2(m2))
    if 2**c0 != m2:
        raise SymbolRecoveryError("first index %d of D2 is not a power of 2" % m2)
    m3 = min(D3.terms)
    if 3**c0 != m3:
        raise SymbolRecoveryError(
            "first index %d of D3 inconsistent with c0 = %d" % (m3, c0)
        )
    # log only up to the unshifted information horizon of each input: beyond
    # it the truncated exponential no longer determines phi
    t2 = min(truncation, D2.truncation // 2**c0)
    t3 = min(truncation, D3.truncation // 3**c0)
    phi2 = _recover_phi(D2, 2, c0, t2)
    phi3 = _recover_phi(D3, 3, c0, t3)
    horizon = min(t2, t3)
    common = {n for n in set(phi2.terms) | set(phi3.terms) if n <= horizon}
    mismatch = max(
        (abs(phi2.terms.get(n, 0j) - phi3.terms.get(n, 0j)) for n in common), default=0.0
    )
    if mismatch > 1e-9:
        raise SymbolRecoveryError(
            "k=2 and k=3 recoveries disagree by %.3g; inputs are not symbol powers"
            % mismatch
        )
    return Symbol(c0, phi2)


def _recover_phi(D: DirichletSeries, k: int, c0: int, truncation: int) -> DirichletSeries:
    shift = k**c0
    unshifted = {}
    for n, c in D.terms.items():
        if n % shift != 0:
            raise SymbolRecoveryError(
                "index %d of the k=%d input is not a multiple of %d" % (n, k, shift)
            )
        unshifted[n // shift] = c
    U = DirichletSeries(unshifted, max(truncation, max(unshifted)))
    return scale(log_series(U, truncation), -1.0 / math.log(k))


@dataclass
class RangeReport:
    """Sampled lower estimate of the half-plane margin per component."""

    epsilon: float
    delta: tuple[float, float]
    probes: int


def range_check(sym: DoubleSymbol, epsilon: float, grid) -> RangeReport:
    """Sampled min over C_epsilon^2 of Re phi_j(s,t) (full component,
    slopes included), estimating the delta of the range lemma."""
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    grid = list(grid)
    mins = []
    for j in (1, 2):
        c, d, phi = sym.component(j)
        mins.append(
            min(
                c * s.real + d * t.real + evaluate2(phi, s, t).real for (s, t) in grid
            )
        )
    return RangeReport(epsilon, (mins[0], mins[1]), len(list(grid)))


@dataclass
class PositivityReport:
    verdict: str  # "consistent" or "disproof"
    min_re: float
    argmin: tuple[complex, complex]


def positivity_check(phi: DoubleDirichletSeries, grid) -> PositivityReport:
    """Sampled check of Re phi >= 0 on C_+^2: negative findings are a
    disproof, non-negative findings only consistency."""
    best = None
    arg = None
    for (s, t) in grid:
        v = evaluate2(phi, s, t).real
        if best is None or v < best:
            best, arg = v, (s, t)
    if best is None:
        best, arg = 0.0, (0j, 0j)
    return PositivityReport("disproof" if best < 0 else "consistent", best, arg)


@dataclass
class CompactnessReport:
    compact: bool
    delta: float
    component_infs: tuple[float, float]


_COMPACT_THRESHOLD = 1e-4


def compactness_check(sym: DoubleSymbol, grid) -> CompactnessReport:
    """Sampled inf of Re phi_j over a grid approaching the boundary of
    C_+^2.  A positive inf (above threshold) yields a compact verdict with
    delta; an inf collapsing to 0 yields non-compact."""
    grid = list(grid)
    infs = []
    for j in (1, 2):
        c, d, phi = sym.component(j)
        infs.append(
            min(c * s.real + d * t.real + evaluate2(phi, s, t).real for (s, t) in grid)
        )
    delta = min(infs)
    return CompactnessReport(delta > _COMPACT_THRESHOLD, delta, (infs[0], infs[1]))


def bohr_commutation_check(sym, f, probes, truncation: int = 512) -> float:
    """Residual of the commuting square between the composition operator
    and its Bohr-side counterpart, evaluated numerically on the probes.

    Single variable: f is a PrimePolynomial, probes are points s; the
    operator route lifts apply(sym, unlift(f)) while the Bohr route
    substitutes z_j -> series of p_j^{-sym}.  Double variable analogously
    with pairs (s, t).
    """
    if isinstance(sym, Symbol):
        if not isinstance(f, PrimePolynomial):
            raise TypeError("single symbol needs a PrimePolynomial")
        D = unlift(f, truncation)
        G = apply(sym, D, truncation)
        positions = sorted({pos for alpha in f.terms for pos, _ in alpha})
        psi = {pos: char_power(prime(pos), sym, truncation) for pos in positions}
        residual = 0.0
        for s in probes:
            lhs = evaluate(G, s)
            vals = {pos: evaluate(ser, s) for pos, ser in psi.items()}
            rhs = 0j
            for alpha, c in f.terms.items():
                term = c
                for pos, e in alpha:
                    term *= vals[pos] ** e
                rhs += term
            residual = max(residual, abs(lhs - rhs))
        return residual
    if isinstance(sym, DoubleSymbol):
        if not isinstance(f, DoublePrimePolynomial):
            raise TypeError("double symbol needs a DoublePrimePolynomial")
        truncs = (truncation, truncation)
        D = unlift_double(f, truncs)
        G = apply_double(sym, D, truncs)
        pos1 = sorted({pos for (a, _) in f.terms for pos, _ in a})
        pos2 = sorted({pos for (_, b) in f.terms for pos, _ in b})
        psi1 = {
            pos: _char_power_component(prime(pos), sym.c1, sym.d1, sym.phi1, truncs)
            for pos in pos1
        }
        psi2 = {
            pos: _char_power_component(prime(pos), sym.c2, sym.d2, sym.phi2, truncs)
            for pos in pos2
        }
        residual = 0.0
        for (s, t) in probes:
            lhs = evaluate2(G, s, t)
            v1 = {pos: evaluate2(ser, s, t) for pos, ser in psi1.items()}
            v2 = {pos: evaluate2(ser, s, t) for pos, ser in psi2.items()}
            rhs = 0j
            for (alpha, beta), c in f.terms.items():
                term = c
                for pos, e in alpha:
                    term *= v1[pos] ** e
                for pos, e in beta:
                    term *= v2[pos] ** e
                rhs += term
            residual = max(residual, abs(lhs - rhs))
        return residual
    raise TypeError("expected Symbol or DoubleSymbol")
