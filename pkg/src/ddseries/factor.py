"""Integer factorization and the factorization enumerations feeding the
coefficient formulas of the monomial-power expansion.

Everything here is exact integer arithmetic.  The smallest-prime-factor
sieve is built once per size and cached; all enumeration functions impose
a canonical ordering on the parts so that results are duplicate-free and
deterministic.
"""

from __future__ import annotations

from functools import lru_cache

_SIEVE_BOUND = 10**6
_spf: list[int] = []


def _ensure_sieve(bound: int) -> None:
    global _spf
    if len(_spf) > bound:
        return
    bound = max(bound, _SIEVE_BOUND)
    spf = list(range(bound + 1))
    for p in range(2, int(bound**0.5) + 1):
        if spf[p] == p:  # p is prime
            for q in range(p * p, bound + 1, p):
                if spf[q] == q:
                    spf[q] = p
    _spf = spf


def factorize(n: int) -> list[tuple[int, int]]:
    """Canonical prime factorization of n >= 1, primes increasing.

    Returns [] for n == 1.
    """
    if n < 1:
        raise ValueError("factorize requires n >= 1, got %r" % (n,))
    if n <= _SIEVE_BOUND or n < len(_spf):
        _ensure_sieve(min(n, _SIEVE_BOUND))
    out = []
    m = n
    while m > 1:
        if m < len(_spf):
            p = _spf[m]
        else:
            p = _trial_factor(m)
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        out.append((p, e))
    out.sort()
    return out


def _trial_factor(m: int) -> int:
    if m % 2 == 0:
        return 2
    f = 3
    while f * f <= m:
        if m % f == 0:
            return f
        f += 2
    return m


def divisors(n: int) -> list[int]:
    """All divisors of n >= 1, ascending."""
    if n < 1:
        raise ValueError("divisors requires n >= 1, got %r" % (n,))
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def multiplicative_factorizations(M: int) -> list[list[tuple[int, int]]]:
    """All factorizations of M >= 2 into powers of distinct bases >= 2.

    Each factorization is a list of (base, exponent) with bases strictly
    increasing and product base**exponent over all parts equal to M.  The
    trivial factorization [(M, 1)] is always included.
    """
    if M < 2:
        raise ValueError("multiplicative_factorizations requires M >= 2")
    return _mult_facts(M, 2)


def _mult_facts(M: int, min_base: int) -> list[list[tuple[int, int]]]:
    results = []
    for m in divisors(M):
        if m < min_base:
            continue
        rest, r = M // m, 1
        while True:
            if rest == 1:
                results.append([(m, r)])
            else:
                for tail in _mult_facts(rest, m + 1):
                    results.append([(m, r)] + tail)
            if rest % m == 0:
                rest //= m
                r += 1
            else:
                break
    return results


@lru_cache(maxsize=65536)
def pair_factorizations(M: int, N: int) -> tuple[tuple[tuple[tuple[int, int], int], ...], ...]:
    """All factorizations of the index pair (M, N) into powers of distinct
    pairs (m, n) != (1, 1).

    Each factorization is a tuple of ((m, n), r) parts, pairs strictly
    increasing lexicographically, with prod(m**r) == M and prod(n**r) == N.
    Either coordinate of a base pair may be 1, but not both.  (M, N) must
    differ from (1, 1).
    """
    if (M, N) == (1, 1):
        raise ValueError("pair_factorizations requires (M, N) != (1, 1)")
    return tuple(tuple(f) for f in _pair_facts(M, N, (1, 1)))


def _pair_facts(M, N, min_pair):
    results = []
    for m in divisors(M):
        for n in divisors(N):
            if (m, n) <= min_pair or (m, n) == (1, 1):
                continue
            restM, restN, r = M // m, N // n, 1
            while True:
                if restM == 1 and restN == 1:
                    results.append([((m, n), r)])
                else:
                    for tail in _pair_facts(restM, restN, (m, n)):
                        results.append([((m, n), r)] + tail)
                if restM % m == 0 and restN % n == 0:
                    restM //= m
                    restN //= n
                    r += 1
                else:
                    break
    return results
