"""Elementary number theory: primes, factorial valuations, factorization,
and the small Diophantine scans the verification suite relies on."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable

import numpy as np

from .verdict import LemmaVerdict, Status, Witness


# -- primes ---------------------------------------------------------------

@lru_cache(maxsize=32)
def _sieve(limit: int) -> np.ndarray:
    s = np.ones(limit + 1, np.bool_)
    s[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if s[p]:
            s[p * p:: p] = False
    return s


def primes_upto(limit: int) -> list[int]:
    if limit < 2:
        return []
    return [int(p) for p in np.nonzero(_sieve(limit))[0]]


# deterministic Miller-Rabin witness set, valid below 3.3 * 10^24
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_LIMIT = 3317044064679887385961981


def is_prime(n: int) -> bool:
    """Deterministic for n below 3.3e24; larger inputs are rejected."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    if n >= _MR_LIMIT:
        raise ValueError(f"no deterministic primality certificate for {n}")
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def bertrand_prime(m: int) -> int:
    """The largest prime p with m/2 < p <= m (exists for every m >= 7)."""
    if m < 7:
        raise ValueError("Bertrand interval (m/2, m] is guaranteed only for m >= 7")
    for p in range(m, m // 2, -1):
        if is_prime(p):
            return p
    raise AssertionError(f"no prime in ({m}/2, {m}]")  # unreachable for m >= 7


def bertrand_scan(lo: int = 7, hi: int = 10 ** 5) -> bool:
    """Vectorized existence check over the whole range [lo, hi]."""
    sieve = _sieve(hi)
    cum = np.concatenate(([0], np.cumsum(sieve)))  # cum[k] = pi(k-1) + ...
    ms = np.arange(lo, hi + 1)
    counts = cum[ms + 1] - cum[ms // 2 + 1]  # primes in (m/2, m]
    return bool((counts >= 1).all())


# -- factorial valuations ---------------------------------------------------

def legendre_valuation(n: int, p: int) -> int:
    """v_p(n!) = sum of floor(n / p^i); always <= n/(p-1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    total = 0
    q = p
    while q <= n:
        total += n // q
        q *= p
    return total


def legendre_bound_scan(n_max: int = 10 ** 4) -> bool:
    """v_p(n!) * (p-1) <= n for every n <= n_max and prime p <= n."""
    ns = np.arange(n_max + 1, dtype=np.int64)
    for p in primes_upto(n_max):
        v = np.zeros(n_max + 1, np.int64)
        q = p
        while q <= n_max:
            v += ns // q
            q *= p
        if not (v * (p - 1) <= ns).all():
            return False
    return True


# -- gcd classification ------------------------------------------------------

class GcdCase(Enum):
    NORMAL = "NORMAL"
    FOUR_K_PLUS_3 = "FOUR_K_PLUS_3"


def classify_gcd_pair(n: int) -> tuple[int, GcdCase]:
    """gcd(n-1, n(n-3)/2): the gcd is 2 exactly when n = 4k+3, else 1."""
    if n < 5:
        raise ValueError("classification holds for n >= 5")
    g = math.gcd(n - 1, n * (n - 3) // 2)
    return g, (GcdCase.FOUR_K_PLUS_3 if n % 4 == 3 else GcdCase.NORMAL)


# -- factorization -----------------------------------------------------------

@dataclass(frozen=True)
class Factorization:
    value: int
    factors: dict[int, int]

    def __post_init__(self):
        prod = 1
        for p, e in self.factors.items():
            prod *= p ** e
        if prod != self.value:
            raise ValueError("factor map does not multiply back to the value")


class IncompleteFactorizationError(Exception):
    """The cofactor left after trial division could not be certified prime."""


def factorize(value: int, trial_bound: int = 10 ** 5) -> Factorization:
    """Trial division by primes up to ``trial_bound``, then deterministic
    primality certification of the cofactor.  Raises
    IncompleteFactorizationError rather than returning a wrong answer."""
    if value < 1:
        raise ValueError("value must be >= 1")
    factors: dict[int, int] = {}
    v = value
    for p in primes_upto(trial_bound):
        if p * p > v:
            break
        while v % p == 0:
            factors[p] = factors.get(p, 0) + 1
            v //= p
    if v > 1:
        try:
            cofactor_prime = is_prime(v)
        except ValueError:
            raise IncompleteFactorizationError(
                f"cofactor {v} of {value} exceeds the certification range")
        if not cofactor_prime:
            raise IncompleteFactorizationError(
                f"composite cofactor {v} of {value} beyond trial bound {trial_bound}")
        factors[v] = factors.get(v, 0) + 1
    return Factorization(value, factors)


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of composite n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    for c in range(1, 50):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed to split {n}")


def factorize_complete(value: int) -> Factorization:
    """Full factorization with rho splitting; for internal scans whose
    inputs stay far below the primality certification range."""
    if value < 1:
        raise ValueError("value must be >= 1")
    factors: dict[int, int] = {}
    stack = [value] if value > 1 else []
    while stack:
        v = stack.pop()
        if v == 1:
            continue
        for p in (2, 3, 5, 7, 11, 13):
            while v % p == 0:
                factors[p] = factors.get(p, 0) + 1
                v //= p
        if v == 1:
            continue
        if is_prime(v):
            factors[v] = factors.get(v, 0) + 1
        else:
            d = _pollard_rho(v)
            stack.extend((d, v // d))
    return Factorization(value, factors)


def divisors(fact: Factorization) -> list[int]:
    out = [1]
    for p, e in sorted(fact.factors.items()):
        out = [d * p ** k for d in out for k in range(e + 1)]
    return sorted(out)


# -- named degree polynomials -------------------------------------------------

def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} not divisible by {den}")
    return q


@dataclass(frozen=True)
class DegreePolynomial:
    """A named integer-valued polynomial in n with the threshold from
    which it is known to be increasing."""

    name: str
    evaluate: Callable[[int], int]
    monotone_from: int

    def __call__(self, n: int) -> int:
        return self.evaluate(n)


ALT_MINIMAL: dict[int, DegreePolynomial] = {
    1: DegreePolynomial("alt_d1", lambda n: n - 1, 2),
    2: DegreePolynomial("alt_d2", lambda n: _exact_div(n * (n - 3), 2), 4),
    3: DegreePolynomial("alt_d3", lambda n: _exact_div((n - 1) * (n - 2), 2), 3),
    4: DegreePolynomial("alt_d4", lambda n: _exact_div(n * (n - 1) * (n - 5), 6), 6),
    5: DegreePolynomial("alt_d5", lambda n: _exact_div((n - 1) * (n - 2) * (n - 3), 6), 4),
    6: DegreePolynomial("alt_d6", lambda n: _exact_div(n * (n - 2) * (n - 4), 3), 5),
    7: DegreePolynomial("alt_d7", lambda n: _exact_div(n * (n - 1) * (n - 2) * (n - 7), 24), 8),
    8: DegreePolynomial("alt_d8", lambda n: _exact_div((n - 1) * (n - 2) * (n - 3) * (n - 4), 24), 5),
    9: DegreePolynomial("alt_d9", lambda n: _exact_div(n * (n - 1) * (n - 4) * (n - 5), 12), 6),
    10: DegreePolynomial("alt_d10", lambda n: _exact_div(n * (n - 1) * (n - 3) * (n - 6), 8), 7),
    11: DegreePolynomial("alt_d11", lambda n: _exact_div(n * (n - 2) * (n - 3) * (n - 5), 8), 6),
    12: DegreePolynomial("alt_d12", lambda n: _exact_div(n * (n - 1) * (n - 2) * (n - 3) * (n - 9), 120), 10),
}

SYM_D13 = DegreePolynomial(
    "sym_d13", lambda n: _exact_div((n - 1) * (n - 2) * (n - 3) * (n - 4) * (n - 5), 120), 6)
SYM_D14 = DegreePolynomial(
    "sym_d14", lambda n: _exact_div(n * (n - 1) * (n - 2) * (n - 4) * (n - 8), 30), 9)


def min_n_satisfying(poly: DegreePolynomial, bound: int, n_start: int) -> int:
    """Least n >= n_start with poly(n) >= bound (poly increasing there)."""
    if n_start < poly.monotone_from:
        raise ValueError(f"{poly.name} is only known increasing from {poly.monotone_from}")
    n = n_start
    while poly(n) < bound:
        n += 1
    return n


def integer_solutions(poly: DegreePolynomial, rhs: int, lo: int, hi: int) -> list[int]:
    """All integers n in [lo, hi] with poly(n) == rhs."""
    if lo > hi:
        raise ValueError("empty range")
    return [n for n in range(lo, hi + 1) if poly(n) == rhs]


# -- specific scans ------------------------------------------------------------

def eq5_solutions(lo: int, hi: int) -> list[tuple[int, int, int]]:
    """All (n, eps, a) with n-1 = 2^(eps + a + floor((n-2)/2)), eps in {0,1},
    a >= 0, over lo <= n <= hi.  Empty for any range inside n >= 14."""
    if lo < 2:
        raise ValueError("n range must start at 2 or above")
    out = []
    for n in range(lo, hi + 1):
        v = n - 1
        if v & (v - 1):
            continue  # not a power of two
        gap = (v.bit_length() - 1) - (n - 2) // 2
        if gap == 0:
            out.append((n, 0, 0))
        elif gap >= 1:
            out.append((n, 0, gap))
            out.append((n, 1, gap - 1))
    return out


def verify_lemma41b(p_bound: int = 50, a_bound: int = 12) -> LemmaVerdict:
    """Exhaustively enumerate s(n-1) = p^a - 1 with p^b | n (b = a or a/2)
    and confirm every solution has n = p^a or n = p^b."""
    start = time.perf_counter()
    witnesses = []
    solutions = 0
    ok = True
    for p in primes_upto(p_bound):
        for a in range(1, a_bound + 1):
            big = p ** a - 1
            divs = divisors(factorize_complete(big))
            bs = [a] + ([a // 2] if a % 2 == 0 else [])
            for b in bs:
                pb = p ** b
                for d in divs:  # d = n - 1, s = big // d
                    n = d + 1
                    if n % pb:
                        continue
                    solutions += 1
                    if n != p ** a and n != pb:
                        ok = False
                        witnesses.append(Witness(
                            input=f"p={p} a={a} b={b} s={big // d} n={n}",
                            expected=f"n in {{{p ** a}, {pb}}}",
                            actual=f"n={n}"))
    ms = int((time.perf_counter() - start) * 1000)
    params = {"p_bound": p_bound, "a_bound": a_bound, "solutions": solutions}
    return LemmaVerdict("lemma41b", params, Status.PASS if ok else Status.FAIL,
                        witnesses, ms)
