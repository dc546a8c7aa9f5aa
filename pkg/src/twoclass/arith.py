"""Exact elementary number theory kernel.

Deterministic primality, square-free factorization, Kronecker symbols,
Chinese remaindering, local Hilbert symbols and the quartic residue
obstruction test for 2 modulo primes p = 1 (mod 8).  Everything here is
integer-exact; there is no floating point anywhere in this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class NotSquarefree(ValueError):
    """A squared prime divides the input."""


class UndefinedSymbol(ValueError):
    """The Kronecker symbol (0/0) has no value."""


class NonCoprimeModuli(ValueError):
    """Two CRT moduli share a common factor."""


class WrongResidueClass(ValueError):
    """The input prime lies in the wrong class for the requested test."""


# deterministic witness set for n < 2**64 (Sorenson-Webster)
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_LIMIT = 1 << 64

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Exact primality for 0 <= n < 2**64 (deterministic Miller-Rabin)."""
    if n < 0:
        raise ValueError("primality is defined for nonnegative integers")
    if n >= _MR_LIMIT:
        # refuse to answer probabilistically
        raise ValueError("deterministic witness set only covers n < 2**64")
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# --- factorization -------------------------------------------------------

_spf: list[int] = []


def spf_table(limit: int) -> list[int]:
    """Smallest-prime-factor sieve, grown on demand and kept module-global."""
    global _spf
    if len(_spf) <= limit:
        size = max(limit + 1, 2 * len(_spf), 1 << 12)
        tbl = list(range(size))
        for p in range(2, math.isqrt(size - 1) + 1):
            if tbl[p] == p:
                for q in range(p * p, size, p):
                    if tbl[q] == q:
                        tbl[q] = p
        _spf = tbl
    return _spf


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of composite odd n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    seed = 1
    while True:
        seed += 1
        x = seed
        y = x
        c = seed
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


_TRIAL_BOUND = 10**6


def factorize(n: int) -> list[tuple[int, int]]:
    """Sorted prime factorization [(p, e), ...] of n >= 1."""
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    out: dict[int, int] = {}
    if n < len(_spf):
        while n > 1:
            p = _spf[n]
            out[p] = out.get(p, 0) + 1
            n //= p
        return sorted(out.items())
    p = 2
    while p * p <= n and p <= _TRIAL_BOUND:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return sorted(out.items())


@dataclass(frozen=True)
class FactoredSquarefree:
    """A square-free positive integer together with its prime divisors."""

    value: int
    primes: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.value < 1:
            raise ValueError("value must be positive")
        prod = 1
        last = 1
        for p in self.primes:
            if p <= last:
                raise ValueError("primes must be strictly increasing")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            last = p
            prod *= p
        if prod != self.value:
            raise NotSquarefree(f"{self.value} != product of {self.primes}")

    def __int__(self) -> int:
        return self.value


def factor_squarefree(n: int) -> FactoredSquarefree:
    """Factor square-free n >= 1, rejecting inputs with a squared prime."""
    fac = factorize(n)
    for p, e in fac:
        if e > 1:
            raise NotSquarefree(f"{p}**{e} divides {n}")
    return FactoredSquarefree(n, tuple(p for p, _ in fac))


def as_factored(d) -> FactoredSquarefree:
    """Coerce an int (or pass through a FactoredSquarefree)."""
    if isinstance(d, FactoredSquarefree):
        return d
    return factor_squarefree(int(d))


def squarefree_range(lo: int, hi: int):
    """Yield FactoredSquarefree for every square-free d with lo <= d < hi."""
    if hi > lo:
        spf = spf_table(hi)
        for n in range(max(lo, 1), hi):
            m = n
            primes = []
            ok = True
            while m > 1:
                p = spf[m]
                m //= p
                if m % p == 0:
                    ok = False
                    break
                primes.append(p)
            if ok:
                yield FactoredSquarefree(n, tuple(primes))


# --- symbols --------------------------------------------------------------


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n) with the standard conventions at 2, -1 and 0."""
    if a == 0 and n == 0:
        raise UndefinedSymbol("(0/0) is undefined")
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    if n % 2 == 0:
        if a % 2 == 0:
            return 0
        t = 0
        while n % 2 == 0:
            n //= 2
            t += 1
        if t % 2 == 1 and a % 8 in (3, 5):
            result = -result
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


@dataclass(frozen=True)
class ResidueClass:
    """residue mod modulus, normalized to 0 <= residue < modulus."""

    residue: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        if not 0 <= self.residue < self.modulus:
            raise ValueError("residue must satisfy 0 <= r < modulus")


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def crt(congruences: list[ResidueClass]) -> ResidueClass:
    """Combine congruences with pairwise coprime moduli into a single class."""
    r, m = 0, 1
    for cong in congruences:
        if math.gcd(m, cong.modulus) != 1:
            raise NonCoprimeModuli(
                f"modulus {cong.modulus} is not coprime to {m}"
            )
        _, inv, _ = _xgcd(m, cong.modulus)
        # r' = r + m * t with t = (residue - r)/m mod modulus
        t = (cong.residue - r) * inv % cong.modulus
        r = r + m * t
        m *= cong.modulus
        r %= m
    return ResidueClass(r, m)


def _two_adic_split(n: int) -> tuple[int, int]:
    """n = 2**e * u with u odd; returns (e, u)."""
    e = 0
    while n % 2 == 0:
        n //= 2
        e += 1
    return e, n


def hilbert_symbol(a: int, b: int, place) -> int:
    """Local Hilbert symbol (a,b) at a finite prime or at math.inf.

    Satisfies the product formula: over all places dividing 2ab oo the
    product of symbols is +1.
    """
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol requires nonzero arguments")
    if place == math.inf:
        return -1 if (a < 0 and b < 0) else 1
    p = int(place)
    if not is_prime(p):
        raise ValueError(f"{place} is not a prime or infinity")
    if p == 2:
        alpha, u = _two_adic_split(abs(a))
        beta, v = _two_adic_split(abs(b))
        u = u if a > 0 else -u
        v = v if b > 0 else -v
        eps_u = (u - 1) // 2
        eps_v = (v - 1) // 2
        omega_u = (u * u - 1) // 8
        omega_v = (v * v - 1) // 8
        e = eps_u * eps_v + alpha * omega_v + beta * omega_u
        return -1 if e % 2 else 1
    alpha = 0
    while a % p == 0:
        a //= p
        alpha += 1
    beta = 0
    while b % p == 0:
        b //= p
        beta += 1
    e = alpha * beta * ((p - 1) // 2)
    result = -1 if e % 2 else 1
    if beta % 2:
        result *= kronecker(a, p)
    if alpha % 2:
        result *= kronecker(b, p)
    return result


def two_power_residue_test(p: int) -> bool:
    """True iff 2**((p-1)/4) is NOT congruent to (-1)**((p-1)/8) mod p.

    This is the obstruction that knocks the first-layer 2-rank down by one
    when p = 1 (mod 8) divides the radicand; see biquad.first_layer_rank.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p % 8 != 1:
        raise WrongResidueClass(f"{p} != 1 (mod 8)")
    lhs = pow(2, (p - 1) // 4, p)
    rhs = p - 1 if ((p - 1) // 8) % 2 else 1
    return lhs != rhs
