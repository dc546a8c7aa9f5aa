"""Genus theory for real quadratic fields.

The narrow genus field is generated by the square roots of the prime
discriminants dividing D_K; the real genus field is its totally real
index-2 subfield.  Both are represented as F2-bases of square-free
radicands, so field identity is span equality and no algebraic number
arithmetic is needed.  The 2-ranks of the ordinary and narrow class groups
drop out as basis sizes, and the genus formula gives the order of the
subgroup of A(K) fixed by Gal(K/Q).
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import factorize, is_prime
from .quadfield import QuadraticField, minus_one_is_norm, quadratic_field


class EvenPrime(ValueError):
    """p = 2 has no starred value; the 2-part is a separate discriminant."""


class NotFundamental(ValueError):
    """The integer is not a fundamental discriminant."""


def starred_prime(p: int) -> int:
    """p for p = 1 (mod 4), -p for p = 3 (mod 4)."""
    if p == 2:
        raise EvenPrime("starred primes are odd")
    if p < 3 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    return p if p % 4 == 1 else -p


def is_fundamental(D: int) -> bool:
    """Whether D is the discriminant of a quadratic field."""
    if D == 1 or D == 0:
        return False
    if D % 4 == 1:
        return all(e == 1 for _, e in factorize(abs(D)))
    if D % 4 != 0:
        return False
    m = D // 4
    if m % 4 == 1:
        return False
    return all(e == 1 for p, e in factorize(abs(m)) if p != 2) and m % 4 in (2, 3)


def prime_discriminants(D: int) -> list[int]:
    """The unique factorization of a fundamental D into prime discriminants.

    Odd p | D contributes p* = (+/-)p; when 2 | D the residual factor is one
    of -4, 8, -8 and is appended last.
    """
    if not is_fundamental(D):
        raise NotFundamental(f"{D} is not a fundamental discriminant")
    out = [starred_prime(p) for p, _ in factorize(abs(D)) if p != 2]
    prod = 1
    for q in out:
        prod *= q
    r, rem = divmod(D, prod)
    if rem:
        raise NotFundamental(f"{D} is not divisible by its odd part {prod}")
    if r != 1:
        if r not in (-4, 8, -8):
            raise NotFundamental(f"residual 2-part {r} of {D} is not -4, 8, -8")
        out.append(r)
    return out


def _radicand(prime_disc: int) -> int:
    """Square-free kernel generating the same quadratic field."""
    return {-4: -1, 8: 2, -8: -2}.get(prime_disc, prime_disc)


@dataclass(frozen=True)
class GenusField:
    """A multiquadratic field Q(sqrt(r1), ..., sqrt(rt)) over Q."""

    radicands: tuple[int, ...]
    degree_over_base: int
    variant: str  # "narrow" or "real"

    def __repr__(self) -> str:
        gens = ", ".join(f"sqrt({r})" for r in self.radicands)
        return f"Q({gens})"


def _support_vector(r: int) -> frozenset:
    """F2 support of a square-free radicand: sign bit plus prime set."""
    sup = set()
    if r < 0:
        sup.add(-1)
        r = -r
    for p, _ in factorize(r):
        sup.add(p)
    return frozenset(sup)


def f2_span(radicands) -> frozenset:
    """All square-free products of subsets, as support vectors."""
    span = {frozenset()}
    for r in radicands:
        v = _support_vector(r)
        span |= {s ^ v for s in span}
    return frozenset(span)


def same_span(a: GenusField, b: GenusField) -> bool:
    return f2_span(a.radicands) == f2_span(b.radicands)


def _field_of(K) -> QuadraticField:
    return K if isinstance(K, QuadraticField) else quadratic_field(K)


def narrow_genus_field(K) -> GenusField:
    """Generated by the square roots of all prime discriminants of D_K."""
    K = _field_of(K)
    rads = tuple(_radicand(q) for q in prime_discriminants(K.discriminant))
    return GenusField(rads, 2 ** len(rads), "narrow")


def genus_field(K) -> GenusField:
    """The totally real subfield of the narrow genus field.

    Positive radicands survive; negative radicands are replaced by their
    pairwise products with the first negative one.  [K_G : Q] = 2^(t-1)
    when a negative radicand exists, else 2^t.
    """
    K = _field_of(K)
    narrow = narrow_genus_field(K)
    pos = [r for r in narrow.radicands if r > 0]
    neg = [r for r in narrow.radicands if r < 0]
    if neg:
        anchor = neg[0]
        pos += [anchor * r for r in neg[1:]]
    return GenusField(tuple(pos), 2 ** len(pos), "real")


def narrow_genus_rank(K) -> int:
    """2-rank of the narrow class group: t - 1."""
    return len(narrow_genus_field(K).radicands) - 1


def genus_rank(K) -> int:
    """2-rank of the ordinary class group: log2 [K_G : K]."""
    return len(genus_field(K).radicands) - 1


def genus_fixed_order(K) -> int:
    """Order of the subgroup of A(K) fixed by Gal(K/Q): 2^(t-1) / n.

    t counts the ramified places of Q in K (the prime divisors of D_K) and
    n = [E(Q) : E(Q) cap N(K^x)] is 1 when -1 is a local norm everywhere,
    else 2.
    """
    K = _field_of(K)
    t = len(factorize(K.discriminant))
    n = 1 if minus_one_is_norm(K) else 2
    order2 = 2 ** (t - 1)
    if order2 % n:
        raise ValueError(f"genus formula gives non-integral order for {K}")
    return order2 // n
