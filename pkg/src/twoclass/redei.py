"""Redei-Reichardt counting for narrow 2-class groups.

S1(D) collects the unordered coprime splittings D = D1 * D2 into two
discriminants; its size is #(A+/2A+) = 2^(t-1).  S2(D) keeps (1, D) plus
the splittings whose two halves are mutual quadratic residues (the
character conditions below); its size is #(2A+/4A+), so A+ is 2-elementary
exactly when #S2 = 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import as_factored, factorize, kronecker
from .genus import prime_discriminants


@dataclass(frozen=True)
class Decomposition:
    """D = D1 * D2 with each half a discriminant and |D1| < |D2|."""

    D1: int
    D2: int

    def as_pair(self) -> tuple[int, int]:
        return (self.D1, self.D2)


def s1_decompositions(D: int) -> list[Decomposition]:
    """All splittings of D into two coprime products of prime discriminants.

    Includes (1, D); there are exactly 2^(t-1) splittings for t prime
    discriminants.  Normalized so |D1| < |D2|, sorted by |D1| then D1.
    """
    discs = prime_discriminants(D)
    t = len(discs)
    seen = set()
    out = []
    for mask in range(1 << t):
        d1 = 1
        for i in range(t):
            if mask >> i & 1:
                d1 *= discs[i]
        d2 = D // d1
        if abs(d1) > abs(d2):
            d1, d2 = d2, d1
        if (d1, d2) not in seen:
            seen.add((d1, d2))
            out.append(Decomposition(d1, d2))
    out.sort(key=lambda p: (abs(p.D1), p.D1))
    return out


def _residue_everywhere(d1: int, d2: int) -> bool:
    """kronecker(d1, p) = +1 for every prime p | d2 (p = 2 included)."""
    return all(kronecker(d1, p) == 1 for p, _ in factorize(abs(d2)))


def s2_decompositions(D: int) -> list[Decomposition]:
    """(1, D) together with the splittings passing both character tests."""
    out = []
    for dec in s1_decompositions(D):
        if dec.D1 == 1:
            out.append(dec)
            continue
        if _residue_everywhere(dec.D1, dec.D2) and _residue_everywhere(
            dec.D2, dec.D1
        ):
            out.append(dec)
    return out


def narrow_two_elementary(D: int) -> bool:
    """Whether A+(K) is 2-elementary, i.e. #S2(D) = 1."""
    return len(s2_decompositions(D)) == 1


def elementary_transfer_applies(d) -> bool:
    """Whether d has a prime divisor = 3 (mod 4).

    Under that hypothesis the fundamental unit has norm +1, the narrow
    class number is twice the ordinary one, and A(K) is 2-elementary iff
    A+(K) is.
    """
    return any(p % 4 == 3 for p in as_factored(d).primes)
