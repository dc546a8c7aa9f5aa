"""Class groups of real quadratic discriminants from indefinite binary
quadratic forms.

This is the verification oracle of the package: narrow class groups are
computed from first principles by enumerating reduced forms, partitioning
them into rho-cycles, and resolving the abelian group structure through
Gauss composition.  Equivalence of forms is always decided by cycle
membership, never by floating-point invariants.

A form (a, b, c) of discriminant D = b^2 - 4ac > 0 (nonsquare) is reduced
when 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .arith import _xgcd, factorize, spf_table


class InvalidDiscriminant(ValueError):
    """Not a positive nonsquare discriminant = 0 or 1 (mod 4)."""


class DiscriminantMismatch(ValueError):
    """Composition of forms with different discriminants."""


class IndefiniteForm(NamedTuple):
    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def conjugate(self) -> "IndefiniteForm":
        return IndefiniteForm(self.a, -self.b, self.c)

    def __repr__(self) -> str:
        return f"({self.a},{self.b},{self.c})"


def _check_discriminant(D: int) -> int:
    if D <= 0 or D % 4 not in (0, 1):
        raise InvalidDiscriminant(f"{D} is not a valid positive discriminant")
    s = math.isqrt(D)
    if s * s == D:
        raise InvalidDiscriminant(f"{D} is a perfect square")
    return s


def _is_reduced(a: int, b: int, c: int, D: int, s: int) -> bool:
    if b <= 0 or b > s:
        return False
    t = 2 * abs(a)
    if (t + b) * (t + b) <= D:  # need sqrt(D) < 2|a| + b
        return False
    if t > b and (t - b) * (t - b) >= D:  # need 2|a| - b < sqrt(D)
        return False
    return True


def _rho(a: int, b: int, c: int, D: int, s: int) -> tuple[int, int, int]:
    """One reduction step (a,b,c) -> (c, r, (r*r - D) // (4c))."""
    m = abs(c)
    if m > s:
        # unique r = -b (mod 2m) in (-m, m]
        r = (-b) % (2 * m)
        if r > m:
            r -= 2 * m
    else:
        # unique r = -b (mod 2m) in (s - 2m, s]
        r = s - (s + b) % (2 * m)
    return c, r, (r * r - D) // (4 * c)


def reduce_form(f: IndefiniteForm) -> IndefiniteForm:
    """A reduced form properly equivalent to f (finitely many rho steps)."""
    D = f.discriminant
    s = _check_discriminant(D)
    a, b, c = f
    guard = 0
    while not _is_reduced(a, b, c, D, s):
        a, b, c = _rho(a, b, c, D, s)
        guard += 1
        if guard > 10_000_000:  # cannot happen for valid input
            raise RuntimeError(f"reduction did not terminate for {f}")
    return IndefiniteForm(a, b, c)


def _divisors_from_spf(n: int, spf: list[int]) -> list[int]:
    divs = [1]
    while n > 1:
        p = spf[n]
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        divs += [d * p**k for d in divs for k in range(1, e + 1)]
    return divs


def _reduced_forms_raw(D: int, s: int) -> list[tuple[int, int, int]]:
    """All reduced forms of discriminant D, by divisor enumeration per b."""
    spf = spf_table(D // 4 + 1)
    out = []
    b = 2 - (D & 1)
    while b <= s:
        n = (D - b * b) // 4
        lo = s - b + 1  # window: lo <= 2a <= hi
        hi = s + b
        if n < len(spf):
            divs = _divisors_from_spf(n, spf)
        else:  # pragma: no cover - only for very large ad-hoc discriminants
            divs = [d for d, _ in _all_divisors_slow(n)]
        for a in divs:
            t = 2 * a
            if lo <= t <= hi:
                c = -(n // a)
                out.append((a, b, c))
                out.append((-a, b, -c))
        b += 2
    return out


def _all_divisors_slow(n: int):
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return [(d, None) for d in sorted(divs)]


def reduced_forms(D: int) -> list[IndefiniteForm]:
    """Every reduced indefinite form of discriminant D, duplicate-free."""
    s = _check_discriminant(D)
    return sorted(IndefiniteForm(*f) for f in _reduced_forms_raw(D, s))


def _principal_raw(D: int, s: int) -> tuple[int, int, int]:
    b0 = D & 1
    f = (1, b0, (b0 * b0 - D) // 4)
    a, b, c = f
    while not _is_reduced(a, b, c, D, s):
        a, b, c = _rho(a, b, c, D, s)
    return a, b, c


def _solve_linear(a: int, b: int, m: int) -> tuple[int, int]:
    """Solve a*x = b (mod m); returns (x0, m/g) with solutions x0 + k*(m/g)."""
    g, inv, _ = _xgcd(a, m)
    q, r = divmod(b, g)
    if r:
        raise ArithmeticError("linear congruence has no solution")
    return q * inv % m, m // g


def _compose_raw(
    f1: tuple[int, int, int], f2: tuple[int, int, int], D: int, s: int
) -> tuple[int, int, int]:
    """Reduced Gauss composition via Bezout solves (Dirichlet united forms)."""
    # representatives with positive leading coefficient compose cleanly
    if f1[0] < 0:
        f1 = _rho(*f1, D, s)
    if f2[0] < 0:
        f2 = _rho(*f2, D, s)
    a1, b1, c1 = f1
    a2, b2, c2 = f2
    g = (b1 + b2) // 2
    h = (b2 - b1) // 2
    w = math.gcd(math.gcd(a1, a2), g)
    s_ = a1 // w
    t_ = a2 // w
    u_ = g // w
    mu, nu = _solve_linear(t_ * u_, h * u_ + s_ * c1, s_ * t_)
    lam, _ = _solve_linear(t_ * nu, h - t_ * mu, s_) if s_ > 1 else (0, 1)
    k = mu + nu * lam
    ell = (k * t_ - h) // s_
    m = (t_ * u_ * k - h * u_ - c1 * s_) // (s_ * t_)
    A = s_ * t_
    B = w * u_ - (k * t_ + ell * s_)
    C = k * ell - w * m
    a, b, c = A, B, C
    while not _is_reduced(a, b, c, D, s):
        a, b, c = _rho(a, b, c, D, s)
    return a, b, c


def compose(f: IndefiniteForm, g: IndefiniteForm) -> IndefiniteForm:
    """A reduced representative of the Gauss composite of the two classes."""
    D = f.discriminant
    if g.discriminant != D:
        raise DiscriminantMismatch(f"{f} and {g} have different discriminants")
    s = _check_discriminant(D)
    return IndefiniteForm(*_compose_raw(tuple(f), tuple(g), D, s))


# --- groups ---------------------------------------------------------------


@dataclass(frozen=True)
class Abelian2Group:
    """A finite abelian 2-group as a non-decreasing list of 2-power factors."""

    factors: tuple[int, ...]

    def __post_init__(self) -> None:
        last = 2
        for f in self.factors:
            if f < 2 or f & (f - 1):
                raise ValueError("factors must be powers of 2, each >= 2")
            if f < last:
                raise ValueError("factors must be non-decreasing")
            last = f

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    def is_elementary(self) -> bool:
        return all(f == 2 for f in self.factors)

    def __repr__(self) -> str:
        if not self.factors:
            return "1"
        return " x ".join(f"Z/{f}" for f in self.factors)


def _cycle_partition(forms: list[tuple[int, int, int]], D: int, s: int):
    """Partition reduced forms into rho-cycles: (cycle_of_form, n_cycles)."""
    cycle_of: dict[tuple[int, int, int], int] = {}
    n = 0
    for f in forms:
        if f in cycle_of:
            continue
        cycle_of[f] = n
        g = _rho(*f, D, s)
        while g != f:
            cycle_of[g] = n
            g = _rho(*g, D, s)
        n += 1
    return cycle_of, n


class FormClassGroup:
    """The narrow (or ordinary) form class group of a real discriminant.

    classes holds one canonical reduced representative per group element;
    composition and all structure questions are answered through the
    cycle-membership dictionary.
    """

    def __init__(self, discriminant, variant, cycle_of, reps, members):
        self.discriminant = discriminant
        self.variant = variant
        self._s = math.isqrt(discriminant)
        self._cycle_of = cycle_of  # reduced form -> narrow cycle id
        self._reps = reps  # narrow cycle id -> canonical reduced form
        # members: element position -> narrow cycle id (quotients collapse)
        self._members = members
        self._pos_of_cycle = {}
        self.classes = tuple(IndefiniteForm(*reps[c]) for c in members)
        self.order = len(members)
        self._mul_cache: dict[tuple[int, int], int] = {}
        self._structure = None

    def _position(self, cycle_id: int) -> int:
        return self._pos_of_cycle[cycle_id]

    def class_index(self, f: IndefiniteForm) -> int:
        """Element position of the class of f."""
        g = reduce_form(f)
        return self._position(self._cycle_of[tuple(g)])

    @property
    def identity(self) -> int:
        D = self.discriminant
        return self._position(self._cycle_of[_principal_raw(D, self._s)])

    def mul(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        key = (i, j)
        got = self._mul_cache.get(key)
        if got is None:
            D = self.discriminant
            h = _compose_raw(
                self._reps[self._members[i]], self._reps[self._members[j]], D, self._s
            )
            got = self._position(self._cycle_of[h])
            self._mul_cache[key] = got
        return got

    def power(self, i: int, n: int) -> int:
        out = self.identity
        base = i
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    def inverse(self, i: int) -> int:
        a, b, c = self._reps[self._members[i]]
        g = reduce_form(IndefiniteForm(a, -b, c))
        return self._position(self._cycle_of[tuple(g)])

    def element_order(self, i: int) -> int:
        e = self.identity
        if i == e:
            return 1
        n = 1
        j = i
        while j != e:
            j = self.mul(j, i)
            n += 1
        return n

    def torsion_count(self, k: int) -> int:
        """Number of classes x with x^k = identity."""
        e = self.identity
        return sum(1 for i in range(self.order) if self.power(i, k) == e)

    def two_rank(self) -> int:
        return (self.torsion_count(2)).bit_length() - 1

    @property
    def structure(self) -> tuple[int, ...]:
        """Invariant factors of the group (divisibility chain, ascending)."""
        if self._structure is None:
            self._structure = self._invariant_factors()
        return self._structure

    def _invariant_factors(self) -> tuple[int, ...]:
        h = self.order
        if h == 1:
            return ()
        parts: dict[int, list[int]] = {}
        for p, v in factorize(h):
            m = h // p**v
            # x -> x**m maps onto the p-Sylow subgroup, fibers of equal size
            hist = [0] * (v + 1)
            for i in range(self.order):
                z = self.power(i, m)
                k = 0
                e = self.identity
                while z != e:
                    z = self.power(z, p)
                    k += 1
                hist[k] += 1
            cum = 0
            counts = []
            for k in range(v + 1):
                cum += hist[k]
                counts.append(cum * p**v // h)
            # counts[k] = number of z in the p-Sylow with z^(p^k) = 1; the
            # count of cyclic factors with exponent >= k is
            # log_p(counts[k]/counts[k-1])
            partition = []
            for k in range(1, v + 1):
                r = counts[k] // counts[k - 1]
                nk = 0
                while r > 1:
                    r //= p
                    nk += 1
                partition.append(nk)
            n_factors = partition[0]
            factor_exps = [
                sum(1 for nk in partition if nk > idx) for idx in range(n_factors)
            ]
            parts[p] = sorted(factor_exps, reverse=True)
        width = max(len(v) for v in parts.values())
        factors = []
        for i in range(width):
            f = 1
            for p, exps in parts.items():
                if i < len(exps):
                    f *= p ** exps[i]
            factors.append(f)
        return tuple(sorted(factors))

    def __repr__(self) -> str:
        desc = " x ".join(f"Z/{f}" for f in self.structure) or "1"
        return (
            f"FormClassGroup(D={self.discriminant}, {self.variant}, "
            f"order={self.order}, {desc})"
        )


def narrow_class_group(D: int) -> FormClassGroup:
    """The narrow class group of discriminant D as cycle classes."""
    s = _check_discriminant(D)
    forms = [
        f
        for f in _reduced_forms_raw(D, s)
        if math.gcd(math.gcd(f[0], f[1]), f[2]) == 1
    ]
    cycle_of, n = _cycle_partition(forms, D, s)
    reps: list[tuple[int, int, int] | None] = [None] * n
    for f, cid in cycle_of.items():
        if reps[cid] is None or f < reps[cid]:
            reps[cid] = f
    grp = FormClassGroup(D, "narrow", cycle_of, reps, list(range(n)))
    grp._pos_of_cycle = {c: c for c in range(n)}
    return grp


def _sign_class_raw(D: int, s: int) -> tuple[int, int, int]:
    """Reduced representative of -1 times the principal form."""
    b0 = D & 1
    f = (-1, b0, (D - b0 * b0) // 4)
    a, b, c = f
    while not _is_reduced(a, b, c, D, s):
        a, b, c = _rho(a, b, c, D, s)
    return a, b, c


def sign_class_is_principal(D: int) -> bool:
    """Whether the class of a form representing -1 is the principal class."""
    s = _check_discriminant(D)
    sign = _sign_class_raw(D, s)
    f = _principal_raw(D, s)
    g = _rho(*f, D, s)
    if sign == f:
        return True
    while g != f:
        if g == sign:
            return True
        g = _rho(*g, D, s)
    return False


def ordinary_class_group(D: int, unit_norm: int) -> FormClassGroup:
    """The ordinary class group: the narrow group, or its quotient by the
    sign class when the fundamental unit has norm +1."""
    if unit_norm not in (-1, 1):
        raise ValueError("unit_norm must be -1 or +1")
    narrow = narrow_class_group(D)
    if unit_norm == -1:
        return narrow
    s = narrow._s
    sign_cycle = narrow._cycle_of[_sign_class_raw(D, s)]
    ident_cycle = narrow._members[narrow.identity]
    if sign_cycle == ident_cycle:
        # the "quotient" by a trivial subgroup; cannot occur when the norm
        # really is +1, but keep the group honest rather than halving
        return narrow
    # cosets \{c, c*sign\}
    pos_of_cycle: dict[int, int] = {}
    members: list[int] = []
    for cid in range(len(narrow._reps)):
        if cid in pos_of_cycle:
            continue
        other = _compose_raw(narrow._reps[cid], narrow._reps[sign_cycle], D, s)
        other_cid = narrow._cycle_of[other]
        rep_cid = min(cid, other_cid)
        pos = len(members)
        pos_of_cycle[cid] = pos
        pos_of_cycle[other_cid] = pos
        members.append(rep_cid)
    grp = FormClassGroup(D, "ordinary", narrow._cycle_of, narrow._reps, members)
    grp._pos_of_cycle = pos_of_cycle
    return grp


def two_sylow(g: FormClassGroup) -> Abelian2Group:
    """The 2-Sylow subgroup of a class group, as invariant factors."""
    factors = []
    for f in g.structure:
        two_part = f & (-f)  # largest power of 2 dividing f
        if two_part > 1:
            factors.append(two_part)
    return Abelian2Group(tuple(sorted(factors)))


# --- lean per-discriminant summary for the verification sweeps ------------


class ClassGroupSummary(NamedTuple):
    discriminant: int
    h_narrow: int
    two_torsion_narrow: int  # classes c with c^2 = 1 in the narrow group
    four_torsion_narrow: int  # classes c with c^4 = 1
    sign_is_principal: bool
    h_ordinary: int
    two_torsion_ordinary: int
    four_torsion_ordinary: int

    @property
    def narrow_two_rank(self) -> int:
        return self.two_torsion_narrow.bit_length() - 1

    @property
    def ordinary_two_rank(self) -> int:
        return self.two_torsion_ordinary.bit_length() - 1

    @property
    def s2_count(self) -> int:
        """#(2A+/4A+) = #A+[4] / #A+[2]."""
        return self.four_torsion_narrow // self.two_torsion_narrow

    @property
    def narrow_elementary(self) -> bool:
        return self.four_torsion_narrow == self.two_torsion_narrow

    @property
    def ordinary_elementary(self) -> bool:
        return self.four_torsion_ordinary == self.two_torsion_ordinary

    def two_part(self, variant: str = "ordinary") -> int:
        """Order of the 2-Sylow subgroup (largest 2-power dividing h)."""
        h = self.h_ordinary if variant == "ordinary" else self.h_narrow
        return h & -h


@lru_cache(maxsize=None)
def class_group_summary(D: int) -> ClassGroupSummary:
    """Torsion counts of the narrow group and its sign-class quotient.

    One reduced-form enumeration plus O(h) compositions per discriminant;
    cached, since the acceptance sweeps revisit discriminants.
    """
    s = _check_discriminant(D)
    forms = [
        f
        for f in _reduced_forms_raw(D, s)
        if math.gcd(math.gcd(f[0], f[1]), f[2]) == 1
    ]
    cycle_of, n = _cycle_partition(forms, D, s)
    reps: list[tuple[int, int, int] | None] = [None] * n
    for f, cid in cycle_of.items():
        r = reps[cid]
        if r is None or f < r:
            reps[cid] = f
    ident = cycle_of[_principal_raw(D, s)]
    sign = cycle_of[_sign_class_raw(D, s)]
    two_n = 0
    four_n = 0
    two_o = 0
    four_o = 0
    sign_set = (ident, sign)
    for cid in range(n):
        sq = cycle_of[_compose_raw(reps[cid], reps[cid], D, s)]
        if sq == ident:
            two_n += 1
        if sq in sign_set:
            two_o += 1
        sq2 = cycle_of[_compose_raw(reps[sq], reps[sq], D, s)]
        if sq2 == ident:
            four_n += 1
        if sq2 in sign_set:
            four_o += 1
    if sign == ident:
        h_ord, two_o, four_o = n, two_n, four_n
    else:
        h_ord, two_o, four_o = n // 2, two_o // 2, four_o // 2
    return ClassGroupSummary(D, n, two_n, four_n, sign == ident, h_ord, two_o, four_o)
