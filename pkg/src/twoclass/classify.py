"""Headline classifiers and prediction reports.

Three classifiers read congruence and Legendre-symbol data off the prime
factorization of an odd square-free d:

* stable_rank_type: the three congruence patterns that are equivalent
  (given that the places above 2 are totally ramified in the first tower
  layer) to rank A(K) = rank A(K1) = 2 and rank A(K') = 3;
* structure_condition_ppqq: for d = p1 p2 q1 q2 with (5, 5, 7, 3) mod 8,
  the symbol conditions equivalent to A(K) = (Z/2)^2, A(K') = (Z/2)^3 and
  A(K1) = Z/2 + Z/4;
* structure_condition_qqqq: for d = q1 q2 q3 q4 with (7, 3, 3, 3) mod 8,
  nine sufficient symbol conditions for the same three structures.

predict() assembles ranks (genus theory and the first-layer rank formula),
structures (where a classifier fires), the Fukuda tower claim, and tension
flags; verify_against_oracle() replays every oracle-checkable claim
against the form class groups.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Optional

from .arith import (
    as_factored,
    is_prime,
    kronecker,
    squarefree_range,
    two_power_residue_test,
)
from .biquad import (
    biquad_field,
    first_layer_rank,
    hasse_unit_index,
    kuroda_order,
    structure_from_rank_and_order,
)
from .forms import (
    Abelian2Group,
    class_group_summary,
    ordinary_class_group,
    two_sylow,
)
from .genus import genus_rank, narrow_genus_rank
from .quadfield import discriminant, unit_norm


class OutOfTable(ValueError):
    """The discriminant does not have 3 or 4 prime divisors."""


class WrongShape(ValueError):
    """The factorization does not match the classifier's residue pattern."""


class NotFoundWithinBound(RuntimeError):
    """The progression scan exhausted its budget before finding a prime."""


class OracleRangeExceeded(ValueError):
    """A discriminant is too large for the form class group oracle."""


DEFAULT_ORACLE_LIMIT = 2_000_000


# --- field shapes (ramification patterns with 3 or 4 ramified primes) -----


@dataclass(frozen=True)
class FieldShape:
    ramified_prime_count: int
    pattern: tuple[str, ...]  # roles of the ramified primes, "2" / "p" / "q"
    d_mod_4: int
    table: int  # 1 for t = 3, 2 for t = 4
    descriptor: str

    def __repr__(self) -> str:
        return f"FieldShape({','.join(self.pattern)}; {self.descriptor})"


def shape_of(d) -> FieldShape:
    """The ramification pattern row for D_K with 3 or 4 prime divisors."""
    fs = as_factored(d)
    roles = []
    if fs.value % 4 != 1:
        roles.append("2")
    odd = [p for p in fs.primes if p != 2]
    roles += ["p" if p % 4 == 1 else "q" for p in odd]
    roles_sorted = tuple(sorted(roles, key=lambda r: {"2": 0, "p": 1, "q": 2}[r]))
    t = len(roles_sorted)
    if t not in (3, 4):
        raise OutOfTable(f"{fs.value} has {t} ramified primes, not 3 or 4")
    parts = (["2"] if fs.value % 2 == 0 else []) + [
        f"p{i+1}" for i in range(sum(1 for p in odd if p % 4 == 1))
    ] + [f"q{i+1}" for i in range(sum(1 for p in odd if p % 4 == 3))]
    return FieldShape(
        t,
        roles_sorted,
        fs.value % 4,
        1 if t == 3 else 2,
        "Q(sqrt(" + "*".join(parts) + "))",
    )


# --- classifier 1: rank patterns ------------------------------------------


def stable_rank_type(d) -> Optional[int]:
    """Which congruence pattern (1..3) the odd square-free d matches, if any.

    (1) d = p1 p2 p3, p1 = 1 or 5, p2 = p3 = 5 (mod 8);
    (2) d = p1 p2 q1 q2, p1 = p2 = 5, q1 = 3 or 7, q2 = 3 (mod 8);
    (3) d = q1 q2 q3 q4, q1 = 3 or 7, q2 = q3 = q4 = 3 (mod 8).
    """
    fs = as_factored(d)
    if fs.value % 2 == 0:
        return None
    res = sorted(p % 8 for p in fs.primes)
    if len(res) == 3:
        if all(r in (1, 5) for r in res) and res.count(1) <= 1:
            return 1
        return None
    if len(res) == 4:
        if res.count(5) == 2 and res.count(3) >= 1 and res.count(3) + res.count(7) == 2:
            return 2
        if all(r in (3, 7) for r in res) and res.count(7) <= 1:
            return 3
    return None


def rank_pattern_tension(d) -> bool:
    """Type (1) with a prime = 1 (mod 8) that fails the 2-power residue
    obstruction: the congruence pattern then promises first-layer rank 2
    while the rank formula gives 3.  Reported, never silently resolved.
    """
    fs = as_factored(d)
    if stable_rank_type(fs) != 1:
        return False
    ones = [p for p in fs.primes if p % 8 == 1]
    return any(not two_power_residue_test(p) for p in ones)


# --- classifiers 2 and 3: symbol conditions --------------------------------

# Each condition is a predicate on L, where L(i, j) is the Legendre symbol
# (x_i / x_j) of the labeled primes.  Labels for ppqq: 1, 2 are the two
# primes = 5 (mod 8), 3 is the prime = 7, 4 is the prime = 3 (mod 8).

_PPQQ_CONDITIONS: tuple[Callable, ...] = (
    lambda L: L(1, 2) == -1
    and L(1, 3) == -1
    and L(1, 4) == 1
    and L(3, 2) * L(4, 2) == 1,
    lambda L: L(1, 2) == -1
    and L(3, 1) * L(4, 1) == 1
    and L(2, 3) == -1
    and L(2, 4) == 1,
    lambda L: L(1, 2) == 1
    and L(1, 3) * L(2, 3) == -1
    and L(1, 4) * L(2, 4) == -1
    and L(1, 3) == L(2, 4),
)

# Labels for qqqq: 1 is the prime = 7 (mod 8), 2..4 are the primes = 3.

_QQQQ_CONDITIONS: tuple[Callable, ...] = (
    lambda L: L(1, 3) == 1
    and L(2, 3) == 1
    and L(4, 2) == 1
    and L(4, 1) == 1
    and L(4, 3) == -1,
    lambda L: L(1, 3) == -1
    and L(2, 3) == -1
    and L(4, 2) == -1
    and L(4, 1) == -1
    and L(4, 3) == 1,
    lambda L: L(1, 3) * L(2, 3) == -1
    and L(1, 4) * L(2, 4) == -1
    and L(2, 3) == L(1, 4) == L(3, 4),
    lambda L: L(1, 3) * L(2, 3) == 1
    and L(1, 4) * L(2, 4) == -1
    and L(2, 3) == L(2, 4)
    and L(1, 2) == L(4, 3),
    lambda L: L(1, 3) * L(2, 3) == -1
    and L(1, 4) * L(2, 4) == 1
    and L(2, 3) == L(1, 4)
    and L(1, 2) == L(3, 4),
    lambda L: L(1, 3) == 1
    and L(2, 3) == 1
    and L(1, 4) == 1
    and L(2, 4) == -1
    and L(1, 2) == -1,
    lambda L: L(1, 3) == -1
    and L(2, 3) == -1
    and L(1, 4) == -1
    and L(2, 4) == 1
    and L(1, 2) == 1
    and L(3, 4) == 1,
    lambda L: L(1, 3) == 1
    and L(2, 3) == -1
    and L(1, 4) == 1
    and L(2, 4) == 1
    and L(1, 2) == -1,
    lambda L: L(1, 3) == -1
    and L(2, 3) == 1
    and L(1, 4) == -1
    and L(2, 4) == -1
    and L(1, 2) == 1
    and L(3, 4) == -1,
)


class ConditionMatch:
    """A matched condition index together with the labeling that matched."""

    def __init__(self, condition: int, labeling: tuple[int, ...]):
        self.condition = condition
        self.labeling = labeling

    def __eq__(self, other):
        if isinstance(other, int):
            return self.condition == other
        return (
            isinstance(other, ConditionMatch)
            and (self.condition, self.labeling) == (other.condition, other.labeling)
        )

    def __repr__(self) -> str:
        return f"condition {self.condition} with labeling {self.labeling}"


def _legendre_lookup(labels: tuple[int, ...]) -> Callable[[int, int], int]:
    def L(i: int, j: int) -> int:
        return kronecker(labels[i - 1], labels[j - 1])

    return L


def structure_condition_ppqq(d) -> Optional[ConditionMatch]:
    """First matched condition (1..3) for d = p1 p2 q1 q2, (5,5,7,3) mod 8.

    A match is equivalent to A(K) = (Z/2)^2, A(K') = (Z/2)^3 and
    A(K1) = Z/2 + Z/4 together.  The two p-labels are tried in both orders.
    """
    fs = as_factored(d)
    res = sorted(p % 8 for p in fs.primes)
    if len(fs.primes) != 4 or res != [3, 5, 5, 7]:
        raise WrongShape(f"{fs.value} is not p1*p2*q1*q2 with (5,5,7,3) mod 8")
    ps = [p for p in fs.primes if p % 8 == 5]
    q1 = next(p for p in fs.primes if p % 8 == 7)
    q2 = next(p for p in fs.primes if p % 8 == 3)
    for idx, cond in enumerate(_PPQQ_CONDITIONS, start=1):
        for p1, p2 in (ps, ps[::-1]):
            labels = (p1, p2, q1, q2)
            if cond(_legendre_lookup(labels)):
                return ConditionMatch(idx, labels)
    return None


def structure_condition_qqqq(d) -> Optional[ConditionMatch]:
    """First matched condition (1..9) for d = q1 q2 q3 q4, (7,3,3,3) mod 8.

    Sufficient only: a match implies A(K) = (Z/2)^2, A(K') = (Z/2)^3 and
    A(K1) = Z/2 + Z/4, with no converse claimed.  The three labels = 3
    (mod 8) are tried in all orders.
    """
    fs = as_factored(d)
    res = sorted(p % 8 for p in fs.primes)
    if len(fs.primes) != 4 or res != [3, 3, 3, 7]:
        raise WrongShape(f"{fs.value} is not q1*q2*q3*q4 with (7,3,3,3) mod 8")
    q1 = next(p for p in fs.primes if p % 8 == 7)
    rest = [p for p in fs.primes if p % 8 == 3]
    for idx, cond in enumerate(_QQQQ_CONDITIONS, start=1):
        for perm in itertools.permutations(rest):
            labels = (q1,) + perm
            if cond(_legendre_lookup(labels)):
                return ConditionMatch(idx, labels)
    return None


# --- prime tuple search (progression scans) ---------------------------------


@dataclass(frozen=True)
class SymbolSpec:
    """Target residues mod 8 and Legendre symbols (x_k / x_j) = eps for j < k.

    symbols maps index pairs (k, j) with 1 <= j < k <= t to +/-1; missing
    pairs are unconstrained.
    """

    residues: tuple[int, ...]
    symbols: tuple[tuple[tuple[int, int], int], ...] = ()

    def __post_init__(self) -> None:
        if not self.residues:
            raise ValueError("at least one residue required")
        for a in self.residues:
            if a not in (1, 3, 5, 7):
                raise ValueError(f"residue {a} is not an odd class mod 8")
        t = len(self.residues)
        seen = set()
        for (k, j), eps in self.symbols:
            if not (1 <= j < k <= t):
                raise ValueError(f"symbol index ({k},{j}) out of range")
            if eps not in (-1, 1):
                raise ValueError(f"symbol value {eps} not +/-1")
            if (k, j) in seen:
                raise ValueError(f"duplicate symbol ({k},{j})")
            seen.add((k, j))

    def symbol(self, k: int, j: int) -> Optional[int]:
        for key, eps in self.symbols:
            if key == (k, j):
                return eps
        return None

    @classmethod
    def of(cls, residues, symbols: dict | None = None) -> "SymbolSpec":
        items = tuple(sorted((symbols or {}).items()))
        return cls(tuple(residues), items)


def find_prime_tuple(
    spec: SymbolSpec, search_bound: int = 10**6, *, avoid=()
) -> list[int]:
    """Primes p_i = a_i (mod 8) with (p_k/p_j) = eps_kj for all j < k.

    Constructive search: for each coordinate the admissible primes form a
    union of arithmetic progressions modulo 8 p_1 ... p_(i-1) (one for every
    residue system v_j with (v_j/p_j) = eps_ij), each infinite by Dirichlet;
    the scan walks the class a_i (mod 8) upward and keeps the first prime
    whose symbols all verify, i.e. the smallest member of that union.

    avoid lists primes that must not be chosen, so repeated calls can
    produce distinct tuples.  All constraints are re-verified on the result.
    """
    avoid = set(avoid)
    primes: list[int] = []
    for i, a in enumerate(spec.residues, start=1):
        constraints = [
            (primes[j - 1], spec.symbol(i, j))
            for j in range(1, i)
            if spec.symbol(i, j) is not None
        ]
        candidate = None
        x = a % 8
        for _ in range(search_bound):
            if (
                x > 2
                and x not in avoid
                and x not in primes
                and all(kronecker(x, pj) == eps for pj, eps in constraints)
                and is_prime(x)
            ):
                candidate = x
                break
            x += 8
        if candidate is None:
            raise NotFoundWithinBound(
                f"no prime found for coordinate {i} within {search_bound} steps"
            )
        primes.append(candidate)
    # re-verify every constraint: part of the contract, not just a debug aid
    for i, (p, a) in enumerate(zip(primes, spec.residues), start=1):
        if p % 8 != a:
            raise AssertionError(f"residue re-verification failed at {i}")
        for j in range(1, i):
            eps = spec.symbol(i, j)
            if eps is not None and kronecker(p, primes[j - 1]) != eps:
                raise AssertionError(f"symbol re-verification failed at ({i},{j})")
    return primes


def prime_tuples_up_to(
    spec: SymbolSpec, max_product: int, count: Optional[int] = None
) -> list[list[int]]:
    """Labeled tuples satisfying spec with product <= max_product.

    Bounded depth-first enumeration over primes in each mod-8 class with
    symbol checks at every extension; returns all solutions (or the first
    `count`) ordered by product.  Used to collect many small, independently
    verifiable fields for one symbol spec.
    """
    from .arith import spf_table

    t = len(spec.residues)
    class_min = {1: 17, 3: 3, 5: 5, 7: 7}
    tail_min = [1] * (t + 1)
    for i in range(t - 1, -1, -1):
        tail_min[i] = tail_min[i + 1] * class_min[spec.residues[i]]
    # a coordinate is largest when every other one is minimal
    global_bound = max(
        max_product // (tail_min[0] // class_min[r]) for r in spec.residues
    )
    global_bound = max(global_bound, 7)
    spf = spf_table(global_bound + 1)
    primes_mod8: dict[int, list[int]] = {1: [], 3: [], 5: [], 7: []}
    for p in range(3, global_bound + 1, 2):
        if spf[p] == p:
            primes_mod8[p % 8].append(p)
    results: list[list[int]] = []
    chosen: list[int] = []

    def extend(idx: int, prod: int) -> None:
        if idx == t:
            results.append(list(chosen))
            return
        bound = max_product // (prod * tail_min[idx + 1])
        constraints = [
            (j, spec.symbol(idx + 1, j + 1))
            for j in range(idx)
            if spec.symbol(idx + 1, j + 1) is not None
        ]
        for p in primes_mod8[spec.residues[idx]]:
            if p > bound:
                break
            if p in chosen:
                continue
            if all(kronecker(p, chosen[j]) == eps for j, eps in constraints):
                chosen.append(p)
                extend(idx + 1, prod * p)
                chosen.pop()

    extend(0, 1)
    results.sort(key=math.prod)
    return results if count is None else results[:count]


def _spec_from_condition(
    residues: tuple[int, ...], cond: Callable
) -> SymbolSpec:
    """A SymbolSpec whose every solution satisfies the given condition.

    Searches the 2^6 assignments of the elementary symbols for the
    lexicographically first satisfying one, then orients each symbol by
    quadratic reciprocity ((x_i/x_j) = -(x_j/x_i) iff both are 3 mod 4).
    """
    t = len(residues)
    pairs = [(i, j) for i in range(1, t + 1) for j in range(i + 1, t + 1)]

    def lookup(assign):
        def L(i: int, j: int) -> int:
            if i < j:
                return assign[(i, j)]
            v = assign[(j, i)]
            if residues[i - 1] % 4 == 3 and residues[j - 1] % 4 == 3:
                v = -v
            return v

        return L

    for bits in range(1 << len(pairs)):
        assign = {
            pair: (1 if bits >> b & 1 == 0 else -1) for b, pair in enumerate(pairs)
        }
        L = lookup(assign)
        if cond(L):
            symbols = {}
            for (i, j) in pairs:
                symbols[(j, i)] = L(j, i)  # stored orientation: (x_k / x_j), j < k
            return SymbolSpec.of(residues, symbols)
    raise RuntimeError("condition is unsatisfiable over symbol assignments")


def spec_for_ppqq_condition(condition: int) -> SymbolSpec:
    """Symbol spec generating tuples (p1, p2, q1, q2) for a ppqq condition."""
    return _spec_from_condition((5, 5, 7, 3), _PPQQ_CONDITIONS[condition - 1])


def spec_for_qqqq_condition(condition: int) -> SymbolSpec:
    """Symbol spec generating tuples (q1, q2, q3, q4) for a qqqq condition."""
    return _spec_from_condition((7, 3, 3, 3), _QQQQ_CONDITIONS[condition - 1])


# --- prediction reports -----------------------------------------------------


@dataclass(frozen=True)
class Claim:
    value: object
    source: str
    direction: str = "computed"  # "computed" | "iff" | "if"

    def to_json(self):
        v = self.value
        if isinstance(v, Abelian2Group):
            v = list(v.factors)
        return {"value": v, "source": self.source, "direction": self.direction}


@dataclass(frozen=True)
class TowerClaim:
    """Stable first-layer data propagated up the tower by Fukuda's theorem."""

    rank: int
    from_layer: int
    mu_zero: bool
    lambda_zero: bool

    def to_json(self):
        return {
            "rank_all_layers": self.rank,
            "from_layer": self.from_layer,
            "mu": 0 if self.mu_zero else None,
            "lambda": 0 if self.lambda_zero else None,
        }


@dataclass(frozen=True)
class PredictionReport:
    d: int
    primes: tuple[int, ...]
    shape: Optional[FieldShape]
    rank_K: Claim
    rank_Kprime: Claim
    rank_K1: Claim
    structure_K: Optional[Claim]
    structure_Kprime: Optional[Claim]
    structure_K1: Optional[Claim]
    rank_pattern: Optional[int]
    ppqq_condition: Optional[ConditionMatch]
    qqqq_condition: Optional[ConditionMatch]
    tower: Optional[TowerClaim]
    flags: tuple[str, ...]

    def to_json(self):
        return {
            "d": self.d,
            "primes": list(self.primes),
            "shape": None if self.shape is None else self.shape.descriptor,
            "rank_K": self.rank_K.to_json(),
            "rank_Kprime": self.rank_Kprime.to_json(),
            "rank_K1": self.rank_K1.to_json(),
            "structure_K": None
            if self.structure_K is None
            else self.structure_K.to_json(),
            "structure_Kprime": None
            if self.structure_Kprime is None
            else self.structure_Kprime.to_json(),
            "structure_K1": None
            if self.structure_K1 is None
            else self.structure_K1.to_json(),
            "rank_pattern": self.rank_pattern,
            "ppqq_condition": None
            if self.ppqq_condition is None
            else {
                "condition": self.ppqq_condition.condition,
                "labeling": list(self.ppqq_condition.labeling),
            },
            "qqqq_condition": None
            if self.qqqq_condition is None
            else {
                "condition": self.qqqq_condition.condition,
                "labeling": list(self.qqqq_condition.labeling),
            },
            "tower": None if self.tower is None else self.tower.to_json(),
            "flags": list(self.flags),
        }


def predict(d) -> PredictionReport:
    """Assemble every claim the congruence/symbol machinery supports for d."""
    fs = as_factored(d)
    if fs.value % 2 == 0 or fs.value < 3:
        raise ValueError("predictions are for odd square-free d >= 3")
    flags: list[str] = []
    try:
        shape = shape_of(fs)
    except OutOfTable:
        shape = None
        flags.append("shape: outside the t=3,4 tables")
    rank_k = Claim(genus_rank(fs.value), "genus field")
    rank_kp = Claim(genus_rank(2 * fs.value), "genus field of Q(sqrt(2d))")
    rank_k1 = Claim(first_layer_rank(fs), "first-layer rank formula")
    pattern = stable_rank_type(fs)
    if rank_pattern_tension(fs):
        flags.append(
            "rank pattern (1) vs first-layer rank formula: a prime = 1 (mod 8) "
            "fails the 2-power residue obstruction, rank formula gives "
            f"{rank_k1.value}"
        )
    ppqq = None
    qqqq = None
    res = sorted(p % 8 for p in fs.primes)
    if len(fs.primes) == 4 and res == [3, 5, 5, 7]:
        ppqq = structure_condition_ppqq(fs)
        if ppqq is None:
            flags.append(
                "ppqq shape with no matching criterion: by the stated "
                "equivalence the three structure claims should not all hold "
                "(oracle counterexamples are reported as findings)"
            )
    if len(fs.primes) == 4 and res == [3, 3, 3, 7]:
        qqqq = structure_condition_qqqq(fs)
    structure_K = structure_Kprime = structure_K1 = None
    if ppqq is not None or qqqq is not None:
        src, direction = (
            (f"ppqq criterion ({ppqq.condition})", "iff")
            if ppqq is not None
            else (f"qqqq criterion ({qqqq.condition})", "if")
        )
        structure_K = Claim(Abelian2Group((2, 2)), src, direction)
        structure_Kprime = Claim(Abelian2Group((2, 2, 2)), src, direction)
        structure_K1 = Claim(Abelian2Group((2, 4)), src, direction)
    tower = None
    if fs.value % 4 == 1 and rank_k.value == rank_k1.value:
        lambda_zero = False
        if structure_K is not None and structure_K1 is not None:
            lambda_zero = (
                structure_K.value.order == structure_K1.value.order
            )
        tower = TowerClaim(rank_k.value, 0, True, lambda_zero)
    report = PredictionReport(
        fs.value,
        fs.primes,
        shape,
        rank_k,
        rank_kp,
        rank_k1,
        structure_K,
        structure_Kprime,
        structure_K1,
        pattern,
        ppqq,
        qqqq,
        tower,
        tuple(flags),
    )
    _check_report_consistency(report)
    return report


def _check_report_consistency(report: PredictionReport) -> None:
    for rank_claim, st_claim in (
        (report.rank_K, report.structure_K),
        (report.rank_Kprime, report.structure_Kprime),
        (report.rank_K1, report.structure_K1),
    ):
        if st_claim is not None and st_claim.value.rank != rank_claim.value:
            raise AssertionError(
                f"structure {st_claim.value} inconsistent with rank "
                f"{rank_claim.value} for d = {report.d}"
            )


# --- oracle verification ----------------------------------------------------


@dataclass(frozen=True)
class OracleCheck:
    name: str
    predicted: object
    observed: object
    ok: bool

    def to_json(self):
        def enc(v):
            return list(v.factors) if isinstance(v, Abelian2Group) else v

        return {
            "name": self.name,
            "predicted": enc(self.predicted),
            "observed": enc(self.observed),
            "ok": self.ok,
        }


@dataclass(frozen=True)
class OracleComparison:
    d: int
    checks: tuple[OracleCheck, ...]
    findings: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def mismatches(self) -> tuple[OracleCheck, ...]:
        return tuple(c for c in self.checks if not c.ok)

    def to_json(self):
        return {
            "d": self.d,
            "ok": self.ok,
            "checks": [c.to_json() for c in self.checks],
            "findings": list(self.findings),
        }


def verify_against_oracle(
    d, oracle_limit: int = DEFAULT_ORACLE_LIMIT
) -> OracleComparison:
    """Replay the prediction's oracle-checkable claims against form class
    groups: ranks always, structures and the Kuroda chain when predicted."""
    fs = as_factored(d)
    report = predict(fs)
    D = discriminant(fs)
    Dprime = 8 * fs.value
    if max(D, Dprime) > oracle_limit:
        raise OracleRangeExceeded(
            f"discriminant {max(D, Dprime)} exceeds oracle limit {oracle_limit}"
        )
    sK = class_group_summary(D)
    sKp = class_group_summary(Dprime)
    checks = [
        OracleCheck(
            "rank A(K)",
            report.rank_K.value,
            sK.ordinary_two_rank,
            report.rank_K.value == sK.ordinary_two_rank,
        ),
        OracleCheck(
            "rank A+(K)",
            narrow_genus_rank(fs.value),
            sK.narrow_two_rank,
            narrow_genus_rank(fs.value) == sK.narrow_two_rank,
        ),
        OracleCheck(
            "rank A(K')",
            report.rank_Kprime.value,
            sKp.ordinary_two_rank,
            report.rank_Kprime.value == sKp.ordinary_two_rank,
        ),
    ]
    if report.structure_K is not None:
        observed = two_sylow(ordinary_class_group(D, unit_norm(fs.value)))
        checks.append(
            OracleCheck(
                "structure A(K)",
                report.structure_K.value,
                observed,
                observed == report.structure_K.value,
            )
        )
    if report.structure_Kprime is not None:
        observed = two_sylow(ordinary_class_group(Dprime, unit_norm(2 * fs.value)))
        checks.append(
            OracleCheck(
                "structure A(K')",
                report.structure_Kprime.value,
                observed,
                observed == report.structure_Kprime.value,
            )
        )
    if report.structure_K1 is not None:
        Q = hasse_unit_index(biquad_field(fs))
        h2 = class_group_summary(8).two_part()
        order = kuroda_order(Q, sK.two_part(), sKp.two_part(), h2)
        predicted_order = report.structure_K1.value.order
        checks.append(
            OracleCheck(
                "order A(K1) via Kuroda",
                predicted_order,
                order,
                order == predicted_order,
            )
        )
        derived = structure_from_rank_and_order(report.rank_K1.value, order)
        checks.append(
            OracleCheck(
                "structure A(K1) from rank and Kuroda order",
                report.structure_K1.value,
                derived,
                derived == report.structure_K1.value,
            )
        )
    findings: list[str] = []
    if (
        report.structure_K1 is None
        and report.shape is not None
        and sorted(p % 8 for p in fs.primes) == [3, 5, 5, 7]
    ):
        # the criterion list is stated as an equivalence, so with no
        # condition matched the structures should not all hold; they
        # sometimes do (d = 3045 is the smallest case), which is reported
        # as a finding rather than silently passed or failed
        conjunction = (
            sK.ordinary_two_rank == 2
            and sK.ordinary_elementary
            and sK.two_part() == 4
            and sKp.ordinary_two_rank == 3
            and sKp.ordinary_elementary
            and sKp.two_part() == 8
        )
        if conjunction:
            Q = hasse_unit_index(biquad_field(fs))
            h2 = class_group_summary(8).two_part()
            order = kuroda_order(Q, sK.two_part(), sKp.two_part(), h2)
            if order == 8 and report.rank_K1.value == 2:
                findings.append(
                    "ppqq criterion converse fails: A(K) = (2,2), "
                    "A(K') = (2,2,2) and #A(K1) = 8 at rank 2, "
                    "yet no listed condition matches"
                )
    return OracleComparison(fs.value, tuple(checks), tuple(findings))


def sweep_verify(
    max_d: int,
    min_d: int = 3,
    oracle_limit: int = DEFAULT_ORACLE_LIMIT,
):
    """verify_against_oracle over all odd square-free d in [min_d, max_d)."""
    for fs in squarefree_range(min_d, max_d):
        if fs.value % 2 == 0 or fs.value < 3:
            continue
        yield verify_against_oracle(fs, oracle_limit)
