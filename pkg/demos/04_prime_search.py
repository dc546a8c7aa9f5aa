"""Constructive search for prime tuples with prescribed residues and
Legendre symbols, and the fields they generate.

Any assignment of residues mod 8 and symbols (p_k/p_j) is realized by
infinitely many tuples (Dirichlet); find_prime_tuple returns the smallest.
The generated d = p1 p2 q1 q2 then land in the (5,5,7,3) criterion and
their structure chain is verified against the oracle.
"""

import math

from twoclass import (
    SymbolSpec,
    find_prime_tuple,
    prime_tuples_up_to,
    structure_condition_ppqq,
    verify_against_oracle,
)
from twoclass.classify import spec_for_ppqq_condition

spec = SymbolSpec.of((5, 5, 7, 3), {(2, 1): -1, (3, 1): 1, (4, 3): -1})
print("spec:", spec.residues, dict(spec.symbols))
print("smallest tuple:", find_prime_tuple(spec))
print("next (avoiding 3):", find_prime_tuple(spec, avoid={3}))
print()

for condition in (1, 2, 3):
    spec = spec_for_ppqq_condition(condition)
    tuples = prime_tuples_up_to(spec, 200_000, 3)
    print(f"criterion ({condition}) tuples:", tuples)
    for tup in tuples:
        d = math.prod(tup)
        match = structure_condition_ppqq(d)
        ok = verify_against_oracle(d, oracle_limit=4_000_000).ok
        print(f"  d = {d:>7}: matched {match}, oracle ok: {ok}")
