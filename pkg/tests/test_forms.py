import math
import random

import pytest

from twoclass.arith import squarefree_range
from twoclass.forms import (
    Abelian2Group,
    DiscriminantMismatch,
    IndefiniteForm,
    InvalidDiscriminant,
    class_group_summary,
    compose,
    narrow_class_group,
    ordinary_class_group,
    reduce_form,
    reduced_forms,
    sign_class_is_principal,
    two_sylow,
)
from twoclass.quadfield import unit_norm


def valid_discriminants(limit):
    for D in range(5, limit):
        if D % 4 in (0, 1) and math.isqrt(D) ** 2 != D:
            yield D


def test_reduced_forms_examples():
    assert set(reduced_forms(5)) == {IndefiniteForm(1, 1, -1), IndefiniteForm(-1, 1, 1)}
    assert set(reduced_forms(8)) == {IndefiniteForm(1, 2, -1), IndefiniteForm(-1, 2, 1)}
    with pytest.raises(InvalidDiscriminant):
        reduced_forms(4)
    with pytest.raises(InvalidDiscriminant):
        reduced_forms(7)
    with pytest.raises(InvalidDiscriminant):
        reduced_forms(-20)


def test_reduced_forms_complete_and_valid():
    # every enumerated form is reduced with the right discriminant, and a
    # direct scan over the (a, b) window finds nothing extra
    for D in valid_discriminants(300):
        forms = reduced_forms(D)
        assert len(set(forms)) == len(forms)
        s = math.isqrt(D)
        direct = set()
        for b in range(1, s + 1):
            if (D - b * b) % 4:
                continue
            for a in range(-(s + b) // 2, (s + b) // 2 + 1):
                if a == 0:
                    continue
                num = b * b - D
                if num % (4 * a):
                    continue
                c = num // (4 * a)
                f = IndefiniteForm(a, b, c)
                if f.discriminant == D and _is_reduced_ref(a, b, c, D):
                    direct.add(f)
        assert direct == set(forms), D


def _is_reduced_ref(a, b, c, D):
    sq = math.sqrt(D)
    return 0 < b < sq and sq - b < 2 * abs(a) < sq + b


def test_reduce_examples():
    assert reduce_form(IndefiniteForm(1, 1, -1)) == IndefiniteForm(1, 1, -1)
    assert reduce_form(IndefiniteForm(1, 0, -2)) == IndefiniteForm(1, 2, -1)
    f = reduce_form(IndefiniteForm(3, 2, -3))
    assert f.discriminant == 40
    assert f in reduced_forms(40)


def test_reduce_random_preserves_discriminant():
    rng = random.Random(3)
    for _ in range(400):
        a = rng.choice([x for x in range(-12, 13) if x])
        b = rng.randint(-12, 12)
        c = rng.choice([x for x in range(-12, 13) if x])
        D = b * b - 4 * a * c
        if D <= 0 or math.isqrt(D) ** 2 == D:
            continue
        g = reduce_form(IndefiniteForm(a, b, c))
        assert g.discriminant == D


def test_compose_laws():
    g = narrow_class_group(40)
    ident = g.classes[g.identity]
    other = next(c for i, c in enumerate(g.classes) if i != g.identity)
    assert g.class_index(compose(ident, other)) == g.class_index(other)
    assert g.class_index(compose(other, other)) == g.identity
    assert g.class_index(compose(other, other.conjugate())) == g.identity
    with pytest.raises(DiscriminantMismatch):
        compose(ident, IndefiniteForm(1, 1, -1))


def test_group_axioms_all_discriminants_below_5000():
    # identity, inverses, commutativity and associativity on all class
    # triples; cached composition keeps the triple sweep cheap
    for D in valid_discriminants(5000):
        g = narrow_class_group(D)
        n = g.order
        e = g.identity
        table = [[g.mul(i, j) for j in range(n)] for i in range(n)]
        for i in range(n):
            assert table[e][i] == i
            assert table[i][g.inverse(i)] == e
            for j in range(i, n):
                assert table[i][j] == table[j][i]
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    assert table[table[i][j]][k] == table[i][table[j][k]]


def test_group_axioms_random_large_discriminants():
    # spot-check the composition algebra well beyond the exhaustive range
    rng = random.Random(424242)
    checked = 0
    while checked < 12:
        D = rng.randrange(10**5, 10**6)
        if D % 4 not in (0, 1) or math.isqrt(D) ** 2 == D:
            continue
        g = narrow_class_group(D)
        n = g.order
        e = g.identity
        for _ in range(40):
            i, j, k = rng.randrange(n), rng.randrange(n), rng.randrange(n)
            assert g.mul(g.mul(i, j), k) == g.mul(i, g.mul(j, k))
            assert g.mul(i, j) == g.mul(j, i)
            assert g.mul(i, g.inverse(i)) == e
            assert g.mul(e, i) == i
        assert math.prod(g.structure) == g.order
        checked += 1


def test_narrow_class_group_examples():
    assert narrow_class_group(8).order == 1
    g = narrow_class_group(40)
    assert g.order == 2 and g.structure == (2,)
    g = narrow_class_group(1365)
    assert g.order == 8 and g.structure == (2, 2, 2)
    assert two_sylow(g).factors == (2, 2, 2)


def test_known_class_numbers():
    # classical narrow class numbers of real quadratic fields
    known_narrow = {5: 1, 8: 1, 12: 2, 13: 1, 24: 2, 40: 2, 60: 4, 229: 3}
    for D, h in known_narrow.items():
        assert narrow_class_group(D).order == h, D


def test_smallest_three_rank_two_discriminant():
    # D = 32009 is the classical smallest real quadratic discriminant with
    # 3-rank 2: class group Z/3 x Z/3, every nontrivial element of order 3
    g = narrow_class_group(32009)
    assert g.order == 9
    assert g.structure == (3, 3)
    assert all(g.element_order(i) in (1, 3) for i in range(g.order))
    assert two_sylow(g).factors == ()


def test_ordinary_class_group():
    # norm -1: narrow = ordinary
    g = ordinary_class_group(40, -1)
    assert g.order == 2 and g.variant == "narrow"
    # norm +1: index-2 quotient
    g = ordinary_class_group(60, 1)
    assert g.order == 2
    g = ordinary_class_group(1365, 1)
    assert g.order == 4 and g.structure == (2, 2)
    assert two_sylow(g).factors == (2, 2)


def test_ordinary_vs_narrow_order_relation():
    # h+ = 2h exactly when the unit norm is +1 (d < 1200 here; the
    # acceptance suite extends this to d < 20000)
    for fs in squarefree_range(2, 1200):
        D = fs.value if fs.value % 4 == 1 else 4 * fs.value
        nm = unit_norm(fs.value)
        narrow = class_group_summary(D)
        assert sign_class_is_principal(D) == (nm == -1), fs.value
        if nm == 1:
            assert narrow.h_ordinary * 2 == narrow.h_narrow
        else:
            assert narrow.h_ordinary == narrow.h_narrow


def test_two_sylow_values():
    # group of order 6 = Z/6 has 2-part Z/2
    g229 = narrow_class_group(229)
    assert g229.structure == (3,)
    assert two_sylow(g229).factors == ()
    g = narrow_class_group(1957)  # h+ = 6: 2-part (2,)
    if g.order == 6:
        assert two_sylow(g).factors == (2,)


def test_abelian2group_validation():
    with pytest.raises(ValueError):
        Abelian2Group((3,))
    with pytest.raises(ValueError):
        Abelian2Group((4, 2))
    grp = Abelian2Group((2, 4))
    assert grp.rank == 2 and grp.order == 8 and not grp.is_elementary()
    assert Abelian2Group(()).order == 1


def test_structure_matches_torsion_counts():
    # invariant factors reproduce the 2-torsion counts they were built from
    for D in (40, 60, 1365, 10920, 4729, 3316):
        if D % 4 not in (0, 1) or math.isqrt(D) ** 2 == D:
            continue
        g = narrow_class_group(D)
        expected_two = math.prod(min(f & -f, 2) for f in g.structure)
        assert g.torsion_count(2) == expected_two
        assert math.prod(g.structure) == g.order


def test_class_group_summary_consistency():
    for fs in squarefree_range(2, 400):
        D = fs.value if fs.value % 4 == 1 else 4 * fs.value
        summ = class_group_summary(D)
        g = narrow_class_group(D)
        assert summ.h_narrow == g.order
        assert summ.two_torsion_narrow == g.torsion_count(2)
        assert summ.four_torsion_narrow == g.torsion_count(4)
        o = ordinary_class_group(D, unit_norm(fs.value))
        assert summ.h_ordinary == o.order
        assert summ.two_torsion_ordinary == o.torsion_count(2)
