import math
import random

import pytest

from sumfree.arith import partitions, prime_factors
from sumfree.errors import CapacityError
from sumfree.groups import (
    GroupSpec,
    Subgroup,
    abelian_groups_of_order,
    generated_subgroup,
    group_from_json,
    index2_subgroups,
    make_group,
)


def test_make_group_examples():
    g = make_group([6])
    assert g.order == 6 and g.decomposition == (2, 3)
    g = make_group([2, 4])
    assert g.order == 8 and g.decomposition == (2, 4)
    g = make_group([])
    assert g.order == 1 and g.decomposition == ()


def test_make_group_errors():
    with pytest.raises(ValueError):
        make_group([1])
    with pytest.raises(ValueError):
        make_group([3, 0])
    with pytest.raises(CapacityError):
        make_group([2] * 21)  # order 2^21 over the default 2^20 cap


def test_add_neg_identity_examples():
    z5 = make_group([5])
    assert z5.add(z5.element([3]), z5.element([4])).index == 2
    z23 = make_group([2, 3])
    s = z23.add(z23.element([1, 2]), z23.element([1, 2]))
    assert s.coords == (0, 1)
    for g in (z5, z23):
        for i in range(g.order):
            a = g.element_at(i)
            assert g.add(a, g.identity()) == a
            assert g.add(a, g.neg(a)) == g.identity()


def test_element_validation():
    z6 = make_group([6])
    with pytest.raises(ValueError):
        z6.element([6])
    with pytest.raises(ValueError):
        z6.element([1, 1])
    with pytest.raises(ValueError):
        z6.element_at(6)


def test_index_coords_bijection():
    g = make_group([3, 4, 2])
    seen = set()
    for i in range(g.order):
        c = g.index_to_coords(i)
        assert g.coords_to_index(c) == i
        seen.add(c)
    assert len(seen) == g.order
    # first modulus is least significant
    assert g.index_to_coords(1) == (1, 0, 0)
    assert g.index_to_coords(3) == (0, 1, 0)


def test_group_laws_random_triples():
    rng = random.Random(2024)
    for order in range(2, 65):
        for g in abelian_groups_of_order(order):
            for _ in range(1000 // order + 5):
                a, b, c = (rng.randrange(order) for _ in range(3))
                assert g.add_index(a, b) == g.add_index(b, a)
                ab_c = g.add_index(g.add_index(a, b), c)
                a_bc = g.add_index(a, g.add_index(b, c))
                assert ab_c == a_bc


def test_order_times_element_is_identity():
    for order in range(2, 33):
        for g in abelian_groups_of_order(order):
            for i in range(order):
                a = g.element_at(i)
                k = g.element_order(a)
                assert order % k == 0
                acc = g.identity()
                for _ in range(k):
                    acc = g.add(acc, a)
                assert acc == g.identity()


def test_element_order_examples():
    z6 = make_group([6])
    assert z6.element_order(z6.element_at(2)) == 3
    assert z6.element_order(z6.element_at(0)) == 1
    z23 = make_group([2, 3])
    assert z23.element_order(z23.element([1, 1])) == 6


def test_exponent_examples_and_bruteforce():
    assert make_group([2, 3]).exponent() == 6
    assert make_group([7, 7]).exponent() == 7
    assert make_group([49]).exponent() == 49
    for order in range(2, 65):
        for g in abelian_groups_of_order(order):
            brute = max(g.element_order(g.element_at(i)) for i in range(order))
            assert g.exponent() == brute


def test_even_component_count():
    assert make_group([2, 4]).even_component_count() == 2
    assert make_group([9]).even_component_count() == 0
    assert make_group([6]).even_component_count() == 1


def test_index2_examples():
    subs = index2_subgroups(make_group([2, 2]))
    assert len(subs) == 3
    assert all(s.order == 2 for s in subs)
    assert index2_subgroups(make_group([9])) == []
    (only,) = index2_subgroups(make_group([4]))
    assert only.members == frozenset({0, 2})


def test_index2_count_matches_even_components():
    for order in range(2, 65):
        for g in abelian_groups_of_order(order):
            subs = index2_subgroups(g)
            assert len(subs) == (1 << g.even_component_count()) - 1
            for s in subs:
                assert s.order * 2 == g.order


def _all_subgroups(g: GroupSpec) -> set[frozenset[int]]:
    """Brute-force subgroup lattice by closure growth (test oracle)."""
    found = {frozenset({0})}
    frontier = [frozenset({0})]
    while frontier:
        h = frontier.pop()
        for x in range(g.order):
            if x in h:
                continue
            members = set(h)
            queue = [x]
            members.add(x)
            while queue:
                y = queue.pop()
                for z in list(members):
                    w = g.add_index(y, z)
                    if w not in members:
                        members.add(w)
                        queue.append(w)
                neg = g.neg_index(y)
                if neg not in members:
                    members.add(neg)
                    queue.append(neg)
            fs = frozenset(members)
            if fs not in found:
                found.add(fs)
                frontier.append(fs)
    return found


@pytest.mark.parametrize("order", range(2, 33))
def test_index2_against_lattice_oracle(order):
    for g in abelian_groups_of_order(order):
        lattice = _all_subgroups(g)
        expected = {h for h in lattice if len(h) * 2 == g.order}
        got = {s.members for s in index2_subgroups(g)}
        assert got == expected


def test_generated_subgroup_examples():
    z6 = make_group([6])
    assert generated_subgroup(z6, [z6.element_at(2)]).members == frozenset({0, 2, 4})
    assert generated_subgroup(z6, []).members == frozenset({0})
    v4 = make_group([2, 2])
    whole = generated_subgroup(v4, [v4.element([1, 0]), v4.element([0, 1])])
    assert whole.members == frozenset(range(4))


def test_subgroup_validation():
    z6 = make_group([6])
    with pytest.raises(ValueError):
        Subgroup(z6, frozenset({1, 2}))  # no identity
    with pytest.raises(ValueError):
        Subgroup(z6, frozenset({0, 1}))  # not closed
    Subgroup(z6, frozenset({0, 3}))  # fine


def test_abelian_groups_of_order_examples():
    assert [g.moduli for g in abelian_groups_of_order(8)] == [
        (8,),
        (4, 2),
        (2, 2, 2),
    ]
    assert [g.moduli for g in abelian_groups_of_order(6)] == [(2, 3)]
    assert [g.moduli for g in abelian_groups_of_order(12)] == [(4, 3), (2, 2, 3)]
    assert [g.moduli for g in abelian_groups_of_order(1)] == [()]


def test_abelian_groups_count_and_distinctness():
    for n in range(1, 65):
        groups = abelian_groups_of_order(n)
        expected = math.prod(
            len(list(partitions(e))) for e in prime_factors(n).values()
        )
        assert len(groups) == max(expected, 1)
        decomps = {g.decomposition for g in groups}
        assert len(decomps) == len(groups)
        for g in groups:
            assert g.order == n


def test_group_json_round_trip():
    g = make_group([2, 4, 3])
    assert g.to_json_dict() == {"moduli": [2, 4, 3]}
    assert group_from_json(g.to_json_dict()) == g
    with pytest.raises(ValueError):
        group_from_json({"modulus": [2]})
