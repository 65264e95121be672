import random

import pytest

from sumfree.errors import GenerationTimeout
from sumfree.generate import (
    RandomGenConfig,
    extract_sum_free,
    find_dilator,
    find_prime,
    random_sum_free,
    residue_weights,
)
from sumfree.universe import is_sum_free


def test_config_validation():
    with pytest.raises(ValueError):
        RandomGenConfig(seed_element=1, target_cardinality=0, sample_hi=10)
    with pytest.raises(ValueError):
        RandomGenConfig(seed_element=11, target_cardinality=1, sample_hi=10)
    with pytest.raises(ValueError):
        RandomGenConfig(seed_element=1, target_cardinality=1, sample_hi=10,
                        max_iterations=0)


def test_random_sum_free_target_one_is_immediate():
    cfg = RandomGenConfig(seed_element=7, target_cardinality=1, sample_hi=100,
                          rng_seed=3)
    assert random_sum_free(cfg).members() == (7,)


def test_random_sum_free_deterministic_and_valid():
    for seed in (0, 1, 42, 999):
        cfg = RandomGenConfig(seed_element=3, target_cardinality=7, sample_hi=60,
                              rng_seed=seed)
        s1 = random_sum_free(cfg)
        s2 = random_sum_free(cfg)
        assert s1.members() == s2.members()
        assert s1.cardinality == 7
        assert 3 in s1
        assert is_sum_free(s1.universe, s1)


def test_random_sum_free_timeout():
    # [1, 3] has no sum-free set of cardinality 3
    cfg = RandomGenConfig(seed_element=1, target_cardinality=3, sample_hi=3,
                          max_iterations=200, rng_seed=0)
    with pytest.raises(GenerationTimeout) as err:
        random_sum_free(cfg)
    assert err.value.partial is not None
    assert err.value.partial.cardinality < 3


def test_find_prime_examples():
    assert find_prime([5]).p == 2
    assert find_prime([1, 2, 3]).p == 5
    assert find_prime([2, 5, 11]).p == 17
    with pytest.raises(ValueError):
        find_prime([])


def test_find_prime_never_divides():
    rng = random.Random(31)
    for _ in range(100):
        elems = rng.sample(range(1, 100_000), rng.randint(1, 30))
        pick = find_prime(elems)
        assert pick.p % 3 == 2
        assert all(a % pick.p != 0 for a in elems)


def test_residue_weights_examples():
    assert residue_weights([1, 2, 3], 5) == {1: 1, 2: 1, 3: 1, 4: 0}
    w = residue_weights([6, 11], 5)
    assert w == {1: 2, 2: 0, 3: 0, 4: 0}
    with pytest.raises(ValueError):
        residue_weights([10], 5)


def test_find_dilator_examples():
    assert find_dilator({1: 1, 2: 1, 3: 1, 4: 0}, 5) == 1
    assert find_dilator({1: 5, 2: 0, 3: 0, 4: 0}, 5) == 2  # need t*1 in {2, 3}
    assert find_dilator({1: 1, 2: 1, 3: 1, 4: 1}, 5) == 1  # smallest qualifying


def test_extract_examples():
    tr = extract_sum_free([1, 2, 3])
    assert tr.p == 5 and tr.dilator == 1
    assert tr.residue_set.members() == (2, 3)
    assert tr.subset.members() == (2, 3)
    assert tr.n == 3 and tr.total_weight == 3

    single = extract_sum_free([7])
    assert single.subset.members() == (7,)

    tr = extract_sum_free(range(2, 11))
    assert tr.subset.cardinality >= 4
    assert is_sum_free(tr.subset.universe, tr.subset)


def test_extract_validation():
    with pytest.raises(ValueError):
        extract_sum_free([])
    with pytest.raises(ValueError):
        extract_sum_free([0, 3])
    with pytest.raises(ValueError):
        extract_sum_free([4, 4])


def test_extract_battery():
    rng = random.Random(404)
    for _ in range(100):
        elems = rng.sample(range(1, 10**6 + 1), rng.randint(1, 50))
        tr = extract_sum_free(elems)
        assert set(tr.subset.members()) <= set(elems)
        assert 3 * tr.subset.cardinality > len(elems)
        assert is_sum_free(tr.subset.universe, tr.subset)
        assert (tr.dilator * tr.dilator_inverse) % tr.p == 1
        assert tr.total_weight == tr.n


def test_trace_serialization_roundtrip():
    tr = extract_sum_free([3, 8, 20])
    d = tr.to_json_dict()
    assert d["subset"] == list(tr.subset.members())
    assert d["p"] == tr.p and d["dilator"] == tr.dilator
    assert set(d) >= {"elements", "n", "log_weight", "k", "weights",
                      "total_weight", "residue_set", "within_prime_bound"}
