import random

import pytest

from deligne_o.diagram import k_invariants
from deligne_o.ideal import (
    ZERO_K,
    ThickIdeal,
    contains,
    has_k_minimal_shape,
    ideal_generated_by,
    is_k_minimal,
    is_negligible,
    k_minimal_partitions,
)
from deligne_o.partition import BOX, EMPTY, Partition, partitions_up_to
from deligne_o.ring import tensor_at

P = lambda *p: Partition(p)  # noqa: E731


def test_contains_examples():
    assert contains(ThickIdeal(0, 1), P(2))
    assert contains(ThickIdeal(3, 3), P(6, 6, 6, 6, 4, 2))
    assert all(P(*lam) in ThickIdeal(d, 0) for d in (-2, 0, 3) for lam in [(), (1,), (3, 1)])
    assert not contains(ThickIdeal(0, ZERO_K), EMPTY)


def test_ideal_validation_and_order():
    with pytest.raises(ValueError):
        ThickIdeal(0, -1)
    assert ThickIdeal(2, 3) <= ThickIdeal(2, 1)
    assert not ThickIdeal(2, 1) <= ThickIdeal(2, 3)
    assert ThickIdeal(2, ZERO_K) <= ThickIdeal(2, 5)


def test_negligible_examples():
    assert is_negligible(P(2), 0)
    assert not is_negligible(P(2), 2)
    assert not any(is_negligible(EMPTY, d) for d in range(-6, 7))


def test_k_minimal_examples():
    assert is_k_minimal(EMPTY, 0)
    assert is_k_minimal(P(2, 1), 2)
    assert k_invariants(P(2, 1), 2).k == 1
    assert not is_k_minimal(P(4, 3, 3, 2, 1), 2)


def test_generated_ideal_examples():
    assert ideal_generated_by(P(2), 0) == ThickIdeal(0, 1)
    assert ideal_generated_by(P(6, 6, 6, 6, 4, 2), 3) == ThickIdeal(3, 3)
    for d in range(-6, 7):
        assert ideal_generated_by(BOX, d).k == (1 if d == 0 else 0)


def test_json():
    assert ThickIdeal(0, 1).to_json(P(2)) == {"delta": 0, "k": 1, "contains": True, "k_of_lambda": 1}
    assert ThickIdeal(0, ZERO_K).to_json()["k"] is None


def test_kminimal_enumeration_examples():
    assert k_minimal_partitions(0, 0, 10) == [EMPTY]
    assert P(2, 1) in k_minimal_partitions(2, 1, 4)
    for d in range(-4, 5):
        for k in range(3):
            expected = [EMPTY] if k == 0 else []
            assert k_minimal_partitions(d, k, 0) == expected


def test_definition_matches_shape():
    for d in range(-6, 7):
        for lam in partitions_up_to(8):
            assert is_k_minimal(lam, d) == has_k_minimal_shape(lam, d)


def test_enumeration_matches_definition():
    for d in range(-6, 7):
        found = {}
        for lam in partitions_up_to(8):
            if is_k_minimal(lam, d):
                found.setdefault(k_invariants(lam, d).k, set()).add(lam)
        for k in range(5):
            assert set(k_minimal_partitions(d, k, 8)) == found.get(k, set())


def test_chain_is_strict():
    for d in range(-6, 7):
        for k in range(4):
            bound = max(2 * k * (abs(d) + 2 * k), 0)
            witnesses = k_minimal_partitions(d, k, bound)
            assert witnesses
            assert all(k_invariants(lam, d).k == k for lam in witnesses)


def test_generated_ideal_contains_generator():
    rng = random.Random(11)
    small = list(partitions_up_to(6))
    for _ in range(100):
        lam, d = rng.choice(small), rng.randint(-4, 4)
        assert lam in ideal_generated_by(lam, d)


def test_generator_reaches_larger_k():
    # every mu with k(mu) >= k(lam) is a summand of lam * nu for some nu
    for d in (-2, 0, 1, 2):
        for lam in k_minimal_partitions(d, 1, 4):
            for mu in partitions_up_to(5):
                if k_invariants(mu, d).k < 1:
                    continue
                candidates = partitions_up_to(lam.size + mu.size)
                assert any(mu in tensor_at(lam, nu, d) for nu in candidates), (lam, mu, d)
