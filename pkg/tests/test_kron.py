import json
from itertools import permutations

import pytest
from hypothesis import given, settings

from hornkron.errors import LengthBoundViolated
from hornkron.kron import (
    KronRecord,
    enumerate_kron,
    kostka,
    kron_coefficient,
    kron_oracle,
    records_to_csv,
    records_to_json,
)
from hornkron.partitions import Partition, bounded_partitions, conjugate, partitions_of

from conftest import partitions


def P(*parts):
    return Partition(parts)


def test_examples():
    assert kron_coefficient(P(3), P(2, 1), P(2, 1)) == 1
    assert kron_coefficient(P(1, 1), P(1, 1), P(1, 1)) == 0
    assert kron_coefficient(P(2, 1), P(2, 1), P(2, 1)) == 1
    assert kron_coefficient(P(2), P(2), P(1)) == 0


def test_oracle_examples():
    assert kron_oracle(P(2), P(2), P(2), 1, 1) == 1
    assert kron_oracle(P(2, 1), P(2, 1), P(2, 1), 2, 2) == 1
    assert kron_oracle(P(2), P(1, 1), P(1, 1), 2, 2) == 1
    with pytest.raises(LengthBoundViolated):
        kron_oracle(P(1, 1, 1), P(3), P(3), 2, 2)


def test_kostka():
    assert kostka(P(2, 1), (1, 1, 1)) == 2
    assert kostka(P(3), (1, 1, 1)) == 1
    assert kostka(P(2, 2), (2, 1, 1)) == 1
    assert kostka(P(1, 1, 1), (2, 1)) == 0


@settings(max_examples=60, deadline=None)
@given(partitions(max_size=7, min_size=1))
def test_symmetries(alpha):
    n = alpha.size
    for beta in partitions_of(n):
        for gamma in partitions_of(n):
            g = kron_coefficient(alpha, beta, gamma)
            for perm in permutations((alpha, beta, gamma)):
                assert kron_coefficient(*perm) == g
            assert kron_coefficient(conjugate(alpha), conjugate(beta), gamma) == g
    assert kron_coefficient((n,), alpha, alpha) == 1


def test_enumerate_examples():
    recs = enumerate_kron(2, 2, 3, 2, nmin=2)
    assert [r.triple for r in recs] == [(P(2), P(2), P(2)), (P(2), P(1, 1), P(1, 1)), (P(1, 1), P(2), P(1, 1)), (P(1, 1), P(1, 1), P(2))]
    one_row = enumerate_kron(1, 1, 1, 5)
    assert [(r.triple, r.g) for r in one_row] == [((P(n), P(n), P(n)), 1) for n in range(1, 6)]


def test_enumerate_matches_direct():
    recs = enumerate_kron(2, 3, 4, 6)
    found = {r.triple: r.g for r in recs}
    for n in range(1, 7):
        for a in bounded_partitions(n, 2):
            for b in bounded_partitions(n, 3):
                for c in bounded_partitions(n, 4):
                    g = kron_coefficient(a, b, c)
                    assert found.get((a, b, c), 0) == g
    assert all(r.g >= 1 and r.alpha.size == r.beta.size == r.gamma.size == r.n for r in recs)


def test_serialization():
    recs = enumerate_kron(2, 2, 3, 2)
    data = json.loads(records_to_json(recs))
    assert [KronRecord.from_json(d) for d in data] == recs
    assert data[1] == {"alpha": [2], "beta": [2], "gamma": [2], "n": 2, "g": 1}
    csv = records_to_csv(recs).splitlines()
    assert csv[0] == "alpha,beta,gamma,n,g"
    assert csv[1] == '"1","1","1",1,1'
