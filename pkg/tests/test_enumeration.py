"""Exhaustive enumeration: class counts, representative canonicity,
worker determinism, corpus files."""

import random

import pytest

from monoalg import enumeration
from monoalg.core import FiniteMonounary
from monoalg.iso import are_isomorphic, table_certificate
from oracles import exists_iso

# class counts for 1..5 points, confirmed by pairwise brute-force
# bijection checks in test_every_table_matches_exactly_one_representative
KNOWN_COUNTS = [1, 3, 7, 19, 47]


def test_counts_small():
    assert enumeration.counts(5) == KNOWN_COUNTS


def test_representatives_are_pairwise_non_isomorphic(corpus):
    for n in range(1, 6):
        reps = corpus[n]
        certs = {table_certificate(A.table) for A in reps}
        assert len(certs) == len(reps)
    # spot-check certificates against raw bijection search
    rng = random.Random(7)
    reps4 = corpus[4]
    for _ in range(100):
        A, B = rng.sample(reps4, 2)
        assert not exists_iso(A.table, B.table)


def test_every_table_matches_exactly_one_representative(corpus):
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(1, 5)
        t = tuple(rng.randrange(n) for _ in range(n))
        hits = [A for A in corpus[n] if are_isomorphic(FiniteMonounary(t), A)]
        assert len(hits) == 1
        assert exists_iso(t, hits[0].table)
        # representative is the least table of its class
        assert hits[0].table <= t


def test_worker_determinism():
    one = enumeration.enumerate_up_to_iso(5, workers=1)
    many = enumeration.enumerate_up_to_iso(5, workers=8)
    assert one == many


def test_bounds():
    with pytest.raises(ValueError):
        enumeration.enumerate_up_to_iso(0)
    with pytest.raises(ValueError):
        enumeration.enumerate_up_to_iso(8)


def test_random_algebra_is_seed_deterministic():
    a = enumeration.random_algebra(6, 123)
    b = enumeration.random_algebra(6, 123)
    c = enumeration.random_algebra(6, 124)
    assert a == b
    assert a.n == 6
    assert isinstance(c, FiniteMonounary)
    assert enumeration.random_algebra(1, 0).table == (0,)
    with pytest.raises(ValueError):
        enumeration.random_algebra(0, 1)


def test_corpus_save_load_round_trip(tmp_path, corpus):
    c = enumeration.Corpus(4, corpus[4])
    path = tmp_path / "n4.txt"
    enumeration.save_corpus(c, str(path))
    back = enumeration.load_corpus(str(path))
    assert back == c


def test_load_corpus_validates_header(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("# n=2 count=3\n0 0\n1 0\n")
    with pytest.raises(ValueError, match="promises"):
        enumeration.load_corpus(str(path))
    path.write_text("0 0\n")
    with pytest.raises(ValueError, match="header"):
        enumeration.load_corpus(str(path))
