"""Finite posets, monotone map counting, torsion class counts."""

import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schur_clusters import (
    antichain,
    as_finite_poset,
    build_poset,
    chain,
    cluster_poset,
    count_monotone_maps,
    covers_of,
    enumerate_monotone_maps,
    errors,
    is_monotone,
    map_poset_leq,
    torsion_class_count,
)

from oracles import monotone_maps_bruteforce, random_poset_matrix


def brute(p, l):
    return monotone_maps_bruteforce(
        np.asarray(p.leq).tolist(), np.asarray(l.leq).tolist()
    )


def rand_poset(rng, n):
    return build_poset(n, relation=np.array(random_poset_matrix(rng, n)))


class TestBuild:
    def test_from_covers(self):
        p = build_poset(3, covers=[(0, 1), (1, 2)])
        assert bool(p.leq[0, 2])
        assert not p.leq[2, 0]

    def test_from_relation_requires_closure(self):
        rel = [(0, 1), (1, 2)]  # missing (0, 2)
        with pytest.raises(errors.NotTransitiveClosure):
            build_poset(3, relation=rel)

    def test_antisymmetry_enforced(self):
        with pytest.raises(errors.NotAntisymmetric):
            build_poset(2, covers=[(0, 1), (1, 0)])

    def test_exactly_one_source(self):
        with pytest.raises(ValueError):
            build_poset(2)
        with pytest.raises(ValueError):
            build_poset(2, relation=[(0, 1)], covers=[(0, 1)])

    def test_reflexive_added(self):
        p = build_poset(2, relation=[(0, 1)])
        assert bool(p.leq[0, 0]) and bool(p.leq[1, 1])

    def test_index_range_checked(self):
        with pytest.raises(errors.BadIndex):
            build_poset(2, covers=[(0, 2)])

    def test_names_length(self):
        with pytest.raises(errors.SizeMismatch):
            build_poset(2, covers=[(0, 1)], names=["only-one"])

    def test_chain_antichain(self):
        c = chain(3)
        assert bool(c.leq[0, 2]) and not c.leq[2, 0]
        a = antichain(3)
        assert int(np.asarray(a.leq).sum()) == 3

    def test_covers_of_recovers_input(self):
        p = build_poset(4, covers=[(0, 1), (1, 2), (1, 3)])
        assert sorted(covers_of(p)) == [(0, 1), (1, 2), (1, 3)]


class TestMonotone:
    def test_is_monotone(self):
        c2 = chain(2)
        assert is_monotone((0, 1), c2, c2)
        assert not is_monotone((1, 0), c2, c2)

    def test_map_validation(self):
        c2 = chain(2)
        with pytest.raises(errors.SizeMismatch):
            is_monotone((0,), c2, c2)
        with pytest.raises(errors.BadIndex):
            is_monotone((0, 5), c2, c2)

    def test_chain_to_chain_count(self):
        # Monotone maps chain(2) -> chain(2): 00, 01, 11.
        assert count_monotone_maps(chain(2), chain(2)) == 3

    def test_antichain_counts_functions(self):
        assert count_monotone_maps(antichain(3), chain(2)) == 8
        assert count_monotone_maps(chain(3), antichain(2)) == 2

    def test_methods_agree_with_bruteforce(self):
        rng = random.Random(20260815)
        for trial in range(12):
            np_ = rng.randint(1, 5)
            nl = rng.randint(1, 4)
            p = rand_poset(rng, np_)
            l = rand_poset(rng, nl)
            expected = brute(p, l)
            assert count_monotone_maps(p, l, method="dp") == expected
            assert count_monotone_maps(p, l, method="backtrack") == expected
            assert count_monotone_maps(p, l) == expected

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=0, max_value=2**30), st.integers(2, 5))
    def test_dp_equals_backtracking(self, seed, size):
        rng = random.Random(seed)
        p = rand_poset(rng, size)
        l = rand_poset(rng, 4)
        assert count_monotone_maps(p, l, method="dp") == count_monotone_maps(
            p, l, method="backtrack"
        )

    def test_enumerate_matches_count(self):
        p = chain(3)
        l = chain(3)
        maps = enumerate_monotone_maps(p, l)
        assert len(maps) == count_monotone_maps(p, l) == 10
        assert maps == sorted(maps)
        assert all(is_monotone(f, p, l) for f in maps)

    def test_enumerate_limit(self):
        with pytest.raises(errors.LimitExceeded):
            enumerate_monotone_maps(antichain(8), chain(6), limit=10)

    def test_pointwise_order(self):
        c3 = chain(3)
        assert map_poset_leq((0, 0, 1), (0, 1, 2), c3, c3)
        assert not map_poset_leq((0, 1, 2), (0, 0, 1), c3, c3)


class TestTorsionCounts:
    def test_point_counts_clusters(self, a2):
        assert torsion_class_count(a2, chain(1)) == 5

    def test_two_chain_counts_leq_pairs(self, a2):
        assert torsion_class_count(a2, chain(2)) == 13

    def test_rank_one_chains(self, a1):
        # Target order is a 2-chain; maps from a k-chain: k + 1.
        for k in range(1, 8):
            assert torsion_class_count(a1, chain(k)) == k + 1

    def test_methods_agree(self, a3):
        p = build_poset(4, covers=[(0, 1), (0, 2), (1, 3), (2, 3)])
        dp = torsion_class_count(a3, p, method="dp")
        bt = torsion_class_count(a3, p, method="backtrack")
        assert dp == bt

    def test_requires_dynkin(self, kronecker):
        with pytest.raises(errors.NotDynkin):
            torsion_class_count(kronecker, chain(1))

    def test_matches_bruteforce_into_pentagon(self, a2):
        target = as_finite_poset(cluster_poset(a2))
        rng = random.Random(7)
        for _ in range(6):
            n = rng.randint(1, 4)
            p = rand_poset(rng, n)
            assert torsion_class_count(a2, p) == brute(p, target)


class TestAsFinitePoset:
    def test_names_and_order_preserved(self, a2):
        cp = cluster_poset(a2)
        fp = as_finite_poset(cp)
        assert fp.n == 5
        assert np.array_equal(np.asarray(fp.leq), np.asarray(cp.leq))
        assert fp.names is not None and len(fp.names) == 5
        assert any("-e1" in name for name in fp.names)
