from math import factorial

import pytest

from albanese.errors import InputError
from albanese.forests import (
    count_nonunital_prop,
    count_wheeled_prop,
    cross_check_invariants,
    enumerate_structures,
    stable_aut_cohomology_dim,
)
from albanese.homology import albanese_w, constituent_support
from albanese.partitions import specht_dim


class TestEnumeration:
    def test_spec_counts(self):
        assert len(enumerate_structures(2, 1)) == 1
        assert len(enumerate_structures(3, 1)) == 4
        assert len(enumerate_structures(1, 1)) == 0
        assert len(enumerate_structures(0, 0)) == 1

    def test_structures_partition_ground_set(self):
        for s in enumerate_structures(4, 1):
            elements = [x for block in s.tree_blocks + s.wheel_blocks for x in block]
            assert sorted(elements) == [1, 2, 3, 4]
            assert all(len(t) >= 2 for t in s.tree_blocks)
            assert all(len(w) >= 1 for w in s.wheel_blocks)

    def test_deterministic(self):
        assert enumerate_structures(4, 2) == enumerate_structures(4, 2)

    @pytest.mark.parametrize("a", range(0, 8))
    def test_degree_identity(self, a):
        for b in range(0, a + 1):
            for s in enumerate_structures(a, b):
                assert s.degree == a - b

    def test_negative_input(self):
        with pytest.raises(InputError):
            enumerate_structures(-1, 0)


class TestCounts:
    def test_spec_values(self):
        assert count_nonunital_prop(2, 1) == 1
        assert count_nonunital_prop(4, 2) == 6
        assert count_nonunital_prop(0, 0) == 1

    def test_vanishing_rules(self):
        for b in range(1, 5):
            for a in range(0, 2 * b):
                assert count_nonunital_prop(a, b) == 0
        assert count_nonunital_prop(2, 3) == 0

    def test_wheels_only_counts_are_set_partitions(self):
        # Bell numbers
        for a, bell in [(0, 1), (1, 1), (2, 2), (3, 5), (4, 15), (5, 52)]:
            assert count_nonunital_prop(a, 0) == bell


class TestWheeledCounts:
    def test_paper_values(self):
        assert count_wheeled_prop(1, 0) == 1
        assert count_wheeled_prop(2, 1) == 3

    @pytest.mark.parametrize("p", range(0, 5))
    def test_diagonal_is_factorial(self, p):
        assert count_wheeled_prop(p, p) == factorial(p)

    def test_2_2(self):
        assert count_wheeled_prop(2, 2) == 2


class TestStableAutDims:
    def test_values(self):
        r = stable_aut_cohomology_dim(1, 0)
        assert (r.degree, r.dim) == (1, 1)
        r = stable_aut_cohomology_dim(2, 1)
        assert (r.degree, r.dim) == (1, 3)
        r = stable_aut_cohomology_dim(2, 2)
        assert (r.degree, r.dim) == (0, 2)

    def test_other_degrees_vanish(self):
        r = stable_aut_cohomology_dim(2, 1)
        assert r.dim_in_degree(1) == 3
        assert r.dim_in_degree(0) == 0
        assert r.dim_in_degree(2) == 0

    def test_stable_range_values(self):
        # q >= 1: max(3i+4, p+q); q = 0: 3i+3
        assert stable_aut_cohomology_dim(2, 1).stable_from == 7
        assert stable_aut_cohomology_dim(1, 0).stable_from == 6
        assert stable_aut_cohomology_dim(6, 3).stable_from == 13


class TestCrossChecks:
    @pytest.mark.parametrize(
        "p,q",
        [(p, q) for q in range(0, 4) for p in range(q, 7) if p - q <= 3],
    )
    def test_invariant_match(self, p, q):
        assert cross_check_invariants(p, q)

    @pytest.mark.parametrize("i", [1, 2, 3])
    def test_proof_instance(self, i):
        assert cross_check_invariants(2 * i, i)

    def test_rejects_negative_degree(self):
        with pytest.raises(InputError):
            cross_check_invariants(1, 2)

    @pytest.mark.parametrize("i", [1, 2, 3, 4])
    def test_structure_count_identity(self, i):
        w = albanese_w(i, "full")
        for a, b in constituent_support(i):
            lhs = sum(
                m * specht_dim(bp.lam) * specht_dim(bp.mu)
                for bp, m in w.items()
                if bp.sizes == (a, b)
            )
            assert lhs == count_nonunital_prop(a, b), (i, a, b)
