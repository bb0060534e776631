import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from albanese.errors import InputError
from albanese.partitions import (
    Bipartition,
    check_partition,
    conjugate,
    lr_coefficient,
    parse_bipartition,
    parse_partition,
    partition_str,
    partitions_of,
    schur_product,
    specht_dim,
    symmetric_group_character,
)

from helpers import poly_mul, schur_expand, schur_poly, syt_count

small_partitions = st.integers(0, 6).map(lambda k: partitions_of(k)).flatmap(st.sampled_from)


class TestSpechtDim:
    @pytest.mark.parametrize("k", range(0, 7))
    def test_one_row(self, k):
        assert specht_dim((k,) if k else ()) == 1

    def test_small_shapes(self):
        # brute-force tableau counts, frozen
        assert syt_count((2, 1)) == 2
        assert specht_dim((2, 1)) == 2
        assert syt_count((3, 1)) == 3
        assert specht_dim((3, 1)) == 3

    @pytest.mark.parametrize("k", range(0, 8))
    def test_against_enumeration(self, k):
        for lam in partitions_of(k):
            assert specht_dim(lam) == syt_count(lam)

    @pytest.mark.parametrize("p", range(0, 9))
    def test_sum_of_squares(self, p):
        total = sum(specht_dim(lam) ** 2 for lam in partitions_of(p))
        import math

        assert total == math.factorial(p)


class TestPartitionsOf:
    def test_zero(self):
        assert partitions_of(0) == [()]

    def test_three(self):
        assert partitions_of(3) == [(3,), (2, 1), (1, 1, 1)]

    def test_length_bound(self):
        assert partitions_of(4, max_length=2) == [(4,), (3, 1), (2, 2)]

    def test_negative(self):
        with pytest.raises(InputError):
            partitions_of(-1)

    def test_deterministic(self):
        assert partitions_of(6) == partitions_of(6)


class TestLRCoefficient:
    def test_spec_values(self):
        assert lr_coefficient((1,), (1,), (2,)) == 1
        assert lr_coefficient((1,), (1,), (1, 1)) == 1
        assert lr_coefficient((2,), (1,), (1, 1, 1)) == 0

    @given(small_partitions, small_partitions, small_partitions)
    @settings(max_examples=150, deadline=None)
    def test_symmetry(self, lam, xi, nu):
        assert lr_coefficient(lam, xi, nu) == lr_coefficient(xi, lam, nu)

    @pytest.mark.parametrize("a,b", [(a, b) for a in range(0, 4) for b in range(0, 7 - a) if a + b <= 6])
    def test_products_against_monomials(self, a, b):
        # spec invariant: monomial multiplication in 4 variables agrees with
        # the LR expansion for |lam| + |xi| <= 6
        nvars = 4
        for lam in partitions_of(a):
            for xi in partitions_of(b):
                brute = schur_expand(
                    poly_mul(dict(schur_poly(lam, nvars)), dict(schur_poly(xi, nvars))),
                    nvars,
                )
                lr = {
                    nu: c for nu, c in schur_product(lam, xi).items() if len(nu) <= nvars
                }
                assert lr == brute, (lam, xi)


class TestCharacters:
    def test_trivial_rep(self):
        for rho in partitions_of(5):
            assert symmetric_group_character((5,), rho) == 1

    def test_sign_on_transposition(self):
        assert symmetric_group_character((1, 1), (2,)) == -1

    def test_dimension_value(self):
        assert symmetric_group_character((2, 1), (1, 1, 1)) == 2

    @pytest.mark.parametrize("k", range(1, 7))
    def test_identity_column_is_dimension(self, k):
        for lam in partitions_of(k):
            assert symmetric_group_character(lam, (1,) * k) == specht_dim(lam)

    def test_size_mismatch(self):
        with pytest.raises(InputError):
            symmetric_group_character((2,), (3,))

    def test_column_orthogonality_at_identity(self):
        # sum over lam of chi(lam, id) * chi(lam, rho) = 0 for rho != id
        for rho in partitions_of(4):
            if rho == (1, 1, 1, 1):
                continue
            total = sum(
                specht_dim(lam) * symmetric_group_character(lam, rho)
                for lam in partitions_of(4)
            )
            assert total == 0, rho


class TestTextForms:
    def test_partition_round_trip(self):
        assert partition_str(()) == "0"
        assert parse_partition("0") == ()
        assert parse_partition("2,1") == (2, 1)
        assert partition_str((2, 1)) == "2,1"

    def test_bipartition_round_trip(self):
        b = parse_bipartition("1,1|1")
        assert b == Bipartition((1, 1), (1,))
        assert str(b) == "1,1|1"
        assert str(parse_bipartition("0|0")) == "0|0"

    def test_rejects_garbage(self):
        with pytest.raises(InputError):
            parse_partition("1,2")
        with pytest.raises(InputError):
            parse_bipartition("1,1")
        with pytest.raises(InputError):
            check_partition((1, -1))

    @given(small_partitions)
    def test_round_trip_property(self, lam):
        assert parse_partition(partition_str(lam)) == lam


def test_conjugate_involution():
    for k in range(7):
        for lam in partitions_of(k):
            assert conjugate(conjugate(lam)) == lam
