import math
from itertools import permutations

import pytest

from conftest import triples_of_degree

from kroncalc.coefficients import (
    kronecker,
    lr,
    lr3,
    lr_induced_oracle,
    lr3_induced_oracle,
)
from kroncalc.partitions import Partition, conjugate, durfee, partitions_of


class TestKronecker:
    def test_known_values(self):
        assert kronecker((2, 2), (2, 2), (2, 2)) == 1
        assert kronecker((1, 1), (1, 1), (1, 1)) == 0
        assert kronecker((8, 2, 2, 2, 2, 2), (8, 2, 2, 2, 2, 2), (6, 6, 6)) == 8

    def test_trivial_factor(self):
        for n in range(1, 8):
            for lam in partitions_of(n):
                assert kronecker(Partition((n,)), lam, lam) == 1

    def test_self_conjugate_square_positive(self):
        assert kronecker((3, 3, 3), (3, 3, 3), (3, 3, 3)) > 0

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            kronecker((2, 1), (2, 2), (3,))

    @pytest.mark.parametrize("n", range(1, 7))
    def test_s3_and_transpose_symmetry(self, n):
        for lam, mu, nu in triples_of_degree(n):
            g = kronecker(lam, mu, nu)
            for p in permutations((lam, mu, nu)):
                assert kronecker(*p) == g
            assert kronecker(conjugate(lam), conjugate(mu), nu) == g

    @pytest.mark.parametrize("n", range(1, 7))
    def test_dvir_durfee_bound(self, n):
        for lam, mu, nu in triples_of_degree(n):
            if kronecker(lam, mu, nu) > 0:
                assert durfee(lam) <= 2 * durfee(mu) * durfee(nu)


class TestLR:
    def test_identity_cases(self):
        for lam in partitions_of(5):
            assert lr(lam, lam, ()) == 1

    def test_small_example(self):
        assert lr((2, 1), (1,), (1, 1)) == 1
        assert lr((2, 1), (1,), (2,)) == 1
        assert lr((2, 2), (1,), (3,)) == 0  # a 1-column pair cannot repeat a value

    def test_mu_not_contained_gives_zero(self):
        assert lr((3, 1), (2, 2), ()) == 0
        assert lr((2, 2), (3,), (1,)) == 0

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            lr((3, 1), (1,), (1,))

    @pytest.mark.parametrize("n", range(0, 9))
    def test_matches_induced_character_oracle(self, n):
        for lam in partitions_of(n):
            for k in range(n + 1):
                for mu in partitions_of(k):
                    for nu in partitions_of(n - k):
                        assert lr(lam, mu, nu) == lr_induced_oracle(lam, mu, nu)

    def test_sqrt_binomial_bound(self):
        for n in range(0, 9):
            for lam in partitions_of(n):
                for k in range(n + 1):
                    for mu in partitions_of(k):
                        for nu in partitions_of(n - k):
                            c = lr(lam, mu, nu)
                            assert c * c <= math.comb(n, k)


class TestLR3:
    def test_collapse(self):
        for lam in partitions_of(5):
            assert lr3(lam, lam, (), ()) == 1

    def test_small_example(self):
        assert lr3((2, 1), (1,), (1,), (1,)) == 2

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            lr3((2, 1), (1,), (1,), (2,))

    @pytest.mark.parametrize("n", range(0, 9))
    def test_symmetric_in_lower_indices(self, n):
        for total_a in range(n + 1):
            for total_b in range(n - total_a + 1):
                total_c = n - total_a - total_b
                for lam in partitions_of(n):
                    for a in partitions_of(total_a):
                        for b in partitions_of(total_b):
                            for c in partitions_of(total_c):
                                v = lr3(lam, a, b, c)
                                assert lr3(lam, b, c, a) == v
                                assert lr3(lam, c, a, b) == v

    @pytest.mark.parametrize("n", range(0, 7))
    def test_matches_triple_induction_oracle(self, n):
        for lam in partitions_of(n):
            for ta in range(n + 1):
                for tb in range(n - ta + 1):
                    for a in partitions_of(ta):
                        for b in partitions_of(tb):
                            for c in partitions_of(n - ta - tb):
                                assert lr3(lam, a, b, c) == lr3_induced_oracle(
                                    lam, a, b, c
                                )

    def test_trinomial_bound(self):
        for n in range(0, 8):
            for ta in range(n + 1):
                for tb in range(n - ta + 1):
                    tc = n - ta - tb
                    trinomial = math.comb(n, ta) * math.comb(n - ta, tb)
                    for lam in partitions_of(n):
                        for a in partitions_of(ta):
                            for b in partitions_of(tb):
                                for c in partitions_of(tc):
                                    v = lr3(lam, a, b, c)
                                    assert v * v <= trinomial


class TestSemigroupAndScaling:
    def test_semigroup_property_sampled(self):
        # positive base triples at small degree, added to everything at the rest
        for m in range(1, 5):
            positives = [
                t for t in triples_of_degree(m) if kronecker(*t) > 0
            ][:6]
            for n in range(1, 9 - m):
                for lam, mu, nu in list(triples_of_degree(n))[:40]:
                    g = kronecker(lam, mu, nu)
                    if g == 0:
                        continue
                    for al, be, ga in positives:
                        from kroncalc.partitions import add

                        assert (
                            kronecker(add(lam, al), add(mu, be), add(nu, ga)) >= g
                        )

    def test_scaled_monotonicity_sampled(self):
        from kroncalc.partitions import scale

        for n in range(1, 5):
            for lam, mu, nu in triples_of_degree(n):
                g1 = kronecker(lam, mu, nu)
                if g1 == 0:
                    continue
                g2 = kronecker(scale(2, lam), scale(2, mu), scale(2, nu))
                g3 = kronecker(scale(3, lam), scale(3, mu), scale(3, nu))
                assert g2 >= g1
                assert g3 >= g2
