"""Exchange polynomials and their factor labels over various base rings."""

from __future__ import annotations

import pytest

from clusterclass import (
    BaseRing,
    column_gcd,
    common_factors,
    exchange_polynomial,
    k_factors,
    nu,
    validate,
    z_factors,
)
from clusterclass.errors import IsolatedIndexOverField
from clusterclass.rings import divisors, odd_part, totient, two_valuation

Z = BaseRing.integers()
Q = BaseRing.rationals()
AC = BaseRing.algebraically_closed()
MU4 = BaseRing.custom([4])
MU46 = BaseRing.custom([4, 6])


class TestRings:
    def test_totient_small(self):
        assert [totient(d) for d in (1, 2, 3, 4, 6, 8, 12)] == [1, 1, 2, 2, 2, 4, 4]

    def test_divisors(self):
        assert divisors(12) == [1, 2, 3, 4, 6, 12]

    def test_odd_part_and_valuation(self):
        assert odd_part(24) == 3
        assert two_valuation(24) == 3
        assert two_valuation(7) == 0

    def test_parse_roundtrip(self):
        for text in ("Z", "Q", "algclosed", "custom:4", "custom:4,6"):
            assert BaseRing.parse(text).encode() == text

    def test_custom_closure_contains_divisors(self):
        k = BaseRing.custom([12])
        for d in (1, 2, 3, 4, 6, 12):
            assert k.has_primitive_root(d)
        assert not k.has_primitive_root(8)

    def test_nu_over_z_and_q(self):
        for k in (Z, Q):
            assert nu(k, 2) == 1
            assert nu(k, 4) == 1
            assert nu(k, 12) == 1

    def test_nu_algclosed_is_totient(self):
        assert nu(AC, 4) == 2
        assert nu(AC, 12) == 4

    def test_nu_custom(self):
        assert nu(MU4, 4) == 2
        assert nu(MU4, 8) == 1
        assert nu(MU46, 6) == 2
        assert nu(MU46, 12) == 1

    def test_parse_rejects_garbage(self):
        from clusterclass.errors import ClusterError

        with pytest.raises(ClusterError):
            BaseRing.parse("gf:7")


B2 = validate([[0, 2], [-1, 0]])
G2 = validate([[0, 3], [-1, 0]])


class TestExchangePolynomial:
    def test_monomials_from_column(self):
        f1 = exchange_polynomial(B2, 1, Z)
        assert (f1.u, f1.v) == ((0, 0), (0, 1))
        f2 = exchange_polynomial(B2, 2, Z)
        assert (f2.u, f2.v) == ((2, 0), (0, 0))

    def test_supports_disjoint(self, big_quiver):
        for i in range(1, 9):
            p = exchange_polynomial(big_quiver, i, Z)
            assert all(a == 0 or b == 0 for a, b in zip(p.u, p.v))

    def test_isolated_over_z_is_two(self, isolated_seed):
        p = exchange_polynomial(isolated_seed, 1, Z)
        assert p.is_constant_two
        assert p.u == p.v == (0, 0, 0, 0, 0)

    def test_isolated_over_field_raises(self, isolated_seed):
        with pytest.raises(IsolatedIndexOverField):
            exchange_polynomial(isolated_seed, 3, Q)

    def test_column_gcd(self, big_quiver):
        assert [column_gcd(big_quiver, i) for i in range(1, 9)] == [1, 3, 1, 1, 1, 1, 6, 2]


class TestZFactors:
    def test_binomial_single_label(self):
        labels = z_factors(exchange_polynomial(B2, 1, Z))
        assert len(labels) == 1
        assert labels[0].cyc == 2
        assert (labels[0].base_u, labels[0].base_v) == ((0, 0), (0, 1))

    def test_even_gcd_cyclotomic_index(self):
        # x^2 + 1 = Phi_4(x, 1)
        labels = z_factors(exchange_polynomial(B2, 2, Z))
        assert [lab.cyc for lab in labels] == [4]

    def test_odd_gcd_splits(self):
        # x^3 + 1 = (x + 1) Phi_6(x, 1)
        labels = z_factors(exchange_polynomial(G2, 2, Z))
        assert [lab.cyc for lab in labels] == [2, 6]
        assert all(lab.base_u == (0, 0) and lab.base_v == (1, 0) for lab in labels)

    def test_gcd_twelve(self):
        s = validate([[0, 12], [-12, 0]])
        labels = z_factors(exchange_polynomial(s, 1, Z))
        # 12 = 2^2 * 3: odd divisors 1, 3 -> indices 8, 24
        assert [lab.cyc for lab in labels] == [8, 24]

    def test_degree_identity(self):
        # each factor has degree phi(cyc) in the base monomials and the base
        # is the column over its gcd d, so the phi values must sum to d
        for val in (1, 2, 3, 4, 6, 8, 12, 20):
            s = validate([[0, val], [-val, 0]])
            labels = z_factors(exchange_polynomial(s, 1, Z))
            assert sum(totient(lab.cyc) for lab in labels) == val

    def test_special_two_label(self, isolated_seed):
        labels = z_factors(exchange_polynomial(isolated_seed, 1, Z))
        assert len(labels) == 1
        assert labels[0].special_two and labels[0].cyc == 0

    def test_column_negation_same_labels(self):
        # reversing every arrow at vertex 2 swaps the two monomials of f_2;
        # the sorted base pair absorbs that
        a = validate([[0, 2, 0], [-1, 0, 1], [0, -1, 0]])
        b = validate([[0, -2, 0], [1, 0, -1], [0, 1, 0]])
        assert z_factors(exchange_polynomial(a, 2, Z)) == z_factors(
            exchange_polynomial(b, 2, Z)
        )


class TestKFactors:
    def test_z_and_q_counts_match(self, big_quiver):
        for i in range(1, 9):
            p = exchange_polynomial(big_quiver, i, Z)
            assert len(k_factors(p, Z)) == len(k_factors(p, Q))

    def test_splitting_over_mu4(self):
        p = exchange_polynomial(B2, 2, Z)
        assert len(k_factors(p, Z)) == 1
        assert len(k_factors(p, MU4)) == 2
        assert [f.split_index for f in k_factors(p, MU4)] == [1, 2]

    def test_full_splitting_algclosed(self):
        # x^n + 1 has exactly n roots in an algebraically closed field
        for val in (1, 2, 3, 4, 6, 12):
            s = validate([[0, val], [-val, 0]])
            p = exchange_polynomial(s, 1, Z)
            assert len(k_factors(p, AC)) == val

    def test_special_two_never_splits(self, isolated_seed):
        p = exchange_polynomial(isolated_seed, 3, Z)
        assert len(k_factors(p, Z)) == 1

    def test_to_dict_shape(self):
        f = k_factors(exchange_polynomial(B2, 2, Z), MU4)[1]
        d = f.to_dict()
        assert set(d) == {"base_u", "base_v", "cyc", "split", "special_two"}
        assert d["split"] == 2


class TestCommonFactors:
    def test_partner_columns_share(self, big_quiver):
        f2 = exchange_polynomial(big_quiver, 2, Z)
        f4 = exchange_polynomial(big_quiver, 4, Z)
        shared = common_factors(f2, f4)
        assert len(shared) == 1
        assert shared[0].cyc == 2

    def test_unrelated_columns_disjoint(self, big_quiver):
        f1 = exchange_polynomial(big_quiver, 1, Z)
        f2 = exchange_polynomial(big_quiver, 2, Z)
        assert common_factors(f1, f2) == []

    def test_even_pair_shares_all(self, big_quiver):
        f7 = exchange_polynomial(big_quiver, 7, Z)
        f8 = exchange_polynomial(big_quiver, 8, Z)
        # gcds 6 and 2: shared labels are those of the smaller gcd
        shared = common_factors(f7, f8)
        assert [lab.cyc for lab in shared] == [4]

    def test_isolated_columns_share_special_two(self, isolated_seed):
        f1 = exchange_polynomial(isolated_seed, 1, Z)
        f3 = exchange_polynomial(isolated_seed, 3, Z)
        shared = common_factors(f1, f3)
        assert len(shared) == 1 and shared[0].special_two

    def test_self_intersection(self):
        p = exchange_polynomial(G2, 2, Z)
        assert common_factors(p, p) == z_factors(p)
