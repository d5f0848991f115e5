import pytest
from hypothesis import given
from hypothesis import strategies as st

from jmb import (
    CatalogParseError,
    CatalogValidationError,
    DomainError,
    LieTypeDescriptor,
    alternating_min_degree,
    builtin_catalog,
    dyadic_weight,
    factorial,
    inertia_bound,
    is_prime,
    lie_component_bound,
    parse_catalog,
    primitive_cap,
    sp_normalizer_bound,
    spin_degree_divisor,
)

PRIMES_TO_73 = [p for p in range(2, 74) if is_prime(p)]


def simple_orthogonal_plus_order(n, q):
    # oracle: order formula for the simple split orthogonal group in
    # dimension 2n, independent of any catalog data
    d = 1
    while (q**n - 1) % (d + 1) == 0 and d + 1 <= 4:
        d += 1 if (q**n - 1) % (d + 1) == 0 else 0
        if d >= 4:
            break
    import math

    d = math.gcd(4, q**n - 1)
    order = q ** (n * (n - 1)) * (q**n - 1)
    for i in range(1, n):
        order *= q ** (2 * i) - 1
    return order // d


class TestSymplecticNormalizerBound:
    def test_printed_values(self):
        assert sp_normalizer_bound(3, 1) == 216
        assert sp_normalizer_bound(5, 1) == 3000
        assert sp_normalizer_bound(3, 2) == 4199040
        assert sp_normalizer_bound(2, 1) == 24

    def test_degree7_remark_value(self):
        assert sp_normalizer_bound(7, 1) == 16464

    def test_rejects_composite(self):
        with pytest.raises(DomainError):
            sp_normalizer_bound(4, 1)


class TestLieComponentBound:
    def test_values(self):
        assert lie_component_bound(1) == 2
        assert lie_component_bound(2) == 6
        assert lie_component_bound(8) == 72

    def test_domain(self):
        with pytest.raises(DomainError):
            lie_component_bound(0)


class TestInertiaBound:
    def test_untwisted_rank_example(self):
        desc = LieTypeDescriptor(a=1, graph_factor=2, min_fund_degree=2)
        assert inertia_bound(desc, 8) == 48  # 2*8*log2(8)

    def test_tetravalent_family_collapse(self):
        desc = LieTypeDescriptor(a=1, graph_factor=6, min_fund_degree=8)
        assert inertia_bound(desc, 64) == 768
        # 6*log_8(n) equals 2*log_2(n): same bound through the binary route
        assert 2 * 1 * 64 * 6 == 768

    def test_twisted_example(self):
        desc = LieTypeDescriptor(a=2, graph_factor=1, min_fund_degree=3)
        assert inertia_bound(desc, 9) == 36  # 1*2*9*log3(9)

    def test_clamps_below_fundamental_degree(self):
        desc = LieTypeDescriptor(a=1, graph_factor=2, min_fund_degree=8)
        assert inertia_bound(desc, 4) == 8  # log factor clamped to 1

    def test_exact_at_powers(self):
        for m in (2, 3, 5):
            desc = LieTypeDescriptor(a=1, graph_factor=2, min_fund_degree=m)
            for k in range(1, 4):
                n = m**k
                if n > 200:
                    continue
                assert inertia_bound(desc, n) == 2 * n * k

    def test_ceiling_is_exact(self):
        # 2*10*log2(10) = 66.43..., so the bound must be 67, not 66
        desc = LieTypeDescriptor(a=1, graph_factor=2, min_fund_degree=2)
        assert inertia_bound(desc, 10) == 67

    def test_descriptor_validation(self):
        with pytest.raises(DomainError):
            LieTypeDescriptor(a=1, graph_factor=6, min_fund_degree=4)
        with pytest.raises(DomainError):
            LieTypeDescriptor(a=3, graph_factor=2, min_fund_degree=4)
        with pytest.raises(DomainError):
            LieTypeDescriptor(a=4, graph_factor=1, min_fund_degree=2)


class TestAlternatingMinDegree:
    def test_divisible_case(self):
        assert alternating_min_degree(10, 5) == 8

    def test_coprime_case(self):
        assert alternating_min_degree(10, 3) == 9

    def test_even_case(self):
        assert alternating_min_degree(12, 2) == 10

    def test_domain(self):
        with pytest.raises(DomainError):
            alternating_min_degree(8, 3)


class TestDyadicWeight:
    def test_values(self):
        assert dyadic_weight(7) == 3
        assert dyadic_weight(10) == 2
        assert dyadic_weight(16) == 1

    @given(st.integers(min_value=1, max_value=10**9))
    def test_against_bit_string(self, m):
        assert dyadic_weight(m) == bin(m).count("1")


class TestSpinDegreeDivisor:
    def test_sixteen_divides_range(self):
        assert spin_degree_divisor(13) == 16
        # the printed claim for 13..15 is "divisible by 16"; the exact
        # divisor at 14 and 15 is larger but still a multiple of 16
        for m in (13, 14, 15):
            assert spin_degree_divisor(m) % 16 == 0

    def test_sixteen(self):
        assert spin_degree_divisor(16) == 128

    def test_growth_chain(self):
        # consistency with d >= (2^(m-3) / (m+1))^(1/2), checked as
        # an exact integer inequality d^2 * (m+1) >= 2^(m-3)
        for m in range(8, 65):
            d = spin_degree_divisor(m)
            assert d * d * (m + 1) >= 2 ** (m - 3)

    def test_domain(self):
        with pytest.raises(DomainError):
            spin_degree_divisor(7)


class TestPrimitiveCap:
    def test_table_rows(self):
        assert primitive_cap(2, 7) == 60
        assert primitive_cap(2, 5) == 24
        assert primitive_cap(9, 5) == 12700800
        assert primitive_cap(12, 7) == 448345497600

    def test_generic_rule(self):
        assert primitive_cap(13, 3) == factorial(15)
        assert primitive_cap(8, 2) == factorial(10)
        assert primitive_cap(2, 2) == 6
        assert primitive_cap(10, 2) == factorial(12)
        assert primitive_cap(10, 7) == factorial(11)

    def test_domain(self):
        with pytest.raises(DomainError):
            primitive_cap(1, 3)
        with pytest.raises(DomainError):
            primitive_cap(4, 6)

    def test_large_characteristic_stability(self):
        # caps are characteristic-free once ell clears both r+2 (the
        # generic divisibility rule) and 5 (the largest prime in any
        # table condition); at r=2 the bound 24 still lives at ell=5 > r+2
        assert primitive_cap(2, 5) != primitive_cap(2, 7)
        for r in range(2, 31):
            floor = max(r + 2, 5)
            a = next(p for p in range(floor + 1, 400) if is_prime(p))
            b = next(p for p in range(a + 1, 400) if is_prime(p))
            assert primitive_cap(r, a) == primitive_cap(r, b)


class TestConstituents:
    def test_no_degree_two_in_characteristic_two(self, catalog):
        assert catalog.constituents(2, 2) == []

    def test_degree_five_char_two(self, catalog):
        [entry] = catalog.constituents(2, 5)
        assert (entry.degree, entry.index, entry.label) == (5, 3000, "5^(1+2).SL2(5)")

    def test_excluded_when_char_divides_next(self, catalog):
        assert catalog.constituents(7, 13) == []

    def test_two_point_extension_when_char_divides_next_next(self, catalog):
        [entry] = catalog.constituents(2, 10)
        assert entry.index == factorial(12)
        assert entry.label == "S12"
        assert entry.kind == "symmetric"

    def test_degree_three_char_five(self, catalog):
        [entry] = catalog.constituents(5, 3)
        assert (entry.index, entry.label) == (2520, "3.A7")

    def test_trivial(self, catalog):
        [entry] = catalog.constituents(7, 1)
        assert entry.kind == "trivial" and entry.index == 1

    def test_at_most_one_everywhere(self, catalog):
        for ell in PRIMES_TO_73:
            for m in range(1, 151):
                assert len(catalog.constituents(ell, m)) <= 1

    def test_high_degree_trichotomy(self, catalog):
        for ell in (2, 3, 5, 7, 11, 13):
            for m in range(10, 151):
                if m == 12:
                    continue
                found = catalog.constituents(ell, m)
                if (m + 1) % ell == 0:
                    assert found == []
                elif (m + 2) % ell == 0:
                    assert found[0].index == factorial(m + 2)
                else:
                    assert found[0].index == factorial(m + 1)


class TestBuiltinModes:
    def test_verbatim_keeps_printed_digits(self):
        cat = builtin_catalog("paper-verbatim")
        assert cat.table_value(8, 3) == 348368800
        assert any(c.index == 174184400 for c in cat.components_at(8, 3))
        assert any(c.index == 1818400 for c in cat.components_at(8, 5))

    def test_corrected_uses_order_formula(self):
        cat = builtin_catalog("corrected")
        o8 = simple_orthogonal_plus_order(4, 2)
        assert o8 == 174182400
        assert cat.table_value(8, 3) == 2 * o8 == 348364800
        assert any(c.index == o8 for c in cat.components_at(8, 3))
        assert any(c.index == factorial(10) // 2 for c in cat.components_at(8, 5))

    def test_permissive_inserts_dominated_rows(self):
        cat = builtin_catalog("permissive")
        [entry] = cat.constituents(2, 7)
        assert entry.index == 16464
        [entry] = cat.constituents(2, 11)
        assert entry.index == 244823040
        [entry] = cat.constituents(7, 5)
        assert entry.index == 25920
        [entry] = cat.constituents(3, 9)
        assert entry.index == factorial(10)
        [entry] = cat.constituents(2, 8)
        assert entry.index == factorial(10)
        # the base catalog has none of these
        base = builtin_catalog("paper-verbatim")
        for ell, m in ((2, 7), (2, 11), (7, 5), (3, 9), (2, 8)):
            assert base.constituents(ell, m) == []

    def test_permissive_caps_unchanged(self):
        base = builtin_catalog("paper-verbatim")
        perm = builtin_catalog("permissive")
        for r in range(2, 20):
            for ell in (2, 3, 5, 7, 11):
                assert primitive_cap(r, ell, base) == primitive_cap(r, ell, perm)

    def test_unknown_mode(self):
        with pytest.raises(DomainError):
            builtin_catalog("lenient")


class TestCatalogFile:
    def test_round_trip(self):
        for mode in ("paper-verbatim", "corrected", "permissive"):
            cat = builtin_catalog(mode)
            again = parse_catalog(cat.serialize())
            assert again == cat

    def test_single_row_matches_builtin(self, catalog):
        text = (
            "jordan-catalog v1 mode=paper-verbatim\n"
            "kind=constituent degree=3 cond=in:5 index=2520 label=3.A7 center=3\n"
        )
        cat = parse_catalog(text)
        [entry] = cat.constituents(5, 3)
        [builtin_entry] = catalog.constituents(5, 3)
        assert entry.index == builtin_entry.index
        assert entry.label == builtin_entry.label

    def test_index_expressions(self):
        text = (
            "jordan-catalog v1 mode=paper-verbatim\n"
            "kind=constituent degree=10 cond=in:2 index=fact(12) label=S12\n"
            "kind=constituent degree=9 cond=in:7 index=2*fact(5)*3 label=X\n"
        )
        cat = parse_catalog(text)
        assert cat.table_value(10, 2) == factorial(12)
        assert cat.table_value(9, 7) == 720

    def test_nonprime_condition_rejected(self):
        text = (
            "jordan-catalog v1 mode=paper-verbatim\n"
            "kind=constituent degree=3 cond=in:4 index=2520 label=X\n"
        )
        with pytest.raises(CatalogValidationError):
            parse_catalog(text)

    def test_malformed_row_reports_line(self):
        text = (
            "jordan-catalog v1 mode=paper-verbatim\n"
            "# fine comment\n"
            "kind=constituent degree=three cond=in:5 index=2520 label=X\n"
        )
        with pytest.raises(CatalogParseError) as err:
            parse_catalog(text)
        assert err.value.line_no == 3

    def test_duplicate_rows_rejected(self):
        text = (
            "jordan-catalog v1 mode=paper-verbatim\n"
            "kind=constituent degree=3 cond=in:5 index=2520 label=X\n"
            "kind=constituent degree=3 cond=notin:2 index=360 label=Y\n"
        )
        with pytest.raises(CatalogValidationError):
            parse_catalog(text)

    def test_quasicomponent_bound_must_match_formula(self):
        text = (
            "jordan-catalog v1 mode=paper-verbatim\n"
            "kind=quasicomponent p=3 m=1 cond=in:2 bound=217 label=X\n"
        )
        with pytest.raises(CatalogValidationError):
            parse_catalog(text)

    def test_bad_header(self):
        with pytest.raises(CatalogParseError):
            parse_catalog("something-else v1 mode=paper-verbatim\n")

    def test_labels_with_spaces_round_trip(self):
        text = (
            "jordan-catalog v1 mode=paper-verbatim\n"
            'kind=constituent degree=3 cond=in:5 index=2520 label="3 . A 7"\n'
        )
        cat = parse_catalog(text)
        assert cat.constituent_rows[0].label == "3 . A 7"
        assert parse_catalog(cat.serialize()) == cat
