import itertools

import pytest

from jmb import (
    DomainError,
    builtin_catalog,
    enumerate_tensor_configs,
    factorial,
    is_prime,
    primitive_bound,
    primitive_cap,
    tensor_value,
)
from jmb.tensor_search import TensorConfig

PRIMES_TO_13 = (2, 3, 5, 7, 11, 13)


def oracle_configs(n):
    # oracle: filter the full powerset of candidate (subdegree, multiplicity)
    # pairs, entirely independent of the production enumeration order
    pairs = []
    for r in range(2, n + 1):
        l = 1
        while r**l <= n:
            pairs.append((r, l))
            l += 1
    found = set()
    for size in range(len(pairs) + 1):
        for combo in itertools.combinations(pairs, size):
            degrees = [r for r, _ in combo]
            if len(set(degrees)) != len(degrees):
                continue
            product = 1
            for r, l in combo:
                product *= r**l
            if n % product == 0:
                found.add(tuple(sorted(combo, reverse=True)))
    return found


class TestEnumerate:
    def test_six(self):
        got = {c.factors for c in enumerate_tensor_configs(6)}
        assert got == {(), ((2, 1),), ((3, 1),), ((6, 1),), ((3, 1), (2, 1))}

    def test_four(self):
        got = {c.factors for c in enumerate_tensor_configs(4)}
        assert got == {(), ((2, 1),), ((2, 2),), ((4, 1),)}

    @pytest.mark.parametrize("n", [2, 3, 5, 7, 13, 199])
    def test_prime(self, n):
        got = {c.factors for c in enumerate_tensor_configs(n)}
        assert got == {(), ((n, 1),)}

    @pytest.mark.parametrize("n", range(1, 37))
    def test_against_powerset_oracle(self, n):
        got = {c.factors for c in enumerate_tensor_configs(n)}
        assert got == oracle_configs(n)

    def test_no_duplicates_and_sorted(self):
        configs = enumerate_tensor_configs(48)
        assert len(configs) == len({c.factors for c in configs})
        assert configs == sorted(configs, key=lambda c: c.factors)

    def test_domain(self):
        with pytest.raises(DomainError):
            enumerate_tensor_configs(0)
        with pytest.raises(DomainError):
            enumerate_tensor_configs(201)


class TestTensorValue:
    def test_two_threes_char5(self):
        config = TensorConfig(((3, 2),), 9)
        assert tensor_value(config, 5) == 12700800

    def test_empty_product(self):
        assert tensor_value(TensorConfig((), 5), 7) == 1

    def test_mixed(self):
        config = TensorConfig(((3, 1), (2, 1)), 6)
        assert tensor_value(config, 7) == 21600

    def test_config_validation(self):
        with pytest.raises(DomainError):
            TensorConfig(((2, 1), (2, 1)), 4)
        with pytest.raises(DomainError):
            TensorConfig(((3, 1),), 4)
        with pytest.raises(DomainError):
            TensorConfig(((2, 1), (3, 1)), 6)  # not in canonical order


class TestPrimitiveBound:
    def test_tie_in_degree_nine_char_five(self):
        result = primitive_bound(9, 5)
        assert result.value == 12700800
        shapes = {c.factors for c in result.argmax}
        assert ((3, 2),) in shapes and ((9, 1),) in shapes

    def test_degree_six_char_three(self):
        result = primitive_bound(6, 3)
        assert result.value == 604800
        assert ((6, 1),) in {c.factors for c in result.argmax}

    def test_degree_four_char_two(self):
        result = primitive_bound(4, 2)
        assert result.value == 2520
        assert ((4, 1),) in {c.factors for c in result.argmax}

    def test_deterministic(self):
        a = primitive_bound(24, 7)
        b = primitive_bound(24, 7)
        assert a == b

    def test_unattained_flag_when_generic_and_char_divides_next(self):
        result = primitive_bound(10, 11)
        assert result.value == factorial(11)
        assert "attainability=unknown" in result.flags
        # attained table value, no flag even though ell | n+1
        assert primitive_bound(9, 5).flags == ()
        assert primitive_bound(6, 7).flags == ()

    def test_domain(self):
        with pytest.raises(DomainError):
            primitive_bound(1, 3)


class TestSmallDegreeGrids:
    """Exact inequality grids behind the one-factor reduction."""

    def _covered(self, r, l, ell):
        if r >= 4 or (r == 3 and ell != 5):
            return l > 1
        if r == 3:  # ell == 5
            return l > 2
        if ell == 2:
            return l > 1
        if ell == 5:
            return l > 2
        return l > 3

    def test_wreath_cap_grid(self):
        for r in range(2, 13):
            for ell in PRIMES_TO_13:
                for l in range(2, 7):
                    if r**l > 10**6:
                        continue
                    lhs = primitive_cap(r, ell) ** l * factorial(l)
                    rhs = factorial(r**l + 1)
                    if self._covered(r, l, ell):
                        assert lhs < rhs, (r, l, ell)

    def test_single_failure(self):
        assert primitive_cap(3, 5) ** 2 * 2 > factorial(10)

    def test_squaring_induction_step(self):
        for r in (2, 3):
            for ell in PRIMES_TO_13:
                for l in range(2, 5):
                    if r ** (l + 1) > 300:
                        continue
                    lhs = primitive_cap(r, ell) ** l * factorial(l)
                    if lhs < factorial(r**l + 1):
                        assert lhs**2 < factorial(r ** (l + 1) + 1), (r, l, ell)

    def test_distinct_pair_grid_large(self):
        for p in range(2, 21):
            for q in range(p + 1, 21):
                if p * q <= 12 or p * q > 150:
                    continue
                for ell in PRIMES_TO_13:
                    lhs = primitive_cap(p, ell) * primitive_cap(q, ell)
                    assert lhs < factorial(p * q + 1), (p, q, ell)

    def test_distinct_pair_grid_small(self):
        for p, q in ((2, 3), (2, 4), (2, 5), (2, 6), (3, 4)):
            for ell in PRIMES_TO_13:
                lhs = primitive_cap(p, ell) * primitive_cap(q, ell)
                assert lhs < primitive_cap(p * q, ell), (p, q, ell)


class TestTableRestatement:
    def test_bound_equals_cap_small_grid(self):
        # full grid lives in the acceptance suite
        for n in range(2, 25):
            for ell in (2, 3, 5, 7, 11):
                assert primitive_bound(n, ell).value == primitive_cap(n, ell)

    def test_permissive_rows_do_not_leak_into_caps(self):
        perm = builtin_catalog("permissive")
        for n in range(2, 25):
            for ell in (2, 3, 5, 7, 11):
                assert primitive_bound(n, ell, perm).value == primitive_cap(n, ell)


def test_prime_helper():
    assert [p for p in range(2, 20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert not is_prime(1) and not is_prime(0) and not is_prime(91)
