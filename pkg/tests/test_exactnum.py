import pytest
from hypothesis import given
from hypothesis import strategies as st

from jmb import (
    CapExceededError,
    DomainError,
    alpha_exponent,
    factorial,
    power,
    sci_string,
)


def slow_factorial(n):
    # oracle: repeated multiplication
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def slow_power(base, exp):
    # oracle: repeated multiplication
    out = 1
    for _ in range(exp):
        out *= base
    return out


class TestFactorial:
    def test_empty_product(self):
        assert factorial(0) == 1

    def test_against_multiplication_oracle(self):
        assert factorial(10) == slow_factorial(10) == 3628800

    def test_printed_sci_value(self):
        assert str(sci_string(factorial(34))) == "2.95e38"

    def test_strictly_increasing(self):
        values = [factorial(n) for n in range(1, 200)]
        assert all(a < b for a, b in zip(values, values[1:]))

    @given(st.integers(min_value=0, max_value=300))
    def test_recurrence(self, n):
        assert factorial(n + 1) == (n + 1) * factorial(n)

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            factorial(-1)

    def test_cap(self):
        with pytest.raises(CapExceededError):
            factorial(10_001)


class TestPower:
    def test_zero_exponent(self):
        assert power(60, 0) == 1

    def test_zero_base_zero_exponent(self):
        assert power(0, 0) == 1

    def test_alternating_square(self):
        assert power(2520, 2) == 6350400

    def test_against_multiplication_oracle(self):
        assert power(6531840, 5) == slow_power(6531840, 5)

    @given(
        st.integers(min_value=0, max_value=10**6),
        st.integers(min_value=0, max_value=30),
        st.integers(min_value=0, max_value=30),
    )
    def test_exponent_additivity(self, b, e1, e2):
        assert power(b, e1 + e2) == power(b, e1) * power(b, e2)

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            power(2, -1)


class TestSciString:
    def test_one(self):
        approx = sci_string(1)
        assert str(approx) == "1.00e0"
        assert approx.mantissa == "1.00"
        assert approx.exponent10 == 0

    def test_wreath_sum_33(self):
        assert str(sci_string(6531840**5 * 120 * 216)) == "3.08e38"

    def test_wreath_18(self):
        assert str(sci_string(2520**6 * 720)) == "1.84e23"

    def test_round_half_up(self):
        assert str(sci_string(25, 1)) == "3e1"
        assert str(sci_string(24, 1)) == "2e1"
        assert str(sci_string(1500, 1)) == "2e3"

    def test_rollover(self):
        assert str(sci_string(999, 2)) == "1.0e3"
        assert str(sci_string(9999999, 3)) == "1.00e7"

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            sci_string(0)

    @given(st.integers(min_value=1, max_value=10**40), st.integers(min_value=1, max_value=10**40))
    def test_order_preserved_across_exponents(self, a, b):
        x, y = sorted((a, b))
        sx, sy = sci_string(x), sci_string(y)
        if sy.exponent10 - sx.exponent10 >= 1:
            assert sx.sort_key() < sy.sort_key()


class TestAlphaExponent:
    def test_wreath_18_char5(self):
        assert alpha_exponent(2520**6 * 720, 18) == pytest.approx(3.8873, abs=1e-3)

    def test_ratio_one(self):
        for n in (2, 10, 64):
            assert alpha_exponent(factorial(n + 2), n) == pytest.approx(0, abs=1e-3)

    def test_constructed_fourth_power(self):
        for n in (10, 18, 64):
            value = n**4 * factorial(n + 2)
            assert alpha_exponent(value, n) == pytest.approx(4, abs=1e-3)

    def test_grid_recovers_exponent(self):
        for n in range(10, 65):
            for k in range(0, 7):
                value = n**k * factorial(n + 2)
                assert alpha_exponent(value, n) == pytest.approx(k, abs=1e-3)

    def test_negative_alpha(self):
        assert alpha_exponent(1, 10) < 0

    def test_domain(self):
        with pytest.raises(DomainError):
            alpha_exponent(0, 10)
        with pytest.raises(DomainError):
            alpha_exponent(10, 1)
