"""Exact natural-number arithmetic and presentation helpers.

Every bound in this package is an exact nonnegative integer; Python's
``int`` is the carrier type, and nothing in the computation path ever
rounds.  Floating point appears in exactly one place: the exponent
``alpha`` reported for comparison purposes, which is a display value,
never an input to a comparison.

All functions are pure; the factorial memo is filled once at import
time, so concurrent callers only ever read it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CapExceededError, DomainError

FACTORIAL_CAP = 10_000
_MEMO_LIMIT = 160

_factorial_memo: list[int] = [1]
for _k in range(1, _MEMO_LIMIT + 1):
    _factorial_memo.append(_factorial_memo[-1] * _k)


def factorial(n: int) -> int:
    """Exact n!.  Memoized for n <= 160; guarded by FACTORIAL_CAP."""
    if n < 0:
        raise DomainError(f"factorial undefined for n = {n}")
    if n > FACTORIAL_CAP:
        raise CapExceededError(f"factorial cap {FACTORIAL_CAP} exceeded: n = {n}")
    if n <= _MEMO_LIMIT:
        return _factorial_memo[n]
    return math.factorial(n)


def power(base: int, exp: int) -> int:
    """Exact base**exp with the convention 0**0 = 1."""
    if base < 0:
        raise DomainError(f"negative base {base}")
    if exp < 0:
        raise DomainError(f"negative exponent {exp}")
    return base**exp


@dataclass(frozen=True)
class SciApprox:
    """Scientific-notation approximation of a positive integer.

    ``digits`` holds the retained significant digits ("308" for
    3.08e38); the implied mantissa is ``digits[0] + "." + digits[1:]``
    and always lies in [1, 10).  Rounding is half-up at the last
    retained digit.
    """

    digits: str
    exponent10: int

    @property
    def mantissa(self) -> str:
        if len(self.digits) == 1:
            return self.digits
        return f"{self.digits[0]}.{self.digits[1:]}"

    def __str__(self) -> str:
        return f"{self.mantissa}e{self.exponent10}"

    def sort_key(self) -> tuple[int, str]:
        # Digit strings of equal length compare like the mantissas.
        return (self.exponent10, self.digits)


def sci_string(x: int, sig: int = 3) -> SciApprox:
    """Round a positive integer to ``sig`` significant digits, half-up."""
    if x <= 0:
        raise DomainError(f"sci_string needs x >= 1, got {x}")
    if sig < 1:
        raise DomainError(f"need at least one significant digit, got {sig}")
    text = str(x)
    exponent = len(text) - 1
    if len(text) <= sig:
        return SciApprox(text.ljust(sig, "0"), exponent)
    head = int(text[:sig])
    if int(text[sig]) >= 5:
        head += 1
        if head >= 10**sig:  # 999.. rolled over
            head //= 10
            exponent += 1
    return SciApprox(str(head).ljust(sig, "0"), exponent)


def _log2_nat(x: int) -> float:
    """log2 of a positive integer via bit length + a normalized leading word.

    Only the top 64 bits feed the float log; the discarded tail changes
    the result by less than 2**-63, far inside the 1e-3 contract.
    """
    shift = max(x.bit_length() - 64, 0)
    return shift + math.log2(x >> shift)


def alpha_exponent(f: int, n: int) -> float:
    """Solve f = n**alpha * (n+2)! for alpha, to within 1e-3.

    Negative when f < (n+2)!.
    """
    if f < 1:
        raise DomainError(f"need f >= 1, got {f}")
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    return (_log2_nat(f) - _log2_nat(factorial(n + 2))) / math.log2(n)
