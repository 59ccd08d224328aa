"""Exact integer helpers: prime powers, triangular numbers, exact division.

Python integers are already arbitrary precision, so counts such as block
numbers and stabiliser orders are plain ``int`` values throughout the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from sympy import integer_nthroot, isprime

from .errors import DomainError

BigCount = int


@dataclass(frozen=True, order=True)
class PrimePower:
    """A validated factorisation ``value = p**a`` with ``p`` prime."""

    p: int
    a: int

    def __post_init__(self):
        if self.a < 1 or not isprime(self.p):
            raise DomainError(f"not a prime power: {self.p}^{self.a}")

    @property
    def value(self) -> int:
        return self.p**self.a

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.p) if self.a == 1 else f"{self.p}^{self.a}"


def is_prime_power(c: int) -> PrimePower | None:
    """Return ``PrimePower(p, a)`` with ``p**a == c``, or ``None``."""
    if c < 2:
        raise DomainError(f"is_prime_power needs c >= 2, got {c}")
    # largest exponent first so that p is as small as possible
    for a in range(c.bit_length() - 1, 0, -1):
        root, exact = integer_nthroot(c, a)
        if exact and isprime(root):
            return PrimePower(int(root), a)
    return None


def triangular_inverse(t: int) -> int | None:
    """Return ``k >= 2`` with ``k(k-1)/2 == t``, or ``None``."""
    if t < 1:
        raise DomainError(f"triangular_inverse needs t >= 1, got {t}")
    s = math.isqrt(8 * t + 1)
    if s * s != 8 * t + 1:
        return None
    return (1 + s) // 2


def binomial(k: int, r: int = 2) -> int:
    if k < 0:
        raise DomainError(f"binomial needs k >= 0, got {k}")
    return math.comb(k, r)


def factorial(n: int) -> BigCount:
    if n < 0:
        raise DomainError(f"factorial needs n >= 0, got {n}")
    return math.factorial(n)


def exact_div(num: int, den: int) -> int:
    """Divide, insisting that ``den`` divides ``num``."""
    if den == 0:
        raise ZeroDivisionError("exact_div by zero")
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def divides(den: int, num: int) -> bool:
    return den != 0 and num % den == 0
