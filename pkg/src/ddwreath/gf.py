"""Finite fields GF(p^a) with a fixed primitive element and log/exp tables.

Elements are integers ``0 <= x < p**a``; the base-``p`` digits of ``x`` are
the polynomial coefficients, constant term first.  The reduction polynomial
and the primitive element are the least valid candidates, so a field built
from the same ``(p, a)`` is identical on every run.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Any, Sequence

import numpy as np
from sympy import factorint, isprime

from .arith import PrimePower
from .errors import DomainError

MAX_ORDER = 10**5


def _poly_mod(num: list[int], mod: Sequence[int], p: int) -> list[int]:
    num = num[:]
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], -1, p)
    for i in range(len(num) - 1, dm - 1, -1):
        coef = num[i] * inv_lead % p
        if coef:
            for j in range(dm + 1):
                num[i - dm + j] = (num[i - dm + j] - coef * mod[j]) % p
    return num[:dm] if dm else []


def _is_irreducible(poly: Sequence[int], p: int) -> bool:
    deg = len(poly) - 1
    for dd in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=dd):
            divisor = list(low) + [1]
            if not any(_poly_mod(list(poly), divisor, p)):
                return False
    return True


def least_irreducible(p: int, a: int) -> tuple[int, ...]:
    """Least monic irreducible of degree ``a`` over GF(p), coefficients low to high.

    Candidates are ordered by the integer whose base-``p`` digits are the
    non-leading coefficients, i.e. lexicographically from the top degree down.
    """
    if a == 1:
        return (0, 1)
    for code in range(p**a):
        low = [(code // p**i) % p for i in range(a)]
        if low[0] == 0:
            continue
        poly = low + [1]
        if _is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class Field:
    """GF(p^a); immutable once built.  Use :func:`field_new` to construct."""

    def __init__(self, p: int, a: int):
        if a < 1 or not isprime(p):
            raise DomainError(f"field_new needs p prime and a >= 1, got p={p}, a={a}")
        if p**a > MAX_ORDER:
            raise DomainError(f"field order {p}^{a} exceeds {MAX_ORDER}")
        self.p = p
        self.a = a
        self.order = PrimePower(p, a)
        self.c = p**a
        self.poly = least_irreducible(p, a)
        self.powers = np.array([p**i for i in range(a)], dtype=np.int64)
        self.digits = np.array(
            [[(x // p**i) % p for i in range(a)] for x in range(self.c)], dtype=np.int64
        )
        self.zeta = self._least_primitive()
        exp = np.zeros(self.c - 1, dtype=np.int64)
        log = np.full(self.c, -1, dtype=np.int64)
        x = 1
        for j in range(self.c - 1):
            exp[j] = x
            log[x] = j
            x = self._mul_slow(x, self.zeta)
        if x != 1 or (log[1:] < 0).any():
            raise AssertionError("zeta is not primitive")  # pragma: no cover
        self.exp = exp
        self.log = log
        for arr in (self.digits, self.exp, self.log, self.powers):
            arr.setflags(write=False)

    # construction helpers -------------------------------------------------

    def _mul_slow(self, x: int, y: int) -> int:
        if self.a == 1:
            return x * y % self.p
        p = self.p
        dx = [(x // p**i) % p for i in range(self.a)]
        dy = [(y // p**i) % p for i in range(self.a)]
        prod = [0] * (2 * self.a - 1)
        for i, u in enumerate(dx):
            if u:
                for j, w in enumerate(dy):
                    prod[i + j] = (prod[i + j] + u * w) % p
        red = _poly_mod(prod, self.poly, p)
        return sum(coef * p**i for i, coef in enumerate(red))

    def _pow_slow(self, x: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._mul_slow(result, x)
            x = self._mul_slow(x, x)
            e >>= 1
        return result

    def _least_primitive(self) -> int:
        q = self.c - 1
        if q == 1:
            return 1
        cofactors = [q // r for r in factorint(q)]
        for x in range(2, self.c):
            if all(self._pow_slow(x, e) != 1 for e in cofactors):
                return x
        raise AssertionError("no primitive element")  # pragma: no cover

    # scalar arithmetic ----------------------------------------------------

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def elements(self) -> range:
        return range(self.c)

    def _check(self, x: int) -> int:
        if not 0 <= x < self.c:
            raise DomainError(f"{x} is not an element of GF({self.order})")
        return x

    def add(self, x: int, y: int) -> int:
        self._check(x), self._check(y)
        if self.a == 1:
            return (x + y) % self.p
        return int(((self.digits[x] + self.digits[y]) % self.p) @ self.powers)

    def neg(self, x: int) -> int:
        self._check(x)
        if self.a == 1:
            return -x % self.p
        return int(((-self.digits[x]) % self.p) @ self.powers)

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        self._check(x), self._check(y)
        if x == 0 or y == 0:
            return 0
        return int(self.exp[(self.log[x] + self.log[y]) % (self.c - 1)])

    def inv(self, x: int) -> int:
        if self._check(x) == 0:
            raise ZeroDivisionError("0 has no inverse")
        return int(self.exp[-self.log[x] % (self.c - 1)])

    def pow(self, x: int, e: int) -> int:
        if self._check(x) == 0:
            if e < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 1 if e == 0 else 0
        return int(self.exp[self.log[x] * e % (self.c - 1)])

    def zeta_pow(self, j: int) -> int:
        return int(self.exp[j % (self.c - 1)])

    def dlog(self, x: int) -> int:
        """The exponent ``j`` in ``[0, c-2]`` with ``zeta**j == x``."""
        if self._check(x) == 0:
            raise DomainError("dlog(0) is undefined")
        return int(self.log[x])

    # vectorised arithmetic on integer arrays -------------------------------

    def add_arr(self, x, y) -> np.ndarray:
        x, y = np.asarray(x), np.asarray(y)
        if self.a == 1:
            return (x + y) % self.p
        return ((self.digits[x] + self.digits[y]) % self.p) @ self.powers

    def neg_arr(self, x) -> np.ndarray:
        x = np.asarray(x)
        if self.a == 1:
            return -x % self.p
        return ((-self.digits[x]) % self.p) @ self.powers

    def sub_arr(self, x, y) -> np.ndarray:
        return self.add_arr(x, self.neg_arr(y))

    def mul_arr(self, x, y) -> np.ndarray:
        x, y = np.broadcast_arrays(np.asarray(x), np.asarray(y))
        out = self.exp[(self.log[x] + self.log[y]) % (self.c - 1)]
        return np.where((x == 0) | (y == 0), 0, out)

    def dlog_arr(self, x) -> np.ndarray:
        x = np.asarray(x)
        if (x == 0).any():
            raise DomainError("dlog(0) is undefined")
        return self.log[x]

    # serialisation --------------------------------------------------------

    def describe(self) -> dict[str, Any]:
        return {
            "p": self.p,
            "a": self.a,
            "reduction_polynomial": list(self.poly),
            "zeta": self.zeta,
            "zeta_coefficients": [int(v) for v in self.digits[self.zeta]],
        }

    def __repr__(self) -> str:
        return f"Field(p={self.p}, a={self.a}, zeta={self.zeta})"


@lru_cache(maxsize=64)
def field_new(p: int, a: int = 1) -> Field:
    """Build (and cache) GF(p^a)."""
    return Field(p, a)
