import itertools

import pytest
from hypothesis import given, settings, strategies as st

from ddwreath.errors import DomainError
from ddwreath.gf import field_new, least_irreducible


def poly_mulmod(x, y, poly, p):
    """Independent schoolbook arithmetic on coefficient lists (constant term first)."""
    a = len(poly) - 1
    prod = [0] * (2 * a)
    for i, u in enumerate(x):
        for j, w in enumerate(y):
            prod[i + j] += u * w
    for i in range(len(prod) - 1, a - 1, -1):
        coef = prod[i] % p
        for j in range(a + 1):
            prod[i - a + j] -= coef * poly[j]
    return [v % p for v in prod[:a]]


def to_coeffs(F, x):
    return [(x // F.p**i) % F.p for i in range(F.a)]


def from_coeffs(F, coeffs):
    return sum(v * F.p**i for i, v in enumerate(coeffs))


FIELDS = [(13, 1), (5, 2), (3, 3), (2, 4), (7, 2), (29, 2), (2, 1), (3, 1)]


def test_gf13_zeta_is_two():
    F = field_new(13, 1)
    assert F.zeta == 2
    # brute force: the powers of 2 mod 13 are all nonzero residues
    assert sorted(pow(2, j, 13) for j in range(12)) == list(range(1, 13))


def test_gf25_zeta_has_order_24():
    F = field_new(5, 2)
    z = to_coeffs(F, F.zeta)
    x = [1, 0]
    order = None
    for j in range(1, 25):
        x = poly_mulmod(x, z, F.poly, 5)
        if x == [1, 0]:
            order = j
            break
    assert order == 24


def test_non_prime_characteristic_rejected():
    with pytest.raises(DomainError):
        field_new(4, 1)
    with pytest.raises(DomainError):
        field_new(5, 0)


@pytest.mark.parametrize("p, a", FIELDS)
def test_reduction_polynomial_is_least_irreducible(p, a):
    F = field_new(p, a)
    poly = list(F.poly)
    assert len(poly) == a + 1 and poly[-1] == 1
    if a == 1:
        return

    def reducible(f):
        # brute force over all monic divisors of degree 1..a-1
        for dd in range(1, a):
            for low in itertools.product(range(p), repeat=dd):
                g = list(low) + [1]
                rem = f[:]
                for i in range(len(rem) - 1, dd - 1, -1):
                    coef = rem[i] % p
                    for j in range(dd + 1):
                        rem[i - dd + j] = (rem[i - dd + j] - coef * g[j]) % p
                if not any(rem[:dd]):
                    return True
        return False

    assert not reducible(poly)
    # every monic polynomial ordered before it is reducible
    code = sum(v * p**i for i, v in enumerate(poly[:-1]))
    for smaller in range(code):
        low = [(smaller // p**i) % p for i in range(a)]
        assert reducible(low + [1])


@pytest.mark.parametrize("p, a", FIELDS)
def test_multiplicative_group_is_cyclic(p, a):
    F = field_new(p, a)
    powers = [F.zeta_pow(j) for j in range(F.c - 1)]
    assert sorted(powers) == list(range(1, F.c))
    for j, x in enumerate(powers):
        assert F.dlog(x) == j
    # zeta is the least primitive element
    for y in range(2, F.zeta):
        seen, x = set(), 1
        for _ in range(F.c - 1):
            x = F.mul(x, y)
            seen.add(x)
        assert len(seen) < F.c - 1


def test_all_small_fields_exhaustively():
    from ddwreath.arith import is_prime_power

    for c in range(2, 1301):
        pp = is_prime_power(c)
        if pp is None:
            continue
        F = field_new(pp.p, pp.a)
        assert sorted(F.exp.tolist()) == list(range(1, c))
        assert F.pow(F.zeta, c - 1) == 1
        if c % 2:
            assert F.zeta_pow((c - 1) // 2) == F.neg(1)


def test_gf13_examples():
    F = field_new(13, 1)
    assert F.dlog(1) == 0
    assert F.dlog(4) == 2
    assert F.neg(1) == 12
    assert F.dlog(12) == 6
    with pytest.raises(DomainError):
        F.dlog(0)


@pytest.mark.parametrize("p, a", [(5, 2), (3, 3), (2, 4), (13, 1)])
def test_arithmetic_matches_polynomial_oracle(p, a):
    F = field_new(p, a)
    for x in range(F.c):
        for y in range(F.c):
            cx, cy = to_coeffs(F, x), to_coeffs(F, y)
            assert F.add(x, y) == from_coeffs(F, [(u + w) % p for u, w in zip(cx, cy)])
            assert F.mul(x, y) == from_coeffs(F, poly_mulmod(cx, cy, F.poly, p))


@settings(max_examples=200)
@given(st.sampled_from([(7, 2), (2, 6), (3, 4), (29, 2), (1201, 1)]), st.data())
def test_field_axioms(pa, data):
    F = field_new(*pa)
    el = st.integers(min_value=0, max_value=F.c - 1)
    x, y, z = data.draw(el), data.draw(el), data.draw(el)
    assert F.add(x, y) == F.add(y, x)
    assert F.mul(x, y) == F.mul(y, x)
    assert F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z))
    assert F.add(F.add(x, y), z) == F.add(x, F.add(y, z))
    assert F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z))
    assert F.add(x, F.neg(x)) == 0
    if x:
        assert F.mul(x, F.inv(x)) == 1


def test_vectorised_ops_agree_with_scalar():
    import numpy as np

    F = field_new(3, 3)
    xs = np.arange(F.c)
    for y in (0, 1, 5, 26):
        assert F.add_arr(xs, y).tolist() == [F.add(int(x), y) for x in xs]
        assert F.mul_arr(xs, y).tolist() == [F.mul(int(x), y) for x in xs]
        assert F.sub_arr(xs, y).tolist() == [F.sub(int(x), y) for x in xs]


def test_describe_records_choice():
    F = field_new(5, 2)
    desc = F.describe()
    assert desc["p"] == 5 and desc["a"] == 2
    assert desc["reduction_polynomial"] == list(F.poly)
    assert desc["zeta"] == F.zeta
    assert least_irreducible(5, 2) == F.poly
