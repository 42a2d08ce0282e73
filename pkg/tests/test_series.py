"""Truncated series algebra: exactness, product expansions, Gaussian
binomials, and the cyclotomic-to-integer conversion."""

import math
import random

import pytest

from glaisher.ring import CycInt, chi, cyc_root_power
from glaisher.series import (
    CoefficientRangeError,
    CyclotomicRing,
    NotIntegerCoefficientError,
    PochSpec,
    PrecisionMismatchError,
    Series,
    Z,
    inv_pochhammer,
    map_ring,
    pochhammer,
    qbinomial,
    qbinomial_poly,
)


def S(*coeffs):
    return Series(Z, coeffs)


def test_add_sub_mul_basics():
    a = Series.from_coeffs(Z, [1, 1], 3)   # 1 + q
    b = Series.from_coeffs(Z, [1, -1], 3)  # 1 - q
    assert (a * b).coeffs == (1, 0, -1, 0)
    assert (a + b).coeffs == (2, 0, 0, 0)
    assert (a - b).coeffs == (0, 2, 0, 0)


def test_triple_product_expansion():
    out = Series.one(Z, 6)
    for k in (1, 2, 3):
        out = out * Series.from_coeffs(Z, [1] + [0] * (k - 1) + [-1], 6)
    assert out.coeffs == (1, -1, -1, 0, 1, 1, -1)


def test_precision_and_ring_mismatch_rejected():
    with pytest.raises(PrecisionMismatchError):
        Series.one(Z, 3) + Series.one(Z, 4)
    with pytest.raises(PrecisionMismatchError):
        Series.one(Z, 3) * Series.one(CyclotomicRing(3), 3)


def test_mul_commutes_on_random_series():
    rng = random.Random(42)
    for _ in range(20):
        a = Series(Z, [rng.randint(-9, 9) for _ in range(17)])
        b = Series(Z, [rng.randint(-9, 9) for _ in range(17)])
        c = Series(Z, [rng.randint(-9, 9) for _ in range(17)])
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_pochhammer_two_factors():
    s = pochhammer(PochSpec(1, 1, 1, 2), 4)
    assert s.coeffs == (1, -1, -1, 1, 0)


def test_pochhammer_single_cyclotomic_factor():
    w = cyc_root_power(3, 1)
    s = pochhammer(PochSpec(w, 2, 1, 1), 4)
    ring = CyclotomicRing(3)
    assert s.ring == ring
    assert s.coeffs == (ring.one, ring.zero, -w, ring.zero, ring.zero)


def test_pochhammer_infinite_pentagonal_prefix():
    s = pochhammer(PochSpec(1, 1, 1, None), 6)
    assert s.coeffs == (1, -1, -1, 0, 0, 1, 0)


def test_pentagonal_sign_pattern_to_100():
    s = pochhammer(PochSpec(1, 1, 1, None), 100)
    expected = [0] * 101
    for k in range(-20, 21):
        n = k * (3 * k - 1) // 2
        if 0 <= n <= 100:
            expected[n] = -1 if k & 1 else 1
    assert list(s.coeffs) == expected


def test_inv_pochhammer_single_factor():
    assert inv_pochhammer(1, 2, 1, 4).coeffs == (1, 1, 1, 1, 1)


def test_inv_pochhammer_partition_numbers():
    assert inv_pochhammer(1, 1, None, 5).coeffs == (1, 1, 2, 3, 5, 7)
    assert inv_pochhammer(1, 1, None, 10).coeff(10) == 42


def test_inv_pochhammer_two_spread_factors():
    # 1/((1-q^2)(1-q^5)): count sums 2a + 5b
    assert inv_pochhammer(2, 3, 2, 7).coeffs == (1, 0, 1, 0, 1, 1, 1, 1)


def test_pochhammer_times_inverse_is_one():
    rng = random.Random(7)
    for _ in range(20):
        e = rng.randint(1, 6)
        s = rng.randint(1, 6)
        count = rng.choice([None, 0, 1, 2, 3, 5, 8])
        p = pochhammer(PochSpec(1, e, s, count), 64)
        inv = inv_pochhammer(e, s, count, 64)
        assert p * inv == Series.one(Z, 64), (e, s, count)


def test_bad_poch_spec_rejected():
    with pytest.raises(ValueError):
        PochSpec(1, 0, 1, None)
    with pytest.raises(ValueError):
        PochSpec(1, 1, 0, None)
    with pytest.raises(ValueError):
        inv_pochhammer(0, 1, None, 5)


def test_qbinomial_examples():
    assert qbinomial(1, 1, 10).coeffs[:3] == (1, 1, 0)
    assert qbinomial(2, 2, 10).coeffs[:6] == (1, 1, 2, 1, 1, 0)
    assert qbinomial(0, 5, 10).coeffs == (1,) + (0,) * 10
    assert qbinomial_poly(-1, 2) == [0]


def test_qbinomial_truncates_below_degree():
    full = qbinomial_poly(3, 3)
    assert len(full) == 10  # degree a*b = 9
    assert list(qbinomial(3, 3, 4).coeffs) == full[:5]


@pytest.mark.parametrize("a", range(9))
@pytest.mark.parametrize("b", range(9))
def test_qbinomial_symmetry(a, b):
    assert qbinomial_poly(a, b) == qbinomial_poly(b, a)


def test_qbinomial_specializes_to_binomial():
    for a in range(7):
        for b in range(7):
            assert sum(qbinomial_poly(a, b)) == math.comb(a + b, a)


def test_qbinomial_coefficients_nonnegative():
    for a in range(7):
        for b in range(7):
            assert all(c >= 0 for c in qbinomial_poly(a, b))


def test_coeff_access_and_range_errors():
    s = S(1, 0, 3)
    assert s.coeff(2) == 3
    with pytest.raises(CoefficientRangeError):
        s.coeff(3)
    with pytest.raises(CoefficientRangeError):
        s.coeff(-1)


def test_truncate_is_explicit():
    s = S(1, 2, 3, 4)
    assert s.truncate(1).coeffs == (1, 2)
    with pytest.raises(ValueError):
        s.truncate(9)


def test_map_ring_constant_coords():
    ring = CyclotomicRing(3)
    s = Series(ring, [CycInt.from_int(3, c) for c in (5, -2, 0)])
    assert map_ring(s).coeffs == (5, -2, 0)


def test_map_ring_sum_of_conjugate_products():
    # sum over the two nontrivial cube roots u of prod_{i>=1}(1 - u q^i);
    # cross-checked against the character-sum expansion
    # sum_k (-1)^k chi_3(k) q^(k(k+1)/2) / (q;q)_k.
    n = 6
    total = pochhammer(PochSpec(cyc_root_power(3, 1), 1, 1, None), n) + \
        pochhammer(PochSpec(cyc_root_power(3, 2), 1, 1, None), n)
    got = map_ring(total)

    expected = Series.zero(Z, n)
    k = 0
    while k * (k + 1) // 2 <= n:
        shift = [0] * (k * (k + 1) // 2) + [(-1 if k & 1 else 1) * chi(3, k)]
        term = Series.from_coeffs(Z, shift, n) * inv_pochhammer(1, 1, k, n)
        expected = expected + term
        k += 1
    assert got == expected
    assert got.coeffs == (2, 1, 1, 0, 0, -1, -3)


def test_map_ring_flags_first_bad_exponent():
    ring = CyclotomicRing(3)
    coeffs = [ring.one, ring.zero, ring.zero, CycInt(3, (0, 1)), CycInt(3, (0, 2))]
    with pytest.raises(NotIntegerCoefficientError) as err:
        map_ring(Series(ring, coeffs))
    assert err.value.exponent == 3


def test_map_ring_requires_cyclotomic_input():
    with pytest.raises(TypeError):
        map_ring(Series.one(Z, 3))


def test_series_is_immutable_and_hashable():
    s = S(1, 2)
    with pytest.raises(AttributeError):
        s.ring = Z
    assert hash(s) == hash(S(1, 2))


def test_scalar_multiplication():
    assert (3 * S(1, -2)).coeffs == (3, -6)
    assert (-S(1, -2)).coeffs == (-1, 2)
