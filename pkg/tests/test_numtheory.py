import pytest

from cycleq.numtheory import distinct_prime_factors, divisors, euler_phi, gcd


def test_gcd_small_cases():
    assert gcd(12, 8) == 4
    assert gcd(7, 7) == 7
    assert gcd(5, 12) == 1


@pytest.mark.parametrize("a,b", [(0, 3), (3, 0), (-2, 5), (5, -1)])
def test_gcd_rejects_nonpositive(a, b):
    with pytest.raises(ValueError):
        gcd(a, b)


def test_gcd_properties_exhaustive():
    for a in range(1, 201):
        for b in range(1, 201):
            g = gcd(a, b)
            assert g == gcd(b, a)
            assert a % g == 0 and b % g == 0
            lcm = a * b // g
            assert lcm % a == 0 and lcm % b == 0


def test_common_divisors_divide_gcd():
    for a in range(1, 31):
        for b in range(1, 31):
            g = gcd(a, b)
            for d in range(1, min(a, b) + 1):
                if a % d == 0 and b % d == 0:
                    assert g % d == 0


def test_euler_phi_examples():
    assert euler_phi(12) == 4
    assert euler_phi(1) == 1
    assert euler_phi(6) == 2


def test_euler_phi_matches_brute_coprime_count():
    for m in range(1, 501):
        brute = sum(1 for x in range(1, m + 1) if gcd(x, m) == 1)
        assert euler_phi(m) == brute


def test_totient_divisor_sum_is_n():
    for n in range(1, 501):
        assert sum(euler_phi(d) for d in divisors(n)) == n


def test_divisors_examples():
    assert divisors(12) == (1, 2, 3, 4, 6, 12)
    assert divisors(1) == (1,)
    assert divisors(7) == (1, 7)


def test_divisors_ascending_and_complete():
    for n in range(1, 501):
        ds = divisors(n)
        assert ds[0] == 1 and ds[-1] == n
        assert all(x < y for x, y in zip(ds, ds[1:]))
        assert all(n % d == 0 for d in ds)
        assert len(ds) == sum(1 for d in range(1, n + 1) if n % d == 0)


def test_distinct_prime_factors_examples():
    assert distinct_prime_factors(12) == (2, 3)
    assert distinct_prime_factors(1) == ()
    assert distinct_prime_factors(8) == (2,)


@pytest.mark.parametrize("func", [euler_phi, divisors, distinct_prime_factors])
def test_rejects_nonpositive(func):
    with pytest.raises(ValueError):
        func(0)
    with pytest.raises(ValueError):
        func(-7)
