import math

import pytest

from hopset.numtheory import (
    FieldElementTable,
    PrimePower,
    euler_phi,
    factor_prime_powers,
    gf_construct,
    is_prime,
    least_prime_factor,
    multiplicative_order,
    primitive_root_mod_prime_power,
)


def brute_force_order(g, m):
    """Repeated-multiplication oracle."""
    acc = g % m
    d = 1
    while acc != 1:
        acc = acc * g % m
        d += 1
        assert d <= m
    return d


def trial_division_factor(n):
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            a = 0
            while n % f == 0:
                n //= f
                a += 1
            out.append((f, a))
        f += 1
    if n > 1:
        out.append((n, 1))
    return out


class TestFactorPrimePowers:
    def test_squarefree(self):
        assert [(pp.p, pp.a) for pp in factor_prime_powers(143)] == [(11, 1), (13, 1)]

    def test_prime_square(self):
        assert [(pp.p, pp.a) for pp in factor_prime_powers(121)] == [(11, 2)]

    def test_mixed_vs_trial_division_oracle(self):
        assert [(pp.p, pp.a) for pp in factor_prime_powers(338)] == trial_division_factor(338)
        assert [(pp.p, pp.a) for pp in factor_prime_powers(338)] == [(2, 1), (13, 2)]

    @pytest.mark.parametrize("bad", [1, 0, -4, 2.5, True])
    def test_rejects_bad_input(self, bad):
        with pytest.raises(ValueError):
            factor_prime_powers(bad)

    def test_product_reconstructs_everything_to_10k(self):
        for n in range(2, 10_001):
            parts = factor_prime_powers(n)
            prod = 1
            for pp in parts:
                prod *= pp.q
            assert prod == n
            primes = [pp.p for pp in parts]
            assert primes == sorted(primes)
            assert len(set(primes)) == len(primes)


class TestLeastPrimeFactor:
    @pytest.mark.parametrize("n,want", [(143, 11), (121, 11), (2, 2), (97, 97), (338, 2)])
    def test_values(self, n, want):
        assert least_prime_factor(n) == want

    def test_rejects_small(self):
        with pytest.raises(ValueError):
            least_prime_factor(1)


class TestMultiplicativeOrder:
    def test_order_of_two_mod_121(self):
        assert multiplicative_order(2, 121) == 110  # (p-1)p^(a-1) for p=11, a=2

    def test_identity(self):
        for m in (2, 7, 24, 121):
            assert multiplicative_order(1, m) == 1

    def test_vs_repeated_multiplication_oracle(self):
        assert multiplicative_order(2, 13) == brute_force_order(2, 13) == 12
        for m in range(2, 200):
            for g in range(1, m):
                if math.gcd(g, m) == 1:
                    assert multiplicative_order(g, m) == brute_force_order(g, m)

    def test_rejects_non_coprime(self):
        with pytest.raises(ValueError):
            multiplicative_order(6, 9)


class TestPrimitiveRoot:
    @pytest.mark.parametrize("p,a,want", [(13, 1, 2), (11, 2, 2), (3, 1, 2)])
    def test_known_values(self, p, a, want):
        assert primitive_root_mod_prime_power(PrimePower(p, a)) == want

    def test_exhaustive_order_oracle_small(self):
        g = primitive_root_mod_prime_power(PrimePower(3, 1))
        orders = {c: brute_force_order(c, 3) for c in (1, 2)}
        assert orders[g] == 2 and all(orders[c] < 2 for c in orders if c < g)

    def test_rejects_even_prime_powers(self):
        with pytest.raises(ValueError):
            primitive_root_mod_prime_power(PrimePower(2, 2))

    def test_trivial_mod_2(self):
        assert primitive_root_mod_prime_power(PrimePower(2, 1)) == 1

    def test_full_order_for_all_odd_prime_powers_to_20k(self):
        for p in range(3, 20_001, 2):
            if not is_prime(p):
                continue
            a = 1
            while p**a <= 20_000:
                pp = PrimePower(p, a)
                g = primitive_root_mod_prime_power(pp)
                assert multiplicative_order(g, pp.q) == (p - 1) * p ** (a - 1)
                a += 1


class TestPrimePower:
    def test_value(self):
        assert PrimePower(13, 2).q == 169
        assert str(PrimePower(13, 2)) == "13^2"

    @pytest.mark.parametrize("p,a", [(4, 1), (13, 0), (1, 1), (0, 3)])
    def test_rejects_invalid(self, p, a):
        with pytest.raises(ValueError):
            PrimePower(p, a)

    def test_rejects_beyond_64_bits(self):
        with pytest.raises(ValueError):
            PrimePower(2, 65)


class TestGfConstruct:
    def test_gf4(self):
        t = gf_construct(PrimePower(2, 2))
        assert t.modulus_poly == (1, 1, 1)  # x^2 + x + 1
        assert t.primitive_element == 2     # the element x
        assert sorted(t.antilog) == [1, 2, 3]

    def test_prime_field_reduces_to_modular_arithmetic(self):
        for p in (3, 7, 13):
            t = gf_construct(PrimePower(p, 1))
            assert t.modulus_poly == (0, 1)
            assert t.primitive_element == primitive_root_mod_prime_power(PrimePower(p, 1))
            assert sorted(t.antilog) == list(range(1, p))

    def test_gf9_antilog_is_permutation_of_nonzero(self):
        t = gf_construct(PrimePower(3, 2))
        assert sorted(t.antilog) == list(range(1, 9))
        assert t.log[0] == -1

    def test_field_axioms_spot_check(self):
        t = gf_construct(PrimePower(3, 2))
        q = t.q
        for u in range(q):
            assert t.add(u, 0) == u
            assert t.mul(u, 1) == u
            assert t.add(u, t.neg(u)) == 0
        # commutativity and distributivity on a few triples
        for u, v, w in [(1, 2, 3), (4, 5, 6), (7, 8, 2), (3, 3, 5)]:
            assert t.add(u, v) == t.add(v, u)
            assert t.mul(u, v) == t.mul(v, u)
            assert t.mul(u, t.add(v, w)) == t.add(t.mul(u, v), t.mul(u, w))

    def test_antilog_enumerates_nonzero_once_up_to_1024(self):
        for p in (2, 3, 5, 7, 11, 31):
            a = 1
            while p**a <= 1024:
                t = gf_construct(PrimePower(p, a))
                assert sorted(t.antilog) == list(range(1, p**a))
                assert all(t.log[e] == i for i, e in enumerate(t.antilog))
                a += 1

    def test_power_of_primitive_wraps(self):
        t = gf_construct(PrimePower(2, 2))
        assert t.power_of_primitive(0) == 1
        assert t.power_of_primitive(3) == t.power_of_primitive(0)


def test_euler_phi_matches_count():
    for n in range(2, 300):
        count = sum(1 for k in range(1, n) if math.gcd(k, n) == 1)
        assert euler_phi(n) == count
