#include "oracle.hpp"

#include <trimix/arith.hpp>

#include <doctest.h>

#include <numeric>
#include <random>

using namespace trimix;

TEST_SUITE("arith")
{
    TEST_CASE("kronecker symbol values")
    {
        CHECK(kronecker(1, 5) == 1);
        CHECK(kronecker(-4, 3) == -1);
        CHECK(kronecker(8, 3) == -1);
        CHECK(kronecker(-3, 2) == -1);
        CHECK(kronecker(-4, 2) == 0);
        CHECK(kronecker(12, 5) == -1);
        CHECK(kronecker(-8, -1) == -1);
        CHECK(kronecker(8, -1) == 1);
        CHECK(kronecker(5, 0) == 0);
        CHECK(kronecker(1, 0) == 1);
    }

    TEST_CASE("kronecker agrees with Euler's criterion at odd primes")
    {
        for (long long p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
            for (long long m : {-24, -8, -4, -3, 2, 5, 8, 12, 24}) {
                long long e = (p - 1) / 2;
                long long base = ((m % p) + p) % p;
                long long acc = 1;
                for (long long i = 0; i < e; ++i) {
                    acc = acc * base % p;
                }
                const int expected = base == 0 ? 0 : (acc == 1 ? 1 : -1);
                CHECK(kronecker(m, p) == expected);
            }
        }
    }

    TEST_CASE("kronecker is completely multiplicative")
    {
        std::mt19937_64 rng(3);
        std::uniform_int_distribution<long long> pick(-200, 200);
        for (long long m : {-24, -8, -4, -3, 1, 8, 12, 24}) {
            for (int i = 0; i < 200; ++i) {
                const long long a = pick(rng), b = pick(rng);
                CHECK(kronecker(m, a * b) == kronecker(m, a) * kronecker(m, b));
            }
        }
    }

    TEST_CASE("characters vanish exactly off units")
    {
        const auto chi = kronecker_char(-3, 24);
        for (long long n = 1; n <= 100; ++n) {
            CHECK((chi(n) == 0) == (std::gcd(n, 24LL) > 1));
        }
        CHECK(kronecker_char::of(-4).parity() == -1);
        CHECK(kronecker_char::of(8).parity() == 1);
        CHECK(kronecker_char::of(-24).parity() == -1);
    }

    TEST_CASE("sigma")
    {
        CHECK(sigma(1, 6) == 12);
        CHECK(sigma(3, 2) == 9);
        CHECK(sigma_div(1, 5, 2) == 0);
        CHECK(sigma_div(1, 6, 2) == 4);
        CHECK(sigma(1, 0) == 0);
        CHECK(sigma(1, -3) == 0);
        for (long n = 1; n <= 300; ++n) {
            CHECK(sigma(0, n) == oracle::sigma(0, n));
            CHECK(sigma(3, n) == oracle::sigma(3, n));
        }
    }

    TEST_CASE("twisted divisor sums")
    {
        const auto one = kronecker_char::trivial();
        const auto m4 = kronecker_char::of(-4);
        CHECK(gen_divisor_sum(2, one, m4, 1) == 1);
        CHECK(gen_divisor_sum(2, m4, one, 2) == 4);
        CHECK(sharp_sigma3(3) == 28);
        CHECK(sharp_sigma3(1) == 1);
        CHECK(sharp_sigma3(2) == 8);
        CHECK(sharp_sigma3(4) == 64);
    }

    TEST_CASE("trivial twist is sigma")
    {
        const auto one = kronecker_char::trivial();
        for (long n = 1; n <= 500; ++n) {
            CHECK(gen_divisor_sum(1, one, one, n) == sigma(1, n));
        }
    }

    TEST_CASE("twisted sums against a direct divisor loop")
    {
        const std::vector<long long> tops{1, -3, -4, 8, -8, 12, -24};
        for (auto a : tops) {
            for (auto b : tops) {
                const auto chi = kronecker_char::of(a);
                const auto psi = kronecker_char::of(b);
                for (long n = 1; n <= 60; ++n) {
                    const auto ref = oracle::twisted_sigma(
                        2, [&](long x) { return kronecker(a, x); }, [&](long x) { return kronecker(b, x); }, n);
                    CHECK(gen_divisor_sum(2, chi, psi, n) == ref);
                }
            }
        }
    }

    TEST_CASE("twisted sums are multiplicative")
    {
        std::mt19937_64 rng(5);
        std::uniform_int_distribution<long> pick(1, 120);
        const auto chi = kronecker_char::of(-3);
        const auto psi = kronecker_char::of(8);
        int seen = 0;
        while (seen < 200) {
            const long a = pick(rng), b = pick(rng);
            if (std::gcd(a, b) != 1) {
                continue;
            }
            ++seen;
            CHECK(gen_divisor_sum(2, chi, psi, a * b) == gen_divisor_sum(2, chi, psi, a) * gen_divisor_sum(2, chi, psi, b));
        }
    }

    TEST_CASE("Bernoulli numbers")
    {
        CHECK(bernoulli(0) == 1);
        CHECK(bernoulli(1) == frac(-1, 2));
        CHECK(bernoulli(2) == frac(1, 6));
        CHECK(bernoulli(4) == frac(-1, 30));
        CHECK(bernoulli(12) == frac(-691, 2730));
        CHECK(bernoulli(5) == 0);
        CHECK(-2 * 4 / bernoulli(4) == 240);
        for (unsigned k = 2; k <= 10; ++k) {
            CHECK(gen_bernoulli(k, kronecker_char::trivial()) == bernoulli(k));
        }
    }

    TEST_CASE("generalized Bernoulli numbers")
    {
        // B_{1,chi} = -2h/w for imaginary quadratic fields.
        CHECK(gen_bernoulli(1, kronecker_char::of(-4)) == frac(-1, 2));
        CHECK(gen_bernoulli(1, kronecker_char::of(-3)) == frac(-1, 3));
        CHECK(gen_bernoulli(1, kronecker_char::of(-8)) == -1);
        CHECK(gen_bernoulli(1, kronecker_char::of(-24)) == -2);
        // Odd characters have vanishing even-index values, even ones odd-index.
        CHECK(gen_bernoulli(2, kronecker_char::of(-4)) == 0);
        CHECK(gen_bernoulli(3, kronecker_char::of(8)) == 0);
        CHECK(gen_bernoulli(3, kronecker_char::of(-4)) == frac(3, 2));
        CHECK(gen_bernoulli(2, kronecker_char::of(8)) == 2);
    }

    TEST_CASE("Bernoulli polynomials")
    {
        CHECK(bernoulli_poly(2, frac(1, 2)) == frac(-1, 12));
        for (unsigned k = 2; k <= 8; ++k) {
            CHECK(bernoulli_poly(k, 1) == bernoulli(k));
            CHECK(bernoulli_poly(k, 0) == bernoulli(k));
        }
    }
}
