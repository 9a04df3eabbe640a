#include "oracle.hpp"

#include <trimix/errors.hpp>
#include <trimix/qseries.hpp>

#include <doctest.h>

#include <random>

using namespace trimix;

namespace
{

series24 poly(std::vector<long> c, long prec24)
{
    std::vector<rational> v;
    for (long x : c) {
        v.emplace_back(x);
    }
    return series24(0, std::move(v), prec24);
}

// Random series on a coarse grid: offset in [-24, 24], step 1/24 or integer.
series24 random_series(std::mt19937_64 &rng, long prec24)
{
    std::uniform_int_distribution<long> off(-24, 24);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    const long o = off(rng);
    std::vector<rational> c(static_cast<std::size_t>(prec24 - o));
    for (auto &x : c) {
        x = frac(num(rng), den(rng));
    }
    return series24(o, std::move(c), prec24);
}

} // namespace

TEST_SUITE("qseries")
{
    TEST_CASE("inverse of 1 - q is geometric")
    {
        const auto g = invert(poly({1, -1}, 240));
        for (long n = 0; n < 10; ++n) {
            CHECK(g.coeff(n) == 1);
        }
    }

    TEST_CASE("theta times its inverse is one")
    {
        const auto t = theta_series(480);
        CHECK(equal_through(t * invert(t), series24::one(480), 480));
    }

    TEST_CASE("inverting q^(1/24)(1 - q) negates the offset")
    {
        const series24 s(1, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1}, 241);
        const auto inv = invert(s);
        CHECK(inv.offset24() == -1);
        CHECK(inv.coeff24(-1) == 1);
        CHECK(inv.coeff24(23) == 1);
        CHECK(inv.coeff24(47) == 1);
        CHECK(inv.coeff24(0) == 0);
    }

    TEST_CASE("inverting zero throws")
    {
        CHECK_THROWS_AS(invert(series24(240)), zero_leading_coefficient);
    }

    TEST_CASE("eta and the pentagonal numbers")
    {
        const auto e = eta_series(24 * 30 + 1);
        CHECK(e.offset24() == 1);
        CHECK(e.coeff24(1) == 1);
        const auto p = euler_series(24 * 30);
        CHECK(p.coeff(1) == -1);
        CHECK(p.coeff(5) == 1);
        // prod (1 - q^n) by direct multiplication.
        series24 direct = series24::one(24 * 30);
        for (long n = 1; n < 30; ++n) {
            direct = direct * (series24::one(24 * 30) - series24::monomial(24 * n, 1, 24 * 30));
        }
        CHECK(direct == p);
    }

    TEST_CASE("theta, psi and the hexagonal theta")
    {
        const auto t = theta_series(24 * 5);
        const std::vector<long> tv{1, 2, 0, 0, 2};
        for (long n = 0; n < 5; ++n) {
            CHECK(t.coeff(n) == tv[static_cast<std::size_t>(n)]);
        }
        const auto p = psi_series(24 * 7);
        const std::vector<long> pv{1, 1, 0, 1, 0, 0, 1};
        for (long n = 0; n < 7; ++n) {
            CHECK(p.coeff(n) == pv[static_cast<std::size_t>(n)]);
        }
        CHECK(hex_theta_series(48).coeff(1) == 6);
    }

    TEST_CASE("psi against a direct count of triangular numbers")
    {
        const long N = 300;
        const auto p = psi_series(24 * N);
        for (long n = 0; n < N; ++n) {
            long hits = 0;
            for (long m = 0; m * (m + 1) / 2 <= n; ++m) {
                hits += m * (m + 1) / 2 == n;
            }
            CHECK(p.coeff(n) == hits);
        }
    }

    TEST_CASE("hexagonal theta against a box count")
    {
        const long N = 80;
        const auto f = hex_theta_series(24 * N);
        for (long n = 0; n < N; ++n) {
            CHECK(f.coeff(n) == static_cast<long>(oracle::mixed({{1}, {}, {}}, n)));
        }
    }

    TEST_CASE("equal_through")
    {
        const long P = 2400;
        const auto psi = psi_series(P);
        CHECK(equal_through(psi * psi, theta_series(P) * psi_series(P / 2).dilate(2), P));
        CHECK_FALSE(equal_through(theta_series(48), psi_series(48), 48));
        CHECK(first_difference(theta_series(48), psi_series(48), 48) == 24);
        CHECK(equal_through(psi, psi, P));
        CHECK_THROWS_AS(equal_through(psi_series(24), psi_series(48), 48), insufficient_precision);
    }

    TEST_CASE("reading past the precision throws")
    {
        const auto t = theta_series(240);
        CHECK_NOTHROW(t.coeff24(239));
        CHECK_THROWS_AS(t.coeff24(240), insufficient_precision);
        CHECK_THROWS_AS((t * psi_series(120)).coeff(5), insufficient_precision);
    }

    TEST_CASE("precision propagates pessimistically")
    {
        CHECK((theta_series(240) + psi_series(120)).prec24() == 120);
        CHECK(theta_series(240).dilate(3).prec24() == 720);
        CHECK(series24(0, {1, 2}, 48).shift24(5).prec24() == 53);
    }

    TEST_CASE("zero is canonical")
    {
        const auto z = theta_series(96) - theta_series(96);
        CHECK(z.is_zero());
        CHECK(z.offset24() == z.prec24());
        CHECK(z == series24(96));
    }

    TEST_CASE("ring axioms on random series")
    {
        std::mt19937_64 rng(7);
        for (int i = 0; i < 100; ++i) {
            const auto a = random_series(rng, 72);
            const auto b = random_series(rng, 72);
            const auto c = random_series(rng, 72);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            const auto lhs = a * (b + c);
            const auto rhs = a * b + a * c;
            CHECK(equal_through(lhs, rhs, std::min(lhs.prec24(), rhs.prec24())));
            CHECK((a - a).is_zero());
        }
    }

    TEST_CASE("dilation is multiplicative")
    {
        std::mt19937_64 rng(11);
        for (int i = 0; i < 50; ++i) {
            const auto a = random_series(rng, 96);
            const auto b = random_series(rng, 96);
            const long d = 1 + static_cast<long>(rng() % 4);
            CHECK(dilate(a * b, d) == dilate(a, d) * dilate(b, d));
        }
    }

    TEST_CASE("pow agrees with repeated products")
    {
        const auto t = theta_series(240);
        CHECK(t.pow(3) == t * t * t);
        CHECK(equal_through(t.pow(-2) * t * t, series24::one(240), 240));
        CHECK(t.pow(0) == series24::one(240));
    }
}
