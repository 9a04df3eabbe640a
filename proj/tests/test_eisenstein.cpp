#include "oracle.hpp"

#include <trimix/eisenstein.hpp>
#include <trimix/errors.hpp>

#include <doctest.h>

using namespace trimix;

TEST_SUITE("eisenstein")
{
    TEST_CASE("E4 and E6")
    {
        const auto e4 = expand(eisenstein_spec{classical_eisenstein{4}}, 24 * 3);
        CHECK(e4.coeff(0) == 1);
        CHECK(e4.coeff(1) == 240);
        CHECK(e4.coeff(2) == 2160);
        const auto e6 = expand(eisenstein_spec{classical_eisenstein{6}}, 24 * 3);
        CHECK(e6.coeff(1) == -504);
        CHECK(e6.coeff(2) == -16632);
    }

    TEST_CASE("E2 and phi")
    {
        const auto e2 = expand(eisenstein_spec{quasi_e2{}}, 24 * 4);
        CHECK(e2.coeff(0) == 1);
        CHECK(e2.coeff(1) == -24);
        CHECK(e2.coeff(3) == -96);
        const auto phi = expand(eisenstein_spec{phi_ab{1, 2}}, 24 * 3);
        CHECK(phi.coeff(0) == 1);
        CHECK(phi.coeff(1) == 24);
        CHECK(phi.coeff(2) == 24);
        CHECK(eisenstein_spec{phi_ab{1, 6}}.label() == "phi_1_6");
    }

    TEST_CASE("twisted constant terms")
    {
        const auto one = kronecker_char::trivial();
        const auto m4 = kronecker_char::of(-4);
        const auto s = expand(eisenstein_spec{twisted_eisenstein{3, one, m4}}, 24 * 3);
        CHECK(s.coeff(0) == -gen_bernoulli(3, m4) / 6);
        CHECK(s.coeff(0) == frac(-1, 4));
        CHECK(expand(eisenstein_spec{twisted_eisenstein{3, m4, one}}, 24).coeff(0) == 0);
    }

    TEST_CASE("untwisted series is a multiple of E_k")
    {
        const auto one = kronecker_char::trivial();
        for (unsigned k : {4u, 6u, 8u}) {
            const auto a = expand(eisenstein_spec{twisted_eisenstein{k, one, one}}, 24 * 20);
            const auto b = scale(expand(eisenstein_spec{classical_eisenstein{k}}, 24 * 20), -bernoulli(k) / (2 * k));
            CHECK(a == b);
        }
    }

    TEST_CASE("coefficients against a direct divisor loop")
    {
        const std::vector<std::pair<long long, long long>> pairs{{1, -3}, {-3, 1}, {1, -4}, {-4, 1}, {8, -3},
                                                                 {-3, 8}, {1, -8}, {-8, 1}, {-24, 1}, {1, -24}};
        for (const auto &[a, b] : pairs) {
            const eisenstein_spec e{twisted_eisenstein{3, kronecker_char::of(a), kronecker_char::of(b)}};
            const auto s = expand(e, 24 * 201);
            for (long n = 1; n <= 200; ++n) {
                const auto ref = oracle::twisted_sigma(
                    2, [&](long x) { return kronecker(a, x); }, [&](long x) { return kronecker(b, x); }, n);
                CHECK(s.coeff(n) == ref);
            }
        }
    }

    TEST_CASE("dilation")
    {
        const eisenstein_spec e{classical_eisenstein{4}};
        const auto d = expand(e.dilated(3), 24 * 10);
        CHECK(d == expand(e, 24 * 4).dilate(3).truncate(24 * 10));
        CHECK(e.dilated(3).label() == "E4_at_3");
    }

    TEST_CASE("invalid specs")
    {
        const auto one = kronecker_char::trivial();
        CHECK_THROWS_AS(validate(eisenstein_spec{twisted_eisenstein{3, one, one}}), parity_violation);
        CHECK_THROWS_AS(validate(eisenstein_spec{twisted_eisenstein{2, one, kronecker_char::of(-4)}}), parity_violation);
        CHECK_THROWS_AS(validate(eisenstein_spec{phi_ab{2, 2}}), invalid_pair);
        CHECK_THROWS_AS(validate(eisenstein_spec{phi_ab{3, 1}}), invalid_pair);
        CHECK_THROWS_AS(expand(eisenstein_spec{phi_ab{3, 1}}, 48), invalid_pair);
    }
}
