#include "oracle.hpp"

#include <trimix/descriptor.hpp>
#include <trimix/errors.hpp>
#include <trimix/forms.hpp>

#include <doctest.h>

#include <random>

using namespace trimix;

namespace
{

// A random form of the given family with small coefficients and parity fixed up.
mixed_form random_form(std::mt19937_64 &rng, family fam)
{
    std::uniform_int_distribution<long> len(0, 3);
    mixed_form f;
    switch (fam) {
    case family::tri:
        f.tri = oracle::random_list(rng, 2 * (1 + len(rng) % 2), 6);
        break;
    case family::st:
        f.squares = oracle::random_list(rng, 1 + len(rng) % 2, 6);
        f.tri = oracle::random_list(rng, 1 + len(rng) % 2, 6);
        if ((f.squares.size() + f.tri.size()) % 2 != 0) {
            f.tri.push_back(1);
        }
        break;
    case family::lt:
        f.hex = oracle::random_list(rng, 1, 8);
        f.tri = oracle::random_list(rng, 2, 6);
        break;
    case family::mixed:
        f.hex = oracle::random_list(rng, 1, 4);
        f.squares = oracle::random_list(rng, 1, 3);
        f.tri = oracle::random_list(rng, 1, 4);
        break;
    }
    return f;
}

} // namespace

TEST_SUITE("forms")
{
    TEST_CASE("classification of triangular forms")
    {
        const auto a = classify({{}, {}, {1, 1, 3, 3}});
        CHECK(a.fam == family::tri);
        CHECK(a.weight == 2);
        CHECK(a.level == 6);
        CHECK(same_character_mod(a.character, kronecker_char::trivial(), 6));
        CHECK(a.modular);
        CHECK(a.q_prefactor24 == 24);

        const auto b = classify({{}, {}, {1, 2, 2, 3}});
        CHECK(b.modular);
        CHECK(b.level == 12);
        CHECK(same_character_mod(b.character, kronecker_char::of(12), 12));

        CHECK_FALSE(classify({{}, {}, {1, 1, 1, 1}}).modular);
    }

    TEST_CASE("classification of mixed families")
    {
        const auto st = classify(parse_descriptor("st:1^1 3^1 ; 2^1 6^1").form);
        CHECK(st.fam == family::st);
        CHECK(st.weight == 2);
        CHECK(st.level == 12);
        const auto lt = classify(parse_descriptor("lt:1^1 ; 2^1 6^1").form);
        CHECK(lt.fam == family::lt);
        CHECK(lt.weight == 2);
        CHECK(lt.level == 12);
        const auto m = classify(parse_descriptor("mixed:2^1 ; 1^3 3^3 ; ").form);
        CHECK(m.weight == 4);
        CHECK(m.level == 12);
    }

    TEST_CASE("parity violations are rejected")
    {
        CHECK_THROWS_AS(classify({{}, {}, {1, 2, 3}}), parity_violation);
        CHECK_THROWS_AS(classify({{}, {1}, {1, 1}}), parity_violation);
        CHECK_THROWS_AS(classify({{1}, {}, {1}}), parity_violation);
    }

    TEST_CASE("counting examples")
    {
        CHECK(count_triangular({1, 1, 1, 1}, 1) == 4);
        CHECK(count_triangular({2, 5, 7}, 0) == 1);
        CHECK(count_triangular({1, 3}, 4) == 1);
        CHECK(count_triangular({1, 3}, 4) == oracle::delta({1, 3}, 4));
        CHECK(count_squares_signed({1, 1}, 1) == 4);
        CHECK(count_squares_signed({1}, 4) == 2);
        CHECK(count_squares_signed({1, 2}, 3) == 4);
        CHECK(count_odd_squares({1, 1}, 2) == 1);
        CHECK(count_odd_squares({1}, 9) == 1);
        CHECK(count_odd_squares({1, 1, 1, 1}, 12) == 4);
        CHECK(count_hex({1}, 1) == 6);
        CHECK(count_mixed({{2}, {1, 1, 1}, {3, 3, 3}}, 0) == 1);
    }

    TEST_CASE("counts agree with the recursive oracle")
    {
        std::mt19937_64 rng(17);
        for (int i = 0; i < 40; ++i) {
            const auto fam = static_cast<family>(i % 4);
            const auto f = random_form(rng, fam);
            const auto fast = count_mixed_upto(f, 25);
            for (long n = 0; n <= 25; ++n) {
                CHECK(fast[static_cast<std::size_t>(n)] == oracle::mixed(f, n));
            }
        }
        for (int i = 0; i < 20; ++i) {
            const auto c = oracle::random_list(rng, 1 + i % 4, 6);
            const auto q = count_odd_squares_upto(c, 80);
            for (long n = 0; n <= 80; ++n) {
                CHECK(q[static_cast<std::size_t>(n)] == oracle::q_odd(c, n));
            }
        }
    }

    TEST_CASE("generating series against brute force, every family")
    {
        std::mt19937_64 rng(23);
        for (int i = 0; i < 24; ++i) {
            const auto fam = static_cast<family>(i % 4);
            const auto f = random_form(rng, fam);
            const auto s = gen_series(f, 24 * 31);
            const long shift = 3 * f.h();
            for (long n = 0; n <= 30; ++n) {
                CHECK(s.coeff(n) == static_cast<long>(oracle::mixed(f, n)));
            }
            const auto m = modular_series(f, 24 * 31 + shift);
            for (long n = 0; n <= 30; ++n) {
                CHECK(m.coeff24(24 * n + shift) == static_cast<long>(oracle::mixed(f, n)));
            }
        }
    }

    TEST_CASE("generating series examples")
    {
        const auto s = modular_series({{}, {}, std::vector<long>(8, 1)}, 24 * 5);
        CHECK(s.on_integer_grid());
        CHECK(s.offset24() == 24);
        CHECK(s.coeff(1) == 1);
        CHECK(modular_series({{}, {}, {1, 1}}, 24 * 4).coeff24(24 * 2 + 6) == 1);
    }

    TEST_CASE("odd squares and triangular numbers correspond")
    {
        std::mt19937_64 rng(29);
        for (int i = 0; i < 20; ++i) {
            const auto c = oracle::random_list(rng, 1 + i % 6, 6);
            long h = 0;
            for (long x : c) {
                h += x;
            }
            const auto d = count_triangular_upto(c, 50);
            const auto q = count_odd_squares_upto(c, 8 * 50 + h);
            for (long n = 0; n <= 50; ++n) {
                CHECK(d[static_cast<std::size_t>(n)] == q[static_cast<std::size_t>(8 * n + h)]);
            }
        }
    }

    TEST_CASE("split of a sum of squares and triangular numbers")
    {
        // delta + r = N - sum_{m=1}^{n-1} r(m) delta(n-m)
        std::mt19937_64 rng(31);
        for (int i = 0; i < 10; ++i) {
            const auto b = oracle::random_list(rng, 1 + i % 3, 4);
            const auto c = oracle::random_list(rng, 1 + (i + 1) % 3, 4);
            const mixed_form f{{}, b, c};
            for (long n = 1; n <= 30; ++n) {
                std::uint64_t conv = 0;
                for (long m = 1; m < n; ++m) {
                    conv += oracle::r(b, m) * oracle::delta(c, n - m);
                }
                CHECK(count_triangular(c, n) + count_squares_signed(b, n) == count_mixed(f, n) - conv);
            }
        }
    }

    TEST_CASE("ellipsoid counts")
    {
        CHECK(ellipsoid_lattice_count({1}, frac(1, 4)) == 2);
        CHECK(ellipsoid_lattice_count({1}, frac(1, 5)) == 0);
        for (const auto &c : std::vector<std::vector<long>>{{1}, {1, 1}, {1, 3}, {1, 2, 3}}) {
            for (long q = 0; q <= 80; ++q) {
                const rational r2 = frac(q, 4);
                const auto n = ellipsoid_lattice_count(c, r2);
                CHECK(n == oracle::ellipsoid(c, 0, q));
                CHECK(n % (1u << c.size()) == 0);
                CHECK(n == ellipsoid_shell_sum(c, r2, 0));
            }
        }
        // R^2 = 2 reaches only the innermost shell: w_1^2 + w_2^2 <= 8 with w odd.
        CHECK(ellipsoid_lattice_count({1, 1}, 2) == 4 * count_triangular({1, 1}, 0));
        CHECK(ellipsoid_lattice_count({1, 1}, frac(5, 2)) == 4 * (count_triangular({1, 1}, 0) + count_triangular({1, 1}, 1)));
    }

    TEST_CASE("descriptors round trip")
    {
        for (const char *text : {"tri:1^2 3^2", "st:1^1 2^1 ; 4^2", "lt:1^1 ; 2^1 6^1", "mixed:2^1 ; 1^2 ; 2^1 6^1"}) {
            CHECK(parse_descriptor(text).to_string() == text);
        }
        const auto d = parse_descriptor("st:1^2 3^0 ; 4^2");
        CHECK(d.form.squares == std::vector<long>{1, 1});
        CHECK(d.form.tri == std::vector<long>{4, 4});
        CHECK(parse_exponent_notation("1 2^3") == std::vector<long>{1, 2, 2, 2});
        CHECK(exponent_notation({3, 1, 1}) == "1^2 3^1");
        CHECK_THROWS_AS(parse_descriptor("1^2 3^2"), parse_error);
        CHECK_THROWS_AS(parse_descriptor("tri:1^x"), parse_error);
        CHECK_THROWS_AS(parse_descriptor("st:1^2"), parse_error);
    }
}
