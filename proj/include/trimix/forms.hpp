#ifndef TRIMIX_FORMS_HPP
#define TRIMIX_FORMS_HPP

#include <trimix/arith.hpp>
#include <trimix/qseries.hpp>
#include <trimix/rational.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace trimix
{

/*
 * Sum of u binary hexagonal forms a_i (x^2 + xy + y^2), v weighted squares
 * b_i y^2 and k weighted triangular numbers c_i T_z.
 */
struct mixed_form {
    std::vector<long> hex;
    std::vector<long> squares;
    std::vector<long> tri;

    long u() const
    {
        return static_cast<long>(hex.size());
    }
    long v() const
    {
        return static_cast<long>(squares.size());
    }
    long k() const
    {
        return static_cast<long>(tri.size());
    }
    long h() const;
    integer tri_product() const;

    friend bool operator==(const mixed_form &, const mixed_form &) = default;
};

enum class family { tri, st, lt, mixed };

std::string to_string(family f);
// Family implied by which coefficient lists are nonempty.
family implied_family(const mixed_form &f);
// True when all coefficients lie in {1,2,4,8} / {1,2,3,6} / {1,2,3,4,6}.
bool in_paper_sets(const mixed_form &f);

struct modular_classification {
    family fam;
    rational weight;
    long level;
    kronecker_char character;
    long q_prefactor24;
    bool modular;
};

modular_classification classify(const mixed_form &f);

// Brute-force representation numbers. The *_upto variants return counts for
// n = 0..nmax from a single enumeration.
std::vector<std::uint64_t> count_triangular_upto(const std::vector<long> &c, long nmax);
std::vector<std::uint64_t> count_squares_signed_upto(const std::vector<long> &b, long nmax);
std::vector<std::uint64_t> count_odd_squares_upto(const std::vector<long> &c, long nmax);
std::vector<std::uint64_t> count_hex_upto(const std::vector<long> &a, long nmax);
std::vector<std::uint64_t> count_mixed_upto(const mixed_form &f, long nmax);

std::uint64_t count_triangular(const std::vector<long> &c, long n);
std::uint64_t count_squares_signed(const std::vector<long> &b, long n);
std::uint64_t count_odd_squares(const std::vector<long> &c, long n);
std::uint64_t count_hex(const std::vector<long> &a, long n);
std::uint64_t count_mixed(const mixed_form &f, long n);

// prod F(a_i t) prod theta(b_i t) prod Psi(c_i t), no q-prefactor.
series24 gen_series(const mixed_form &f, long prec24);
// q^(h/8) times gen_series, known through prec24.
series24 modular_series(const mixed_form &f, long prec24);

// #{z in Z^k : sum c_i (z_i - 1/2)^2 <= r2}, boundary included.
std::uint64_t ellipsoid_lattice_count(const std::vector<long> &c, const rational &r2);
// 2^k sum_{n=first..floor(r2/2 - h/8)} delta_k(c; n); empty sums are 0.
std::uint64_t ellipsoid_shell_sum(const std::vector<long> &c, const rational &r2, long first);

} // namespace trimix

#endif
