#ifndef TRIMIX_IDENTITIES_HPP
#define TRIMIX_IDENTITIES_HPP

#include <trimix/basis.hpp>
#include <trimix/qseries.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace trimix
{

struct verification_failure {
    long index = 0;
    std::string lhs;
    std::string rhs;
};

struct verification_report {
    std::string name;
    // Largest q-exponent or n that was compared.
    long checked_through = 0;
    bool passed = true;
    std::optional<verification_failure> first_failure;
    std::string note;
};

// Coefficientwise comparison of q^0 .. q^(count-1).
verification_report compare_series(std::string name, const series24 &lhs, const series24 &rhs, long count);

// Records the first n where lhs != rhs; later mismatches are ignored.
class report_builder
{
public:
    explicit report_builder(std::string name);
    void check(long n, const rational &lhs, const rational &rhs);
    verification_report finish(long checked_through) const;

private:
    verification_report m_report;
};

// Random coefficient lists: length in [min_len, max_len], entries in [1, cmax].
std::vector<long> random_coefficients(std::mt19937_64 &rng, long min_len, long max_len, long cmax);

verification_report verify_psi_theta(long prec);
// Psi_C^2 = prod theta(c_i t) Psi_C(2t).
verification_report verify_psi_theta(const std::vector<long> &c, long prec);

// One report per catalogued eta cusp form: Theorem A conditions, strict
// positivity at every cusp, and weight and character matching the name.
std::vector<verification_report> verify_theorem_a_catalog();

// delta_k(C; n) = q_k(C; 8n + h) for n <= nmax.
verification_report verify_odd_square(const std::vector<long> &c, long nmax);
std::vector<verification_report> verify_odd_square_random(unsigned count, long cmax, long kmax, long nmax,
                                                          std::uint64_t seed);

// q_2k(8n+2k) = delta_2k(n) = sum r_k(a) delta_k(b) = sum r_k(a) q_k(8b+k), a + 2b = n, k <= kmax.
verification_report verify_relations(long kmax, long nmax);
// The same chain for a coefficient list C and its doubling C^2.
verification_report verify_relations(const std::vector<long> &c, long nmax);
// Single-variable delta formulas, their convolutions with r_k, and the r4/r6/r8 divisor-sum formulas.
std::vector<verification_report> verify_relations1(long nmax);

/*
 * A closed form N(n - shift) = sum of terms(n) for a mixed form, checked
 * against brute-force counts for shift <= n <= nmax.
 */
struct closed_form {
    std::string name;
    std::string form;
    long shift = 0;
    std::vector<formula_term> terms;
};

verification_report verify_closed_form(const closed_form &f, long nmax);

// The closed forms for the 21 forms in M4(12).
const std::vector<closed_form> &formulas_21();
std::vector<verification_report> verify_21_formulas(long nmax);

/*
 * Closed forms for the 4- and 6-variable samples. Entries whose printed
 * form disagrees with brute force carry a corrected form and an explanation.
 */
struct sample_formula {
    closed_form printed;
    std::optional<closed_form> corrected;
    std::string erratum;
};

const std::vector<sample_formula> &sample_formulas();

// A printed identity checked as printed, plus its catalogued correction if any.
struct erratum_check {
    verification_report printed;
    std::optional<verification_report> corrected;
    std::string erratum;
};

std::vector<erratum_check> verify_sample_formulas(long nmax);

// p = (theta^2 - theta^2(3t)) / (2 theta^2(3t)), k = theta^3(3t) / theta, known through q^(count-1).
series24 pk_p(long count);
series24 pk_k(long count);

struct pk_identity {
    std::string name;
    // Coefficients of p^0 .. p^8; the identity is target = poly(p) k^4.
    std::vector<rational> poly;
    // Empty unless the printed polynomial is wrong.
    std::vector<rational> corrected;
    std::string erratum;
};

const std::vector<pk_identity> &pk_identities();
// Direct expansion of a (p,k) target: E4_at_d, f_4_6, f_4_6_at_2, f_4_12, G, H.
series24 pk_target(const std::string &name, long count);
std::vector<erratum_check> verify_pk(long prec);
// G and H factored forms against their expanded polynomials and against the eta combination.
std::vector<verification_report> verify_gh_factored(long prec);

/*
 * Lattice points of Z^k in sum c_i (z_i - 1/2)^2 <= R^2 against
 * 2^k sum_{n=first..[R^2/2 - h/8]} delta_k(C; n) for R^2 on a grid of
 * step 1/4 up to r2max. One report per starting index 0 and 1.
 */
std::vector<verification_report> verify_ellipsoid(const std::vector<long> &c, long r2max);

} // namespace trimix

#endif
