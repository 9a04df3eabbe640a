#ifndef TRIMIX_BASIS_HPP
#define TRIMIX_BASIS_HPP

#include <trimix/arith.hpp>
#include <trimix/eisenstein.hpp>
#include <trimix/etaq.hpp>
#include <trimix/qseries.hpp>

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace trimix
{

struct space_id {
    int weight = 0;
    long level = 1;
    // Symbol (D/.) with D a fundamental discriminant or 1; modulus = level.
    kronecker_char character;

    static space_id make(int k, long n, long long chi_top)
    {
        return {k, n, kronecker_char(chi_top, n)};
    }
    // "M3(24,chi-4)", trivial character printed as chi0.
    std::string label() const;
    bool same_as(const space_id &o) const;
    // M_k(N, chi) lies inside o: same weight, N | o.level, characters agree mod o.level.
    bool contained_in(const space_id &o) const;
};

// Column layout of a space.
//   catalog:       the bases of Tables A and B, and E4(dt), f_4_6, f_4_6(2t), f_4_12 in weight 4.
//   e2_dilations:  weight 2, trivial character: E2(dt) for d | N followed by the cusp block.
enum class basis_convention { catalog, e2_dilations };

std::string to_string(basis_convention c);
basis_convention parse_basis_convention(const std::string &s);

/*
 * One term c * K(n/d) of a coefficient formula, where K is a divisor sum or
 * the Fourier coefficient of a named cusp form. K(x) is zero unless x is a
 * positive integer.
 */
struct divisor_kernel {
    enum class kind { sigma, twisted_sigma, sharp_sigma3, cusp };
    kind k = kind::sigma;
    unsigned r = 1;
    long long chi = 1;
    long long psi = 1;
    std::string cusp;

    std::string render(long d) const;
    friend bool operator==(const divisor_kernel &, const divisor_kernel &) = default;
};

struct formula_term {
    rational coeff;
    divisor_kernel kernel;
    long divisor = 1;
};

// Sum of the terms at n >= 1.
rational evaluate_terms(const std::vector<formula_term> &terms, long n);
// Sorted, merged, zero-free; "0" when empty.
std::string render_terms(const std::vector<formula_term> &terms);
std::vector<formula_term> merge_terms(const std::vector<formula_term> &terms);

// q^n coefficient of a named cusp form, memoized per name.
rational cusp_coefficient(const std::string &name, long n);

struct cusp_source {
    std::string name;
    long dilation = 1;
};

class basis_element
{
public:
    basis_element(std::string label, std::variant<eisenstein_spec, cusp_source> source);

    const std::string &label() const
    {
        return m_label;
    }
    const std::variant<eisenstein_spec, cusp_source> &source() const
    {
        return m_source;
    }
    bool is_cusp() const
    {
        return std::holds_alternative<cusp_source>(m_source);
    }

    // Memoized; concurrent callers see a complete expansion.
    series24 expansion(long prec24) const;
    // Coefficient of q^n for n >= 1 as divisor-sum terms.
    std::vector<formula_term> coefficient_terms() const;

private:
    struct memo;
    std::string m_label;
    std::variant<eisenstein_spec, cusp_source> m_source;
    std::shared_ptr<memo> m_memo;
};

const std::vector<space_id> &catalog_spaces();
// Advertised (Eisenstein, cusp) dimensions.
std::pair<int, int> catalog_dimensions(const space_id &s);

std::vector<basis_element> basis_for(const space_id &s, basis_convention c = basis_convention::catalog);

long sturm_bound(const space_id &s);

} // namespace trimix

#endif
