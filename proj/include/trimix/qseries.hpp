#ifndef TRIMIX_QSERIES_HPP
#define TRIMIX_QSERIES_HPP

#include <trimix/rational.hpp>

#include <vector>

namespace trimix
{

/*
 * Truncated power series in q^(1/24) with exact rational coefficients.
 *
 * Exponents are measured in grid units: the coefficient at unit e belongs to
 * q^(e/24). Coefficients are stored densely over [offset24, prec24), and
 * everything at or past prec24 is unknown. Asking for an unknown coefficient
 * throws insufficient_precision.
 *
 * Values are kept canonical: either the first stored coefficient is nonzero,
 * or nothing is stored and offset24 == prec24 (zero through prec24).
 */
class series24
{
public:
    // Zero series known through prec24.
    explicit series24(long prec24 = 0);
    // Coefficients for units offset24, offset24 + 1, ...; the size fixes prec24.
    series24(long offset24, std::vector<rational> coeffs);
    series24(long offset24, std::vector<rational> coeffs, long prec24);

    static series24 one(long prec24);
    static series24 monomial(long e24, const rational &c, long prec24);

    long offset24() const
    {
        return m_offset;
    }
    long prec24() const
    {
        return m_prec;
    }
    const std::vector<rational> &coeffs() const
    {
        return m_coeffs;
    }
    bool is_zero() const
    {
        return m_coeffs.empty();
    }

    // Coefficient of q^(e24/24).
    rational coeff24(long e24) const;
    // Coefficient of q^n.
    rational coeff(long n) const
    {
        return coeff24(24 * n);
    }
    // Coefficients of q^0 .. q^(count-1).
    std::vector<rational> integer_coeffs(long count) const;
    // True when every nonzero coefficient sits on an integer power of q.
    bool on_integer_grid() const;

    series24 operator-() const;
    series24 &operator+=(const series24 &other);
    series24 &operator-=(const series24 &other);
    series24 &operator*=(const rational &c);

    series24 dilate(long d) const;
    series24 invert() const;
    series24 pow(long r) const;
    // Multiply by q^(k/24).
    series24 shift24(long k) const;
    series24 truncate(long prec24) const;

    friend bool operator==(const series24 &, const series24 &) = default;

private:
    void canonicalize();

    long m_offset;
    long m_prec;
    std::vector<rational> m_coeffs;
};

series24 add(const series24 &a, const series24 &b);
series24 sub(const series24 &a, const series24 &b);
series24 mul(const series24 &a, const series24 &b);
series24 scale(const series24 &a, const rational &c);
series24 dilate(const series24 &a, long d);
series24 invert(const series24 &a);

series24 operator+(const series24 &a, const series24 &b);
series24 operator-(const series24 &a, const series24 &b);
series24 operator*(const series24 &a, const series24 &b);
series24 operator*(const rational &c, const series24 &a);

// Agreement of all coefficients of q^(e/24), e < bound24.
bool equal_through(const series24 &a, const series24 &b, long bound24);
// First unit e < bound24 where a and b differ; bound24 when they agree.
long first_difference(const series24 &a, const series24 &b, long bound24);

// q^(1/24) prod (1 - q^n).
series24 eta_series(long prec24);
// prod (1 - q^n), no prefactor.
series24 euler_series(long prec24);
// sum over n in Z of q^(n^2).
series24 theta_series(long prec24);
// sum over n >= 0 of q^(n(n+1)/2).
series24 psi_series(long prec24);
// sum over (m, n) in Z^2 of q^(m^2 + mn + n^2).
series24 hex_theta_series(long prec24);

} // namespace trimix

#endif
