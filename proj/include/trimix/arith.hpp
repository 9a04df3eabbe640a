#ifndef TRIMIX_ARITH_HPP
#define TRIMIX_ARITH_HPP

#include <trimix/rational.hpp>

#include <string>

namespace trimix
{

// Kronecker symbol (m/n), full extension to n <= 0 and even n.
int kronecker(long long m, long long n);

/*
 * Real Dirichlet character n -> (top/n), forced to vanish on integers sharing
 * a factor with modulus. The principal character mod N is {1, N}.
 */
struct kronecker_char {
    long long top = 1;
    long long modulus = 1;

    kronecker_char() = default;
    kronecker_char(long long t, long long mod) : top(t), modulus(mod) {}
    // (m/.) with modulus |m|.
    static kronecker_char of(long long m);
    static kronecker_char trivial()
    {
        return {1, 1};
    }

    int operator()(long long n) const;
    int parity() const
    {
        return (*this)(-1);
    }
    bool is_trivial_symbol() const
    {
        return top == 1;
    }
    // "1" for the trivial symbol, otherwise "chi<top>", e.g. "chi-4".
    std::string label() const;

    friend bool operator==(const kronecker_char &, const kronecker_char &) = default;
};

// Sign times squarefree kernel of m, lifted to a fundamental discriminant
// (multiplied by 4 unless it is 1 mod 4). (m/n) and (D/n) agree when
// gcd(n, 2m) = 1.
long long fundamental_discriminant(long long m);

// Agreement as characters mod N on every residue class coprime to N.
bool same_character_mod(const kronecker_char &a, const kronecker_char &b, long long n);

integer sigma(unsigned r, long long n);
// sigma_r(num/den), zero unless den divides num and the quotient is positive.
integer sigma_div(unsigned r, long long num, long long den);
// sum over d | n of psi(d) chi(n/d) d^r; zero for n <= 0.
integer gen_divisor_sum(unsigned r, const kronecker_char &chi, const kronecker_char &psi, long long n);
// sum over d | n with n/d odd of d^3.
integer sharp_sigma3(long long n);

rational bernoulli(unsigned k);
rational bernoulli_poly(unsigned k, const rational &x);
// N^(k-1) sum_{a=1..N} psi(a) B_k(a/N), N the modulus of psi.
rational gen_bernoulli(unsigned k, const kronecker_char &psi);

} // namespace trimix

#endif
