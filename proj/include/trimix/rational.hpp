#ifndef TRIMIX_RATIONAL_HPP
#define TRIMIX_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace trimix
{

using integer = mpz_class;
using rational = mpq_class;

// num/den reduced to lowest terms with a positive denominator.
rational frac(const integer &num, const integer &den);

// Lowest terms, "p" for integers and "p/q" otherwise.
std::string to_string(const rational &x);
std::string to_string(const integer &x);

// Accepts "p", "-p", "p/q"; the result is canonicalized.
rational parse_rational(std::string_view s);

integer ipow(const integer &base, unsigned long e);

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

} // namespace trimix

#endif
