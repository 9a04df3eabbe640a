#include <trimix/errors.hpp>
#include <trimix/rational.hpp>

#include <cctype>
#include <cstdlib>

namespace trimix
{

rational frac(const integer &num, const integer &den)
{
    if (den == 0) {
        throw error("zero denominator");
    }
    rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const rational &x)
{
    return x.get_str();
}

std::string to_string(const integer &x)
{
    return x.get_str();
}

rational parse_rational(std::string_view s)
{
    std::string str(s);
    while (!str.empty() && std::isspace(static_cast<unsigned char>(str.back()))) {
        str.pop_back();
    }
    std::size_t start = 0;
    while (start < str.size() && std::isspace(static_cast<unsigned char>(str[start]))) {
        ++start;
    }
    str = str.substr(start);
    if (str.empty()) {
        throw parse_error("empty rational");
    }
    const auto slash = str.find('/');
    auto valid_int = [](const std::string &t, bool allow_sign) {
        if (t.empty()) {
            return false;
        }
        std::size_t i = 0;
        if (allow_sign && (t[0] == '-' || t[0] == '+')) {
            i = 1;
        }
        if (i == t.size()) {
            return false;
        }
        for (; i < t.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) {
                return false;
            }
        }
        return true;
    };
    const std::string num = str.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : str.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false)) {
        throw parse_error("malformed rational '" + std::string(s) + "'");
    }
    integer d(den);
    if (d == 0) {
        throw parse_error("zero denominator in '" + std::string(s) + "'");
    }
    rational r(integer(num[0] == '+' ? num.substr(1) : num), d);
    r.canonicalize();
    return r;
}

integer ipow(const integer &base, unsigned long e)
{
    integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

long long gcd_ll(long long a, long long b)
{
    a = std::llabs(a);
    b = std::llabs(b);
    while (b != 0) {
        const long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long lcm_ll(long long a, long long b)
{
    if (a == 0 || b == 0) {
        return 0;
    }
    return std::llabs(a / gcd_ll(a, b) * b);
}

} // namespace trimix
