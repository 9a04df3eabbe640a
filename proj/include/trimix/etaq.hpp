#ifndef TRIMIX_ETAQ_HPP
#define TRIMIX_ETAQ_HPP

#include <trimix/arith.hpp>
#include <trimix/qseries.hpp>
#include <trimix/rational.hpp>

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace trimix
{

// prod over delta | level of eta(delta t)^r_delta.
struct eta_quotient {
    long level = 1;
    std::map<long, long> exps;

    eta_quotient() = default;
    // Level defaults to the lcm of the bases.
    explicit eta_quotient(std::map<long, long> e, long lvl = 0);

    rational weight() const;
    // Sum of delta * r_delta: the leading exponent in units of q^(1/24).
    long offset24() const;
    // eta quotient of f(d t).
    eta_quotient dilate(long d) const;
    // Shorthand "1^2 2^-1 4^3".
    std::string to_string() const;

    friend bool operator==(const eta_quotient &, const eta_quotient &) = default;
};

// Parses whitespace-separated delta^r tokens; a bare delta means r = 1.
eta_quotient parse_eta_quotient(std::string_view text, long level = 0);

struct theorem_a_verdict {
    bool conditions_hold = false;
    bool is_cusp = false;
    rational weight;
    kronecker_char character;
    std::string reason;
    // M * sum gcd(d, delta)^2 r_delta / delta for each d | M, in divisor order.
    std::vector<std::pair<long, integer>> orders;
};

theorem_a_verdict check_theorem_a(const eta_quotient &e);

series24 expand(const eta_quotient &e, long prec24);

// Formal rational combination of eta quotients.
struct eta_combination {
    std::vector<std::pair<rational, eta_quotient>> terms;

    eta_combination dilate(long d) const;
    std::string to_string() const;
};

series24 expand(const eta_combination &c, long prec24);

struct named_cusp_form {
    std::string name;
    int weight;
    long level;
    kronecker_char character;
    eta_combination form;
};

// Looks up Delta_<k>_<N>_<chi>[_<j>], f_4_6, f_4_12, G and H.
named_cusp_form lookup_cusp_form(const std::string &name);
eta_combination named_cusp_form_expr(const std::string &name);
// Every single-quotient cusp form of the level 24 family plus f_4_6.
const std::vector<std::string> &eta_cusp_catalog();

std::vector<long> divisors(long n);

} // namespace trimix

#endif
