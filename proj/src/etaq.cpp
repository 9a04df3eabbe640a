#include <trimix/errors.hpp>
#include <trimix/etaq.hpp>

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace trimix
{

std::vector<long> divisors(long n)
{
    std::vector<long> out;
    for (long d = 1; d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
        }
    }
    return out;
}

eta_quotient::eta_quotient(std::map<long, long> e, long lvl) : level(1)
{
    for (const auto &[d, r] : e) {
        if (d < 1) {
            throw error("eta quotient base must be positive");
        }
        if (r != 0) {
            exps[d] = r;
        }
    }
    long l = 1;
    for (const auto &[d, r] : exps) {
        l = static_cast<long>(lcm_ll(l, d));
    }
    if (lvl == 0) {
        level = l;
    } else {
        if (lvl % l != 0) {
            throw error("eta quotient level " + std::to_string(lvl) + " is not a multiple of every base");
        }
        level = lvl;
    }
}

rational eta_quotient::weight() const
{
    long s = 0;
    for (const auto &[d, r] : exps) {
        s += r;
    }
    return frac(s, 2);
}

long eta_quotient::offset24() const
{
    long s = 0;
    for (const auto &[d, r] : exps) {
        s += d * r;
    }
    return s;
}

eta_quotient eta_quotient::dilate(long d) const
{
    std::map<long, long> e;
    for (const auto &[b, r] : exps) {
        e[b * d] = r;
    }
    return eta_quotient(e, level * d);
}

std::string eta_quotient::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto &[d, r] : exps) {
        if (!first) {
            os << ' ';
        }
        first = false;
        os << d << '^' << r;
    }
    return os.str();
}

eta_quotient parse_eta_quotient(std::string_view text, long level)
{
    std::istringstream is{std::string(text)};
    std::string tok;
    std::map<long, long> e;
    while (is >> tok) {
        const auto caret = tok.find('^');
        try {
            std::size_t used = 0;
            const long d = std::stol(tok.substr(0, caret), &used);
            if (used != (caret == std::string::npos ? tok.size() : caret)) {
                throw parse_error("");
            }
            long r = 1;
            if (caret != std::string::npos) {
                const std::string rs = tok.substr(caret + 1);
                r = std::stol(rs, &used);
                if (used != rs.size()) {
                    throw parse_error("");
                }
            }
            e[d] += r;
        } catch (const std::exception &) {
            throw parse_error("malformed eta token '" + tok + "'");
        }
    }
    if (e.empty()) {
        throw parse_error("empty eta quotient");
    }
    return eta_quotient(e, level);
}

theorem_a_verdict check_theorem_a(const eta_quotient &e)
{
    theorem_a_verdict v;
    v.weight = e.weight();
    const long m = e.level;
    long s1 = 0, s2 = 0;
    for (const auto &[d, r] : e.exps) {
        s1 += d * r;
        s2 += (m / d) * r;
    }
    bool ok = true;
    if (v.weight.get_den() != 1 || sgn(v.weight) <= 0) {
        ok = false;
        v.reason = "weight " + trimix::to_string(v.weight) + " is not a positive integer";
    }
    if (s1 % 24 != 0 || s2 % 24 != 0) {
        if (ok) {
            v.reason = "sum delta r = " + std::to_string(s1) + ", sum (M/delta) r = " + std::to_string(s2)
                       + " not both divisible by 24";
        }
        ok = false;
    }
    bool cusp = true;
    for (long d : divisors(m)) {
        // Scaled by M so the quantity is an integer; only its sign is used.
        integer q = 0;
        for (const auto &[delta, r] : e.exps) {
            const long g = gcd_ll(d, delta);
            q += integer(g * g) * r * (m / delta);
        }
        v.orders.emplace_back(d, q);
        if (sgn(q) < 0) {
            if (ok) {
                v.reason = "order at divisor " + std::to_string(d) + " is negative";
            }
            ok = false;
        }
        if (sgn(q) <= 0) {
            cusp = false;
        }
    }
    v.conditions_hold = ok;
    v.is_cusp = ok && cusp;
    // ((-1)^k s / .) with s = prod delta^|r|, reduced mod squares.
    long long kernel = 1;
    for (const auto &[delta, r] : e.exps) {
        if (std::labs(r) % 2 == 1) {
            kernel *= delta;
        }
    }
    long long sign = 1;
    if (v.weight.get_den() == 1 && mpz_odd_p(v.weight.get_num_mpz_t())) {
        sign = -1;
    }
    v.character = kronecker_char(fundamental_discriminant(sign * kernel), m);
    return v;
}

series24 expand(const eta_quotient &e, long prec24)
{
    const long shift = e.offset24();
    const long need = prec24 - shift;
    if (need <= 0) {
        return series24(prec24);
    }
    series24 s = series24::one(need);
    for (const auto &[d, r] : e.exps) {
        const series24 base = euler_series((need + d - 1) / d).dilate(d).truncate(need);
        s = s * base.pow(r);
    }
    return s.truncate(need).shift24(shift);
}

eta_combination eta_combination::dilate(long d) const
{
    eta_combination c;
    for (const auto &[coef, q] : terms) {
        c.terms.emplace_back(coef, q.dilate(d));
    }
    return c;
}

std::string eta_combination::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto &[coef, q] : terms) {
        if (!first) {
            os << " + ";
        }
        first = false;
        if (coef != 1) {
            os << '(' << coef.get_str() << ")*";
        }
        os << '[' << q.to_string() << ']';
    }
    return os.str();
}

series24 expand(const eta_combination &c, long prec24)
{
    series24 s(prec24);
    for (const auto &[coef, q] : c.terms) {
        s += scale(expand(q, prec24), coef);
    }
    return s;
}

namespace
{

struct catalog_row {
    const char *name;
    int weight;
    long level;
    long long chi;
    const char *eta;
};

// Weight, level, character symbol and eta shorthand of each named form.
const catalog_row catalog_rows[] = {
    {"Delta_2_24_chi0", 2, 24, 1, "2^1 4^1 6^1 12^1"},
    {"Delta_2_24_chi8_1", 2, 24, 8, "1^1 2^-1 3^-1 6^4 8^2 12^-1"},
    {"Delta_2_24_chi8_2", 2, 24, 8, "1^2 4^-1 6^-1 8^1 12^4 24^-1"},
    {"Delta_2_24_chi24_1", 2, 24, 24, "1^1 2^-1 3^-1 4^1 6^4 12^-2 24^2"},
    {"Delta_2_24_chi24_2", 2, 24, 24, "1^2 2^-2 4^4 6^1 8^-1 12^-1 24^1"},
    {"Delta_3_8_chi-8", 3, 8, -8, "1^2 2^1 4^1 8^2"},
    {"Delta_3_12_chi-3", 3, 12, -3, "2^3 6^3"},
    {"Delta_3_12_chi-4_1", 3, 12, -4, "1^4 2^-1 4^1 6^1 12^1"},
    {"Delta_3_12_chi-4_2", 3, 12, -4, "1^1 2^1 3^1 6^-1 12^4"},
    {"Delta_3_24_chi-3_1", 3, 24, -3, "1^3 2^1 3^-1 4^4 6^1 8^-3 24^1"},
    {"Delta_3_24_chi-3_2", 3, 24, -3, "1^-3 2^4 3^1 4^1 8^3 12^1 24^-1"},
    {"Delta_3_24_chi-8_1", 3, 24, -8, "1^-2 2^4 4^4 6^1 8^-2 12^1"},
    {"Delta_3_24_chi-8_2", 3, 24, -8, "1^2 4^3 6^3 8^-1 12^-2 24^1"},
    {"Delta_3_24_chi-8_3", 3, 24, -8, "2^3 3^2 4^-2 8^1 12^3 24^-1"},
    {"Delta_3_24_chi-8_4", 3, 24, -8, "1^1 2^1 3^-1 4^1 6^2 8^1 12^2 24^-1"},
    {"Delta_3_24_chi-24_1", 3, 24, -24, "1^-3 2^9 3^-1 4^-3 6^4 12^-2 24^2"},
    {"Delta_3_24_chi-24_2", 3, 24, -24, "1^-2 2^8 6^1 8^-1 12^-1 24^1"},
    {"Delta_3_24_chi-24_3", 3, 24, -24, "1^1 2^-5 3^-1 4^11 6^4 8^-4 12^-2 24^2"},
    {"Delta_3_24_chi-24_4", 3, 24, -24, "1^2 2^-6 4^14 6^1 8^-5 12^-1 24^1"},
    {"Delta_3_24_chi-24_5", 3, 24, -24, "1^1 2^-1 3^-5 4^1 6^14 12^-6 24^2"},
    {"Delta_3_24_chi-24_6", 3, 24, -24, "1^2 2^-2 3^-4 4^4 6^11 8^-1 12^-5 24^1"},
    {"f_4_6", 4, 6, 1, "1^2 2^2 3^2 6^2"},
};

eta_combination f412()
{
    eta_combination c;
    c.terms.emplace_back(rational(1), parse_eta_quotient("1^-1 2^2 3^3 4^3 6^2 12^-1", 12));
    c.terms.emplace_back(rational(-1), parse_eta_quotient("1^3 2^2 3^-1 4^-1 6^2 12^3", 12));
    return c;
}

eta_combination combine(const rational &x, const rational &y, const rational &z)
{
    const eta_quotient f = parse_eta_quotient("1^2 2^2 3^2 6^2", 12);
    eta_combination c;
    c.terms.emplace_back(x, f);
    c.terms.emplace_back(y, f.dilate(2));
    for (const auto &[coef, q] : f412().terms) {
        c.terms.emplace_back(z * coef, q);
    }
    return c;
}

} // namespace

named_cusp_form lookup_cusp_form(const std::string &name)
{
    for (const auto &row : catalog_rows) {
        if (name == row.name) {
            eta_combination c;
            c.terms.emplace_back(rational(1), parse_eta_quotient(row.eta, row.level));
            return {row.name, row.weight, row.level, kronecker_char(row.chi, row.level), c};
        }
    }
    const kronecker_char triv(1, 12);
    if (name == "f_4_12") {
        return {name, 4, 12, triv, f412()};
    }
    if (name == "G") {
        return {name, 4, 12, triv, combine(frac(-1, 6), frac(-1, 3), frac(1, 6))};
    }
    if (name == "H") {
        return {name, 4, 12, triv, combine(frac(1, 2), rational(1), frac(1, 2))};
    }
    throw unknown_name("unknown cusp form '" + name + "'");
}

eta_combination named_cusp_form_expr(const std::string &name)
{
    return lookup_cusp_form(name).form;
}

const std::vector<std::string> &eta_cusp_catalog()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto &row : catalog_rows) {
            v.emplace_back(row.name);
        }
        return v;
    }();
    return names;
}

} // namespace trimix
