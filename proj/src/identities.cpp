#include <trimix/descriptor.hpp>
#include <trimix/errors.hpp>
#include <trimix/forms.hpp>
#include <trimix/identities.hpp>

#include <algorithm>
#include <functional>
#include <map>

namespace trimix
{

namespace
{

std::string str(const rational &x)
{
    return x.get_str();
}

rational at(const std::vector<std::uint64_t> &v, long n)
{
    if (n < 0 || n >= static_cast<long>(v.size())) {
        return 0;
    }
    return rational(static_cast<unsigned long>(v[static_cast<std::size_t>(n)]));
}

kronecker_char sym(long long top)
{
    return top == 1 ? kronecker_char::trivial() : kronecker_char::of(top);
}

// Divisor sums at 0 take the constant term of the matching Eisenstein
// series, so r_k(0) = 1 comes out of the r4/r6/r8 formulas.
rational sigma0(unsigned r, long long n)
{
    if (n == 0) {
        return -bernoulli(r + 1) / (2 * (r + 1));
    }
    return sigma(r, n);
}

rational twisted0(unsigned r, long long chi, long long psi, long long n)
{
    if (n == 0) {
        return chi == 1 ? rational(-gen_bernoulli(r + 1, sym(psi)) / (2 * (r + 1))) : rational(0);
    }
    return gen_divisor_sum(r, sym(chi), sym(psi), n);
}

// f(num/den), zero unless den | num.
template <class F> rational frac_arg(F f, long num, long den)
{
    return num % den == 0 ? rational(f(num / den)) : rational(0);
}

std::vector<long> ones(long k)
{
    return std::vector<long>(static_cast<std::size_t>(k), 1);
}

series24 psi_product(const std::vector<long> &c, long prec24)
{
    series24 acc = series24::one(prec24);
    for (long x : c) {
        acc = acc * psi_series(prec24).dilate(x).truncate(prec24);
    }
    return acc;
}

series24 theta_product(const std::vector<long> &c, long prec24)
{
    series24 acc = series24::one(prec24);
    for (long x : c) {
        acc = acc * theta_series(prec24).dilate(x).truncate(prec24);
    }
    return acc;
}

// Single-variable check n = 0..nmax.
verification_report check_range(const std::string &name, long from, long nmax,
                                const std::function<rational(long)> &lhs, const std::function<rational(long)> &rhs)
{
    report_builder b(name);
    for (long n = from; n <= nmax; ++n) {
        b.check(n, lhs(n), rhs(n));
    }
    return b.finish(nmax);
}

// sum over a + 2b = n of f(a) g(b).
rational convolve2(long n, const std::function<rational(long)> &f, const std::function<rational(long)> &g)
{
    rational s = 0;
    for (long b = 0; 2 * b <= n; ++b) {
        s += f(n - 2 * b) * g(b);
    }
    return s;
}

formula_term sg(long num, long den, unsigned r, long d)
{
    divisor_kernel k;
    k.r = r;
    return {frac(num, den), k, d};
}

formula_term tw(long num, long den, unsigned r, long long chi, long long psi, long d)
{
    divisor_kernel k;
    k.k = divisor_kernel::kind::twisted_sigma;
    k.r = r;
    k.chi = chi;
    k.psi = psi;
    return {frac(num, den), k, d};
}

formula_term cu(long num, long den, const std::string &name, long d)
{
    divisor_kernel k;
    k.k = divisor_kernel::kind::cusp;
    k.cusp = name;
    return {frac(num, den), k, d};
}

// sigma_3 terms c_d sigma_3(n/d) for d | 12, in the order 1, 2, 3, 4, 6, 12.
std::vector<formula_term> s3(std::initializer_list<std::pair<long, long>> coeffs)
{
    static const long ds[] = {1, 2, 3, 4, 6, 12};
    std::vector<formula_term> out;
    std::size_t i = 0;
    for (const auto &[num, den] : coeffs) {
        if (num != 0) {
            out.push_back(sg(num, den, 3, ds[i]));
        }
        ++i;
    }
    return out;
}

std::vector<formula_term> cat(std::vector<formula_term> a, const std::vector<formula_term> &b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

const std::string a46 = "f_4_6";
const std::string a412 = "f_4_12";
const std::string a38 = "Delta_3_8_chi-8";

std::vector<rational> poly_mul(const std::vector<rational> &a, const std::vector<rational> &b)
{
    std::vector<rational> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

std::vector<rational> poly(std::initializer_list<std::pair<long, long>> c)
{
    std::vector<rational> out;
    for (const auto &[num, den] : c) {
        out.push_back(frac(num, den));
    }
    return out;
}

series24 eval_pk(const std::vector<rational> &poly, long count)
{
    const long prec24 = 24 * count;
    const series24 p = pk_p(count);
    series24 acc(prec24);
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
        acc = acc * p + series24::monomial(0, *it, prec24);
    }
    return acc * pk_k(count).pow(4);
}

} // namespace

report_builder::report_builder(std::string name)
{
    m_report.name = std::move(name);
}

void report_builder::check(long n, const rational &lhs, const rational &rhs)
{
    if (lhs != rhs && !m_report.first_failure) {
        m_report.passed = false;
        m_report.first_failure = verification_failure{n, str(lhs), str(rhs)};
    }
}

verification_report report_builder::finish(long checked_through) const
{
    verification_report r = m_report;
    r.checked_through = checked_through;
    return r;
}

verification_report compare_series(std::string name, const series24 &lhs, const series24 &rhs, long count)
{
    report_builder b(std::move(name));
    for (long n = 0; n < count; ++n) {
        b.check(n, lhs.coeff(n), rhs.coeff(n));
    }
    return b.finish(count - 1);
}

std::vector<long> random_coefficients(std::mt19937_64 &rng, long min_len, long max_len, long cmax)
{
    std::uniform_int_distribution<long> len(min_len, max_len);
    std::uniform_int_distribution<long> val(1, cmax);
    std::vector<long> c(static_cast<std::size_t>(len(rng)));
    for (auto &x : c) {
        x = val(rng);
    }
    return c;
}

std::vector<verification_report> verify_theorem_a_catalog()
{
    std::vector<verification_report> out;
    for (const auto &name : eta_cusp_catalog()) {
        const auto f = lookup_cusp_form(name);
        verification_report r;
        r.name = "Theorem A: " + name;
        for (std::size_t i = 0; i < f.form.terms.size() && r.passed; ++i) {
            const auto &e = f.form.terms[i].second;
            const auto v = check_theorem_a(e);
            std::string why;
            if (!v.conditions_hold) {
                why = "conditions fail: " + v.reason;
            } else if (v.weight != f.weight) {
                why = "weight " + v.weight.get_str();
            } else if (!same_character_mod(v.character, f.character, f.level)) {
                why = "character " + v.character.label();
            } else if (!v.is_cusp) {
                for (const auto &[d, ord] : v.orders) {
                    if (sgn(ord) <= 0) {
                        why += (why.empty() ? "order " : ", order ") + ord.get_str() + " at d = " + std::to_string(d);
                    }
                }
            }
            if (!why.empty()) {
                r.passed = false;
                r.first_failure = verification_failure{static_cast<long>(i), e.to_string(), why};
            }
        }
        r.checked_through = static_cast<long>(f.form.terms.size()) - 1;
        out.push_back(std::move(r));
    }
    return out;
}

verification_report verify_psi_theta(long prec)
{
    const long p24 = 24 * (prec + 1);
    const series24 psi = psi_series(p24);
    return compare_series("psi^2 = theta psi(2t)", psi * psi, theta_series(p24) * psi.dilate(2).truncate(p24),
                          prec + 1);
}

verification_report verify_psi_theta(const std::vector<long> &c, long prec)
{
    const long p24 = 24 * (prec + 1);
    const series24 psi = psi_product(c, p24);
    return compare_series("Psi_C^2 = prod theta(c t) Psi_C(2t), C = " + exponent_notation(c), psi * psi,
                          theta_product(c, p24) * psi.dilate(2).truncate(p24), prec + 1);
}

verification_report verify_odd_square(const std::vector<long> &c, long nmax)
{
    long h = 0;
    for (long x : c) {
        h += x;
    }
    const auto delta = count_triangular_upto(c, nmax);
    const auto q = count_odd_squares_upto(c, 8 * nmax + h);
    return check_range(
        "delta_k(C;n) = q_k(C;8n+h), C = " + exponent_notation(c), 0, nmax, [&](long n) { return at(delta, n); },
        [&](long n) { return at(q, 8 * n + h); });
}

std::vector<verification_report> verify_odd_square_random(unsigned count, long cmax, long kmax, long nmax,
                                                          std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<verification_report> out;
    for (unsigned i = 0; i < count; ++i) {
        out.push_back(verify_odd_square(random_coefficients(rng, 1, kmax, cmax), nmax));
    }
    return out;
}

verification_report verify_relations(const std::vector<long> &c, long nmax)
{
    long h = 0;
    for (long x : c) {
        h += x;
    }
    std::vector<long> c2 = c;
    c2.insert(c2.end(), c.begin(), c.end());
    const auto dk = count_triangular_upto(c, nmax);
    const auto rk = count_squares_signed_upto(c, nmax);
    const auto qk = count_odd_squares_upto(c, 4 * nmax + h);
    const auto d2k = count_triangular_upto(c2, nmax);
    const auto q2k = count_odd_squares_upto(c2, 8 * nmax + 2 * h);
    report_builder b("q_2k(C^2;8n+2h) = delta_2k(C^2;n) = sum r_k(C;a) delta_k(C;b) = sum r_k(C;a) q_k(C;8b+h), C = "
                     + exponent_notation(c));
    for (long n = 0; n <= nmax; ++n) {
        const rational d = at(d2k, n);
        b.check(n, at(q2k, 8 * n + 2 * h), d);
        b.check(n, d, convolve2(n, [&](long a) { return at(rk, a); }, [&](long x) { return at(dk, x); }));
        b.check(n, d, convolve2(n, [&](long a) { return at(rk, a); }, [&](long x) { return at(qk, 8 * x + h); }));
    }
    return b.finish(nmax);
}

verification_report verify_relations(long kmax, long nmax)
{
    for (long k = 1; k <= kmax; ++k) {
        auto r = verify_relations(ones(k), nmax);
        if (!r.passed || k == kmax) {
            r.name = "q_2k(8n+2k) = delta_2k(n) = sum r_k(a) delta_k(b) = sum r_k(a) q_k(8b+k), k <= "
                     + std::to_string(kmax) + (r.passed ? "" : " (fails at k = " + std::to_string(k) + ")");
            return r;
        }
    }
    return {"empty", 0, true, std::nullopt, ""};
}

std::vector<verification_report> verify_relations1(long nmax)
{
    const long big = 8 * nmax + 3;
    const auto r2 = count_squares_signed_upto(ones(2), big);
    const auto r3 = count_squares_signed_upto(ones(3), big);
    const auto r4 = count_squares_signed_upto(ones(4), nmax);
    const auto r6 = count_squares_signed_upto(ones(6), nmax);
    const auto r8 = count_squares_signed_upto(ones(8), nmax);
    std::map<long, std::vector<std::uint64_t>> delta;
    for (long k : {2, 3, 4, 6, 8, 12, 16}) {
        delta[k] = count_triangular_upto(ones(k), nmax);
    }
    auto d = [&](long k) { return [&, k](long n) { return at(delta[k], n); }; };
    auto ar = [](const std::vector<std::uint64_t> &v) { return [&v](long n) { return at(v, n); }; };
    const auto s2 = [](long n) { return sigma0(1, 2 * n + 1); };
    const auto s6 = [](long n) { return twisted0(2, 1, -4, 4 * n + 3); };
    const auto s8 = [](long n) { return rational(sharp_sigma3(n + 1)); };

    std::vector<verification_report> out;
    out.push_back(check_range("delta_2(n) = r_2(8n+2)/4", 0, nmax, d(2), [&](long n) { return rational(at(r2, 8 * n + 2) / 4); }));
    out.push_back(check_range("delta_3(n) = r_3(8n+3)/8", 0, nmax, d(3), [&](long n) { return rational(at(r3, 8 * n + 3) / 8); }));
    out.push_back(check_range("delta_4(n) = sigma(2n+1)", 0, nmax, d(4), s2));
    out.push_back(check_range("delta_6(n) = -1/8 sigma_{2;1,chi-4}(4n+3)", 0, nmax, d(6),
                              [&](long n) { return rational(-s6(n) / 8); }));
    out.push_back(check_range("delta_8(n) = sigma_3#(n+1)", 0, nmax, d(8), s8));

    out.push_back(check_range("delta_4(n) = 1/4 sum r_2(a) r_2(8b+2)", 0, nmax, d(4), [&](long n) {
        return rational(convolve2(n, ar(r2), [&](long b) { return at(r2, 8 * b + 2); }) / 4);
    }));
    out.push_back(check_range("delta_6(n) = 1/8 sum r_3(a) r_3(8b+3)", 0, nmax, d(6), [&](long n) {
        return rational(convolve2(n, ar(r3), [&](long b) { return at(r3, 8 * b + 3); }) / 8);
    }));
    out.push_back(check_range("delta_8(n) = sum r_4(a) sigma(2b+1)", 0, nmax, d(8),
                              [&](long n) { return convolve2(n, ar(r4), s2); }));
    out.push_back(check_range("delta_12(n) = -1/8 sum r_6(a) sigma_{2;1,chi-4}(4b+3)", 0, nmax, d(12),
                              [&](long n) { return rational(-convolve2(n, ar(r6), s6) / 8); }));
    out.push_back(check_range("delta_16(n) = sum r_8(a) sigma_3#(b+1)", 0, nmax, d(16),
                              [&](long n) { return convolve2(n, ar(r8), s8); }));

    const auto r4f = [](long n) { return rational(8 * sigma0(1, n) - 32 * frac_arg([](long m) { return sigma0(1, m); }, n, 4)); };
    const auto r6f = [](long n) { return rational(-4 * twisted0(2, 1, -4, n) + 16 * twisted0(2, -4, 1, n)); };
    const auto r8f = [](long n) {
        auto s = [](long m) { return sigma0(3, m); };
        return rational(16 * s(n) - 32 * frac_arg(s, n, 2) + 256 * frac_arg(s, n, 4));
    };
    out.push_back(check_range("r_4(n) = 8 sigma(n) - 32 sigma(n/4)", 1, std::max(nmax, 100L),
                              [&](long n) { return rational(static_cast<unsigned long>(count_squares_signed(ones(4), n))); }, r4f));
    out.push_back(check_range("r_6(n) = -4 sigma_{2;1,chi-4}(n) + 16 sigma_{2;chi-4,1}(n)", 1, nmax, ar(r6), r6f));
    out.push_back(check_range("r_8(n) = 16 sigma_3(n) - 32 sigma_3(n/2) + 256 sigma_3(n/4)", 1, nmax, ar(r8), r8f));

    out.push_back(check_range("delta_8(n) = 8 sum sigma(a) sigma(2b+1) - 32 sum sigma(a/4) sigma(2b+1)", 0, nmax, d(8),
                              [&](long n) { return convolve2(n, r4f, s2); }));
    out.push_back(check_range(
        "delta_12(n) = 1/2 sum sigma_{2;1,chi-4}(a) sigma_{2;1,chi-4}(4b+3) - 2 sum sigma_{2;chi-4,1}(a) sigma_{2;1,chi-4}(4b+3)",
        0, nmax, d(12), [&](long n) {
            return rational(convolve2(n, [](long a) { return twisted0(2, 1, -4, a); }, s6) / 2
                            - 2 * convolve2(n, [](long a) { return twisted0(2, -4, 1, a); }, s6));
        }));
    out.push_back(check_range(
        "delta_16(n) = 16 sum sigma_3(a) sigma_3#(b+1) - 32 sum sigma_3(a/2) sigma_3#(b+1) + 256 sum sigma_3(a/4) sigma_3#(b+1)",
        0, nmax, d(16), [&](long n) {
            auto s = [](long m) { return sigma0(3, m); };
            return rational(16 * convolve2(n, s, s8) - 32 * convolve2(n, [&](long a) { return frac_arg(s, a, 2); }, s8)
                            + 256 * convolve2(n, [&](long a) { return frac_arg(s, a, 4); }, s8));
        }));
    return out;
}

verification_report verify_closed_form(const closed_form &f, long nmax)
{
    const auto d = parse_descriptor(f.form);
    const auto counts = count_mixed_upto(d.form, std::max(nmax - f.shift, 0L));
    report_builder b(f.name);
    for (long n = std::max(1L, f.shift); n <= nmax; ++n) {
        b.check(n, at(counts, n - f.shift), evaluate_terms(f.terms, n));
    }
    return b.finish(nmax);
}

const std::vector<closed_form> &formulas_21()
{
    static const std::vector<closed_form> f = [] {
        std::vector<closed_form> v;
        auto add = [&](const std::string &name, const std::string &form, long shift, std::vector<formula_term> t) {
            v.push_back({name, form, shift, std::move(t)});
        };
        add("N_ls(2^1;1^3 3^3;n)", "mixed:2^1 ; 1^3 3^3 ;", 0,
            cat(s3({{2, 1}, {0, 1}, {-18, 1}, {-32, 1}, {0, 1}, {288, 1}}), {cu(4, 1, a412, 1)}));
        add("N_lst(2^1;1^2 3^2;2^1 6^1;n-1)", "mixed:2^1 ; 1^2 3^2 ; 2^1 6^1", 1,
            cat(s3({{1, 2}, {-1, 2}, {-9, 2}, {0, 1}, {9, 2}}), {cu(1, 2, a412, 1)}));
        add("N_lst(2^1;1^1 3^1;2^2 6^2;n-2)", "mixed:2^1 ; 1^1 3^1 ; 2^2 6^2", 2,
            cat(s3({{1, 8}, {-1, 8}, {-9, 8}, {0, 1}, {9, 8}}), {cu(-1, 8, a412, 1)}));
        add("N_lst(4^1;1^2;1^1 3^1 6^2;n-2)", "mixed:4^1 ; 1^2 ; 1^1 3^1 6^2", 2,
            cat(s3({{1, 8}, {-1, 8}, {-9, 8}, {0, 1}, {9, 8}}),
                {cu(-1, 2, a46, 1), cu(-1, 1, a46, 2), cu(3, 8, a412, 1)}));
        add("N_lst(4^1;3^2;1^1 2^2 3^1;n-1)", "mixed:4^1 ; 3^2 ; 1^1 2^2 3^1", 1,
            cat(s3({{1, 8}, {-1, 8}, {-9, 8}, {0, 1}, {9, 8}}),
                {cu(1, 2, a46, 1), cu(1, 1, a46, 2), cu(3, 8, a412, 1)}));
        add("N_ls(1^1 2^1;3^4;n)", "mixed:1^1 2^1 ; 3^4 ;", 0,
            cat(s3({{4, 5}, {-6, 5}, {156, 5}, {32, 5}, {-234, 5}, {1248, 5}}),
                {cu(16, 5, a46, 1), cu(32, 5, a46, 2), cu(2, 1, a412, 1)}));
        add("N_ls(1^1 2^1;1^2 3^2;n)", "mixed:1^1 2^1 ; 1^2 3^2 ;", 0,
            cat(s3({{4, 1}, {-2, 1}, {-36, 1}, {-32, 1}, {18, 1}, {288, 1}}), {cu(6, 1, a412, 1)}));
        add("N_ls(1^1 2^1;1^4;n)", "mixed:1^1 2^1 ; 1^4 ;", 0,
            cat(s3({{52, 5}, {-78, 5}, {108, 5}, {416, 5}, {-162, 5}, {864, 5}}),
                {cu(48, 5, a46, 1), cu(96, 5, a46, 2), cu(-6, 1, a412, 1)}));
        add("N_lt(1^1 2^1;1^2 3^2;n-1)", "lt:1^1 2^1 ; 1^2 3^2", 1, s3({{1, 1}, {-1, 1}, {-9, 1}, {0, 1}, {9, 1}}));
        add("N_lt(1^1 2^1;2^2 6^2;n-2)", "lt:1^1 2^1 ; 2^2 6^2", 2,
            cat(s3({{3, 8}, {-19, 8}, {-27, 8}, {2, 1}, {171, 8}, {-18, 1}}), {cu(-3, 8, a412, 1)}));
        add("N_ls(2^1 4^1;1^2 3^2;n)", "mixed:2^1 4^1 ; 1^2 3^2 ;", 0,
            cat(s3({{1, 1}, {1, 1}, {-9, 1}, {-32, 1}, {-9, 1}, {288, 1}}), {cu(3, 1, a412, 1)}));
        add("N_lt(2^1 4^1;1^2 3^2;n-1)", "lt:2^1 4^1 ; 1^2 3^2", 1,
            cat(s3({{1, 4}, {-1, 4}, {-9, 4}, {0, 1}, {9, 4}}), {cu(3, 4, a412, 1)}));
        add("N_ls(2^3;1^1 3^1;n)", "mixed:2^3 ; 1^1 3^1 ;", 0, s3({{2, 1}, {0, 1}, {-18, 1}, {-32, 1}, {0, 1}, {288, 1}}));
        add("N_lt(2^3;2^1 6^1;n-1)", "lt:2^3 ; 2^1 6^1", 1, s3({{1, 1}, {-9, 1}, {-9, 1}, {8, 1}, {81, 1}, {-72, 1}}));
        add("N_ls(4^3;1^1 3^1;n)", "mixed:4^3 ; 1^1 3^1 ;", 0,
            cat(s3({{1, 5}, {-9, 5}, {9, 5}, {128, 5}, {-81, 5}, {1152, 5}}), {cu(9, 5, a46, 1), cu(18, 5, a46, 2)}));
        add("N_ls(1^2 2^1;1^1 3^1;n)", "mixed:1^2 2^1 ; 1^1 3^1 ;", 0,
            cat(s3({{8, 1}, {-6, 1}, {-72, 1}, {-32, 1}, {54, 1}, {288, 1}}), {cu(6, 1, a412, 1)}));
        add("N_lt(1^2 2^1;2^1 6^1;n-1)", "lt:1^2 2^1 ; 2^1 6^1", 1,
            cat(s3({{5, 2}, {-21, 2}, {-45, 2}, {8, 1}, {189, 2}, {-72, 1}}), {cu(-3, 2, a412, 1)}));
        add("N_ls(1^1 2^2;1^1 3^1;n)", "mixed:1^1 2^2 ; 1^1 3^1 ;", 0,
            cat(s3({{16, 5}, {-24, 5}, {144, 5}, {128, 5}, {-216, 5}, {1152, 5}}),
                {cu(24, 5, a46, 1), cu(48, 5, a46, 2)}));
        add("N_ls(2^1 4^2;1^1 3^1;n)", "mixed:2^1 4^2 ; 1^1 3^1 ;", 0,
            cat(s3({{1, 2}, {3, 2}, {-9, 2}, {-32, 1}, {-27, 2}, {288, 1}}), {cu(3, 2, a412, 1)}));
        add("N_ls(1^1 2^1 4^1;1^1 3^1;n)", "mixed:1^1 2^1 4^1 ; 1^1 3^1 ;", 0,
            cat(s3({{2, 1}, {0, 1}, {-18, 1}, {-32, 1}, {0, 1}, {288, 1}}), {cu(6, 1, a412, 1)}));
        add("N_lt(1^1 2^1 4^1;2^1 6^1;n-1)", "lt:1^1 2^1 4^1 ; 2^1 6^1", 1,
            cat(s3({{1, 4}, {15, 4}, {-9, 4}, {-4, 1}, {-135, 4}, {36, 1}}), {cu(3, 4, a412, 1)}));
        return v;
    }();
    return f;
}

std::vector<verification_report> verify_21_formulas(long nmax)
{
    std::vector<verification_report> out;
    for (const auto &f : formulas_21()) {
        out.push_back(verify_closed_form(f, nmax));
    }
    return out;
}

const std::vector<sample_formula> &sample_formulas()
{
    static const std::vector<sample_formula> f = [] {
        std::vector<sample_formula> v;
        auto add = [&](const std::string &name, const std::string &form, long shift, std::vector<formula_term> t) {
            v.push_back({{name, form, shift, std::move(t)}, std::nullopt, ""});
        };
        auto fix = [&](long shift, std::vector<formula_term> t, const std::string &why) {
            auto &last = v.back();
            last.corrected = closed_form{last.printed.name + " [corrected]", last.printed.form, shift, std::move(t)};
            last.erratum = why;
        };
        auto neg = [](std::vector<formula_term> t) {
            for (auto &x : t) {
                x.coeff = -x.coeff;
            }
            return t;
        };
        const std::string sign = "printed with every sign flipped; the q^0 count 1 forces the opposite sign";

        // Four variables, weight 2.
        std::vector<formula_term> t;
        t = {sg(-1, 1, 1, 1), sg(1, 1, 1, 2), sg(3, 1, 1, 3), sg(-3, 1, 1, 6)};
        add("delta_4(1^2 3^2;n-1)", "tri:1^2 3^2", 1, t);
        fix(1, neg(t), sign);
        t = {sg(-1, 1, 1, 1), sg(3, 1, 1, 2), sg(-2, 1, 1, 4)};
        add("delta_4(2^4;n-1)", "tri:2^4", 1, t);
        fix(1, neg(t), sign);
        add("delta_4(1^2 2^1 4^1;n-1)", "tri:1^2 2^1 4^1", 1, {tw(1, 1, 1, 8, 1, 1)});
        add("N_st(1^1 2^1;4^2;n-1)", "st:1^1 2^1 ; 4^2", 1, {tw(1, 1, 1, 8, 1, 1)});
        add("N_st(1^1;2^2 4^1;n-1)", "st:1^1 ; 2^2 4^1", 1, {tw(1, 1, 1, 8, 1, 1)});
        t = {sg(-1, 1, 1, 1), sg(-1, 1, 1, 2), sg(10, 1, 1, 4), sg(-8, 1, 1, 8)};
        add("N_st(1^2;4^2;n-1)", "st:1^2 ; 4^2", 1, t);
        fix(1, neg(t), sign);
        t = {sg(-1, 1, 1, 1), sg(3, 1, 1, 2), sg(-2, 1, 1, 4)};
        add("N_st(2^2;4^2;n-1)", "st:2^2 ; 4^2", 1, t);
        fix(1, neg(t), sign);
        add("N_st(2^1;2^2 4^1;n-1)", "st:2^1 ; 2^2 4^1", 1, t);
        fix(1, neg(t), sign);
        t = {sg(-1, 1, 1, 1), sg(-3, 1, 1, 2), sg(3, 1, 1, 3), sg(4, 1, 1, 4), sg(9, 1, 1, 6), sg(-12, 1, 1, 12)};
        add("N_lt(1^1;2^1 6^1;n-1)", "lt:1^1 ; 2^1 6^1", 1, t);
        fix(1, neg(t), sign);
        t = {sg(-1, 1, 1, 1), sg(3, 1, 1, 2), sg(-3, 1, 1, 3), sg(-2, 1, 1, 4), sg(9, 1, 1, 6), sg(-6, 1, 1, 12)};
        add("N_lt(2^1;2^1 6^1;n-1)", "lt:2^1 ; 2^1 6^1", 1, t);
        fix(1, neg(t), sign);

        // Six variables, weight 3.
        add("delta_6(1^4 2^2;n-1)", "tri:1^4 2^2", 1, {tw(1, 1, 2, -4, 1, 1)});
        add("delta_6(1^5 3^1;n-1)", "tri:1^5 3^1", 1,
            {tw(-1, 8, 2, 1, -3, 1), tw(1, 8, 2, 1, -3, 2), tw(9, 8, 2, -3, 1, 1), tw(9, 8, 2, -3, 1, 2)});
        t = {tw(-1, 8, 2, 1, -3, 1), tw(1, 8, 2, 1, -3, 2), tw(1, 8, 2, -3, 1, 1), tw(1, 8, 2, -3, 1, 2)};
        add("delta_6(1^1 3^5;n-1)", "tri:1^1 3^5", 1, t);
        fix(2, t, "h = 16, so the left side is delta_6(1^1 3^5; n-2)");
        add("delta_6(2^4 4^2;n-2)", "tri:2^4 4^2", 2, {tw(1, 1, 2, -4, 1, 2)});
        add("delta_6(4^6;n-3)", "tri:4^6", 3,
            {tw(-1, 16, 2, 1, -4, 1), tw(1, 16, 2, 1, -4, 2), tw(1, 16, 2, -4, 1, 1), tw(-1, 4, 2, -4, 1, 2)});
        add("delta_6(1^2 2^1 4^3;n-2)", "tri:1^2 2^1 4^3", 2, {tw(1, 6, 2, -8, 1, 1), cu(-1, 6, a38, 1)});
        add("N_lt(1^1;1^2 3^2;n-1)", "lt:1^1 ; 1^2 3^2", 1,
            {tw(-1, 2, 2, 1, -3, 1), tw(1, 2, 2, 1, -3, 2), tw(3, 2, 2, -3, 1, 1), tw(3, 2, 2, -3, 1, 2)});
        add("N_lt(2^1;1^2 3^2;n-1)", "lt:2^1 ; 1^2 3^2", 1,
            {tw(1, 4, 2, 1, -3, 1), tw(-1, 4, 2, 1, -3, 2), tw(3, 4, 2, -3, 1, 1), tw(3, 4, 2, -3, 1, 2)});
        add("N_st(1^2;2^4;n-1)", "st:1^2 ; 2^4", 1, {tw(1, 1, 2, -4, 1, 1)});
        add("N_st(1^4;4^2;n-1)", "st:1^4 ; 4^2", 1, {tw(-1, 1, 2, 1, -4, 1), tw(1, 1, 2, 1, -4, 2), tw(2, 1, 2, -4, 1, 1)});
        add("N_st(2^4;4^2;n-1)", "st:2^4 ; 4^2", 1,
            {tw(1, 1, 2, 1, -4, 1), tw(1, 1, 2, 1, -4, 2), tw(1, 1, 2, -4, 1, 1), tw(-4, 1, 2, -4, 1, 2)});
        fix(1, {tw(1, 1, 2, -4, 1, 1), tw(-4, 1, 2, -4, 1, 2)},
            "operator between the first two terms is missing and read as '+'; neither sign fits, the two "
            "sigma_{2;1,chi-4} terms have coefficient 0");
        add("N_st(1^2 2^2;4^2;n-1)", "st:1^2 2^2 ; 4^2", 1, {tw(1, 1, 2, -4, 1, 1)});
        add("N_st(1^2;4^4;n-2)", "st:1^2 ; 4^4", 2, {tw(-1, 4, 2, 1, -4, 1), tw(1, 4, 2, 1, -4, 2), tw(1, 4, 2, -4, 1, 1)});
        add("N_st(2^2;4^4;n-2)", "st:2^2 ; 4^4", 2, {tw(1, 1, 2, -4, 1, 2)});
        add("N_st(2^2;2^4;n-1)", "st:2^2 ; 2^4", 1, {tw(1, 1, 2, -4, 1, 1), tw(-4, 1, 2, -4, 1, 2)});
        add("N_st(1^1 2^1;1^2 2^1 4^1;n-1)", "st:1^1 2^1 ; 1^2 2^1 4^1", 1, {tw(1, 1, 2, -4, 1, 1)});
        const std::vector<formula_term> e8a = {tw(2, 3, 2, -8, 1, 1), cu(1, 3, a38, 1)};
        const std::vector<formula_term> e8b = {tw(4, 3, 2, -8, 1, 1), cu(-1, 3, a38, 1)};
        add("N_st(1^1 2^3;4^2;n-1)", "st:1^1 2^3 ; 4^2", 1, e8a);
        add("N_st(1^3 2^1;4^2;n-1)", "st:1^3 2^1 ; 4^2", 1, e8b);
        add("N_st(1^2;1^2 2^1 4^1;n-1)", "st:1^2 ; 1^2 2^1 4^1", 1, e8b);
        add("N_st(2^2;1^2 2^1 4^1;n-1)", "st:2^2 ; 1^2 2^1 4^1", 1, e8a);
        add("N_st(1^1 2^1;2^4;n-1)", "st:1^1 2^1 ; 2^4", 1, e8a);
        add("N_st(1^1 2^1;4^4;n-2)", "st:1^1 2^1 ; 4^4", 2, {tw(1, 6, 2, -8, 1, 1), cu(-1, 6, a38, 1)});
        add("N_st(1^2 2^1;2^2 4^1;n-1)", "st:1^2 2^1 ; 2^2 4^1", 1, {tw(1, 1, 2, -4, 1, 1)});
        add("N_st(2^3;2^2 4^1;n-1)", "st:2^3 ; 2^2 4^1", 1, {tw(1, 1, 2, -4, 1, 1), tw(-4, 1, 2, -4, 1, 2)});
        add("N_st(1^3;2^2 4^1;n-1)", "st:1^3 ; 2^2 4^1", 1, e8b);
        add("N_st(1^1 2^2;2^2 4^1;n-1)", "st:1^1 2^2 ; 2^2 4^1", 1, e8a);
        add("N_lst(1^1;1^1 3^1;2^1 6^1;n-1)", "mixed:1^1 ; 1^1 3^1 ; 2^1 6^1", 1,
            {tw(-1, 2, 2, 1, -3, 1), tw(1, 2, 2, 1, -3, 2), tw(3, 2, 2, -3, 1, 1), tw(3, 2, 2, -3, 1, 2)});
        add("N_lst(1^1;1^2;2^1 6^1;n-1)", "mixed:1^1 ; 1^2 ; 2^1 6^1", 1,
            {tw(16, 7, 2, -4, 1, 1), tw(72, 7, 2, -4, 1, 3), cu(-9, 7, "Delta_3_12_chi-4_1", 1),
             cu(-30, 7, "Delta_3_12_chi-4_2", 1)});
        add("N_lst(1^1;1^2;4^2;n-1)", "mixed:1^1 ; 1^2 ; 4^2", 1,
            {tw(1, 4, 2, 1, -3, 1), tw(-1, 2, 2, 1, -3, 2), tw(-7, 4, 2, 1, -3, 4), tw(2, 1, 2, 1, -3, 8),
             tw(9, 4, 2, -3, 1, 1), tw(9, 2, 2, -3, 1, 2), tw(-117, 4, 2, -3, 1, 4), tw(90, 1, 2, -3, 1, 8),
             cu(-3, 1, "Delta_3_12_chi-3", 1), cu(9, 2, "Delta_3_12_chi-3", 2), cu(3, 2, "Delta_3_24_chi-3_1", 1)});
        add("N_lst(8^1;1^2;2^1 6^1;n-1)", "mixed:8^1 ; 1^2 ; 2^1 6^1", 1,
            {tw(5, 14, 2, -4, 1, 1), tw(-9, 14, 2, -4, 1, 3), cu(9, 14, "Delta_3_12_chi-4_1", 1),
             cu(-6, 7, "Delta_3_12_chi-4_2", 1), cu(6, 1, "Delta_3_12_chi-4_1", 2), cu(18, 1, "Delta_3_12_chi-4_2", 2)});
        add("N_lst(1^1;1^1 6^1;4^2;n-1)", "mixed:1^1 ; 1^1 6^1 ; 4^2", 1,
            {tw(32, 39, 2, -8, 1, 1), tw(24, 13, 2, -8, 1, 3), cu(-47, 39, a38, 1), cu(-6, 13, a38, 3),
             cu(14, 13, "Delta_3_24_chi-8_1", 1), cu(21, 26, "Delta_3_24_chi-8_2", 1),
             cu(33, 26, "Delta_3_24_chi-8_3", 1), cu(-23, 13, "Delta_3_24_chi-8_4", 1)});
        add("N_lst(1^1;1^1 2^1;4^2;n-1)", "mixed:1^1 ; 1^1 2^1 ; 4^2", 1,
            {tw(36, 23, 2, -24, 1, 1), tw(-4, 23, 2, -3, 8, 1), cu(-51, 92, "Delta_3_24_chi-24_1", 1),
             cu(3, 46, "Delta_3_24_chi-24_2", 1), cu(51, 23, "Delta_3_24_chi-24_3", 1),
             cu(15, 23, "Delta_3_24_chi-24_4", 1), cu(-153, 92, "Delta_3_24_chi-24_5", 1),
             cu(-51, 46, "Delta_3_24_chi-24_6", 1)});
        {
            auto c = v.back().printed.terms;
            c[1] = tw(-4, 23, 2, 8, -3, 1);
            fix(1, c, "second term is sigma_{2;chi8,chi-3}(n); the printed characters are swapped");
        }
        return v;
    }();
    return f;
}

std::vector<erratum_check> verify_sample_formulas(long nmax)
{
    std::vector<erratum_check> out;
    for (const auto &s : sample_formulas()) {
        erratum_check c;
        c.printed = verify_closed_form(s.printed, nmax);
        if (s.corrected) {
            c.corrected = verify_closed_form(*s.corrected, nmax);
        }
        c.erratum = s.erratum;
        out.push_back(std::move(c));
    }
    return out;
}

series24 pk_p(long count)
{
    const long p24 = 24 * count;
    const series24 t1 = theta_series(p24);
    const series24 t3 = t1.dilate(3).truncate(p24);
    const series24 a = t1 * t1;
    const series24 b = t3 * t3;
    return scale((a - b) * b.invert(), frac(1, 2));
}

series24 pk_k(long count)
{
    const long p24 = 24 * count;
    const series24 t1 = theta_series(p24);
    const series24 t3 = t1.dilate(3).truncate(p24);
    return t3.pow(3) * t1.invert();
}

const std::vector<pk_identity> &pk_identities()
{
    static const std::vector<pk_identity> ids = {
        {"E4_at_1", poly({{1, 1}, {124, 1}, {964, 1}, {2788, 1}, {3910, 1}, {2788, 1}, {964, 1}, {124, 1}, {1, 1}}), {}, ""},
        {"E4_at_2", poly({{1, 1}, {4, 1}, {64, 1}, {178, 1}, {235, 1}, {178, 1}, {64, 1}, {4, 1}, {1, 1}}), {}, ""},
        {"E4_at_3", poly({{1, 1}, {4, 1}, {4, 1}, {28, 1}, {70, 1}, {28, 1}, {4, 1}, {4, 1}, {1, 1}}), {}, ""},
        {"E4_at_4", poly({{1, 1}, {4, 1}, {4, 1}, {-2, 1}, {10, 1}, {28, 1}, {31, 4}, {-29, 4}, {1, 16}}), {}, ""},
        {"E4_at_6", poly({{1, 1}, {4, 1}, {4, 1}, {-2, 1}, {-5, 1}, {-2, 1}, {4, 1}, {4, 1}, {1, 1}}), {}, ""},
        {"E4_at_12", poly({{1, 1}, {4, 1}, {4, 1}, {-2, 1}, {-5, 1}, {-2, 1}, {1, 4}, {1, 4}, {1, 16}}), {}, ""},
        {"f_4_6",
         poly({{-1, 1}, {-4, 1}, {-119, 32}, {115, 32}, {-913, 128}, {-1695, 64}, {-2049, 256}, {1801, 256}, {-1, 16}}),
         poly({{0, 1}, {1, 2}, {5, 4}, {-1, 2}, {-5, 2}, {-1, 2}, {5, 4}, {1, 2}}),
         "printed polynomial has constant term -1 but f_4_6 is a cusp form; the error e satisfies e(f_4_6) + 2 e(f_4_6(2t)) = 0, "
         "so it cancels in G and H"},
        {"f_4_6_at_2",
         poly({{1, 2}, {9, 4}, {175, 64}, {-83, 64}, {673, 256}, {1583, 128}, {2081, 512}, {-1737, 512}, {1, 32}}),
         poly({{0, 1}, {0, 1}, {1, 4}, {3, 4}, {5, 16}, {-5, 8}, {-9, 16}, {-1, 8}}),
         "printed polynomial has constant term 1/2; error is -1/2 times the f_4_6 error"},
        {"f_4_12", poly({{0, 1}, {1, 2}, {7, 4}, {7, 4}, {0, 1}, {-7, 4}, {-7, 4}, {-1, 2}}), {}, ""},
        {"G", poly({{0, 1}, {0, 1}, {0, 1}, {2, 16}, {5, 16}, {0, 1}, {-5, 16}, {-2, 16}}), {}, ""},
        {"H", poly({{0, 1}, {8, 16}, {28, 16}, {22, 16}, {-15, 16}, {-28, 16}, {-13, 16}, {-2, 16}}), {}, ""},
    };
    return ids;
}

series24 pk_target(const std::string &name, long count)
{
    const long p24 = 24 * count;
    if (name.rfind("E4_at_", 0) == 0) {
        const long d = std::stol(name.substr(6));
        return expand(eisenstein_spec{classical_eisenstein{4}, d}, p24);
    }
    if (name == "f_4_6_at_2") {
        return expand(named_cusp_form_expr("f_4_6").dilate(2), p24);
    }
    return expand(named_cusp_form_expr(name), p24);
}

std::vector<erratum_check> verify_pk(long prec)
{
    const long count = prec + 1;
    std::vector<erratum_check> out;
    for (const auto &id : pk_identities()) {
        erratum_check c;
        const series24 target = pk_target(id.name, count);
        c.printed = compare_series(id.name + " = poly(p) k^4", target, eval_pk(id.poly, count), count);
        if (!id.corrected.empty()) {
            c.corrected = compare_series(id.name + " = poly(p) k^4 [corrected]", target, eval_pk(id.corrected, count), count);
            c.erratum = id.erratum;
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<verification_report> verify_gh_factored(long prec)
{
    const long count = prec + 1;
    // p^3 (1-p)(1+p)(1+2p)(2+p) / 16 and p (1-p)(1+p)(1+2p)(2+p)^3 / 16
    const auto lin = [](long a, long b) { return poly({{a, 1}, {b, 1}}); };
    auto base = poly_mul(poly_mul(lin(1, -1), lin(1, 1)), poly_mul(lin(1, 2), lin(2, 1)));
    auto g = poly_mul(poly({{0, 1}, {0, 1}, {0, 1}, {1, 16}}), base);
    auto h = poly_mul(poly_mul(poly({{0, 1}, {1, 16}}), base), poly_mul(lin(2, 1), lin(2, 1)));
    std::vector<verification_report> out;
    for (const auto &[name, factored] : {std::pair{std::string("G"), g}, std::pair{std::string("H"), h}}) {
        const auto &expanded = *std::find_if(pk_identities().begin(), pk_identities().end(),
                                             [&](const pk_identity &x) { return x.name == name; });
        report_builder b(name + " factored polynomial = expanded polynomial");
        for (std::size_t i = 0; i < std::max(factored.size(), expanded.poly.size()); ++i) {
            b.check(static_cast<long>(i), i < factored.size() ? factored[i] : rational(0),
                    i < expanded.poly.size() ? expanded.poly[i] : rational(0));
        }
        out.push_back(b.finish(static_cast<long>(factored.size()) - 1));
        out.push_back(compare_series(name + " = factored(p) k^4", pk_target(name, count), eval_pk(factored, count), count));
    }
    return out;
}

std::vector<verification_report> verify_ellipsoid(const std::vector<long> &c, long r2max)
{
    std::vector<verification_report> out;
    for (long first : {0L, 1L}) {
        report_builder b("ellipsoid lattice count = 2^k sum_{n=" + std::to_string(first) + "..} delta_k(C;n), C = "
                         + exponent_notation(c));
        for (long i = 0; i <= 4 * r2max; ++i) {
            const rational r2 = frac(i, 4);
            b.check(i, rational(static_cast<unsigned long>(ellipsoid_lattice_count(c, r2))),
                    rational(static_cast<unsigned long>(ellipsoid_shell_sum(c, r2, first))));
        }
        auto r = b.finish(4 * r2max);
        r.note = "index i is R^2 = i/4";
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace trimix
