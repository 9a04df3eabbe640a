// Acceptance run: one PASS/FAIL line per criterion. Every comparison is exact.

#include "oracle.hpp"

#include <trimix/descriptor.hpp>
#include <trimix/identities.hpp>
#include <trimix/solve.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

using namespace trimix;

namespace
{

struct outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

template <class F>
void criterion(int id, F &&f)
{
    const auto t0 = std::chrono::steady_clock::now();
    outcome o;
    try {
        o = f();
    } catch (const std::exception &e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !o.pass;
    std::ostringstream t;
    t.precision(3);
    t << std::fixed << secs;
    std::cout << "AC" << id << (id < 10 ? "  " : " ") << (o.pass ? "PASS" : "FAIL") << "  " << o.detail << " ["
              << t.str() << " s]" << std::endl;
}

std::string first_failure(const verification_report &r)
{
    if (r.passed) {
        return "";
    }
    return r.name + " at " + std::to_string(r.first_failure->index) + ": " + r.first_failure->lhs
           + " != " + r.first_failure->rhs;
}

outcome all_of(const std::vector<verification_report> &v, const std::string &what)
{
    for (const auto &r : v) {
        if (!r.passed) {
            return {false, what + "; first failure " + first_failure(r)};
        }
    }
    return {true, what};
}

outcome strict_errata(const std::vector<erratum_check> &v, const std::string &what)
{
    long printed = 0, fixed = 0, broken = 0;
    std::string names;
    for (const auto &c : v) {
        if (c.printed.passed) {
            ++printed;
        } else if (c.corrected && c.corrected->passed) {
            ++fixed;
            names += (names.empty() ? "" : ", ") + c.printed.name;
        } else {
            ++broken;
        }
    }
    std::ostringstream d;
    d << what << ": " << printed << "/" << v.size() << " hold as printed";
    if (fixed > 0) {
        d << "; " << fixed << " hold only after a catalogued correction (" << names << ")";
    }
    if (broken > 0) {
        d << "; " << broken << " fail with no correction";
    }
    return {printed == static_cast<long>(v.size()), d.str()};
}

series24 random_series(std::mt19937_64 &rng, long prec24)
{
    std::uniform_int_distribution<long> off(-30, 30), num(-20, 20), den(1, 6);
    const long o = off(rng);
    std::vector<rational> c(static_cast<std::size_t>(prec24 - o));
    for (auto &x : c) {
        x = frac(num(rng), den(rng));
    }
    return series24(o, std::move(c), prec24);
}

mixed_form random_form(std::mt19937_64 &rng, int fam)
{
    mixed_form f;
    const long extra = static_cast<long>(rng() % 2);
    switch (fam) {
    case 0:
        f.tri = oracle::random_list(rng, 2 + 2 * extra, 6);
        break;
    case 1:
        f.squares = oracle::random_list(rng, 1 + extra, 6);
        f.tri = oracle::random_list(rng, 1 + extra, 6);
        break;
    case 2:
        f.hex = oracle::random_list(rng, 1, 8);
        f.tri = oracle::random_list(rng, 2, 6);
        break;
    default:
        f.hex = oracle::random_list(rng, 1, 4);
        f.squares = oracle::random_list(rng, 1, 3);
        f.tri = oracle::random_list(rng, 1 + 2 * extra, 4);
        break;
    }
    return f;
}

std::string fixture_dir()
{
    if (const char *env = std::getenv("TRIMIX_FIXTURES"); env && *env) {
        return env;
    }
    return TRIMIX_FIXTURE_DIR;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main()
{
    const unsigned threads = std::max(1u, std::thread::hardware_concurrency());

    criterion(1, [] {
        const auto t0 = std::chrono::steady_clock::now();
        const auto r = verify_psi_theta(200);
        const double s = seconds_since(t0);
        outcome o = all_of({r}, "psi^2 = theta psi(2t) through q^200");
        o.pass = o.pass && r.checked_through >= 200 && s < 1.0;
        o.detail += s < 1.0 ? "" : "; over 1 s";
        return o;
    });

    criterion(2, [] {
        const auto t0 = std::chrono::steady_clock::now();
        auto v = verify_odd_square_random(20, 6, 6, 50, 1506);
        outcome o = all_of(v, "delta_k(C;n) = q_k(C;8n+h), 20 random C, n <= 50");
        o.pass = o.pass && v.size() == 20 && seconds_since(t0) < 10.0;
        return o;
    });

    criterion(3, [] {
        const auto cat = verify_theorem_a_catalog();
        long ok = 0;
        std::string bad;
        for (const auto &r : cat) {
            if (r.passed) {
                ++ok;
            } else {
                bad += "; " + r.name.substr(r.name.find(": ") + 2) + " (" + r.first_failure->lhs + ": "
                       + r.first_failure->rhs + ")";
            }
        }
        const long P = 24 * 201;
        const bool theta = equal_through(expand(parse_eta_quotient("1^-2 2^5 4^-2"), P), theta_series(P), P);
        const bool psi = equal_through(expand(parse_eta_quotient("1^-1 2^2"), P + 3).shift24(-3), psi_series(P), P);
        std::ostringstream d;
        d << ok << "/" << cat.size() << " catalogued eta forms are cusp forms of their named space" << bad
          << "; theta and psi eta expressions " << (theta && psi ? "match" : "DIFFER") << " through q^200";
        return outcome{ok == static_cast<long>(cat.size()) && cat.size() == 22 && theta && psi, d.str()};
    });

    criterion(4, [] {
        std::mt19937_64 rng(1101);
        long agree = 0, modular = 0;
        for (int i = 0; i < 200; ++i) {
            const long k = 2 * (1 + static_cast<long>(rng() % 4));
            const auto c = oracle::random_list(rng, k, 6);
            std::map<long, long> e;
            long l = 1;
            for (long x : c) {
                e[x] -= 1;
                e[2 * x] += 2;
                l = std::lcm(l, x);
            }
            std::erase_if(e, [](const auto &kv) { return kv.second == 0; });
            const eta_quotient q(e, 2 * l);
            long s1 = 0, s2 = 0;
            for (const auto &[d, r] : q.exps) {
                s1 += d * r;
                s2 += (q.level / d) * r;
            }
            const bool cond = s1 % 24 == 0 && s2 % 24 == 0;
            const bool h8 = std::accumulate(c.begin(), c.end(), 0L) % 8 == 0;
            modular += h8;
            agree += cond == h8 && check_theorem_a(q).conditions_hold == h8;
        }
        return outcome{agree == 200, std::to_string(agree) + "/200 random C agree (" + std::to_string(modular)
                                         + " with h = 0 mod 8)"};
    });

    criterion(5, [threads] {
        const auto t0 = std::chrono::steady_clock::now();
        const auto rows = load_fixture(fixture_dir() + "/table01.json");
        const auto rep = reproduce_table(rows, threads);
        long through = 1 << 30;
        for (const auto &r : rep.rows) {
            through = std::min(through, r.verified_through);
        }
        const double s = seconds_since(t0);
        const bool ok = rows.size() == 21 && rep.matched() == 21 && through >= 9 && s < 30.0;
        return outcome{ok, std::to_string(rep.matched()) + "/" + std::to_string(rows.size())
                               + " rows of the weight 4 level 12 table exact, verified through "
                               + std::to_string(through) + " coefficients"};
    });

    criterion(6, [] { return all_of(verify_21_formulas(60), "21 closed forms against brute force, n <= 60"); });

    criterion(7, [] {
        auto o = strict_errata(verify_pk(100), "(p,k) identities through q^100");
        const auto gh = verify_gh_factored(100);
        const auto f = all_of(gh, "G, H factored forms");
        o.pass = o.pass && f.pass;
        o.detail += "; " + f.detail;
        return o;
    });

    criterion(8, [] {
        long ok = 0;
        std::string bad;
        for (const auto &s : catalog_spaces()) {
            const auto b = basis_for(s);
            const auto [e, c] = catalog_dimensions(s);
            const long rows = static_cast<long>(b.size()) + 5;
            std::vector<std::vector<rational>> m(static_cast<std::size_t>(rows));
            for (long n = 0; n < rows; ++n) {
                for (const auto &x : b) {
                    m[static_cast<std::size_t>(n)].push_back(x.expansion(24 * rows).coeff(n));
                }
            }
            if (b.size() == static_cast<std::size_t>(e + c) && rank(m) == b.size()) {
                ++ok;
            } else {
                bad += " " + s.label();
            }
        }
        const long total = static_cast<long>(catalog_spaces().size());
        return outcome{ok == total, std::to_string(ok) + "/" + std::to_string(total)
                                        + " bases have the listed size and full rank" + bad};
    });

    criterion(9, [threads] {
        // Rows whose printed vector is known to be wrong. Empty: every row reproduces.
        const std::set<std::pair<std::string, int>> catalogued;
        std::size_t total = 0, matched = 0, uncatalogued = 0;
        std::string first;
        for (int t = 3; t <= 14; ++t) {
            const std::string name = (t < 10 ? "/table0" : "/table") + std::to_string(t) + ".json";
            const auto rows = load_fixture(fixture_dir() + name);
            const auto rep = reproduce_table(rows, threads);
            total += rows.size();
            matched += rep.matched();
            for (const auto &r : rep.rows) {
                if (!r.matched && !catalogued.count({r.row.table, r.row.row})) {
                    ++uncatalogued;
                    if (first.empty()) {
                        first = "; first " + r.row.table + " row " + std::to_string(r.row.row)
                                + (r.paper_residual_index ? " residual at q^" + std::to_string(*r.paper_residual_index)
                                                          : " " + r.error);
                    }
                }
            }
        }
        const bool ok = total > 0 && matched * 100 >= total * 95 && uncatalogued == 0;
        return outcome{ok, std::to_string(matched) + "/" + std::to_string(total) + " appendix rows exact, "
                               + std::to_string(uncatalogued) + " uncatalogued mismatches" + first};
    });

    criterion(10, [] { return strict_errata(verify_sample_formulas(60), "sample closed forms, n <= 60"); });

    criterion(11, [] {
        auto v = verify_relations1(40);
        v.push_back(verify_relations(4, 40));
        return all_of(v, std::to_string(v.size()) + " corollary and remark identities, n <= 40");
    });

    criterion(12, [] {
        std::vector<verification_report> shell, from_one;
        for (const auto &c : std::vector<std::vector<long>>{{1, 1}, {1, 3}, {1, 2, 3}}) {
            const auto r = verify_ellipsoid(c, 30);
            shell.push_back(r[0]);
            from_one.push_back(r[1]);
        }
        auto o = all_of(shell, "lattice count = 2^k sum_{n>=0} delta_k(C;n) for (1,1), (1,3), (1,2,3), R^2 = j/4 <= 30");
        long low = 0;
        for (const auto &r : from_one) {
            low += !r.passed;
        }
        o.detail += "; the sum from n = 1 undercounts by 2^k for R^2 >= h/4 (" + std::to_string(low) + "/3 sets)";
        return o;
    });

    criterion(13, [] {
        std::mt19937_64 rng(1313);
        long ring_bad = 0;
        for (int i = 0; i < 500; ++i) {
            const auto a = random_series(rng, 96), b = random_series(rng, 96), c = random_series(rng, 96);
            const auto l = a * (b + c), r = a * b + a * c;
            ring_bad += !(a + b == b + a) || !(a * b == b * a) || !((a + b) + c == a + (b + c))
                        || !equal_through(l, r, std::min(l.prec24(), r.prec24()))
                        || !equal_through((a * b) * c, a * (b * c),
                                          std::min(((a * b) * c).prec24(), (a * (b * c)).prec24()));
        }
        long oracle_bad = 0;
        for (int i = 0; i < 40; ++i) {
            const auto f = random_form(rng, i % 4);
            const auto s = modular_series(f, 24 * 31 + 3 * f.h());
            for (long n = 0; n <= 30; ++n) {
                oracle_bad += s.coeff24(24 * n + 3 * f.h()) != static_cast<long>(oracle::mixed(f, n));
            }
        }
        long trip_bad = 0, trips = 0;
        std::uniform_int_distribution<long> num(-99, 99), den(1, 30);
        for (const auto &s : catalog_spaces()) {
            const long rows = default_rows(s);
            const std::size_t dim = basis_for(s).size();
            for (int i = 0; i < 50; ++i) {
                std::vector<rational> t(dim);
                for (auto &x : t) {
                    x = frac(num(rng), den(rng));
                }
                ++trips;
                trip_bad += express_in_basis(combine(t, s, basis_convention::catalog, 24 * rows), s).values != t;
            }
        }
        std::ostringstream d;
        d << "ring axioms " << ring_bad << "/500 failures; oracle vs series " << oracle_bad
          << " failures over 40 forms x 31 n; round trip " << trip_bad << "/" << trips << " failures";
        return outcome{ring_bad == 0 && oracle_bad == 0 && trip_bad == 0, d.str()};
    });

    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
    return failures == 0 ? 0 : 1;
}
