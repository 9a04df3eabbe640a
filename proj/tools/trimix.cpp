#include <trimix/descriptor.hpp>
#include <trimix/errors.hpp>
#include <trimix/identities.hpp>
#include <trimix/solve.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <thread>

using namespace trimix;
using json = nlohmann::ordered_json;

namespace
{

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fixture_dir()
{
    if (const char *env = std::getenv("TRIMIX_FIXTURES"); env && *env) {
        return env;
    }
    return TRIMIX_FIXTURE_DIR;
}

std::pair<long, long> parse_range(const std::string &s)
{
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            const long n = std::stol(s);
            return {n, n};
        }
        return {std::stol(s.substr(0, dots)), std::stol(s.substr(dots + 2))};
    } catch (const std::exception &) {
        throw usage_error("--n expects 'a..b' or a single integer, got '" + s + "'");
    }
}

// "k,N,chi", e.g. "3,24,-4"; chi 1 is the trivial character.
space_id parse_space(const std::string &s)
{
    std::vector<long long> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            v.push_back(std::stoll(tok));
        } catch (const std::exception &) {
            throw usage_error("--space expects 'k,N,chi', got '" + s + "'");
        }
    }
    if (v.size() != 3) {
        throw usage_error("--space expects 'k,N,chi', got '" + s + "'");
    }
    return space_id::make(static_cast<int>(v[0]), static_cast<long>(v[1]), v[2]);
}

json space_json(const space_id &s)
{
    return {{"weight", s.weight}, {"level", s.level}, {"character", s.character.top}, {"label", s.label()}};
}

json strings(const std::vector<rational> &v)
{
    json a = json::array();
    for (const auto &x : v) {
        a.push_back(x.get_str());
    }
    return a;
}

basis_convention table_convention(const space_id &s)
{
    return s.weight == 2 && s.character.top == 1 ? basis_convention::e2_dilations : basis_convention::catalog;
}

space_id derived_space(const form_descriptor &d)
{
    const auto c = classify(d.form);
    if (c.weight.get_den() != 1) {
        throw error("form has half-integral weight " + c.weight.get_str());
    }
    return {static_cast<int>(c.weight.get_num().get_si()), c.level, c.character};
}

json report_json(const std::string &suite, const verification_report &r)
{
    json j;
    j["suite"] = suite;
    j["name"] = r.name;
    j["status"] = r.passed ? "pass" : "fail";
    j["checked_through"] = r.checked_through;
    if (r.first_failure) {
        j["first_failure"] = {{"index", r.first_failure->index}, {"lhs", r.first_failure->lhs}, {"rhs", r.first_failure->rhs}};
    } else {
        j["first_failure"] = nullptr;
    }
    if (!r.note.empty()) {
        j["note"] = r.note;
    }
    return j;
}

json erratum_json(const std::string &suite, const erratum_check &c)
{
    json j = report_json(suite, c.printed);
    if (!c.printed.passed && c.corrected) {
        j["status"] = c.corrected->passed ? "erratum" : "fail";
        j["erratum"] = c.erratum;
        j["corrected"] = report_json(suite, *c.corrected);
    }
    return j;
}

class emitter
{
public:
    emitter(bool tsv, bool strict) : m_tsv(tsv), m_strict(strict) {}

    void emit(const json &j)
    {
        const std::string status = j["status"];
        if (status == "fail" || (m_strict && status == "erratum")) {
            m_failed = true;
        }
        if (m_tsv) {
            std::cout << j["suite"].get<std::string>() << '\t' << j["name"].get<std::string>() << '\t' << status << '\t'
                      << j["checked_through"].get<long>();
            if (!j["first_failure"].is_null()) {
                std::cout << '\t' << j["first_failure"]["index"].get<long>() << '\t'
                          << j["first_failure"]["lhs"].get<std::string>() << '\t'
                          << j["first_failure"]["rhs"].get<std::string>();
            }
            std::cout << '\n';
        } else {
            std::cout << j.dump() << '\n';
        }
    }
    bool failed() const
    {
        return m_failed;
    }

private:
    bool m_tsv;
    bool m_strict;
    bool m_failed = false;
};

std::vector<std::string> fixture_files(const std::string &dir, const std::string &only)
{
    std::vector<std::string> files;
    if (!std::filesystem::is_directory(dir)) {
        throw error("fixture directory " + dir + " not found");
    }
    for (const auto &e : std::filesystem::directory_iterator(dir)) {
        if (e.path().extension() == ".json") {
            files.push_back(e.path().string());
        }
    }
    std::sort(files.begin(), files.end());
    if (!only.empty()) {
        std::string digits = only;
        if (!digits.empty() && (digits[0] == 'T' || digits[0] == 't')) {
            digits = digits.substr(1);
        }
        if (digits.size() == 1) {
            digits = "0" + digits;
        }
        std::erase_if(files, [&](const std::string &f) {
            return std::filesystem::path(f).filename().string() != "table" + digits + ".json";
        });
        if (files.empty()) {
            throw usage_error("no fixture for table '" + only + "'");
        }
    }
    return files;
}

json row_json(const row_result &r)
{
    json j;
    j["table"] = r.row.table;
    j["row"] = r.row.row;
    j["form"] = r.row.form;
    j["status"] = r.matched ? "match" : (r.error.empty() ? "mismatch" : "error");
    j["verified_through"] = r.verified_through;
    if (!r.matched) {
        j["printed"] = strings(r.row.t);
        j["solved"] = strings(r.solved);
        json d = json::array();
        for (auto i : r.diff) {
            d.push_back(i);
        }
        j["differs_at"] = d;
        if (r.paper_residual_index) {
            j["residual_index"] = *r.paper_residual_index;
            j["residual"] = r.paper_residual;
        }
        if (!r.error.empty()) {
            j["error"] = r.error;
        }
    }
    return j;
}

void run_tables_suite(emitter &out, unsigned threads, const std::string &only)
{
    for (const auto &file : fixture_files(fixture_dir(), only)) {
        const auto rows = load_fixture(file);
        const auto rep = reproduce_table(rows, threads);
        verification_report r;
        r.name = std::filesystem::path(file).stem().string();
        r.checked_through = static_cast<long>(rep.rows.size());
        for (const auto &x : rep.rows) {
            if (!x.matched && !r.first_failure) {
                r.passed = false;
                r.first_failure = verification_failure{x.row.row, strings(x.row.t).dump(), strings(x.solved).dump()};
            }
        }
        r.note = std::to_string(rep.matched()) + "/" + std::to_string(rep.rows.size()) + " rows match";
        out.emit(report_json("tables", r));
    }
}

void run_identities_suite(emitter &out, long nmax, long prec)
{
    const std::string s = "identities";
    out.emit(report_json(s, verify_psi_theta(prec)));
    for (const auto &c : std::vector<std::vector<long>>{{1, 2}, {1, 3}, {2, 3, 5}}) {
        out.emit(report_json(s, verify_psi_theta(c, prec)));
    }
    out.emit(report_json(s, verify_odd_square(std::vector<long>(4, 1), nmax)));
    for (const auto &r : verify_odd_square_random(20, 6, 6, nmax, 20240601)) {
        out.emit(report_json(s, r));
    }
    out.emit(report_json(s, verify_relations(4, nmax)));
    out.emit(report_json(s, verify_relations(std::vector<long>{1, 2, 3}, nmax)));
    for (const auto &r : verify_relations1(nmax)) {
        out.emit(report_json(s, r));
    }
    for (const auto &r : verify_theorem_a_catalog()) {
        out.emit(report_json(s, r));
    }
    for (const auto &r : verify_21_formulas(nmax)) {
        out.emit(report_json(s, r));
    }
    for (const auto &c : verify_sample_formulas(nmax)) {
        out.emit(erratum_json(s, c));
    }
    for (const auto &c : std::vector<std::vector<long>>{{1, 1}, {1, 3}, {1, 2, 3}}) {
        const auto reps = verify_ellipsoid(c, 30);
        // The sum starting at n = 1 misses the 2^k points nearest the centre; only n = 0 is a pass criterion.
        out.emit(report_json(s, reps[0]));
        json j = report_json(s, reps[1]);
        j["status"] = reps[1].passed ? "pass" : "convention";
        out.emit(j);
    }
}

void run_pk_suite(emitter &out, long prec)
{
    for (const auto &c : verify_pk(prec)) {
        out.emit(erratum_json("pk", c));
    }
    for (const auto &r : verify_gh_factored(prec)) {
        out.emit(report_json("pk", r));
    }
}

int run(int argc, char **argv)
{
    CLI::App app{"Representation numbers of mixed quadratic forms via modular forms"};
    app.require_subcommand(1);
    app.fallthrough();
    bool tsv = false;
    app.add_flag("--tsv", tsv, "Tab-separated output instead of JSON");

    std::string form;
    std::string nrange = "0..10";
    long prec = 20;
    std::string eta, name, space_text, convention = "catalog", table, suite = "all", out_dir;
    long nmax = -1;
    long level = 0;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    bool regen = false, strict = false;

    auto *count = app.add_subcommand("count", "Brute-force representation numbers");
    count->add_option("--form", form, "Form descriptor, e.g. \"tri:1^2 3^2\"")->required();
    count->add_option("--n", nrange, "Range a..b");

    auto *series = app.add_subcommand("series", "q-expansion of a form, eta quotient or named cusp form");
    auto *series_src = series->add_option_group("source");
    series_src->add_option("--form", form, "Form descriptor; expands q^(h/8) times the generating function");
    series_src->add_option("--eta", eta, "Eta quotient, e.g. \"1^2 2^1 4^1 8^2\"");
    series_src->add_option("--name", name, "Named cusp form, e.g. Delta_3_8_chi-8");
    series_src->require_option(1);
    series->add_option("--prec", prec, "Number of q-powers");

    auto *etacheck = app.add_subcommand("eta-check", "Check an eta quotient against Theorem A");
    auto *eta_src = etacheck->add_option_group("source");
    eta_src->add_option("--eta", eta, "Eta quotient");
    eta_src->add_option("--name", name, "Named cusp form");
    eta_src->require_option(1);
    etacheck->add_option("--level", level, "Level (default: lcm of the bases)");

    auto *basis = app.add_subcommand("basis", "List a catalogued basis");
    basis->add_option("--space", space_text, "k,N,chi")->required();
    basis->add_option("--convention", convention, "catalog or e2_dilations");
    basis->add_option("--prec", prec, "Number of q-powers to print per element");

    auto *solve = app.add_subcommand("solve", "Express a form in a basis");
    solve->preparse_callback([&](std::size_t) { convention = "auto"; });
    solve->add_option("--form", form, "Form descriptor")->required();
    solve->add_option("--space", space_text, "k,N,chi (default: derived from the form)");
    solve->add_option("--convention", convention,
                      "catalog, e2_dilations or auto (E2 dilations for weight 2 trivial character, as in the tables)");

    auto *tables = app.add_subcommand("tables", "Reproduce the coefficient tables");
    tables->add_option("--table", table, "Only this table, e.g. T3 or 12");
    tables->add_option("--threads", threads, "Worker threads");
    tables->add_flag("--regen", regen, "Write fixtures with the solved vectors");
    tables->add_option("--out", out_dir, "Directory for --regen output");

    auto *verify = app.add_subcommand("verify", "Run identity suites");
    verify->add_option("--suite", suite, "identities, tables, pk or all")
        ->check(CLI::IsMember({"identities", "tables", "pk", "all"}));
    verify->add_option("--nmax", nmax, "Bound for brute-force checks (default 60) and series checks (default 200)");
    verify->add_option("--threads", threads, "Worker threads for the tables suite");
    verify->add_flag("--strict", strict, "Count catalogued errata as failures");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*count) {
            const auto d = parse_descriptor(form);
            const auto [a, b] = parse_range(nrange);
            if (a < 0 || b < a) {
                throw usage_error("--n range must satisfy 0 <= a <= b");
            }
            const auto v = count_mixed_upto(d.form, b);
            if (tsv) {
                for (long n = a; n <= b; ++n) {
                    std::cout << n << '\t' << v[static_cast<std::size_t>(n)] << '\n';
                }
            } else {
                json j;
                j["form"] = d.to_string();
                j["from"] = a;
                json c = json::array();
                for (long n = a; n <= b; ++n) {
                    c.push_back(v[static_cast<std::size_t>(n)]);
                }
                j["counts"] = c;
                std::cout << j.dump() << '\n';
            }
            return 0;
        }
        if (*series) {
            if (prec < 1) {
                throw usage_error("--prec must be positive");
            }
            series24 s;
            json j;
            if (!form.empty()) {
                const auto d = parse_descriptor(form);
                s = modular_series(d.form, 24 * prec);
                j["form"] = d.to_string();
            } else if (!eta.empty()) {
                const auto e = parse_eta_quotient(eta);
                s = expand(e, 24 * prec);
                j["eta"] = e.to_string();
            } else {
                s = expand(named_cusp_form_expr(name), 24 * prec);
                j["name"] = name;
            }
            if (tsv) {
                for (long e = s.offset24(); e < s.prec24(); ++e) {
                    const rational c = s.coeff24(e);
                    if (sgn(c) != 0) {
                        std::cout << e << '\t' << c.get_str() << '\n';
                    }
                }
                return 0;
            }
            j["offset24"] = s.offset24();
            j["prec24"] = s.prec24();
            j["coeffs"] = strings(s.coeffs());
            std::cout << j.dump() << '\n';
            return 0;
        }
        if (*etacheck) {
            const eta_quotient e = eta.empty() ? lookup_cusp_form(name).form.terms.at(0).second
                                               : parse_eta_quotient(eta, level);
            const auto v = check_theorem_a(e);
            json j;
            j["eta"] = e.to_string();
            j["level"] = e.level;
            j["conditions_hold"] = v.conditions_hold;
            j["is_cusp"] = v.is_cusp;
            j["weight"] = v.weight.get_str();
            j["character"] = v.character.label();
            j["reason"] = v.reason;
            json o = json::array();
            for (const auto &[d, val] : v.orders) {
                o.push_back({{"divisor", d}, {"order", val.get_str()}});
            }
            j["orders"] = o;
            if (tsv) {
                std::cout << j["eta"].get<std::string>() << '\t' << v.conditions_hold << '\t' << v.is_cusp << '\t'
                          << j["weight"].get<std::string>() << '\t' << j["character"].get<std::string>() << '\n';
            } else {
                std::cout << j.dump() << '\n';
            }
            return v.conditions_hold ? 0 : 1;
        }
        if (*basis) {
            const auto s = parse_space(space_text);
            const auto c = parse_basis_convention(convention);
            const auto b = basis_for(s, c);
            json j;
            j["space"] = space_json(s);
            j["convention"] = to_string(c);
            const auto dims = catalog_dimensions(s);
            j["eisenstein"] = dims.first;
            j["cusp"] = dims.second;
            j["sturm_bound"] = sturm_bound(s);
            json el = json::array();
            for (const auto &e : b) {
                const auto x = e.expansion(24 * prec);
                el.push_back({{"label", e.label()}, {"coefficients", strings(x.integer_coeffs(prec))}});
                if (tsv) {
                    std::cout << e.label();
                    for (const auto &v : x.integer_coeffs(prec)) {
                        std::cout << '\t' << v.get_str();
                    }
                    std::cout << '\n';
                }
            }
            j["elements"] = el;
            if (!tsv) {
                std::cout << j.dump() << '\n';
            }
            return 0;
        }
        if (*solve) {
            const auto d = parse_descriptor(form);
            const auto own = derived_space(d);
            const auto s = space_text.empty() ? own : parse_space(space_text);
            if (!own.contained_in(s)) {
                throw error("form lies in " + own.label() + ", not in " + s.label());
            }
            const auto c = convention == "auto" ? table_convention(s) : parse_basis_convention(convention);
            const long rows = default_rows(s, c);
            const auto v = express_in_basis(modular_series(d.form, 24 * rows), s, c);
            const auto b = basis_for(s, c);
            if (tsv) {
                for (std::size_t i = 0; i < b.size(); ++i) {
                    std::cout << i + 1 << '\t' << b[i].label() << '\t' << v.values[i].get_str() << '\n';
                }
                std::cout << "formula\t" << formula_as_divisor_sums(v) << '\n';
                return 0;
            }
            json j;
            j["form"] = d.to_string();
            j["space"] = space_json(s);
            j["convention"] = to_string(c);
            j["q_shift"] = classify(d.form).q_prefactor24 / 24;
            json labels = json::array();
            for (const auto &e : b) {
                labels.push_back(e.label());
            }
            j["basis"] = labels;
            j["t"] = strings(v.values);
            j["verified_through"] = v.verified_through;
            j["formula"] = formula_as_divisor_sums(v);
            std::cout << j.dump() << '\n';
            return 0;
        }
        if (*tables) {
            if (regen && out_dir.empty()) {
                throw usage_error("--regen needs --out DIR");
            }
            bool all = true;
            for (const auto &file : fixture_files(fixture_dir(), table)) {
                auto rows = load_fixture(file);
                const auto rep = reproduce_table(rows, threads);
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    const auto &r = rep.rows[i];
                    all = all && r.matched;
                    if (tsv) {
                        std::cout << r.row.table << '\t' << r.row.row << '\t' << r.row.form << '\t'
                                  << (r.matched ? "match" : "mismatch") << '\n';
                    } else {
                        std::cout << row_json(r).dump() << '\n';
                    }
                    if (regen && r.error.empty()) {
                        rows[i].t = r.solved;
                    }
                }
                if (regen) {
                    std::filesystem::create_directories(out_dir);
                    save_fixture((std::filesystem::path(out_dir) / std::filesystem::path(file).filename()).string(),
                                 rows);
                }
            }
            return all ? 0 : 1;
        }
        if (*verify) {
            emitter out(tsv, strict);
            const long brute = nmax > 0 ? nmax : 60;
            const long pure = nmax > 0 ? nmax : 200;
            if (suite == "identities" || suite == "all") {
                run_identities_suite(out, brute, pure);
            }
            if (suite == "pk" || suite == "all") {
                run_pk_suite(out, pure);
            }
            if (suite == "tables" || suite == "all") {
                run_tables_suite(out, threads, "");
            }
            return out.failed() ? 1 : 0;
        }
    } catch (const usage_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const parse_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const unknown_name &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const unknown_space &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

} // namespace

int main(int argc, char **argv)
{
    return run(argc, argv);
}
