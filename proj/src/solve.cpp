#include <trimix/descriptor.hpp>
#include <trimix/errors.hpp>
#include <trimix/solve.hpp>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <thread>

namespace trimix
{

namespace
{

using matrix = std::vector<std::vector<rational>>;

// Solves the square system a x = b by Gauss-Jordan elimination.
std::vector<rational> solve_square(matrix a, std::vector<rational> b)
{
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && sgn(a[piv][col]) == 0) {
            ++piv;
        }
        if (piv == n) {
            throw underdetermined_system("singular pivot block");
        }
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        const rational inv = 1 / a[col][col];
        for (std::size_t j = col; j < n; ++j) {
            a[col][j] *= inv;
        }
        b[col] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || sgn(a[i][col]) == 0) {
                continue;
            }
            const rational f = a[i][col];
            for (std::size_t j = col; j < n; ++j) {
                a[i][j] -= f * a[col][j];
            }
            b[i] -= f * b[col];
        }
    }
    return b;
}

// Greedy choice of linearly independent rows, scanning from the top.
std::vector<std::size_t> pivot_rows(const matrix &a, std::size_t cols)
{
    std::vector<std::size_t> chosen;
    std::vector<std::pair<std::size_t, std::vector<rational>>> echelon;
    for (std::size_t r = 0; r < a.size() && chosen.size() < cols; ++r) {
        std::vector<rational> v = a[r];
        for (const auto &[p, e] : echelon) {
            if (sgn(v[p]) == 0) {
                continue;
            }
            const rational f = v[p];
            for (std::size_t j = 0; j < cols; ++j) {
                v[j] -= f * e[j];
            }
        }
        std::size_t p = 0;
        while (p < cols && sgn(v[p]) == 0) {
            ++p;
        }
        if (p == cols) {
            continue;
        }
        const rational inv = 1 / v[p];
        for (auto &x : v) {
            x *= inv;
        }
        // Keep earlier echelon rows reduced in the new pivot column.
        for (auto &[q, e] : echelon) {
            if (sgn(e[p]) != 0) {
                const rational f = e[p];
                for (std::size_t j = 0; j < cols; ++j) {
                    e[j] -= f * v[j];
                }
            }
        }
        echelon.emplace_back(p, std::move(v));
        chosen.push_back(r);
    }
    return chosen;
}

} // namespace

std::size_t rank(std::vector<std::vector<rational>> m)
{
    if (m.empty()) {
        return 0;
    }
    const std::size_t cols = m[0].size();
    return pivot_rows(m, cols).size();
}

long default_rows(const space_id &s, basis_convention c)
{
    const long dim = static_cast<long>(basis_for(s, c).size());
    return std::max(sturm_bound(s), dim + 5);
}

series24 combine(const std::vector<rational> &t, const space_id &s, basis_convention c, long prec24)
{
    const auto basis = basis_for(s, c);
    if (t.size() != basis.size()) {
        throw error("vector length " + std::to_string(t.size()) + " does not match basis size "
                    + std::to_string(basis.size()) + " of " + s.label());
    }
    series24 acc(prec24);
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (sgn(t[i]) != 0) {
            acc += scale(basis[i].expansion(prec24), t[i]);
        }
    }
    return acc;
}

coefficient_vector express_in_basis(const series24 &target, const space_id &s, basis_convention c)
{
    if (!target.on_integer_grid()) {
        throw error("target has non-integral exponents; apply the q-prefactor first");
    }
    const long rows = (target.prec24() + 23) / 24;
    if (rows < sturm_bound(s)) {
        throw insufficient_precision("target knows " + std::to_string(rows) + " coefficients, Sturm bound of "
                                     + s.label() + " is " + std::to_string(sturm_bound(s)));
    }
    const auto basis = basis_for(s, c);
    const std::size_t m = basis.size();
    matrix a(static_cast<std::size_t>(rows), std::vector<rational>(m));
    for (std::size_t i = 0; i < m; ++i) {
        const series24 e = basis[i].expansion(24 * rows);
        for (long n = 0; n < rows; ++n) {
            a[static_cast<std::size_t>(n)][i] = e.coeff(n);
        }
    }
    std::vector<rational> b(static_cast<std::size_t>(rows));
    for (long n = 0; n < rows; ++n) {
        b[static_cast<std::size_t>(n)] = target.coeff(n);
    }
    const auto piv = pivot_rows(a, m);
    if (piv.size() < m) {
        throw underdetermined_system("basis of " + s.label() + " has rank " + std::to_string(piv.size()) + " < "
                                     + std::to_string(m) + " on " + std::to_string(rows) + " coefficients");
    }
    matrix sq;
    std::vector<rational> rhs;
    for (auto r : piv) {
        sq.push_back(a[r]);
        rhs.push_back(b[r]);
    }
    coefficient_vector out;
    out.space = s;
    out.convention = c;
    out.values = solve_square(std::move(sq), std::move(rhs));
    for (long n = 0; n < rows; ++n) {
        rational lhs = 0;
        for (std::size_t i = 0; i < m; ++i) {
            lhs += out.values[i] * a[static_cast<std::size_t>(n)][i];
        }
        if (lhs != b[static_cast<std::size_t>(n)]) {
            throw inconsistent_system(n, rational(lhs - b[static_cast<std::size_t>(n)]).get_str());
        }
    }
    out.verified_through = rows;
    return out;
}

std::vector<formula_term> formula_terms(const coefficient_vector &v)
{
    const auto basis = basis_for(v.space, v.convention);
    std::vector<formula_term> terms;
    for (std::size_t i = 0; i < basis.size() && i < v.values.size(); ++i) {
        if (sgn(v.values[i]) == 0) {
            continue;
        }
        for (auto t : basis[i].coefficient_terms()) {
            t.coeff *= v.values[i];
            terms.push_back(std::move(t));
        }
    }
    return merge_terms(terms);
}

std::string formula_as_divisor_sums(const coefficient_vector &v)
{
    return render_terms(formula_terms(v));
}

std::size_t table_report::matched() const
{
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const row_result &r) { return r.matched; }));
}

std::vector<table_row> load_fixture(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw error("cannot open fixture " + path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        throw parse_error("fixture " + path + ": " + e.what());
    }
    std::vector<table_row> rows;
    for (const auto &r : j) {
        table_row t;
        t.table = r.at("table").get<std::string>();
        t.row = r.at("row").get<int>();
        t.form = r.at("form").get<std::string>();
        const auto &sp = r.at("space");
        t.space = space_id::make(sp.at("weight").get<int>(), sp.at("level").get<long>(),
                                 sp.at("character").get<long long>());
        t.convention = parse_basis_convention(r.value("basis", std::string("catalog")));
        t.printed_shift = r.value("printed_shift", -1L);
        for (const auto &x : r.at("t")) {
            t.t.push_back(parse_rational(x.get<std::string>()));
        }
        rows.push_back(std::move(t));
    }
    return rows;
}

void save_fixture(const std::string &path, const std::vector<table_row> &rows)
{
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto &t : rows) {
        nlohmann::ordered_json r;
        r["table"] = t.table;
        r["row"] = t.row;
        r["form"] = t.form;
        r["space"] = {{"weight", t.space.weight}, {"level", t.space.level}, {"character", t.space.character.top}};
        r["basis"] = to_string(t.convention);
        r["printed_shift"] = t.printed_shift;
        nlohmann::ordered_json v = nlohmann::ordered_json::array();
        for (const auto &x : t.t) {
            v.push_back(x.get_str());
        }
        r["t"] = v;
        j.push_back(r);
    }
    std::ofstream out(path);
    if (!out) {
        throw error("cannot write fixture " + path);
    }
    out << j.dump(1) << "\n";
}

namespace
{

row_result solve_row(const table_row &row)
{
    row_result res;
    res.row = row;
    try {
        const auto d = parse_descriptor(row.form);
        const auto cls = classify(d.form);
        const space_id derived{static_cast<int>(cls.weight.get_num().get_si()), cls.level, cls.character};
        if (cls.weight.get_den() != 1 || !derived.contained_in(row.space)) {
            res.error = "form classifies as " + derived.label() + ", not inside fixture space " + row.space.label();
            return res;
        }
        if (!cls.modular) {
            res.error = "h is not divisible by 8";
            return res;
        }
        const long rows = default_rows(row.space, row.convention);
        const series24 target = modular_series(d.form, 24 * rows);
        const series24 printed = combine(row.t, row.space, row.convention, 24 * rows);
        const long first = first_difference(printed, target, 24 * rows);
        if (first != 24 * rows) {
            res.paper_residual_index = first / 24;
            res.paper_residual = rational(printed.coeff24(first) - target.coeff24(first)).get_str();
        }
        const auto v = express_in_basis(target, row.space, row.convention);
        res.solved = v.values;
        res.verified_through = v.verified_through;
        for (std::size_t i = 0; i < v.values.size(); ++i) {
            if (i >= row.t.size() || v.values[i] != row.t[i]) {
                res.diff.push_back(i);
            }
        }
        res.matched = res.diff.empty() && row.t.size() == v.values.size();
    } catch (const std::exception &e) {
        res.error = e.what();
    }
    return res;
}

} // namespace

table_report reproduce_table(const std::vector<table_row> &rows, unsigned threads)
{
    table_report rep;
    rep.rows.resize(rows.size());
    // Warm the shared basis caches once so workers only read them.
    for (const auto &r : rows) {
        try {
            const auto b = basis_for(r.space, r.convention);
            const long n = default_rows(r.space, r.convention);
            for (const auto &e : b) {
                e.expansion(24 * n);
            }
        } catch (const std::exception &) {
        }
    }
    threads = std::max(1u, threads);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) {
            rep.rows[i] = solve_row(rows[i]);
        }
    };
    if (threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) {
            pool.emplace_back(work);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    return rep;
}

} // namespace trimix
