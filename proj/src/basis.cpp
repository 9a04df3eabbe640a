#include <trimix/basis.hpp>
#include <trimix/errors.hpp>

#include <map>
#include <mutex>
#include <sstream>

namespace trimix
{

std::string space_id::label() const
{
    std::string chi = character.top == 1 ? "chi0" : "chi" + std::to_string(character.top);
    return "M" + std::to_string(weight) + "(" + std::to_string(level) + "," + chi + ")";
}

bool space_id::same_as(const space_id &o) const
{
    return weight == o.weight && level == o.level && same_character_mod(character, o.character, level);
}

bool space_id::contained_in(const space_id &o) const
{
    return weight == o.weight && o.level % level == 0 && same_character_mod(character, o.character, o.level);
}

std::string to_string(basis_convention c)
{
    return c == basis_convention::catalog ? "catalog" : "e2_dilations";
}

basis_convention parse_basis_convention(const std::string &s)
{
    if (s == "catalog") {
        return basis_convention::catalog;
    }
    if (s == "e2_dilations") {
        return basis_convention::e2_dilations;
    }
    throw parse_error("unknown basis convention '" + s + "'");
}

namespace
{

kronecker_char symbol(long long top)
{
    return top == 1 ? kronecker_char::trivial() : kronecker_char::of(top);
}

std::string argument(long d)
{
    return d == 1 ? "n" : "n/" + std::to_string(d);
}

std::string cusp_symbol(const std::string &name)
{
    if (name.rfind("f_", 0) == 0) {
        return "a_" + name.substr(2);
    }
    if (name.rfind("Delta_", 0) == 0) {
        return "tau_" + name.substr(6);
    }
    return name;
}

struct cusp_cache {
    std::mutex m;
    std::map<std::string, series24> expansions;
};

cusp_cache &global_cusp_cache()
{
    static cusp_cache c;
    return c;
}

} // namespace

std::string divisor_kernel::render(long d) const
{
    const std::string arg = "(" + argument(d) + ")";
    switch (k) {
        case kind::sigma:
            return (r == 1 ? std::string("sigma") : "sigma_" + std::to_string(r)) + arg;
        case kind::twisted_sigma:
            return "sigma_{" + std::to_string(r) + ";" + symbol(chi).label() + "," + symbol(psi).label() + "}" + arg;
        case kind::sharp_sigma3:
            return "sigma3#" + arg;
        case kind::cusp:
            return cusp_symbol(cusp) + arg;
    }
    return "?";
}

rational cusp_coefficient(const std::string &name, long n)
{
    if (n < 0) {
        return 0;
    }
    auto &cache = global_cusp_cache();
    std::lock_guard<std::mutex> lock(cache.m);
    auto it = cache.expansions.find(name);
    if (it == cache.expansions.end() || it->second.prec24() <= 24 * n) {
        long prec = it == cache.expansions.end() ? 24 * 64 : it->second.prec24();
        while (prec <= 24 * n) {
            prec *= 2;
        }
        series24 s = expand(named_cusp_form_expr(name), prec);
        it = cache.expansions.insert_or_assign(name, std::move(s)).first;
    }
    return it->second.coeff(n);
}

rational evaluate_terms(const std::vector<formula_term> &terms, long n)
{
    rational total = 0;
    for (const auto &t : terms) {
        if (n % t.divisor != 0) {
            continue;
        }
        const long m = n / t.divisor;
        if (m <= 0) {
            continue;
        }
        rational value;
        switch (t.kernel.k) {
            case divisor_kernel::kind::sigma:
                value = sigma(t.kernel.r, m);
                break;
            case divisor_kernel::kind::twisted_sigma:
                value = gen_divisor_sum(t.kernel.r, symbol(t.kernel.chi), symbol(t.kernel.psi), m);
                break;
            case divisor_kernel::kind::sharp_sigma3:
                value = sharp_sigma3(m);
                break;
            case divisor_kernel::kind::cusp:
                value = cusp_coefficient(t.kernel.cusp, m);
                break;
        }
        total += t.coeff * value;
    }
    return total;
}

std::vector<formula_term> merge_terms(const std::vector<formula_term> &terms)
{
    std::vector<formula_term> out;
    for (const auto &t : terms) {
        bool found = false;
        for (auto &o : out) {
            if (o.kernel == t.kernel && o.divisor == t.divisor) {
                o.coeff += t.coeff;
                found = true;
                break;
            }
        }
        if (!found) {
            out.push_back(t);
        }
    }
    std::vector<formula_term> nz;
    for (auto &t : out) {
        if (sgn(t.coeff) != 0) {
            nz.push_back(std::move(t));
        }
    }
    return nz;
}

std::string render_terms(const std::vector<formula_term> &terms)
{
    const auto merged = merge_terms(terms);
    if (merged.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &t : merged) {
        const rational a = abs(t.coeff);
        if (first) {
            if (sgn(t.coeff) < 0) {
                os << "-";
            }
        } else {
            os << (sgn(t.coeff) < 0 ? " - " : " + ");
        }
        first = false;
        if (a != 1) {
            os << a.get_str() << " ";
        }
        os << t.kernel.render(t.divisor);
    }
    return os.str();
}

struct basis_element::memo {
    std::mutex m;
    std::shared_ptr<const series24> value;
};

basis_element::basis_element(std::string label, std::variant<eisenstein_spec, cusp_source> source)
    : m_label(std::move(label)), m_source(std::move(source)), m_memo(std::make_shared<memo>())
{
}

series24 basis_element::expansion(long prec24) const
{
    std::lock_guard<std::mutex> lock(m_memo->m);
    if (!m_memo->value || m_memo->value->prec24() < prec24) {
        series24 s = std::visit(
            [prec24](const auto &src) -> series24 {
                using T = std::decay_t<decltype(src)>;
                if constexpr (std::is_same_v<T, eisenstein_spec>) {
                    return expand(src, prec24);
                } else {
                    return expand(named_cusp_form_expr(src.name).dilate(src.dilation), prec24);
                }
            },
            m_source);
        m_memo->value = std::make_shared<const series24>(std::move(s));
    }
    return m_memo->value->truncate(prec24);
}

std::vector<formula_term> basis_element::coefficient_terms() const
{
    std::vector<formula_term> out;
    if (const auto *c = std::get_if<cusp_source>(&m_source)) {
        divisor_kernel k;
        k.k = divisor_kernel::kind::cusp;
        k.cusp = c->name;
        out.push_back({rational(1), k, c->dilation});
        return out;
    }
    const auto &spec = std::get<eisenstein_spec>(m_source);
    const long d = spec.dilation;
    std::visit(
        [&](const auto &x) {
            using T = std::decay_t<decltype(x)>;
            divisor_kernel k;
            if constexpr (std::is_same_v<T, classical_eisenstein>) {
                k.r = x.k - 1;
                out.push_back({-rational(2 * x.k) / bernoulli(x.k), k, d});
            } else if constexpr (std::is_same_v<T, quasi_e2>) {
                out.push_back({rational(-24), k, d});
            } else if constexpr (std::is_same_v<T, phi_ab>) {
                out.push_back({frac(24 * x.a, x.b - x.a), k, x.a * d});
                out.push_back({frac(-24 * x.b, x.b - x.a), k, x.b * d});
            } else {
                k.k = divisor_kernel::kind::twisted_sigma;
                k.r = x.k - 1;
                k.chi = x.chi.top;
                k.psi = x.psi.top;
                out.push_back({rational(1), k, d});
            }
        },
        spec.kind);
    return out;
}

namespace
{

struct catalog_entry {
    space_id space;
    int eis;
    int cusp;
};

eisenstein_spec tw(unsigned k, long long chi, long long psi, long d = 1)
{
    return eisenstein_spec{twisted_eisenstein{k, symbol(chi), symbol(psi)}, d};
}

class builder
{
public:
    void eis(const eisenstein_spec &s)
    {
        validate(s);
        out.emplace_back(s.label(), s);
    }
    // E_{k,chi,psi}(a t) for each a | m.
    void eis_dilations(unsigned k, long long chi, long long psi, long m)
    {
        for (long a : divisors(m)) {
            eis(tw(k, chi, psi, a));
        }
    }
    void cusp(const std::string &name, long d = 1)
    {
        out.emplace_back(d == 1 ? name : name + "_at_" + std::to_string(d), cusp_source{name, d});
    }
    void cusp_dilations(const std::string &name, long m)
    {
        for (long a : divisors(m)) {
            cusp(name, a);
        }
    }
    std::vector<basis_element> out;
};

void cusp_block(builder &b, const space_id &s)
{
    const long n = s.level;
    const long long c = s.character.top;
    if (s.weight == 2 && n == 24) {
        if (c == 1) {
            b.cusp("Delta_2_24_chi0");
        } else if (c == 8) {
            b.cusp("Delta_2_24_chi8_1");
            b.cusp("Delta_2_24_chi8_2");
        } else if (c == 24) {
            b.cusp("Delta_2_24_chi24_1");
            b.cusp("Delta_2_24_chi24_2");
        }
    }
    if (s.weight == 3) {
        if (n == 8 && c == -8) {
            b.cusp("Delta_3_8_chi-8");
        } else if (n == 12 && c == -3) {
            b.cusp("Delta_3_12_chi-3");
        } else if (n == 12 && c == -4) {
            b.cusp("Delta_3_12_chi-4_1");
            b.cusp("Delta_3_12_chi-4_2");
        } else if (n == 24 && c == -3) {
            b.cusp_dilations("Delta_3_12_chi-3", 2);
            b.cusp("Delta_3_24_chi-3_1");
            b.cusp("Delta_3_24_chi-3_2");
        } else if (n == 24 && c == -4) {
            for (long a : divisors(2)) {
                b.cusp("Delta_3_12_chi-4_1", a);
                b.cusp("Delta_3_12_chi-4_2", a);
            }
        } else if (n == 24 && c == -8) {
            b.cusp_dilations("Delta_3_8_chi-8", 3);
            for (int j = 1; j <= 4; ++j) {
                b.cusp("Delta_3_24_chi-8_" + std::to_string(j));
            }
        } else if (n == 24 && c == -24) {
            for (int j = 1; j <= 6; ++j) {
                b.cusp("Delta_3_24_chi-24_" + std::to_string(j));
            }
        }
    }
    if (s.weight == 4 && n == 12) {
        b.cusp("f_4_6");
        b.cusp("f_4_6", 2);
        b.cusp("f_4_12");
    }
}

void eisenstein_block(builder &b, const space_id &s)
{
    const long n = s.level;
    const long long c = s.character.top;
    if (s.weight == 2) {
        if (c == 1) {
            for (long d : divisors(n)) {
                if (d != 1) {
                    b.eis(eisenstein_spec{phi_ab{1, d}, 1});
                }
            }
        } else if (c == 8) {
            const long m = n / 8;
            b.eis_dilations(2, 1, 8, m);
            b.eis_dilations(2, 8, 1, m);
        } else if (c == 12) {
            const long m = n / 12;
            b.eis_dilations(2, 1, 12, m);
            b.eis_dilations(2, 12, 1, m);
            b.eis_dilations(2, -4, -3, m);
            b.eis_dilations(2, -3, -4, m);
        } else if (c == 24) {
            b.eis(tw(2, 1, 24));
            b.eis(tw(2, 24, 1));
            b.eis(tw(2, -8, -3));
            b.eis(tw(2, -3, -8));
        }
    } else if (s.weight == 3) {
        if (c == -24) {
            b.eis(tw(3, 1, -24));
            b.eis(tw(3, -24, 1));
            b.eis(tw(3, 8, -3));
            b.eis(tw(3, -3, 8));
        } else {
            const long m = n / std::labs(c);
            b.eis_dilations(3, 1, c, m);
            b.eis_dilations(3, c, 1, m);
        }
    } else if (s.weight == 4) {
        for (long d : divisors(n)) {
            b.eis(eisenstein_spec{classical_eisenstein{4}, d});
        }
    }
}

const std::vector<catalog_entry> &entries()
{
    static const std::vector<catalog_entry> e = {
        {space_id::make(2, 6, 1), 3, 0},    {space_id::make(2, 8, 1), 3, 0},     {space_id::make(2, 8, 8), 2, 0},
        {space_id::make(2, 12, 1), 5, 0},   {space_id::make(2, 12, 12), 4, 0},   {space_id::make(2, 24, 1), 7, 1},
        {space_id::make(2, 24, 8), 4, 2},   {space_id::make(2, 24, 12), 8, 0},   {space_id::make(2, 24, 24), 4, 2},
        {space_id::make(3, 4, -4), 2, 0},   {space_id::make(3, 3, -3), 2, 0},    {space_id::make(3, 6, -3), 4, 0},
        {space_id::make(3, 8, -4), 4, 0},   {space_id::make(3, 8, -8), 2, 1},    {space_id::make(3, 12, -3), 6, 1},
        {space_id::make(3, 12, -4), 4, 2},  {space_id::make(3, 24, -3), 8, 4},   {space_id::make(3, 24, -4), 8, 4},
        {space_id::make(3, 24, -8), 4, 6},  {space_id::make(3, 24, -24), 4, 6},  {space_id::make(4, 12, 1), 6, 3},
    };
    return e;
}

const catalog_entry &find_entry(const space_id &s)
{
    for (const auto &e : entries()) {
        if (e.space.same_as(s)) {
            return e;
        }
    }
    throw unknown_space("space " + s.label() + " is not catalogued");
}

} // namespace

const std::vector<space_id> &catalog_spaces()
{
    static const std::vector<space_id> v = [] {
        std::vector<space_id> out;
        for (const auto &e : entries()) {
            out.push_back(e.space);
        }
        return out;
    }();
    return v;
}

std::pair<int, int> catalog_dimensions(const space_id &s)
{
    const auto &e = find_entry(s);
    return {e.eis, e.cusp};
}

std::vector<basis_element> basis_for(const space_id &s, basis_convention c)
{
    const auto &entry = find_entry(s);
    if (c == basis_convention::e2_dilations && !(entry.space.weight == 2 && entry.space.character.top == 1)) {
        throw unknown_space("E2 dilation layout only exists for weight 2 with trivial character, not "
                            + entry.space.label());
    }
    static std::mutex m;
    static std::map<std::pair<std::string, int>, std::vector<basis_element>> built;
    std::lock_guard<std::mutex> lock(m);
    const auto key = std::make_pair(entry.space.label(), static_cast<int>(c));
    auto it = built.find(key);
    if (it != built.end()) {
        return it->second;
    }
    builder b;
    if (c == basis_convention::e2_dilations) {
        for (long d : divisors(entry.space.level)) {
            b.eis(eisenstein_spec{quasi_e2{}, d});
        }
    } else {
        eisenstein_block(b, entry.space);
    }
    cusp_block(b, entry.space);
    return built.emplace(key, std::move(b.out)).first->second;
}

long sturm_bound(const space_id &s)
{
    // Index of Gamma_0(N) in SL_2(Z) is N prod_{p | N} (1 + 1/p).
    long n = s.level;
    long index = n;
    long m = n;
    for (long p = 2; p <= m; ++p) {
        if (m % p == 0) {
            index = index / p * (p + 1);
            while (m % p == 0) {
                m /= p;
            }
        }
    }
    const long num = s.weight * index;
    return (num + 11) / 12 + 1;
}

} // namespace trimix
