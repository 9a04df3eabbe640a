#include <trimix/errors.hpp>
#include <trimix/forms.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace trimix
{

namespace
{

struct variable {
    // (value, number of integer choices giving it), ascending by value
    std::vector<std::pair<long, std::uint64_t>> values;
};

variable triangular_variable(long c, long nmax)
{
    variable v;
    for (long z = 0; c * (z * (z + 1) / 2) <= nmax; ++z) {
        v.values.emplace_back(c * (z * (z + 1) / 2), 1);
    }
    return v;
}

variable square_variable(long b, long nmax)
{
    variable v;
    for (long y = 0; b * y * y <= nmax; ++y) {
        v.values.emplace_back(b * y * y, y == 0 ? 1 : 2);
    }
    return v;
}

variable odd_square_variable(long c, long nmax)
{
    variable v;
    for (long y = 1; c * y * y <= nmax; y += 2) {
        v.values.emplace_back(c * y * y, 1);
    }
    return v;
}

variable hex_variable(long a, long nmax)
{
    // x^2 + xy + y^2 >= (x^2 + y^2)/2, so a*(x^2+xy+y^2) <= nmax forces
    // x^2, y^2 <= 2*nmax/a.
    std::map<long, std::uint64_t> hist;
    long box = 0;
    while ((box + 1) * (box + 1) * a <= 2 * nmax) {
        ++box;
    }
    for (long x = -box; x <= box; ++x) {
        for (long y = -box; y <= box; ++y) {
            const long q = a * (x * x + x * y + y * y);
            if (q <= nmax) {
                ++hist[q];
            }
        }
    }
    variable v;
    for (const auto &[val, m] : hist) {
        v.values.emplace_back(val, m);
    }
    return v;
}

std::vector<std::uint64_t> run(const std::vector<variable> &vars, long nmax)
{
    std::vector<std::uint64_t> out(static_cast<std::size_t>(std::max(nmax + 1, 0L)), 0);
    if (nmax < 0) {
        return out;
    }
    // Histogram of partial sums, one variable at a time.
    out[0] = 1;
    std::vector<std::uint64_t> next(out.size());
    for (const auto &v : vars) {
        std::fill(next.begin(), next.end(), 0);
        for (long s = 0; s <= nmax; ++s) {
            const std::uint64_t w = out[static_cast<std::size_t>(s)];
            if (w == 0) {
                continue;
            }
            for (const auto &[val, mult] : v.values) {
                if (s + val > nmax) {
                    break;
                }
                next[static_cast<std::size_t>(s + val)] += w * mult;
            }
        }
        out.swap(next);
    }
    return out;
}

long lcm_of(const std::vector<long> &xs)
{
    long l = 1;
    for (long x : xs) {
        l = static_cast<long>(lcm_ll(l, x));
    }
    return l;
}

void require_positive(const std::vector<long> &xs)
{
    for (long x : xs) {
        if (x < 1) {
            throw error("coefficients must be positive integers");
        }
    }
}

} // namespace

long mixed_form::h() const
{
    return std::accumulate(tri.begin(), tri.end(), 0L);
}

integer mixed_form::tri_product() const
{
    integer p = 1;
    for (long c : tri) {
        p *= c;
    }
    return p;
}

std::string to_string(family f)
{
    switch (f) {
        case family::tri:
            return "tri";
        case family::st:
            return "st";
        case family::lt:
            return "lt";
        case family::mixed:
            return "mixed";
    }
    return "?";
}

family implied_family(const mixed_form &f)
{
    if (!f.hex.empty() && !f.squares.empty()) {
        return family::mixed;
    }
    if (!f.hex.empty()) {
        return family::lt;
    }
    if (!f.squares.empty()) {
        return family::st;
    }
    if (!f.tri.empty()) {
        return family::tri;
    }
    throw error("empty form");
}

bool in_paper_sets(const mixed_form &f)
{
    auto within = [](const std::vector<long> &xs, std::initializer_list<long> allowed) {
        return std::all_of(xs.begin(), xs.end(), [&](long x) {
            return std::find(allowed.begin(), allowed.end(), x) != allowed.end();
        });
    };
    return within(f.hex, {1, 2, 4, 8}) && within(f.squares, {1, 2, 3, 6}) && within(f.tri, {1, 2, 3, 4, 6});
}

modular_classification classify(const mixed_form &f)
{
    require_positive(f.hex);
    require_positive(f.squares);
    require_positive(f.tri);
    const family fam = implied_family(f);
    const long u = f.u(), v = f.v(), k = f.k();

    if ((fam == family::tri || fam == family::lt) && k % 2 != 0) {
        throw parity_violation("k = " + std::to_string(k) + " must be even for the " + to_string(fam) + " family");
    }
    if ((fam == family::st || fam == family::mixed) && (v + k) % 2 != 0) {
        throw parity_violation("v + k = " + std::to_string(v + k) + " must be even for the " + to_string(fam)
                               + " family");
    }

    long level = 1;
    if (u > 0) {
        level = static_cast<long>(lcm_ll(level, 3 * lcm_of(f.hex)));
    }
    if (v > 0) {
        level = static_cast<long>(lcm_ll(level, 4 * lcm_of(f.squares)));
    }
    if (k > 0) {
        level = static_cast<long>(lcm_ll(level, 2 * lcm_of(f.tri)));
    }

    integer top;
    if (fam == family::tri || fam == family::lt) {
        top = ((k / 2) % 2 == 0 ? 1 : -1) * 4 * f.tri_product();
    } else {
        integer prod = f.tri_product();
        for (long b : f.squares) {
            prod *= b;
        }
        const long base = (v % 2 == 0) ? 4 : 8;
        top = (((v + k) / 2) % 2 == 0 ? 1 : -1) * base * prod;
    }
    if ((fam == family::lt || fam == family::mixed) && u % 2 == 1) {
        top *= -3;
    }
    // Only the class of the symbol mod squares matters on units mod level.
    integer sign = sgn(top) < 0 ? -1 : 1;
    integer mag = abs(top);
    integer kernel = 1;
    for (long p = 2; mag > 1; ++p) {
        int e = 0;
        while (mpz_divisible_ui_p(mag.get_mpz_t(), static_cast<unsigned long>(p))) {
            mag /= p;
            ++e;
        }
        if (e % 2 == 1) {
            kernel *= p;
        }
    }
    const long long d = fundamental_discriminant(sign.get_si() * kernel.get_si());

    modular_classification c;
    c.fam = fam;
    c.weight = rational(u) + frac(v + k, 2);
    c.level = level;
    c.character = kronecker_char(d, level);
    c.q_prefactor24 = 3 * f.h();
    c.modular = f.h() % 8 == 0;
    return c;
}

std::vector<std::uint64_t> count_triangular_upto(const std::vector<long> &c, long nmax)
{
    require_positive(c);
    std::vector<variable> vars;
    for (long x : c) {
        vars.push_back(triangular_variable(x, nmax));
    }
    return run(std::move(vars), nmax);
}

std::vector<std::uint64_t> count_squares_signed_upto(const std::vector<long> &b, long nmax)
{
    require_positive(b);
    std::vector<variable> vars;
    for (long x : b) {
        vars.push_back(square_variable(x, nmax));
    }
    return run(std::move(vars), nmax);
}

std::vector<std::uint64_t> count_odd_squares_upto(const std::vector<long> &c, long nmax)
{
    require_positive(c);
    std::vector<variable> vars;
    for (long x : c) {
        vars.push_back(odd_square_variable(x, nmax));
    }
    return run(std::move(vars), nmax);
}

std::vector<std::uint64_t> count_hex_upto(const std::vector<long> &a, long nmax)
{
    require_positive(a);
    std::vector<variable> vars;
    for (long x : a) {
        vars.push_back(hex_variable(x, nmax));
    }
    return run(std::move(vars), nmax);
}

std::vector<std::uint64_t> count_mixed_upto(const mixed_form &f, long nmax)
{
    require_positive(f.hex);
    require_positive(f.squares);
    require_positive(f.tri);
    std::vector<variable> vars;
    for (long x : f.hex) {
        vars.push_back(hex_variable(x, nmax));
    }
    for (long x : f.squares) {
        vars.push_back(square_variable(x, nmax));
    }
    for (long x : f.tri) {
        vars.push_back(triangular_variable(x, nmax));
    }
    return run(std::move(vars), nmax);
}

std::uint64_t count_triangular(const std::vector<long> &c, long n)
{
    return n < 0 ? 0 : count_triangular_upto(c, n)[static_cast<std::size_t>(n)];
}

std::uint64_t count_squares_signed(const std::vector<long> &b, long n)
{
    return n < 0 ? 0 : count_squares_signed_upto(b, n)[static_cast<std::size_t>(n)];
}

std::uint64_t count_odd_squares(const std::vector<long> &c, long n)
{
    return n < 0 ? 0 : count_odd_squares_upto(c, n)[static_cast<std::size_t>(n)];
}

std::uint64_t count_hex(const std::vector<long> &a, long n)
{
    return n < 0 ? 0 : count_hex_upto(a, n)[static_cast<std::size_t>(n)];
}

std::uint64_t count_mixed(const mixed_form &f, long n)
{
    return n < 0 ? 0 : count_mixed_upto(f, n)[static_cast<std::size_t>(n)];
}

series24 gen_series(const mixed_form &f, long prec24)
{
    series24 s = series24::one(prec24);
    for (long a : f.hex) {
        s = s * hex_theta_series((prec24 + a - 1) / a).dilate(a);
    }
    for (long b : f.squares) {
        s = s * theta_series((prec24 + b - 1) / b).dilate(b);
    }
    for (long c : f.tri) {
        s = s * psi_series((prec24 + c - 1) / c).dilate(c);
    }
    return s.truncate(prec24);
}

series24 modular_series(const mixed_form &f, long prec24)
{
    const long shift = 3 * f.h();
    return gen_series(f, prec24 - shift).shift24(shift);
}

std::uint64_t ellipsoid_lattice_count(const std::vector<long> &c, const rational &r2)
{
    require_positive(c);
    // With w = 2z - 1 the condition reads sum c_i w_i^2 <= 4 r2, w odd.
    const rational bound = 4 * r2;
    if (sgn(bound) < 0) {
        return 0;
    }
    integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
    const long lim = fl.get_si();
    std::vector<variable> vars;
    for (long x : c) {
        variable v;
        for (long w = 1; x * w * w <= lim; w += 2) {
            v.values.emplace_back(x * w * w, 2);
        }
        vars.push_back(std::move(v));
    }
    const auto hist = run(std::move(vars), lim);
    std::uint64_t total = 0;
    for (auto x : hist) {
        total += x;
    }
    return total;
}

std::uint64_t ellipsoid_shell_sum(const std::vector<long> &c, const rational &r2, long first)
{
    long h = 0;
    for (long x : c) {
        h += x;
    }
    const rational top = r2 / 2 - frac(h, 8);
    if (sgn(top) < 0) {
        return 0;
    }
    integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), top.get_num_mpz_t(), top.get_den_mpz_t());
    const long last = fl.get_si();
    if (last < first) {
        return 0;
    }
    const auto counts = count_triangular_upto(c, last);
    std::uint64_t s = 0;
    for (long n = std::max(first, 0L); n <= last; ++n) {
        s += counts[static_cast<std::size_t>(n)];
    }
    return s << c.size();
}

} // namespace trimix
