#include <trimix/eisenstein.hpp>
#include <trimix/errors.hpp>

#include <type_traits>

namespace trimix
{

unsigned eisenstein_spec::weight() const
{
    return std::visit(
        [](const auto &x) -> unsigned {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, classical_eisenstein> || std::is_same_v<T, twisted_eisenstein>) {
                return x.k;
            } else {
                return 2;
            }
        },
        kind);
}

std::string eisenstein_spec::label() const
{
    std::string base = std::visit(
        [](const auto &x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, classical_eisenstein>) {
                return "E" + std::to_string(x.k);
            } else if constexpr (std::is_same_v<T, quasi_e2>) {
                return "E2";
            } else if constexpr (std::is_same_v<T, phi_ab>) {
                return "phi_" + std::to_string(x.a) + "_" + std::to_string(x.b);
            } else {
                return "E" + std::to_string(x.k) + "_" + x.chi.label() + "_" + x.psi.label();
            }
        },
        kind);
    if (dilation != 1) {
        base += "_at_" + std::to_string(dilation);
    }
    return base;
}

void validate(const eisenstein_spec &s)
{
    if (s.dilation < 1) {
        throw error("eisenstein: dilation must be positive");
    }
    if (const auto *p = std::get_if<phi_ab>(&s.kind)) {
        if (p->a < 1 || p->a >= p->b) {
            throw invalid_pair("phi(a,b) requires 1 <= a < b, got (" + std::to_string(p->a) + ","
                               + std::to_string(p->b) + ")");
        }
    }
    if (const auto *c = std::get_if<classical_eisenstein>(&s.kind)) {
        if (c->k < 4 || c->k % 2 != 0) {
            throw parity_violation("classical E_k needs even k >= 4");
        }
    }
    if (const auto *t = std::get_if<twisted_eisenstein>(&s.kind)) {
        const int lhs = t->chi.parity() * t->psi.parity();
        const int rhs = t->k % 2 == 0 ? 1 : -1;
        if (lhs != rhs) {
            throw parity_violation("chi(-1) psi(-1) != (-1)^k for " + s.label());
        }
    }
}

rational eisenstein_coeff(const eisenstein_spec &s, long n)
{
    return std::visit(
        [n](const auto &x) -> rational {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, classical_eisenstein>) {
                if (n == 0) {
                    return 1;
                }
                return -rational(2 * x.k) / bernoulli(x.k) * rational(sigma(x.k - 1, n));
            } else if constexpr (std::is_same_v<T, quasi_e2>) {
                if (n == 0) {
                    return 1;
                }
                return rational(-24 * sigma(1, n));
            } else if constexpr (std::is_same_v<T, phi_ab>) {
                if (n == 0) {
                    return 1;
                }
                // b E2(bt) - a E2(at): q^n picks sigma(n/b) and sigma(n/a).
                const integer v = -24 * x.b * sigma_div(1, n, x.b) + 24 * x.a * sigma_div(1, n, x.a);
                return frac(v, x.b - x.a);
            } else {
                if (n == 0) {
                    if (x.chi.is_trivial_symbol()) {
                        return -gen_bernoulli(x.k, x.psi) / (2 * x.k);
                    }
                    return 0;
                }
                return rational(gen_divisor_sum(x.k - 1, x.chi, x.psi, n));
            }
        },
        s.kind);
}

series24 expand(const eisenstein_spec &s, long prec24)
{
    validate(s);
    std::vector<rational> v(static_cast<std::size_t>(std::max(prec24, 0L)));
    for (long n = 0; 24 * n * s.dilation < prec24; ++n) {
        v[static_cast<std::size_t>(24 * n * s.dilation)] = eisenstein_coeff(s, n);
    }
    return series24(0, std::move(v), std::max(prec24, 0L));
}

} // namespace trimix
