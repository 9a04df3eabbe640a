#ifndef TRIMIX_EISENSTEIN_HPP
#define TRIMIX_EISENSTEIN_HPP

#include <trimix/arith.hpp>
#include <trimix/qseries.hpp>

#include <string>
#include <variant>

namespace trimix
{

// E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n, k >= 4 even.
struct classical_eisenstein {
    unsigned k;
};

// E_2 = 1 - 24 sum sigma(n) q^n.
struct quasi_e2 {
};

// (b E_2(b t) - a E_2(a t)) / (b - a).
struct phi_ab {
    long a;
    long b;
};

// -B_{k,psi}/(2k) [chi trivial] + sum sigma_{k-1;chi,psi}(n) q^n.
struct twisted_eisenstein {
    unsigned k;
    kronecker_char chi;
    kronecker_char psi;
};

struct eisenstein_spec {
    std::variant<classical_eisenstein, quasi_e2, phi_ab, twisted_eisenstein> kind;
    // Expansion is taken at d t.
    long dilation = 1;

    eisenstein_spec dilated(long d) const
    {
        eisenstein_spec s = *this;
        s.dilation *= d;
        return s;
    }
    unsigned weight() const;
    // "E4", "E2_at_3", "phi_1_6", "E3_1_chi-3_at_2".
    std::string label() const;
};

// Checks parity and pair ordering; throws parity_violation / invalid_pair.
void validate(const eisenstein_spec &s);

// Coefficient of q^n in the undilated series.
rational eisenstein_coeff(const eisenstein_spec &s, long n);

series24 expand(const eisenstein_spec &s, long prec24);

} // namespace trimix

#endif
