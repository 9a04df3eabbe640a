#include <trimix/arith.hpp>

#include <cstdlib>
#include <vector>

namespace trimix
{

namespace
{

// (2/n) for odd n, indexed by n mod 8.
constexpr int tab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};

} // namespace

int kronecker(long long a, long long b)
{
    if (b == 0) {
        return (a == 1 || a == -1) ? 1 : 0;
    }
    if (a % 2 == 0 && b % 2 == 0) {
        return 0;
    }
    int v = 0;
    while (b % 2 == 0) {
        b /= 2;
        ++v;
    }
    int k = 1;
    if (v % 2 == 1) {
        k = tab2[a & 7];
    }
    if (b < 0) {
        b = -b;
        if (a < 0) {
            k = -k;
        }
    }
    a %= b;
    if (a < 0) {
        a += b;
    }
    while (a != 0) {
        v = 0;
        while (a % 2 == 0) {
            a /= 2;
            ++v;
        }
        if (v % 2 == 1) {
            k *= tab2[b & 7];
        }
        if (a & b & 2) {
            k = -k;
        }
        const long long r = a;
        a = b % r;
        b = r;
    }
    return b == 1 ? k : 0;
}

kronecker_char kronecker_char::of(long long m)
{
    return {m, std::llabs(m)};
}

int kronecker_char::operator()(long long n) const
{
    if (gcd_ll(n, modulus) != 1) {
        return 0;
    }
    return kronecker(top, n);
}

std::string kronecker_char::label() const
{
    if (top == 1) {
        return "1";
    }
    return "chi" + std::to_string(top);
}

long long fundamental_discriminant(long long m)
{
    if (m == 0) {
        return 0;
    }
    const long long sign = m < 0 ? -1 : 1;
    long long n = std::llabs(m);
    for (long long p = 2; p * p <= n; ++p) {
        while (n % (p * p) == 0) {
            n /= p * p;
        }
    }
    const long long s = sign * n;
    return ((s % 4) + 4) % 4 == 1 ? s : 4 * s;
}

bool same_character_mod(const kronecker_char &a, const kronecker_char &b, long long n)
{
    const long long period = lcm_ll(lcm_ll(n, 4 * std::llabs(a.top)), 4 * std::llabs(b.top));
    for (long long x = 1; x <= period; ++x) {
        if (gcd_ll(x, n) != 1) {
            continue;
        }
        if (a(x) != b(x)) {
            return false;
        }
    }
    return true;
}

integer sigma(unsigned r, long long n)
{
    integer s = 0;
    if (n <= 0) {
        return s;
    }
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d != 0) {
            continue;
        }
        s += ipow(integer(static_cast<long>(d)), r);
        const long long e = n / d;
        if (e != d) {
            s += ipow(integer(static_cast<long>(e)), r);
        }
    }
    return s;
}

integer sigma_div(unsigned r, long long num, long long den)
{
    if (den == 0 || num % den != 0) {
        return 0;
    }
    return sigma(r, num / den);
}

integer gen_divisor_sum(unsigned r, const kronecker_char &chi, const kronecker_char &psi, long long n)
{
    integer s = 0;
    if (n <= 0) {
        return s;
    }
    for (long long d = 1; d <= n; ++d) {
        if (n % d != 0) {
            continue;
        }
        const int w = psi(d) * chi(n / d);
        if (w != 0) {
            s += w * ipow(integer(static_cast<long>(d)), r);
        }
    }
    return s;
}

integer sharp_sigma3(long long n)
{
    integer s = 0;
    for (long long d = 1; d <= n; ++d) {
        if (n % d == 0 && (n / d) % 2 == 1) {
            s += ipow(integer(static_cast<long>(d)), 3);
        }
    }
    return s;
}

rational bernoulli(unsigned k)
{
    std::vector<rational> b(k + 1);
    b[0] = 1;
    integer c;
    for (unsigned m = 1; m <= k; ++m) {
        rational s = 0;
        for (unsigned j = 0; j < m; ++j) {
            mpz_bin_uiui(c.get_mpz_t(), m + 1, j);
            s += rational(c) * b[j];
        }
        b[m] = -s / (m + 1);
    }
    return b[k];
}

rational bernoulli_poly(unsigned k, const rational &x)
{
    rational s = 0;
    integer c;
    rational xp = 1;
    for (unsigned jj = 0; jj <= k; ++jj) {
        const unsigned j = k - jj;
        mpz_bin_uiui(c.get_mpz_t(), k, j);
        s += rational(c) * bernoulli(j) * xp;
        xp *= x;
    }
    return s;
}

rational gen_bernoulli(unsigned k, const kronecker_char &psi)
{
    const long long n = psi.modulus;
    rational s = 0;
    for (long long a = 1; a <= n; ++a) {
        const int w = psi(a);
        if (w != 0) {
            s += w * bernoulli_poly(k, frac(static_cast<long>(a), static_cast<long>(n)));
        }
    }
    return s * rational(ipow(integer(static_cast<long>(n)), k - 1));
}

} // namespace trimix
