#include <trimix/errors.hpp>
#include <trimix/qseries.hpp>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace trimix
{

namespace
{

std::vector<long> nonzero_positions(const std::vector<rational> &c)
{
    std::vector<long> out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (sgn(c[i]) != 0) {
            out.push_back(static_cast<long>(i));
        }
    }
    return out;
}

long isqrt(long n)
{
    if (n <= 0) {
        return 0;
    }
    long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) {
        --r;
    }
    while ((r + 1) * (r + 1) <= n) {
        ++r;
    }
    return r;
}

} // namespace

series24::series24(long prec24) : m_offset(prec24), m_prec(prec24) {}

series24::series24(long offset24, std::vector<rational> coeffs)
    : m_offset(offset24), m_prec(offset24 + static_cast<long>(coeffs.size())), m_coeffs(std::move(coeffs))
{
    canonicalize();
}

series24::series24(long offset24, std::vector<rational> coeffs, long prec24)
    : m_offset(offset24), m_prec(prec24), m_coeffs(std::move(coeffs))
{
    if (prec24 < offset24) {
        throw error("series24: prec24 below offset24");
    }
    m_coeffs.resize(static_cast<std::size_t>(prec24 - offset24));
    canonicalize();
}

series24 series24::one(long prec24)
{
    return monomial(0, rational(1), prec24);
}

series24 series24::monomial(long e24, const rational &c, long prec24)
{
    if (e24 >= prec24) {
        return series24(prec24);
    }
    std::vector<rational> v(static_cast<std::size_t>(prec24 - e24));
    v[0] = c;
    return series24(e24, std::move(v), prec24);
}

void series24::canonicalize()
{
    std::size_t lead = 0;
    while (lead < m_coeffs.size() && sgn(m_coeffs[lead]) == 0) {
        ++lead;
    }
    if (lead == m_coeffs.size()) {
        m_coeffs.clear();
        m_offset = m_prec;
        return;
    }
    if (lead > 0) {
        m_coeffs.erase(m_coeffs.begin(), m_coeffs.begin() + static_cast<long>(lead));
        m_offset += static_cast<long>(lead);
    }
}

rational series24::coeff24(long e24) const
{
    if (e24 >= m_prec) {
        throw insufficient_precision("coefficient of q^(" + std::to_string(e24) + "/24) requested, known below "
                                     + std::to_string(m_prec) + "/24");
    }
    if (e24 < m_offset) {
        return rational(0);
    }
    return m_coeffs[static_cast<std::size_t>(e24 - m_offset)];
}

std::vector<rational> series24::integer_coeffs(long count) const
{
    std::vector<rational> out;
    out.reserve(static_cast<std::size_t>(std::max(count, 0L)));
    for (long n = 0; n < count; ++n) {
        out.push_back(coeff(n));
    }
    return out;
}

bool series24::on_integer_grid() const
{
    for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
        if (sgn(m_coeffs[i]) != 0 && (m_offset + static_cast<long>(i)) % 24 != 0) {
            return false;
        }
    }
    return true;
}

series24 series24::operator-() const
{
    series24 r = *this;
    for (auto &c : r.m_coeffs) {
        c = -c;
    }
    return r;
}

series24 &series24::operator+=(const series24 &other)
{
    *this = add(*this, other);
    return *this;
}

series24 &series24::operator-=(const series24 &other)
{
    *this = sub(*this, other);
    return *this;
}

series24 &series24::operator*=(const rational &c)
{
    if (sgn(c) == 0) {
        *this = series24(m_prec);
        return *this;
    }
    for (auto &x : m_coeffs) {
        x *= c;
    }
    return *this;
}

series24 series24::dilate(long d) const
{
    if (d < 1) {
        throw error("dilate: factor must be positive");
    }
    if (d == 1) {
        return *this;
    }
    if (is_zero()) {
        return series24(m_prec * d);
    }
    std::vector<rational> v(static_cast<std::size_t>((m_prec - m_offset) * d));
    for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
        v[i * static_cast<std::size_t>(d)] = m_coeffs[i];
    }
    // Units below d*prec that are not multiples of d are zero by construction.
    return series24(m_offset * d, std::move(v), m_prec * d);
}

series24 series24::invert() const
{
    if (is_zero()) {
        throw zero_leading_coefficient("invert: series is zero through prec24 " + std::to_string(m_prec));
    }
    const long len = m_prec - m_offset;
    const auto nz = nonzero_positions(m_coeffs);
    const rational inv0 = 1 / m_coeffs[0];
    std::vector<rational> b(static_cast<std::size_t>(len));
    b[0] = inv0;
    rational s, t;
    for (long n = 1; n < len; ++n) {
        s = 0;
        for (std::size_t j = 1; j < nz.size() && nz[j] <= n; ++j) {
            const auto &bj = b[static_cast<std::size_t>(n - nz[j])];
            if (sgn(bj) != 0) {
                mpq_mul(t.get_mpq_t(), m_coeffs[static_cast<std::size_t>(nz[j])].get_mpq_t(), bj.get_mpq_t());
                s += t;
            }
        }
        b[static_cast<std::size_t>(n)] = -s * inv0;
    }
    return series24(-m_offset, std::move(b), len - m_offset);
}

series24 series24::pow(long r) const
{
    if (r < 0) {
        return invert().pow(-r);
    }
    if (r == 0) {
        return one(m_prec - m_offset);
    }
    series24 base = *this;
    series24 acc;
    bool have = false;
    while (r > 0) {
        if (r & 1) {
            acc = have ? mul(acc, base) : base;
            have = true;
        }
        r >>= 1;
        if (r > 0) {
            base = mul(base, base);
        }
    }
    return acc;
}

series24 series24::shift24(long k) const
{
    series24 r = *this;
    r.m_offset += k;
    r.m_prec += k;
    return r;
}

series24 series24::truncate(long prec24) const
{
    if (prec24 >= m_prec) {
        return *this;
    }
    if (prec24 <= m_offset) {
        return series24(prec24);
    }
    std::vector<rational> v(m_coeffs.begin(), m_coeffs.begin() + (prec24 - m_offset));
    return series24(m_offset, std::move(v), prec24);
}

series24 add(const series24 &a, const series24 &b)
{
    const long prec = std::min(a.prec24(), b.prec24());
    const long off = std::min(a.offset24(), b.offset24());
    if (off >= prec) {
        return series24(prec);
    }
    std::vector<rational> v(static_cast<std::size_t>(prec - off));
    for (long e = a.offset24(); e < prec && e < a.prec24(); ++e) {
        v[static_cast<std::size_t>(e - off)] += a.coeffs()[static_cast<std::size_t>(e - a.offset24())];
    }
    for (long e = b.offset24(); e < prec && e < b.prec24(); ++e) {
        v[static_cast<std::size_t>(e - off)] += b.coeffs()[static_cast<std::size_t>(e - b.offset24())];
    }
    return series24(off, std::move(v), prec);
}

series24 sub(const series24 &a, const series24 &b)
{
    return add(a, -b);
}

series24 mul(const series24 &a, const series24 &b)
{
    const long off = a.offset24() + b.offset24();
    // a = q^oa (known to pa), b = q^ob (known to pb): cross terms bound the result.
    const long prec = std::min(a.offset24() + b.prec24(), b.offset24() + a.prec24());
    if (a.is_zero() || b.is_zero() || prec <= off) {
        return series24(prec);
    }
    const long len = prec - off;
    const auto na = nonzero_positions(a.coeffs());
    const auto nb = nonzero_positions(b.coeffs());
    std::vector<rational> v(static_cast<std::size_t>(len));
    rational t;
    for (long i : na) {
        if (i >= len) {
            break;
        }
        const auto &ai = a.coeffs()[static_cast<std::size_t>(i)];
        for (long j : nb) {
            if (i + j >= len) {
                break;
            }
            mpq_mul(t.get_mpq_t(), ai.get_mpq_t(), b.coeffs()[static_cast<std::size_t>(j)].get_mpq_t());
            v[static_cast<std::size_t>(i + j)] += t;
        }
    }
    return series24(off, std::move(v), prec);
}

series24 scale(const series24 &a, const rational &c)
{
    series24 r = a;
    r *= c;
    return r;
}

series24 dilate(const series24 &a, long d)
{
    return a.dilate(d);
}

series24 invert(const series24 &a)
{
    return a.invert();
}

series24 operator+(const series24 &a, const series24 &b)
{
    return add(a, b);
}

series24 operator-(const series24 &a, const series24 &b)
{
    return sub(a, b);
}

series24 operator*(const series24 &a, const series24 &b)
{
    return mul(a, b);
}

series24 operator*(const rational &c, const series24 &a)
{
    return scale(a, c);
}

long first_difference(const series24 &a, const series24 &b, long bound24)
{
    if (a.prec24() < bound24 || b.prec24() < bound24) {
        throw insufficient_precision("equal_through: operands known below " + std::to_string(bound24) + "/24");
    }
    const long lo = std::min(a.offset24(), b.offset24());
    for (long e = lo; e < bound24; ++e) {
        if (a.coeff24(e) != b.coeff24(e)) {
            return e;
        }
    }
    return bound24;
}

bool equal_through(const series24 &a, const series24 &b, long bound24)
{
    return first_difference(a, b, bound24) == bound24;
}

series24 euler_series(long prec24)
{
    // Pentagonal numbers k(3k-1)/2 for k = 0, 1, -1, 2, -2, ... with sign (-1)^k.
    const long nmax = prec24 <= 0 ? -1 : (prec24 - 1) / 24;
    std::vector<rational> v(static_cast<std::size_t>(std::max(prec24, 0L)));
    for (long k = 0;; ++k) {
        bool any = false;
        for (long s : {k, -k}) {
            if (k == 0 && s < 0) {
                continue;
            }
            const long e = s * (3 * s - 1) / 2;
            if (e <= nmax) {
                v[static_cast<std::size_t>(24 * e)] = (k % 2 == 0) ? 1 : -1;
                any = true;
            }
        }
        if (!any) {
            break;
        }
    }
    return series24(0, std::move(v), std::max(prec24, 0L));
}

series24 eta_series(long prec24)
{
    return euler_series(prec24 - 1).shift24(1);
}

series24 theta_series(long prec24)
{
    std::vector<rational> v(static_cast<std::size_t>(std::max(prec24, 0L)));
    for (long n = 0; 24 * n * n < prec24; ++n) {
        v[static_cast<std::size_t>(24 * n * n)] += n == 0 ? 1 : 2;
    }
    return series24(0, std::move(v), std::max(prec24, 0L));
}

series24 psi_series(long prec24)
{
    std::vector<rational> v(static_cast<std::size_t>(std::max(prec24, 0L)));
    for (long n = 0; 24 * (n * (n + 1) / 2) < prec24; ++n) {
        v[static_cast<std::size_t>(24 * (n * (n + 1) / 2))] += 1;
    }
    return series24(0, std::move(v), std::max(prec24, 0L));
}

series24 hex_theta_series(long prec24)
{
    const long nmax = prec24 <= 0 ? -1 : (prec24 - 1) / 24;
    std::vector<rational> v(static_cast<std::size_t>(std::max(prec24, 0L)));
    // m^2 + mn + n^2 = ((m+n)^2 + m^2 + n^2)/2 >= (m^2 + n^2)/2, so a value
    // at most nmax forces m^2 <= 2*nmax and n^2 <= 2*nmax.
    const long box = isqrt(2 * std::max(nmax, 0L));
    for (long m = -box; m <= box; ++m) {
        for (long n = -box; n <= box; ++n) {
            const long q = m * m + m * n + n * n;
            if (q <= nmax) {
                v[static_cast<std::size_t>(24 * q)] += 1;
            }
        }
    }
    return series24(0, std::move(v), std::max(prec24, 0L));
}

} // namespace trimix
