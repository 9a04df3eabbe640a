#include <trimix/descriptor.hpp>
#include <trimix/errors.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace trimix
{

namespace
{

std::string trim(std::string_view s)
{
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) {
        ++a;
    }
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) {
        --b;
    }
    return std::string(s.substr(a, b - a));
}

long parse_positive(const std::string &s, bool allow_zero)
{
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
        throw parse_error("expected a nonnegative integer, got '" + s + "'");
    }
    const long v = std::stol(s);
    if (v == 0 && !allow_zero) {
        throw parse_error("base must be positive");
    }
    return v;
}

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

} // namespace

std::vector<long> parse_exponent_notation(std::string_view text)
{
    std::vector<long> out;
    std::istringstream is{std::string(text)};
    std::string tok;
    while (is >> tok) {
        const auto caret = tok.find('^');
        const long base = parse_positive(tok.substr(0, caret), false);
        const long e = caret == std::string::npos ? 1 : parse_positive(tok.substr(caret + 1), true);
        for (long i = 0; i < e; ++i) {
            out.push_back(base);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string exponent_notation(const std::vector<long> &coeffs)
{
    std::map<long, long> counts;
    for (long c : coeffs) {
        ++counts[c];
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[b, e] : counts) {
        if (!first) {
            os << ' ';
        }
        first = false;
        os << b << '^' << e;
    }
    return os.str();
}

form_descriptor parse_descriptor(std::string_view text)
{
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw parse_error("descriptor needs a family prefix (tri:, st:, lt:, mixed:)");
    }
    const std::string fam = trim(text.substr(0, colon));
    const auto parts = split(text.substr(colon + 1), ';');
    form_descriptor d;
    auto expect = [&](std::size_t n) {
        if (parts.size() != n) {
            throw parse_error("family '" + fam + "' takes " + std::to_string(n) + " ';'-separated components, got "
                              + std::to_string(parts.size()));
        }
    };
    if (fam == "tri") {
        expect(1);
        d.fam = family::tri;
        d.form.tri = parse_exponent_notation(parts[0]);
    } else if (fam == "st") {
        expect(2);
        d.fam = family::st;
        d.form.squares = parse_exponent_notation(parts[0]);
        d.form.tri = parse_exponent_notation(parts[1]);
    } else if (fam == "lt") {
        expect(2);
        d.fam = family::lt;
        d.form.hex = parse_exponent_notation(parts[0]);
        d.form.tri = parse_exponent_notation(parts[1]);
    } else if (fam == "mixed") {
        expect(3);
        d.fam = family::mixed;
        d.form.hex = parse_exponent_notation(parts[0]);
        d.form.squares = parse_exponent_notation(parts[1]);
        d.form.tri = parse_exponent_notation(parts[2]);
    } else {
        throw parse_error("unknown family '" + fam + "'");
    }
    if (d.form.hex.empty() && d.form.squares.empty() && d.form.tri.empty()) {
        throw parse_error("descriptor has no variables");
    }
    return d;
}

std::string form_descriptor::to_string() const
{
    switch (fam) {
        case family::tri:
            return "tri:" + exponent_notation(form.tri);
        case family::st:
            return "st:" + exponent_notation(form.squares) + " ; " + exponent_notation(form.tri);
        case family::lt:
            return "lt:" + exponent_notation(form.hex) + " ; " + exponent_notation(form.tri);
        case family::mixed:
            return "mixed:" + exponent_notation(form.hex) + " ; " + exponent_notation(form.squares) + " ; "
                   + exponent_notation(form.tri);
    }
    return "";
}

} // namespace trimix
