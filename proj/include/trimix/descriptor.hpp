#ifndef TRIMIX_DESCRIPTOR_HPP
#define TRIMIX_DESCRIPTOR_HPP

#include <trimix/forms.hpp>

#include <string>
#include <string_view>

namespace trimix
{

/*
 * Text form of a mixed form: "<family>:<components>" with components split
 * by ';' in the order hex ; squares ; triangular, keeping only those the
 * family uses:
 *   tri:1^2 3^2
 *   st:1^1 2^1 ; 4^2
 *   lt:1^1 ; 2^1 6^1
 *   mixed:2^1 ; 1^2 ; 2^1 6^1
 * A bare base means exponent 1 and zero exponents drop the base. Mixed
 * components may be empty.
 */
struct form_descriptor {
    family fam;
    mixed_form form;

    std::string to_string() const;
};

form_descriptor parse_descriptor(std::string_view text);

// Powers "1^2 3^1" from a coefficient list.
std::string exponent_notation(const std::vector<long> &coeffs);
// Coefficient list from "1^2 3^1".
std::vector<long> parse_exponent_notation(std::string_view text);

} // namespace trimix

#endif
