#ifndef UALG_ERRORS_HPP
#define UALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ualg {

/// Invalid user input: malformed files, out-of-range elements, size mismatches.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A computation whose postcondition is only guaranteed under hypothesis
/// flags detected that the postcondition fails on this algebra.
struct hypothesis_violation : std::runtime_error {
    explicit hypothesis_violation(const std::string& what) : std::runtime_error(what) {}
};

/// Congruence enumeration exceeded the configured cap (CSPEC_MAX_CON).
struct enumeration_limit_error : std::runtime_error {
    explicit enumeration_limit_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ualg

#endif
