#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bezspline {

enum class ErrorCode {
    Domain,         ///< argument outside the mathematical domain (tau order, alpha in (0,1), eval range)
    Validation,     ///< admissible mathematically but rejected by policy (strict alpha range, arity)
    Singular,       ///< zero pivot during tridiagonal elimination
    Syntax,         ///< malformed JSON/CSV
    Arity,          ///< wrong number of fields or mismatched array lengths
    NonFinite,      ///< NaN or infinity in input
    NonIncreasing,  ///< tau not strictly increasing
    Io,             ///< file could not be read or written
};

std::string_view to_string(ErrorCode code) noexcept;

/// Error raised by every fallible operation in the library.
///
/// `location()` names the offending item when one exists: an array element
/// such as "alpha[3]", a CSV position such as "line 4", or a row index.
class SplineError : public std::runtime_error {
public:
    SplineError(ErrorCode code, std::string message, std::string location = {})
        : std::runtime_error(std::move(message)), code_(code), location_(std::move(location)) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }
    [[nodiscard]] const std::string& location() const noexcept { return location_; }

private:
    ErrorCode code_;
    std::string location_;
};

/// Shortest decimal text that parses back to the same double.
std::string format_number(double value);

}  // namespace bezspline
