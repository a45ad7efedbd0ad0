#include "bezspline/error.hpp"

#include <array>
#include <charconv>

namespace bezspline {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::Domain: return "domain";
        case ErrorCode::Validation: return "validation";
        case ErrorCode::Singular: return "singular";
        case ErrorCode::Syntax: return "syntax";
        case ErrorCode::Arity: return "arity";
        case ErrorCode::NonFinite: return "non_finite";
        case ErrorCode::NonIncreasing: return "non_increasing";
        case ErrorCode::Io: return "io";
    }
    return "unknown";
}

std::string format_number(double value) {
    std::array<char, 32> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{}) return "nan";
    return std::string(buf.data(), end);
}

}  // namespace bezspline
