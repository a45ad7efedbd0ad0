#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace bezspline::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kInvalid = 2;
inline constexpr int kIoError = 3;

/// Runs the command line `args` (args[0] is the program name). Input "-" reads
/// `in`; output "-" writes `out`. Messages go to `err`.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bezspline::cli
