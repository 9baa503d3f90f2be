#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "tansec/algebra/big_float.hpp"

namespace tansec::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,
  kDomainError = 2,
  kInternalError = 3,
};

/// Environment variable consulted for the default --precision-bits.
inline constexpr const char* kPrecisionEnv = "TANSEC_PRECISION_BITS";

/// Dispatches a full argument vector (args[0] is the program name).
/// Data goes to `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Parses "1.25", "3/7", "pi", "-pi/2", "3*pi/4", "0.5*pi".
BigFloat parse_point(std::string_view text, Precision precision);

}  // namespace tansec::cli
