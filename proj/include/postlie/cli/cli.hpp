#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace postlie::cli {

/// Exit statuses of `run`.
enum Exit : int { exit_ok = 0, exit_residual = 1, exit_usage = 2 };

/// Global arity ceiling from POSTLIE_MAX_ARITY, 5 when unset. Throws ParseError on a malformed value.
int arity_limit();

/// Arity used by checks when --max-arity is absent: 4, lowered to the limit and the structure cap.
inline constexpr int default_arity = 4;

/// Runs the command line `args` (without the program name). Plain-text reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace postlie::cli
