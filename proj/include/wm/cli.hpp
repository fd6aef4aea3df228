#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wm/errors.hpp"

namespace wm::cli {

/// 0 success, 2 parameter validation, 3 numerical failure, 4 I/O.
int exit_code(ErrorCategory category) noexcept;

/// Runs one subcommand. `args` excludes the program name. Output goes to
/// `out`; failures print a single "error: <reason>: <message>" line to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wm::cli
