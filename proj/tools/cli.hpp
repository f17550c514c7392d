#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oscloc::cli {

/// Runs one `oscloc <subcommand> ...` invocation (args exclude the program
/// name). Returns the process exit status: 0 on success, 2/3/4 for config,
/// numerical and statistical-validity errors, 1 for anything unexpected.
/// Errors are reported on `err` as a single JSON line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oscloc::cli
