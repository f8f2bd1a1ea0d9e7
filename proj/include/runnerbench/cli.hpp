#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace runnerbench::cli {

/// Entry point behind the runnerbench binary; `args` excludes the program
/// name. Human-readable summaries go to `out`, diagnostics to `err`, and
/// machine output only to files named by flags.
///
/// Exit codes: 0 success, 1 usage error, 2 runtime error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace runnerbench::cli
