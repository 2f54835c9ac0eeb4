#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dend {

/// Entry point behind the `dend` binary.  `args` excludes the program name.
/// Exit codes: 0 success; 1 strict-mode failure (a REFUTED verdict or a missed
/// completeness point); 2 bad input, flags, or catalog; 3 resource limits.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dend
