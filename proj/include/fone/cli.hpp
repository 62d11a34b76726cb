#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fone {

// Runs one CLI invocation. Returns the process exit code: 0 on success, 2 on
// validation or parse failures (witness JSON on err), 3 when a configured
// cap is exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace fone
