#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lifecycle {

// Command-line front end. args excludes the program name. Results go to
// out, diagnostics to err. Exit codes: 0 success, 1 validation/parse error,
// 2 numerical error (singular or multichain), 3 usage error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace lifecycle
