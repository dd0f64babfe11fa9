// Command-line front end.  run() is the whole program; main() just
// forwards, so tests can drive the CLI in-process.
// Exit codes: 0 success / verified, 1 counterexample found, 2 usage error.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lacm {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lacm
