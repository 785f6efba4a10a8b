#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hgp {

// Runs one CLI invocation (args without the program name). Exit code 0 on
// pass/found, 1 on fail/not-found, 2 on input errors. Machine-readable JSON
// goes to out; human summaries and search progress go to err.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hgp
