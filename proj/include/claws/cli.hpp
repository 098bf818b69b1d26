#pragma once

// Command line front end.
//
//   claws --session FILE [--format text|json] <command> [flags]
//
// Exit codes: 0 computed, 1 verdict false or NotHomogeneous, 2 usage error or
// failed mathematical precondition.

#include <ostream>
#include <string>
#include <vector>

namespace claws {

/// Runs one command; `args` excludes the program name.  The report goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace claws
