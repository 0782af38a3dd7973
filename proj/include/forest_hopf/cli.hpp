#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace forest_hopf {

// Runs the command-line driver on pre-split arguments (argv without the
// program name).  Returns 0 on success, 1 when a `check` run found an
// identity violation, 2 on usage, parse or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace forest_hopf
