#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qes {

// Whole command line front end; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qes
