#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liouville {

int run_cli(int argc, char** argv);
// Testable entry point: argument vector without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liouville
