#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace endgraph::cli {

// Runs the endgraph command line with argv[0] omitted. Returns the exit
// code: 0 success, 1 domain error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace endgraph::cli
