#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace repbox::cli {

/// Runs one command line (without the program name). JSON results go to `out`
/// (or to the -o path), warnings to `err`. Returns 0 on success, 1 on domain
/// errors, 2 when a resource guard refuses the input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace repbox::cli
