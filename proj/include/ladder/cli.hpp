#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ladder {

// Command-line surface. args excludes the program name.
// Exit status: 0 success (predicate answers included), 1 a suite or
// verification reported failures, 2 usage, parse or range errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ladder
