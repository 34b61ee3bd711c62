#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rankrange {

/// Runs one `rankrange` invocation. `args` excludes the program name. Results
/// go to `out` as one JSON object; errors go to `err` as {"error", "message"}
/// with a nonzero return.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace rankrange
