#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qplane::cli {

// Runs one command line (args excludes the program name). Results go to
// `out`; failures go to `err` as a single JSON line. Returns 0 on success, 1
// on bad input, 2 when an internal consistency check fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qplane::cli
