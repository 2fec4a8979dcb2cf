#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cayci::cli {

/// Runs one command line (without the program name), reading a JSON payload
/// from --input FILE, --json TEXT or `in`, and writing one JSON document to
/// `out`. Returns 0 when decided, 1 for a negative answer to a yes/no query,
/// 2 for invalid input.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out);

}  // namespace cayci::cli
