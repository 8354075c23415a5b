#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mapforge::cli {

/// Runs the command line given argv-style arguments (without the program
/// name). Returns the process exit status: 0 success, 1 validation failure,
/// 2 parse/IO/usage errors. Output is byte-deterministic for identical
/// inputs.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mapforge::cli
