#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qiso {

inline constexpr const char* kVersion = "0.1.0";

/// Runs one command-line invocation (args excludes the program name). The report
/// goes to `out` in one write; usage and error text go to `err`.
/// Returns 0 on success, 1 when a check fails, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qiso
