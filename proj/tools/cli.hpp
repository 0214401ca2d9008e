#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fdsum::cli {

inline constexpr const char* kSchemaVersion = "1";

/// Runs the command line. Exit codes: 0 success, 1 computation error or
/// failed check, 2 usage error (usage text goes to `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fdsum::cli
