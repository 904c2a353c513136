#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace resloc::cli {

// Exit statuses.
constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kMath = 3;

// Runs one subcommand. `args` excludes the program name. Reports go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace resloc::cli
