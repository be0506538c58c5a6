#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gaugekit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command line (without the program name), writing the JSON
/// result, or an error record, to `out` or to the --out file.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace gaugekit::cli
