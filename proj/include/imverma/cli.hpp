#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace imverma::cli {

inline constexpr int kSchemaVersion = 1;

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 when the library rejects the input, 2 on usage errors.
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace imverma::cli
