#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace gathering::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInvalidArguments = 2,
  kIoFailure = 3,
};

// Runs `sim`, `sweep` or `bounds`. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Where `sweep --out PATH` writes its fit JSON: PATH with the extension
// replaced by `.fit.json`.
std::filesystem::path fit_path_for(const std::filesystem::path& summaries_path);

}  // namespace gathering::cli
