#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace azvd::cli {

inline constexpr int kOk = 0;
inline constexpr int kValidationFailure = 1;
inline constexpr int kUsageError = 2;

/// Catalog directory: `--catalog`, else $AZVD_CATALOG, else `fallback`.
std::filesystem::path catalog_dir(const std::string& flag, const std::filesystem::path& fallback);

/// Runs the `azvd` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::filesystem::path& default_catalog);

}  // namespace azvd::cli
