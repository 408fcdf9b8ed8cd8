#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  // Prefer the installed data; fall back to the source tree for build-tree runs.
  std::filesystem::path catalog = AZVD_INSTALLED_CATALOG;
  if (!std::filesystem::exists(catalog / "catalog.json")) catalog = AZVD_SOURCE_CATALOG;
  return azvd::cli::run(args, std::cout, std::cerr, catalog);
}
