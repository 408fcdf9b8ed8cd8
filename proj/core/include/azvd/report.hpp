#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace azvd {

struct Violation {
  std::string code;      // e.g. "missing-argument", "placement-order"
  std::string message;
  std::string location;  // path inside the checked object

  bool operator==(const Violation&) const = default;
};

/// Violations are data, not failures: validators collect all of them.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string code, std::string message, std::string location = {}) {
    violations.push_back({std::move(code), std::move(message), std::move(location)});
  }
  void merge(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
  bool contains(std::string_view code) const {
    for (const auto& v : violations)
      if (v.code == code) return true;
    return false;
  }
};

nlohmann::json to_json(const ValidationReport& report);
std::string to_text(const ValidationReport& report);

}  // namespace azvd
