#include "azvd/report.hpp"

namespace azvd {

nlohmann::json to_json(const ValidationReport& report) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : report.violations)
    out.push_back({{"code", v.code}, {"message", v.message}, {"location", v.location}});
  return out;
}

std::string to_text(const ValidationReport& report) {
  std::string out;
  for (const auto& v : report.violations) {
    out += v.code;
    if (!v.location.empty()) out += " at " + v.location;
    out += ": " + v.message + '\n';
  }
  out += report.ok() ? "ok\n" : std::to_string(report.violations.size()) + " violation(s)\n";
  return out;
}

}  // namespace azvd
