#include "poisson/report.hpp"

namespace poisson {

nlohmann::json Check::to_json() const {
  return {{"name", name},
          {"lhs", lhs.to_string()},
          {"rhs", rhs.to_string()},
          {"difference", (lhs - rhs).to_string()},
          {"passed", passed()}};
}

bool Report::passed() const {
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return true;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["subject"] = subject;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) j["checks"].push_back(c.to_json());
  j["passed"] = passed();
  return j;
}

}  // namespace poisson
