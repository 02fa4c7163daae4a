#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "poisson/laurent.hpp"

namespace poisson {

/// One exact identity: passes iff both sides are equal as polynomials.
struct Check {
  std::string name;
  LaurentPolynomial lhs;
  LaurentPolynomial rhs;

  bool passed() const { return lhs == rhs; }
  nlohmann::json to_json() const;
};

struct Report {
  std::string subject;
  std::vector<Check> checks;

  bool passed() const;
  nlohmann::json to_json() const;
};

}  // namespace poisson
