#include "poisson/strata.hpp"

#include <string>

#include "poisson/errors.hpp"

namespace poisson {

LaurentPolynomial assemble_poincare(const std::vector<StratumDatum>& strata) {
  LaurentPolynomial total = LaurentPolynomial::monomial({"x", "y"}, {0, 0}, 0);
  if (strata.empty()) return total;
  const int n = strata.front().weight_n;
  const auto x_inv = LaurentPolynomial::monomial({"x"}, {-1});
  for (const auto& s : strata) {
    if (s.weight_n != n)
      throw InconsistentWeight("strata have weights " + std::to_string(n) + " and " +
                               std::to_string(s.weight_n));
    if ((n * s.dim_S) % 2)
      throw InconsistentWeight("n * dim S must be even, got " + std::to_string(n * s.dim_S));
    const auto shift = LaurentPolynomial::monomial({"x", "y"}, {s.dim_S, -n * s.dim_S / 2});
    total += shift * s.ih_poly.substitute("x", x_inv) * s.slice_p0;
  }
  return total.with_variables({"x", "y"});
}

bool is_valid(const StratumDatum& s) {
  if (s.dim_S < 0 || s.dim_S % 2) return false;
  if (s.weight_n <= 0 || s.local_system_rank <= 0) return false;
  return !s.trivial_local_system || s.ih_poly.constant_term() == 1;
}

}  // namespace poisson
