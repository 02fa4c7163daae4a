#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "poisson/laurent.hpp"
#include "poisson/matroid.hpp"
#include "poisson/report.hpp"
#include "poisson/strata.hpp"

namespace poisson {

/// Flat sum  sum_F T_{A^F}(x-1, 0) T_{A_F}(0, y-1) b^|F|  in (x, y, b), with
/// all b variables identified.
LaurentPolynomial denham_phi(const Matroid& m);

/// y^(-2 rk) sum_F y^(2|F|) T_{A^F}(x^2, 0) T_{A_F}(0, y^-2), in (x, y).
LaurentPolynomial hypertoric_poincare(const Matroid& m);

/// y^(-2 rk) Phi(x^2 + 1, y^-2 + 1, y^2), in (x, y).
LaurentPolynomial hypertoric_poincare_via_phi(const Matroid& m);

/// x^(2 rk) T(x^-2, 0), in x.
LaurentPolynomial q_ih(const Matroid& m);

/// y^(2 l - 2 rk) T(0, y^-2), in y.
LaurentPolynomial p_zero(const Matroid& m);
/// q_ih of the Gale dual, with x renamed to y.
LaurentPolynomial p_zero_via_dual(const Matroid& m);

/// One stratum per coloop-free flat F: dim 2 crk F, closure IC polynomial
/// q_ih(A^F), slice series p_zero(A_F), weight 2.
std::vector<StratumDatum> hypertoric_strata(const Matroid& m);

struct LaplacianReport {
  bool loop_free = true;
  bool coloop_free = true;
  /// Unset when the ground set is too large for the exhaustive minor check.
  std::optional<bool> unimodular;
  std::vector<Check> checks;

  bool hypotheses_hold() const { return loop_free && coloop_free && unimodular.value_or(true); }
  bool passed() const;
  nlohmann::json to_json() const;
};

/// Compares both forms of P and their y = 1 and x = 0 specializations.
/// Hypothesis violations are flagged; the comparisons still run.
LaplacianReport verify_laplacian(const Matroid& m);

}  // namespace poisson
