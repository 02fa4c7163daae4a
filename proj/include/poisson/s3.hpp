#pragma once

#include <string>

#include "poisson/laurent.hpp"
#include "poisson/partitions.hpp"

namespace poisson {

/// Slice to the orbit of type mu inside the closure of the orbit of type
/// lambda in the nilpotent cone of gl_r; requires mu <= lambda.
class S3Variety {
 public:
  /// Throws SizeMismatch if the sizes differ, ParseError unless mu <= lambda.
  S3Variety(Partition lambda, Partition mu);

  const Partition& lambda() const { return lambda_; }
  const Partition& mu() const { return mu_; }
  int rank() const { return lambda_.size(); }
  /// 2 (n_mu - n_lambda)
  int dimension() const { return 2 * (mu_.n_stat() - lambda_.n_stat()); }

 private:
  Partition lambda_;
  Partition mu_;
};

/// Status attached to values that rest on an unproved hypothesis.
inline constexpr const char* kConditional = "conditional";
inline constexpr const char* kTheorem = "theorem";

/// x^(2(n_mu - n_lambda)) K_{lambda mu}(x^-2), in x.
LaurentPolynomial s3_ih_poly(const S3Variety& v);

/// y^(2(n_{lambda^t} - n_{mu^t})) K_{mu^t lambda^t}(y^-2), in y. Conditional.
LaurentPolynomial s3_p_zero(const S3Variety& v);

/// y^(2(n_{lambda^t} - n_mu)) sum_{nu in [mu, lambda]}
///   y^(2(n_nu - n_{nu^t})) K_{nu mu}(x^2) K_{nu^t lambda^t}(y^-2), in (x, y).
/// Conditional on the same hypothesis as s3_p_zero.
LaurentPolynomial s3_poincare(const S3Variety& v);

}  // namespace poisson
