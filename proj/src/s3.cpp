#include "poisson/s3.hpp"

#include "poisson/errors.hpp"
#include "poisson/parallel.hpp"

namespace poisson {

S3Variety::S3Variety(Partition lambda, Partition mu) : lambda_(std::move(lambda)), mu_(std::move(mu)) {
  if (!dominance_leq(mu_, lambda_))
    throw ParseError("mu = " + mu_.to_string() + " is not dominated by lambda = " + lambda_.to_string());
}

namespace {

LaurentPolynomial power(const char* var, int e) { return LaurentPolynomial::monomial({var}, {e}); }

}  // namespace

LaurentPolynomial s3_ih_poly(const S3Variety& v) {
  const auto k = kostka(v.lambda(), v.mu()).substitute("t", power("x", -2));
  return (power("x", v.dimension()) * k).with_variables({"x"});
}

LaurentPolynomial s3_p_zero(const S3Variety& v) {
  const auto lt = v.lambda().conjugate(), mt = v.mu().conjugate();
  const auto k = kostka(mt, lt).substitute("t", power("y", -2));
  return (power("y", 2 * (lt.n_stat() - mt.n_stat())) * k).with_variables({"y"});
}

LaurentPolynomial s3_poincare(const S3Variety& v) {
  const auto lt = v.lambda().conjugate();
  const auto x2 = power("x", 2);
  const auto terms = parallel_map(interval(v.mu(), v.lambda()), [&](const Partition& nu) {
    const auto nt = nu.conjugate();
    return power("y", 2 * (nu.n_stat() - nt.n_stat())) *
           kostka(nu, v.mu()).substitute("t", x2) *
           kostka(nt, lt).substitute("t", power("y", -2));
  });
  LaurentPolynomial sum = LaurentPolynomial::monomial({"x", "y"}, {0, 0}, 0);
  for (const auto& t : terms) sum += t;
  return (power("y", 2 * (lt.n_stat() - v.mu().n_stat())) * sum).with_variables({"x", "y"});
}

}  // namespace poisson
