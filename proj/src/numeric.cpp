#include "poisson/numeric.hpp"

namespace poisson {

IntegerMatrix integral_columns(const RationalMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j) {
    Integer l = 1;
    for (Index i = 0; i < m.rows(); ++i) l = boost::multiprecision::lcm(l, Integer(denominator(m(i, j))));
    Integer g = 0;
    for (Index i = 0; i < m.rows(); ++i) {
      out(i, j) = Integer(numerator(m(i, j))) * (l / Integer(denominator(m(i, j))));
      g = boost::multiprecision::gcd(g, out(i, j));
    }
    if (g > 1)
      for (Index i = 0; i < m.rows(); ++i) out(i, j) /= g;
  }
  return out;
}

IntegerMatrix integral_rows(const RationalMatrix& m) {
  return integral_columns(m.transpose()).transpose();
}

std::optional<SmallMatrix> to_small(const IntegerMatrix& m) {
  SmallMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) > INT64_MAX / 4 || m(i, j) < INT64_MIN / 4) return std::nullopt;
      out(i, j) = m(i, j).convert_to<std::int64_t>();
    }
  return out;
}

}  // namespace poisson
