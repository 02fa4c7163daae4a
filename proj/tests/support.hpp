#pragma once

#include <string>

#include "poisson/laurent.hpp"

namespace test_support {

using poisson::LaurentPolynomial;

inline LaurentPolynomial var(const std::string& name) { return LaurentPolynomial::variable(name); }

inline LaurentPolynomial mono(const std::string& name, int e, int c = 1) {
  return LaurentPolynomial::monomial({name}, {e}, c);
}

inline LaurentPolynomial mono2(int ex, int ey, int c = 1) {
  return LaurentPolynomial::monomial({"x", "y"}, {ex, ey}, c);
}

}  // namespace test_support

namespace poisson {
// Lets doctest print polynomials in failure messages.
inline doctest::String toString(const LaurentPolynomial& p) { return p.to_string().c_str(); }
}  // namespace poisson
