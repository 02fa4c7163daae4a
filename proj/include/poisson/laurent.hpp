#pragma once

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "poisson/numeric.hpp"

namespace poisson {

/// Sparse Laurent polynomial with arbitrary-precision integer coefficients
/// in an ordered list of named variables.
///
/// Terms are kept in descending lexicographic order of their exponent
/// vectors (with respect to the variable order), which is also the order
/// used by `to_string` and `to_json`. No stored coefficient is ever zero.
/// Binary operations on polynomials over different variable lists work on
/// the union of the lists: the left operand's variables first, followed by
/// the right operand's new ones.
class LaurentPolynomial {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Integer, std::greater<>>;

  LaurentPolynomial() = default;
  LaurentPolynomial(int c);  // NOLINT: integers embed as constants
  LaurentPolynomial(const Integer& c);  // NOLINT

  static LaurentPolynomial variable(const std::string& name);
  static LaurentPolynomial monomial(std::vector<std::string> vars,
                                    Exponents exps, Integer coef = 1);
  /// Single-variable polynomial sum_i coefs[i] * name^(low + i).
  static LaurentPolynomial univariate(const std::string& name,
                                      const std::vector<Integer>& coefs,
                                      int low = 0);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Position of a variable, if present in the variable list.
  std::optional<std::size_t> index_of(const std::string& name) const;

  /// Largest / smallest exponent of `name` over all terms (0 if absent or zero).
  int max_degree(const std::string& name) const;
  int min_degree(const std::string& name) const;

  /// Coefficient of the monomial given as name -> exponent (others zero).
  Integer coefficient(const std::map<std::string, int>& monomial) const;
  /// Coefficient of the constant term.
  Integer constant_term() const;

  /// Re-expresses the polynomial over `vars`, which must contain every
  /// variable that occurs with a nonzero exponent. Unused variables are
  /// dropped.
  LaurentPolynomial with_variables(const std::vector<std::string>& vars) const;
  /// Drops variables that occur with exponent zero in every term.
  LaurentPolynomial trimmed() const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator*=(const LaurentPolynomial& rhs);

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a += b;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a -= b;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

  /// Equality is semantic: variable lists are aligned first.
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b);

  LaurentPolynomial pow(unsigned e) const;

  /// Replaces `var` by `q`. Negative powers of `var` are allowed only when q
  /// is an invertible monomial (coefficient +-1).
  LaurentPolynomial substitute(const std::string& var, const LaurentPolynomial& q) const;

  /// Exact value at a rational point. Every variable occurring with a
  /// nonzero exponent must be assigned.
  Rational evaluate(const std::map<std::string, Rational>& point) const;

  /// Human-readable form such as "x^4*y^-4 + x^2*y^-4 + 1".
  std::string to_string() const;
  nlohmann::json to_json() const;
  static LaurentPolynomial from_json(const nlohmann::json& j);

 private:
  std::vector<std::string> vars_;
  TermMap terms_;

  void add_term(const Exponents& e, const Integer& c);
  /// Rewrites both *this and `other` over the union of their variable lists.
  void unify(LaurentPolynomial& other);
};

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p);

/// Exact division of univariate Laurent polynomials in `var`. Returns
/// nullopt if the quotient is not a Laurent polynomial with integer
/// coefficients.
std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& num,
                                              const LaurentPolynomial& den,
                                              const std::string& var);

/// Quotient numerator/denominator of Laurent polynomials. Used for Molien
/// sums; only the univariate case needs reduction to a polynomial.
class RationalFunction {
 public:
  RationalFunction() : num_(0), den_(1) {}
  RationalFunction(LaurentPolynomial num, LaurentPolynomial den);
  RationalFunction(const LaurentPolynomial& p) : num_(p), den_(1) {}  // NOLINT

  const LaurentPolynomial& numerator() const { return num_; }
  const LaurentPolynomial& denominator() const { return den_; }

  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) {
    return a += b;
  }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) {
    return a *= b;
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

  /// Cross-multiplication equality.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  /// Reduces a univariate rational function to a Laurent polynomial;
  /// nullopt when the denominator does not divide the numerator.
  std::optional<LaurentPolynomial> to_polynomial(const std::string& var) const;

 private:
  LaurentPolynomial num_;
  LaurentPolynomial den_;
};

}  // namespace poisson
