#pragma once

#include <map>
#include <string>
#include <vector>

#include "poisson/laurent.hpp"
#include "poisson/numeric.hpp"
#include "poisson/partitions.hpp"

namespace poisson {

enum class Family { A, B, G };

/// A_n (1 <= n <= 5), B2 or G2.
struct CartanType {
  Family family = Family::A;
  int rank = 1;

  /// Parses "A3", "B2", "G2" (case-insensitive); UnsupportedType otherwise.
  static CartanType parse(const std::string& text);
  std::string name() const;

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

struct ConjugacyClass {
  std::size_t representative = 0;  // index into WeylGroup::elements()
  std::size_t size = 0;
  /// Cycle type of the permutation (type A only).
  Partition cycle_type;
};

/// Irreducible character as a class function (integer valued).
struct Character {
  std::string label;
  std::vector<long long> values;  // indexed like WeylGroup::classes()

  long long degree() const { return values.front(); }
};

/// Finite Weyl group acting on the reflection representation, written in the
/// basis of simple roots, together with its character table.
class WeylGroup {
 public:
  /// Throws UnsupportedType.
  static WeylGroup build(const CartanType& type);

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const std::vector<SmallMatrix>& generators() const { return generators_; }
  const std::vector<SmallMatrix>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  /// Fundamental degrees d_i.
  const std::vector<int>& degrees() const { return degrees_; }
  /// Number of reflections, sum (d_i - 1).
  int reflection_count() const;

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  /// Class index of each element.
  std::size_t class_of(std::size_t element) const { return class_of_[element]; }
  const std::vector<Character>& irreducibles() const { return irreducibles_; }

  /// Looks up a character by label. Type A labels are partitions of n+1
  /// ("2,1", "1^3"); the dihedral labels are triv, sigma, tau, tau_sigma, h
  /// and h_tau (G2), with the unicode spellings also accepted. "triv" and
  /// "sigma" work in every type. Throws UnknownCharacter.
  const Character& character(const std::string& label) const;
  const Character& trivial() const { return character("triv"); }
  const Character& sign() const { return character("sigma"); }

  /// Pointwise product of class functions.
  std::vector<long long> tensor(const std::vector<long long>& a,
                                const std::vector<long long>& b) const;
  /// sum_C |C| a(C) b(C) / |W| (characters are real).
  Rational inner_product(const std::vector<long long>& a, const std::vector<long long>& b) const;

 private:
  CartanType type_;
  std::vector<SmallMatrix> generators_;
  std::vector<SmallMatrix> elements_;
  std::vector<int> degrees_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<Character> irreducibles_;
};

/// Irreducible character of S_n for the partition lambda at cycle type rho,
/// by the Murnaghan-Nakayama rule.
long long murnaghan_nakayama(const Partition& lambda, const Partition& rho);

/// det(I - q g) as a polynomial in q.
LaurentPolynomial det_one_minus_q(const SmallMatrix& g);

/// Graded multiplicity (in q, h* in degree 1) of a class function in the
/// coinvariant algebra:
///   prod_i (1 - q^{d_i}) |W|^-1 sum_w f(w) / det(1 - q w).
/// Throws NonPolynomialResult if the Molien sum does not reduce.
LaurentPolynomial coinvariant_multiplicity(const WeylGroup& w, const std::vector<long long>& f);
LaurentPolynomial coinvariant_multiplicity(const WeylGroup& w, const std::string& chi);

/// K_{g,chi}(t) = m_{chi (x) sigma}(t).
LaurentPolynomial generalized_kostka(const WeylGroup& w, const std::string& chi);

/// prod_i (1 + t + ... + t^{d_i - 1}).
LaurentPolynomial flag_poincare(const WeylGroup& w);

/// Cached groups; building S_6 is not free.
const WeylGroup& weyl_group(const CartanType& type);

}  // namespace poisson
