#pragma once

#include <compare>
#include <string>
#include <vector>

#include "poisson/laurent.hpp"

namespace poisson {

/// Integer partition: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws ParseError unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);

  /// Accepts "3,1,1", "3,1^2", "1^4" and "" (the empty partition).
  static Partition parse(const std::string& text);
  /// (1^r)
  static Partition column(int r);
  /// (r)
  static Partition row(int r);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  /// i-th part (0-based); zero past the end.
  int operator[](int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

  Partition conjugate() const;
  /// n(lambda) = sum_i (i - 1) lambda_i.
  int n_stat() const;
  /// Multiplicity of the part k.
  int multiplicity(int k) const;

  /// Comma-separated parts.
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// mu <= lambda in dominance order. Throws SizeMismatch if sizes differ.
bool dominance_leq(const Partition& mu, const Partition& lambda);

/// All partitions of n in reverse lexicographic order: (n) first.
std::vector<Partition> all_partitions(int n);

/// All nu with mu <= nu <= lambda, in reverse lexicographic order.
/// Throws SizeMismatch, and ScaleExceeded above size 12.
std::vector<Partition> interval(const Partition& mu, const Partition& lambda);

struct Tableau {
  Partition shape;
  /// Top row first.
  std::vector<std::vector<int>> rows;

  /// Rows from the bottom up, each read left to right.
  std::vector<int> reading_word() const;
  bool is_semistandard() const;
  /// Multiplicity of each entry 1, 2, ... up to the largest entry.
  std::vector<int> content() const;
};

/// Semistandard tableaux of shape lambda and content mu, built by adding a
/// horizontal strip of k's for k = 1, 2, ...; deterministic order.
std::vector<Tableau> ssyt(const Partition& lambda, const Partition& mu);

/// Charge of a word whose content is a partition, by standard-subword
/// extraction.
int charge(const std::vector<int>& word);
int charge(const Tableau& t);

/// Kostka-Foulkes polynomial K_{lambda mu}(t) = sum over ssyt of t^charge.
LaurentPolynomial kostka(const Partition& lambda, const Partition& mu);

}  // namespace poisson
