#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "poisson/laurent.hpp"
#include "poisson/numeric.hpp"

namespace poisson {

/// Subsets of the ground set as bitmasks; ground sets are capped at 64.
using Subset = std::uint64_t;

constexpr std::size_t kMaxGroundSet = 64;
/// Largest ground set on which exhaustive subset enumeration is used.
constexpr std::size_t kExhaustiveLimit = 20;

inline Subset singleton(std::size_t e) { return Subset{1} << e; }
inline bool contains(Subset s, std::size_t e) { return (s >> e) & 1u; }
inline int cardinality(Subset s) { return __builtin_popcountll(s); }
std::vector<std::size_t> elements(Subset s);
Subset subset_of(const std::vector<std::size_t>& elems);

struct Flat {
  Subset elements = 0;
  int rank = 0;

  friend bool operator==(const Flat&, const Flat&) = default;
};

/// Orders flats by rank, then by their sorted element lists.
bool flat_less(const Flat& a, const Flat& b);

/// Matroid of the columns of an integer matrix: the normal vectors of a
/// central hyperplane arrangement. Parallel columns are kept.
///
/// Values are immutable. The subset-rank memo is shared between copies and
/// guarded for concurrent use.
class Matroid {
 public:
  /// Throws LoopPresent if a column is zero.
  static Matroid from_matrix(const IntegerMatrix& m);
  static Matroid from_rows(const std::vector<std::vector<long long>>& rows);
  /// Same as from_matrix but tolerates zero columns (loops). Used for duals
  /// and other intermediate matroids.
  static Matroid with_loops(const IntegerMatrix& m);

  const IntegerMatrix& representation() const { return rep_; }
  /// Original element identifiers (column indices of the first matrix in a
  /// chain of minors).
  const std::vector<std::size_t>& labels() const { return labels_; }

  std::size_t size() const { return static_cast<std::size_t>(rep_.cols()); }
  Subset ground() const;
  int rank() const { return rank_; }
  /// Rank of the column submatrix on `s`; memoized.
  int rank(Subset s) const;

  Subset closure(Subset s) const;
  bool is_flat(Subset s) const;
  /// All flats, each once, sorted by `flat_less`.
  std::vector<Flat> flats() const;

  Subset loops() const;
  Subset coloops() const;
  bool is_loop_free() const { return loops() == 0; }
  bool is_coloop_free() const { return coloops() == 0; }

  /// True iff every square submatrix of the representation has determinant
  /// in {-1, 0, 1}. Exhaustive over all minors.
  bool is_unimodular() const;

  /// Restriction to the columns of the flat F (the localization A_F).
  Matroid localize(const Flat& f) const;
  /// Contraction of the flat F (the restriction A^F): ground set E \ F.
  Matroid restrict_flat(const Flat& f) const;
  /// Restriction to an arbitrary subset of columns.
  Matroid restrict_to(Subset s) const;
  /// Contraction of an arbitrary subset.
  Matroid contract(Subset s) const;
  /// Gale dual, represented by an integer kernel basis. May contain loops.
  Matroid dual() const;

  /// Tutte polynomial in (x, y). Uses the corank-nullity sum up to
  /// kExhaustiveLimit elements and memoized deletion-contraction beyond.
  LaurentPolynomial tutte() const;
  LaurentPolynomial tutte_corank_nullity() const;
  LaurentPolynomial tutte_deletion_contraction() const;

  /// (-1)^rk T(1 - x, 0), in x.
  LaurentPolynomial char_poly() const;
  /// t^rk T(1/t, 0), in t.
  LaurentPolynomial h_broken_circuit() const;
  /// h-polynomial (in t) of the independence complex, from a direct count
  /// of independent sets; equals t^rk T(1/t, 1).
  LaurentPolynomial h_independence() const;

  /// Minimal dependent sets.
  std::vector<Subset> circuits() const;
  /// h-polynomial (in t) of the broken-circuit complex for the ground-set
  /// order given by `order` (a permutation of 0..size-1, smallest first).
  LaurentPolynomial broken_circuit_h(const std::vector<std::size_t>& order) const;

 private:
  struct RankCache;

  Matroid(IntegerMatrix rep, std::vector<std::size_t> labels);
  int compute_rank(Subset s) const;

  IntegerMatrix rep_;
  SmallMatrix small_;
  bool small_valid_ = false;
  std::vector<std::size_t> labels_;
  int rank_ = 0;
  std::shared_ptr<RankCache> cache_;
};

/// Tutte polynomial by deletion-contraction over a rational column
/// configuration; memoized on the multiset of reduced columns.
LaurentPolynomial tutte_deletion_contraction(const RationalMatrix& columns);

}  // namespace poisson
