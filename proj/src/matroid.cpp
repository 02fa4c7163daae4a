#include "poisson/matroid.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include "poisson/errors.hpp"

namespace poisson {

std::vector<std::size_t> elements(Subset s) {
  std::vector<std::size_t> out;
  while (s) {
    out.push_back(static_cast<std::size_t>(__builtin_ctzll(s)));
    s &= s - 1;
  }
  return out;
}

Subset subset_of(const std::vector<std::size_t>& elems) {
  Subset s = 0;
  for (auto e : elems) s |= singleton(e);
  return s;
}

bool flat_less(const Flat& a, const Flat& b) {
  if (a.rank != b.rank) return a.rank < b.rank;
  return elements(a.elements) < elements(b.elements);
}

struct Matroid::RankCache {
  std::shared_mutex mutex;
  std::unordered_map<Subset, int> ranks;
};

Matroid::Matroid(IntegerMatrix rep, std::vector<std::size_t> labels)
    : rep_(std::move(rep)), labels_(std::move(labels)), cache_(std::make_shared<RankCache>()) {
  if (static_cast<std::size_t>(rep_.cols()) > kMaxGroundSet)
    throw ScaleExceeded("ground sets are limited to " + std::to_string(kMaxGroundSet) +
                        " elements");
  if (auto s = to_small(rep_)) {
    small_ = std::move(*s);
    small_valid_ = true;
  }
  rank_ = compute_rank(ground());
}

Matroid Matroid::with_loops(const IntegerMatrix& m) {
  std::vector<std::size_t> labels(static_cast<std::size_t>(m.cols()));
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = i;
  return Matroid(m, std::move(labels));
}

Matroid Matroid::from_matrix(const IntegerMatrix& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    bool zero = true;
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) zero = false;
    if (zero) throw LoopPresent("column " + std::to_string(j) + " is zero");
  }
  return with_loops(m);
}

Matroid Matroid::from_rows(const std::vector<std::vector<long long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntegerMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ParseError("matrix rows have different lengths");
    for (std::size_t j = 0; j < cols; ++j)
      m(static_cast<Index>(i), static_cast<Index>(j)) = Integer(rows[i][j]);
  }
  return from_matrix(m);
}

Subset Matroid::ground() const {
  return size() == 64 ? ~Subset{0} : (Subset{1} << size()) - 1;
}

int Matroid::compute_rank(Subset s) const {
  const auto cols = elements(s);
  if (cols.empty() || rep_.rows() == 0) return 0;
  if (small_valid_) {
    SmallMatrix sub(small_.rows(), static_cast<Index>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k)
      sub.col(static_cast<Index>(k)) = small_.col(static_cast<Index>(cols[k]));
    return poisson::rank(sub);
  }
  IntegerMatrix sub(rep_.rows(), static_cast<Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k)
    sub.col(static_cast<Index>(k)) = rep_.col(static_cast<Index>(cols[k]));
  return poisson::rank(sub);
}

int Matroid::rank(Subset s) const {
  {
    std::shared_lock lock(cache_->mutex);
    auto it = cache_->ranks.find(s);
    if (it != cache_->ranks.end()) return it->second;
  }
  const int r = compute_rank(s);
  std::unique_lock lock(cache_->mutex);
  cache_->ranks.emplace(s, r);
  return r;
}

Subset Matroid::closure(Subset s) const {
  const int r = rank(s);
  Subset out = s;
  for (std::size_t e = 0; e < size(); ++e)
    if (!contains(s, e) && rank(s | singleton(e)) == r) out |= singleton(e);
  return out;
}

bool Matroid::is_flat(Subset s) const {
  return (s & ~ground()) == 0 && closure(s) == s;
}

std::vector<Flat> Matroid::flats() const {
  std::set<Subset> layer{closure(0)};
  std::vector<Flat> out;
  while (!layer.empty()) {
    std::set<Subset> next;
    for (Subset f : layer) {
      out.push_back({f, rank(f)});
      for (std::size_t e = 0; e < size(); ++e)
        if (!contains(f, e)) next.insert(closure(f | singleton(e)));
    }
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end(), flat_less);
  return out;
}

Subset Matroid::loops() const {
  Subset out = 0;
  for (std::size_t e = 0; e < size(); ++e)
    if (rank(singleton(e)) == 0) out |= singleton(e);
  return out;
}

Subset Matroid::coloops() const {
  Subset out = 0;
  for (std::size_t e = 0; e < size(); ++e)
    if (rank(ground() & ~singleton(e)) < rank_) out |= singleton(e);
  return out;
}

namespace {

// Calls f(indices) for every k-subset of {0..n-1}, in lexicographic order;
// stops early when f returns false.
template <typename F>
bool for_each_combination(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return true;
  while (true) {
    if (!f(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool Matroid::is_unimodular() const {
  const std::size_t rows = static_cast<std::size_t>(rep_.rows()), cols = size();
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    const bool ok = for_each_combination(rows, k, [&](const std::vector<std::size_t>& r) {
      return for_each_combination(cols, k, [&](const std::vector<std::size_t>& c) {
        IntegerMatrix sub(static_cast<Index>(k), static_cast<Index>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            sub(static_cast<Index>(i), static_cast<Index>(j)) =
                rep_(static_cast<Index>(r[i]), static_cast<Index>(c[j]));
        const Integer d = small_valid_ ? determinant(*to_small(sub)) : determinant(sub);
        return d >= -1 && d <= 1;
      });
    });
    if (!ok) return false;
  }
  return true;
}

Matroid Matroid::restrict_to(Subset s) const {
  const auto cols = elements(s & ground());
  IntegerMatrix sub(rep_.rows(), static_cast<Index>(cols.size()));
  std::vector<std::size_t> labels;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    sub.col(static_cast<Index>(k)) = rep_.col(static_cast<Index>(cols[k]));
    labels.push_back(labels_[cols[k]]);
  }
  return Matroid(std::move(sub), std::move(labels));
}

Matroid Matroid::contract(Subset s) const {
  s &= ground();
  const auto inside = elements(s);
  const auto outside = elements(ground() & ~s);
  RationalMatrix ordered(rep_.rows(), static_cast<Index>(size()));
  Index k = 0;
  for (auto e : inside) ordered.col(k++) = to_rational(rep_.col(static_cast<Index>(e)));
  for (auto e : outside) ordered.col(k++) = to_rational(rep_.col(static_cast<Index>(e)));

  std::vector<Index> pivots;
  const RationalMatrix reduced = rref(ordered, &pivots);
  // Rows pivoting inside the contracted set span it; the remaining rows
  // vanish on those columns and give coordinates modulo that span.
  std::vector<Index> keep;
  for (std::size_t i = 0; i < pivots.size(); ++i)
    if (pivots[i] >= static_cast<Index>(inside.size())) keep.push_back(static_cast<Index>(i));

  RationalMatrix quotient(static_cast<Index>(keep.size()), static_cast<Index>(outside.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < outside.size(); ++j)
      quotient(static_cast<Index>(i), static_cast<Index>(j)) =
          reduced(keep[i], static_cast<Index>(inside.size() + j));

  std::vector<std::size_t> labels;
  for (auto e : outside) labels.push_back(labels_[e]);
  return Matroid(integral_columns(quotient), std::move(labels));
}

Matroid Matroid::localize(const Flat& f) const {
  if (!is_flat(f.elements)) throw NotAFlat("localize: argument is not a flat");
  return restrict_to(f.elements);
}

Matroid Matroid::restrict_flat(const Flat& f) const {
  if (!is_flat(f.elements)) throw NotAFlat("restrict_flat: argument is not a flat");
  return contract(f.elements);
}

Matroid Matroid::dual() const {
  std::vector<Index> pivots;
  const RationalMatrix reduced = rref(to_rational(rep_), &pivots);
  std::vector<Index> free_cols;
  for (Index j = 0, p = 0; j < static_cast<Index>(size()); ++j) {
    if (p < static_cast<Index>(pivots.size()) && pivots[p] == j)
      ++p;
    else
      free_cols.push_back(j);
  }
  RationalMatrix kernel = RationalMatrix::Zero(static_cast<Index>(free_cols.size()),
                                               static_cast<Index>(size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const Index j = free_cols[k];
    kernel(static_cast<Index>(k), j) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      kernel(static_cast<Index>(k), pivots[i]) = -reduced(static_cast<Index>(i), j);
  }
  return Matroid(integral_rows(kernel), labels_);
}

LaurentPolynomial Matroid::tutte() const {
  return size() <= kExhaustiveLimit ? tutte_corank_nullity() : tutte_deletion_contraction();
}

LaurentPolynomial Matroid::tutte_corank_nullity() const {
  if (size() > kExhaustiveLimit)
    throw ScaleExceeded("corank-nullity enumeration is limited to " +
                        std::to_string(kExhaustiveLimit) + " elements");
  const std::size_t n = size();
  // counts[corank][nullity]
  std::vector<std::vector<std::uint64_t>> counts(static_cast<std::size_t>(rank_) + 1,
                                                 std::vector<std::uint64_t>(n + 1, 0));
  for (Subset s = 0; s <= ground(); ++s) {
    const int r = compute_rank(s);
    ++counts[static_cast<std::size_t>(rank_ - r)][static_cast<std::size_t>(cardinality(s) - r)];
    if (s == ground()) break;
  }
  const auto xm1 = LaurentPolynomial::variable("x") - 1;
  const auto ym1 = LaurentPolynomial::variable("y") - 1;
  LaurentPolynomial t = LaurentPolynomial::monomial({"x", "y"}, {0, 0}, 0);
  for (std::size_t i = 0; i < counts.size(); ++i)
    for (std::size_t j = 0; j <= n; ++j)
      if (counts[i][j])
        t += Integer(counts[i][j]) * xm1.pow(static_cast<unsigned>(i)) *
             ym1.pow(static_cast<unsigned>(j));
  return t.with_variables({"x", "y"});
}

LaurentPolynomial Matroid::tutte_deletion_contraction() const {
  return poisson::tutte_deletion_contraction(to_rational(rep_));
}

namespace {

class DeletionContraction {
 public:
  LaurentPolynomial run(const RationalMatrix& cols) {
    const RationalMatrix reduced = rref(cols);
    const std::string key = canonical_key(reduced);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    LaurentPolynomial result;
    const Index n = reduced.cols();
    if (n == 0) {
      result = 1;
    } else {
      const Index e = n - 1;
      const RationalMatrix deleted = reduced.leftCols(e);
      if (reduced.col(e).isZero()) {
        result = y_ * run(deleted);
      } else {
        const RationalMatrix contracted = contract_last(reduced);
        const bool coloop = rref(deleted).rows() < reduced.rows();
        result = coloop ? x_ * run(contracted) : run(deleted) + run(contracted);
      }
    }
    memo_.emplace(key, result);
    return result;
  }

 private:
  static std::string canonical_key(const RationalMatrix& m) {
    std::vector<std::string> cols;
    for (Index j = 0; j < m.cols(); ++j) {
      std::ostringstream os;
      for (Index i = 0; i < m.rows(); ++i) os << m(i, j) << ',';
      cols.push_back(os.str());
    }
    std::sort(cols.begin(), cols.end());
    std::ostringstream os;
    os << m.rows() << '|';
    for (const auto& c : cols) os << c << '|';
    return os.str();
  }

  // Contracts the last column of a full-row-rank matrix.
  static RationalMatrix contract_last(const RationalMatrix& m) {
    const Index e = m.cols() - 1;
    Index pivot = 0;
    while (m(pivot, e) == 0) ++pivot;
    RationalMatrix work = m;
    for (Index i = 0; i < work.rows(); ++i) {
      if (i == pivot || work(i, e) == 0) continue;
      const Rational f = work(i, e) / work(pivot, e);
      for (Index j = 0; j < work.cols(); ++j) work(i, j) -= f * work(pivot, j);
    }
    RationalMatrix out(work.rows() - 1, e);
    for (Index i = 0, r = 0; i < work.rows(); ++i) {
      if (i == pivot) continue;
      out.row(r++) = work.row(i).head(e);
    }
    return out;
  }

  std::unordered_map<std::string, LaurentPolynomial> memo_;
  LaurentPolynomial x_ = LaurentPolynomial::variable("x");
  LaurentPolynomial y_ = LaurentPolynomial::variable("y");
};

}  // namespace

LaurentPolynomial tutte_deletion_contraction(const RationalMatrix& columns) {
  DeletionContraction dc;
  return dc.run(columns).with_variables({"x", "y"});
}

LaurentPolynomial Matroid::char_poly() const {
  const auto x = LaurentPolynomial::variable("x");
  auto p = tutte().substitute("y", 0).substitute("x", 1 - x);
  if (rank_ % 2) p = -p;
  return p.with_variables({"x"});
}

LaurentPolynomial Matroid::h_broken_circuit() const {
  const auto t = LaurentPolynomial::variable("t");
  auto p = tutte().substitute("y", 0).substitute("x", LaurentPolynomial::monomial({"t"}, {-1}));
  return (p * t.pow(static_cast<unsigned>(rank_))).with_variables({"t"});
}

namespace {

// sum_i f_i t^i (1 - t)^(r - i)
LaurentPolynomial h_from_f(const std::vector<Integer>& f, int r) {
  const auto t = LaurentPolynomial::variable("t");
  LaurentPolynomial h = LaurentPolynomial::monomial({"t"}, {0}, 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    h += f[i] * t.pow(static_cast<unsigned>(i)) *
         (1 - t).pow(static_cast<unsigned>(r) - static_cast<unsigned>(i));
  return h.with_variables({"t"});
}

}  // namespace

LaurentPolynomial Matroid::h_independence() const {
  if (size() > kExhaustiveLimit)
    throw ScaleExceeded("independent-set enumeration is limited to " +
                        std::to_string(kExhaustiveLimit) + " elements");
  std::vector<Integer> f(static_cast<std::size_t>(rank_) + 1, 0);
  for (Subset s = 0;; ++s) {
    if (compute_rank(s) == cardinality(s)) f[static_cast<std::size_t>(cardinality(s))] += 1;
    if (s == ground()) break;
  }
  return h_from_f(f, rank_);
}

std::vector<Subset> Matroid::circuits() const {
  if (size() > kExhaustiveLimit)
    throw ScaleExceeded("circuit enumeration is limited to " + std::to_string(kExhaustiveLimit) +
                        " elements");
  std::vector<Subset> out;
  for (Subset s = 1; s <= ground() && s != 0; ++s) {
    const int k = cardinality(s);
    if (compute_rank(s) != k - 1) continue;
    bool minimal = true;
    for (auto e : elements(s))
      if (compute_rank(s & ~singleton(e)) != k - 1) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(s);
    if (s == ground()) break;
  }
  return out;
}

LaurentPolynomial Matroid::broken_circuit_h(const std::vector<std::size_t>& order) const {
  if (order.size() != size()) throw SizeMismatch("order must list every ground-set element");
  std::vector<std::size_t> position(size(), size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= size() || position[order[i]] != size())
      throw SizeMismatch("order is not a permutation of the ground set");
    position[order[i]] = i;
  }
  std::vector<Subset> broken;
  for (Subset c : circuits()) {
    const auto elems = elements(c);
    const auto first = *std::min_element(elems.begin(), elems.end(),
                                         [&](auto a, auto b) { return position[a] < position[b]; });
    broken.push_back(c & ~singleton(first));
  }
  std::vector<Integer> f(static_cast<std::size_t>(rank_) + 1, 0);
  for (Subset s = 0;; ++s) {
    bool nbc = compute_rank(s) == cardinality(s);
    for (std::size_t i = 0; nbc && i < broken.size(); ++i)
      if ((broken[i] & ~s) == 0) nbc = false;
    if (nbc) f[static_cast<std::size_t>(cardinality(s))] += 1;
    if (s == ground()) break;
  }
  return h_from_f(f, rank_);
}

}  // namespace poisson
