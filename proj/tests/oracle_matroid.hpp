#pragma once

// Brute-force matroid oracle, independent of the library: plain rational
// Gaussian elimination on nested vectors and enumeration of all subsets.

#include <cstdint>
#include <vector>

#include "poisson/laurent.hpp"

namespace oracle {

using poisson::Integer;
using poisson::LaurentPolynomial;
using poisson::Rational;
using Rows = std::vector<std::vector<long long>>;

inline int rank_of(const Rows& rows, std::uint64_t subset) {
  std::vector<std::vector<Rational>> m;
  for (const auto& row : rows) {
    std::vector<Rational> r;
    for (std::size_t j = 0; j < row.size(); ++j)
      if ((subset >> j) & 1u) r.emplace_back(row[j]);
    m.push_back(r);
  }
  if (m.empty() || m[0].empty()) return 0;
  int rank = 0;
  const std::size_t cols = m[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == static_cast<std::size_t>(rank) || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[rank][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Corank-nullity generating function in (x, y) -> Tutte polynomial.
inline LaurentPolynomial shift(const LaurentPolynomial& p) {
  const auto x = LaurentPolynomial::variable("x"), y = LaurentPolynomial::variable("y");
  return p.substitute("x", x - 1).substitute("y", y - 1);
}

inline std::size_t columns(const Rows& rows) { return rows.empty() ? 0 : rows[0].size(); }

inline LaurentPolynomial tutte(const Rows& rows) {
  const std::size_t n = columns(rows);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  const int r = rank_of(rows, full);
  LaurentPolynomial t = LaurentPolynomial::monomial({"x", "y"}, {0, 0}, 0);
  for (std::uint64_t s = 0; s <= full; ++s) {
    const int rs = rank_of(rows, s);
    t += LaurentPolynomial::monomial({"x", "y"}, {r - rs, __builtin_popcountll(s) - rs});
  }
  return shift(t);
}

inline std::vector<std::uint64_t> flats(const Rows& rows) {
  const std::size_t n = columns(rows);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s <= full; ++s) {
    const int rs = rank_of(rows, s);
    bool closed = true;
    for (std::size_t e = 0; e < n && closed; ++e)
      if (!((s >> e) & 1u) && rank_of(rows, s | (std::uint64_t{1} << e)) == rs) closed = false;
    if (closed) out.push_back(s);
  }
  return out;
}

// Determinant by cofactor expansion.
inline long long det(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  long long total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<long long>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    total += (j % 2 ? -1 : 1) * m[0][j] * det(minor);
  }
  return total;
}

inline bool unimodular(const Rows& rows) {
  const std::size_t r = rows.size(), n = columns(rows);
  for (std::uint64_t rs = 1; rs < (std::uint64_t{1} << r); ++rs)
    for (std::uint64_t cs = 1; cs < (std::uint64_t{1} << n); ++cs) {
      if (__builtin_popcountll(rs) != __builtin_popcountll(cs)) continue;
      std::vector<std::vector<long long>> m;
      for (std::size_t i = 0; i < r; ++i) {
        if (!((rs >> i) & 1u)) continue;
        std::vector<long long> row;
        for (std::size_t j = 0; j < n; ++j)
          if ((cs >> j) & 1u) row.push_back(rows[i][j]);
        m.push_back(row);
      }
      const long long d = det(m);
      if (d < -1 || d > 1) return false;
    }
  return true;
}

}  // namespace oracle

namespace oracle {

// Tutte polynomial of the minor (M / contracted) | ground, from ranks.
inline LaurentPolynomial minor_tutte(const Rows& rows, std::uint64_t ground, std::uint64_t contracted) {
  const int rc = rank_of(rows, contracted);
  const int r = rank_of(rows, ground | contracted) - rc;
  LaurentPolynomial t = LaurentPolynomial::monomial({"x", "y"}, {0, 0}, 0);
  for (std::uint64_t s = ground;; s = (s - 1) & ground) {
    const int rs = rank_of(rows, s | contracted) - rc;
    t += LaurentPolynomial::monomial({"x", "y"}, {r - rs, __builtin_popcountll(s) - rs});
    if (s == 0) break;
  }
  return shift(t);
}

// P(x, y) = y^-2rk sum_F y^2|F| T_{A^F}(x^2, 0) T_{A_F}(0, y^-2) over flats F,
// with both minors built from the rank oracle.
inline LaurentPolynomial hypertoric_poincare(const Rows& rows) {
  const std::size_t n = columns(rows);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  const int r = rank_of(rows, full);
  const auto x2 = LaurentPolynomial::monomial({"x"}, {2});
  const auto ym2 = LaurentPolynomial::monomial({"y"}, {-2});
  LaurentPolynomial p = LaurentPolynomial::monomial({"x", "y"}, {0, 0}, 0);
  for (const auto f : flats(rows)) {
    const auto upper = minor_tutte(rows, full & ~f, f).substitute("y", 0).substitute("x", x2);
    const auto lower = minor_tutte(rows, f, 0).substitute("x", 0).substitute("y", ym2);
    p += LaurentPolynomial::monomial({"y"}, {2 * __builtin_popcountll(f) - 2 * r}) * upper * lower;
  }
  return p.with_variables({"x", "y"});
}

}  // namespace oracle
