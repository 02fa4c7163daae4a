#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace poisson {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;
using SmallMatrix = Matrix<std::int64_t>;

template <typename Derived>
RationalMatrix to_rational(const Eigen::MatrixBase<Derived>& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

/// Reduced row echelon form over an exact field. Zero rows are dropped, so
/// the result has exactly rank-many rows. Pivot columns are chosen left to
/// right and reported through `pivots` when non-null.
template <typename Derived>
Matrix<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& input,
                                      std::vector<Index>* pivots = nullptr) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> m = input;
  std::vector<Index> piv;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index sel = -1;
    for (Index i = row; i < m.rows(); ++i)
      if (m(i, col) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row) m.row(sel).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Scalar f = m(i, col);
      for (Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    piv.push_back(col);
    ++row;
  }
  if (pivots) *pivots = std::move(piv);
  return m.topRows(row);
}

/// Fraction-free (Bareiss) elimination over an integral domain. Returns the
/// rank; `det` receives the determinant when the matrix is square.
template <typename Scalar>
int bareiss(Matrix<Scalar> m, Scalar* det = nullptr) {
  const Index rows = m.rows(), cols = m.cols();
  Scalar prev = 1;
  int sign = 1;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index sel = -1;
    for (Index i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r) {
      m.row(sel).swap(m.row(r));
      sign = -sign;
    }
    for (Index i = r + 1; i < rows; ++i) {
      for (Index j = c + 1; j < cols; ++j)
        m(i, j) = (m(i, j) * m(r, c) - m(i, c) * m(r, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  if (det) {
    if (rows == cols && r == rows)
      *det = rows == 0 ? Scalar(1) : Scalar(sign) * m(rows - 1, cols - 1);
    else
      *det = 0;
  }
  return static_cast<int>(r);
}

namespace detail {

inline bool checked_step(std::int64_t a, std::int64_t d, std::int64_t b,
                         std::int64_t e, std::int64_t prev,
                         std::int64_t& out) {
  __int128 p1, p2, diff;
  if (__builtin_mul_overflow(static_cast<__int128>(a), static_cast<__int128>(d), &p1))
    return false;
  if (__builtin_mul_overflow(static_cast<__int128>(b), static_cast<__int128>(e), &p2))
    return false;
  if (__builtin_sub_overflow(p1, p2, &diff)) return false;
  const __int128 q = diff / prev;
  if (q > INT64_MAX || q < INT64_MIN) return false;
  out = static_cast<std::int64_t>(q);
  return true;
}

}  // namespace detail

/// Bareiss on machine integers with overflow detection; nullopt means the
/// caller must redo the computation with `Integer`.
inline std::optional<int> checked_bareiss(SmallMatrix m,
                                          std::int64_t* det = nullptr) {
  const Index rows = m.rows(), cols = m.cols();
  std::int64_t prev = 1;
  int sign = 1;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index sel = -1;
    for (Index i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r) {
      m.row(sel).swap(m.row(r));
      sign = -sign;
    }
    for (Index i = r + 1; i < rows; ++i) {
      for (Index j = c + 1; j < cols; ++j)
        if (!detail::checked_step(m(i, j), m(r, c), m(i, c), m(r, j), prev, m(i, j)))
          return std::nullopt;
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  if (det) {
    if (rows == cols && r == rows)
      *det = rows == 0 ? 1 : sign * m(rows - 1, cols - 1);
    else
      *det = 0;
  }
  return static_cast<int>(r);
}

/// Exact rank of an integer matrix.
template <typename Derived>
int rank(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if constexpr (std::is_same_v<Scalar, std::int64_t>) {
    if (auto r = checked_bareiss(m)) return *r;
    return bareiss<Integer>(m.template cast<Integer>());
  } else if constexpr (std::is_same_v<Scalar, Rational>) {
    return static_cast<int>(rref(m).rows());
  } else {
    return bareiss<Integer>(m.template cast<Integer>());
  }
}

/// Exact determinant of a square integer matrix.
template <typename Derived>
Integer determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if constexpr (std::is_same_v<Scalar, std::int64_t>) {
    std::int64_t d = 0;
    if (checked_bareiss(m, &d)) return Integer(d);
  }
  Integer d;
  bareiss<Integer>(m.template cast<Integer>(), &d);
  return d;
}

/// Scales every column of a rational matrix by a positive rational so that
/// its entries become coprime integers. Column scaling preserves the
/// matroid of the column configuration.
IntegerMatrix integral_columns(const RationalMatrix& m);

/// Same, scaling rows instead; preserves the row space.
IntegerMatrix integral_rows(const RationalMatrix& m);

/// Narrows to machine integers; nullopt if an entry does not fit.
std::optional<SmallMatrix> to_small(const IntegerMatrix& m);

}  // namespace poisson
