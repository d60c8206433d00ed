#pragma once

#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "harmonic/errors.hpp"
#include "harmonic/index_set.hpp"
#include "harmonic/rational.hpp"
#include "harmonic/signs.hpp"

namespace harmonic {

/// Dense exact-rational matrix. Entry access is 0-based; the submatrix /
/// cofactor operations below speak 1-based row and column indices, matching
/// vertex ids.
class RationalMatrix {
public:
  RationalMatrix() = default;  // 0x0

  RationalMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_)
        fail(errc::length_mismatch, "ragged matrix initializer");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static RationalMatrix identity(size_t n) {
    RationalMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(size_t r, size_t c) const {
    return data_[r * cols_ + c];
  }

  bool operator==(const RationalMatrix&) const = default;

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (size_t r = 0; r < rows_; ++r) {
      if (r) os << "; ";
      for (size_t c = 0; c < cols_; ++c) {
        if (c) os << " ";
        os << (*this)(r, c);
      }
    }
    os << "]";
    return os.str();
  }

private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

namespace detail {

inline void require_square(const RationalMatrix& m, const char* op) {
  if (!m.square())
    fail(errc::not_square, std::string(op) + ": matrix is " +
                               std::to_string(m.rows()) + "x" +
                               std::to_string(m.cols()));
}

inline void require_in_range(const IndexSet& set, size_t dim,
                             const char* what) {
  if (!set.empty() && set[set.size() - 1] > static_cast<int>(dim))
    fail(errc::index_out_of_range, std::string(what) + " index set " +
                                       set.str() + " exceeds dimension " +
                                       std::to_string(dim));
}

}  // namespace detail

/// Submatrix after removing the given rows and columns (1-based), remaining
/// order preserved.
inline RationalMatrix delete_rows_cols(const RationalMatrix& m,
                                       const IndexSet& rows,
                                       const IndexSet& cols) {
  detail::require_in_range(rows, m.rows(), "row");
  detail::require_in_range(cols, m.cols(), "column");
  RationalMatrix out(m.rows() - rows.size(), m.cols() - cols.size());
  size_t ro = 0;
  for (size_t r = 0; r < m.rows(); ++r) {
    if (rows.contains(static_cast<int>(r + 1))) continue;
    size_t co = 0;
    for (size_t c = 0; c < m.cols(); ++c) {
      if (cols.contains(static_cast<int>(c + 1))) continue;
      out(ro, co) = m(r, c);
      ++co;
    }
    ++ro;
  }
  return out;
}

/// Exact determinant by fraction-free Bareiss elimination: each row is
/// scaled to integers first (the scaling factors divide the result back out),
/// then one-step Bareiss runs on the integer matrix with exact divisions.
inline Rational determinant(const RationalMatrix& m) {
  detail::require_square(m, "determinant");
  const size_t n = m.rows();
  if (n == 0) return 1;  // empty product

  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  Int cleared = 1;
  for (size_t r = 0; r < n; ++r) {
    Int rowlcm = 1;
    for (size_t c = 0; c < n; ++c)
      rowlcm = lcm(rowlcm, denominator(m(r, c)));
    for (size_t c = 0; c < n; ++c)
      a[r][c] = numerator(m(r, c)) * (rowlcm / denominator(m(r, c)));
    cleared *= rowlcm;
  }

  Int prev = 1;
  Sign swaps = Sign::plus;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t pivot = k + 1;
      while (pivot < n && a[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(a[k], a[pivot]);
      swaps = swaps * Sign::minus;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return swaps * make_rational(a[n - 1][n - 1], cleared);
}

/// Determinant by plain rational Gaussian elimination. Kept as an
/// independent in-library route; the Bareiss path above is the primary one.
inline Rational determinant_by_elimination(const RationalMatrix& m) {
  detail::require_square(m, "determinant");
  const size_t n = m.rows();
  if (n == 0) return 1;
  RationalMatrix a = m;
  Rational det = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (size_t c = k; c < n; ++c) std::swap(a(k, c), a(pivot, c));
      det = -det;
    }
    det *= a(k, k);
    for (size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational factor = a(i, k) / a(k, k);
      for (size_t c = k; c < n; ++c) a(i, c) -= factor * a(k, c);
    }
  }
  return det;
}

/// (-1)^(i+j) det of m with row i and column j removed (1-based).
inline Rational cofactor(const RationalMatrix& m, int i, int j) {
  detail::require_square(m, "cofactor");
  if (i < 1 || j < 1 || i > static_cast<int>(m.rows()) ||
      j > static_cast<int>(m.cols()))
    fail(errc::index_out_of_range,
         "cofactor (" + std::to_string(i) + "," + std::to_string(j) +
             ") of a " + std::to_string(m.rows()) + "x" +
             std::to_string(m.cols()) + " matrix");
  return parity_sign(i + j) *
         determinant(delete_rows_cols(m, IndexSet{i}, IndexSet{j}));
}

/// adj(m)[i][j] = cofactor(m, j, i); satisfies m * adj(m) = det(m) * I.
inline RationalMatrix adjugate(const RationalMatrix& m) {
  detail::require_square(m, "adjugate");
  const size_t n = m.rows();
  RationalMatrix out(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      out(i, j) = cofactor(m, static_cast<int>(j) + 1, static_cast<int>(i) + 1);
  return out;
}

/// For each j in the domain of beta, column j becomes the unit column with a
/// single 1 in row beta(j). Other columns are untouched.
inline RationalMatrix substitute_unit_columns(const RationalMatrix& m,
                                              const Bijection& beta) {
  detail::require_square(m, "substitute_unit_columns");
  detail::require_in_range(beta.domain(), m.cols(), "column");
  detail::require_in_range(beta.codomain(), m.rows(), "row");
  RationalMatrix out = m;
  for (size_t k = 0; k < beta.size(); ++k) {
    const size_t j = static_cast<size_t>(beta.domain()[k]) - 1;
    const size_t target = static_cast<size_t>(beta.image_at(k)) - 1;
    for (size_t r = 0; r < out.rows(); ++r) out(r, j) = r == target ? 1 : 0;
  }
  return out;
}

/// Exact rank via rational Gaussian elimination.
inline int rank(const RationalMatrix& m) {
  RationalMatrix a = m;
  const size_t rows = a.rows(), cols = a.cols();
  int r = 0;
  for (size_t c = 0; c < cols && static_cast<size_t>(r) < rows; ++c) {
    size_t pivot = static_cast<size_t>(r);
    while (pivot < rows && a(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    for (size_t cc = 0; cc < cols; ++cc)
      std::swap(a(static_cast<size_t>(r), cc), a(pivot, cc));
    for (size_t i = static_cast<size_t>(r) + 1; i < rows; ++i) {
      if (a(i, c) == 0) continue;
      Rational factor = a(i, c) / a(static_cast<size_t>(r), c);
      for (size_t cc = c; cc < cols; ++cc)
        a(i, cc) -= factor * a(static_cast<size_t>(r), cc);
    }
    ++r;
  }
  return r;
}

inline RationalMatrix operator*(const RationalMatrix& a,
                                const RationalMatrix& b) {
  if (a.cols() != b.rows())
    fail(errc::size_mismatch, "matrix product " + std::to_string(a.rows()) +
                                  "x" + std::to_string(a.cols()) + " * " +
                                  std::to_string(b.rows()) + "x" +
                                  std::to_string(b.cols()));
  RationalMatrix out(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

inline std::vector<Rational> operator*(const RationalMatrix& m,
                                       const std::vector<Rational>& x) {
  if (m.cols() != x.size())
    fail(errc::length_mismatch,
         "matrix-vector product: " + std::to_string(m.cols()) + " columns vs " +
             std::to_string(x.size()) + " entries");
  std::vector<Rational> out(m.rows());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * x[j];
  return out;
}

}  // namespace harmonic
