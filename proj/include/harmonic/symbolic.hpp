#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "harmonic/enumeration.hpp"
#include "harmonic/errors.hpp"
#include "harmonic/graph.hpp"
#include "harmonic/index_set.hpp"
#include "harmonic/matrix.hpp"
#include "harmonic/rational.hpp"
#include "harmonic/theorems.hpp"

namespace harmonic {

/// The edge variable a_ij, identified by the ordered pair (i, j).
using Variable = std::pair<int, int>;

inline std::string str(const Variable& v) {
  if (v.first < 10 && v.second < 10)
    return "a" + std::to_string(v.first) + std::to_string(v.second);
  return "a(" + std::to_string(v.first) + "," + std::to_string(v.second) + ")";
}

/// Product of edge variables with positive integer exponents; the empty
/// monomial is the constant 1. Ordered lexicographically by variable.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(int i, int j) {
    Monomial m;
    m.exps_[{i, j}] = 1;
    return m;
  }

  static Monomial from_edges(const std::vector<Edge>& edges) {
    Monomial m;
    for (const Edge& e : edges) ++m.exps_[{e.from, e.to}];
    return m;
  }

  const std::map<Variable, int>& exponents() const { return exps_; }

  int degree() const {
    int d = 0;
    for (const auto& [v, e] : exps_) d += e;
    return d;
  }

  Monomial operator*(const Monomial& other) const {
    Monomial m = *this;
    for (const auto& [v, e] : other.exps_) m.exps_[v] += e;
    return m;
  }

  auto operator<=>(const Monomial&) const = default;

  std::string str() const {
    if (exps_.empty()) return "1";
    std::string s;
    for (const auto& [v, e] : exps_) {
      if (!s.empty()) s += "*";
      s += harmonic::str(v);
      if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
  }

 private:
  std::map<Variable, int> exps_;
};

/// Sparse polynomial over the rationals in the edge variables; a term map
/// that never stores zero coefficients, so equality of maps is equality of
/// polynomials.
class MultivariatePolynomial {
 public:
  MultivariatePolynomial() = default;
  MultivariatePolynomial(const Rational& constant) {  // NOLINT(runtime/explicit)
    add(Monomial{}, constant);
  }
  MultivariatePolynomial(int constant)  // NOLINT(runtime/explicit)
      : MultivariatePolynomial(Rational(constant)) {}

  static MultivariatePolynomial variable(int i, int j) {
    return term(Monomial::variable(i, j), 1);
  }

  static MultivariatePolynomial term(const Monomial& m, const Rational& coeff) {
    MultivariatePolynomial p;
    p.add(m, coeff);
    return p;
  }

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of the given monomial, zero if absent.
  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Maximum total degree over the terms; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  bool is_homogeneous() const {
    for (const auto& [m, c] : terms_)
      if (m.degree() != degree()) return false;
    return true;
  }

  MultivariatePolynomial& operator+=(const MultivariatePolynomial& other) {
    for (const auto& [m, c] : other.terms_) add(m, c);
    return *this;
  }
  MultivariatePolynomial& operator-=(const MultivariatePolynomial& other) {
    for (const auto& [m, c] : other.terms_) add(m, -c);
    return *this;
  }

  friend MultivariatePolynomial operator+(MultivariatePolynomial a,
                                          const MultivariatePolynomial& b) {
    return a += b;
  }
  friend MultivariatePolynomial operator-(MultivariatePolynomial a,
                                          const MultivariatePolynomial& b) {
    return a -= b;
  }
  friend MultivariatePolynomial operator-(const MultivariatePolynomial& a) {
    return MultivariatePolynomial(Rational(-1)) * a;
  }

  friend MultivariatePolynomial operator*(const MultivariatePolynomial& a,
                                          const MultivariatePolynomial& b) {
    MultivariatePolynomial out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add(ma * mb, ca * cb);
    return out;
  }

  bool operator==(const MultivariatePolynomial&) const = default;

  /// Substitutes rational values for every variable that occurs; a variable
  /// without an assigned value is a contract violation.
  Rational evaluate(const std::map<Variable, Rational>& assignment) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
      Rational value = c;
      for (const auto& [v, e] : m.exponents()) {
        auto it = assignment.find(v);
        if (it == assignment.end())
          fail(errc::domain_mismatch,
               "no value assigned to variable " + harmonic::str(v));
        for (int k = 0; k < e; ++k) value *= it->second;
      }
      total += value;
    }
    return total;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      if (!s.empty()) s += " + ";
      if (c == 1 && !m.exponents().empty())
        s += m.str();
      else if (m.exponents().empty())
        s += format_rational(c);
      else
        s += format_rational(c) + "*" + m.str();
    }
    return s;
  }

 private:
  void add(const Monomial& m, const Rational& coeff) {
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    } else if (coeff == 0) {
      terms_.erase(it);
    }
  }

  std::map<Monomial, Rational> terms_;
};

/// Dense matrix of polynomials, just enough structure for determinants of
/// generic Laplacians at desk scale.
class SymbolicMatrix {
 public:
  SymbolicMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  MultivariatePolynomial& operator()(size_t r, size_t c) {
    return entries_[r * cols_ + c];
  }
  const MultivariatePolynomial& operator()(size_t r, size_t c) const {
    return entries_[r * cols_ + c];
  }

 private:
  size_t rows_, cols_;
  std::vector<MultivariatePolynomial> entries_;
};

/// Laplacian of the complete digraph on n vertices with the weight of every
/// edge i -> j left as the variable a_ij: entry (i,j) = -a_ij off the
/// diagonal and (j,j) = sum_{k != j} a_kj, so every column sums to zero.
inline SymbolicMatrix symbolic_laplacian(int n) {
  if (n < 1)
    fail(errc::vertex_out_of_range, "Laplacian of an empty vertex set");
  const size_t size = static_cast<size_t>(n);
  SymbolicMatrix l(size, size);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      const auto a_ij = MultivariatePolynomial::variable(i, j);
      l(static_cast<size_t>(i) - 1, static_cast<size_t>(j) - 1) -= a_ij;
      l(static_cast<size_t>(j) - 1, static_cast<size_t>(j) - 1) += a_ij;
    }
  return l;
}

/// Copy of m with the 1-based rows and columns in the given sets removed.
inline SymbolicMatrix delete_rows_cols(const SymbolicMatrix& m,
                                       const IndexSet& rows,
                                       const IndexSet& cols) {
  detail::require_in_range(rows, m.rows(), "row");
  detail::require_in_range(cols, m.cols(), "column");
  SymbolicMatrix out(m.rows() - rows.size(), m.cols() - cols.size());
  size_t or_ = 0;
  for (size_t r = 0; r < m.rows(); ++r) {
    if (rows.contains(static_cast<int>(r) + 1)) continue;
    size_t oc = 0;
    for (size_t c = 0; c < m.cols(); ++c) {
      if (cols.contains(static_cast<int>(c) + 1)) continue;
      out(or_, oc++) = m(r, c);
    }
    ++or_;
  }
  return out;
}

/// Exact determinant by cofactor expansion along the row with the fewest
/// nonzero entries; fine for the <= 4x4 matrices the symbolic checks use.
inline MultivariatePolynomial symbolic_determinant(const SymbolicMatrix& m) {
  if (!m.square())
    fail(errc::not_square, "determinant of a " + std::to_string(m.rows()) +
                               "x" + std::to_string(m.cols()) + " matrix");
  const size_t n = m.rows();
  if (n == 0) return MultivariatePolynomial(Rational(1));
  if (n == 1) return m(0, 0);

  size_t best_row = 0, best_nonzero = n + 1;
  for (size_t r = 0; r < n; ++r) {
    size_t nonzero = 0;
    for (size_t c = 0; c < n; ++c)
      if (!m(r, c).is_zero()) ++nonzero;
    if (nonzero < best_nonzero) {
      best_nonzero = nonzero;
      best_row = r;
    }
  }

  MultivariatePolynomial det;
  const int row = static_cast<int>(best_row) + 1;
  for (size_t c = 0; c < n; ++c) {
    if (m(best_row, c).is_zero()) continue;
    const int col = static_cast<int>(c) + 1;
    const auto minor =
        symbolic_determinant(delete_rows_cols(m, IndexSet({row}), IndexSet({col})));
    const auto signed_entry =
        MultivariatePolynomial(Rational(to_int(parity_sign(row + col)))) *
        m(best_row, c);
    det += signed_entry * minor;
  }
  return det;
}

/// (-1)^{i+j} times the determinant of m with 1-based row i and column j
/// deleted.
inline MultivariatePolynomial symbolic_cofactor(const SymbolicMatrix& m, int i,
                                                int j) {
  if (i < 1 || j < 1 || i > static_cast<int>(m.rows()) ||
      j > static_cast<int>(m.cols()))
    fail(errc::index_out_of_range,
         "cofactor (" + std::to_string(i) + "," + std::to_string(j) +
             ") of a " + std::to_string(m.rows()) + "x" +
             std::to_string(m.cols()) + " matrix");
  return MultivariatePolynomial(Rational(to_int(parity_sign(i + j)))) *
         symbolic_determinant(delete_rows_cols(m, IndexSet({i}), IndexSet({j})));
}

/// Entry-wise substitution of rational values for the edge variables.
inline RationalMatrix evaluate(const SymbolicMatrix& m,
                               const std::map<Variable, Rational>& assignment) {
  RationalMatrix out(m.rows(), m.cols());
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c)
      out(r, c) = m(r, c).evaluate(assignment);
  return out;
}

/// Sum over the spanning arborescences of the complete digraph rooted at
/// `root` of the product of the edge variables; n^{n-2} terms, every
/// coefficient 1.
inline MultivariatePolynomial symbolic_tree_polynomial(int n, int root) {
  const WeightedDigraph g = complete_digraph(n);
  g.check_vertex(root);
  MultivariatePolynomial p;
  for (const auto& t : enumerate_arborescences(g, root))
    p += MultivariatePolynomial::term(Monomial::from_edges(t.edges), 1);
  return p;
}

/// Checks, as an identity of term maps, that every cofactor of the generic
/// Laplacian equals the tree polynomial of its column. The naive expansion
/// is capped at n = 4 unless explicitly overridden.
inline VerificationReport verify_symbolic_matrix_tree(int n,
                                                      bool allow_large = false) {
  if (n < 2)
    fail(errc::size_guard,
         "n = " + std::to_string(n) + " is below the minimum of 2");
  if (n > 4 && !allow_large)
    fail(errc::size_guard, "n = " + std::to_string(n) +
                               " exceeds the symbolic cap of 4; pass the "
                               "override to proceed");
  const SymbolicMatrix l = symbolic_laplacian(n);
  const std::string instance = "complete digraph n=" + std::to_string(n);
  for (int j = 1; j <= n; ++j) {
    const auto tree = symbolic_tree_polynomial(n, j);
    for (int i = 1; i <= n; ++i) {
      const auto cof = symbolic_cofactor(l, i, j);
      if (cof != tree)
        return VerificationReport::failing(
            "symbolic-matrix-tree", instance,
            "cofactor (" + std::to_string(i) + "," + std::to_string(j) +
                ") = " + cof.str() + " but the " + std::to_string(j) +
                "-tree polynomial is " + tree.str(),
            {i, j});
    }
  }
  return VerificationReport::passing("symbolic-matrix-tree", instance);
}

}  // namespace harmonic
