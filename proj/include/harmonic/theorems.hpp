#pragma once

#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "harmonic/enumeration.hpp"
#include "harmonic/errors.hpp"
#include "harmonic/graph.hpp"
#include "harmonic/matrix.hpp"
#include "harmonic/signs.hpp"

namespace harmonic {

/// Outcome of one identity check. A failing report always carries a witness
/// pinpointing the discrepancy.
struct VerificationReport {
  std::string check;
  std::string instance;
  bool pass = true;
  std::string witness;              // empty iff pass
  std::vector<int> witness_indices; // offending indices, empty iff pass

  static VerificationReport passing(std::string check, std::string instance) {
    return {std::move(check), std::move(instance), true, {}, {}};
  }
  static VerificationReport failing(std::string check, std::string instance,
                                    std::string witness,
                                    std::vector<int> indices) {
    return {std::move(check), std::move(instance), false, std::move(witness),
            std::move(indices)};
  }
};

inline std::string describe(const WeightedDigraph& g) {
  return "n=" + std::to_string(g.n()) + " m=" + std::to_string(g.edge_count());
}

/// Null vector of the Laplacian together with the route that produced it.
struct HarmonicVector {
  enum class Method { enumeration, cofactor };
  std::vector<Rational> values;
  Method method = Method::enumeration;
};

/// Harmonic vector from Laplacian cofactors: c_j = cofactor(L, 1, j). The
/// cofactor is independent of the deleted row; row 2 is recomputed as a
/// cheap cross-check.
inline HarmonicVector harmonic_vector_cofactor(const WeightedDigraph& g) {
  const RationalMatrix l = laplacian(g);
  const int n = g.n();
  std::vector<Rational> c(static_cast<size_t>(n));
  for (int j = 1; j <= n; ++j) {
    c[static_cast<size_t>(j) - 1] = cofactor(l, 1, j);
    if (n >= 2 && cofactor(l, 2, j) != c[static_cast<size_t>(j) - 1])
      throw std::logic_error("cofactor rows 1 and 2 disagree at column " +
                             std::to_string(j));
  }
  return {std::move(c), HarmonicVector::Method::cofactor};
}

/// Harmonic vector by direct arborescence enumeration.
inline HarmonicVector harmonic_vector_enumeration(const WeightedDigraph& g) {
  return {weight_vector_enum(g), HarmonicVector::Method::enumeration};
}

/// Checks L*x = 0 exactly; the witness is the first nonzero row.
inline VerificationReport verify_harmonic(const WeightedDigraph& g,
                                          const std::vector<Rational>& x) {
  if (x.size() != static_cast<size_t>(g.n()))
    fail(errc::length_mismatch, "vector of length " + std::to_string(x.size()) +
                                    " for a graph on " + std::to_string(g.n()) +
                                    " vertices");
  const std::vector<Rational> lx = laplacian(g) * x;
  for (size_t r = 0; r < lx.size(); ++r) {
    if (lx[r] != 0) {
      const int row = static_cast<int>(r) + 1;
      return VerificationReport::failing(
          "harmonic", describe(g),
          "(L*x)_" + std::to_string(row) + " = " + format_rational(lx[r]),
          {row});
    }
  }
  return VerificationReport::passing("harmonic", describe(g));
}

enum class Normalization { sum_one, primitive_integer };

/// Strictly positive null vector of L, the market-clearing price vector.
struct PriceVector {
  std::vector<Rational> values;
  Normalization normalization = Normalization::sum_one;
};

/// Price vector for a nonnegative strongly connected graph, normalized to
/// component sum 1 or to the primitive positive integer vector.
inline PriceVector market_clearing_prices(const WeightedDigraph& g,
                                          Normalization normalization) {
  for (const auto& [e, w] : g.edges())
    if (w < 0)
      fail(errc::negative_weight,
           "negative weight on edge " + str({e.first, e.second}));
  if (!is_strongly_connected(g)) {
    auto missing = find_unreachable_pair(g);
    fail(errc::not_irreducible,
         "no path from " + std::to_string(missing->first) + " to " +
             std::to_string(missing->second));
  }

  std::vector<Rational> p = harmonic_vector_cofactor(g).values;
  if (normalization == Normalization::sum_one) {
    Rational total = std::accumulate(p.begin(), p.end(), Rational(0));
    for (auto& x : p) x /= total;
  } else {
    Int scale = 1;
    for (const auto& x : p) scale = lcm(scale, denominator(x));
    Int common = 0;
    std::vector<Int> integral(p.size());
    for (size_t k = 0; k < p.size(); ++k) {
      integral[k] = numerator(p[k]) * (scale / denominator(p[k]));
      common = gcd(common, integral[k]);
    }
    for (size_t k = 0; k < p.size(); ++k) p[k] = Rational(integral[k] / common);
  }
  for (const auto& x : p)
    if (x <= 0) throw std::logic_error("price component not positive");
  return {std::move(p), normalization};
}

/// Sum over spanning arborescences per root, computed once per column.
inline std::vector<Rational> tree_sums(const WeightedDigraph& g) {
  return weight_vector_enum(g);
}

/// Matrix of all Laplacian cofactors, entry (i, j) = cofactor(L, i, j).
inline RationalMatrix cofactor_matrix(const WeightedDigraph& g) {
  const RationalMatrix l = laplacian(g);
  const size_t n = static_cast<size_t>(g.n());
  RationalMatrix c(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      c(i, j) = cofactor(l, static_cast<int>(i) + 1, static_cast<int>(j) + 1);
  return c;
}

/// Checks a supplied cofactor matrix against enumerated tree sums for every
/// (i, j); the witness is the first failing pair in row-major order.
inline VerificationReport verify_matrix_tree(const WeightedDigraph& g,
                                             const RationalMatrix& cofactors) {
  const std::vector<Rational> sums = tree_sums(g);
  const int n = g.n();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const Rational& c = cofactors(static_cast<size_t>(i) - 1,
                                    static_cast<size_t>(j) - 1);
      const Rational& w = sums[static_cast<size_t>(j) - 1];
      if (c != w)
        return VerificationReport::failing(
            "matrix-tree", describe(g),
            "cofactor(" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                format_rational(c) + " but the " + std::to_string(j) +
                "-tree sum is " + format_rational(w),
            {i, j});
    }
  return VerificationReport::passing("matrix-tree", describe(g));
}

/// cofactor(L, i, j) = weighted sum of arborescences rooted at j, for all
/// (i, j).
inline VerificationReport verify_matrix_tree(const WeightedDigraph& g) {
  return verify_matrix_tree(g, cofactor_matrix(g));
}

/// Both halves of the dangle identity at vertex i: the weighted sum v_i of
/// the i-dangles equals sum_j a_ij w_j and equals d_i w_i.
inline VerificationReport verify_dangle_identity(const WeightedDigraph& g,
                                                 int i) {
  g.check_vertex(i);
  Rational dangle_sum = 0;
  for (const auto& d : enumerate_dangles(g, i))
    dangle_sum += subgraph_weight(g, d.all_edges());

  const std::vector<Rational> w = weight_vector_enum(g);
  Rational outgoing = 0;
  for (int j : g.out_neighbors(i))
    outgoing += g.weight(i, j) * w[static_cast<size_t>(j) - 1];
  const Rational incoming =
      in_degrees(g)[static_cast<size_t>(i) - 1] * w[static_cast<size_t>(i) - 1];

  const std::string instance = describe(g) + " i=" + std::to_string(i);
  if (outgoing != dangle_sum || dangle_sum != incoming) {
    return VerificationReport::failing(
        "dangle", instance,
        "sum_j a_ij w_j = " + format_rational(outgoing) + ", v_i = " +
            format_rational(dangle_sum) + ", d_i w_i = " +
            format_rational(incoming),
        {i});
  }
  return VerificationReport::passing("dangle", instance);
}

/// Sum of epsilon(beta_f) * wt(f) over spanning forests f rooted at J whose
/// trees each contain exactly one vertex of I.
inline Rational signed_forest_sum(const WeightedDigraph& g, const IndexSet& I,
                                  const IndexSet& J) {
  if (I.size() != J.size())
    fail(errc::size_mismatch,
         "index sets " + I.str() + " and " + J.str() + " differ in size");
  Rational total = 0;
  for (const auto& f : enumerate_forests(g, J))
    if (auto beta = forest_bijection(f, I))
      total += epsilon(*beta) * subgraph_weight(g, f.edges);
  return total;
}

/// det of L with rows I and columns J deleted vs. the signed forest sum.
inline VerificationReport verify_all_minors(const WeightedDigraph& g,
                                            const IndexSet& I,
                                            const IndexSet& J) {
  const Rational det = determinant(delete_rows_cols(laplacian(g), I, J));
  const Rational sum = signed_forest_sum(g, I, J);
  const std::string instance =
      describe(g) + " I=" + I.str() + " J=" + J.str();
  if (det != sum)
    return VerificationReport::failing(
        "all-minors", instance,
        "det L_IJ = " + format_rational(det) + " but the signed forest sum is " +
            format_rational(sum),
        {});
  return VerificationReport::passing("all-minors", instance);
}

/// Replaces, for every j in J except j0, column j of L by the column with
/// -1 in row beta(j0) and +1 in row beta(j); checks that det of the
/// unit-column substitution of L equals the (beta(j0), j0) cofactor of the
/// resulting matrix.
inline VerificationReport specialized_laplacian_check(const WeightedDigraph& g,
                                                const Bijection& beta,
                                                int j0) {
  if (!beta.domain().contains(j0))
    fail(errc::index_out_of_range, "j0 = " + std::to_string(j0) +
                                       " is not in the domain " +
                                       beta.domain().str());
  const RationalMatrix l = laplacian(g);
  const int i0 = beta(j0);
  const Rational lhs = determinant(substitute_unit_columns(l, beta));

  RationalMatrix special = l;
  for (int j : beta.domain()) {
    if (j == j0) continue;
    const size_t col = static_cast<size_t>(j) - 1;
    for (size_t r = 0; r < special.rows(); ++r) special(r, col) = 0;
    special(static_cast<size_t>(i0) - 1, col) = -1;
    special(static_cast<size_t>(beta(j)) - 1, col) = 1;
  }
  const Rational rhs = cofactor(special, i0, j0);

  const std::string instance = describe(g) + " beta=" + beta.str() +
                               " j0=" + std::to_string(j0);
  if (lhs != rhs)
    return VerificationReport::failing(
        "specialization", instance,
        "det L_beta = " + format_rational(lhs) + " but cofactor(" +
            std::to_string(i0) + "," + std::to_string(j0) + ") = " +
            format_rational(rhs),
        {i0, j0});
  return VerificationReport::passing("specialization", instance);
}

}  // namespace harmonic
