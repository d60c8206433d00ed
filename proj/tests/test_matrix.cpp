#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "harmonic/matrix.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using harmonic::Bijection;
using harmonic::Error;
using harmonic::IndexSet;
using harmonic::Rational;
using harmonic::RationalMatrix;

namespace {

// The running 3-cycle Laplacian with a_12 = a, a_23 = b, a_31 = c.
RationalMatrix three_cycle_laplacian(int a, int b, int c) {
  return RationalMatrix{{c, -a, 0}, {0, a, -b}, {-c, 0, b}};
}

}  // namespace

TEST_CASE("determinant handles the degenerate and pinned cases") {
  CHECK(harmonic::determinant(RationalMatrix{}) == 1);  // 0x0
  CHECK(harmonic::determinant(RationalMatrix::identity(3)) == 1);
  CHECK(harmonic::determinant(RationalMatrix{{5, -3}, {-5, 3}}) == 0);
  CHECK(harmonic::determinant(RationalMatrix{{0, -2}, {-3, 2}}) == -6);
  CHECK_THROWS_AS(harmonic::determinant(RationalMatrix(2, 3)), Error);
}

TEST_CASE("determinant needs pivot swaps when a leading zero appears") {
  // First pivot zero forces a row swap (one sign flip).
  const RationalMatrix m{{0, 1, 2}, {3, 0, 1}, {1, 1, 1}};
  CHECK(harmonic::determinant(m) == oracles::det_by_expansion(m));
  // Singular matrix with an initially zero pivot column tail.
  const RationalMatrix s{{0, 1}, {0, 2}};
  CHECK(harmonic::determinant(s) == 0);
}

TEST_CASE("determinant clears rational rows exactly") {
  const RationalMatrix m{
      {harmonic::make_rational(1, 2), harmonic::make_rational(1, 3)},
      {harmonic::make_rational(2, 5), harmonic::make_rational(7, 4)}};
  CHECK(harmonic::determinant(m) ==
        harmonic::make_rational(1, 2) * harmonic::make_rational(7, 4) -
            harmonic::make_rational(1, 3) * harmonic::make_rational(2, 5));
}

TEST_CASE("delete_rows_cols removes 1-based rows and columns") {
  const RationalMatrix l = three_cycle_laplacian(1, 2, 3);
  CHECK(harmonic::delete_rows_cols(l, IndexSet({1}), IndexSet({2})) ==
        RationalMatrix{{0, -2}, {-3, 2}});
  CHECK(harmonic::delete_rows_cols(l, IndexSet{}, IndexSet{}) == l);
  const RationalMatrix empty =
      harmonic::delete_rows_cols(l, IndexSet::full(3), IndexSet::full(3));
  CHECK(empty.rows() == 0);
  CHECK(empty.cols() == 0);
  CHECK_THROWS_AS(harmonic::delete_rows_cols(l, IndexSet({4}), IndexSet({1})),
                  Error);
}

TEST_CASE("cofactor applies the checkerboard sign to the minor") {
  const RationalMatrix l{{5, -3}, {-5, 3}};  // 2-cycle, a=3, b=5
  CHECK(harmonic::cofactor(l, 1, 1) == 3);
  CHECK(harmonic::cofactor(l, 1, 2) == 5);
  CHECK(harmonic::cofactor(RationalMatrix{{0}}, 1, 1) == 1);
  CHECK_THROWS_AS(harmonic::cofactor(l, 0, 1), Error);
  CHECK_THROWS_AS(harmonic::cofactor(l, 1, 3), Error);
}

TEST_CASE("adjugate satisfies m * adj(m) = det(m) * I") {
  CHECK(harmonic::adjugate(RationalMatrix::identity(4)) ==
        RationalMatrix::identity(4));
  CHECK(harmonic::adjugate(RationalMatrix{{5, -3}, {-5, 3}}) ==
        RationalMatrix{{3, 3}, {5, 5}});

  std::mt19937 rng(7);
  for (size_t n = 1; n <= 5; ++n) {
    const RationalMatrix m = corpus::random_matrix(rng, n);
    const RationalMatrix product = m * harmonic::adjugate(m);
    RationalMatrix expected = RationalMatrix::identity(n);
    const Rational det = harmonic::determinant(m);
    for (size_t i = 0; i < n; ++i) expected(i, i) = det;
    REQUIRE(product == expected);
  }
}

TEST_CASE("substitute_unit_columns rewrites exactly the domain columns") {
  const RationalMatrix l = three_cycle_laplacian(1, 2, 3);
  const Bijection beta({{2, 1}});
  CHECK(harmonic::substitute_unit_columns(l, beta) ==
        RationalMatrix{{3, 1, 0}, {0, 0, -2}, {-3, 0, 2}});
  CHECK(harmonic::substitute_unit_columns(l, Bijection{}) == l);
  CHECK(harmonic::substitute_unit_columns(
            RationalMatrix{{7, 8}, {9, 10}},
            Bijection::identity(IndexSet::full(2))) ==
        RationalMatrix::identity(2));
}

TEST_CASE("rank by exact elimination") {
  CHECK(harmonic::rank(RationalMatrix{{5, -3}, {-5, 3}}) == 1);
  CHECK(harmonic::rank(RationalMatrix::identity(3)) == 3);
  CHECK(harmonic::rank(three_cycle_laplacian(1, 1, 1)) == 2);
  CHECK(harmonic::rank(RationalMatrix{}) == 0);
  CHECK(harmonic::rank(RationalMatrix(2, 3)) == 0);  // all zeros, non-square
}

TEST_CASE("matrix products check their shapes") {
  const RationalMatrix a{{1, 2}, {3, 4}};
  CHECK(a * RationalMatrix::identity(2) == a);
  CHECK_THROWS_AS(a * RationalMatrix(3, 2), Error);
  CHECK(a * std::vector<Rational>{1, 1} == std::vector<Rational>{3, 7});
  CHECK_THROWS_AS(a * std::vector<Rational>{1}, Error);
}

TEST_CASE("Bareiss, plain elimination, and cofactor expansion agree") {
  std::mt19937 rng(20240812);
  for (int trial = 0; trial < 60; ++trial) {
    const size_t n = 1 + static_cast<size_t>(trial % 5);
    const RationalMatrix m = corpus::random_matrix(rng, n, trial % 2 == 0);
    const Rational det = harmonic::determinant(m);
    REQUIRE(det == oracles::det_by_expansion(m));
    REQUIRE(det == harmonic::determinant_by_elimination(m));
  }
}

TEST_CASE("det X_beta = epsilon(beta) * det X_IJ") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> size(1, 6);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = size(rng);
    std::uniform_int_distribution<int> subset(0, std::min(n, 3));
    const int k = subset(rng);
    const RationalMatrix m = corpus::random_matrix(rng, static_cast<size_t>(n));
    const Bijection beta = corpus::random_bijection(rng, n, k);
    const Rational lhs =
        harmonic::determinant(harmonic::substitute_unit_columns(m, beta));
    const Rational rhs =
        harmonic::epsilon(beta) *
        harmonic::determinant(harmonic::delete_rows_cols(
            m, beta.codomain(), beta.domain()));
    REQUIRE(lhs == rhs);
  }
}
