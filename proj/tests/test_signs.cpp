#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "harmonic/index_set.hpp"
#include "harmonic/signs.hpp"

using harmonic::Bijection;
using harmonic::Error;
using harmonic::errc;
using harmonic::IndexSet;
using harmonic::Sign;

namespace {

Bijection make(std::vector<std::pair<int, int>> pairs) {
  return Bijection(std::move(pairs));
}

/// All bijections from `domain` onto `codomain` (equal sizes).
std::vector<Bijection> all_bijections(const IndexSet& domain,
                                      const IndexSet& codomain) {
  std::vector<int> images = codomain.elements();
  std::sort(images.begin(), images.end());
  std::vector<Bijection> out;
  do {
    std::vector<std::pair<int, int>> pairs;
    for (size_t k = 0; k < domain.size(); ++k)
      pairs.emplace_back(domain[k], images[k]);
    out.push_back(Bijection(std::move(pairs)));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace

TEST_CASE("index sets sort, deduplicate strictly, and validate range") {
  const IndexSet s({3, 1, 2});
  CHECK(s.str() == "{1,2,3}");
  CHECK(s.size() == 3);
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(4));
  CHECK(s.rank(3) == 2);
  CHECK(s.rank(7) == -1);
  CHECK(s.sum() == 6);
  CHECK(IndexSet::full(3) == s);
  CHECK(IndexSet{}.empty());
  CHECK(IndexSet{}.str() == "{}");
  CHECK_THROWS_AS(IndexSet({1, 1}), Error);
  CHECK_THROWS_AS(IndexSet({0}), Error);
  CHECK_THROWS_AS(IndexSet({-2}), Error);
}

TEST_CASE("index_subsets is exhaustive and lexicographic") {
  const auto subsets = harmonic::index_subsets(4, 2);
  REQUIRE(subsets.size() == 6);
  CHECK(subsets.front().str() == "{1,2}");
  CHECK(subsets[1].str() == "{1,3}");
  CHECK(subsets.back().str() == "{3,4}");

  CHECK(harmonic::index_subsets(3, 0) ==
        std::vector<IndexSet>{IndexSet{}});
  CHECK(harmonic::index_subsets(3, 3).size() == 1);
  CHECK(harmonic::index_subsets(3, 4).empty());
}

TEST_CASE("bijections validate their domain and images") {
  const Bijection b = make({{2, 1}, {4, 3}});
  CHECK(b.domain().str() == "{2,4}");
  CHECK(b.codomain().str() == "{1,3}");
  CHECK(b(2) == 1);
  CHECK(b(4) == 3);
  CHECK(b.str() == "{2->1, 4->3}");
  CHECK_THROWS_AS(b(3), Error);
  CHECK(b.inverse()(1) == 2);
  CHECK(Bijection::identity(IndexSet({5, 2}))(5) == 5);
  CHECK_THROWS_AS(make({{2, 1}, {2, 3}}), Error);  // domain repeated
  CHECK_THROWS_AS(make({{2, 1}, {4, 1}}), Error);  // image repeated
}

TEST_CASE("inversion counts") {
  CHECK(harmonic::inversions(make({{2, 1}, {4, 3}})) == 0);
  CHECK(harmonic::inversions(make({{2, 3}, {4, 1}})) == 1);
  CHECK(harmonic::inversions(Bijection::identity(IndexSet::full(4))) == 0);
  CHECK(harmonic::inversions(make({{1, 3}, {2, 2}, {3, 1}})) == 3);
}

TEST_CASE("epsilon evaluates (-1)^(inv + sum I + sum J)") {
  CHECK(harmonic::epsilon(make({{2, 1}})) == Sign::minus);   // 0 + 1 + 2
  CHECK(harmonic::epsilon(make({{2, 1}, {4, 3}})) == Sign::plus);  // 0 + 4 + 6
  // Permutations: epsilon reduces to the permutation sign.
  CHECK(harmonic::epsilon(make({{1, 2}, {2, 1}})) == Sign::minus);
  CHECK(harmonic::epsilon(Bijection::identity(IndexSet::full(5))) ==
        Sign::plus);
}

TEST_CASE("composition checks domains and multiplies signs") {
  const Bijection beta = make({{2, 1}});   // {2} -> {1}
  const Bijection alpha = make({{1, 3}});  // {1} -> {3}
  const Bijection both = harmonic::compose(alpha, beta);
  CHECK(both(2) == 3);
  CHECK(harmonic::epsilon(alpha) == Sign::plus);   // 0 + 3 + 1
  CHECK(harmonic::epsilon(beta) == Sign::minus);
  CHECK(harmonic::epsilon(both) == Sign::minus);   // 0 + 3 + 2
  CHECK_THROWS_AS(harmonic::compose(beta, alpha), Error);

  const Bijection id = harmonic::compose(beta.inverse(), beta);
  CHECK(id == Bijection::identity(IndexSet({2})));
  CHECK(harmonic::epsilon(beta) * harmonic::epsilon(beta.inverse()) ==
        Sign::plus);
}

TEST_CASE("epsilon is multiplicative over all composable pairs up to n=4") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= n; ++k)
      for (const IndexSet& J : harmonic::index_subsets(n, k))
        for (const IndexSet& I : harmonic::index_subsets(n, k))
          for (const IndexSet& H : harmonic::index_subsets(n, k))
            for (const Bijection& beta : all_bijections(J, I))
              for (const Bijection& alpha : all_bijections(I, H))
                REQUIRE(harmonic::epsilon(harmonic::compose(alpha, beta)) ==
                        harmonic::epsilon(alpha) * harmonic::epsilon(beta));
}

TEST_CASE("cycle decomposition is canonical") {
  const auto id = harmonic::cycle_decomposition(
      Bijection::identity(IndexSet({2, 4})));
  REQUIRE(id.cycles == std::vector<std::vector<int>>{{2}, {4}});

  const auto swap2 = harmonic::cycle_decomposition(make({{2, 4}, {4, 2}}));
  REQUIRE(swap2.cycles == std::vector<std::vector<int>>{{2, 4}});

  const auto mixed = harmonic::cycle_decomposition(
      make({{1, 3}, {3, 5}, {5, 1}, {2, 2}}));
  REQUIRE(mixed.cycles == std::vector<std::vector<int>>{{1, 3, 5}, {2}});

  CHECK_THROWS_AS(harmonic::cycle_decomposition(make({{2, 1}})), Error);
}

TEST_CASE("sign_from_cycles multiplies (-1)^(len-1)") {
  using CD = harmonic::CycleDecomposition;
  CHECK(harmonic::sign_from_cycles(CD{{{1}, {2}, {3}}}) == Sign::plus);
  CHECK(harmonic::sign_from_cycles(CD{{{1, 2}}}) == Sign::minus);
  CHECK(harmonic::sign_from_cycles(CD{{{1, 2, 3}, {4, 5}}}) == Sign::minus);
  CHECK(harmonic::sign_from_cycles(CD{{}}) == Sign::plus);
}

TEST_CASE("cycle sign agrees with epsilon for all permutations up to 5") {
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k)
      for (const IndexSet& J : harmonic::index_subsets(n, k))
        for (const Bijection& sigma : all_bijections(J, J))
          REQUIRE(harmonic::sign_from_cycles(
                      harmonic::cycle_decomposition(sigma)) ==
                  harmonic::epsilon(sigma));
}

TEST_CASE("inversions are invariant under order-preserving relabeling") {
  // Relabel domain and codomain to {1..k} by their order; the induced
  // permutation of positions must have the same inversion count.
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= n; ++k)
      for (const IndexSet& J : harmonic::index_subsets(n, k))
        for (const IndexSet& I : harmonic::index_subsets(n, k))
          for (const Bijection& beta : all_bijections(J, I)) {
            std::vector<std::pair<int, int>> relabeled;
            for (size_t p = 0; p < beta.size(); ++p)
              relabeled.emplace_back(
                  static_cast<int>(p) + 1,
                  beta.codomain().rank(beta.image_at(p)) + 1);
            REQUIRE(harmonic::inversions(Bijection(std::move(relabeled))) ==
                    harmonic::inversions(beta));
          }
}
