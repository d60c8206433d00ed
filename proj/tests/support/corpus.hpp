#pragma once

// Seeded random instance generators shared by the unit and acceptance
// suites. Everything is driven by a caller-owned std::mt19937 so runs are
// reproducible.

#include <algorithm>
#include <random>
#include <vector>

#include "harmonic/graph.hpp"
#include "harmonic/index_set.hpp"
#include "harmonic/matrix.hpp"
#include "harmonic/signs.hpp"

namespace corpus {

/// Random simple digraph: each ordered pair enters with probability
/// `density`, weights uniform integers in [wmin, wmax] (draws of 0 simply
/// leave the edge out).
inline harmonic::WeightedDigraph random_graph(std::mt19937& rng, int n,
                                              double density, int wmin,
                                              int wmax) {
  std::bernoulli_distribution pick(density);
  std::uniform_int_distribution<int> weight(wmin, wmax);
  std::vector<harmonic::WeightedEdge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j || !pick(rng)) continue;
      const int w = weight(rng);
      if (w != 0) edges.push_back({i, j, harmonic::Rational(w)});
    }
  return harmonic::WeightedDigraph(n, edges);
}

/// The standard test corpus: n cycles through 1..6, density through
/// {0.3, 0.6, 1.0}, weights alternating between [-5, 5] and [1, 9].
inline std::vector<harmonic::WeightedDigraph> standard_corpus(unsigned seed,
                                                              size_t count) {
  std::mt19937 rng(seed);
  const double densities[] = {0.3, 0.6, 1.0};
  std::vector<harmonic::WeightedDigraph> graphs;
  graphs.reserve(count);
  for (size_t k = 0; k < count; ++k) {
    const int n = static_cast<int>(k % 6) + 1;
    const double density = densities[(k / 6) % 3];
    const bool signed_weights = (k / 18) % 2 == 0;
    graphs.push_back(random_graph(rng, n, density,
                                  signed_weights ? -5 : 1,
                                  signed_weights ? 5 : 9));
  }
  return graphs;
}

/// Strongly connected by construction: a full directed cycle with random
/// positive weights, plus extra random edges.
inline harmonic::WeightedDigraph random_strongly_connected(std::mt19937& rng,
                                                           int n, int wmin = 1,
                                                           int wmax = 9) {
  std::uniform_int_distribution<int> weight(wmin, wmax);
  std::bernoulli_distribution extra(0.4);
  std::vector<harmonic::WeightedEdge> edges;
  if (n > 1)  // a single vertex is strongly connected with no edges at all
    for (int v = 1; v <= n; ++v)
      edges.push_back({v, v % n + 1, harmonic::Rational(weight(rng))});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j || j == i % n + 1 || !extra(rng)) continue;
      const int w = weight(rng);
      if (w != 0) edges.push_back({i, j, harmonic::Rational(w)});
    }
  return harmonic::WeightedDigraph(n, edges);
}

/// Dense random matrix with small rational entries.
inline harmonic::RationalMatrix random_matrix(std::mt19937& rng, size_t n,
                                              bool integer_entries = false) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  harmonic::RationalMatrix m(n, n);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c)
      m(r, c) = harmonic::make_rational(num(rng),
                                        integer_entries ? 1 : den(rng));
  return m;
}

/// Uniformly random k-subset of {1..n}.
inline harmonic::IndexSet random_subset(std::mt19937& rng, int n, int k) {
  std::vector<int> pool;
  for (int v = 1; v <= n; ++v) pool.push_back(v);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(static_cast<size_t>(k));
  return harmonic::IndexSet(std::move(pool));
}

/// Random bijection between random k-subsets of {1..n}.
inline harmonic::Bijection random_bijection(std::mt19937& rng, int n, int k) {
  const harmonic::IndexSet domain = random_subset(rng, n, k);
  std::vector<int> images = random_subset(rng, n, k).elements();
  std::shuffle(images.begin(), images.end(), rng);
  std::vector<std::pair<int, int>> pairs;
  for (size_t p = 0; p < domain.size(); ++p)
    pairs.emplace_back(domain[p], images[p]);
  return harmonic::Bijection(std::move(pairs));
}

}  // namespace corpus
