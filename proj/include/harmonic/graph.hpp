#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "harmonic/errors.hpp"
#include "harmonic/matrix.hpp"
#include "harmonic/rational.hpp"

namespace harmonic {

/// Directed edge of the host graph, tail -> head.
struct Edge {
  int from = 0;
  int to = 0;
  auto operator<=>(const Edge&) const = default;
};

inline std::string str(const Edge& e) {
  return "(" + std::to_string(e.from) + "," + std::to_string(e.to) + ")";
}

struct WeightedEdge {
  int from = 0;
  int to = 0;
  Rational weight;
};

/// Simple weighted digraph on vertices 1..n. Zero-weight edges are
/// normalized to absent; immutable after construction.
class WeightedDigraph {
public:
  WeightedDigraph(int n, const std::vector<WeightedEdge>& edges) : n_(n) {
    if (n < 1) fail(errc::vertex_out_of_range, "vertex count must be >= 1");
    in_.resize(static_cast<size_t>(n) + 1);
    out_.resize(static_cast<size_t>(n) + 1);
    std::map<std::pair<int, int>, bool> seen;
    for (const auto& e : edges) {
      if (e.from < 1 || e.from > n || e.to < 1 || e.to > n)
        fail(errc::vertex_out_of_range,
             "edge " + str({e.from, e.to}) + " outside 1.." + std::to_string(n));
      if (e.from == e.to)
        fail(errc::self_loop, "self-loop at vertex " + std::to_string(e.from));
      if (!seen.emplace(std::make_pair(e.from, e.to), true).second)
        fail(errc::duplicate_edge, "duplicate edge " + str({e.from, e.to}));
      if (e.weight == 0) continue;
      weights_.emplace(std::make_pair(e.from, e.to), e.weight);
      out_[static_cast<size_t>(e.from)].push_back(e.to);
      in_[static_cast<size_t>(e.to)].push_back(e.from);
    }
    for (auto& v : in_) std::sort(v.begin(), v.end());
    for (auto& v : out_) std::sort(v.begin(), v.end());
  }

  int n() const { return n_; }
  size_t edge_count() const { return weights_.size(); }

  bool has_edge(int i, int j) const {
    return weights_.count(std::make_pair(i, j)) > 0;
  }

  /// Weight of edge i->j; 0 when absent.
  Rational weight(int i, int j) const {
    check_vertex(i);
    check_vertex(j);
    auto it = weights_.find(std::make_pair(i, j));
    return it == weights_.end() ? Rational(0) : it->second;
  }

  /// Sources u of edges u->v in ascending order.
  const std::vector<int>& in_neighbors(int v) const {
    check_vertex(v);
    return in_[static_cast<size_t>(v)];
  }

  const std::vector<int>& out_neighbors(int v) const {
    check_vertex(v);
    return out_[static_cast<size_t>(v)];
  }

  const std::map<std::pair<int, int>, Rational>& edges() const {
    return weights_;
  }

  void check_vertex(int v) const {
    if (v < 1 || v > n_)
      fail(errc::vertex_out_of_range, "vertex " + std::to_string(v) +
                                          " outside 1.." + std::to_string(n_));
  }

private:
  int n_;
  std::map<std::pair<int, int>, Rational> weights_;
  std::vector<std::vector<int>> in_, out_;
};

/// Complete simple digraph on n vertices with unit weights.
inline WeightedDigraph complete_digraph(int n) {
  std::vector<WeightedEdge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) edges.push_back({i, j, Rational(1)});
  return WeightedDigraph(n, edges);
}

/// In-degrees d_i = sum over j of a_ji.
inline std::vector<Rational> in_degrees(const WeightedDigraph& g) {
  std::vector<Rational> d(static_cast<size_t>(g.n()));
  for (const auto& [e, w] : g.edges()) d[static_cast<size_t>(e.second) - 1] += w;
  return d;
}

inline RationalMatrix adjacency_matrix(const WeightedDigraph& g) {
  const size_t n = static_cast<size_t>(g.n());
  RationalMatrix a(n, n);
  for (const auto& [e, w] : g.edges())
    a(static_cast<size_t>(e.first) - 1, static_cast<size_t>(e.second) - 1) = w;
  return a;
}

/// L = D - A with D the in-degree diagonal; every column sums to zero.
inline RationalMatrix laplacian(const WeightedDigraph& g) {
  const size_t n = static_cast<size_t>(g.n());
  RationalMatrix l(n, n);
  for (const auto& [e, w] : g.edges()) {
    const size_t i = static_cast<size_t>(e.first) - 1;
    const size_t j = static_cast<size_t>(e.second) - 1;
    l(i, j) -= w;
    l(j, j) += w;
  }
  return l;
}

namespace detail {

/// Vertices reachable from start along nonzero-weight edges, forward or
/// backward.
inline std::vector<bool> reachable(const WeightedDigraph& g, int start,
                                   bool forward) {
  std::vector<bool> seen(static_cast<size_t>(g.n()) + 1, false);
  std::vector<int> stack{start};
  seen[static_cast<size_t>(start)] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    const auto& next = forward ? g.out_neighbors(v) : g.in_neighbors(v);
    for (int w : next)
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = true;
        stack.push_back(w);
      }
  }
  return seen;
}

}  // namespace detail

/// True iff every vertex reaches every other along nonzero-weight edges.
/// Single-vertex graphs are vacuously strongly connected.
inline bool is_strongly_connected(const WeightedDigraph& g) {
  auto fwd = detail::reachable(g, 1, true);
  auto bwd = detail::reachable(g, 1, false);
  for (int v = 1; v <= g.n(); ++v)
    if (!fwd[static_cast<size_t>(v)] || !bwd[static_cast<size_t>(v)])
      return false;
  return true;
}

/// Smallest (u, v) in lexicographic order with no directed path u -> v, if
/// the graph is not strongly connected.
inline std::optional<std::pair<int, int>> find_unreachable_pair(
    const WeightedDigraph& g) {
  for (int u = 1; u <= g.n(); ++u) {
    auto fwd = detail::reachable(g, u, true);
    for (int v = 1; v <= g.n(); ++v)
      if (!fwd[static_cast<size_t>(v)]) return std::make_pair(u, v);
  }
  return std::nullopt;
}

}  // namespace harmonic
