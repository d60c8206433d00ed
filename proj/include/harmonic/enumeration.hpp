#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "harmonic/errors.hpp"
#include "harmonic/graph.hpp"
#include "harmonic/index_set.hpp"
#include "harmonic/signs.hpp"

namespace harmonic {

/// Spanning directed tree: each non-root vertex has exactly one incoming
/// edge and walking edges backwards always reaches the root.
struct Arborescence {
  int root = 0;
  std::vector<Edge> edges;  // sorted by head vertex
  bool operator==(const Arborescence&) const = default;
};

/// Spanning forest of arborescences whose roots are exactly `roots`.
struct RootedForest {
  IndexSet roots;
  std::vector<Edge> edges;  // sorted by head vertex
  bool operator==(const RootedForest&) const = default;
};

/// Spanning subgraph made of one directed simple cycle plus a forest rooted
/// at exactly the cycle's vertices; every vertex has one incoming edge.
struct Dangle {
  std::vector<int> cycle;  // vertex order around the cycle, anchor first
  std::vector<Edge> forest_edges;
  bool operator==(const Dangle&) const = default;

  std::vector<Edge> all_edges() const {
    std::vector<Edge> out;
    for (size_t k = 0; k < cycle.size(); ++k)
      out.push_back({cycle[k], cycle[(k + 1) % cycle.size()]});
    out.insert(out.end(), forest_edges.begin(), forest_edges.end());
    return out;
  }
};

namespace detail {

/// Backtracks over "pick the incoming edge of each non-root vertex" in
/// increasing vertex order, candidate parents in increasing order. A partial
/// choice is pruned as soon as the parent chain from the new vertex loops
/// back to it.
class ForestEnumerator {
public:
  ForestEnumerator(const WeightedDigraph& g, const IndexSet& roots)
      : g_(g), parent_(static_cast<size_t>(g.n()) + 1, 0) {
    for (int v = 1; v <= g.n(); ++v)
      if (!roots.contains(v)) nonroots_.push_back(v);
  }

  void run(const std::function<void(const std::vector<Edge>&)>& emit) {
    emit_ = &emit;
    extend(0);
  }

private:
  void extend(size_t k) {
    if (k == nonroots_.size()) {
      std::vector<Edge> edges;
      edges.reserve(nonroots_.size());
      for (int v : nonroots_) edges.push_back({parent_[static_cast<size_t>(v)], v});
      (*emit_)(edges);
      return;
    }
    const int v = nonroots_[k];
    for (int u : g_.in_neighbors(v)) {
      parent_[static_cast<size_t>(v)] = u;
      if (!closes_cycle(v)) extend(k + 1);
    }
    parent_[static_cast<size_t>(v)] = 0;
  }

  bool closes_cycle(int v) const {
    int cur = parent_[static_cast<size_t>(v)];
    while (cur != 0) {
      if (cur == v) return true;
      cur = parent_[static_cast<size_t>(cur)];
    }
    return false;
  }

  const WeightedDigraph& g_;
  std::vector<int> nonroots_;
  std::vector<int> parent_;
  const std::function<void(const std::vector<Edge>&)>* emit_ = nullptr;
};

}  // namespace detail

/// All spanning forests with the exact root set, in deterministic
/// backtracking order. An empty root set admits no spanning forest on n >= 1
/// vertices and yields an empty sequence.
inline std::vector<RootedForest> enumerate_forests(const WeightedDigraph& g,
                                                   const IndexSet& roots) {
  for (int r : roots) g.check_vertex(r);
  std::vector<RootedForest> out;
  detail::ForestEnumerator walker(g, roots);
  walker.run([&](const std::vector<Edge>& edges) {
    out.push_back({roots, edges});
  });
  return out;
}

/// All spanning arborescences rooted at `root`, in deterministic order.
inline std::vector<Arborescence> enumerate_arborescences(
    const WeightedDigraph& g, int root) {
  g.check_vertex(root);
  std::vector<Arborescence> out;
  detail::ForestEnumerator walker(g, IndexSet{root});
  walker.run([&](const std::vector<Edge>& edges) {
    out.push_back({root, edges});
  });
  return out;
}

/// All directed simple cycles through `anchor` (length >= 2), each reported
/// once as the vertex sequence starting at the anchor; depth-first with
/// ascending successors.
inline std::vector<std::vector<int>> enumerate_cycles_through(
    const WeightedDigraph& g, int anchor) {
  g.check_vertex(anchor);
  std::vector<std::vector<int>> out;
  std::vector<int> path{anchor};
  std::vector<bool> on_path(static_cast<size_t>(g.n()) + 1, false);
  on_path[static_cast<size_t>(anchor)] = true;

  std::function<void()> grow = [&]() {
    const int v = path.back();
    for (int w : g.out_neighbors(v)) {
      if (w == anchor) {
        if (path.size() >= 2) out.push_back(path);
      } else if (!on_path[static_cast<size_t>(w)]) {
        on_path[static_cast<size_t>(w)] = true;
        path.push_back(w);
        grow();
        path.pop_back();
        on_path[static_cast<size_t>(w)] = false;
      }
    }
  };
  grow();
  return out;
}

/// All spanning dangles whose cycle passes through vertex i: each simple
/// cycle through i paired with every spanning forest rooted at the cycle's
/// vertex set.
inline std::vector<Dangle> enumerate_dangles(const WeightedDigraph& g, int i) {
  g.check_vertex(i);
  std::vector<Dangle> out;
  for (const auto& cycle : enumerate_cycles_through(g, i)) {
    IndexSet cycle_roots(std::vector<int>(cycle.begin(), cycle.end()));
    for (auto& forest : enumerate_forests(g, cycle_roots))
      out.push_back({cycle, std::move(forest.edges)});
  }
  return out;
}

/// Product of the host graph's weights over the edge set; 1 for the empty
/// set. Every edge must be present with nonzero weight.
inline Rational subgraph_weight(const WeightedDigraph& g,
                                const std::vector<Edge>& edges) {
  Rational w = 1;
  for (const Edge& e : edges) {
    if (!g.has_edge(e.from, e.to))
      fail(errc::missing_edge, "edge " + str(e) + " is not in the graph");
    w *= g.weight(e.from, e.to);
  }
  return w;
}

/// w_i = weighted sum of all spanning arborescences rooted at i.
inline std::vector<Rational> weight_vector_enum(const WeightedDigraph& g) {
  std::vector<Rational> w(static_cast<size_t>(g.n()));
  for (int root = 1; root <= g.n(); ++root) {
    Rational sum = 0;
    for (const auto& t : enumerate_arborescences(g, root))
      sum += subgraph_weight(g, t.edges);
    w[static_cast<size_t>(root) - 1] = sum;
  }
  return w;
}

/// If every tree of the forest contains exactly one vertex of `targets`,
/// the bijection sending each root to that vertex; otherwise nullopt.
inline std::optional<Bijection> forest_bijection(const RootedForest& f,
                                                 const IndexSet& targets) {
  if (targets.size() != f.roots.size())
    fail(errc::size_mismatch, "forest with " + std::to_string(f.roots.size()) +
                                  " roots vs " + std::to_string(targets.size()) +
                                  " target vertices");
  // Walk each target vertex up to its root.
  std::map<int, int> parent;
  for (const Edge& e : f.edges) parent[e.to] = e.from;
  std::map<int, int> image;  // root -> unique target in its tree
  for (int t : targets) {
    int v = t;
    for (auto it = parent.find(v); it != parent.end(); it = parent.find(v))
      v = it->second;
    auto [pos, fresh] = image.emplace(v, t);
    (void)pos;
    if (!fresh) return std::nullopt;  // two targets in one tree
  }
  // Sizes match and the images are distinct, so every root got a target.
  std::vector<std::pair<int, int>> pairs(image.begin(), image.end());
  return Bijection(std::move(pairs));
}

}  // namespace harmonic
