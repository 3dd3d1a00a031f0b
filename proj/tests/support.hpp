#ifndef NORMCOL_TESTS_SUPPORT_HPP
#define NORMCOL_TESTS_SUPPORT_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "normcol/coloring.hpp"
#include "normcol/graph.hpp"

namespace testing {

using namespace normcol;

template <class F>
std::optional<ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline CubicGraph relabel(const CubicGraph& g, const std::vector<VertexId>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]});
  return CubicGraph(g.vertex_count(), std::move(edges));
}

inline CubicGraph shuffled(const CubicGraph& g, std::mt19937& rng) {
  std::vector<VertexId> perm(static_cast<std::size_t>(g.vertex_count()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]});
  std::shuffle(edges.begin(), edges.end(), rng);
  return CubicGraph(g.vertex_count(), std::move(edges));
}

// Isomorphism-class key by trying every vertex permutation (small n only).
inline std::vector<std::pair<int, int>> brute_canonical(const CubicGraph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.vertex_count()));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<int, int>> best;
  do {
    std::vector<std::pair<int, int>> form;
    for (const Edge& e : g.edges()) {
      const int a = perm[static_cast<std::size_t>(e.u)], b = perm[static_cast<std::size_t>(e.v)];
      form.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(form.begin(), form.end());
    if (best.empty() || form < best) best = std::move(form);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline int components_without(const CubicGraph& g, const std::vector<bool>& removed) {
  std::vector<int> comp(static_cast<std::size_t>(g.vertex_count()), -1);
  int count = 0;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<VertexId> stack{s};
    comp[static_cast<std::size_t>(s)] = count;
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(x)) {
        if (removed[static_cast<std::size_t>(e)]) continue;
        const VertexId y = g.edge(e).other(x);
        if (comp[static_cast<std::size_t>(y)] < 0) {
          comp[static_cast<std::size_t>(y)] = count;
          stack.push_back(y);
        }
      }
    }
    ++count;
  }
  return count;
}

// Connectivity from vertex bipartitions instead of edge subsets.
struct CutOracle {
  bool bridgeless = true;
  int edge_connectivity_capped_at_4 = 4;
  bool cyclically_4_edge_connected = true;
};

inline bool has_cycle(const CubicGraph& g, std::uint32_t side) {
  // A vertex set spans a cycle iff its induced subgraph has at least as many
  // edges as vertices in some component; check |E| >= |V| per component.
  const int n = g.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  for (VertexId s = 0; s < n; ++s) {
    if (!(side >> s & 1) || comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<VertexId> stack{s}, members;
    comp[static_cast<std::size_t>(s)] = s;
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      members.push_back(x);
      for (EdgeId e : g.incident(x)) {
        const VertexId y = g.edge(e).other(x);
        if ((side >> y & 1) && comp[static_cast<std::size_t>(y)] < 0) {
          comp[static_cast<std::size_t>(y)] = s;
          stack.push_back(y);
        }
      }
    }
    int edges = 0;
    for (const Edge& e : g.edges())
      if (comp[static_cast<std::size_t>(e.u)] == s && comp[static_cast<std::size_t>(e.v)] == s) ++edges;
    if (edges >= static_cast<int>(members.size())) return true;
  }
  return false;
}

inline CutOracle cut_oracle(const CubicGraph& g) {
  CutOracle out;
  const int n = g.vertex_count();
  const int m = g.edge_count();
  for (EdgeId e = 0; e < m; ++e) {
    std::vector<bool> removed(static_cast<std::size_t>(m), false);
    const int before = components_without(g, removed);
    removed[static_cast<std::size_t>(e)] = true;
    if (components_without(g, removed) > before) out.bridgeless = false;
  }
  if (components_without(g, std::vector<bool>(static_cast<std::size_t>(m), false)) > 1) {
    out.edge_connectivity_capped_at_4 = 0;
  }
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t side = 1; side < full; ++side) {
    int cut = 0;
    for (const Edge& e : g.edges()) cut += ((side >> e.u) & 1) != ((side >> e.v) & 1);
    out.edge_connectivity_capped_at_4 = std::min(out.edge_connectivity_capped_at_4, cut);
    if (cut <= 3 && has_cycle(g, side) && has_cycle(g, full & ~side)) out.cyclically_4_edge_connected = false;
  }
  return out;
}

// Abnormal edges by the definition, with no bitmask shortcuts.
inline int count_abnormal(const CubicGraph& g, std::span<const Color> colors) {
  int count = 0;
  for (const Edge& e : g.edges()) {
    std::set<Color> seen;
    for (VertexId x : {e.u, e.v})
      for (EdgeId f : g.incident(x)) seen.insert(colors[static_cast<std::size_t>(f)]);
    if (seen.size() == 4) ++count;
  }
  return count;
}

inline bool proper(const CubicGraph& g, std::span<const Color> colors) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::set<Color> seen;
    for (EdgeId e : g.incident(v)) seen.insert(colors[static_cast<std::size_t>(e)]);
    if (seen.size() != 3) return false;
  }
  return true;
}

// Small cubic multigraphs outside the simple enumeration.
inline std::vector<CubicGraph> multigraph_corpus() {
  return {
      CubicGraph(2, {{0, 1}, {0, 1}, {0, 1}}),
      CubicGraph(4, {{0, 1}, {0, 1}, {2, 3}, {2, 3}, {0, 2}, {1, 3}}),
      CubicGraph(6, {{0, 1}, {0, 1}, {1, 2}, {0, 2}, {3, 4}, {3, 4}, {4, 5}, {3, 5}, {2, 5}}),
      CubicGraph(4, {{0, 1}, {0, 1}, {1, 2}, {0, 3}, {2, 3}, {2, 3}}),
      CubicGraph(6, {{0, 1}, {0, 1}, {2, 3}, {2, 3}, {4, 5}, {4, 5}, {0, 2}, {3, 4}, {5, 1}}),
  };
}

}  // namespace testing

#endif  // NORMCOL_TESTS_SUPPORT_HPP
