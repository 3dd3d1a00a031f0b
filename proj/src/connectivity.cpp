#include <numeric>

#include "normcol/graph.hpp"

namespace normcol {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) { reset(); }
  void reset() { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

 private:
  std::vector<int> parent_;
};

struct CutOutcome {
  int components = 0;
  int cyclic_components = 0;
};

class CutEvaluator {
 public:
  explicit CutEvaluator(const CubicGraph& g)
      : g_(g), sets_(g.vertex_count()), vertices_(static_cast<std::size_t>(g.vertex_count())),
        edges_(static_cast<std::size_t>(g.vertex_count())), removed_(static_cast<std::size_t>(g.edge_count()), 0) {}

  CutOutcome evaluate(std::span<const EdgeId> cut) {
    for (EdgeId e : cut) removed_[static_cast<std::size_t>(e)] = 1;
    sets_.reset();
    for (EdgeId e = 0; e < g_.edge_count(); ++e)
      if (!removed_[static_cast<std::size_t>(e)]) sets_.unite(g_.edge(e).u, g_.edge(e).v);
    std::fill(vertices_.begin(), vertices_.end(), 0);
    std::fill(edges_.begin(), edges_.end(), 0);
    for (VertexId v = 0; v < g_.vertex_count(); ++v) ++vertices_[static_cast<std::size_t>(sets_.find(v))];
    for (EdgeId e = 0; e < g_.edge_count(); ++e)
      if (!removed_[static_cast<std::size_t>(e)]) ++edges_[static_cast<std::size_t>(sets_.find(g_.edge(e).u))];
    CutOutcome out;
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      if (vertices_[static_cast<std::size_t>(v)] == 0) continue;
      ++out.components;
      if (edges_[static_cast<std::size_t>(v)] >= vertices_[static_cast<std::size_t>(v)]) ++out.cyclic_components;
    }
    for (EdgeId e : cut) removed_[static_cast<std::size_t>(e)] = 0;
    return out;
  }

 private:
  const CubicGraph& g_;
  DisjointSets sets_;
  std::vector<int> vertices_;
  std::vector<int> edges_;
  std::vector<char> removed_;
};

}  // namespace

// Enumerates every edge subset of size <= 3. A subset disconnects when it
// raises the component count; it is a cyclic cut when two or more of the
// remaining components still contain a cycle.
ConnectivityReport connectivity_report(const CubicGraph& g) {
  CutEvaluator eval(g);
  const int m = g.edge_count();
  const CutOutcome base = eval.evaluate({});
  int connectivity = base.components > 1 ? 0 : 4;
  bool bridgeless = true;
  bool cyc4 = base.cyclic_components <= 1;

  std::array<EdgeId, 3> cut{};
  auto visit = [&](int size) {
    const CutOutcome r = eval.evaluate(std::span<const EdgeId>(cut.data(), static_cast<std::size_t>(size)));
    if (r.components > base.components) {
      if (size == 1) bridgeless = false;
      connectivity = std::min(connectivity, size);
    }
    if (r.cyclic_components >= 2) cyc4 = false;
  };
  for (int a = 0; a < m; ++a) {
    cut[0] = a;
    visit(1);
    for (int b = a + 1; b < m; ++b) {
      cut[1] = b;
      visit(2);
      for (int c = b + 1; c < m; ++c) {
        cut[2] = c;
        visit(3);
      }
    }
  }
  return {bridgeless, connectivity, cyc4};
}

}  // namespace normcol
