// Reference enumeration for min_abnormal. Shares no search or classification
// code with the branch and bound: colorings are enumerated in plain edge-id
// order with no bounding, and each edge is classified from scratch as soon as
// every edge touching its endpoints has a color.

#include <algorithm>
#include <array>

#include "normcol/solver.hpp"

namespace normcol {
namespace {

class Enumeration {
 public:
  Enumeration(const CubicGraph& g, int k) : g_(g), k_(k), color_(static_cast<std::size_t>(g.edge_count()), 0) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      std::vector<EdgeId> earlier;
      for (EdgeId f : g.adjacent_edges(e))
        if (f < e) earlier.push_back(f);
      earlier_.push_back(std::move(earlier));
    }
    closes_.resize(static_cast<std::size_t>(g.edge_count()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      EdgeId last = e;
      for (VertexId x : {g.edge(e).u, g.edge(e).v})
        for (EdgeId f : g.incident(x)) last = std::max(last, f);
      closes_[static_cast<std::size_t>(last)].push_back(e);
    }
  }

  void run() { visit(0, 0); }

  int best = -1;
  std::vector<Color> best_colors;
  std::int64_t nodes = 0;

 private:
  void visit(EdgeId e, int count) {
    if (e == g_.edge_count()) {
      if (best < 0 || count < best) {
        best = count;
        best_colors = color_;
      }
      return;
    }
    const auto& prior = earlier_[static_cast<std::size_t>(e)];
    for (Color c = 1; c <= k_; ++c) {
      if (std::any_of(prior.begin(), prior.end(), [&](EdgeId f) { return color_[static_cast<std::size_t>(f)] == c; })) {
        continue;
      }
      ++nodes;
      color_[static_cast<std::size_t>(e)] = c;
      int closed = 0;
      for (EdgeId f : closes_[static_cast<std::size_t>(e)]) closed += is_abnormal(f);
      visit(e + 1, count + closed);
    }
    color_[static_cast<std::size_t>(e)] = 0;
  }

  // Four distinct colors on the (up to five) edges touching either endpoint.
  bool is_abnormal(EdgeId e) const {
    std::array<Color, 6> seen{};
    std::size_t used = 0;
    for (VertexId x : {g_.edge(e).u, g_.edge(e).v})
      for (EdgeId f : g_.incident(x)) seen[used++] = color_[static_cast<std::size_t>(f)];
    std::sort(seen.begin(), seen.end());
    return std::unique(seen.begin(), seen.end()) - seen.begin() == 4;
  }

  const CubicGraph& g_;
  int k_;
  std::vector<Color> color_;
  std::vector<std::vector<EdgeId>> earlier_;
  std::vector<std::vector<EdgeId>> closes_;  // edges classified once this edge is colored
};

}  // namespace

SolveResult exhaustive_oracle(const CubicGraph& g, int k) {
  if (g.edge_count() > kOracleMaxEdges) {
    fail(ErrorKind::Limit, "exhaustive oracle is limited to " + std::to_string(kOracleMaxEdges) + " edges, graph has " +
                               std::to_string(g.edge_count()));
  }
  if (k > kMaxColors) fail(ErrorKind::InvalidArgument, "at most 31 colors are supported");
  SolveResult result;
  if (k < 1) return result;
  Enumeration run(g, k);
  run.run();
  result.nodes_explored = run.nodes;
  if (run.best >= 0) {
    result.status = SolveStatus::Optimal;
    result.best_count = run.best;
    result.witness = EdgeColoring(k, run.best_colors);
  }
  return result;
}

}  // namespace normcol
