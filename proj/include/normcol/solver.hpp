#ifndef NORMCOL_SOLVER_HPP
#define NORMCOL_SOLVER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "normcol/coloring.hpp"
#include "normcol/graph.hpp"

namespace normcol {

struct SearchConfig {
  int colors = 5;
  // Branches whose committed abnormal count exceeds the budget are cut.
  std::optional<int> abnormal_budget;
  std::optional<std::int64_t> node_limit;
  // false splits the root branches over threads; the optimum is unchanged but
  // the reported witness may differ between runs.
  bool deterministic = true;
};

enum class SolveStatus { Optimal, Infeasible, Limit };
const char* to_string(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  int best_count = -1;  // -1 when no coloring was found
  std::optional<EdgeColoring> witness;
  std::int64_t nodes_explored = 0;
};

// Exact minimum of |abnormal_set| over proper k-edge-colorings.
//
// Depth-first search over edges, repeated with abnormal caps 0, 1, 2, ...
// until a pass succeeds. The star of vertex 0 is fixed to colors 1,2,3 and a
// new color may only be opened after all smaller ones are in use; both
// reductions commute with the objective. The lower bound counts edges already
// abnormal (both stars complete) plus vertices whose last edge cannot avoid an
// abnormal edge to a complete neighbor. Status Infeasible means no proper
// coloring exists within the color and abnormal budgets (always the case for
// k < 3); Limit means the node limit stopped the search, with a witness only
// if the interrupted pass had found one.
SolveResult min_abnormal(const CubicGraph& g, const SearchConfig& cfg = {});

// A normal k-edge-coloring if one exists (exhaustive). Throws Error{Limit}
// when node_limit is given and reached before the question is settled.
std::optional<EdgeColoring> has_normal_k(const CubicGraph& g, int k,
                                         std::optional<std::int64_t> node_limit = std::nullopt);

// Least k with a normal k-edge-coloring, scanning k = 3..max_colors. Throws
// Error{InvalidArgument} naming the scanned limit when none is found.
int normal_chromatic_index(const CubicGraph& g, int max_colors = 7);

// Brute-force reference for min_abnormal: enumerates every proper coloring in
// edge-id order with no symmetry reduction and no bounding. Throws
// Error{Limit} for graphs with more than kOracleMaxEdges edges.
inline constexpr int kOracleMaxEdges = 18;
SolveResult exhaustive_oracle(const CubicGraph& g, int k);

struct ScanEntry {
  int graph_id = 0;
  int n = 0;
  int m = 0;
  bool bridgeless = false;
  bool cyc4 = false;
  SolveResult result;
  double millis = 0.0;
};

struct ScanReport {
  std::vector<ScanEntry> entries;          // sorted by graph_id
  std::map<int, int> minima;               // best_count -> number of graphs
  std::vector<int> single_abnormal;        // ids whose minimum is exactly 1
  std::vector<int> limited;                // ids stopped by a limit
};

// Solves every graph (ids are positions in the span) on a pool of `jobs`
// workers; jobs <= 0 selects the hardware concurrency.
ScanReport scan_no_single_abnormal(std::span<const CubicGraph> graphs, const SearchConfig& cfg, int jobs = 0);

}  // namespace normcol

#endif  // NORMCOL_SOLVER_HPP
