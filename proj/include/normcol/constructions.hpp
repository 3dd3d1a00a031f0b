#ifndef NORMCOL_CONSTRUCTIONS_HPP
#define NORMCOL_CONSTRUCTIONS_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "normcol/coloring.hpp"
#include "normcol/graph.hpp"
#include "normcol/solver.hpp"

namespace normcol {

enum class Variant { Disjoint, Cyclic1, Cyclic2, VertexReplacement, TwoCut, K4Gadget };

std::optional<Variant> parse_variant(std::string_view name);
const char* to_string(Variant v);

// Where one copy of the replicated piece sits inside the composite graph.
struct CopyEmbedding {
  std::vector<VertexId> vertex_map;  // piece vertex -> host vertex
  std::vector<EdgeId> edge_map;      // piece edge -> host edge
  std::vector<EdgeId> stub_edges;    // piece stub -> host edge that fills it
};

struct Composite {
  CubicGraph graph;
  MarkedGraph piece;
  std::vector<CopyEmbedding> copies;
};

struct ColoredGraph {
  CubicGraph graph;
  EdgeColoring coloring;
};

// t disjoint copies of g.
Composite disjoint_copies(const CubicGraph& g, int t);

// t copies of g-e in a ring: with x, y the endpoints of e in stub order, copy
// i's y joins copy (i+1 mod t)'s x. t = 1 re-creates g.
Composite cyclic_join_one_edge(const CubicGraph& g, EdgeId e, int t);

// t >= 2 copies of g-e1-e2 with e1 = ab, e2 = cd (endpoints in stub order):
// d_i joins a_{i+1} and c_i joins b_{i+1}, indices mod t. e1 and e2 must be
// independent.
Composite cyclic_join_two_edges(const CubicGraph& g, EdgeId e1, EdgeId e2, int t);

// Every vertex x of host becomes a copy of g-v. The host edges at x, in edge-id
// order, are attached to the copy's stubs in stub order.
Composite vertex_replacement(const CubicGraph& host, const CubicGraph& g, VertexId v);

struct TwoCutConnection {
  CubicGraph graph;
  std::vector<EdgeId> first_edges;   // g1 edge -> new edge id, -1 for e1
  std::vector<EdgeId> second_edges;  // g2 edge -> new edge id, -1 for e2
  VertexId second_offset = 0;        // g2 vertex w becomes w + offset
  EdgeId link_x = -1;                // x1 x2
  EdgeId link_y = -1;                // y1 y2
};

// Replaces e1 = x1y1 and e2 = x2y2 (endpoints in increasing id order) by the
// edges x1x2 and y1y2.
TwoCutConnection two_cut_connection(const CubicGraph& g1, EdgeId e1, const CubicGraph& g2, EdgeId e2);

// Proper 5-edge-coloring of the 3-cube (catalog edge order) with exactly two
// abnormal edges; the lexicographically smallest such coloring.
EdgeColoring q3_base_coloring();

// Colors of the K4 side after splicing K4 - x2y2 into an abnormal edge e = uv
// normalized to c(e) = 1, S(u) = {1,2,3}, S(v) = {1,2,4}, with u joined to x2.
// Both link edges keep color 1; the entries are the colors of x2p, x2q, y2p,
// y2q and pq.
std::array<Color, 5> k4_gadget_table();

// Splices a K4 into the abnormal edge e, returning a coloring with exactly one
// more abnormal edge.
ColoredGraph k4_gadget_extend(const CubicGraph& g, const EdgeColoring& c, EdgeId e);

// A graph on 8 + 4(k-2) vertices with a proper 5-edge-coloring having exactly
// k abnormal edges (k >= 2).
ColoredGraph k_abnormal_example(int k);

// End-edges (e1, e2) of the first path of length three, in edge-id order of
// the middle edge.
std::optional<std::array<EdgeId, 2>> first_three_path_ends(const CubicGraph& g);

// --- extensions of a clean coloring of a marked copy back to the whole graph.
// `piece_colors` is indexed by piece edge ids; results are indexed by edge ids
// of g. Each checks its precondition (Error{InvalidArgument}) and its
// abnormal-edge bound (Error{Verification}).

// g - e: e takes the smallest color missing at both ends. At most 5 abnormal.
EdgeColoring extend_one_edge(const CubicGraph& g, const MarkedGraph& piece, std::span<const Color> piece_colors);

// g - v: vv1 copies external_color_v1, then vv2 and vv3 take the smallest
// color not yet seen at v or at their other end. At most 7 abnormal.
EdgeColoring extend_vertex_star(const CubicGraph& g, const MarkedGraph& piece, std::span<const Color> piece_colors,
                                Color external_color_v1);

// g - e1 - e2 with e1, e2 the end-edges of a path of length three: each takes
// the smallest color missing at both of its ends. At most 9 abnormal.
EdgeColoring extend_two_edges(const CubicGraph& g, const MarkedGraph& piece, std::span<const Color> piece_colors);

// --- fixed-t pigeonhole demonstration.

struct DemoReport {
  Variant variant = Variant::Disjoint;
  int t = 0;
  int copies = 0;
  int vertices_h = 0;
  int abnormal_h = -1;                      // -1 when no coloring of H exists
  std::optional<int> clean_copy_index;
  std::optional<int> abnormal_final;
  int bound = 0;
  bool pass = false;
  std::string host;                         // vertex_replacement host graph
  std::optional<EdgeColoring> final_coloring;
};

int table_bound(Variant v);

// Builds H for the variant (disjoint, cyclic1, cyclic2, vertex_replacement),
// colors it (the supplied coloring, or min_abnormal under `solver`), locates
// the first copy free of abnormal edges and extends its coloring back to g.
DemoReport pigeonhole_demo(const CubicGraph& g, Variant variant, int t,
                           const std::optional<EdgeColoring>& coloring_of_h = std::nullopt,
                           const SearchConfig& solver = {});

// The composite graph pigeonhole_demo colors, for callers that want to supply
// their own coloring.
Composite demo_host_graph(const CubicGraph& g, Variant variant, int t, std::string* host_name = nullptr);

// --- recipe dispatcher for the command-line tool and the C API.

struct ConstructionRecipe {
  Variant variant = Variant::Disjoint;
  CubicGraph source;
  std::optional<CubicGraph> second;  // host B (vertex_replacement) or G2 (two_cut)
  std::vector<EdgeId> edges;         // designated edges; defaults per variant
  std::optional<VertexId> vertex;
  int t = 1;
  std::optional<EdgeColoring> coloring;  // k4_gadget only
};

struct ConstructionOutput {
  CubicGraph graph;
  std::optional<EdgeColoring> coloring;
};

ConstructionOutput construct(const ConstructionRecipe& recipe);

}  // namespace normcol

#endif  // NORMCOL_CONSTRUCTIONS_HPP
