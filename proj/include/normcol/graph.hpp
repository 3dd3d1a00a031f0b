#ifndef NORMCOL_GRAPH_HPP
#define NORMCOL_GRAPH_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "normcol/error.hpp"

namespace normcol {

using VertexId = int;
using EdgeId = int;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  bool touches(VertexId x) const { return u == x || v == x; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// A loop-free 3-regular multigraph. Edge ids are positions in the edge list;
// each incidence list is ordered by edge id. Immutable after construction.
class CubicGraph {
 public:
  CubicGraph() = default;
  // Throws Error{Loop} on a self-loop, Error{Degree} on any vertex whose
  // degree is not 3, Error{InvalidArgument} on out-of-range endpoints.
  CubicGraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return static_cast<int>(incidence_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  std::span<const Edge> edges() const { return edges_; }
  const std::array<EdgeId, 3>& incident(VertexId v) const {
    return incidence_.at(static_cast<std::size_t>(v));
  }

  bool has_parallel_edges() const;
  bool has_edge_between(VertexId a, VertexId b) const;
  // Edges sharing at least one endpoint with e, excluding e itself.
  std::vector<EdgeId> adjacent_edges(EdgeId e) const;

  friend bool operator==(const CubicGraph& a, const CubicGraph& b) {
    return a.edges_ == b.edges_ && a.incidence_.size() == b.incidence_.size();
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::array<EdgeId, 3>> incidence_;
};

// Accumulates vertices and edges and validates them into a CubicGraph.
class GraphBuilder {
 public:
  VertexId add_vertex() { return vertex_count_++; }
  VertexId add_vertices(int count) {
    const VertexId first = vertex_count_;
    vertex_count_ += count;
    return first;
  }
  EdgeId add_edge(VertexId a, VertexId b) {
    edges_.push_back({a, b});
    return static_cast<EdgeId>(edges_.size()) - 1;
  }
  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  CubicGraph build() const { return CubicGraph(vertex_count_, edges_); }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

// An open incidence left behind by a deletion. `slot` is the position of the
// lost edge in the original incidence list of the vertex.
struct Stub {
  VertexId vertex = 0;
  int slot = 0;
  EdgeId removed_edge = 0;
  friend bool operator==(const Stub&, const Stub&) = default;
};

// A cubic graph with some edges, or one vertex, removed. Surviving vertices
// and edges are renumbered compactly in original order; the origin maps lead
// back to the cubic graph. Stubs are ordered by removed edge id, then by
// endpoint id.
class MarkedGraph {
 public:
  int vertex_count() const { return static_cast<int>(incidence_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const EdgeId> incident(VertexId v) const {
    return incidence_.at(static_cast<std::size_t>(v));
  }
  int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }
  std::span<const Stub> stubs() const { return stubs_; }
  int stub_count_at(VertexId v) const;

  EdgeId edge_origin(EdgeId e) const { return edge_origin_.at(static_cast<std::size_t>(e)); }
  VertexId vertex_origin(VertexId v) const {
    return vertex_origin_.at(static_cast<std::size_t>(v));
  }
  std::optional<VertexId> removed_vertex() const { return removed_vertex_; }

  // Re-adds the deleted material: consecutive stub pairs become edges for an
  // edge deletion; a fresh last vertex joined to all stubs for a vertex
  // deletion. The result is cubic.
  CubicGraph restore() const;

 private:
  friend MarkedGraph remove_edges(const CubicGraph&, std::span<const EdgeId>);
  friend MarkedGraph remove_vertex(const CubicGraph&, VertexId);

  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::vector<EdgeId> edge_origin_;
  std::vector<VertexId> vertex_origin_;
  std::vector<Stub> stubs_;
  std::optional<VertexId> removed_vertex_;
};

MarkedGraph remove_edges(const CubicGraph& graph, std::span<const EdgeId> deletions);
MarkedGraph remove_vertex(const CubicGraph& graph, VertexId vertex);

// ---------------------------------------------------------------------------
// Text formats

enum class GraphFormat { EdgeList, Sparse6 };

std::optional<GraphFormat> parse_graph_format(std::string_view name);
const char* to_string(GraphFormat format);
// Sparse6 when the text starts with ':' or the ">>sparse6<<" header.
GraphFormat detect_graph_format(std::string_view text);

// Edge-list input keeps the file's edge order; sparse6 input numbers edges in
// lexicographic (min, max) endpoint order, matching the catalog.
CubicGraph parse_graph(std::string_view text, GraphFormat format);
std::string write_graph(const CubicGraph& graph, GraphFormat format);

// Raw sparse6 codec for arbitrary loop-free multigraphs.
struct RawGraph {
  int vertex_count = 0;
  std::vector<Edge> edges;
};
RawGraph decode_sparse6(std::string_view text);
std::string encode_sparse6(int vertex_count, std::span<const Edge> edges);

// ---------------------------------------------------------------------------
// Named graphs

// petersen, k4, q3, k33, prism (param: even cycle length >= 4). Edges are
// listed lexicographically by (smaller endpoint, larger endpoint). Petersen
// vertex i is the i-th 2-subset of {1..5} in lexicographic order.
CubicGraph catalog(std::string_view name, std::span<const int> params = {});

// The 2-subset {a,b} (1-based, a < b) labeling Petersen vertex v.
std::array<int, 2> petersen_label(VertexId v);

// ---------------------------------------------------------------------------
// Structure queries

int component_count(const CubicGraph& graph);
bool is_connected(const CubicGraph& graph);
bool is_bipartite(const CubicGraph& graph);
// Length of a shortest cycle; 2 for parallel edges, 0 for acyclic inputs.
int girth(const CubicGraph& graph);

// Isomorphism-invariant code for connected graphs: the minimum adjacency code
// over all breadth-first labelings.
std::vector<std::uint8_t> canonical_code(const CubicGraph& graph);

struct ConnectivityReport {
  bool bridgeless = false;
  int edge_connectivity_capped_at_4 = 0;
  bool cyclically_4_edge_connected = false;
};
ConnectivityReport connectivity_report(const CubicGraph& graph);

// ---------------------------------------------------------------------------
// Enumeration

// Pull-based stream over connected simple cubic graphs on n labeled vertices.
// Each isomorphism class appears at least once; with deduplicate=true exactly
// once. Output order is deterministic.
class CubicEnumerator {
 public:
  CubicEnumerator(int n, bool deduplicate);
  ~CubicEnumerator();
  CubicEnumerator(CubicEnumerator&&) noexcept;
  CubicEnumerator& operator=(CubicEnumerator&&) noexcept;

  std::optional<CubicGraph> next();

 private:
  struct State;
  std::unique_ptr<State> state_;
};

std::vector<CubicGraph> enumerate_cubic(int n, bool deduplicate = true);

}  // namespace normcol

#endif  // NORMCOL_GRAPH_HPP
