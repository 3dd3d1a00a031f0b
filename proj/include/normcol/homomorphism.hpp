#ifndef NORMCOL_HOMOMORPHISM_HPP
#define NORMCOL_HOMOMORPHISM_HPP

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "normcol/coloring.hpp"
#include "normcol/graph.hpp"

namespace normcol {

// The Petersen graph on the 2-subsets of {1..5} (adjacent when disjoint),
// colored by the element missing from the union of the two end labels. Every
// edge is rich, and the ten vertex palettes are the ten 3-subsets of {1..5}.
struct PetersenModel {
  CubicGraph graph;
  EdgeColoring coloring;
  // Indexed by a 5-bit palette; -1 unless the palette is a 3-subset.
  std::array<VertexId, 32> palette_index{};

  Palette vertex_palette(VertexId v) const;
  VertexId vertex_with_palette(Palette p) const;
  // The unique edge at v carrying color c.
  EdgeId edge_at(VertexId v, Color c) const;
  // The edge joining a and b, or -1.
  EdgeId edge_between(VertexId a, VertexId b) const;
};

// Builds the model and checks its invariants (Error{Verification} otherwise).
PetersenModel make_canonical_petersen();
// Shared immutable instance.
const PetersenModel& canonical_petersen();

// A map from edges of G to edges of P; -1 marks edges outside the domain.
struct PColoring {
  std::vector<EdgeId> phi;

  bool in_domain(EdgeId e) const { return phi.at(static_cast<std::size_t>(e)) >= 0; }
  bool total() const;
  int domain_size() const;
  friend bool operator==(const PColoring&, const PColoring&) = default;
};

// Maps each poor edge xy to the edge at the vertex with palette S(x) carrying
// c(xy), and each rich edge xy to the edge joining the vertices with palettes
// S(x) and S(y). Abnormal edges are left out when allow_abnormal is set and
// rejected otherwise. Requires a proper coloring with colors in 1..5.
PColoring build_p_coloring(const CubicGraph& g, const EdgeColoring& c, bool allow_abnormal);

// True iff every star of G is mapped onto a full star of H. Rejects partial
// maps and out-of-range images with Error{InvalidArgument}.
bool verify_h_coloring(const CubicGraph& g, const CubicGraph& h, const PColoring& phi);

// Composes phi with the Petersen coloring. Error{InvalidArgument} when phi is
// not a Petersen-coloring; Error{Verification} if the result is not a normal
// proper 5-edge-coloring.
EdgeColoring pullback(const CubicGraph& g, const PColoring& phi);

// Degree of every vertex of G in the subgraph formed by the edges whose image
// lies in f_edges (abnormal edges never count).
std::vector<int> preimage_degrees(const CubicGraph& g, const EdgeColoring& c, std::span<const EdgeId> f_edges);

// All cycles of the canonical Petersen graph as sorted edge-id lists.
const std::vector<std::vector<EdgeId>>& petersen_cycles();

struct ParityViolation {
  int cycle_index = 0;               // into petersen_cycles()
  std::vector<VertexId> odd_vertices;
};
// Cycles of P whose preimage under phi_c has a vertex of odd degree.
std::vector<ParityViolation> parity_violations(const CubicGraph& g, const EdgeColoring& c);

// Text format: one "g_edge_id p_edge_id" line per edge in the domain.
PColoring parse_p_coloring(std::string_view text, const CubicGraph& g);
std::string write_p_coloring(const PColoring& phi);

}  // namespace normcol

#endif  // NORMCOL_HOMOMORPHISM_HPP
