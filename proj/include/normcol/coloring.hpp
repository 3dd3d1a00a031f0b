#ifndef NORMCOL_COLORING_HPP
#define NORMCOL_COLORING_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "normcol/graph.hpp"

namespace normcol {

using Color = int;  // 1-based

inline constexpr int kMaxColors = 31;

// Set of colors as a bitmask; bit (c - 1) stands for color c.
using Palette = std::uint32_t;

constexpr Palette color_bit(Color c) { return Palette{1} << (c - 1); }
constexpr int palette_size(Palette p) { return std::popcount(p); }
std::vector<Color> palette_colors(Palette p);
std::string palette_to_string(Palette p);  // "{1,2,3}"

// Total edge-indexed coloring with colors in 1..k.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  EdgeColoring(int k, std::vector<Color> colors);

  int k() const { return k_; }
  int size() const { return static_cast<int>(colors_.size()); }
  Color operator[](EdgeId e) const { return colors_.at(static_cast<std::size_t>(e)); }
  std::span<const Color> colors() const { return colors_; }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  int k_ = 0;
  std::vector<Color> colors_;
};

enum class EdgeClass { Poor, Rich, Abnormal };
const char* to_string(EdgeClass c);

// Throws Error{InvalidArgument} when the coloring does not cover exactly the
// edges of the graph.
Palette palette(const CubicGraph& g, const EdgeColoring& c, VertexId v);
std::vector<Palette> palettes(const CubicGraph& g, const EdgeColoring& c);

bool is_proper(const CubicGraph& g, const EdgeColoring& c, int k);

// The classifiers below reject improper colorings with Error{InvalidArgument}.
EdgeClass classify_edge(const CubicGraph& g, const EdgeColoring& c, EdgeId e);
std::vector<EdgeClass> classify_edges(const CubicGraph& g, const EdgeColoring& c);
std::vector<EdgeId> abnormal_set(const CubicGraph& g, const EdgeColoring& c);
bool is_normal(const CubicGraph& g, const EdgeColoring& c);

// Union size 3 / 4 / 5 of two full palettes.
inline EdgeClass classify_palettes(Palette a, Palette b) {
  switch (palette_size(a | b)) {
    case 3: return EdgeClass::Poor;
    case 5: return EdgeClass::Rich;
    default: return EdgeClass::Abnormal;
  }
}

// perm[c] is the new name of color c (perm[0] unused). perm must be a
// bijection on 1..k.
EdgeColoring permute_colors(const EdgeColoring& c, std::span<const Color> perm);

// Text format: first line "k", then one "edge_id color" line per edge.
EdgeColoring parse_coloring(std::string_view text, const CubicGraph& g);
std::string write_coloring(const EdgeColoring& c);

}  // namespace normcol

#endif  // NORMCOL_COLORING_HPP
