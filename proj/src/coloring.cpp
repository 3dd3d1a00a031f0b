#include "normcol/coloring.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace normcol {

std::vector<Color> palette_colors(Palette p) {
  std::vector<Color> out;
  for (Color c = 1; c <= kMaxColors; ++c)
    if (p & color_bit(c)) out.push_back(c);
  return out;
}

std::string palette_to_string(Palette p) {
  std::string out = "{";
  bool first = true;
  for (Color c : palette_colors(p)) {
    if (!first) out += ',';
    out += std::to_string(c);
    first = false;
  }
  return out + "}";
}

EdgeColoring::EdgeColoring(int k, std::vector<Color> colors) : k_(k), colors_(std::move(colors)) {
  if (k < 1 || k > kMaxColors) fail(ErrorKind::InvalidArgument, "color count must lie in [1, 31]");
  for (std::size_t e = 0; e < colors_.size(); ++e) {
    if (colors_[e] < 1 || colors_[e] > k) {
      fail(ErrorKind::InvalidArgument, "edge " + std::to_string(e) + " has color " + std::to_string(colors_[e]) +
                                           " outside 1.." + std::to_string(k));
    }
  }
}

const char* to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::Poor: return "poor";
    case EdgeClass::Rich: return "rich";
    case EdgeClass::Abnormal: return "abnormal";
  }
  return "?";
}

namespace {

void require_cover(const CubicGraph& g, const EdgeColoring& c) {
  if (c.size() != g.edge_count()) {
    fail(ErrorKind::InvalidArgument, "coloring covers " + std::to_string(c.size()) + " edges, graph has " +
                                         std::to_string(g.edge_count()));
  }
}

void require_proper(const CubicGraph& g, const EdgeColoring& c) {
  if (!is_proper(g, c, c.k())) fail(ErrorKind::InvalidArgument, "coloring is not proper");
}

}  // namespace

Palette palette(const CubicGraph& g, const EdgeColoring& c, VertexId v) {
  require_cover(g, c);
  if (v < 0 || v >= g.vertex_count()) fail(ErrorKind::InvalidArgument, "unknown vertex " + std::to_string(v));
  Palette p = 0;
  for (EdgeId e : g.incident(v)) p |= color_bit(c[e]);
  return p;
}

std::vector<Palette> palettes(const CubicGraph& g, const EdgeColoring& c) {
  require_cover(g, c);
  std::vector<Palette> out(static_cast<std::size_t>(g.vertex_count()), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (EdgeId e : g.incident(v)) out[static_cast<std::size_t>(v)] |= color_bit(c[e]);
  return out;
}

bool is_proper(const CubicGraph& g, const EdgeColoring& c, int k) {
  if (c.size() != g.edge_count()) return false;
  for (Color x : c.colors())
    if (x > k) return false;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Palette p = 0;
    for (EdgeId e : g.incident(v)) p |= color_bit(c[e]);
    if (palette_size(p) != 3) return false;
  }
  return true;
}

EdgeClass classify_edge(const CubicGraph& g, const EdgeColoring& c, EdgeId e) {
  require_proper(g, c);
  if (e < 0 || e >= g.edge_count()) fail(ErrorKind::InvalidArgument, "unknown edge " + std::to_string(e));
  return classify_palettes(palette(g, c, g.edge(e).u), palette(g, c, g.edge(e).v));
}

std::vector<EdgeClass> classify_edges(const CubicGraph& g, const EdgeColoring& c) {
  require_proper(g, c);
  const auto pal = palettes(g, c);
  std::vector<EdgeClass> out;
  out.reserve(static_cast<std::size_t>(g.edge_count()));
  for (const Edge& e : g.edges())
    out.push_back(classify_palettes(pal[static_cast<std::size_t>(e.u)], pal[static_cast<std::size_t>(e.v)]));
  return out;
}

std::vector<EdgeId> abnormal_set(const CubicGraph& g, const EdgeColoring& c) {
  const auto classes = classify_edges(g, c);
  std::vector<EdgeId> out;
  for (std::size_t e = 0; e < classes.size(); ++e)
    if (classes[e] == EdgeClass::Abnormal) out.push_back(static_cast<EdgeId>(e));
  return out;
}

bool is_normal(const CubicGraph& g, const EdgeColoring& c) { return abnormal_set(g, c).empty(); }

EdgeColoring permute_colors(const EdgeColoring& c, std::span<const Color> perm) {
  if (static_cast<int>(perm.size()) != c.k() + 1) fail(ErrorKind::InvalidArgument, "permutation size mismatch");
  Palette image = 0;
  for (Color x = 1; x <= c.k(); ++x) {
    if (perm[static_cast<std::size_t>(x)] < 1 || perm[static_cast<std::size_t>(x)] > c.k()) {
      fail(ErrorKind::InvalidArgument, "permutation leaves the palette");
    }
    image |= color_bit(perm[static_cast<std::size_t>(x)]);
  }
  if (palette_size(image) != c.k()) fail(ErrorKind::InvalidArgument, "color map is not a permutation");
  std::vector<Color> out;
  out.reserve(static_cast<std::size_t>(c.size()));
  for (Color x : c.colors()) out.push_back(perm[static_cast<std::size_t>(x)]);
  return EdgeColoring(c.k(), std::move(out));
}

EdgeColoring parse_coloring(std::string_view text, const CubicGraph& g) {
  std::vector<long long> values;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
      ++i;
      continue;
    }
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc{} || ptr == text.data() + i) fail(ErrorKind::Parse, "malformed coloring text");
    values.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  if (values.empty()) fail(ErrorKind::Parse, "coloring needs a \"k\" header");
  const long long k = values[0];
  if (k < 1 || k > kMaxColors) fail(ErrorKind::Parse, "coloring header k out of range");
  if ((values.size() - 1) % 2 != 0) fail(ErrorKind::Parse, "coloring lines must be \"edge_id color\" pairs");
  std::vector<Color> colors(static_cast<std::size_t>(g.edge_count()), 0);
  for (std::size_t j = 1; j < values.size(); j += 2) {
    const long long e = values[j], col = values[j + 1];
    if (e < 0 || e >= g.edge_count()) fail(ErrorKind::Parse, "coloring names unknown edge " + std::to_string(e));
    if (col < 1 || col > k) fail(ErrorKind::Parse, "color " + std::to_string(col) + " outside 1..k");
    if (colors[static_cast<std::size_t>(e)] != 0) fail(ErrorKind::Parse, "edge " + std::to_string(e) + " colored twice");
    colors[static_cast<std::size_t>(e)] = static_cast<Color>(col);
  }
  for (std::size_t e = 0; e < colors.size(); ++e)
    if (colors[e] == 0) fail(ErrorKind::Parse, "edge " + std::to_string(e) + " has no color");
  return EdgeColoring(static_cast<int>(k), std::move(colors));
}

std::string write_coloring(const EdgeColoring& c) {
  std::ostringstream out;
  out << c.k() << '\n';
  for (EdgeId e = 0; e < c.size(); ++e) out << e << ' ' << c[e] << '\n';
  return out.str();
}

}  // namespace normcol
