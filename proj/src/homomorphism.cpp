#include "normcol/homomorphism.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace normcol {

Palette PetersenModel::vertex_palette(VertexId v) const {
  Palette p = 0;
  for (EdgeId e : graph.incident(v)) p |= color_bit(coloring[e]);
  return p;
}

VertexId PetersenModel::vertex_with_palette(Palette p) const {
  const VertexId v = p < 32 ? palette_index[p] : -1;
  if (v < 0) fail(ErrorKind::InvalidArgument, "no Petersen vertex has palette " + palette_to_string(p));
  return v;
}

EdgeId PetersenModel::edge_at(VertexId v, Color c) const {
  for (EdgeId e : graph.incident(v))
    if (coloring[e] == c) return e;
  fail(ErrorKind::InvalidArgument, "color " + std::to_string(c) + " is missing at Petersen vertex " + std::to_string(v));
}

EdgeId PetersenModel::edge_between(VertexId a, VertexId b) const {
  for (EdgeId e : graph.incident(a))
    if (graph.edge(e).other(a) == b) return e;
  return -1;
}

PetersenModel make_canonical_petersen() {
  PetersenModel m;
  m.graph = catalog("petersen");
  std::vector<Color> colors;
  for (const Edge& e : m.graph.edges()) {
    Palette used = 0;
    for (VertexId x : {e.u, e.v})
      for (int a : petersen_label(x)) used |= color_bit(a);
    colors.push_back(std::countr_zero(static_cast<Palette>(~used & 0x1f)) + 1);
  }
  m.coloring = EdgeColoring(5, std::move(colors));
  m.palette_index.fill(-1);
  for (VertexId v = 0; v < m.graph.vertex_count(); ++v) {
    const Palette p = m.vertex_palette(v);
    if (palette_size(p) != 3 || m.palette_index[p] >= 0) {
      fail(ErrorKind::Verification, "Petersen palettes are not ten distinct 3-subsets");
    }
    const auto label = petersen_label(v);
    if (p != (0x1fu & ~(color_bit(label[0]) | color_bit(label[1])))) {
      fail(ErrorKind::Verification, "Petersen palette is not the complement of the vertex label");
    }
    m.palette_index[p] = v;
  }
  if (!is_proper(m.graph, m.coloring, 5)) fail(ErrorKind::Verification, "Petersen coloring is not proper");
  for (EdgeClass cls : classify_edges(m.graph, m.coloring))
    if (cls != EdgeClass::Rich) fail(ErrorKind::Verification, "Petersen coloring has a non-rich edge");
  return m;
}

const PetersenModel& canonical_petersen() {
  static const PetersenModel model = make_canonical_petersen();
  return model;
}

bool PColoring::total() const {
  return std::all_of(phi.begin(), phi.end(), [](EdgeId e) { return e >= 0; });
}

int PColoring::domain_size() const {
  return static_cast<int>(std::count_if(phi.begin(), phi.end(), [](EdgeId e) { return e >= 0; }));
}

PColoring build_p_coloring(const CubicGraph& g, const EdgeColoring& c, bool allow_abnormal) {
  if (!is_proper(g, c, 5)) fail(ErrorKind::InvalidArgument, "build_p_coloring needs a proper 5-edge-coloring");
  const PetersenModel& p = canonical_petersen();
  const auto pal = palettes(g, c);
  PColoring out;
  out.phi.assign(static_cast<std::size_t>(g.edge_count()), -1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Palette sx = pal[static_cast<std::size_t>(g.edge(e).u)];
    const Palette sy = pal[static_cast<std::size_t>(g.edge(e).v)];
    switch (classify_palettes(sx, sy)) {
      case EdgeClass::Poor:
        out.phi[static_cast<std::size_t>(e)] = p.edge_at(p.vertex_with_palette(sx), c[e]);
        break;
      case EdgeClass::Rich: {
        const EdgeId image = p.edge_between(p.vertex_with_palette(sx), p.vertex_with_palette(sy));
        if (image < 0 || p.coloring[image] != c[e]) {
          fail(ErrorKind::Verification, "rich edge " + std::to_string(e) + " has no color-matching Petersen edge");
        }
        out.phi[static_cast<std::size_t>(e)] = image;
        break;
      }
      case EdgeClass::Abnormal:
        if (!allow_abnormal) fail(ErrorKind::InvalidArgument, "edge " + std::to_string(e) + " is abnormal");
        break;
    }
  }
  return out;
}

bool verify_h_coloring(const CubicGraph& g, const CubicGraph& h, const PColoring& phi) {
  if (static_cast<int>(phi.phi.size()) != g.edge_count()) fail(ErrorKind::InvalidArgument, "map size differs from edge count");
  if (!phi.total()) fail(ErrorKind::InvalidArgument, "map is partial");
  for (EdgeId image : phi.phi)
    if (image >= h.edge_count()) fail(ErrorKind::InvalidArgument, "image edge " + std::to_string(image) + " does not exist");
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::array<EdgeId, 3> image{};
    for (int i = 0; i < 3; ++i) image[static_cast<std::size_t>(i)] = phi.phi[static_cast<std::size_t>(g.incident(v)[static_cast<std::size_t>(i)])];
    std::sort(image.begin(), image.end());
    if (image[0] == image[1] || image[1] == image[2]) return false;
    bool matched = false;
    for (VertexId w : {h.edge(image[0]).u, h.edge(image[0]).v}) {
      std::array<EdgeId, 3> star = h.incident(w);
      std::sort(star.begin(), star.end());
      if (star == image) matched = true;
    }
    if (!matched) return false;
  }
  return true;
}

EdgeColoring pullback(const CubicGraph& g, const PColoring& phi) {
  const PetersenModel& p = canonical_petersen();
  if (!verify_h_coloring(g, p.graph, phi)) fail(ErrorKind::InvalidArgument, "map is not a Petersen-coloring");
  std::vector<Color> colors;
  colors.reserve(phi.phi.size());
  for (EdgeId image : phi.phi) colors.push_back(p.coloring[image]);
  EdgeColoring c(5, std::move(colors));
  if (!is_proper(g, c, 5) || !is_normal(g, c)) {
    fail(ErrorKind::Verification, "pulled-back coloring is not a normal 5-edge-coloring");
  }
  return c;
}

std::vector<int> preimage_degrees(const CubicGraph& g, const EdgeColoring& c, std::span<const EdgeId> f_edges) {
  const PColoring phi = build_p_coloring(g, c, true);
  std::vector<char> in_f(15, 0);
  for (EdgeId e : f_edges) {
    if (e < 0 || e >= 15) fail(ErrorKind::InvalidArgument, "Petersen edge id out of range");
    in_f[static_cast<std::size_t>(e)] = 1;
  }
  std::vector<int> degree(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!phi.in_domain(e) || !in_f[static_cast<std::size_t>(phi.phi[static_cast<std::size_t>(e)])]) continue;
    ++degree[static_cast<std::size_t>(g.edge(e).u)];
    ++degree[static_cast<std::size_t>(g.edge(e).v)];
  }
  return degree;
}

namespace {

std::vector<std::vector<EdgeId>> find_cycles(const CubicGraph& p) {
  std::set<std::vector<EdgeId>> found;
  std::vector<EdgeId> path;
  std::vector<char> on_path(static_cast<std::size_t>(p.vertex_count()), 0);
  // Cycles are rooted at their smallest vertex.
  auto walk = [&](auto&& self, VertexId root, VertexId at) -> void {
    for (EdgeId e : p.incident(at)) {
      if (!path.empty() && e == path.back()) continue;
      const VertexId next = p.edge(e).other(at);
      if (next == root && path.size() >= 2) {
        std::vector<EdgeId> cycle = path;
        cycle.push_back(e);
        std::sort(cycle.begin(), cycle.end());
        found.insert(std::move(cycle));
        continue;
      }
      if (next <= root || on_path[static_cast<std::size_t>(next)]) continue;
      on_path[static_cast<std::size_t>(next)] = 1;
      path.push_back(e);
      self(self, root, next);
      path.pop_back();
      on_path[static_cast<std::size_t>(next)] = 0;
    }
  };
  for (VertexId root = 0; root < p.vertex_count(); ++root) {
    on_path[static_cast<std::size_t>(root)] = 1;
    walk(walk, root, root);
    on_path[static_cast<std::size_t>(root)] = 0;
  }
  std::vector<std::vector<EdgeId>> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

}  // namespace

const std::vector<std::vector<EdgeId>>& petersen_cycles() {
  static const std::vector<std::vector<EdgeId>> cycles = find_cycles(canonical_petersen().graph);
  return cycles;
}

std::vector<ParityViolation> parity_violations(const CubicGraph& g, const EdgeColoring& c) {
  std::vector<ParityViolation> out;
  const auto& cycles = petersen_cycles();
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const auto degree = preimage_degrees(g, c, cycles[i]);
    ParityViolation v;
    v.cycle_index = static_cast<int>(i);
    for (VertexId x = 0; x < g.vertex_count(); ++x)
      if (degree[static_cast<std::size_t>(x)] % 2 != 0) v.odd_vertices.push_back(x);
    if (!v.odd_vertices.empty()) out.push_back(std::move(v));
  }
  return out;
}

PColoring parse_p_coloring(std::string_view text, const CubicGraph& g) {
  PColoring out;
  out.phi.assign(static_cast<std::size_t>(g.edge_count()), -1);
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long long ge = 0, pe = 0;
    if (!(fields >> ge)) continue;
    std::string rest;
    if (!(fields >> pe) || (fields >> rest)) fail(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected \"g_edge p_edge\"");
    if (ge < 0 || ge >= g.edge_count()) fail(ErrorKind::Parse, "line " + std::to_string(line_no) + ": unknown edge of G");
    if (pe < 0 || pe >= 15) fail(ErrorKind::Parse, "line " + std::to_string(line_no) + ": unknown Petersen edge");
    if (out.phi[static_cast<std::size_t>(ge)] >= 0) fail(ErrorKind::Parse, "line " + std::to_string(line_no) + ": edge mapped twice");
    out.phi[static_cast<std::size_t>(ge)] = static_cast<EdgeId>(pe);
  }
  return out;
}

std::string write_p_coloring(const PColoring& phi) {
  std::ostringstream out;
  for (std::size_t e = 0; e < phi.phi.size(); ++e)
    if (phi.phi[e] >= 0) out << e << ' ' << phi.phi[e] << '\n';
  return out.str();
}

}  // namespace normcol
