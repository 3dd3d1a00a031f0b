#include "normcol/constructions.hpp"

#include <algorithm>

namespace normcol {

std::optional<Variant> parse_variant(std::string_view name) {
  if (name == "disjoint") return Variant::Disjoint;
  if (name == "cyclic1") return Variant::Cyclic1;
  if (name == "cyclic2") return Variant::Cyclic2;
  if (name == "vertex_replacement" || name == "vertex-replacement") return Variant::VertexReplacement;
  if (name == "two_cut" || name == "two-cut") return Variant::TwoCut;
  if (name == "k4_gadget" || name == "k4-gadget") return Variant::K4Gadget;
  return std::nullopt;
}

const char* to_string(Variant v) {
  switch (v) {
    case Variant::Disjoint: return "disjoint";
    case Variant::Cyclic1: return "cyclic1";
    case Variant::Cyclic2: return "cyclic2";
    case Variant::VertexReplacement: return "vertex_replacement";
    case Variant::TwoCut: return "two_cut";
    case Variant::K4Gadget: return "k4_gadget";
  }
  return "?";
}

namespace {

void require_edge(const CubicGraph& g, EdgeId e) {
  if (e < 0 || e >= g.edge_count()) fail(ErrorKind::InvalidArgument, "unknown edge id " + std::to_string(e));
}

CopyEmbedding add_copy(GraphBuilder& b, const MarkedGraph& piece) {
  CopyEmbedding copy;
  const VertexId first = b.add_vertices(piece.vertex_count());
  for (VertexId v = 0; v < piece.vertex_count(); ++v) copy.vertex_map.push_back(first + v);
  for (const Edge& e : piece.edges()) copy.edge_map.push_back(b.add_edge(first + e.u, first + e.v));
  copy.stub_edges.assign(piece.stubs().size(), -1);
  return copy;
}

// Joins stub `a` of copy i to stub `b` of copy j.
void join(GraphBuilder& b, const MarkedGraph& piece, std::vector<CopyEmbedding>& copies, std::size_t i, std::size_t a,
          std::size_t j, std::size_t bs) {
  const VertexId x = copies[i].vertex_map[static_cast<std::size_t>(piece.stubs()[a].vertex)];
  const VertexId y = copies[j].vertex_map[static_cast<std::size_t>(piece.stubs()[bs].vertex)];
  const EdgeId id = b.add_edge(x, y);
  copies[i].stub_edges[a] = id;
  copies[j].stub_edges[bs] = id;
}

std::array<std::size_t, 2> stubs_of(const MarkedGraph& piece, EdgeId removed) {
  std::array<std::size_t, 2> out{};
  int found = 0;
  for (std::size_t s = 0; s < piece.stubs().size(); ++s)
    if (piece.stubs()[s].removed_edge == removed) out[static_cast<std::size_t>(found++)] = s;
  return out;
}

}  // namespace

Composite disjoint_copies(const CubicGraph& g, int t) {
  if (t < 1) fail(ErrorKind::InvalidArgument, "copy count t must be at least 1");
  Composite out;
  out.piece = remove_edges(g, {});
  GraphBuilder b;
  for (int i = 0; i < t; ++i) out.copies.push_back(add_copy(b, out.piece));
  out.graph = b.build();
  return out;
}

Composite cyclic_join_one_edge(const CubicGraph& g, EdgeId e, int t) {
  if (t < 1) fail(ErrorKind::InvalidArgument, "copy count t must be at least 1");
  require_edge(g, e);
  Composite out;
  const EdgeId removed[] = {e};
  out.piece = remove_edges(g, removed);
  GraphBuilder b;
  for (int i = 0; i < t; ++i) out.copies.push_back(add_copy(b, out.piece));
  const auto ut = static_cast<std::size_t>(t);
  for (std::size_t i = 0; i < ut; ++i) join(b, out.piece, out.copies, i, 1, (i + 1) % ut, 0);
  out.graph = b.build();
  return out;
}

Composite cyclic_join_two_edges(const CubicGraph& g, EdgeId e1, EdgeId e2, int t) {
  if (t < 2) fail(ErrorKind::InvalidArgument, "joining two edges cyclically needs t >= 2");
  require_edge(g, e1);
  require_edge(g, e2);
  const Edge a = g.edge(e1), c = g.edge(e2);
  if (e1 == e2 || a.touches(c.u) || a.touches(c.v)) {
    fail(ErrorKind::InvalidArgument, "edges " + std::to_string(e1) + " and " + std::to_string(e2) + " are not independent");
  }
  Composite out;
  const EdgeId removed[] = {e1, e2};
  out.piece = remove_edges(g, removed);
  const auto [sa, sb] = stubs_of(out.piece, e1);
  const auto [sc, sd] = stubs_of(out.piece, e2);
  GraphBuilder b;
  for (int i = 0; i < t; ++i) out.copies.push_back(add_copy(b, out.piece));
  const auto ut = static_cast<std::size_t>(t);
  for (std::size_t i = 0; i < ut; ++i) {
    const std::size_t next = (i + 1) % ut;
    join(b, out.piece, out.copies, i, sd, next, sa);
    join(b, out.piece, out.copies, i, sc, next, sb);
  }
  out.graph = b.build();
  return out;
}

Composite vertex_replacement(const CubicGraph& host, const CubicGraph& g, VertexId v) {
  Composite out;
  out.piece = remove_vertex(g, v);
  GraphBuilder b;
  for (VertexId x = 0; x < host.vertex_count(); ++x) out.copies.push_back(add_copy(b, out.piece));
  auto port = [&](VertexId x, EdgeId e) {
    const auto& inc = host.incident(x);
    return static_cast<std::size_t>(std::find(inc.begin(), inc.end(), e) - inc.begin());
  };
  for (EdgeId e = 0; e < host.edge_count(); ++e) {
    const Edge& he = host.edge(e);
    join(b, out.piece, out.copies, static_cast<std::size_t>(he.u), port(he.u, e), static_cast<std::size_t>(he.v),
         port(he.v, e));
  }
  out.graph = b.build();
  return out;
}

TwoCutConnection two_cut_connection(const CubicGraph& g1, EdgeId e1, const CubicGraph& g2, EdgeId e2) {
  require_edge(g1, e1);
  require_edge(g2, e2);
  TwoCutConnection out;
  GraphBuilder b;
  b.add_vertices(g1.vertex_count());
  out.second_offset = b.add_vertices(g2.vertex_count());
  out.first_edges.assign(static_cast<std::size_t>(g1.edge_count()), -1);
  out.second_edges.assign(static_cast<std::size_t>(g2.edge_count()), -1);
  for (EdgeId e = 0; e < g1.edge_count(); ++e)
    if (e != e1) out.first_edges[static_cast<std::size_t>(e)] = b.add_edge(g1.edge(e).u, g1.edge(e).v);
  for (EdgeId e = 0; e < g2.edge_count(); ++e)
    if (e != e2)
      out.second_edges[static_cast<std::size_t>(e)] =
          b.add_edge(g2.edge(e).u + out.second_offset, g2.edge(e).v + out.second_offset);
  const Edge f1 = g1.edge(e1), f2 = g2.edge(e2);
  const VertexId x1 = std::min(f1.u, f1.v), y1 = std::max(f1.u, f1.v);
  const VertexId x2 = std::min(f2.u, f2.v), y2 = std::max(f2.u, f2.v);
  out.link_x = b.add_edge(x1, x2 + out.second_offset);
  out.link_y = b.add_edge(y1, y2 + out.second_offset);
  out.graph = b.build();
  return out;
}

// ---------------------------------------------------------------------------
// Frozen colorings (regenerated by exhaustive search in the test suite).

EdgeColoring q3_base_coloring() { return EdgeColoring(5, {1, 2, 3, 2, 3, 1, 4, 4, 4, 5, 5, 3}); }

std::array<Color, 5> k4_gadget_table() { return {2, 5, 5, 2, 1}; }

ColoredGraph k4_gadget_extend(const CubicGraph& g, const EdgeColoring& c, EdgeId e) {
  require_edge(g, e);
  if (!is_proper(g, c, 5)) fail(ErrorKind::InvalidArgument, "k4 gadget needs a proper 5-edge-coloring");
  if (classify_edge(g, c, e) != EdgeClass::Abnormal) {
    fail(ErrorKind::InvalidArgument, "edge " + std::to_string(e) + " is not abnormal");
  }
  const Edge ed = g.edge(e);
  const VertexId x1 = std::min(ed.u, ed.v), y1 = std::max(ed.u, ed.v);
  const Palette sx = palette(g, c, x1), sy = palette(g, c, y1);
  const Palette own = color_bit(c[e]);
  const Palette shared = (sx & sy) & ~own;
  const Palette only_x = sx & ~sy, only_y = sy & ~sx;
  const Palette missing = 0x1fu & ~(sx | sy);
  if (palette_size(shared) != 1 || palette_size(only_x) != 1 || palette_size(only_y) != 1 || palette_size(missing) != 1) {
    fail(ErrorKind::InvalidArgument, "palettes at edge " + std::to_string(e) + " cannot be normalized");
  }
  // canonical color i stands for original color back[i]
  std::array<Color, 6> back{};
  back[1] = c[e];
  back[2] = std::countr_zero(shared) + 1;
  back[3] = std::countr_zero(only_x) + 1;
  back[4] = std::countr_zero(only_y) + 1;
  back[5] = std::countr_zero(missing) + 1;

  const CubicGraph k4 = catalog("k4");
  const TwoCutConnection joined = two_cut_connection(g, e, k4, 0);
  std::vector<Color> colors(static_cast<std::size_t>(joined.graph.edge_count()), 0);
  for (EdgeId f = 0; f < g.edge_count(); ++f)
    if (f != e) colors[static_cast<std::size_t>(joined.first_edges[static_cast<std::size_t>(f)])] = c[f];
  colors[static_cast<std::size_t>(joined.link_x)] = back[1];
  colors[static_cast<std::size_t>(joined.link_y)] = back[1];
  // K4 edges 1..5 are x2p, x2q, y2p, y2q, pq for x2 = 0, y2 = 1, p = 2, q = 3.
  const auto table = k4_gadget_table();
  for (std::size_t i = 0; i < table.size(); ++i) {
    colors[static_cast<std::size_t>(joined.second_edges[i + 1])] = back[static_cast<std::size_t>(table[i])];
  }
  ColoredGraph out{joined.graph, EdgeColoring(5, std::move(colors))};
  if (!is_proper(out.graph, out.coloring, 5) ||
      abnormal_set(out.graph, out.coloring).size() != abnormal_set(g, c).size() + 1) {
    fail(ErrorKind::Verification, "k4 gadget did not add exactly one abnormal edge");
  }
  return out;
}

ColoredGraph k_abnormal_example(int k) {
  if (k < 2) {
    fail(ErrorKind::InvalidArgument, k == 1 ? "no cubic graph has a proper 5-edge-coloring with exactly one abnormal edge"
                                            : "k must be at least 2");
  }
  ColoredGraph cur{catalog("q3"), q3_base_coloring()};
  for (int step = 2; step < k; ++step) {
    const auto abnormal = abnormal_set(cur.graph, cur.coloring);
    cur = k4_gadget_extend(cur.graph, cur.coloring, abnormal.front());
  }
  if (static_cast<int>(abnormal_set(cur.graph, cur.coloring).size()) != k) {
    fail(ErrorKind::Verification, "k-abnormal construction miscounted");
  }
  return cur;
}

std::optional<std::array<EdgeId, 2>> first_three_path_ends(const CubicGraph& g) {
  for (EdgeId mid = 0; mid < g.edge_count(); ++mid) {
    const VertexId b = g.edge(mid).u, c = g.edge(mid).v;
    for (EdgeId e1 : g.incident(b)) {
      const VertexId a = g.edge(e1).other(b);
      if (e1 == mid || a == c) continue;
      for (EdgeId e2 : g.incident(c)) {
        const VertexId d = g.edge(e2).other(c);
        if (e2 == mid || d == b || d == a) continue;
        return std::array<EdgeId, 2>{std::min(e1, e2), std::max(e1, e2)};
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Extensions

namespace {

std::vector<Palette> piece_palettes(const MarkedGraph& piece, std::span<const Color> colors) {
  if (static_cast<int>(colors.size()) != piece.edge_count()) {
    fail(ErrorKind::InvalidArgument, "piece coloring size differs from its edge count");
  }
  std::vector<Palette> pal(static_cast<std::size_t>(piece.vertex_count()), 0);
  for (VertexId v = 0; v < piece.vertex_count(); ++v) {
    for (EdgeId e : piece.incident(v)) {
      const Color c = colors[static_cast<std::size_t>(e)];
      if (c < 1 || c > 5) fail(ErrorKind::InvalidArgument, "piece colors must lie in 1..5");
      if (pal[static_cast<std::size_t>(v)] & color_bit(c)) fail(ErrorKind::InvalidArgument, "piece coloring is not proper");
      pal[static_cast<std::size_t>(v)] |= color_bit(c);
    }
  }
  return pal;
}

// Edges whose both ends keep their full star must be poor or rich already.
void require_clean_interior(const MarkedGraph& piece, const std::vector<Palette>& pal) {
  for (EdgeId e = 0; e < piece.edge_count(); ++e) {
    const Edge& ed = piece.edge(e);
    if (piece.degree(ed.u) != 3 || piece.degree(ed.v) != 3) continue;
    if (classify_palettes(pal[static_cast<std::size_t>(ed.u)], pal[static_cast<std::size_t>(ed.v)]) == EdgeClass::Abnormal) {
      fail(ErrorKind::InvalidArgument, "piece edge " + std::to_string(e) + " is abnormal");
    }
  }
}

std::vector<Color> lift(const CubicGraph& g, const MarkedGraph& piece, std::span<const Color> colors) {
  std::vector<Color> out(static_cast<std::size_t>(g.edge_count()), 0);
  for (EdgeId e = 0; e < piece.edge_count(); ++e) out[static_cast<std::size_t>(piece.edge_origin(e))] = colors[static_cast<std::size_t>(e)];
  return out;
}

Color smallest_missing(Palette forbidden) {
  const Palette free = 0x1fu & ~forbidden;
  if (free == 0) fail(ErrorKind::Verification, "no color is free at both ends");
  return std::countr_zero(free) + 1;
}

EdgeColoring checked(const CubicGraph& g, std::vector<Color> colors, const std::vector<EdgeId>& allowed,
                     std::size_t bound, const char* what) {
  EdgeColoring c(5, std::move(colors));
  if (!is_proper(g, c, 5)) fail(ErrorKind::Verification, std::string(what) + ": extension is not proper");
  const auto abnormal = abnormal_set(g, c);
  for (EdgeId e : abnormal)
    if (std::find(allowed.begin(), allowed.end(), e) == allowed.end()) {
      fail(ErrorKind::Verification, std::string(what) + ": edge " + std::to_string(e) + " became abnormal outside the affected set");
    }
  if (abnormal.size() > bound) fail(ErrorKind::Verification, std::string(what) + ": abnormal bound exceeded");
  return c;
}

// Colors each deleted edge, in stub order, with the smallest color missing at
// both of its ends.
EdgeColoring extend_edges(const CubicGraph& g, const MarkedGraph& piece, std::span<const Color> piece_colors,
                          std::size_t removed_count, std::size_t bound, const char* what) {
  if (piece.removed_vertex() || piece.stubs().size() != 2 * removed_count) {
    fail(ErrorKind::InvalidArgument, std::string(what) + ": piece must come from deleting " + std::to_string(removed_count) + " edge(s)");
  }
  auto pal = piece_palettes(piece, piece_colors);
  require_clean_interior(piece, pal);
  std::vector<Color> colors = lift(g, piece, piece_colors);
  std::vector<EdgeId> allowed;
  for (std::size_t s = 0; s < piece.stubs().size(); s += 2) {
    const Stub& a = piece.stubs()[s];
    const Stub& b = piece.stubs()[s + 1];
    const Color c = smallest_missing(pal[static_cast<std::size_t>(a.vertex)] | pal[static_cast<std::size_t>(b.vertex)]);
    colors[static_cast<std::size_t>(a.removed_edge)] = c;
    pal[static_cast<std::size_t>(a.vertex)] |= color_bit(c);
    pal[static_cast<std::size_t>(b.vertex)] |= color_bit(c);
    allowed.push_back(a.removed_edge);
    for (EdgeId f : g.adjacent_edges(a.removed_edge)) allowed.push_back(f);
  }
  return checked(g, std::move(colors), allowed, bound, what);
}

}  // namespace

EdgeColoring extend_one_edge(const CubicGraph& g, const MarkedGraph& piece, std::span<const Color> piece_colors) {
  return extend_edges(g, piece, piece_colors, 1, 5, "extend_one_edge");
}

EdgeColoring extend_two_edges(const CubicGraph& g, const MarkedGraph& piece, std::span<const Color> piece_colors) {
  if (piece.removed_vertex() || piece.stubs().size() != 4) {
    fail(ErrorKind::InvalidArgument, "extend_two_edges: piece must come from deleting two edges");
  }
  const Edge e1 = g.edge(piece.stubs()[0].removed_edge);
  const Edge e2 = g.edge(piece.stubs()[2].removed_edge);
  bool on_path = !(e1.touches(e2.u) || e1.touches(e2.v));
  if (on_path) {
    on_path = false;
    for (const Edge& mid : g.edges()) {
      if ((e1.touches(mid.u) && e2.touches(mid.v)) || (e1.touches(mid.v) && e2.touches(mid.u))) on_path = true;
    }
  }
  if (!on_path) fail(ErrorKind::InvalidArgument, "extend_two_edges: the edges are not the end-edges of a path of length three");
  return extend_edges(g, piece, piece_colors, 2, 9, "extend_two_edges");
}

EdgeColoring extend_vertex_star(const CubicGraph& g, const MarkedGraph& piece, std::span<const Color> piece_colors,
                                Color external_color_v1) {
  if (!piece.removed_vertex() || piece.stubs().size() != 3) {
    fail(ErrorKind::InvalidArgument, "extend_vertex_star: piece must come from deleting one vertex");
  }
  if (external_color_v1 < 1 || external_color_v1 > 5) fail(ErrorKind::InvalidArgument, "external color must lie in 1..5");
  auto pal = piece_palettes(piece, piece_colors);
  require_clean_interior(piece, pal);
  const auto stubs = piece.stubs();
  const VertexId v1 = stubs[0].vertex;
  if (pal[static_cast<std::size_t>(v1)] & color_bit(external_color_v1)) {
    fail(ErrorKind::InvalidArgument, "external color already used at v1");
  }
  if (piece.degree(v1) == 2) {
    // With its outside edge, v1 must leave its own piece edges poor or rich.
    const Palette full = pal[static_cast<std::size_t>(v1)] | color_bit(external_color_v1);
    for (EdgeId e : piece.incident(v1)) {
      const VertexId w = piece.edge(e).other(v1);
      if (piece.degree(w) == 3 && classify_palettes(full, pal[static_cast<std::size_t>(w)]) == EdgeClass::Abnormal) {
        fail(ErrorKind::InvalidArgument, "piece edge " + std::to_string(e) + " at v1 is abnormal");
      }
    }
  }

  std::vector<Color> colors = lift(g, piece, piece_colors);
  Palette at_v = 0;
  std::array<Color, 3> star{};
  for (std::size_t i = 0; i < 3; ++i) {
    const Stub& s = stubs[i];
    const Color c = i == 0 ? external_color_v1 : smallest_missing(at_v | pal[static_cast<std::size_t>(s.vertex)]);
    star[i] = c;
    at_v |= color_bit(c);
    pal[static_cast<std::size_t>(s.vertex)] |= color_bit(c);
    colors[static_cast<std::size_t>(s.removed_edge)] = c;
  }
  std::vector<EdgeId> allowed;
  for (const Stub& s : stubs) allowed.push_back(s.removed_edge);
  for (std::size_t i = 1; i < 3; ++i)
    for (EdgeId f : g.adjacent_edges(stubs[i].removed_edge)) allowed.push_back(f);
  return checked(g, std::move(colors), allowed, 7, "extend_vertex_star");
}

// ---------------------------------------------------------------------------
// Pigeonhole demonstration

int table_bound(Variant v) {
  switch (v) {
    case Variant::Disjoint: return 0;
    case Variant::Cyclic1: return 5;
    case Variant::VertexReplacement: return 7;
    case Variant::Cyclic2: return 9;
    default: fail(ErrorKind::InvalidArgument, std::string("variant ") + to_string(v) + " has no demo");
  }
}

namespace {

// Smallest catalog host that is a 3-connected bipartite cubic graph on at
// least 2t vertices.
CubicGraph replacement_host(int t, std::string* name) {
  if (2 * t <= 6) {
    if (name) *name = "k33";
    return catalog("k33");
  }
  const int m = t % 2 == 0 ? t : t + 1;
  if (name) *name = "prism(" + std::to_string(m) + ")";
  const int params[] = {m};
  return catalog("prism", params);
}

}  // namespace

Composite demo_host_graph(const CubicGraph& g, Variant variant, int t, std::string* host_name) {
  if (t < 1) fail(ErrorKind::InvalidArgument, "t must be at least 1");
  const ConnectivityReport conn = connectivity_report(g);
  const bool connected = is_connected(g);
  switch (variant) {
    case Variant::Disjoint:
      if (!conn.bridgeless) fail(ErrorKind::InvalidArgument, "disjoint demo needs a bridgeless graph");
      return disjoint_copies(g, t);
    case Variant::Cyclic1:
      if (!connected || !conn.bridgeless) fail(ErrorKind::InvalidArgument, "cyclic1 demo needs a 2-connected graph");
      return cyclic_join_one_edge(g, 0, t);
    case Variant::Cyclic2: {
      if (!connected || !conn.cyclically_4_edge_connected || conn.edge_connectivity_capped_at_4 < 3) {
        fail(ErrorKind::InvalidArgument, "cyclic2 demo needs a cyclically 4-edge-connected graph");
      }
      const auto ends = first_three_path_ends(g);
      if (!ends) fail(ErrorKind::InvalidArgument, "graph has no path of length three");
      return cyclic_join_two_edges(g, (*ends)[0], (*ends)[1], std::max(t, 2));
    }
    case Variant::VertexReplacement: {
      if (!connected || conn.edge_connectivity_capped_at_4 < 3) {
        fail(ErrorKind::InvalidArgument, "vertex_replacement demo needs a 3-connected graph");
      }
      const CubicGraph host = replacement_host(t, host_name);
      return vertex_replacement(host, g, 0);
    }
    default:
      fail(ErrorKind::InvalidArgument, std::string("variant ") + to_string(variant) + " has no demo");
  }
}

DemoReport pigeonhole_demo(const CubicGraph& g, Variant variant, int t, const std::optional<EdgeColoring>& coloring_of_h,
                           const SearchConfig& solver) {
  DemoReport report;
  report.variant = variant;
  report.t = variant == Variant::Cyclic2 ? std::max(t, 2) : t;
  report.bound = table_bound(variant);
  const Composite h = demo_host_graph(g, variant, t, &report.host);
  report.copies = static_cast<int>(h.copies.size());
  report.vertices_h = h.graph.vertex_count();

  std::optional<EdgeColoring> coloring = coloring_of_h;
  if (coloring) {
    if (!is_proper(h.graph, *coloring, 5)) fail(ErrorKind::InvalidArgument, "supplied coloring of H is not a proper 5-edge-coloring");
  } else {
    SearchConfig cfg = solver;
    cfg.colors = 5;
    coloring = min_abnormal(h.graph, cfg).witness;
  }
  if (!coloring) return report;

  const auto classes = classify_edges(h.graph, *coloring);
  report.abnormal_h = static_cast<int>(std::count(classes.begin(), classes.end(), EdgeClass::Abnormal));
  for (std::size_t i = 0; i < h.copies.size() && !report.clean_copy_index; ++i) {
    const auto& edges = h.copies[i].edge_map;
    if (std::none_of(edges.begin(), edges.end(), [&](EdgeId e) { return classes[static_cast<std::size_t>(e)] == EdgeClass::Abnormal; })) {
      report.clean_copy_index = static_cast<int>(i);
    }
  }
  if (!report.clean_copy_index) {
    if (report.abnormal_h < report.copies) fail(ErrorKind::Verification, "fewer abnormal edges than copies but no clean copy");
    return report;
  }

  const CopyEmbedding& copy = h.copies[static_cast<std::size_t>(*report.clean_copy_index)];
  std::vector<Color> piece_colors;
  for (EdgeId e : copy.edge_map) piece_colors.push_back((*coloring)[e]);
  EdgeColoring final_coloring;
  switch (variant) {
    case Variant::Disjoint:
      final_coloring = EdgeColoring(5, lift(g, h.piece, piece_colors));
      break;
    case Variant::Cyclic1:
      final_coloring = extend_one_edge(g, h.piece, piece_colors);
      break;
    case Variant::Cyclic2:
      final_coloring = extend_two_edges(g, h.piece, piece_colors);
      break;
    case Variant::VertexReplacement:
      final_coloring = extend_vertex_star(g, h.piece, piece_colors, (*coloring)[copy.stub_edges[0]]);
      break;
    default:
      break;
  }
  report.abnormal_final = static_cast<int>(abnormal_set(g, final_coloring).size());
  report.pass = is_proper(g, final_coloring, 5) && *report.abnormal_final <= report.bound;
  report.final_coloring = std::move(final_coloring);
  return report;
}

// ---------------------------------------------------------------------------

ConstructionOutput construct(const ConstructionRecipe& r) {
  auto edge_or = [&](std::size_t i, EdgeId fallback) {
    return i < r.edges.size() ? r.edges[i] : fallback;
  };
  switch (r.variant) {
    case Variant::Disjoint:
      return {disjoint_copies(r.source, r.t).graph, std::nullopt};
    case Variant::Cyclic1:
      return {cyclic_join_one_edge(r.source, edge_or(0, 0), r.t).graph, std::nullopt};
    case Variant::Cyclic2: {
      std::array<EdgeId, 2> ends{};
      if (r.edges.size() >= 2) {
        ends = {r.edges[0], r.edges[1]};
      } else {
        const auto found = first_three_path_ends(r.source);
        if (!found) fail(ErrorKind::InvalidArgument, "graph has no path of length three");
        ends = *found;
      }
      return {cyclic_join_two_edges(r.source, ends[0], ends[1], r.t).graph, std::nullopt};
    }
    case Variant::VertexReplacement:
      if (!r.second) fail(ErrorKind::InvalidArgument, "vertex_replacement needs a host graph");
      return {vertex_replacement(*r.second, r.source, r.vertex.value_or(0)).graph, std::nullopt};
    case Variant::TwoCut:
      if (!r.second) fail(ErrorKind::InvalidArgument, "two_cut needs a second graph");
      return {two_cut_connection(r.source, edge_or(0, 0), *r.second, edge_or(1, 0)).graph, std::nullopt};
    case Variant::K4Gadget: {
      if (!r.coloring) fail(ErrorKind::InvalidArgument, "k4_gadget needs a coloring");
      EdgeId e = edge_or(0, -1);
      if (e < 0) {
        const auto abnormal = abnormal_set(r.source, *r.coloring);
        if (abnormal.empty()) fail(ErrorKind::InvalidArgument, "coloring has no abnormal edge");
        e = abnormal.front();
      }
      ColoredGraph out = k4_gadget_extend(r.source, *r.coloring, e);
      return {std::move(out.graph), std::move(out.coloring)};
    }
  }
  fail(ErrorKind::InvalidArgument, "unknown variant");
}

}  // namespace normcol
