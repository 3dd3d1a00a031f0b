#include "doctest.h"
#include "normcol/constructions.hpp"
#include "normcol/homomorphism.hpp"
#include "support.hpp"

using namespace normcol;
using testing::error_kind;

namespace {

const EdgeColoring& kneser() { return canonical_petersen().coloring; }

std::vector<Color> restrict_to(const MarkedGraph& piece, const EdgeColoring& c) {
  std::vector<Color> out;
  for (EdgeId e = 0; e < piece.edge_count(); ++e) out.push_back(c[piece.edge_origin(e)]);
  return out;
}

bool isomorphic(const CubicGraph& a, const CubicGraph& b) { return canonical_code(a) == canonical_code(b); }

// Lexicographically first proper 5-edge-coloring of g with exactly `target`
// abnormal edges, by plain backtracking in edge-id order.
std::optional<std::vector<Color>> first_with_abnormal(const CubicGraph& g, int target) {
  std::vector<Color> colors(static_cast<std::size_t>(g.edge_count()), 0);
  std::optional<std::vector<Color>> found;
  auto go = [&](auto&& self, EdgeId e) -> void {
    if (found) return;
    if (e == g.edge_count()) {
      if (testing::count_abnormal(g, colors) == target) found = colors;
      return;
    }
    for (Color c = 1; c <= 5 && !found; ++c) {
      bool clash = false;
      for (VertexId x : {g.edge(e).u, g.edge(e).v})
        for (EdgeId f : g.incident(x))
          if (f < e && colors[static_cast<std::size_t>(f)] == c) clash = true;
      if (clash) continue;
      colors[static_cast<std::size_t>(e)] = c;
      self(self, e + 1);
    }
    colors[static_cast<std::size_t>(e)] = 0;
  };
  go(go, 0);
  return found;
}

}  // namespace

TEST_CASE("size laws") {
  const CubicGraph k4 = catalog("k4");
  const CubicGraph p = catalog("petersen");
  const Composite d = disjoint_copies(k4, 3);
  CHECK(d.graph.vertex_count() == 12);
  CHECK(component_count(d.graph) == 3);
  CHECK(isomorphic(disjoint_copies(p, 1).graph, p));
  const Composite d4 = disjoint_copies(p, 4);
  CHECK(d4.graph.vertex_count() == 40);
  CHECK(connectivity_report(d4.graph).bridgeless);

  const Composite c3 = cyclic_join_one_edge(p, 0, 3);
  CHECK(c3.graph.vertex_count() == 30);
  CHECK(is_connected(c3.graph));
  CHECK(connectivity_report(cyclic_join_one_edge(p, 0, 2).graph).bridgeless);
  for (EdgeId e = 0; e < 6; ++e) CHECK(isomorphic(cyclic_join_one_edge(k4, e, 1).graph, k4));

  CHECK(error_kind([&] { disjoint_copies(k4, 0); }) == ErrorKind::InvalidArgument);
  CHECK(error_kind([&] { cyclic_join_one_edge(k4, 6, 2); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("cyclic join along two edges") {
  const CubicGraph p = catalog("petersen");
  const auto ends = first_three_path_ends(p);
  REQUIRE(ends.has_value());
  for (int t : {2, 3}) {
    const Composite h = cyclic_join_two_edges(p, (*ends)[0], (*ends)[1], t);
    CHECK(h.graph.vertex_count() == 10 * t);
    CHECK(h.graph.edge_count() == 15 * t);
    CHECK(connectivity_report(h.graph).cyclically_4_edge_connected);
  }
  // The stubs of copy i are wired to copy i+1 as d_i a_{i+1} and c_i b_{i+1}.
  const Composite h = cyclic_join_two_edges(p, (*ends)[0], (*ends)[1], 3);
  const auto stubs = h.piece.stubs();
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t next = (i + 1) % 3;
    CHECK(h.copies[i].stub_edges[3] == h.copies[next].stub_edges[0]);
    CHECK(h.copies[i].stub_edges[2] == h.copies[next].stub_edges[1]);
    const Edge link = h.graph.edge(h.copies[i].stub_edges[3]);
    CHECK(link.touches(h.copies[i].vertex_map[static_cast<std::size_t>(stubs[3].vertex)]));
    CHECK(link.touches(h.copies[next].vertex_map[static_cast<std::size_t>(stubs[0].vertex)]));
  }
  const EdgeId at0a = p.incident(0)[0], at0b = p.incident(0)[1];
  CHECK(error_kind([&] { cyclic_join_two_edges(p, at0a, at0b, 2); }) == ErrorKind::InvalidArgument);
  CHECK(error_kind([&] { cyclic_join_two_edges(p, (*ends)[0], (*ends)[1], 1); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("cyclic 4-edge-connectivity of two-edge joins agrees with the cut oracle") {
  // Small instance where the exponential oracle is affordable.
  const CubicGraph k33 = catalog("k33");
  const auto ends = first_three_path_ends(k33);
  REQUIRE(ends.has_value());
  const Composite h = cyclic_join_two_edges(k33, (*ends)[0], (*ends)[1], 2);
  const ConnectivityReport r = connectivity_report(h.graph);
  const testing::CutOracle o = testing::cut_oracle(h.graph);
  CHECK(r.bridgeless == o.bridgeless);
  CHECK(r.edge_connectivity_capped_at_4 == o.edge_connectivity_capped_at_4);
  CHECK(r.cyclically_4_edge_connected == o.cyclically_4_edge_connected);
}

TEST_CASE("vertex replacement") {
  const CubicGraph k33 = catalog("k33");
  const CubicGraph k4 = catalog("k4");
  const CubicGraph p = catalog("petersen");
  CHECK(vertex_replacement(k33, k4, 0).graph.vertex_count() == 18);
  const int six[] = {6};
  CHECK(vertex_replacement(catalog("prism", six), p, 0).graph.vertex_count() == 108);
  const Composite h = vertex_replacement(k33, p, 0);
  CHECK(h.graph.vertex_count() == 54);
  CHECK(connectivity_report(h.graph).edge_connectivity_capped_at_4 >= 3);
  // Host edge e at x lands on the stub whose position matches e in x's incidence list.
  for (EdgeId e = 0; e < k33.edge_count(); ++e) {
    const Edge he = k33.edge(e);
    const auto& inc = k33.incident(he.u);
    const auto port = static_cast<std::size_t>(std::find(inc.begin(), inc.end(), e) - inc.begin());
    const Edge link = h.graph.edge(h.copies[static_cast<std::size_t>(he.u)].stub_edges[port]);
    CHECK(link.touches(h.copies[static_cast<std::size_t>(he.u)].vertex_map[static_cast<std::size_t>(h.piece.stubs()[port].vertex)]));
  }
}

TEST_CASE("two-cut connection") {
  const CubicGraph k4 = catalog("k4");
  const TwoCutConnection a = two_cut_connection(k4, 2, k4, 5);
  CHECK(a.graph.vertex_count() == 8);
  CHECK(a.second_offset == 4);
  // e1 = 0-3, e2 = 2-3 (offset 4).
  CHECK(a.graph.edge(a.link_x) == Edge{0, 6});
  CHECK(a.graph.edge(a.link_y) == Edge{3, 7});
  CHECK(a.first_edges[2] == -1);
  CHECK(a.second_edges[5] == -1);
  const TwoCutConnection b = two_cut_connection(catalog("q3"), 0, k4, 0);
  CHECK(b.graph.vertex_count() == 12);
  CHECK(b.graph.edge_count() == 18);
}

TEST_CASE("frozen Q3 coloring regenerates") {
  const CubicGraph q3 = catalog("q3");
  const auto first = first_with_abnormal(q3, 2);
  REQUIRE(first.has_value());
  const EdgeColoring frozen = q3_base_coloring();
  CHECK(*first == std::vector<Color>(frozen.colors().begin(), frozen.colors().end()));
  CHECK(abnormal_set(q3, q3_base_coloring()).size() == 2);
}

TEST_CASE("frozen K4 gadget table regenerates") {
  // Normalize the first abnormal edge of the Q3 coloring: c(e) = 1,
  // S(x1) = {1,2,3}, S(y1) = {1,2,4}, with x1 the smaller endpoint.
  const CubicGraph q3 = catalog("q3");
  const EdgeColoring base = q3_base_coloring();
  const EdgeId e = abnormal_set(q3, base).front();
  const Edge ed = q3.edge(e);
  const Palette sx = palette(q3, base, std::min(ed.u, ed.v));
  const Palette sy = palette(q3, base, std::max(ed.u, ed.v));
  std::array<Color, 6> to_canonical{};
  to_canonical[static_cast<std::size_t>(base[e])] = 1;
  auto assign = [&](Palette p, Color canonical) {
    REQUIRE(palette_size(p) == 1);
    to_canonical[static_cast<std::size_t>(palette_colors(p).front())] = canonical;
  };
  assign((sx & sy) & ~color_bit(base[e]), 2);
  assign(sx & ~sy, 3);
  assign(sy & ~sx, 4);
  assign(0x1fu & ~(sx | sy), 5);
  const EdgeColoring host = permute_colors(base, to_canonical);

  const CubicGraph k4 = catalog("k4");
  const TwoCutConnection joined = two_cut_connection(q3, e, k4, 0);
  std::optional<std::array<Color, 5>> first;
  std::array<Color, 5> table{};
  auto go = [&](auto&& self, std::size_t i) -> void {
    if (first) return;
    if (i == 5) {
      std::vector<Color> colors(static_cast<std::size_t>(joined.graph.edge_count()), 0);
      for (EdgeId f = 0; f < q3.edge_count(); ++f)
        if (f != e) colors[static_cast<std::size_t>(joined.first_edges[static_cast<std::size_t>(f)])] = host[f];
      colors[static_cast<std::size_t>(joined.link_x)] = 1;
      colors[static_cast<std::size_t>(joined.link_y)] = 1;
      for (std::size_t j = 0; j < 5; ++j) colors[static_cast<std::size_t>(joined.second_edges[j + 1])] = table[j];
      if (testing::proper(joined.graph, colors) && testing::count_abnormal(joined.graph, colors) == 3) first = table;
      return;
    }
    for (Color c = 1; c <= 5; ++c) {
      table[i] = c;
      self(self, i + 1);
    }
  };
  go(go, 0);
  REQUIRE(first.has_value());
  CHECK(*first == k4_gadget_table());
}

TEST_CASE("K4 gadget adds one abnormal edge") {
  const CubicGraph q3 = catalog("q3");
  const ColoredGraph once = k4_gadget_extend(q3, q3_base_coloring(), 1);
  CHECK(once.graph.vertex_count() == 12);
  CHECK(is_proper(once.graph, once.coloring, 5));
  CHECK(abnormal_set(once.graph, once.coloring).size() == 3);
  const ColoredGraph twice = k4_gadget_extend(once.graph, once.coloring, abnormal_set(once.graph, once.coloring).back());
  CHECK(twice.graph.vertex_count() == 16);
  CHECK(abnormal_set(twice.graph, twice.coloring).size() == 4);
  CHECK(error_kind([&] { k4_gadget_extend(q3, q3_base_coloring(), 0); }) == ErrorKind::InvalidArgument);
  // Works under any renaming of the colors.
  const Color perm[] = {0, 4, 1, 5, 3, 2};
  const EdgeColoring renamed = permute_colors(q3_base_coloring(), perm);
  CHECK(abnormal_set(k4_gadget_extend(q3, renamed, 3).graph, k4_gadget_extend(q3, renamed, 3).coloring).size() == 3);
}

TEST_CASE("k-abnormal family") {
  for (int k = 2; k <= 8; ++k) {
    const ColoredGraph g = k_abnormal_example(k);
    CHECK(g.graph.vertex_count() == 8 + 4 * (k - 2));
    CHECK(is_proper(g.graph, g.coloring, 5));
    CHECK(static_cast<int>(abnormal_set(g.graph, g.coloring).size()) == k);
    CHECK(testing::count_abnormal(g.graph, g.coloring.colors()) == k);
  }
  CHECK(k_abnormal_example(2).graph == catalog("q3"));
  CHECK(error_kind([] { k_abnormal_example(1); }) == ErrorKind::InvalidArgument);
  CHECK(error_kind([] { k_abnormal_example(0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("extending one edge") {
  const CubicGraph k4 = catalog("k4");
  const EdgeColoring three(3, {1, 2, 3, 3, 2, 1});
  const EdgeId e0[] = {0};
  const MarkedGraph k4_minus = remove_edges(k4, e0);
  const EdgeColoring ext = extend_one_edge(k4, k4_minus, restrict_to(k4_minus, three));
  CHECK(is_proper(k4, ext, 5));
  CHECK(abnormal_set(k4, ext).size() <= 5);

  // Deleting an edge of the Kneser coloring leaves exactly its color free at both ends.
  const CubicGraph p = catalog("petersen");
  const PetersenModel& m = canonical_petersen();
  const VertexId a = m.vertex_with_palette(color_bit(3) | color_bit(4) | color_bit(5));
  const VertexId b = m.vertex_with_palette(color_bit(1) | color_bit(2) | color_bit(5));
  const EdgeId e = m.edge_between(a, b);
  REQUIRE(e >= 0);
  const EdgeId del[] = {e};
  const MarkedGraph p_minus = remove_edges(p, del);
  const EdgeColoring back = extend_one_edge(p, p_minus, restrict_to(p_minus, kneser()));
  CHECK(back[e] == 5);
  CHECK(back == kneser());

  const std::vector<Color> improper(static_cast<std::size_t>(p_minus.edge_count()), 1);
  CHECK(error_kind([&] { extend_one_edge(p, p_minus, improper); }) == ErrorKind::InvalidArgument);
  const MarkedGraph vertex_piece = remove_vertex(p, 0);
  CHECK(error_kind([&] { extend_one_edge(p, vertex_piece, restrict_to(vertex_piece, kneser())); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("extension rejects abnormal interior edges") {
  const CubicGraph q3 = catalog("q3");
  const EdgeColoring base = q3_base_coloring();
  const auto abnormal = abnormal_set(q3, base);
  std::optional<EdgeId> far;
  for (EdgeId e = 0; e < q3.edge_count() && !far; ++e) {
    bool near = false;
    for (EdgeId f : abnormal) {
      const Edge fe = q3.edge(f);
      if (e == f || q3.edge(e).touches(fe.u) || q3.edge(e).touches(fe.v)) near = true;
    }
    if (!near) far = e;
  }
  REQUIRE(far.has_value());
  const EdgeId del[] = {*far};
  const MarkedGraph piece = remove_edges(q3, del);
  CHECK(error_kind([&] { extend_one_edge(q3, piece, restrict_to(piece, base)); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("extending a vertex star") {
  const CubicGraph k4 = catalog("k4");
  const EdgeColoring three(3, {1, 2, 3, 3, 2, 1});
  const MarkedGraph k4_minus = remove_vertex(k4, 0);
  const Color outside = three[k4_minus.stubs()[0].removed_edge];
  const EdgeColoring ext = extend_vertex_star(k4, k4_minus, restrict_to(k4_minus, three), outside);
  CHECK(is_proper(k4, ext, 5));
  CHECK(abnormal_set(k4, ext).size() <= 7);
  CHECK(ext[k4_minus.stubs()[0].removed_edge] == outside);

  const CubicGraph p = catalog("petersen");
  for (VertexId v = 0; v < 10; ++v) {
    const MarkedGraph piece = remove_vertex(p, v);
    const Color c1 = kneser()[piece.stubs()[0].removed_edge];
    const EdgeColoring out = extend_vertex_star(p, piece, restrict_to(piece, kneser()), c1);
    CHECK(is_proper(p, out, 5));
    CHECK(abnormal_set(p, out).size() <= 7);
  }
  const MarkedGraph piece = remove_vertex(p, 0);
  const auto colors = restrict_to(piece, kneser());
  const Palette at_v1 = [&] {
    Palette s = 0;
    for (EdgeId e : piece.incident(piece.stubs()[0].vertex)) s |= color_bit(colors[static_cast<std::size_t>(e)]);
    return s;
  }();
  CHECK(error_kind([&] { extend_vertex_star(p, piece, colors, palette_colors(at_v1).front()); }) ==
        ErrorKind::InvalidArgument);
  CHECK(error_kind([&] { extend_vertex_star(p, piece, colors, 6); }) == ErrorKind::InvalidArgument);
  const EdgeId e0[] = {0};
  const MarkedGraph edge_piece = remove_edges(p, e0);
  CHECK(error_kind([&] { extend_vertex_star(p, edge_piece, restrict_to(edge_piece, kneser()), 1); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("extending two edges") {
  const CubicGraph p = catalog("petersen");
  const auto ends = first_three_path_ends(p);
  REQUIRE(ends.has_value());
  const MarkedGraph piece = remove_edges(p, *ends);
  const EdgeColoring back = extend_two_edges(p, piece, restrict_to(piece, kneser()));
  CHECK(back == kneser());
  CHECK(abnormal_set(p, back).empty());

  // Every 3-path of the Petersen graph, starting from a greedy clean coloring.
  for (EdgeId mid = 0; mid < p.edge_count(); ++mid) {
    const Edge m = p.edge(mid);
    for (EdgeId e1 : p.incident(m.u))
      for (EdgeId e2 : p.incident(m.v)) {
        if (e1 == mid || e2 == mid) continue;
        const EdgeId del[] = {std::min(e1, e2), std::max(e1, e2)};
        const MarkedGraph pc = remove_edges(p, del);
        const EdgeColoring out = extend_two_edges(p, pc, restrict_to(pc, kneser()));
        CHECK(abnormal_set(p, out).size() <= 9);
      }
  }

  const EdgeId adjacent[] = {p.incident(0)[0], p.incident(0)[1]};
  const MarkedGraph bad = remove_edges(p, adjacent);
  CHECK(error_kind([&] { extend_two_edges(p, bad, restrict_to(bad, kneser())); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("pigeonhole demo on the Petersen graph") {
  const CubicGraph p = catalog("petersen");
  for (int t : {2, 3}) {
    for (Variant v : {Variant::Disjoint, Variant::Cyclic1, Variant::VertexReplacement, Variant::Cyclic2}) {
      const DemoReport r = pigeonhole_demo(p, v, t);
      CHECK(r.bound == table_bound(v));
      REQUIRE(r.clean_copy_index.has_value());
      REQUIRE(r.abnormal_final.has_value());
      CHECK(*r.abnormal_final <= r.bound);
      CHECK(r.pass);
      REQUIRE(r.final_coloring.has_value());
      CHECK(is_proper(p, *r.final_coloring, 5));
    }
  }
  CHECK(table_bound(Variant::Disjoint) == 0);
  CHECK(table_bound(Variant::Cyclic1) == 5);
  CHECK(table_bound(Variant::VertexReplacement) == 7);
  CHECK(table_bound(Variant::Cyclic2) == 9);
  CHECK(error_kind([] { table_bound(Variant::TwoCut); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("pigeonhole demo with a supplied coloring") {
  const CubicGraph q3 = catalog("q3");
  const Composite h = demo_host_graph(q3, Variant::Disjoint, 3);
  const EdgeColoring base = q3_base_coloring();
  const EdgeColoring three = *has_normal_k(q3, 3);
  auto paint = [&](const std::array<const EdgeColoring*, 3>& per_copy) {
    std::vector<Color> colors(static_cast<std::size_t>(h.graph.edge_count()), 0);
    for (std::size_t i = 0; i < 3; ++i)
      for (EdgeId e = 0; e < q3.edge_count(); ++e)
        colors[static_cast<std::size_t>(h.copies[i].edge_map[static_cast<std::size_t>(e)])] = (*per_copy[i])[e];
    return EdgeColoring(5, std::move(colors));
  };

  const DemoReport one_clean = pigeonhole_demo(q3, Variant::Disjoint, 3, paint({&base, &base, &three}));
  CHECK(one_clean.abnormal_h == 4);
  CHECK(one_clean.clean_copy_index == 2);
  CHECK(one_clean.abnormal_final == 0);
  CHECK(one_clean.pass);

  const DemoReport none = pigeonhole_demo(q3, Variant::Disjoint, 3, paint({&base, &base, &base}));
  CHECK(none.abnormal_h == 6);
  CHECK_FALSE(none.clean_copy_index.has_value());
  CHECK_FALSE(none.pass);

  // Fewer abnormal edges than copies: the clean copy must exist.
  const DemoReport pigeon = pigeonhole_demo(q3, Variant::Disjoint, 3, paint({&base, &three, &three}));
  CHECK(pigeon.abnormal_h == 2);
  CHECK(pigeon.clean_copy_index == 1);

  const EdgeColoring improper(5, std::vector<Color>(static_cast<std::size_t>(h.graph.edge_count()), 1));
  CHECK(error_kind([&] { pigeonhole_demo(q3, Variant::Disjoint, 3, improper); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("demo preconditions") {
  const CubicGraph bridged = testing::multigraph_corpus()[2];
  CHECK(error_kind([&] { pigeonhole_demo(bridged, Variant::Disjoint, 2); }) == ErrorKind::InvalidArgument);
  CHECK(error_kind([&] { pigeonhole_demo(bridged, Variant::Cyclic1, 2); }) == ErrorKind::InvalidArgument);
  // Bridgeless but with a cyclic 2- or 3-edge cut.
  std::optional<CubicGraph> cut;
  for (const CubicGraph& g : enumerate_cubic(8)) {
    const ConnectivityReport r = connectivity_report(g);
    if (r.bridgeless && !r.cyclically_4_edge_connected) cut = g;
  }
  REQUIRE(cut.has_value());
  CHECK(error_kind([&] { pigeonhole_demo(*cut, Variant::Cyclic2, 2); }) == ErrorKind::InvalidArgument);
  CHECK(pigeonhole_demo(catalog("q3"), Variant::Cyclic2, 2).pass);
  CHECK(error_kind([&] { pigeonhole_demo(bridged, Variant::VertexReplacement, 2); }) == ErrorKind::InvalidArgument);
  CHECK(error_kind([&] { pigeonhole_demo(catalog("k4"), Variant::K4Gadget, 2); }) == ErrorKind::InvalidArgument);
  std::string host;
  CHECK(demo_host_graph(catalog("petersen"), Variant::VertexReplacement, 4, &host).copies.size() == 8);
  CHECK(host == "prism(4)");
  CHECK(demo_host_graph(catalog("petersen"), Variant::VertexReplacement, 5, &host).copies.size() == 12);
  CHECK(host == "prism(6)");
}

TEST_CASE("recipe dispatcher") {
  const CubicGraph p = catalog("petersen");
  ConstructionRecipe r;
  r.source = p;
  r.t = 2;
  r.variant = Variant::Disjoint;
  CHECK(construct(r).graph == disjoint_copies(p, 2).graph);
  r.variant = Variant::Cyclic1;
  CHECK(construct(r).graph == cyclic_join_one_edge(p, 0, 2).graph);
  r.variant = Variant::Cyclic2;
  const auto ends = *first_three_path_ends(p);
  CHECK(construct(r).graph == cyclic_join_two_edges(p, ends[0], ends[1], 2).graph);
  r.variant = Variant::VertexReplacement;
  CHECK(error_kind([&] { construct(r); }) == ErrorKind::InvalidArgument);
  r.second = catalog("k33");
  r.vertex = 3;
  CHECK(construct(r).graph == vertex_replacement(catalog("k33"), p, 3).graph);
  r.variant = Variant::TwoCut;
  r.second = catalog("k4");
  r.edges = {4, 2};
  CHECK(construct(r).graph == two_cut_connection(p, 4, catalog("k4"), 2).graph);

  ConstructionRecipe g;
  g.variant = Variant::K4Gadget;
  g.source = catalog("q3");
  CHECK(error_kind([&] { construct(g); }) == ErrorKind::InvalidArgument);
  g.coloring = q3_base_coloring();
  const ConstructionOutput out = construct(g);
  REQUIRE(out.coloring.has_value());
  CHECK(abnormal_set(out.graph, *out.coloring).size() == 3);

  CHECK(parse_variant("vertex-replacement") == Variant::VertexReplacement);
  CHECK_FALSE(parse_variant("bogus").has_value());
  CHECK(std::string(to_string(Variant::K4Gadget)) == "k4_gadget");
}
