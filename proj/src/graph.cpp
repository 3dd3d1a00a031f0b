#include "normcol/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <sstream>

namespace normcol {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Degree: return "degree error";
    case ErrorKind::Loop: return "loop error";
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::Verification: return "verification failure";
    case ErrorKind::Limit: return "limit exceeded";
  }
  return "error";
}

CubicGraph::CubicGraph(int vertex_count, std::vector<Edge> edges) : edges_(std::move(edges)) {
  if (vertex_count < 0) fail(ErrorKind::InvalidArgument, "negative vertex count");
  std::vector<int> degree(static_cast<std::size_t>(vertex_count), 0);
  incidence_.assign(static_cast<std::size_t>(vertex_count), {-1, -1, -1});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count) {
      fail(ErrorKind::InvalidArgument,
           "edge " + std::to_string(i) + " has an endpoint outside [0, " +
               std::to_string(vertex_count) + ")");
    }
    if (e.u == e.v) {
      fail(ErrorKind::Loop, "edge " + std::to_string(i) + " is a loop at vertex " + std::to_string(e.u));
    }
    for (VertexId x : {e.u, e.v}) {
      int& d = degree[static_cast<std::size_t>(x)];
      if (d >= 3) fail(ErrorKind::Degree, "vertex " + std::to_string(x) + " has degree above 3");
      incidence_[static_cast<std::size_t>(x)][static_cast<std::size_t>(d++)] = static_cast<EdgeId>(i);
    }
  }
  for (int v = 0; v < vertex_count; ++v) {
    if (degree[static_cast<std::size_t>(v)] != 3) {
      fail(ErrorKind::Degree, "vertex " + std::to_string(v) + " has degree " +
                                  std::to_string(degree[static_cast<std::size_t>(v)]));
    }
  }
}

bool CubicGraph::has_parallel_edges() const {
  for (VertexId v = 0; v < vertex_count(); ++v) {
    const auto& inc = incident(v);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (edge(inc[i]).other(v) == edge(inc[j]).other(v)) return true;
  }
  return false;
}

bool CubicGraph::has_edge_between(VertexId a, VertexId b) const {
  for (EdgeId e : incident(a))
    if (edge(e).other(a) == b) return true;
  return false;
}

std::vector<EdgeId> CubicGraph::adjacent_edges(EdgeId e) const {
  std::vector<EdgeId> out;
  const Edge& ed = edge(e);
  for (VertexId x : {ed.u, ed.v})
    for (EdgeId f : incident(x))
      if (f != e && std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// MarkedGraph

int MarkedGraph::stub_count_at(VertexId v) const {
  return static_cast<int>(std::count_if(stubs_.begin(), stubs_.end(),
                                        [v](const Stub& s) { return s.vertex == v; }));
}

CubicGraph MarkedGraph::restore() const {
  GraphBuilder b;
  b.add_vertices(vertex_count());
  for (const Edge& e : edges_) b.add_edge(e.u, e.v);
  if (removed_vertex_) {
    const VertexId hub = b.add_vertex();
    for (const Stub& s : stubs_) b.add_edge(s.vertex, hub);
  } else {
    for (std::size_t i = 0; i + 1 < stubs_.size(); i += 2) b.add_edge(stubs_[i].vertex, stubs_[i + 1].vertex);
  }
  return b.build();
}

namespace {

int slot_of(const CubicGraph& g, VertexId v, EdgeId e) {
  const auto& inc = g.incident(v);
  return static_cast<int>(std::find(inc.begin(), inc.end(), e) - inc.begin());
}

}  // namespace

MarkedGraph remove_edges(const CubicGraph& graph, std::span<const EdgeId> deletions) {
  std::vector<bool> removed(static_cast<std::size_t>(graph.edge_count()), false);
  for (EdgeId e : deletions) {
    if (e < 0 || e >= graph.edge_count()) fail(ErrorKind::InvalidArgument, "unknown edge id " + std::to_string(e));
    if (removed[static_cast<std::size_t>(e)]) fail(ErrorKind::InvalidArgument, "edge " + std::to_string(e) + " deleted twice");
    removed[static_cast<std::size_t>(e)] = true;
  }
  MarkedGraph m;
  m.vertex_origin_.resize(static_cast<std::size_t>(graph.vertex_count()));
  std::iota(m.vertex_origin_.begin(), m.vertex_origin_.end(), 0);
  m.incidence_.resize(static_cast<std::size_t>(graph.vertex_count()));
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    const Edge& ed = graph.edge(e);
    if (removed[static_cast<std::size_t>(e)]) {
      const VertexId lo = std::min(ed.u, ed.v), hi = std::max(ed.u, ed.v);
      m.stubs_.push_back({lo, slot_of(graph, lo, e), e});
      m.stubs_.push_back({hi, slot_of(graph, hi, e), e});
      continue;
    }
    const EdgeId id = static_cast<EdgeId>(m.edges_.size());
    m.edges_.push_back(ed);
    m.edge_origin_.push_back(e);
    m.incidence_[static_cast<std::size_t>(ed.u)].push_back(id);
    m.incidence_[static_cast<std::size_t>(ed.v)].push_back(id);
  }
  return m;
}

MarkedGraph remove_vertex(const CubicGraph& graph, VertexId vertex) {
  if (vertex < 0 || vertex >= graph.vertex_count()) {
    fail(ErrorKind::InvalidArgument, "unknown vertex id " + std::to_string(vertex));
  }
  auto renumber = [vertex](VertexId x) { return x > vertex ? x - 1 : x; };
  MarkedGraph m;
  m.removed_vertex_ = vertex;
  for (VertexId v = 0; v < graph.vertex_count(); ++v)
    if (v != vertex) m.vertex_origin_.push_back(v);
  m.incidence_.resize(static_cast<std::size_t>(graph.vertex_count() - 1));
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    const Edge& ed = graph.edge(e);
    if (ed.touches(vertex)) {
      const VertexId w = ed.other(vertex);
      m.stubs_.push_back({renumber(w), slot_of(graph, w, e), e});
      continue;
    }
    const EdgeId id = static_cast<EdgeId>(m.edges_.size());
    m.edges_.push_back({renumber(ed.u), renumber(ed.v)});
    m.edge_origin_.push_back(e);
    m.incidence_[static_cast<std::size_t>(renumber(ed.u))].push_back(id);
    m.incidence_[static_cast<std::size_t>(renumber(ed.v))].push_back(id);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Edge-list format

std::optional<GraphFormat> parse_graph_format(std::string_view name) {
  if (name == "edge-list" || name == "edgelist" || name == "el") return GraphFormat::EdgeList;
  if (name == "sparse6" || name == "s6") return GraphFormat::Sparse6;
  return std::nullopt;
}

const char* to_string(GraphFormat format) {
  return format == GraphFormat::EdgeList ? "edge-list" : "sparse6";
}

GraphFormat detect_graph_format(std::string_view text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start == std::string_view::npos) return GraphFormat::EdgeList;
  text.remove_prefix(start);
  if (text.starts_with(':') || text.starts_with(">>sparse6<<")) return GraphFormat::Sparse6;
  return GraphFormat::EdgeList;
}

namespace {

std::vector<long long> read_integers(std::string_view text) {
  std::vector<long long> out;
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
    if (ec != std::errc{} || ptr == text.data() + i) {
      fail(ErrorKind::Parse, "unexpected character '" + std::string(1, ch) + "' in edge list");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return out;
}

CubicGraph parse_edge_list(std::string_view text) {
  const auto values = read_integers(text);
  if (values.size() < 2) fail(ErrorKind::Parse, "edge list needs an \"n m\" header");
  const long long n = values[0], m = values[1];
  if (n < 0 || m < 0 || n > 1'000'000 || m > 3'000'000) fail(ErrorKind::Parse, "edge list header out of range");
  if (values.size() != 2 + 2 * static_cast<std::size_t>(m)) {
    fail(ErrorKind::Parse, "edge list header announces " + std::to_string(m) + " edges but " +
                               std::to_string((values.size() - 2) / 2) + " pairs follow");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    const long long u = values[2 + 2 * i], v = values[3 + 2 * i];
    if (u < 0 || v < 0 || u >= n || v >= n) {
      fail(ErrorKind::Parse, "edge " + std::to_string(i) + " endpoint out of range");
    }
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }
  return CubicGraph(static_cast<int>(n), std::move(edges));
}

std::string write_edge_list(const CubicGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

// Edge ids follow (min, max) endpoint order.
CubicGraph from_sorted_pairs(int n, std::vector<Edge> edges) {
  for (Edge& e : edges)
    if (e.u > e.v) std::swap(e.u, e.v);
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  return CubicGraph(n, std::move(edges));
}

}  // namespace

CubicGraph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::EdgeList) return parse_edge_list(text);
  // sparse6 carries no edge order of its own.
  RawGraph raw = decode_sparse6(text);
  return from_sorted_pairs(raw.vertex_count, std::move(raw.edges));
}

std::string write_graph(const CubicGraph& graph, GraphFormat format) {
  if (format == GraphFormat::EdgeList) return write_edge_list(graph);
  return encode_sparse6(graph.vertex_count(), graph.edges());
}

// ---------------------------------------------------------------------------
// Catalog

namespace {


constexpr std::array<std::array<int, 2>, 10> kPetersenLabels{{
    {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5},
}};

}  // namespace

std::array<int, 2> petersen_label(VertexId v) { return kPetersenLabels.at(static_cast<std::size_t>(v)); }

CubicGraph catalog(std::string_view name, std::span<const int> params) {
  auto no_params = [&] {
    if (!params.empty()) fail(ErrorKind::InvalidArgument, std::string(name) + " takes no parameters");
  };
  std::vector<Edge> edges;
  if (name == "petersen") {
    no_params();
    for (int i = 0; i < 10; ++i)
      for (int j = i + 1; j < 10; ++j) {
        const auto a = kPetersenLabels[static_cast<std::size_t>(i)];
        const auto b = kPetersenLabels[static_cast<std::size_t>(j)];
        if (a[0] != b[0] && a[0] != b[1] && a[1] != b[0] && a[1] != b[1]) edges.push_back({i, j});
      }
    return from_sorted_pairs(10, std::move(edges));
  }
  if (name == "k4") {
    no_params();
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) edges.push_back({i, j});
    return from_sorted_pairs(4, std::move(edges));
  }
  if (name == "q3") {
    no_params();
    for (int v = 0; v < 8; ++v)
      for (int bit = 0; bit < 3; ++bit)
        if (v < (v ^ (1 << bit))) edges.push_back({v, v ^ (1 << bit)});
    return from_sorted_pairs(8, std::move(edges));
  }
  if (name == "k33") {
    no_params();
    for (int i = 0; i < 3; ++i)
      for (int j = 3; j < 6; ++j) edges.push_back({i, j});
    return from_sorted_pairs(6, std::move(edges));
  }
  if (name == "prism") {
    if (params.size() != 1) fail(ErrorKind::InvalidArgument, "prism takes one parameter (cycle length)");
    const int m = params[0];
    if (m < 4 || m % 2 != 0) {
      fail(ErrorKind::InvalidArgument, "prism needs an even cycle length >= 4 (bipartite host), got " + std::to_string(m));
    }
    for (int i = 0; i < m; ++i) {
      edges.push_back({i, (i + 1) % m});
      edges.push_back({m + i, m + (i + 1) % m});
      edges.push_back({i, m + i});
    }
    return from_sorted_pairs(2 * m, std::move(edges));
  }
  fail(ErrorKind::InvalidArgument, "unknown catalog graph '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Structure queries

int component_count(const CubicGraph& g) {
  std::vector<int> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  int components = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    ++components;
    seen[static_cast<std::size_t>(s)] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(x)) {
        const VertexId y = g.edge(e).other(x);
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  return components;
}

bool is_connected(const CubicGraph& g) { return component_count(g) <= 1; }

bool is_bipartite(const CubicGraph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.vertex_count()), -1);
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (side[static_cast<std::size_t>(s)] >= 0) continue;
    side[static_cast<std::size_t>(s)] = 0;
    std::queue<VertexId> q;
    q.push(s);
    while (!q.empty()) {
      const VertexId x = q.front();
      q.pop();
      for (EdgeId e : g.incident(x)) {
        const VertexId y = g.edge(e).other(x);
        if (side[static_cast<std::size_t>(y)] < 0) {
          side[static_cast<std::size_t>(y)] = 1 - side[static_cast<std::size_t>(x)];
          q.push(y);
        } else if (side[static_cast<std::size_t>(y)] == side[static_cast<std::size_t>(x)]) {
          return false;
        }
      }
    }
  }
  return true;
}

int girth(const CubicGraph& g) {
  if (g.has_parallel_edges()) return 2;
  int best = 0;
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> dist(n);
  std::vector<EdgeId> via(n);
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(s)] = 0;
    via[static_cast<std::size_t>(s)] = -1;
    std::queue<VertexId> q;
    q.push(s);
    while (!q.empty()) {
      const VertexId x = q.front();
      q.pop();
      for (EdgeId e : g.incident(x)) {
        if (e == via[static_cast<std::size_t>(x)]) continue;
        const VertexId y = g.edge(e).other(x);
        if (dist[static_cast<std::size_t>(y)] < 0) {
          dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
          via[static_cast<std::size_t>(y)] = e;
          q.push(y);
        } else {
          const int len = dist[static_cast<std::size_t>(x)] + dist[static_cast<std::size_t>(y)] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

}  // namespace normcol
