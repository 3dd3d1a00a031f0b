#include "normcol/normcol.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "normcol/constructions.hpp"
#include "normcol/homomorphism.hpp"
#include "normcol/report.hpp"

struct normcol_graph {
  normcol::CubicGraph g;
};
struct normcol_coloring {
  normcol::EdgeColoring c;
};
struct normcol_enum {
  normcol::CubicEnumerator it;
};

namespace {

using namespace normcol;

thread_local std::string g_last_error;

normcol_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return NORMCOL_E_PARSE;
    case ErrorKind::Degree: return NORMCOL_E_DEGREE;
    case ErrorKind::Loop: return NORMCOL_E_LOOP;
    case ErrorKind::InvalidArgument: return NORMCOL_E_INVALID_ARGUMENT;
    case ErrorKind::Verification: return NORMCOL_E_VERIFICATION;
    case ErrorKind::Limit: return NORMCOL_E_LIMIT;
  }
  return NORMCOL_E_INTERNAL;
}

template <class F>
normcol_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return NORMCOL_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return NORMCOL_E_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return NORMCOL_E_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return NORMCOL_E_INTERNAL;
  }
}

void need(const void* p, const char* name) {
  if (!p) fail(ErrorKind::InvalidArgument, std::string(name) + " must not be NULL");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string_view text_of(const char* text, size_t length) {
  need(text, "text");
  return {text, length};
}

GraphFormat format_of(normcol_format f, std::string_view text) {
  switch (f) {
    case NORMCOL_FORMAT_EDGE_LIST: return GraphFormat::EdgeList;
    case NORMCOL_FORMAT_SPARSE6: return GraphFormat::Sparse6;
    case NORMCOL_FORMAT_AUTO: return detect_graph_format(text);
  }
  fail(ErrorKind::InvalidArgument, "unknown graph format");
}

OutputFormat output_of(normcol_output o) {
  if (o == NORMCOL_OUT_TSV) return OutputFormat::Tsv;
  if (o == NORMCOL_OUT_JSON) return OutputFormat::Json;
  fail(ErrorKind::InvalidArgument, "unknown output format");
}

SearchConfig config_of(const normcol_search_config* cfg) {
  SearchConfig out;
  if (!cfg) return out;
  out.colors = cfg->colors;
  if (cfg->abnormal_budget >= 0) out.abnormal_budget = cfg->abnormal_budget;
  if (cfg->node_limit >= 0) out.node_limit = cfg->node_limit;
  out.deterministic = cfg->deterministic != 0;
  return out;
}

Variant variant_of(const char* name) {
  need(name, "variant");
  const auto v = parse_variant(name);
  if (!v) fail(ErrorKind::InvalidArgument, std::string("unknown variant '") + name + "'");
  return *v;
}

normcol_coloring* wrap(EdgeColoring c) { return new normcol_coloring{std::move(c)}; }
normcol_graph* wrap(CubicGraph g) { return new normcol_graph{std::move(g)}; }

normcol_solve_status solve_status_of(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return NORMCOL_SOLVE_OPTIMAL;
    case SolveStatus::Infeasible: return NORMCOL_SOLVE_INFEASIBLE;
    case SolveStatus::Limit: return NORMCOL_SOLVE_LIMIT;
  }
  return NORMCOL_SOLVE_INFEASIBLE;
}

PColoring phi_of(const int* phi, size_t count) {
  need(phi, "phi");
  PColoring out;
  out.phi.assign(phi, phi + count);
  return out;
}

void emit(const Report& r, char** text, int* verified) {
  need(text, "text");
  *text = copy_string(r.text);
  if (verified) *verified = r.verified ? 1 : 0;
}

}  // namespace

extern "C" {

const char* normcol_last_error(void) { return g_last_error.c_str(); }

const char* normcol_status_name(normcol_status status) {
  switch (status) {
    case NORMCOL_OK: return "ok";
    case NORMCOL_E_PARSE: return "parse error";
    case NORMCOL_E_DEGREE: return "degree error";
    case NORMCOL_E_LOOP: return "loop error";
    case NORMCOL_E_INVALID_ARGUMENT: return "invalid argument";
    case NORMCOL_E_VERIFICATION: return "verification failure";
    case NORMCOL_E_LIMIT: return "limit reached";
    case NORMCOL_E_IO: return "i/o error";
    case NORMCOL_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void normcol_string_free(char* s) { std::free(s); }

normcol_status normcol_graph_parse(const char* text, size_t length, normcol_format format, normcol_graph** out) {
  return guarded([&] {
    need(out, "out");
    const auto view = text_of(text, length);
    *out = wrap(parse_graph(view, format_of(format, view)));
  });
}

normcol_status normcol_graph_catalog(const char* name, const int* params, size_t param_count, normcol_graph** out) {
  return guarded([&] {
    need(name, "name");
    need(out, "out");
    if (param_count) need(params, "params");
    *out = wrap(catalog(name, std::span<const int>(params, param_count)));
  });
}

normcol_status normcol_graph_from_edges(int vertex_count, const int* endpoints, size_t edge_count, normcol_graph** out) {
  return guarded([&] {
    need(out, "out");
    if (edge_count) need(endpoints, "endpoints");
    std::vector<Edge> edges;
    for (size_t i = 0; i < edge_count; ++i) edges.push_back({endpoints[2 * i], endpoints[2 * i + 1]});
    *out = wrap(CubicGraph(vertex_count, std::move(edges)));
  });
}

void normcol_graph_free(normcol_graph* g) { delete g; }

int normcol_graph_vertex_count(const normcol_graph* g) { return g ? g->g.vertex_count() : -1; }
int normcol_graph_edge_count(const normcol_graph* g) { return g ? g->g.edge_count() : -1; }

normcol_status normcol_graph_edge(const normcol_graph* g, int edge, int* u, int* v) {
  return guarded([&] {
    need(g, "graph");
    if (edge < 0 || edge >= g->g.edge_count()) fail(ErrorKind::InvalidArgument, "edge id out of range");
    if (u) *u = g->g.edge(edge).u;
    if (v) *v = g->g.edge(edge).v;
  });
}

normcol_status normcol_graph_write(const normcol_graph* g, normcol_format format, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    const GraphFormat f = format == NORMCOL_FORMAT_EDGE_LIST ? GraphFormat::EdgeList : GraphFormat::Sparse6;
    *out = copy_string(write_graph(g->g, f));
  });
}

normcol_status normcol_graph_connectivity(const normcol_graph* g, int* bridgeless, int* edge_connectivity_capped_at_4,
                                          int* cyclically_4_edge_connected) {
  return guarded([&] {
    need(g, "graph");
    const ConnectivityReport r = connectivity_report(g->g);
    if (bridgeless) *bridgeless = r.bridgeless;
    if (edge_connectivity_capped_at_4) *edge_connectivity_capped_at_4 = r.edge_connectivity_capped_at_4;
    if (cyclically_4_edge_connected) *cyclically_4_edge_connected = r.cyclically_4_edge_connected;
  });
}

normcol_status normcol_enum_create(int n, int deduplicate, normcol_enum** out) {
  return guarded([&] {
    need(out, "out");
    *out = new normcol_enum{CubicEnumerator(n, deduplicate != 0)};
  });
}

normcol_status normcol_enum_next(normcol_enum* it, normcol_graph** out) {
  return guarded([&] {
    need(it, "enumerator");
    need(out, "out");
    auto g = it->it.next();
    *out = g ? wrap(std::move(*g)) : nullptr;
  });
}

void normcol_enum_free(normcol_enum* it) { delete it; }

normcol_status normcol_coloring_create(int k, const int* colors, size_t edge_count, normcol_coloring** out) {
  return guarded([&] {
    need(out, "out");
    if (edge_count) need(colors, "colors");
    *out = wrap(EdgeColoring(k, std::vector<Color>(colors, colors + edge_count)));
  });
}

normcol_status normcol_coloring_parse(const normcol_graph* g, const char* text, size_t length, normcol_coloring** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = wrap(parse_coloring(text_of(text, length), g->g));
  });
}

void normcol_coloring_free(normcol_coloring* c) { delete c; }

int normcol_coloring_k(const normcol_coloring* c) { return c ? c->c.k() : -1; }
int normcol_coloring_size(const normcol_coloring* c) { return c ? c->c.size() : -1; }

normcol_status normcol_coloring_colors(const normcol_coloring* c, int* out, size_t capacity) {
  return guarded([&] {
    need(c, "coloring");
    if (capacity) need(out, "out");
    const auto colors = c->c.colors();
    for (size_t i = 0; i < capacity && i < colors.size(); ++i) out[i] = colors[i];
  });
}

normcol_status normcol_coloring_write(const normcol_coloring* c, char** out) {
  return guarded([&] {
    need(c, "coloring");
    need(out, "out");
    *out = copy_string(write_coloring(c->c));
  });
}

normcol_status normcol_classify(const normcol_graph* g, const normcol_coloring* c, int* classes, int* abnormal_count) {
  return guarded([&] {
    need(g, "graph");
    need(c, "coloring");
    const auto cls = classify_edges(g->g, c->c);
    int abnormal = 0;
    for (size_t e = 0; e < cls.size(); ++e) {
      if (classes) classes[e] = static_cast<int>(cls[e]);
      abnormal += cls[e] == EdgeClass::Abnormal;
    }
    if (abnormal_count) *abnormal_count = abnormal;
  });
}

void normcol_search_config_default(normcol_search_config* cfg) {
  if (!cfg) return;
  cfg->colors = 5;
  cfg->abnormal_budget = -1;
  cfg->node_limit = -1;
  cfg->deterministic = 1;
}

normcol_status normcol_min_abnormal(const normcol_graph* g, const normcol_search_config* cfg,
                                    normcol_solve_status* status, int* best, long long* nodes,
                                    normcol_coloring** witness) {
  return guarded([&] {
    need(g, "graph");
    SolveResult r = min_abnormal(g->g, config_of(cfg));
    if (status) *status = solve_status_of(r.status);
    if (best) *best = r.best_count;
    if (nodes) *nodes = r.nodes_explored;
    if (witness) *witness = r.witness ? wrap(std::move(*r.witness)) : nullptr;
  });
}

normcol_status normcol_exhaustive_oracle(const normcol_graph* g, int k, normcol_solve_status* status, int* best,
                                         normcol_coloring** witness) {
  return guarded([&] {
    need(g, "graph");
    SolveResult r = exhaustive_oracle(g->g, k);
    if (status) *status = solve_status_of(r.status);
    if (best) *best = r.best_count;
    if (witness) *witness = r.witness ? wrap(std::move(*r.witness)) : nullptr;
  });
}

normcol_status normcol_has_normal_k(const normcol_graph* g, int k, long long node_limit, int* exists,
                                    normcol_coloring** witness) {
  return guarded([&] {
    need(g, "graph");
    std::optional<std::int64_t> limit;
    if (node_limit >= 0) limit = node_limit;
    auto found = has_normal_k(g->g, k, limit);
    if (exists) *exists = found.has_value();
    if (witness) *witness = found ? wrap(std::move(*found)) : nullptr;
  });
}

normcol_status normcol_chi_n(const normcol_graph* g, int max_colors, int* out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = normal_chromatic_index(g->g, max_colors);
  });
}

normcol_status normcol_p_coloring(const normcol_graph* g, const normcol_coloring* c, int allow_abnormal, int* phi) {
  return guarded([&] {
    need(g, "graph");
    need(c, "coloring");
    need(phi, "phi");
    const PColoring p = build_p_coloring(g->g, c->c, allow_abnormal != 0);
    std::copy(p.phi.begin(), p.phi.end(), phi);
  });
}

normcol_status normcol_verify_p_coloring(const normcol_graph* g, const int* phi, size_t edge_count, int* ok) {
  return guarded([&] {
    need(g, "graph");
    need(ok, "ok");
    *ok = verify_h_coloring(g->g, canonical_petersen().graph, phi_of(phi, edge_count));
  });
}

normcol_status normcol_pullback(const normcol_graph* g, const int* phi, size_t edge_count, normcol_coloring** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = wrap(pullback(g->g, phi_of(phi, edge_count)));
  });
}

normcol_status normcol_preimage_degrees(const normcol_graph* g, const normcol_coloring* c, const int* petersen_edges,
                                        size_t count, int* degrees) {
  return guarded([&] {
    need(g, "graph");
    need(c, "coloring");
    need(degrees, "degrees");
    if (count) need(petersen_edges, "petersen_edges");
    const auto d = preimage_degrees(g->g, c->c, std::span<const EdgeId>(petersen_edges, count));
    std::copy(d.begin(), d.end(), degrees);
  });
}

normcol_status normcol_construct(const char* variant, const normcol_graph* source, const normcol_graph* second,
                                 const int* edges, size_t edge_count, int vertex, int t,
                                 const normcol_coloring* coloring, normcol_graph** out_graph,
                                 normcol_coloring** out_coloring) {
  return guarded([&] {
    need(source, "source");
    need(out_graph, "out_graph");
    ConstructionRecipe r;
    r.variant = variant_of(variant);
    r.source = source->g;
    if (second) r.second = second->g;
    if (edge_count) {
      need(edges, "edges");
      r.edges.assign(edges, edges + edge_count);
    }
    if (vertex >= 0) r.vertex = vertex;
    r.t = t;
    if (coloring) r.coloring = coloring->c;
    ConstructionOutput out = construct(r);
    *out_graph = wrap(std::move(out.graph));
    if (out_coloring) *out_coloring = out.coloring ? wrap(std::move(*out.coloring)) : nullptr;
  });
}

normcol_status normcol_k_abnormal_example(int k, normcol_graph** out_graph, normcol_coloring** out_coloring) {
  return guarded([&] {
    need(out_graph, "out_graph");
    ColoredGraph x = k_abnormal_example(k);
    *out_graph = wrap(std::move(x.graph));
    if (out_coloring) *out_coloring = wrap(std::move(x.coloring));
  });
}

normcol_status normcol_demo_host(const normcol_graph* g, const char* variant, int t, normcol_graph** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = wrap(demo_host_graph(g->g, variant_of(variant), t).graph);
  });
}

normcol_status normcol_report_classify(const normcol_graph* g, const normcol_coloring* c, normcol_output out,
                                       char** text, int* verified) {
  return guarded([&] {
    need(g, "graph");
    need(c, "coloring");
    emit(classify_report(g->g, c->c, output_of(out)), text, verified);
  });
}

normcol_status normcol_report_solve(const normcol_graph* g, const normcol_search_config* cfg, normcol_output out,
                                    char** text, int* verified) {
  return guarded([&] {
    need(g, "graph");
    emit(solve_report(g->g, config_of(cfg), output_of(out)), text, verified);
  });
}

normcol_status normcol_report_chi_n(const normcol_graph* g, int max_colors, normcol_output out, char** text,
                                    int* verified) {
  return guarded([&] {
    need(g, "graph");
    emit(chi_n_report(g->g, max_colors, output_of(out)), text, verified);
  });
}

normcol_status normcol_report_scan(int n, const normcol_search_config* cfg, int jobs, int timing, normcol_output out,
                                   char** text, int* verified) {
  return guarded([&] { emit(scan_report(n, config_of(cfg), jobs, timing != 0, output_of(out)), text, verified); });
}

normcol_status normcol_report_jaeger(const normcol_graph* g, const normcol_coloring* c, normcol_output out,
                                     char** text, int* verified) {
  return guarded([&] {
    need(g, "graph");
    std::optional<EdgeColoring> col;
    if (c) col = c->c;
    emit(jaeger_report(g->g, col, output_of(out)), text, verified);
  });
}

normcol_status normcol_report_demo(const normcol_graph* g, const char* variant, int t,
                                   const normcol_coloring* coloring_of_h, const normcol_search_config* cfg,
                                   normcol_output out, char** text, int* verified) {
  return guarded([&] {
    need(g, "graph");
    std::optional<EdgeColoring> col;
    if (coloring_of_h) col = coloring_of_h->c;
    emit(demo_report(g->g, variant_of(variant), t, col, config_of(cfg), output_of(out)), text, verified);
  });
}

normcol_status normcol_report_question31(const normcol_graph* const* graphs, size_t count,
                                         const normcol_search_config* cfg, normcol_output out, char** text,
                                         int* verified) {
  return guarded([&] {
    if (count) need(graphs, "graphs");
    std::vector<CubicGraph> list;
    for (size_t i = 0; i < count; ++i) {
      need(graphs[i], "graph");
      list.push_back(graphs[i]->g);
    }
    emit(question31_report(list, config_of(cfg), output_of(out)), text, verified);
  });
}

normcol_status normcol_plot_svg(const normcol_graph* g, const normcol_coloring* c, char** svg) {
  return guarded([&] {
    need(g, "graph");
    need(svg, "svg");
    std::optional<EdgeColoring> col;
    if (c) col = c->c;
    *svg = copy_string(plot_svg(g->g, col));
  });
}

}  // extern "C"
