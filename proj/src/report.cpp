#include "normcol/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>

#include "json.hpp"

#include "normcol/homomorphism.hpp"

namespace normcol {

using Json = nlohmann::ordered_json;

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "tsv") return OutputFormat::Tsv;
  if (name == "json") return OutputFormat::Json;
  return std::nullopt;
}

std::string input_hash(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

std::string graph_hash(const CubicGraph& g) { return input_hash(write_graph(g, GraphFormat::Sparse6)); }
std::string coloring_hash(const EdgeColoring& c) { return input_hash(write_coloring(c)); }

std::string sparse6_line(const CubicGraph& g) {
  std::string s = write_graph(g, GraphFormat::Sparse6);
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string join_ints(std::span<const int> xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return xs.empty() ? "-" : out;
}

std::string minima_string(const std::map<int, int>& minima) {
  std::string out = "{";
  bool first = true;
  for (const auto& [count, graphs] : minima) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(count) + ": " + std::to_string(graphs);
  }
  return out + "}";
}

Json colors_json(const EdgeColoring& c) { return Json(std::vector<int>(c.colors().begin(), c.colors().end())); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Re-counts a solver witness with the classifier.
bool witness_consistent(const CubicGraph& g, const SolveResult& r, int k) {
  if (!r.witness) return r.best_count == -1;
  return is_proper(g, *r.witness, k) && static_cast<int>(abnormal_set(g, *r.witness).size()) == r.best_count;
}

}  // namespace

Report classify_report(const CubicGraph& g, const EdgeColoring& c, OutputFormat out) {
  const auto classes = classify_edges(g, c);
  const auto pal = palettes(g, c);
  std::map<EdgeClass, int> count{{EdgeClass::Poor, 0}, {EdgeClass::Rich, 0}, {EdgeClass::Abnormal, 0}};
  std::vector<int> abnormal;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    ++count[classes[static_cast<std::size_t>(e)]];
    if (classes[static_cast<std::size_t>(e)] == EdgeClass::Abnormal) abnormal.push_back(e);
  }
  const bool normal = abnormal.empty();
  // Only meaningful for 5 colors: the Petersen image needs palettes in {1..5}.
  const bool parity_applies = normal && c.k() <= 5;
  const bool parity_ok = !parity_applies || parity_violations(g, c).empty();

  Report r;
  r.verified = abnormal.size() != 1 && parity_ok;
  if (out == OutputFormat::Json) {
    Json j;
    j["command"] = "classify";
    j["inputs"] = {{"graph", graph_hash(g)}, {"coloring", coloring_hash(c)}};
    j["k"] = c.k();
    Json edges = Json::array();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edge(e);
      edges.push_back({{"edge", e},
                       {"u", ed.u},
                       {"v", ed.v},
                       {"color", c[e]},
                       {"palette_u", palette_colors(pal[static_cast<std::size_t>(ed.u)])},
                       {"palette_v", palette_colors(pal[static_cast<std::size_t>(ed.v)])},
                       {"class", to_string(classes[static_cast<std::size_t>(e)])}});
    }
    j["edges"] = std::move(edges);
    j["poor"] = count[EdgeClass::Poor];
    j["rich"] = count[EdgeClass::Rich];
    j["abnormal"] = count[EdgeClass::Abnormal];
    j["abnormal_edges"] = abnormal;
    j["normal"] = normal;
    j["parity_checked"] = parity_applies;
    j["verified"] = r.verified;
    r.text = dump(j);
    return r;
  }
  std::ostringstream s;
  s << "# classify\tgraph=" << graph_hash(g) << "\tcoloring=" << coloring_hash(c) << '\n';
  s << "edge\tu\tv\tcolor\tpalette_u\tpalette_v\tclass\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    s << e << '\t' << ed.u << '\t' << ed.v << '\t' << c[e] << '\t' << palette_to_string(pal[static_cast<std::size_t>(ed.u)])
      << '\t' << palette_to_string(pal[static_cast<std::size_t>(ed.v)]) << '\t' << to_string(classes[static_cast<std::size_t>(e)])
      << '\n';
  }
  s << "poor: " << count[EdgeClass::Poor] << ", rich: " << count[EdgeClass::Rich]
    << ", abnormal: " << count[EdgeClass::Abnormal] << ", normal: " << yes_no(normal) << '\n';
  s << "verified: " << yes_no(r.verified) << '\n';
  r.text = s.str();
  return r;
}

Report solve_report(const CubicGraph& g, const SearchConfig& cfg, OutputFormat out) {
  const SolveResult res = min_abnormal(g, cfg);
  std::vector<int> abnormal;
  if (res.witness) abnormal = abnormal_set(g, *res.witness);
  Report r;
  // A minimum of exactly one would contradict the parity argument.
  r.verified = witness_consistent(g, res, cfg.colors) && !(res.status == SolveStatus::Optimal && res.best_count == 1);
  if (out == OutputFormat::Json) {
    Json j;
    j["command"] = "solve";
    j["inputs"] = {{"graph", graph_hash(g)}};
    j["k"] = cfg.colors;
    j["budget"] = cfg.abnormal_budget ? Json(*cfg.abnormal_budget) : Json(nullptr);
    j["node_limit"] = cfg.node_limit ? Json(*cfg.node_limit) : Json(nullptr);
    j["status"] = to_string(res.status);
    j["min_abnormal"] = res.best_count >= 0 ? Json(res.best_count) : Json(nullptr);
    j["abnormal_edges"] = abnormal;
    j["nodes"] = res.nodes_explored;
    j["witness"] = res.witness ? colors_json(*res.witness) : Json(nullptr);
    j["verified"] = r.verified;
    r.text = dump(j);
    return r;
  }
  std::ostringstream s;
  s << "# solve\tgraph=" << graph_hash(g) << '\n';
  s << "k\t" << cfg.colors << '\n';
  s << "budget\t" << (cfg.abnormal_budget ? std::to_string(*cfg.abnormal_budget) : "-") << '\n';
  s << "status\t" << to_string(res.status) << '\n';
  s << "min_abnormal\t" << (res.best_count >= 0 ? std::to_string(res.best_count) : "-") << '\n';
  s << "abnormal_edges\t" << join_ints(abnormal, ',') << '\n';
  s << "nodes\t" << res.nodes_explored << '\n';
  s << "witness\t" << (res.witness ? join_ints(res.witness->colors(), ' ') : "-") << '\n';
  s << "verified\t" << yes_no(r.verified) << '\n';
  r.text = s.str();
  return r;
}

Report chi_n_report(const CubicGraph& g, int max_colors, OutputFormat out) {
  const int k = normal_chromatic_index(g, max_colors);
  const auto witness = has_normal_k(g, k);
  Report r;
  r.verified = witness && is_proper(g, *witness, k) && is_normal(g, *witness);
  if (out == OutputFormat::Json) {
    Json j;
    j["command"] = "chi-n";
    j["inputs"] = {{"graph", graph_hash(g)}};
    j["max_colors"] = max_colors;
    j["chi_n"] = k;
    j["witness"] = witness ? colors_json(*witness) : Json(nullptr);
    j["verified"] = r.verified;
    r.text = dump(j);
    return r;
  }
  std::ostringstream s;
  s << "# chi-n\tgraph=" << graph_hash(g) << '\n';
  s << "chi_n\t" << k << '\n';
  s << "witness\t" << (witness ? join_ints(witness->colors(), ' ') : "-") << '\n';
  s << "verified\t" << yes_no(r.verified) << '\n';
  r.text = s.str();
  return r;
}

Report scan_report(int n, const SearchConfig& cfg, int jobs, bool timing, OutputFormat out) {
  const std::vector<CubicGraph> graphs = enumerate_cubic(n);
  const ScanReport scan = scan_no_single_abnormal(graphs, cfg, jobs);
  bool consistent = true;
  for (const ScanEntry& e : scan.entries)
    consistent = consistent && witness_consistent(graphs[static_cast<std::size_t>(e.graph_id)], e.result, cfg.colors);
  Report r;
  r.verified = consistent && scan.single_abnormal.empty() && scan.limited.empty();
  if (out == OutputFormat::Json) {
    Json j;
    j["command"] = "scan";
    j["inputs"] = {{"n", n}, {"k", cfg.colors}};
    Json rows = Json::array();
    for (const ScanEntry& e : scan.entries) {
      Json row;
      row["graph_id"] = e.graph_id;
      row["sparse6"] = sparse6_line(graphs[static_cast<std::size_t>(e.graph_id)]);
      row["n"] = e.n;
      row["m"] = e.m;
      row["bridgeless"] = e.bridgeless;
      row["cyc4"] = e.cyc4;
      row["status"] = to_string(e.result.status);
      row["min_abnormal"] = e.result.best_count >= 0 ? Json(e.result.best_count) : Json(nullptr);
      row["nodes"] = e.result.nodes_explored;
      if (timing) row["millis"] = e.millis;
      row["witness"] = e.result.witness ? colors_json(*e.result.witness) : Json(nullptr);
      rows.push_back(std::move(row));
    }
    j["graphs"] = std::move(rows);
    Json minima = Json::object();
    for (const auto& [count, num] : scan.minima) minima[std::to_string(count)] = num;
    j["summary"] = {{"graphs", scan.entries.size()},
                    {"minima", minima},
                    {"single_abnormal", scan.single_abnormal},
                    {"limited", scan.limited}};
    j["verified"] = r.verified;
    r.text = dump(j);
    return r;
  }
  std::ostringstream s;
  s << "graph_id\tn\tm\tbridgeless\tcyc4\tstatus\tmin_abnormal\tnodes\tmillis\tsparse6\n";
  for (const ScanEntry& e : scan.entries) {
    char millis[32] = "-";
    if (timing) std::snprintf(millis, sizeof millis, "%.3f", e.millis);
    s << e.graph_id << '\t' << e.n << '\t' << e.m << '\t' << yes_no(e.bridgeless) << '\t' << yes_no(e.cyc4) << '\t'
      << to_string(e.result.status) << '\t' << (e.result.best_count >= 0 ? std::to_string(e.result.best_count) : "-")
      << '\t' << e.result.nodes_explored << '\t' << millis << '\t' << sparse6_line(graphs[static_cast<std::size_t>(e.graph_id)])
      << '\n';
  }
  s << "graphs: " << scan.entries.size() << ", minima: " << minima_string(scan.minima)
    << ", single-abnormal: " << scan.single_abnormal.size() << ", limited: " << scan.limited.size() << '\n';
  s << "verified: " << yes_no(r.verified) << '\n';
  r.text = s.str();
  return r;
}

Report jaeger_report(const CubicGraph& g, const std::optional<EdgeColoring>& supplied, OutputFormat out) {
  std::optional<EdgeColoring> c = supplied;
  if (c) {
    if (!is_proper(g, *c, 5)) fail(ErrorKind::InvalidArgument, "coloring is not a proper 5-edge-coloring");
    if (!is_normal(g, *c)) fail(ErrorKind::InvalidArgument, "coloring has abnormal edges");
  } else {
    c = has_normal_k(g, 5);
  }

  Report r;
  PColoring phi;
  bool total = false, h_coloring = false, round_trip = false;
  std::size_t violations = 0;
  if (c) {
    phi = build_p_coloring(g, *c, false);
    total = phi.total();
    h_coloring = total && verify_h_coloring(g, canonical_petersen().graph, phi);
    try {
      const EdgeColoring back = pullback(g, phi);
      round_trip = std::equal(back.colors().begin(), back.colors().end(), c->colors().begin(), c->colors().end());
    } catch (const Error&) {
      round_trip = false;
    }
    violations = parity_violations(g, *c).size();
    r.verified = total && h_coloring && round_trip && violations == 0;
  } else {
    // No normal 5-edge-coloring, hence no Petersen-coloring to check.
    r.verified = true;
  }

  if (out == OutputFormat::Json) {
    Json j;
    j["command"] = "jaeger";
    j["inputs"] = {{"graph", graph_hash(g)}, {"coloring", supplied ? Json(coloring_hash(*supplied)) : Json(nullptr)}};
    j["normal_coloring"] = c ? colors_json(*c) : Json(nullptr);
    j["source"] = supplied ? "supplied" : "solver";
    if (c) {
      j["phi"] = phi.phi;
      j["total"] = total;
      j["h_coloring"] = h_coloring;
      j["pullback_matches"] = round_trip;
      j["parity_cycles"] = petersen_cycles().size();
      j["parity_violations"] = violations;
    }
    j["verified"] = r.verified;
    r.text = dump(j);
    return r;
  }
  std::ostringstream s;
  s << "# jaeger\tgraph=" << graph_hash(g);
  if (supplied) s << "\tcoloring=" << coloring_hash(*supplied);
  s << '\n';
  s << "source\t" << (supplied ? "supplied" : "solver") << '\n';
  s << "normal_coloring\t" << (c ? join_ints(c->colors(), ' ') : "-") << '\n';
  if (c) {
    s << "phi\t" << join_ints(phi.phi, ' ') << '\n';
    s << "total\t" << yes_no(total) << '\n';
    s << "h_coloring\t" << yes_no(h_coloring) << '\n';
    s << "pullback_matches\t" << yes_no(round_trip) << '\n';
    s << "parity_cycles\t" << petersen_cycles().size() << '\n';
    s << "parity_violations\t" << violations << '\n';
  }
  s << "verified\t" << yes_no(r.verified) << '\n';
  r.text = s.str();
  return r;
}

Report demo_report(const CubicGraph& g, Variant variant, int t, const std::optional<EdgeColoring>& coloring_of_h,
                   const SearchConfig& cfg, OutputFormat out) {
  const DemoReport d = pigeonhole_demo(g, variant, t, coloring_of_h, cfg);
  Report r;
  const bool no_clean_allowed = !d.clean_copy_index && d.abnormal_h >= d.copies;
  r.verified = d.pass || no_clean_allowed;
  if (out == OutputFormat::Json) {
    Json j;
    j["command"] = "demo";
    j["inputs"] = {{"graph", graph_hash(g)},
                   {"coloring_of_h", coloring_of_h ? Json(coloring_hash(*coloring_of_h)) : Json(nullptr)}};
    j["variant"] = to_string(d.variant);
    j["t"] = d.t;
    j["nV_H"] = d.vertices_h;
    j["abnormal_H"] = d.abnormal_h >= 0 ? Json(d.abnormal_h) : Json(nullptr);
    j["clean_copy_index"] = d.clean_copy_index ? Json(*d.clean_copy_index) : Json(nullptr);
    j["abnormal_final"] = d.abnormal_final ? Json(*d.abnormal_final) : Json(nullptr);
    j["bound"] = d.bound;
    j["pass"] = d.pass;
    j["copies"] = d.copies;
    if (!d.host.empty()) j["host"] = d.host;
    j["final_coloring"] = d.final_coloring ? colors_json(*d.final_coloring) : Json(nullptr);
    j["verified"] = r.verified;
    r.text = dump(j);
    return r;
  }
  std::ostringstream s;
  s << "# demo\tgraph=" << graph_hash(g);
  if (coloring_of_h) s << "\tcoloring_of_h=" << coloring_hash(*coloring_of_h);
  s << '\n';
  s << "variant\t" << to_string(d.variant) << '\n';
  s << "t\t" << d.t << '\n';
  s << "nV_H\t" << d.vertices_h << '\n';
  s << "copies\t" << d.copies << '\n';
  if (!d.host.empty()) s << "host\t" << d.host << '\n';
  s << "abnormal_H\t" << (d.abnormal_h >= 0 ? std::to_string(d.abnormal_h) : "-") << '\n';
  s << "clean_copy_index\t" << (d.clean_copy_index ? std::to_string(*d.clean_copy_index) : "-") << '\n';
  s << "abnormal_final\t" << (d.abnormal_final ? std::to_string(*d.abnormal_final) : "-") << '\n';
  s << "bound\t" << d.bound << '\n';
  s << "pass\t" << yes_no(d.pass) << '\n';
  s << "verified\t" << yes_no(r.verified) << '\n';
  r.text = s.str();
  return r;
}

Report question31_report(std::span<const CubicGraph> graphs, const SearchConfig& cfg, OutputFormat out) {
  struct Row {
    bool bridgeless = false;
    std::string min;  // exact minimum, ">2", or "undecided"
    std::string normal = "-";
    bool violation = false;
  };
  std::vector<Row> rows;
  int small = 0, bridgeless = 0, undecided = 0;
  std::vector<int> violations;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const CubicGraph& g = graphs[i];
    Row row;
    row.bridgeless = connectivity_report(g).bridgeless;
    if (row.bridgeless) {
      ++bridgeless;
      SearchConfig capped = cfg;
      capped.colors = 5;
      capped.abnormal_budget = 2;
      const SolveResult res = min_abnormal(g, capped);
      if (res.status == SolveStatus::Limit) {
        row.min = "undecided";
        ++undecided;
      } else if (res.status == SolveStatus::Infeasible) {
        row.min = ">2";
      } else {
        row.min = std::to_string(res.best_count);
        ++small;
        try {
          const bool normal = has_normal_k(g, 5, cfg.node_limit).has_value();
          row.normal = yes_no(normal);
          row.violation = !normal;
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::Limit) throw;
          row.normal = "undecided";
          ++undecided;
        }
        if (row.violation) violations.push_back(static_cast<int>(i));
      }
    }
    rows.push_back(std::move(row));
  }
  Report r;
  r.verified = violations.empty() && undecided == 0;
  if (out == OutputFormat::Json) {
    Json j;
    j["command"] = "question31";
    Json list = Json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      list.push_back({{"graph_id", i},
                      {"graph", graph_hash(graphs[i])},
                      {"bridgeless", rows[i].bridgeless},
                      {"min_abnormal", rows[i].bridgeless ? Json(rows[i].min) : Json(nullptr)},
                      {"normal_5", rows[i].normal == "-" ? Json(nullptr) : Json(rows[i].normal)},
                      {"violation", rows[i].violation}});
    }
    j["graphs"] = std::move(list);
    j["summary"] = {{"graphs", graphs.size()},
                    {"bridgeless", bridgeless},
                    {"min_at_most_2", small},
                    {"undecided", undecided},
                    {"violations", violations}};
    j["verified"] = r.verified;
    r.text = dump(j);
    return r;
  }
  std::ostringstream s;
  s << "graph_id\tgraph\tbridgeless\tmin_abnormal\tnormal_5\tviolation\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    s << i << '\t' << graph_hash(graphs[i]) << '\t' << yes_no(rows[i].bridgeless) << '\t'
      << (rows[i].bridgeless ? rows[i].min : "-") << '\t' << rows[i].normal << '\t' << yes_no(rows[i].violation) << '\n';
  }
  s << "graphs: " << graphs.size() << ", bridgeless: " << bridgeless << ", min<=2: " << small
    << ", undecided: " << undecided << ", violations: " << violations.size() << '\n';
  s << "verified: " << yes_no(r.verified) << '\n';
  r.text = s.str();
  return r;
}

std::string plot_svg(const CubicGraph& g, const std::optional<EdgeColoring>& c) {
  std::optional<std::vector<EdgeClass>> classes;
  if (c) classes = classify_edges(g, *c);
  constexpr double size = 420.0, center = size / 2, radius = 170.0;
  const int n = g.vertex_count();
  auto pos = [&](VertexId v) {
    const double a = 2 * std::numbers::pi * v / std::max(n, 1) - std::numbers::pi / 2;
    return std::pair{center + radius * std::cos(a), center + radius * std::sin(a)};
  };
  char buf[256];
  std::string s;
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n", size,
                size, size, size);
  s += buf;
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Parallel edges fan out as quadratic curves.
  std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> bundles;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    bundles[{std::min(ed.u, ed.v), std::max(ed.u, ed.v)}].push_back(e);
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const auto& bundle = bundles[{std::min(ed.u, ed.v), std::max(ed.u, ed.v)}];
    const auto idx = static_cast<double>(std::find(bundle.begin(), bundle.end(), e) - bundle.begin());
    const double offset = (idx - (static_cast<double>(bundle.size()) - 1) / 2) * 28.0;
    const auto [x1, y1] = pos(std::min(ed.u, ed.v));
    const auto [x2, y2] = pos(std::max(ed.u, ed.v));
    const double len = std::max(std::hypot(x2 - x1, y2 - y1), 1e-9);
    const double cx = (x1 + x2) / 2 - (y2 - y1) / len * offset * 2;
    const double cy = (y1 + y2) / 2 + (x2 - x1) / len * offset * 2;

    std::string style = "stroke=\"#222222\" stroke-width=\"1.5\"";
    std::string cls = "edge";
    if (classes) {
      switch ((*classes)[static_cast<std::size_t>(e)]) {
        case EdgeClass::Poor:
          style = "stroke=\"#7f7f7f\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"";
          cls = "poor";
          break;
        case EdgeClass::Rich:
          cls = "rich";
          break;
        case EdgeClass::Abnormal:
          style = "stroke=\"#d62728\" stroke-width=\"3.5\"";
          cls = "abnormal";
          break;
      }
    }
    std::snprintf(buf, sizeof buf, "<path class=\"%s\" d=\"M %.2f %.2f Q %.2f %.2f %.2f %.2f\" fill=\"none\" %s/>\n",
                  cls.c_str(), x1, y1, cx, cy, x2, y2, style.c_str());
    s += buf;
    if (c) {
      // Label at the curve midpoint.
      const double mx = 0.25 * x1 + 0.5 * cx + 0.25 * x2, my = 0.25 * y1 + 0.5 * cy + 0.25 * y2;
      std::snprintf(buf, sizeof buf,
                    "<text x=\"%.2f\" y=\"%.2f\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#1f4e99\" "
                    "text-anchor=\"middle\">%d</text>\n",
                    mx, my - 3, (*c)[e]);
      s += buf;
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    const auto [x, y] = pos(v);
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"9\" fill=\"white\" stroke=\"black\"/>\n", x, y);
    s += buf;
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.2f\" y=\"%.2f\" font-family=\"sans-serif\" font-size=\"9\" text-anchor=\"middle\">%d</text>\n",
                  x, y + 3, v);
    s += buf;
  }
  s += "</svg>\n";
  return s;
}

}  // namespace normcol
