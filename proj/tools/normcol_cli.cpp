// normcol: command-line front end over the C API.
//
// Exit status: 0 success, 1 usage or input error, 2 verification failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "normcol/normcol.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitVerification = 2;

struct Failure {
  int code;
  std::string message;
};

struct GraphDeleter {
  void operator()(normcol_graph* g) const { normcol_graph_free(g); }
};
struct ColoringDeleter {
  void operator()(normcol_coloring* c) const { normcol_coloring_free(c); }
};
struct StringDeleter {
  void operator()(char* s) const { normcol_string_free(s); }
};
using Graph = std::unique_ptr<normcol_graph, GraphDeleter>;
using Coloring = std::unique_ptr<normcol_coloring, ColoringDeleter>;
using Text = std::unique_ptr<char, StringDeleter>;

void check(normcol_status s, const std::string& what) {
  if (s == NORMCOL_OK) return;
  const int code = s == NORMCOL_E_VERIFICATION ? kExitVerification : kExitInput;
  throw Failure{code, what + ": " + normcol_last_error()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitInput, "cannot read " + path};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure{kExitInput, "cannot write " + path};
}

normcol_format graph_format(const std::string& name) {
  if (name.empty() || name == "auto") return NORMCOL_FORMAT_AUTO;
  if (name == "edge-list" || name == "edgelist" || name == "el") return NORMCOL_FORMAT_EDGE_LIST;
  if (name == "sparse6" || name == "s6") return NORMCOL_FORMAT_SPARSE6;
  throw Failure{kExitInput, "unknown graph format '" + name + "'"};
}

// PATH, or catalog:NAME[:PARAM].
Graph load_graph(const std::string& spec, const std::string& format) {
  normcol_graph* g = nullptr;
  if (spec.rfind("catalog:", 0) == 0) {
    std::string name = spec.substr(8);
    std::vector<int> params;
    if (const auto colon = name.find(':'); colon != std::string::npos) {
      try {
        params.push_back(std::stoi(name.substr(colon + 1)));
      } catch (const std::exception&) {
        throw Failure{kExitInput, "bad catalog parameter in '" + spec + "'"};
      }
      name.erase(colon);
    }
    check(normcol_graph_catalog(name.c_str(), params.data(), params.size(), &g), spec);
  } else {
    const std::string text = read_file(spec);
    check(normcol_graph_parse(text.data(), text.size(), graph_format(format), &g), spec);
  }
  return Graph(g);
}

Coloring load_coloring(const normcol_graph* g, const std::string& path) {
  const std::string text = read_file(path);
  normcol_coloring* c = nullptr;
  check(normcol_coloring_parse(g, text.data(), text.size(), &c), path);
  return Coloring(c);
}

std::string take(char* s) {
  Text owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

struct Options {
  std::string graph;
  std::string graph2;
  std::vector<std::string> graphs;
  std::string format;
  std::string coloring;
  int k = 5;
  std::optional<int> budget;
  std::optional<long long> node_limit;
  std::optional<int> n;
  int t = 1;
  std::string variant;
  std::string out = "tsv";
  int jobs = 0;
  bool timing = false;
  int max_colors = 7;
  std::vector<int> edges;
  std::optional<int> vertex;
  std::string graph_out = "-";
  std::string write_format = "sparse6";
  std::string coloring_out;
  std::string host_out;
  std::string output = "-";
};

normcol_output output_format(const Options& o) {
  if (o.out == "tsv") return NORMCOL_OUT_TSV;
  if (o.out == "json") return NORMCOL_OUT_JSON;
  throw Failure{kExitInput, "unknown output format '" + o.out + "'"};
}

normcol_search_config search_config(const Options& o) {
  normcol_search_config cfg;
  normcol_search_config_default(&cfg);
  cfg.colors = o.k;
  cfg.abnormal_budget = o.budget.value_or(-1);
  cfg.node_limit = o.node_limit.value_or(-1);
  return cfg;
}

Graph required_graph(const Options& o) {
  if (o.graph.empty()) throw Failure{kExitInput, "--graph is required"};
  return load_graph(o.graph, o.format);
}

// Prints a report and maps its verdict onto the exit status.
int finish(normcol_status s, char*& text, const int& verified, const std::string& what) {
  check(s, what);
  std::cout << take(text);
  return verified ? kExitOk : kExitVerification;
}

int run_classify(const Options& o) {
  const Graph g = required_graph(o);
  if (o.coloring.empty()) throw Failure{kExitInput, "--coloring is required"};
  const Coloring c = load_coloring(g.get(), o.coloring);
  char* text = nullptr;
  int verified = 0;
  return finish(normcol_report_classify(g.get(), c.get(), output_format(o), &text, &verified), text, verified, "classify");
}

int run_solve(const Options& o) {
  const Graph g = required_graph(o);
  const normcol_search_config cfg = search_config(o);
  char* text = nullptr;
  int verified = 0;
  const int code = finish(normcol_report_solve(g.get(), &cfg, output_format(o), &text, &verified), text, verified, "solve");
  if (!o.coloring_out.empty()) {
    normcol_solve_status status;
    int best = -1;
    normcol_coloring* w = nullptr;
    check(normcol_min_abnormal(g.get(), &cfg, &status, &best, nullptr, &w), "solve");
    const Coloring witness(w);
    if (witness) {
      char* s = nullptr;
      check(normcol_coloring_write(witness.get(), &s), "solve");
      write_file(o.coloring_out, take(s));
    }
  }
  return code;
}

int run_chi_n(const Options& o) {
  const Graph g = required_graph(o);
  char* text = nullptr;
  int verified = 0;
  return finish(normcol_report_chi_n(g.get(), o.max_colors, output_format(o), &text, &verified), text, verified, "chi-n");
}

int run_scan(const Options& o) {
  if (!o.n) throw Failure{kExitInput, "--n is required"};
  const normcol_search_config cfg = search_config(o);
  char* text = nullptr;
  int verified = 0;
  return finish(normcol_report_scan(*o.n, &cfg, o.jobs, o.timing, output_format(o), &text, &verified), text, verified,
                "scan");
}

int run_jaeger(const Options& o) {
  const Graph g = required_graph(o);
  Coloring c;
  if (!o.coloring.empty()) c = load_coloring(g.get(), o.coloring);
  char* text = nullptr;
  int verified = 0;
  return finish(normcol_report_jaeger(g.get(), c.get(), output_format(o), &text, &verified), text, verified, "jaeger");
}

void write_outputs(const Options& o, const normcol_graph* g, const normcol_coloring* c) {
  char* s = nullptr;
  check(normcol_graph_write(g, graph_format(o.write_format) == NORMCOL_FORMAT_EDGE_LIST ? NORMCOL_FORMAT_EDGE_LIST
                                                                                          : NORMCOL_FORMAT_SPARSE6,
                            &s),
        "construct");
  write_file(o.graph_out, take(s));
  if (c && !o.coloring_out.empty()) {
    check(normcol_coloring_write(c, &s), "construct");
    write_file(o.coloring_out, take(s));
  }
}

int run_construct(const Options& o) {
  if (o.variant.empty()) throw Failure{kExitInput, "--variant is required"};
  normcol_graph* out = nullptr;
  normcol_coloring* out_c = nullptr;
  if (o.variant == "k_abnormal") {
    check(normcol_k_abnormal_example(o.k, &out, &out_c), "construct");
  } else {
    const Graph g = required_graph(o);
    Graph second;
    if (!o.graph2.empty()) second = load_graph(o.graph2, o.format);
    Coloring c;
    if (!o.coloring.empty()) c = load_coloring(g.get(), o.coloring);
    check(normcol_construct(o.variant.c_str(), g.get(), second.get(), o.edges.data(), o.edges.size(),
                            o.vertex.value_or(-1), o.t, c.get(), &out, &out_c),
          "construct");
  }
  const Graph result(out);
  const Coloring result_c(out_c);
  write_outputs(o, result.get(), result_c.get());
  return kExitOk;
}

int run_demo(const Options& o) {
  if (o.variant.empty()) throw Failure{kExitInput, "--variant is required"};
  const Graph g = required_graph(o);
  Graph host;
  if (!o.host_out.empty() || !o.coloring.empty()) {
    normcol_graph* h = nullptr;
    check(normcol_demo_host(g.get(), o.variant.c_str(), o.t, &h), "demo");
    host.reset(h);
  }
  if (!o.host_out.empty()) {
    char* s = nullptr;
    check(normcol_graph_write(host.get(), NORMCOL_FORMAT_SPARSE6, &s), "demo");
    write_file(o.host_out, take(s));
  }
  Coloring c;
  if (!o.coloring.empty()) c = load_coloring(host.get(), o.coloring);
  const normcol_search_config cfg = search_config(o);
  char* text = nullptr;
  int verified = 0;
  return finish(normcol_report_demo(g.get(), o.variant.c_str(), o.t, c.get(), &cfg, output_format(o), &text, &verified),
                text, verified, "demo");
}

int run_question31(const Options& o) {
  std::vector<Graph> owned;
  if (o.n) {
    normcol_enum* it = nullptr;
    check(normcol_enum_create(*o.n, 1, &it), "question31");
    std::unique_ptr<normcol_enum, void (*)(normcol_enum*)> guard(it, normcol_enum_free);
    while (true) {
      normcol_graph* g = nullptr;
      check(normcol_enum_next(it, &g), "question31");
      if (!g) break;
      owned.emplace_back(g);
    }
  }
  std::vector<std::string> specs = o.graphs;
  if (!o.graph.empty()) specs.insert(specs.begin(), o.graph);
  for (const std::string& spec : specs) owned.push_back(load_graph(spec, o.format));
  if (owned.empty()) throw Failure{kExitInput, "question31 needs --n or --graph"};
  std::vector<const normcol_graph*> list;
  for (const Graph& g : owned) list.push_back(g.get());
  const normcol_search_config cfg = search_config(o);
  char* text = nullptr;
  int verified = 0;
  return finish(normcol_report_question31(list.data(), list.size(), &cfg, output_format(o), &text, &verified), text,
                verified, "question31");
}

int run_plot(const Options& o) {
  const Graph g = required_graph(o);
  Coloring c;
  if (!o.coloring.empty()) c = load_coloring(g.get(), o.coloring);
  char* svg = nullptr;
  check(normcol_plot_svg(g.get(), c.get(), &svg), "plot");
  write_file(o.output, take(svg));
  return kExitOk;
}

void add_graph_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--graph", o.graph, "Graph file, or catalog:NAME[:PARAM]");
  cmd->add_option("--format", o.format, "Input format: edge-list, sparse6 (default: detect)");
}

void add_search_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--k", o.k, "Number of colors")->check(CLI::Range(1, 31));
  cmd->add_option("--budget", o.budget, "Largest abnormal count to search for")->check(CLI::NonNegativeNumber);
  cmd->add_option("--node-limit", o.node_limit, "Search node limit")->check(CLI::NonNegativeNumber);
}

void add_out_option(CLI::App* cmd, Options& o) {
  cmd->add_option("--out", o.out, "Report format")->check(CLI::IsMember({"tsv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal edge-colorings of cubic graphs"};
  app.require_subcommand(1);
  Options o;

  auto* classify = app.add_subcommand("classify", "Classify the edges of a colored graph");
  add_graph_options(classify, o);
  classify->add_option("--coloring", o.coloring, "Coloring file")->required();
  add_out_option(classify, o);

  auto* solve = app.add_subcommand("solve", "Minimum number of abnormal edges");
  add_graph_options(solve, o);
  add_search_options(solve, o);
  solve->add_option("--coloring-out", o.coloring_out, "Write the witness coloring here");
  add_out_option(solve, o);

  auto* chi = app.add_subcommand("chi-n", "Normal chromatic index");
  add_graph_options(chi, o);
  chi->add_option("--max-colors", o.max_colors, "Largest k to try")->check(CLI::Range(3, 31));
  add_out_option(chi, o);

  auto* scan = app.add_subcommand("scan", "Solve every connected simple cubic graph on n vertices");
  scan->add_option("--n", o.n, "Vertex count")->required()->check(CLI::Range(0, 254));
  add_search_options(scan, o);
  scan->add_option("--jobs", o.jobs, "Worker threads (default: all cores)")->check(CLI::NonNegativeNumber);
  scan->add_flag("--timing", o.timing, "Include per-graph wall times");
  add_out_option(scan, o);

  auto* jaeger = app.add_subcommand("jaeger", "Petersen-coloring round trip of a normal coloring");
  add_graph_options(jaeger, o);
  jaeger->add_option("--coloring", o.coloring, "Normal 5-edge-coloring (default: found by the solver)");
  add_out_option(jaeger, o);

  auto* cons = app.add_subcommand("construct", "Build a composite graph");
  add_graph_options(cons, o);
  cons->add_option("--variant", o.variant,
                   "disjoint, cyclic1, cyclic2, vertex_replacement, two_cut, k4_gadget or k_abnormal")
      ->required();
  cons->add_option("--graph2", o.graph2, "Host graph (vertex_replacement) or second graph (two_cut)");
  cons->add_option("--edge", o.edges, "Designated edge id (repeatable)");
  cons->add_option("--vertex", o.vertex, "Designated vertex id");
  cons->add_option("--t", o.t, "Copy count")->check(CLI::PositiveNumber);
  cons->add_option("--k", o.k, "Abnormal edge count for k_abnormal")->check(CLI::NonNegativeNumber);
  cons->add_option("--coloring", o.coloring, "Coloring of the source graph (k4_gadget)");
  cons->add_option("--graph-out", o.graph_out, "Output graph file (default: stdout)");
  cons->add_option("--write-format", o.write_format, "Output graph format")->check(CLI::IsMember({"edge-list", "sparse6"}));
  cons->add_option("--coloring-out", o.coloring_out, "Output coloring file");

  auto* demo = app.add_subcommand("demo", "Pigeonhole demonstration on t copies");
  add_graph_options(demo, o);
  demo->add_option("--variant", o.variant, "disjoint, cyclic1, cyclic2 or vertex_replacement")->required();
  demo->add_option("--t", o.t, "Copy count")->check(CLI::PositiveNumber);
  demo->add_option("--coloring", o.coloring, "Coloring of the composite graph (default: solver)");
  demo->add_option("--host-out", o.host_out, "Write the composite graph here");
  add_search_options(demo, o);
  add_out_option(demo, o);

  auto* q31 = app.add_subcommand("question31", "Do bridgeless graphs with minimum at most 2 have normal colorings?");
  q31->add_option("--n", o.n, "Enumerate connected simple cubic graphs on n vertices")->check(CLI::Range(0, 254));
  add_graph_options(q31, o);
  q31->add_option("--graphs", o.graphs, "Further graph files");
  q31->add_option("--node-limit", o.node_limit, "Search node limit")->check(CLI::NonNegativeNumber);
  add_out_option(q31, o);

  auto* plot = app.add_subcommand("plot", "Draw a graph as SVG");
  add_graph_options(plot, o);
  plot->add_option("--coloring", o.coloring, "Coloring used to style the edges");
  plot->add_option("--output", o.output, "SVG file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*classify) return run_classify(o);
    if (*solve) return run_solve(o);
    if (*chi) return run_chi_n(o);
    if (*scan) return run_scan(o);
    if (*jaeger) return run_jaeger(o);
    if (*cons) return run_construct(o);
    if (*demo) return run_demo(o);
    if (*q31) return run_question31(o);
    if (*plot) return run_plot(o);
  } catch (const Failure& f) {
    std::cerr << "normcol: " << f.message << '\n';
    return f.code;
  }
  return kExitInput;
}
