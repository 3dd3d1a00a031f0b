// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "normcol/constructions.hpp"
#include "normcol/homomorphism.hpp"
#include "normcol/solver.hpp"
#include "support.hpp"

using namespace normcol;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Solved {
  CubicGraph graph;
  SolveResult result;
  bool bridgeless = false;
};

// Shared by criteria 1, 2, 4, 5: every connected simple cubic graph with n <= 10.
std::vector<Solved> solved_corpus;
double corpus_seconds = 0;

void solve_corpus() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<CubicGraph> graphs;
  for (int n : {4, 6, 8, 10})
    for (const CubicGraph& g : enumerate_cubic(n)) graphs.push_back(g);
  const ScanReport scan = scan_no_single_abnormal(graphs, SearchConfig{}, 0);
  for (const ScanEntry& e : scan.entries) {
    solved_corpus.push_back({graphs[static_cast<std::size_t>(e.graph_id)], e.result, e.bridgeless});
  }
  corpus_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<std::pair<CubicGraph, EdgeColoring>> normal_witnesses() {
  std::vector<std::pair<CubicGraph, EdgeColoring>> out;
  for (const Solved& s : solved_corpus)
    if (s.bridgeless && s.result.best_count == 0 && s.result.witness) out.emplace_back(s.graph, *s.result.witness);
  const CubicGraph p = catalog("petersen");
  const SolveResult r = min_abnormal(p);
  if (r.best_count == 0 && r.witness) out.emplace_back(p, *r.witness);
  return out;
}

Outcome criterion1() {
  std::map<int, int> classes;
  int ones = 0, unsettled = 0;
  for (const Solved& s : solved_corpus) {
    ++classes[s.graph.vertex_count()];
    if (s.result.status != SolveStatus::Optimal) ++unsettled;
    if (s.result.best_count == 1) ++ones;
  }
  const bool counts = classes == std::map<int, int>{{4, 1}, {6, 2}, {8, 5}, {10, 19}};
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu graphs (n=4:%d 6:%d 8:%d 10:%d), minimum 1 in %d, unsettled %d, %.1fs",
                solved_corpus.size(), classes[4], classes[6], classes[8], classes[10], ones, unsettled, corpus_seconds);
  return {counts && ones == 0 && unsettled == 0 && corpus_seconds < 1800, buf};
}

Outcome criterion2() {
  int bridgeless = 0, normal = 0;
  for (const Solved& s : solved_corpus) {
    if (!s.bridgeless) continue;
    ++bridgeless;
    if (s.result.status == SolveStatus::Optimal && s.result.best_count == 0) ++normal;
  }
  const SolveResult p = min_abnormal(catalog("petersen"));
  ++bridgeless;
  if (p.status == SolveStatus::Optimal && p.best_count == 0) ++normal;
  return {normal == bridgeless, std::to_string(normal) + "/" + std::to_string(bridgeless) + " bridgeless graphs have minimum 0"};
}

Outcome criterion3() {
  std::vector<CubicGraph> corpus = testing::multigraph_corpus();
  for (const Solved& s : solved_corpus) corpus.push_back(s.graph);
  for (const char* name : {"k4", "q3", "k33", "petersen"}) corpus.push_back(catalog(name));
  corpus.push_back(k_abnormal_example(2).graph);
  corpus.push_back(k_abnormal_example(3).graph);
  int checked = 0, mismatches = 0;
  for (const CubicGraph& g : corpus) {
    if (g.edge_count() > kOracleMaxEdges) continue;
    const SolveResult fast = min_abnormal(g);
    const SolveResult slow = exhaustive_oracle(g, 5);
    ++checked;
    if (fast.status != slow.status || fast.best_count != slow.best_count) ++mismatches;
  }
  return {mismatches == 0 && checked == static_cast<int>(corpus.size()),
          std::to_string(checked) + " graphs, " + std::to_string(mismatches) + " mismatches"};
}

Outcome criterion4(const std::vector<std::pair<CubicGraph, EdgeColoring>>& witnesses) {
  const CubicGraph p = catalog("petersen");
  int ok = 0;
  for (const auto& [g, c] : witnesses) {
    const PColoring phi = build_p_coloring(g, c, false);
    if (phi.total() && verify_h_coloring(g, p, phi) && pullback(g, phi) == c) ++ok;
  }
  return {!witnesses.empty() && ok == static_cast<int>(witnesses.size()),
          std::to_string(ok) + "/" + std::to_string(witnesses.size()) + " witnesses round-trip"};
}

Outcome criterion5(const std::vector<std::pair<CubicGraph, EdgeColoring>>& witnesses) {
  int bad = 0;
  long long checks = 0;
  for (const auto& [g, c] : witnesses)
    for (const auto& cycle : petersen_cycles()) {
      ++checks;
      for (int d : preimage_degrees(g, c, cycle))
        if (d != 0 && d != 2) {
          ++bad;
          break;
        }
    }
  return {!witnesses.empty() && bad == 0 && petersen_cycles().size() == 57,
          std::to_string(checks) + " (witness, cycle) pairs over " + std::to_string(petersen_cycles().size()) +
              " cycles, " + std::to_string(bad) + " with a degree outside {0,2}"};
}

Outcome criterion6() {
  int ok = 0;
  for (int k = 2; k <= 8; ++k) {
    const ColoredGraph g = k_abnormal_example(k);
    if (g.graph.vertex_count() == 8 + 4 * (k - 2) && is_proper(g.graph, g.coloring, 5) &&
        static_cast<int>(abnormal_set(g.graph, g.coloring).size()) == k) {
      ++ok;
    }
  }
  return {ok == 7, std::to_string(ok) + "/7 values of k"};
}

Outcome criterion7() {
  const CubicGraph p = catalog("petersen");
  int instances = 0, good = 0;
  for (EdgeId e1 = 0; e1 < p.edge_count(); ++e1)
    for (EdgeId e2 = e1 + 1; e2 < p.edge_count(); ++e2) {
      const Edge a = p.edge(e1), b = p.edge(e2);
      if (a.touches(b.u) || a.touches(b.v)) continue;
      for (int t : {2, 3}) {
        const Composite h = cyclic_join_two_edges(p, e1, e2, t);
        ++instances;
        if (h.graph.vertex_count() == 10 * t && connectivity_report(h.graph).cyclically_4_edge_connected) ++good;
      }
    }
  return {instances > 0 && good == instances,
          std::to_string(good) + "/" + std::to_string(instances) + " joins (all independent pairs, t=2,3)"};
}

Outcome criterion8() {
  const CubicGraph p = catalog("petersen");
  std::string detail;
  bool pass = true;
  for (Variant v : {Variant::Disjoint, Variant::Cyclic1, Variant::VertexReplacement, Variant::Cyclic2})
    for (int t : {2, 3}) {
      const DemoReport r = pigeonhole_demo(p, v, t);
      const bool pigeonhole_ok = r.abnormal_h >= r.copies || r.clean_copy_index.has_value();
      const bool ok = r.pass && pigeonhole_ok && r.abnormal_final && *r.abnormal_final <= table_bound(v);
      pass = pass && ok;
      if (!detail.empty()) detail += ", ";
      detail += std::string(to_string(v)) + "/" + std::to_string(t) + "=" +
                (r.abnormal_final ? std::to_string(*r.abnormal_final) : std::string("-")) + "<=" +
                std::to_string(table_bound(v));
    }
  return {pass, detail};
}

Outcome criterion9() {
  int considered = 0, violations = 0, undecided = 0;
  for (const Solved& s : solved_corpus) {
    if (s.graph.vertex_count() > 8 || !s.bridgeless) continue;
    if (s.result.status != SolveStatus::Optimal) {
      ++undecided;
      continue;
    }
    if (s.result.best_count > 2) continue;
    ++considered;
    if (!has_normal_k(s.graph, 5).has_value()) ++violations;
  }
  return {violations == 0 && undecided == 0,
          std::to_string(considered) + " graphs with minimum <= 2, " + std::to_string(violations) + " counterexamples"};
}

}  // namespace

int main() {
  solve_corpus();
  const auto witnesses = normal_witnesses();
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"no graph with minimum exactly one abnormal edge (n <= 10)", criterion1},
      {"bridgeless graphs admit normal 5-edge-colorings", criterion2},
      {"solver agrees with the exhaustive oracle", criterion3},
      {"Petersen-coloring round trip", [&] { return criterion4(witnesses); }},
      {"preimage parity over all Petersen cycles", [&] { return criterion5(witnesses); }},
      {"k-abnormal family for k = 2..8", criterion6},
      {"two-edge cyclic joins are cyclically 4-edge-connected", criterion7},
      {"pigeonhole demo within the 0/5/7/9 bounds", criterion8},
      {"minimum <= 2 implies a normal coloring (n <= 8)", criterion9},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %zu: %s (%s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
