#include "doctest.h"
#include "json.hpp"
#include "normcol/report.hpp"
#include "support.hpp"

using namespace normcol;
using Json = nlohmann::json;

namespace {

int count_of(const std::string& text, const std::string& needle) {
  int n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

EdgeColoring kneser() { return EdgeColoring(5, {5, 4, 3, 5, 4, 2, 5, 3, 2, 4, 3, 2, 1, 1, 1}); }

}  // namespace

TEST_CASE("input hashes are FNV-1a 64") {
  CHECK(input_hash("") == "fnv1a64:cbf29ce484222325");
  CHECK(input_hash("a") == "fnv1a64:af63dc4c8601ec8c");
  CHECK(input_hash("foobar") == "fnv1a64:85944171f73967e8");
  CHECK(parse_output_format("json") == OutputFormat::Json);
  CHECK(parse_output_format("tsv") == OutputFormat::Tsv);
  CHECK_FALSE(parse_output_format("xml").has_value());
}

TEST_CASE("classify report") {
  const CubicGraph p = catalog("petersen");
  const Report tsv = classify_report(p, kneser(), OutputFormat::Tsv);
  CHECK(tsv.verified);
  CHECK(tsv.text.find("poor: 0, rich: 15, abnormal: 0, normal: true\n") != std::string::npos);
  CHECK(tsv.text.find(input_hash(write_graph(p, GraphFormat::Sparse6))) != std::string::npos);
  CHECK(count_of(tsv.text, "\trich\n") == 15);

  const Report json = classify_report(catalog("q3"), q3_base_coloring(), OutputFormat::Json);
  const Json j = Json::parse(json.text);
  CHECK(j["command"] == "classify");
  CHECK(j["abnormal"] == 2);
  CHECK(j["abnormal_edges"] == Json::array({1, 3}));
  CHECK(j["normal"] == false);
  CHECK(j["verified"] == true);
  CHECK(j["edges"].size() == 12);
}

TEST_CASE("solve report") {
  const CubicGraph bridged = testing::multigraph_corpus()[2];
  const Report tsv = solve_report(bridged, SearchConfig{}, OutputFormat::Tsv);
  CHECK(tsv.verified);
  CHECK(tsv.text.find("status\toptimal\nmin_abnormal\t4\n") != std::string::npos);
  CHECK(tsv.text.find("budget\t-\n") != std::string::npos);

  const Report json = solve_report(catalog("petersen"), SearchConfig{3, std::nullopt, std::nullopt, true}, OutputFormat::Json);
  const Json j = Json::parse(json.text);
  CHECK(j["status"] == "infeasible");
  CHECK(j["min_abnormal"].is_null());
  CHECK(j["witness"].is_null());
  CHECK(json.verified);
}

TEST_CASE("chi_n report") {
  const Report r = chi_n_report(catalog("petersen"), 7, OutputFormat::Tsv);
  CHECK(r.verified);
  CHECK(r.text.find("chi_n\t5\n") != std::string::npos);
  const Json j = Json::parse(chi_n_report(catalog("k33"), 7, OutputFormat::Json).text);
  CHECK(j["chi_n"] == 3);
}

TEST_CASE("scan report is byte-stable") {
  const Report a = scan_report(8, SearchConfig{}, 3, false, OutputFormat::Tsv);
  const Report b = scan_report(8, SearchConfig{}, 1, false, OutputFormat::Tsv);
  CHECK(a.text == b.text);
  CHECK(a.verified);
  CHECK(a.text.find("graphs: 5, minima: {0: 5}, single-abnormal: 0, limited: 0\n") != std::string::npos);
  CHECK(count_of(a.text, "\t-\t:") == 5);

  const Json j = Json::parse(scan_report(6, SearchConfig{}, 2, true, OutputFormat::Json).text);
  CHECK(j["graphs"].size() == 2);
  CHECK(j["graphs"][0].contains("millis"));
  CHECK(j["verified"] == true);

  const Report limited = scan_report(8, SearchConfig{5, std::nullopt, 2, true}, 2, false, OutputFormat::Tsv);
  CHECK_FALSE(limited.verified);
  CHECK(limited.text.find("limited: 5") != std::string::npos);
}

TEST_CASE("jaeger report") {
  const CubicGraph p = catalog("petersen");
  const Report tsv = jaeger_report(p, kneser(), OutputFormat::Tsv);
  CHECK(tsv.verified);
  CHECK(tsv.text.find("pullback_matches\ttrue\n") != std::string::npos);
  CHECK(tsv.text.find("parity_cycles\t57\n") != std::string::npos);
  CHECK(tsv.text.find("parity_violations\t0\n") != std::string::npos);

  const Json j = Json::parse(jaeger_report(catalog("q3"), std::nullopt, OutputFormat::Json).text);
  CHECK(j["source"] == "solver");
  CHECK(j["total"] == true);
  CHECK(j["h_coloring"] == true);
  CHECK(j["verified"] == true);

  CHECK(testing::error_kind([] { jaeger_report(catalog("q3"), q3_base_coloring(), OutputFormat::Tsv); }) ==
        ErrorKind::InvalidArgument);
  // The bridged multigraph has no normal coloring at all.
  const Report none = jaeger_report(testing::multigraph_corpus()[2], std::nullopt, OutputFormat::Tsv);
  CHECK(none.verified);
  CHECK(none.text.find("normal_coloring\t-\n") != std::string::npos);
}

TEST_CASE("demo report") {
  const Report r = demo_report(catalog("petersen"), Variant::Cyclic1, 2, std::nullopt, SearchConfig{}, OutputFormat::Json);
  CHECK(r.verified);
  const Json j = Json::parse(r.text);
  CHECK(j["variant"] == "cyclic1");
  CHECK(j["nV_H"] == 20);
  CHECK(j["bound"] == 5);
  CHECK(j["pass"] == true);
  std::vector<std::string> keys;
  const nlohmann::ordered_json ordered = nlohmann::ordered_json::parse(r.text);
  for (const auto& [key, value] : ordered.items()) keys.push_back(key);
  CHECK(keys == std::vector<std::string>{"command", "inputs", "variant", "t", "nV_H", "abnormal_H", "clean_copy_index",
                                         "abnormal_final", "bound", "pass", "copies", "final_coloring", "verified"});
  const Report vr = demo_report(catalog("petersen"), Variant::VertexReplacement, 2, std::nullopt, SearchConfig{},
                                OutputFormat::Tsv);
  CHECK(vr.text.find("host\tk33\n") != std::string::npos);
  CHECK(vr.text == demo_report(catalog("petersen"), Variant::VertexReplacement, 2, std::nullopt, SearchConfig{},
                               OutputFormat::Tsv)
                       .text);
}

TEST_CASE("question 3.1 report") {
  std::vector<CubicGraph> graphs;
  for (int n : {4, 6, 8})
    for (const CubicGraph& g : enumerate_cubic(n)) graphs.push_back(g);
  graphs.push_back(testing::multigraph_corpus()[2]);
  const Report r = question31_report(graphs, SearchConfig{}, OutputFormat::Tsv);
  CHECK(r.verified);
  CHECK(r.text.find("graphs: 9, bridgeless: 8, min<=2: 8, undecided: 0, violations: 0\n") != std::string::npos);
  const Report limited = question31_report(graphs, SearchConfig{5, std::nullopt, 1, true}, OutputFormat::Json);
  CHECK_FALSE(limited.verified);
  CHECK(Json::parse(limited.text)["summary"]["undecided"] == 8);
}

TEST_CASE("plot") {
  const std::string plain = plot_svg(catalog("k4"), std::nullopt);
  CHECK(plain.rfind("<svg", 0) == 0);
  CHECK(count_of(plain, "<circle") == 4);
  const std::string colored = plot_svg(catalog("q3"), q3_base_coloring());
  CHECK(count_of(colored, "class=\"abnormal\"") == 2);
  CHECK(count_of(colored, "class=\"poor\"") + count_of(colored, "class=\"rich\"") == 10);
  // Parallel edges get distinct curves.
  const std::string theta = plot_svg(testing::multigraph_corpus()[0], std::nullopt);
  CHECK(count_of(theta, "<path") == 3);
}
