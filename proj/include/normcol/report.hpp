#ifndef NORMCOL_REPORT_HPP
#define NORMCOL_REPORT_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "normcol/coloring.hpp"
#include "normcol/constructions.hpp"
#include "normcol/graph.hpp"
#include "normcol/solver.hpp"

namespace normcol {

enum class OutputFormat { Tsv, Json };

std::optional<OutputFormat> parse_output_format(std::string_view name);

// Rendered report plus the verdict of the invariants it re-checked.
struct Report {
  std::string text;
  bool verified = false;
};

// "fnv1a64:" followed by 16 hex digits.
std::string input_hash(std::string_view bytes);

// Per-edge palettes and classes. The verdict fails on a coloring with exactly
// one abnormal edge or on a normal coloring whose Petersen image breaks parity.
Report classify_report(const CubicGraph& g, const EdgeColoring& c, OutputFormat out);

// min_abnormal with the witness re-counted independently.
Report solve_report(const CubicGraph& g, const SearchConfig& cfg, OutputFormat out);

Report chi_n_report(const CubicGraph& g, int max_colors, OutputFormat out);

// Enumerates the connected simple cubic graphs on n vertices and solves each.
// Timings are printed only when `timing` is set so that reports stay
// byte-stable.
Report scan_report(int n, const SearchConfig& cfg, int jobs, bool timing, OutputFormat out);

// Builds the Petersen-coloring of a normal 5-edge-coloring (the supplied one,
// or one found by the solver), verifies it and pulls it back.
Report jaeger_report(const CubicGraph& g, const std::optional<EdgeColoring>& c, OutputFormat out);

Report demo_report(const CubicGraph& g, Variant variant, int t, const std::optional<EdgeColoring>& coloring_of_h,
                   const SearchConfig& cfg, OutputFormat out);

// For every bridgeless input whose minimum is at most 2, checks that a normal
// 5-edge-coloring exists. Inputs are identified by position.
Report question31_report(std::span<const CubicGraph> graphs, const SearchConfig& cfg, OutputFormat out);

// SVG drawing on a circle; with a coloring, poor edges are dashed, rich edges
// solid and abnormal edges thick red.
std::string plot_svg(const CubicGraph& g, const std::optional<EdgeColoring>& c);

}  // namespace normcol

#endif  // NORMCOL_REPORT_HPP
