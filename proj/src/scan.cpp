#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "normcol/solver.hpp"

namespace normcol {

ScanReport scan_no_single_abnormal(std::span<const CubicGraph> graphs, const SearchConfig& cfg, int jobs) {
  if (jobs <= 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  jobs = std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(graphs.size(), 1)));

  std::vector<ScanEntry> entries(graphs.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto run_jobs = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      const CubicGraph& g = graphs[i];
      const auto start = std::chrono::steady_clock::now();
      ScanEntry entry;
      entry.graph_id = static_cast<int>(i);
      entry.n = g.vertex_count();
      entry.m = g.edge_count();
      const ConnectivityReport conn = connectivity_report(g);
      entry.bridgeless = conn.bridgeless;
      entry.cyc4 = conn.cyclically_4_edge_connected;
      entry.result = min_abnormal(g, cfg);
      entry.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      entries[i] = std::move(entry);
    }
  };
  auto worker = [&] {
    try {
      run_jobs();
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = graphs.size();
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
  }
  if (error) std::rethrow_exception(error);

  ScanReport report;
  report.entries = std::move(entries);
  for (const ScanEntry& e : report.entries) {
    if (e.result.status == SolveStatus::Limit) report.limited.push_back(e.graph_id);
    // A witness with exactly one abnormal edge is a counterexample whether or
    // not the search finished.
    if (e.result.witness && e.result.best_count == 1) report.single_abnormal.push_back(e.graph_id);
    if (e.result.status == SolveStatus::Optimal) ++report.minima[e.result.best_count];
  }
  return report;
}

}  // namespace normcol
