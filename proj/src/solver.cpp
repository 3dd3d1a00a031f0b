#include "normcol/solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

namespace normcol {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Limit: return "limit";
  }
  return "?";
}

namespace {

constexpr int kNoIncumbent = std::numeric_limits<int>::max();

struct Incumbent {
  std::atomic<int> best{kNoIncumbent};
  int floor = 0;  // a coloring at or below this count ends the search
  std::atomic<bool> stop{false};
  std::atomic<bool> limit_hit{false};
  std::atomic<std::int64_t> nodes{0};
  std::optional<std::int64_t> node_limit;
  std::mutex mutex;
  std::vector<Color> colors;
  bool found = false;

  void offer(int count, const std::vector<Color>& candidate) {
    std::lock_guard lock(mutex);
    if (count >= best.load()) return;
    colors = candidate;
    found = true;
    best.store(count);
    if (count <= floor) stop.store(true);
  }

  // Counts one node; false once the limit is exhausted.
  bool charge() {
    const std::int64_t used = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (node_limit && used > *node_limit) {
      limit_hit.store(true);
      stop.store(true);
      return false;
    }
    return true;
  }
};

class Searcher {
 public:
  Searcher(const CubicGraph& g, int k, Incumbent& shared)
      : g_(&g), k_(k), shared_(&shared),
        color_(static_cast<std::size_t>(g.edge_count()), 0),
        pal_(static_cast<std::size_t>(g.vertex_count()), 0),
        filled_(static_cast<std::size_t>(g.vertex_count()), 0),
        forced_(static_cast<std::size_t>(g.vertex_count()), 0),
        remaining_(g.edge_count()) {}

  // Colors the star of vertex 0 with 1,2,3.
  void fix_root_star() {
    if (g_->vertex_count() == 0) return;
    Color c = 1;
    for (EdgeId e : g_->incident(0)) {
      committed_ += assign(e, c);
      refresh_forced(e);
      max_used_ = std::max(max_used_, c);
      ++c;
    }
  }

  int lower_bound() const { return committed_ + forced_count_; }

  bool pruned() const {
    return lower_bound() >= shared_->best.load(std::memory_order_relaxed);
  }

  bool complete() const { return remaining_ == 0; }
  int committed() const { return committed_; }
  const std::vector<Color>& colors() const { return color_; }

  // Uncolored edge that completes the most stars, then sees the most colors,
  // then has the most colored neighbors; ties go to the lowest id.
  EdgeId pick_edge() const {
    EdgeId best = -1;
    int best_key = -1;
    for (EdgeId e = 0; e < g_->edge_count(); ++e) {
      if (color_[static_cast<std::size_t>(e)] != 0) continue;
      const Edge& ed = g_->edge(e);
      const int fu = filled_[static_cast<std::size_t>(ed.u)], fv = filled_[static_cast<std::size_t>(ed.v)];
      const int completes = (fu == 2) + (fv == 2);
      const int seen = palette_size(pal_[static_cast<std::size_t>(ed.u)] | pal_[static_cast<std::size_t>(ed.v)]);
      const int key = completes * 64 + seen * 8 + fu + fv;
      if (key > best_key) {
        best_key = key;
        best = e;
      }
    }
    return best;
  }

  std::vector<Color> candidates(EdgeId e) const {
    const Edge& ed = g_->edge(e);
    const Palette forbid = pal_[static_cast<std::size_t>(ed.u)] | pal_[static_cast<std::size_t>(ed.v)];
    std::vector<Color> out;
    const int top = std::min(k_, max_used_ + 1);
    for (Color c = 1; c <= top; ++c)
      if (!(forbid & color_bit(c))) out.push_back(c);
    return out;
  }

  // Candidates that commit fewer abnormal edges first, then by color.
  std::vector<Color> ordered_candidates(EdgeId e) {
    std::vector<Color> out = candidates(e);
    std::array<int, kMaxColors + 1> cost{};
    for (Color c : out) {
      cost[static_cast<std::size_t>(c)] = assign(e, c);
      unassign(e);
    }
    std::stable_sort(out.begin(), out.end(), [&](Color a, Color b) {
      return cost[static_cast<std::size_t>(a)] < cost[static_cast<std::size_t>(b)];
    });
    return out;
  }

  void push(EdgeId e, Color c, int& delta, int& saved_max) {
    saved_max = max_used_;
    max_used_ = std::max(max_used_, c);
    delta = assign(e, c);
    committed_ += delta;
    refresh_forced(e);
  }

  void pop(EdgeId e, int delta, int saved_max) {
    committed_ -= delta;
    unassign(e);
    max_used_ = saved_max;
    refresh_forced(e);
  }

  void dfs() {
    if (shared_->stop.load(std::memory_order_relaxed)) return;
    if (complete()) {
      shared_->offer(committed_, color_);
      return;
    }
    const EdgeId e = pick_edge();
    for (Color c : ordered_candidates(e)) {
      if (!shared_->charge()) return;
      int delta = 0, saved = 0;
      push(e, c, delta, saved);
      if (!pruned()) dfs();
      pop(e, delta, saved);
      if (shared_->stop.load(std::memory_order_relaxed)) return;
    }
  }

 private:
  bool decidable(EdgeId f) const {
    const Edge& ed = g_->edge(f);
    return filled_[static_cast<std::size_t>(ed.u)] == 3 && filled_[static_cast<std::size_t>(ed.v)] == 3;
  }
  bool abnormal(EdgeId f) const {
    const Edge& ed = g_->edge(f);
    return classify_palettes(pal_[static_cast<std::size_t>(ed.u)], pal_[static_cast<std::size_t>(ed.v)]) ==
           EdgeClass::Abnormal;
  }

  // A vertex with one uncolored edge left is forced when every color that edge
  // could take makes some edge to an already complete neighbor abnormal. Each
  // forced vertex owns a distinct undecided abnormal edge, so the count adds to
  // the committed bound.
  bool is_forced(VertexId y) const {
    const auto uy = static_cast<std::size_t>(y);
    if (filled_[uy] != 2) return false;
    EdgeId last = -1;
    for (EdgeId f : g_->incident(y))
      if (color_[static_cast<std::size_t>(f)] == 0) last = f;
    const VertexId z = g_->edge(last).other(y);
    const Palette all = k_ >= 32 ? ~Palette{0} : (Palette{1} << k_) - 1;
    Palette free = all & ~(pal_[uy] | pal_[static_cast<std::size_t>(z)]);
    while (free) {
      const Palette bit = free & (~free + 1);
      free &= free - 1;
      const Palette full = pal_[uy] | bit;
      bool ok = true;
      for (EdgeId f : g_->incident(y)) {
        if (f == last) continue;
        const VertexId x = g_->edge(f).other(y);
        if (filled_[static_cast<std::size_t>(x)] == 3 &&
            classify_palettes(full, pal_[static_cast<std::size_t>(x)]) == EdgeClass::Abnormal) {
          ok = false;
          break;
        }
      }
      if (ok) return false;
    }
    return true;
  }

  void update_forced(VertexId y) {
    const auto uy = static_cast<std::size_t>(y);
    const char now = is_forced(y) ? 1 : 0;
    forced_count_ += now - forced_[uy];
    forced_[uy] = now;
  }

  // Forced status depends on a vertex and its neighbors, so coloring uv can
  // only change it within distance one of u or v.
  void refresh_forced(EdgeId e) {
    const Edge& ed = g_->edge(e);
    for (VertexId x : {ed.u, ed.v}) {
      update_forced(x);
      for (EdgeId f : g_->incident(x)) update_forced(g_->edge(f).other(x));
    }
  }

  // Colors e and returns how many edges became decided-abnormal. An edge is
  // decided the moment its second endpoint star is completed.
  int assign(EdgeId e, Color c) {
    const Edge& ed = g_->edge(e);
    color_[static_cast<std::size_t>(e)] = c;
    --remaining_;
    for (VertexId x : {ed.u, ed.v}) {
      pal_[static_cast<std::size_t>(x)] |= color_bit(c);
      ++filled_[static_cast<std::size_t>(x)];
    }
    int delta = 0;
    const bool u_done = filled_[static_cast<std::size_t>(ed.u)] == 3;
    const bool v_done = filled_[static_cast<std::size_t>(ed.v)] == 3;
    if (u_done)
      for (EdgeId f : g_->incident(ed.u))
        if (decidable(f) && abnormal(f)) ++delta;
    if (v_done)
      for (EdgeId f : g_->incident(ed.v)) {
        if (u_done && g_->edge(f).touches(ed.u)) continue;  // counted from u
        if (decidable(f) && abnormal(f)) ++delta;
      }
    return delta;
  }

  void unassign(EdgeId e) {
    const Edge& ed = g_->edge(e);
    const Color c = color_[static_cast<std::size_t>(e)];
    color_[static_cast<std::size_t>(e)] = 0;
    ++remaining_;
    for (VertexId x : {ed.u, ed.v}) {
      pal_[static_cast<std::size_t>(x)] &= ~color_bit(c);
      --filled_[static_cast<std::size_t>(x)];
    }
  }

  const CubicGraph* g_;
  int k_;
  Incumbent* shared_;
  std::vector<Color> color_;
  std::vector<Palette> pal_;
  std::vector<int> filled_;
  std::vector<char> forced_;
  int forced_count_ = 0;
  int remaining_ = 0;
  int committed_ = 0;
  int max_used_ = 0;
};

}  // namespace

SolveResult min_abnormal(const CubicGraph& g, const SearchConfig& cfg) {
  if (cfg.colors > kMaxColors) fail(ErrorKind::InvalidArgument, "at most 31 colors are supported");
  if (cfg.abnormal_budget && *cfg.abnormal_budget < 0) fail(ErrorKind::InvalidArgument, "negative abnormal budget");
  if (cfg.node_limit && *cfg.node_limit < 0) fail(ErrorKind::InvalidArgument, "negative node limit");
  SolveResult result;
  if (cfg.colors < 3) return result;  // a cubic star needs three colors

  // Iterative deepening on the abnormal cap: pass `cap` looks for a coloring
  // with at most cap abnormal edges, so the first success is optimal.
  Incumbent shared;
  shared.node_limit = cfg.node_limit;
  Searcher root(g, cfg.colors, shared);
  root.fix_root_star();
  const int top = std::min(cfg.abnormal_budget.value_or(g.edge_count()), g.edge_count());
  for (int cap = 0; cap <= top && !shared.limit_hit.load(); ++cap) {
    shared.best.store(cap + 1);
    shared.floor = cap;
    shared.stop.store(false);
    if (root.complete()) {
      if (root.committed() <= cap) shared.offer(root.committed(), root.colors());
    } else if (cfg.deterministic) {
      Searcher(root).dfs();
    } else {
      const EdgeId e = root.pick_edge();
      std::vector<std::jthread> workers;
      for (Color c : root.candidates(e)) {
        workers.emplace_back([&, c] {
          Searcher branch = root;
          if (!shared.charge()) return;
          int delta = 0, saved = 0;
          branch.push(e, c, delta, saved);
          if (!branch.pruned()) branch.dfs();
        });
      }
    }
    if (shared.best.load() <= cap) break;
  }

  result.nodes_explored = shared.nodes.load();
  const int best = shared.best.load();
  const bool found = shared.found;
  if (found) {
    result.best_count = best;
    result.witness = EdgeColoring(cfg.colors, shared.colors);
  }
  if (shared.limit_hit.load()) {
    result.status = SolveStatus::Limit;
  } else {
    result.status = found ? SolveStatus::Optimal : SolveStatus::Infeasible;
  }
  return result;
}

std::optional<EdgeColoring> has_normal_k(const CubicGraph& g, int k, std::optional<std::int64_t> node_limit) {
  SearchConfig cfg;
  cfg.colors = k;
  cfg.abnormal_budget = 0;
  cfg.node_limit = node_limit;
  SolveResult r = min_abnormal(g, cfg);
  if (r.status == SolveStatus::Limit && !(r.witness && r.best_count == 0)) {
    fail(ErrorKind::Limit, "node limit reached before deciding normal " + std::to_string(k) + "-colorability");
  }
  if (r.witness && r.best_count == 0) return r.witness;
  return std::nullopt;
}

int normal_chromatic_index(const CubicGraph& g, int max_colors) {
  if (max_colors > kMaxColors) fail(ErrorKind::InvalidArgument, "at most 31 colors are supported");
  for (int k = 3; k <= max_colors; ++k)
    if (has_normal_k(g, k)) return k;
  fail(ErrorKind::InvalidArgument, "no normal edge-coloring with at most " + std::to_string(max_colors) +
                                       " colors (scanned k = 3.." + std::to_string(max_colors) + ")" +
                                       (g.has_parallel_edges() ? "; the graph has parallel edges" : ""));
}

}  // namespace normcol
