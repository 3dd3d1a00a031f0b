#include <algorithm>
#include <set>

#include "normcol/graph.hpp"

namespace normcol {

// ---------------------------------------------------------------------------
// Canonical code: minimum over breadth-first labelings of the rows
// "sorted neighbor labels of the vertex labeled p". Row p is fixed as soon as
// vertex p has been expanded, so partial codes are compared row by row.

namespace {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const CubicGraph& g)
      : g_(g), n_(g.vertex_count()), label_(static_cast<std::size_t>(n_), -1),
        order_(static_cast<std::size_t>(n_), -1), code_(static_cast<std::size_t>(3 * n_)) {}

  std::vector<std::uint8_t> run() {
    for (VertexId root = 0; root < n_; ++root) {
      label_[static_cast<std::size_t>(root)] = 0;
      order_[0] = root;
      next_ = 1;
      expand(0, best_.empty() ? Order::Less : Order::Equal);
      label_[static_cast<std::size_t>(root)] = -1;
    }
    std::vector<std::uint8_t> out;
    out.push_back(static_cast<std::uint8_t>(n_ & 0xff));
    out.push_back(static_cast<std::uint8_t>(n_ >> 8));
    out.insert(out.end(), best_.begin(), best_.end());
    return out;
  }

 private:
  enum class Order { Less, Equal };

  // Returns true when best_ was replaced; the current path then equals best_.
  bool expand(int p, Order state) {
    if (p == n_) {
      if (state == Order::Less) best_ = code_;
      return state == Order::Less;
    }
    if (p >= next_) fail(ErrorKind::InvalidArgument, "canonical_code requires a connected graph");
    const VertexId v = order_[static_cast<std::size_t>(p)];
    std::vector<VertexId> fresh;
    for (EdgeId e : g_.incident(v)) {
      const VertexId w = g_.edge(e).other(v);
      if (label_[static_cast<std::size_t>(w)] < 0 && std::find(fresh.begin(), fresh.end(), w) == fresh.end()) {
        fresh.push_back(w);
      }
    }
    std::sort(fresh.begin(), fresh.end());
    const int base = next_;
    bool improved = false;
    do {
      for (std::size_t i = 0; i < fresh.size(); ++i) {
        label_[static_cast<std::size_t>(fresh[i])] = base + static_cast<int>(i);
        order_[static_cast<std::size_t>(base) + i] = fresh[i];
      }
      next_ = base + static_cast<int>(fresh.size());
      std::array<int, 3> row{};
      for (int i = 0; i < 3; ++i) row[static_cast<std::size_t>(i)] = label_[static_cast<std::size_t>(g_.edge(g_.incident(v)[static_cast<std::size_t>(i)]).other(v))];
      std::sort(row.begin(), row.end());
      Order child = state;
      bool prune = false;
      for (int i = 0; i < 3; ++i) {
        const auto idx = static_cast<std::size_t>(3 * p + i);
        code_[idx] = static_cast<std::uint8_t>(row[static_cast<std::size_t>(i)]);
        if (child == Order::Equal) {
          if (code_[idx] < best_[idx]) child = Order::Less;
          else if (code_[idx] > best_[idx]) prune = true;
          if (prune) break;
        }
      }
      if (!prune && expand(p + 1, child)) {
        improved = true;
        state = Order::Equal;
      }
      for (VertexId w : fresh) label_[static_cast<std::size_t>(w)] = -1;
      next_ = base;
    } while (std::next_permutation(fresh.begin(), fresh.end()));
    return improved;
  }

  const CubicGraph& g_;
  int n_;
  std::vector<int> label_;
  std::vector<VertexId> order_;
  int next_ = 0;
  std::vector<std::uint8_t> code_;
  std::vector<std::uint8_t> best_;
};

}  // namespace

std::vector<std::uint8_t> canonical_code(const CubicGraph& graph) {
  if (graph.vertex_count() == 0) return {0, 0};
  if (graph.vertex_count() > 255) fail(ErrorKind::InvalidArgument, "canonical_code supports at most 255 vertices");
  return CanonicalSearch(graph).run();
}

// ---------------------------------------------------------------------------
// Generation. Graphs are produced in breadth-first labeled form: vertices are
// expanded in label order and each expansion either links to already
// discovered vertices with a larger label or discovers the next unused labels.
// Every connected simple cubic graph has such a labeling.

struct CubicEnumerator::State {
  struct Choice {
    std::vector<VertexId> existing;
    int fresh = 0;
  };
  struct Frame {
    VertexId vertex = 0;
    std::vector<Choice> choices;
    std::size_t next = 0;
    bool applied = false;
    int saved_max_label = 0;
  };

  int n = 0;
  bool deduplicate = true;
  bool started = false;
  std::vector<std::array<VertexId, 3>> adj;
  std::vector<int> deg;
  int max_label = 0;
  std::vector<Frame> stack;
  std::set<std::vector<std::uint8_t>> seen;

  bool adjacent(VertexId a, VertexId b) const {
    for (int i = 0; i < deg[static_cast<std::size_t>(a)]; ++i)
      if (adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] == b) return true;
    return false;
  }

  void link(VertexId a, VertexId b) {
    adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(deg[static_cast<std::size_t>(a)]++)] = b;
    adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(deg[static_cast<std::size_t>(b)]++)] = a;
  }
  void unlink(VertexId a, VertexId b) {
    --deg[static_cast<std::size_t>(a)];
    --deg[static_cast<std::size_t>(b)];
  }

  Frame make_frame(VertexId i) const {
    Frame f;
    f.vertex = i;
    f.saved_max_label = max_label;
    const int need = 3 - deg[static_cast<std::size_t>(i)];
    std::vector<VertexId> candidates;
    for (VertexId j = i + 1; j <= max_label; ++j)
      if (deg[static_cast<std::size_t>(j)] < 3 && !adjacent(i, j)) candidates.push_back(j);
    const int available = n - 1 - max_label;
    for (int fresh = std::min(need, available); fresh >= 0; --fresh) {
      const int pick = need - fresh;
      if (pick > static_cast<int>(candidates.size())) continue;
      std::vector<int> idx(static_cast<std::size_t>(pick));
      for (int t = 0; t < pick; ++t) idx[static_cast<std::size_t>(t)] = t;
      while (true) {
        Choice c;
        c.fresh = fresh;
        for (int t : idx) c.existing.push_back(candidates[static_cast<std::size_t>(t)]);
        f.choices.push_back(std::move(c));
        int t = pick - 1;
        while (t >= 0 && idx[static_cast<std::size_t>(t)] == static_cast<int>(candidates.size()) - pick + t) --t;
        if (t < 0) break;
        ++idx[static_cast<std::size_t>(t)];
        for (int s = t + 1; s < pick; ++s) idx[static_cast<std::size_t>(s)] = idx[static_cast<std::size_t>(s - 1)] + 1;
      }
    }
    return f;
  }

  void apply(Frame& f, const Choice& c) {
    for (VertexId j : c.existing) link(f.vertex, j);
    for (int t = 0; t < c.fresh; ++t) link(f.vertex, ++max_label);
    f.applied = true;
  }

  void undo(Frame& f) {
    const Choice& c = f.choices[f.next - 1];
    for (int t = 0; t < c.fresh; ++t) unlink(f.vertex, f.saved_max_label + 1 + t);
    for (VertexId j : c.existing) unlink(f.vertex, j);
    max_label = f.saved_max_label;
    f.applied = false;
  }

  CubicGraph snapshot() const {
    std::vector<Edge> edges;
    for (VertexId a = 0; a < n; ++a)
      for (int i = 0; i < 3; ++i) {
        const VertexId b = adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)];
        if (a < b) edges.push_back({a, b});
      }
    std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
      return x.u != y.u ? x.u < y.u : x.v < y.v;
    });
    return CubicGraph(n, std::move(edges));
  }

  // Advances the depth-first search to the next complete labeled graph.
  std::optional<CubicGraph> advance() {
    if (!started) {
      started = true;
      if (n < 4 || n % 2 != 0) return std::nullopt;
      stack.push_back(make_frame(0));
    }
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.applied) undo(f);
      if (f.next >= f.choices.size()) {
        stack.pop_back();
        continue;
      }
      apply(f, f.choices[f.next++]);
      const VertexId i = f.vertex;
      if (i == n - 1) return snapshot();
      if (max_label == i) continue;  // everything discovered is saturated: disconnected
      stack.push_back(make_frame(i + 1));
    }
    return std::nullopt;
  }
};

CubicEnumerator::CubicEnumerator(int n, bool deduplicate) : state_(std::make_unique<State>()) {
  if (n > 254) fail(ErrorKind::InvalidArgument, "enumeration supports n <= 254");
  state_->n = n;
  state_->deduplicate = deduplicate;
  state_->adj.assign(static_cast<std::size_t>(std::max(n, 0)), {-1, -1, -1});
  state_->deg.assign(static_cast<std::size_t>(std::max(n, 0)), 0);
}

CubicEnumerator::~CubicEnumerator() = default;
CubicEnumerator::CubicEnumerator(CubicEnumerator&&) noexcept = default;
CubicEnumerator& CubicEnumerator::operator=(CubicEnumerator&&) noexcept = default;

std::optional<CubicGraph> CubicEnumerator::next() {
  while (auto g = state_->advance()) {
    if (!state_->deduplicate) return g;
    if (state_->seen.insert(canonical_code(*g)).second) return g;
  }
  return std::nullopt;
}

std::vector<CubicGraph> enumerate_cubic(int n, bool deduplicate) {
  CubicEnumerator stream(n, deduplicate);
  std::vector<CubicGraph> out;
  while (auto g = stream.next()) out.push_back(std::move(*g));
  return out;
}

}  // namespace normcol
