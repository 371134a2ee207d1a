#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>
#include <thread>

#include "rdrd/solver.hpp"

namespace rdrd {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kInfeasible = std::numeric_limits<int>::max() / 4;
constexpr int kLabelOrder[4] = {3, 2, 0, 1};

// State shared by all workers searching one component.
struct Shared {
  explicit Shared(int initial) : incumbent(initial) {}

  std::atomic<int> incumbent;
  std::mutex mutex;
  std::vector<int> best_labels;
  std::vector<std::vector<int>> optima;
  std::atomic<std::int64_t> nodes{0};
  std::atomic<bool> timed_out{false};
  std::atomic<int> frontier_bound{kInfeasible};
  std::optional<Clock::time_point> deadline;

  void lower_frontier(int bound) {
    int cur = frontier_bound.load();
    while (bound < cur && !frontier_bound.compare_exchange_weak(cur, bound)) {
    }
  }
};

// One depth-first worker over a connected graph.
class Search {
public:
  Search(const Graph& g, const std::vector<Vertex>& order, bool restrained, bool enumerate,
         Shared& shared)
      : g_(g),
        order_(order),
        restrained_(restrained),
        enumerate_(enumerate),
        shared_(shared),
        n_(g.order()),
        label_(static_cast<std::size_t>(n_), -1),
        zeros_(static_cast<std::size_t>(n_), 0),
        twos_(static_cast<std::size_t>(n_), 0),
        threes_(static_cast<std::size_t>(n_), 0),
        open_(static_cast<std::size_t>(n_), 0),
        needy_(static_cast<std::size_t>(n_), 0),
        demand_(static_cast<std::size_t>(n_), 0),
        cover_(static_cast<std::size_t>(n_), 0) {
    for (Vertex v = 0; v < n_; ++v) open_[v] = g.degree(v);
  }

  // Assigns order[0..depth) from `prefix`; false if that prefix is inconsistent.
  bool replay(const std::vector<int>& prefix) {
    for (std::size_t d = 0; d < prefix.size(); ++d) {
      assign(order_[d], prefix[d]);
      if (!consistent(order_[d])) return false;
    }
    return true;
  }

  void run(int depth) { dfs(depth); }

  // Prefixes of the first `depth` vertices surviving consistency and bound cuts.
  void collect_prefixes(int depth, int target, std::vector<std::vector<int>>& out,
                        std::vector<int>& bounds) {
    if (depth == target) {
      const int bound = weight_ + completion_lower_bound();
      if (bound < kInfeasible) {
        out.emplace_back(prefix_labels(depth));
        bounds.push_back(bound);
      }
      return;
    }
    const Vertex v = order_[depth];
    for (int label : kLabelOrder) {
      assign(v, label);
      if (consistent(v)) collect_prefixes(depth + 1, target, out, bounds);
      unassign(v, label);
    }
  }

  /**
   * Admissible estimate of the weight still to be placed on unassigned
   * vertices. Every vertex x whose rule is not yet met has a demand d(x): the
   * least total label that any completion puts on the unassigned part of its
   * closed neighborhood. A label on unassigned w serves at most
   * c(w) = |N[w] ∩ needy| demands, so sum_x d(x) / max_{w in N[x]} c(w)
   * never exceeds the completion weight. The restraint rule is ignored.
   */
  int completion_lower_bound() {
    bool any = false;
    for (Vertex x = 0; x < n_; ++x) {
      const int d = demand_of(x);
      demand_[x] = d;
      needy_[x] = d > 0;
      any = any || d > 0;
    }
    if (!any) return 0;
    for (Vertex w = 0; w < n_; ++w) {
      if (label_[w] != -1) continue;
      int c = needy_[w];
      for (Vertex y : g_.neighbors(w)) c += needy_[y];
      cover_[w] = c;
    }
    double total = 0.0;
    for (Vertex x = 0; x < n_; ++x) {
      if (!needy_[x]) continue;
      int best = label_[x] == -1 ? cover_[x] : 0;
      for (Vertex y : g_.neighbors(x))
        if (label_[y] == -1) best = std::max(best, cover_[y]);
      if (best == 0) return kInfeasible;
      total += static_cast<double>(demand_[x]) / best;
    }
    return static_cast<int>(std::ceil(total - 1e-9));
  }

private:
  [[nodiscard]] int demand_of(Vertex x) const {
    const int label = label_[x];
    const bool defended = threes_[x] > 0 || twos_[x] >= 2;
    const bool strong_nbr = threes_[x] + twos_[x] > 0;
    switch (label) {
      case -1:
        if (defended) return 0;
        return strong_nbr ? 1 : 2;
      case 0:
        if (defended) return 0;
        return twos_[x] == 1 ? 2 : 3;
      case 1:
        return strong_nbr ? 0 : 2;
      default:
        return 0;
    }
  }

  std::vector<int> prefix_labels(int depth) const {
    std::vector<int> out;
    for (int d = 0; d < depth; ++d) out.push_back(label_[order_[d]]);
    return out;
  }

  void assign(Vertex v, int label) {
    label_[v] = label;
    weight_ += label;
    for (Vertex w : g_.neighbors(v)) {
      --open_[w];
      if (label == 0) ++zeros_[w];
      if (label == 2) ++twos_[w];
      if (label == 3) ++threes_[w];
    }
  }

  void unassign(Vertex v, int label) {
    label_[v] = -1;
    weight_ -= label;
    for (Vertex w : g_.neighbors(v)) {
      ++open_[w];
      if (label == 0) --zeros_[w];
      if (label == 2) --twos_[w];
      if (label == 3) --threes_[w];
    }
  }

  [[nodiscard]] bool settled_ok(Vertex x) const {
    const int label = label_[x];
    if (label == -1 || open_[x] > 0) return true;
    if (label == 0) {
      if (threes_[x] == 0 && twos_[x] < 2) return false;
      return !restrained_ || zeros_[x] > 0;
    }
    if (label == 1) return threes_[x] + twos_[x] > 0;
    return true;
  }

  [[nodiscard]] bool consistent(Vertex v) const {
    if (!settled_ok(v)) return false;
    for (Vertex w : g_.neighbors(v))
      if (!settled_ok(w)) return false;
    return true;
  }

  bool should_stop() {
    if (shared_.timed_out.load(std::memory_order_relaxed)) return true;
    if (shared_.deadline && (++ticks_ & 1023) == 0 && Clock::now() >= *shared_.deadline) {
      shared_.timed_out = true;
      return true;
    }
    return false;
  }

  bool cut(int bound) const {
    const int incumbent = shared_.incumbent.load(std::memory_order_relaxed);
    return enumerate_ ? bound > incumbent : bound >= incumbent;
  }

  void record_leaf() {
    std::lock_guard lock(shared_.mutex);
    const int incumbent = shared_.incumbent.load();
    if (weight_ < incumbent) {
      shared_.incumbent = weight_;
      shared_.best_labels = label_;
      shared_.optima.clear();
      if (enumerate_) shared_.optima.push_back(label_);
    } else if (enumerate_ && weight_ == incumbent) {
      shared_.optima.push_back(label_);
    }
  }

  void dfs(int depth) {
    ++local_nodes_;
    if (should_stop()) {
      shared_.lower_frontier(weight_ + completion_lower_bound());
      return;
    }
    if (depth == n_) {
      record_leaf();
      return;
    }
    const int bound = weight_ + completion_lower_bound();
    if (cut(bound)) return;
    const Vertex v = order_[depth];
    for (int label : kLabelOrder) {
      if (cut(weight_ + label)) continue;
      assign(v, label);
      if (consistent(v)) dfs(depth + 1);
      unassign(v, label);
      if (shared_.timed_out.load(std::memory_order_relaxed)) {
        shared_.lower_frontier(bound);
        break;
      }
    }
  }

public:
  ~Search() { shared_.nodes += local_nodes_; }
  Search(const Search&) = delete;
  Search& operator=(const Search&) = delete;

private:
  const Graph& g_;
  const std::vector<Vertex>& order_;
  bool restrained_;
  bool enumerate_;
  Shared& shared_;
  int n_;
  std::vector<int> label_;
  std::vector<int> zeros_;
  std::vector<int> twos_;
  std::vector<int> threes_;
  std::vector<int> open_;
  std::vector<char> needy_;
  std::vector<int> demand_;
  std::vector<int> cover_;
  int weight_ = 0;
  std::int64_t local_nodes_ = 0;
  std::uint32_t ticks_ = 0;
};

std::vector<Vertex> branching_order(const Graph& g) {
  std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return order;
}

struct ComponentOutcome {
  int value = 0;
  int lower_bound = 0;
  bool optimal = true;
  std::vector<int> labels;
  std::vector<std::vector<int>> optima;
  std::int64_t nodes = 0;
};

ComponentOutcome solve_connected(const Graph& g, const BnbOptions& options,
                                 std::optional<Clock::time_point> deadline) {
  const int n = g.order();
  const bool restrained = options.variant == Variant::rdrd;
  const auto order = branching_order(g);
  // Labeling every vertex 2 is always feasible.
  Shared shared(2 * n);
  shared.best_labels.assign(static_cast<std::size_t>(n), 2);
  shared.deadline = deadline;

  const int threads = options.enumerate_all ? 1 : std::max(1, options.threads);
  if (threads == 1) {
    Search search(g, order, restrained, options.enumerate_all, shared);
    search.run(0);
  } else {
    int depth = 0;
    for (double tasks = 1; tasks < 16.0 * threads && depth < n; tasks *= 4) ++depth;
    std::vector<std::vector<int>> prefixes;
    std::vector<int> bounds;
    {
      Search seed(g, order, restrained, false, shared);
      seed.collect_prefixes(0, depth, prefixes, bounds);
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next++;
        if (i >= prefixes.size()) return;
        if (shared.timed_out) {
          shared.lower_frontier(bounds[i]);
          continue;
        }
        if (bounds[i] >= shared.incumbent.load()) continue;
        Search search(g, order, restrained, false, shared);
        if (search.replay(prefixes[i])) search.run(depth);
      }
    };
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  ComponentOutcome out;
  out.value = shared.incumbent.load();
  out.labels = shared.best_labels;
  out.optima = std::move(shared.optima);
  out.nodes = shared.nodes.load();
  out.optimal = !shared.timed_out.load();
  out.lower_bound = out.optimal ? out.value : std::min(out.value, shared.frontier_bound.load());
  if (options.enumerate_all && out.optima.empty()) {
    // The all-2 labeling was optimal and never beaten; the search still visits
    // it, so an empty list only happens on timeout.
    out.optima.push_back(out.labels);
  }
  return out;
}

}  // namespace

SolveResult solve_rdrd_bnb(const Graph& g, const BnbOptions& options) {
  const auto start = Clock::now();
  std::optional<Clock::time_point> deadline;
  if (options.timeout_seconds > 0) {
    deadline = start + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(options.timeout_seconds));
  }

  SolveResult result;
  const int n = g.order();
  std::vector<int> labels(static_cast<std::size_t>(n), 0);

  if (options.enumerate_all) {
    auto out = solve_connected(g, options, deadline);
    result.value = out.value;
    result.lower_bound = out.lower_bound;
    result.optimal = out.optimal;
    result.nodes_explored = out.nodes;
    labels = out.labels;
    std::sort(out.optima.begin(), out.optima.end());
    result.optimum_count = static_cast<std::int64_t>(out.optima.size());
    for (const auto& f : out.optima) result.optima.emplace_back(std::span<const int>(f));
  } else {
    for (const auto& comp : components(g)) {
      const Graph sub = g.induced(comp);
      auto out = solve_connected(sub, options, deadline);
      result.value += out.value;
      result.lower_bound += out.lower_bound;
      result.optimal = result.optimal && out.optimal;
      result.nodes_explored += out.nodes;
      for (std::size_t i = 0; i < comp.size(); ++i) labels[comp[i]] = out.labels[i];
    }
  }
  result.certificate = Labeling(std::span<const int>(labels));
  result.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return result;
}

int rdrd_number(const Graph& g, double timeout_seconds) {
  BnbOptions options;
  options.timeout_seconds = timeout_seconds;
  const auto r = solve_rdrd_bnb(g, options);
  return r.value;
}

int drd_number(const Graph& g, double timeout_seconds) {
  BnbOptions options;
  options.variant = Variant::drd;
  options.timeout_seconds = timeout_seconds;
  return solve_rdrd_bnb(g, options).value;
}

}  // namespace rdrd
