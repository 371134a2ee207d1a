#include <bit>
#include <chrono>

#include "rdrd/error.hpp"
#include "rdrd/solver.hpp"

namespace rdrd {

std::string_view problem_name(Problem problem) {
  switch (problem) {
    case Problem::rdrd_min: return "rdrd";
    case Problem::drd_min: return "drd";
    case Problem::dom_min: return "dom";
    case Problem::twopack_max: return "twopack";
  }
  return "unknown";
}

namespace {

using Mask = std::uint64_t;

std::vector<Mask> open_neighborhoods(const Graph& g) {
  std::vector<Mask> out(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex w : g.neighbors(v)) out[v] |= Mask{1} << w;
  return out;
}

class LabelEnumerator {
public:
  LabelEnumerator(const Graph& g, bool restrained, bool enumerate_all)
      : n_(g.order()),
        nbr_(open_neighborhoods(g)),
        restrained_(restrained),
        enumerate_all_(enumerate_all),
        labels_(static_cast<std::size_t>(n_), 0),
        best_(3 * n_ + 1) {}

  void run() { visit(0, 0); }

  SolveResult result() && {
    SolveResult r;
    r.value = best_;
    r.lower_bound = best_;
    r.certificate = Labeling(first_);
    r.nodes_explored = leaves_;
    if (enumerate_all_) {
      r.optimum_count = static_cast<std::int64_t>(optima_.size());
      r.optima = std::move(optima_);
    }
    return r;
  }

private:
  void visit(int v, int weight) {
    if (v == n_) {
      ++leaves_;
      if (!feasible()) return;
      if (weight < best_) {
        best_ = weight;
        first_ = labels_;
        optima_.clear();
      }
      if (enumerate_all_) optima_.emplace_back(std::span<const int>(labels_));
      return;
    }
    for (int label = 0; label <= 3; ++label) {
      const int w = weight + label;
      if (enumerate_all_ ? w > best_ : w >= best_) break;
      labels_[v] = label;
      classes_[label] |= Mask{1} << v;
      visit(v + 1, w);
      classes_[label] &= ~(Mask{1} << v);
    }
    labels_[v] = 0;
  }

  [[nodiscard]] bool feasible() const {
    const Mask strong = classes_[2] | classes_[3];
    for (Mask rest = classes_[1]; rest != 0; rest &= rest - 1) {
      if ((nbr_[std::countr_zero(rest)] & strong) == 0) return false;
    }
    for (Mask rest = classes_[0]; rest != 0; rest &= rest - 1) {
      const Mask nb = nbr_[std::countr_zero(rest)];
      if ((nb & classes_[3]) == 0 && std::popcount(nb & classes_[2]) < 2) return false;
      if (restrained_ && (nb & classes_[0]) == 0) return false;
    }
    return true;
  }

  int n_;
  std::vector<Mask> nbr_;
  bool restrained_;
  bool enumerate_all_;
  std::vector<int> labels_;
  std::vector<int> first_;
  Mask classes_[4] = {0, 0, 0, 0};
  int best_;
  std::int64_t leaves_ = 0;
  std::vector<Labeling> optima_;
};

std::vector<Vertex> mask_to_vertices(Mask m) {
  std::vector<Vertex> out;
  for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

SolveResult solve_set_problem(const Graph& g, Problem problem, bool enumerate_all) {
  const int n = g.order();
  auto closed = open_neighborhoods(g);
  for (Vertex v = 0; v < n; ++v) closed[v] |= Mask{1} << v;
  const Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  const bool minimize = problem == Problem::dom_min;

  SolveResult r;
  r.value = minimize ? n + 1 : -1;
  std::int64_t count = 0;
  Mask best_set = 0;
  for (Mask s = 0;; ++s) {
    ++r.nodes_explored;
    const int size = std::popcount(s);
    bool ok = true;
    if (minimize) {
      if (size <= r.value) {
        Mask covered = 0;
        for (Mask rest = s; rest != 0; rest &= rest - 1) covered |= closed[std::countr_zero(rest)];
        ok = covered == full;
      } else {
        ok = false;
      }
    } else if (size >= r.value) {
      Mask covered = 0;
      for (Mask rest = s; rest != 0 && ok; rest &= rest - 1) {
        const Mask c = closed[std::countr_zero(rest)];
        ok = (covered & c) == 0;
        covered |= c;
      }
    } else {
      ok = false;
    }
    if (ok) {
      const bool better = minimize ? size < r.value : size > r.value;
      if (better) {
        r.value = size;
        best_set = s;
        count = 0;
      }
      ++count;
    }
    if (s == full) break;
  }
  r.lower_bound = r.value;
  r.vertex_set = mask_to_vertices(best_set);
  if (enumerate_all) r.optimum_count = count;
  return r;
}

}  // namespace

SolveResult brute_force(const Graph& g, Problem problem, const BruteForceOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const bool labeling = problem == Problem::rdrd_min || problem == Problem::drd_min;
  const int limit = std::min(labeling ? options.label_limit : options.set_limit, 63);
  if (g.order() > limit) {
    throw LimitError("brute force refuses n=" + std::to_string(g.order()) + " for " +
                     std::string(problem_name(problem)) + " (limit " + std::to_string(limit) + ")");
  }
  SolveResult r;
  if (labeling) {
    LabelEnumerator search(g, problem == Problem::rdrd_min, options.enumerate_all);
    search.run();
    r = std::move(search).result();
  } else {
    r = solve_set_problem(g, problem, options.enumerate_all);
  }
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

int domination_number(const Graph& g) { return brute_force(g, Problem::dom_min).value; }

int two_packing_number(const Graph& g) { return brute_force(g, Problem::twopack_max).value; }

}  // namespace rdrd
