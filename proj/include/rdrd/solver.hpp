#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "rdrd/graph.hpp"
#include "rdrd/labeling.hpp"

namespace rdrd {

enum class Problem { rdrd_min, drd_min, dom_min, twopack_max };

std::string_view problem_name(Problem problem);

struct SolveResult {
  /// Optimum (or best incumbent when `optimal` is false). For twopack_max this
  /// is the packing size, for dom_min the dominating-set size.
  int value = 0;
  /// Proven lower bound for minimization problems; equals `value` when optimal.
  int lower_bound = 0;
  bool optimal = true;
  /// Labeling problems: one optimal labeling.
  Labeling certificate;
  /// Set problems: one optimal vertex set.
  std::vector<Vertex> vertex_set;
  std::int64_t nodes_explored = 0;
  double elapsed_ms = 0.0;
  /// Enumeration mode only.
  std::optional<std::int64_t> optimum_count;
  /// Enumeration mode, labeling problems: every optimum in lexicographic order.
  std::vector<Labeling> optima;
};

struct BruteForceOptions {
  bool enumerate_all = false;
  /// Refuse labeling problems above this order (4^n search).
  int label_limit = 13;
  /// Refuse set problems above this order (2^n search).
  int set_limit = 22;
};

/**
 * Exhaustive oracle. Labelings are visited in lexicographic order (vertex 0
 * most significant) and only partial weight is used to skip subtrees, so the
 * returned certificate is the lexicographically first optimum.
 */
SolveResult brute_force(const Graph& g, Problem problem, const BruteForceOptions& options = {});

struct BnbOptions {
  Variant variant = Variant::rdrd;
  /// Wall-clock limit in seconds; <= 0 means none.
  double timeout_seconds = 0.0;
  /// Worker threads for the subtree split. Enumeration always runs on one.
  int threads = 1;
  /// Collect every optimum (no component split, single-threaded).
  bool enumerate_all = false;
};

/**
 * Exact branch-and-bound for the RDRD (or DRD) number.
 *
 * Components are solved independently and summed. Within a component the
 * search branches on vertices by descending degree (ties: lower index) with
 * label order 3, 2, 0, 1. A node is cut when partial weight plus
 * `completion_lower_bound` reaches the incumbent. On timeout the incumbent is
 * returned with `optimal == false` and the smallest bound over the unexplored
 * frontier in `lower_bound`.
 */
SolveResult solve_rdrd_bnb(const Graph& g, const BnbOptions& options = {});

/// Convenience wrappers used by catalog bounds.
int domination_number(const Graph& g);
int two_packing_number(const Graph& g);
int rdrd_number(const Graph& g, double timeout_seconds = 0.0);
int drd_number(const Graph& g, double timeout_seconds = 0.0);

}  // namespace rdrd
