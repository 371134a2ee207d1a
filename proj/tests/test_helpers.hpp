#pragma once

#include <vector>

#include "oracles.hpp"
#include "rdrd/graph.hpp"

namespace testing_util {

inline oracle::Matrix to_matrix(const rdrd::Graph& g) {
  oracle::EdgeList edges;
  for (auto e : g.edges()) edges.push_back(e);
  return oracle::matrix(g.order(), edges);
}

inline rdrd::Graph path(int n) { return rdrd::build_family({rdrd::Family::path, n}); }
inline rdrd::Graph cycle(int n) { return rdrd::build_family({rdrd::Family::cycle, n}); }
inline rdrd::Graph complete(int n) { return rdrd::build_family({rdrd::Family::complete, n}); }
inline rdrd::Graph empty(int n) { return rdrd::build_family({rdrd::Family::empty, n}); }

/// Every simple graph on n vertices (n <= 5), one per edge subset.
inline std::vector<rdrd::Graph> all_graphs(int n) {
  std::vector<rdrd::Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<rdrd::Graph> out;
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<rdrd::Edge> es;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1u) es.push_back(pairs[i]);
    out.push_back(rdrd::Graph::from_edges(n, es));
  }
  return out;
}

}  // namespace testing_util
