#include <algorithm>
#include <queue>

#include "rdrd/graph.hpp"

namespace rdrd {

namespace {

// Lexicographic BFS; labels are the (descending) visit numbers of already
// visited neighbors. Quadratic, which is plenty for the graph sizes here.
std::vector<Vertex> lex_bfs(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> label(static_cast<std::size_t>(n));
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (visited[v]) continue;
      if (best == -1 || label[v] > label[best]) best = v;
    }
    visited[best] = true;
    order.push_back(best);
    for (Vertex w : g.neighbors(best)) {
      if (!visited[w]) label[w].push_back(n - step);
    }
  }
  return order;
}

// Shortest a-b path avoiding `blocked`; empty if none.
std::vector<Vertex> shortest_path(const Graph& g, Vertex a, Vertex b,
                                  const std::vector<bool>& blocked) {
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -2);
  std::queue<Vertex> queue;
  parent[a] = -1;
  queue.push(a);
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    if (v == b) break;
    for (Vertex w : g.neighbors(v)) {
      if (blocked[w] || parent[w] != -2) continue;
      parent[w] = v;
      queue.push(w);
    }
  }
  if (parent[b] == -2) return {};
  std::vector<Vertex> path;
  for (Vertex v = b; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

// For some v with non-adjacent neighbors a, b: a shortest a-b path outside
// N[v] \ {a, b} closes an induced cycle through v. Exists iff not chordal.
std::vector<Vertex> find_chordless_cycle(const Graph& g) {
  const int n = g.order();
  for (Vertex v = 0; v < n; ++v) {
    const auto nbrs = g.neighbors(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        const Vertex a = nbrs[i];
        const Vertex b = nbrs[j];
        if (g.adjacent(a, b)) continue;
        std::vector<bool> blocked(static_cast<std::size_t>(n), false);
        blocked[v] = true;
        for (Vertex w : nbrs) blocked[w] = w != a && w != b;
        auto path = shortest_path(g, a, b, blocked);
        if (path.empty()) continue;
        path.insert(path.begin(), v);
        return path;
      }
    }
  }
  return {};
}

}  // namespace

bool is_perfect_elimination_order(const Graph& g, std::span<const Vertex> order) {
  const int n = g.order();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> position(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || position[order[i]] != -1) return false;
    position[order[i]] = i;
  }
  for (Vertex v : order) {
    std::vector<Vertex> later;
    for (Vertex w : g.neighbors(v)) {
      if (position[w] > position[v]) later.push_back(w);
    }
    for (std::size_t i = 0; i < later.size(); ++i) {
      for (std::size_t j = i + 1; j < later.size(); ++j) {
        if (!g.adjacent(later[i], later[j])) return false;
      }
    }
  }
  return true;
}

ChordalityReport is_chordal(const Graph& g) {
  ChordalityReport report;
  auto order = lex_bfs(g);
  std::reverse(order.begin(), order.end());
  if (is_perfect_elimination_order(g, order)) {
    report.chordal = true;
    report.elimination_order = std::move(order);
  } else {
    report.chordless_cycle = find_chordless_cycle(g);
  }
  return report;
}

}  // namespace rdrd
