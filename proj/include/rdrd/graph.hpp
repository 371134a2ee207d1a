#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rdrd {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/**
 * Simple undirected graph on vertices 0..n-1.
 *
 * Immutable once built. Neighbor lists are sorted ascending, so every
 * iteration over the graph (and every certificate derived from it) is
 * deterministic.
 */
class Graph {
public:
  Graph() = default;

  /// Edgeless graph on `n` vertices.
  explicit Graph(int n);

  /// Throws ValidationError on self-loops, duplicate edges or out-of-range ends.
  static Graph from_edges(int n, std::span<const Edge> edges);

  [[nodiscard]] int order() const noexcept { return static_cast<int>(adjacency_.size()); }
  [[nodiscard]] int size() const noexcept { return edge_count_; }
  [[nodiscard]] bool empty() const noexcept { return adjacency_.empty(); }

  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;

  /// All edges with u < v, sorted lexicographically.
  [[nodiscard]] std::vector<Edge> edges() const;

  /// Graph induced on `vertices` (renumbered 0..k-1 in the given order).
  [[nodiscard]] Graph induced(std::span<const Vertex> vertices) const;

  /// Vertex u of the result is vertex perm[u] of this graph.
  [[nodiscard]] Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  std::vector<std::vector<Vertex>> adjacency_;
  int edge_count_ = 0;
};

enum class Family { path, cycle, complete, complete_bipartite, star, wounded_spider, empty };

/// Parameters: `n` for path/cycle/complete/star/empty; `p`,`q` for
/// complete_bipartite; `n`,`t` for wounded_spider ws(1,n,t).
struct FamilySpec {
  Family family = Family::path;
  int n = 0;
  int p = 0;
  int q = 0;
  int t = 0;
};

/**
 * Canonical member of a family.
 *
 * Numbering: path/cycle 0..n-1 in order; complete_bipartite part A = 0..p-1,
 * part B = p..p+q-1; star center 0, leaves 1..n; wounded_spider center 0,
 * legs 1..n, and the vertex subdividing the edge to leg i (i = 1..t) is n+i.
 */
Graph build_family(const FamilySpec& spec);

/// Parses "path:5", "cycle:7", "complete:4", "complete_bipartite:2,3",
/// "star:3", "wounded_spider:3,2", "empty:2".
FamilySpec parse_family_spec(std::string_view text);
std::string_view family_name(Family family);

struct GraphStats {
  int n = 0;
  int m = 0;
  int max_degree = 0;
  int min_degree = 0;
  int components = 0;
  bool connected = false;  // exactly one component
  bool bipartite = false;
  std::optional<std::vector<int>> two_coloring;  // present iff bipartite
};

GraphStats graph_stats(const Graph& g);

/// Component id per vertex, numbered by smallest member.
std::vector<int> component_ids(const Graph& g, int* count = nullptr);
std::vector<std::vector<Vertex>> components(const Graph& g);
bool is_connected(const Graph& g);

/// Random spanning tree (uniform attachment) plus each remaining pair with
/// probability `extra_edge_probability`; deterministic for a given seed.
Graph random_connected_graph(int n, double extra_edge_probability, std::uint64_t seed);

struct ChordalityReport {
  bool chordal = false;
  /// Perfect elimination ordering, filled when chordal.
  std::vector<Vertex> elimination_order;
  /// Chordless cycle of length >= 4 in cyclic order, filled when not chordal.
  std::vector<Vertex> chordless_cycle;
};

ChordalityReport is_chordal(const Graph& g);

/// True when every vertex's later neighbors in `order` form a clique.
bool is_perfect_elimination_order(const Graph& g, std::span<const Vertex> order);

/// Edge-list text: "n m" header, then m lines "u v"; '#' starts a comment.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

Graph load_graph_file(const std::string& path);
void save_graph_file(const Graph& g, const std::string& path);

}  // namespace rdrd
