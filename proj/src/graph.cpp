#include "rdrd/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <random>

#include "rdrd/error.hpp"

namespace rdrd {

Graph::Graph(int n) {
  if (n < 0) {
    throw ValidationError("graph order must be >= 0, got " + std::to_string(n));
  }
  adjacency_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ValidationError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (u == v) {
      throw ValidationError("self-loop at vertex " + std::to_string(u));
    }
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& row = g.adjacency_[v];
    std::sort(row.begin(), row.end());
    if (auto dup = std::adjacent_find(row.begin(), row.end()); dup != row.end()) {
      throw ValidationError("duplicate edge (" + std::to_string(std::min(v, *dup)) + "," +
                            std::to_string(std::max(v, *dup)) + ")");
    }
  }
  g.edge_count_ = static_cast<int>(edges.size());
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& row = adjacency_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<int> index(adjacency_.size(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> es;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : adjacency_[vertices[i]]) {
      const int j = index[w];
      if (j > static_cast<int>(i)) es.emplace_back(static_cast<int>(i), j);
    }
  }
  return from_edges(static_cast<int>(vertices.size()), es);
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != adjacency_.size()) {
    throw ValidationError("permutation length does not match graph order");
  }
  return induced(perm);
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::star: return "star";
    case Family::wounded_spider: return "wounded_spider";
    case Family::empty: return "empty";
  }
  return "unknown";
}

namespace {

void require(bool ok, const std::string& constraint) {
  if (!ok) throw ValidationError("family parameter constraint violated: " + constraint);
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto token = text.substr(0, comma);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ValidationError("bad integer '" + std::string(token) + "' in family spec");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

Graph build_family(const FamilySpec& spec) {
  std::vector<Edge> es;
  switch (spec.family) {
    case Family::path:
      require(spec.n >= 1, "path requires n >= 1");
      for (int i = 0; i + 1 < spec.n; ++i) es.emplace_back(i, i + 1);
      return Graph::from_edges(spec.n, es);
    case Family::cycle:
      require(spec.n >= 3, "cycle requires n >= 3");
      for (int i = 0; i < spec.n; ++i) es.emplace_back(i, (i + 1) % spec.n);
      return Graph::from_edges(spec.n, es);
    case Family::complete:
      require(spec.n >= 1, "complete requires n >= 1");
      for (int i = 0; i < spec.n; ++i)
        for (int j = i + 1; j < spec.n; ++j) es.emplace_back(i, j);
      return Graph::from_edges(spec.n, es);
    case Family::complete_bipartite:
      require(spec.p >= 1 && spec.q >= 1, "complete_bipartite requires p >= 1 and q >= 1");
      for (int i = 0; i < spec.p; ++i)
        for (int j = 0; j < spec.q; ++j) es.emplace_back(i, spec.p + j);
      return Graph::from_edges(spec.p + spec.q, es);
    case Family::star:
      require(spec.n >= 1, "star requires n >= 1");
      for (int i = 1; i <= spec.n; ++i) es.emplace_back(0, i);
      return Graph::from_edges(spec.n + 1, es);
    case Family::wounded_spider:
      require(spec.n >= 1, "wounded_spider requires n >= 1");
      require(spec.t >= 0 && spec.t <= spec.n - 1, "wounded_spider requires 0 <= t <= n-1");
      for (int i = 1; i <= spec.n; ++i) {
        if (i <= spec.t) {
          es.emplace_back(0, spec.n + i);
          es.emplace_back(spec.n + i, i);
        } else {
          es.emplace_back(0, i);
        }
      }
      return Graph::from_edges(spec.n + 1 + spec.t, es);
    case Family::empty:
      require(spec.n >= 0, "empty requires n >= 0");
      return Graph(spec.n);
  }
  throw ValidationError("unknown family");
}

FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ValidationError("family spec must look like name:params, got '" + std::string(text) + "'");
  }
  const auto name = text.substr(0, colon);
  const auto args = parse_int_list(text.substr(colon + 1));
  FamilySpec spec;
  auto arity = [&](std::size_t k) {
    if (args.size() != k) {
      throw ValidationError("family '" + std::string(name) + "' takes " + std::to_string(k) +
                            " parameter(s)");
    }
  };
  if (name == "path" || name == "cycle" || name == "complete" || name == "star" || name == "empty") {
    arity(1);
    spec.n = args[0];
    spec.family = name == "path"       ? Family::path
                  : name == "cycle"    ? Family::cycle
                  : name == "complete" ? Family::complete
                  : name == "star"     ? Family::star
                                       : Family::empty;
  } else if (name == "complete_bipartite") {
    arity(2);
    spec.family = Family::complete_bipartite;
    spec.p = args[0];
    spec.q = args[1];
  } else if (name == "wounded_spider") {
    arity(2);
    spec.family = Family::wounded_spider;
    spec.n = args[0];
    spec.t = args[1];
  } else {
    throw ValidationError("unknown family '" + std::string(name) + "'");
  }
  return spec;
}

std::vector<int> component_ids(const Graph& g, int* count) {
  const int n = g.order();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (comp[w] == -1) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count != nullptr) *count = next;
  return comp;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  int count = 0;
  const auto ids = component_ids(g, &count);
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(count));
  for (Vertex v = 0; v < g.order(); ++v) out[ids[v]].push_back(v);
  return out;
}

bool is_connected(const Graph& g) {
  int count = 0;
  component_ids(g, &count);
  return count == 1;
}

GraphStats graph_stats(const Graph& g) {
  GraphStats s;
  s.n = g.order();
  s.m = g.size();
  if (s.n > 0) {
    s.min_degree = g.degree(0);
    for (Vertex v = 0; v < s.n; ++v) {
      s.max_degree = std::max(s.max_degree, g.degree(v));
      s.min_degree = std::min(s.min_degree, g.degree(v));
    }
  }
  component_ids(g, &s.components);
  s.connected = s.components == 1;

  std::vector<int> color(static_cast<std::size_t>(s.n), -1);
  bool bipartite = true;
  std::queue<Vertex> queue;
  for (Vertex root = 0; root < s.n && bipartite; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    queue.push(root);
    while (!queue.empty() && bipartite) {
      const Vertex v = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push(w);
        } else if (color[w] == color[v]) {
          bipartite = false;
          break;
        }
      }
    }
  }
  s.bipartite = bipartite;
  if (bipartite) s.two_coloring = std::move(color);
  return s;
}

Graph random_connected_graph(int n, double extra_edge_probability, std::uint64_t seed) {
  if (n < 1) throw ValidationError("random graph needs n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> pick(0, v - 1);
    es.emplace_back(pick(rng), v);
  }
  std::bernoulli_distribution extra(extra_edge_probability);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (extra(rng) && std::find(es.begin(), es.end(), Edge{u, v}) == es.end()) es.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, es);
}

}  // namespace rdrd
