#include "rdrd/products.hpp"

#include "rdrd/error.hpp"

namespace rdrd {

int ProductVertexMap::id(int u, int v) const {
  if (kind == ProductKind::corona) {
    return v < 0 ? u : left_order + u * right_order + v;
  }
  return u * right_order + v;
}

namespace {

void require_nonempty(const Graph& g, const char* which) {
  if (g.empty()) throw ValidationError(std::string(which) + " factor must have at least one vertex");
}

ProductVertexMap grid_map(ProductKind kind, int n, int m) {
  ProductVertexMap map{kind, n, m, {}};
  map.coords.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(m));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < m; ++v) map.coords.emplace_back(u, v);
  return map;
}

}  // namespace

Product strong_product(const Graph& g, const Graph& h) {
  require_nonempty(g, "left");
  require_nonempty(h, "right");
  const int n = g.order();
  const int m = h.order();
  auto map = grid_map(ProductKind::strong, n, m);
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < m; ++v) {
      const int a = map.id(u, v);
      // (u, v') with v ~ v'
      for (int w : h.neighbors(v))
        if (v < w) es.emplace_back(a, map.id(u, w));
      for (int x : g.neighbors(u)) {
        if (x < u) continue;
        es.emplace_back(a, map.id(x, v));
        for (int w : h.neighbors(v)) es.emplace_back(a, map.id(x, w));
      }
    }
  }
  return {Graph::from_edges(n * m, es), std::move(map)};
}

Product cardinal_product(const Graph& g, const Graph& h) {
  require_nonempty(g, "left");
  require_nonempty(h, "right");
  const int n = g.order();
  const int m = h.order();
  auto map = grid_map(ProductKind::cardinal, n, m);
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int x : g.neighbors(u)) {
      if (x < u) continue;
      for (int v = 0; v < m; ++v)
        for (int w : h.neighbors(v)) es.emplace_back(map.id(u, v), map.id(x, w));
    }
  return {Graph::from_edges(n * m, es), std::move(map)};
}

Product corona(const Graph& g, const Graph& h) {
  require_nonempty(g, "left");
  const int n = g.order();
  const int k = h.order();
  ProductVertexMap map{ProductKind::corona, n, k, {}};
  for (int i = 0; i < n; ++i) map.coords.emplace_back(i, -1);
  for (int i = 0; i < n; ++i)
    for (int v = 0; v < k; ++v) map.coords.emplace_back(i, v);

  auto es = g.edges();
  const auto copy_edges = h.edges();
  for (int i = 0; i < n; ++i) {
    for (int v = 0; v < k; ++v) es.emplace_back(i, map.id(i, v));
    for (const auto& [a, b] : copy_edges) es.emplace_back(map.id(i, a), map.id(i, b));
  }
  return {Graph::from_edges(n * (1 + k), es), std::move(map)};
}

Graph corona_k1(const Graph& g) { return corona(g, Graph(1)).graph; }

}  // namespace rdrd
