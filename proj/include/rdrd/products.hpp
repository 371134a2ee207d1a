#pragma once

#include <utility>
#include <vector>

#include "rdrd/graph.hpp"

namespace rdrd {

enum class ProductKind { strong, cardinal, corona };

/**
 * Coordinates of every product vertex.
 *
 * strong / cardinal: vertex id = u * right_order + v for factor vertices
 * (u, v); coords[id] = {u, v}.
 *
 * corona: ids 0..left_order-1 are the base vertices (coords = {i, -1});
 * copy i of the right factor occupies left_order + i * right_order onward
 * (coords = {i, local vertex}).
 */
struct ProductVertexMap {
  ProductKind kind = ProductKind::strong;
  int left_order = 0;
  int right_order = 0;
  std::vector<std::pair<int, int>> coords;

  [[nodiscard]] int id(int u, int v) const;
};

struct Product {
  Graph graph;
  ProductVertexMap map;
};

Product strong_product(const Graph& g, const Graph& h);
Product cardinal_product(const Graph& g, const Graph& h);
Product corona(const Graph& g, const Graph& h);

/// G ⊙ K1: vertex n + i is the pendant attached to base vertex i.
Graph corona_k1(const Graph& g);

}  // namespace rdrd
