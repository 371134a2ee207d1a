#pragma once

#include <string>

#include "rdrd/catalog.hpp"
#include "rdrd/graph.hpp"
#include "rdrd/labeling.hpp"

namespace rdrd {

struct Certificate {
  Graph graph;
  Labeling labeling;
  int claimed_weight = 0;
  std::string citation;
};

/**
 * Explicit labeling realizing the catalog value of a family member, on the
 * graph returned by catalog_graph(family, params).
 *
 * Index conventions: strips and C_3 × C_m use v_{i,j} -> i * m + j (row i,
 * column j); in G ⊙ K1 base vertex u_i (1-based) is i - 1 and its pendant
 * u'_i is n + i - 1.
 *
 * Throws InapplicableError naming the failed hypothesis.
 */
Certificate construct_certificate(CatalogFamily family, const CatalogParams& params);

/**
 * Product labeling on g ⊠ h (vertex u * |V(h)| + v) built from RDRD
 * labelings f1 of g and f2 of h, with A_i = f1^{-1}(i), B_i = f2^{-1}(i):
 *   3 on A3×B3, A2×B3, A3×B2;  2 on A2×B2;
 *   1 on A1×B1, A1×B2, A1×B3, A2×B1, A3×B1;  0 elsewhere.
 * Throws ValidationError if either input is not a valid RDRD labeling.
 */
Labeling combine_strong(const Graph& g, const Graph& h, const Labeling& f1, const Labeling& f2);

/// 6|A3||B3| + 3|A3||B2| + 2|A3||B1| + 3|A2||B3| + 2|A2||B2| + |A2||B1| + |A1||B2| + 2|A1||B3|.
int combine_strong_deduction(const Labeling& f1, const Labeling& f2);

}  // namespace rdrd
