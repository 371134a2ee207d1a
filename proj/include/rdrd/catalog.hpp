#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rdrd/graph.hpp"

namespace rdrd {

enum class CatalogFamily {
  path,            // P_n
  cycle,           // C_n
  strong_strip,    // P_rows ⊠ P_m, rows in {2, 3}
  c3xcm,           // C_3 × C_m
  p2xpn,           // P_2 × P_n
  p2x_bipartite,   // P_2 × G, G bipartite
  p2x_odd_cycle,   // P_2 × C_{2n+1}
  corona_general,  // G ⊙ H, H without isolated vertices
  corona_kn,       // K_n ⊙ K_1
  corona_cn,       // C_n ⊙ K_1
  corona_pn,       // P_n ⊙ K_1
  corona_kpq,      // K_{p,q} ⊙ K_1
  corona_double,   // (G ⊙ K_1) ⊙ K_1
  wounded_spider,  // ws(1, q, q-1)
};

std::string_view catalog_family_name(CatalogFamily family);
CatalogFamily parse_catalog_family(std::string_view name);
const std::vector<CatalogFamily>& all_catalog_families();

/// Integer parameters plus the factor graphs some families need.
struct CatalogParams {
  int n = 0;
  int m = 0;
  int p = 0;
  int q = 0;
  int rows = 0;
  std::optional<Graph> g;  // corona_general, corona_double, p2x_bipartite
  std::optional<Graph> h;  // corona_general
  /// p2x_bipartite: known RDRD number of the factor; solved when absent.
  std::optional<int> factor_value;
};

struct FormulaResult {
  CatalogFamily family = CatalogFamily::path;
  std::map<std::string, int> params;
  int value = 0;
  std::string citation;
  std::string notes;
  /// Where the literature states a different closed form, its value.
  std::optional<int> published_value;
};

/// Throws InapplicableError naming the failed hypothesis.
FormulaResult catalog_value(CatalogFamily family, const CatalogParams& params);

/// The graph a catalog entry speaks about, in the canonical numbering.
Graph catalog_graph(CatalogFamily family, const CatalogParams& params);

enum class BoundId { connected_upper, strong_ob1, strong_str4, cardinal, corona_k1 };

std::string_view bound_name(BoundId id);
BoundId parse_bound_id(std::string_view name);

struct BoundsResult {
  BoundId id = BoundId::connected_upper;
  std::optional<int> lower;
  std::optional<int> upper;
  std::string citation;
  std::map<std::string, int> ingredients;
};

/**
 * Bounds on the RDRD number of g (connected_upper, corona_k1: of g ⊙ K1) or
 * of a product of g and h (strong_*: g ⊠ h; cardinal: g × h). Domination,
 * 2-packing and RDRD ingredients are computed exactly.
 */
BoundsResult catalog_bounds(BoundId id, const Graph& g, const std::optional<Graph>& h = std::nullopt);

struct CrosscheckRow {
  CatalogParams params;
  std::map<std::string, int> param_values;
  std::optional<int> formula;
  std::optional<int> solver;
  std::optional<int> published_value;
  bool match = false;
  bool skipped = false;
  std::string note;
};

struct CrosscheckReport {
  CatalogFamily family = CatalogFamily::path;
  std::vector<CrosscheckRow> rows;
  int matches = 0;
  int mismatches = 0;
  int skipped = 0;
};

struct CrosscheckBudget {
  /// Per-instance branch-and-bound limit in seconds (<= 0: none).
  double timeout_seconds = 60.0;
  /// Skip instances above this order.
  int max_order = 24;
  int threads = 1;
};

/// Solves every instance exactly and compares against the closed form.
/// Mismatches are findings, never exceptions.
CrosscheckReport catalog_crosscheck(CatalogFamily family, const std::vector<CatalogParams>& instances,
                                    const CrosscheckBudget& budget = {});

/// 2γ(G) ≤ γ_dR(G) ≤ γ_rdR(G) ≤ 2n - 2 evaluated exactly on a connected graph, n >= 3.
struct ChainReport {
  int n = 0;
  int gamma = 0;
  int drd = 0;
  int rdrd = 0;
  bool holds = false;
};

ChainReport domination_chain(const Graph& g);

}  // namespace rdrd
