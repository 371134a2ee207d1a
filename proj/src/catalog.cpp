#include "rdrd/catalog.hpp"

#include <algorithm>
#include <array>

#include "rdrd/error.hpp"
#include "rdrd/products.hpp"
#include "rdrd/solver.hpp"

namespace rdrd {

namespace {

struct FamilyName {
  CatalogFamily family;
  std::string_view name;
};

constexpr std::array kFamilyNames{
    FamilyName{CatalogFamily::path, "path"},
    FamilyName{CatalogFamily::cycle, "cycle"},
    FamilyName{CatalogFamily::strong_strip, "strong_strip"},
    FamilyName{CatalogFamily::c3xcm, "c3xcm"},
    FamilyName{CatalogFamily::p2xpn, "p2xpn"},
    FamilyName{CatalogFamily::p2x_bipartite, "p2x_bipartite"},
    FamilyName{CatalogFamily::p2x_odd_cycle, "p2x_odd_cycle"},
    FamilyName{CatalogFamily::corona_general, "corona_general"},
    FamilyName{CatalogFamily::corona_kn, "corona_kn"},
    FamilyName{CatalogFamily::corona_cn, "corona_cn"},
    FamilyName{CatalogFamily::corona_pn, "corona_pn"},
    FamilyName{CatalogFamily::corona_kpq, "corona_kpq"},
    FamilyName{CatalogFamily::corona_double, "corona_double"},
    FamilyName{CatalogFamily::wounded_spider, "wounded_spider"},
};

void require(bool ok, const std::string& hypothesis) {
  if (!ok) throw InapplicableError("formula inapplicable: requires " + hypothesis);
}

const Graph& require_graph(const std::optional<Graph>& g, const char* which) {
  if (!g) throw InapplicableError(std::string("formula inapplicable: requires graph ") + which);
  return *g;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

int path_value(int n) {
  if (n <= 3) return n + 1;  // P1, P2, P3 -> 2, 3, 4 (exhaustive search)
  return n + 2;
}

int cycle_value(int n) { return n % 3 == 0 ? n : n + 2; }

int strip_value(int m) {
  switch (m % 3) {
    case 0: return m;
    case 1: return m + 2;
    default: return m + 1;
  }
}

}  // namespace

std::string_view catalog_family_name(CatalogFamily family) {
  for (const auto& entry : kFamilyNames)
    if (entry.family == family) return entry.name;
  return "unknown";
}

CatalogFamily parse_catalog_family(std::string_view name) {
  for (const auto& entry : kFamilyNames)
    if (entry.name == name) return entry.family;
  throw ValidationError("unknown catalog family '" + std::string(name) + "'");
}

const std::vector<CatalogFamily>& all_catalog_families() {
  static const std::vector<CatalogFamily> families = [] {
    std::vector<CatalogFamily> out;
    for (const auto& entry : kFamilyNames) out.push_back(entry.family);
    return out;
  }();
  return families;
}

FormulaResult catalog_value(CatalogFamily family, const CatalogParams& params) {
  FormulaResult r;
  r.family = family;
  const int n = params.n;
  const int m = params.m;
  switch (family) {
    case CatalogFamily::path:
      require(n >= 1, "n >= 1");
      r.params = {{"n", n}};
      r.value = path_value(n);
      r.citation = "gamma_rdR(P_n) = n + 2 for n >= 4";
      if (n <= 3) r.notes = "n <= 3 values 2, 3, 4 come from exhaustive search";
      return r;

    case CatalogFamily::cycle:
      require(n >= 3, "n >= 3");
      r.params = {{"n", n}};
      r.value = cycle_value(n);
      r.citation = "gamma_rdR(C_n) = n if n = 0 (mod 3), else n + 2";
      return r;

    case CatalogFamily::strong_strip:
      require(params.rows == 2 || params.rows == 3, "rows in {2, 3}");
      require(m >= 1, "m >= 1");
      r.params = {{"rows", params.rows}, {"m", m}};
      if (m == 1) {
        r.value = path_value(params.rows);
        r.citation = "P_rows ⊠ P_1 = P_rows; path value";
        r.notes = "m = 1 strip degenerates to a path";
        return r;
      }
      r.value = strip_value(m);
      r.citation = "gamma_rdR(P_n ⊠ P_m), n in {2,3}: m, m + 2, m + 1 for m = 0, 1, 2 (mod 3)";
      return r;

    case CatalogFamily::c3xcm:
      require(m >= 3, "m >= 3");
      r.params = {{"m", m}};
      r.value = 2 * m;
      r.citation = "gamma_rdR(C_3 × C_m) = 2m";
      return r;

    case CatalogFamily::p2xpn:
      require(n >= 1, "n >= 1");
      r.params = {{"n", n}};
      r.value = n >= 4 ? 2 * n + 4 : 2 * n + 2;
      r.citation = "gamma_rdR(P_2 × P_n) = 2n + 4 for n >= 4, 2n + 2 for n <= 3";
      return r;

    case CatalogFamily::p2x_bipartite: {
      const Graph& g = require_graph(params.g, "g");
      require(g.order() >= 1, "nonempty factor");
      require(graph_stats(g).bipartite, "bipartite factor");
      const int factor = params.factor_value ? *params.factor_value : rdrd_number(g);
      r.params = {{"factor_order", g.order()}, {"factor_value", factor}};
      r.value = 2 * factor;
      r.citation = "P_2 × G is two disjoint copies of G for bipartite G";
      return r;
    }

    case CatalogFamily::p2x_odd_cycle:
      require(n >= 1, "n >= 1");
      r.params = {{"n", n}};
      r.value = cycle_value(4 * n + 2);
      r.citation = "P_2 × C_{2n+1} is the cycle C_{4n+2}; cycle value";
      r.published_value = n % 6 == 0 ? 4 * n + 2 : 4 * n + 4;
      if (*r.published_value != r.value) {
        r.notes = "published congruence (4n+2 iff n = 0 mod 6) gives " +
                  std::to_string(*r.published_value) + "; cycle value gives 4n+2 iff n = 1 mod 3";
      }
      return r;

    case CatalogFamily::corona_general: {
      const Graph& g = require_graph(params.g, "g");
      const Graph& h = require_graph(params.h, "h");
      require(g.order() >= 1 && is_connected(g), "connected nonempty G");
      require(h.order() >= 1, "nonempty H");
      const auto hs = graph_stats(h);
      require(hs.min_degree >= 1, "H without isolated vertices (so H is not K1)");
      r.params = {{"n", g.order()}, {"h_order", h.order()}};
      r.value = 3 * g.order();
      r.citation = "gamma_rdR(G ⊙ H) = 3n for connected G and H not K1";
      r.notes = "restricted to H without isolated vertices";
      return r;
    }

    case CatalogFamily::corona_kn:
      require(n >= 1, "n >= 1");
      r.params = {{"n", n}};
      r.value = n == 2 ? 6 : 2 * n + 1;
      r.citation = "gamma_rdR(K_n ⊙ K_1) = 2n + 1 for n != 2, 6 for n = 2";
      return r;

    case CatalogFamily::corona_cn:
      require(n >= 3, "n >= 3");
      r.params = {{"n", n}};
      r.value = ceil_div(7 * n, 3) + (n % 3 == 2 ? 1 : 0);
      r.citation = "gamma_rdR(C_n ⊙ K_1) = ceil(7n/3), plus 1 when n = 2 (mod 3)";
      return r;

    case CatalogFamily::corona_pn:
      require(n >= 1, "n >= 1");
      r.params = {{"n", n}};
      r.value = ceil_div(7 * n, 3) + (n % 3 == 1 ? 0 : 1);
      r.citation = "gamma_rdR(P_n ⊙ K_1) = ceil(7n/3) for n = 1 (mod 3), else ceil(7n/3) + 1";
      return r;

    case CatalogFamily::corona_kpq:
      require(params.p >= 1 && params.q >= 1, "p, q >= 1");
      r.params = {{"p", params.p}, {"q", params.q}};
      r.value = std::min(params.p, params.q) == 1 ? 3 * (params.p + params.q)
                                                   : 2 * (params.p + params.q + 1);
      r.citation = "gamma_rdR(K_{p,q} ⊙ K_1) = 3(p+q) if min(p,q) = 1, else 2(p+q+1)";
      return r;

    case CatalogFamily::corona_double: {
      const Graph& g = require_graph(params.g, "g");
      require(g.order() >= 2, "order of G >= 2 (G = K1 gives P4 with value 6)");
      require(is_connected(g), "connected G");
      r.params = {{"n", g.order()}};
      r.value = 5 * g.order();
      r.citation = "gamma_rdR((G ⊙ K_1) ⊙ K_1) = 5n";
      r.notes = "restricted to connected G of order >= 2";
      return r;
    }

    case CatalogFamily::wounded_spider:
      require(params.q >= 1, "q >= 1");
      r.params = {{"q", params.q}};
      // ws(1, q, q-1) has order 2q.
      r.value = ceil_div(3 * (2 * params.q) - 1, 2);
      r.citation = "gamma_rdR(ws(1,q,q-1)) = ceil((3n - 1)/2), n = 2q";
      return r;
  }
  throw InapplicableError("unknown family");
}

Graph catalog_graph(CatalogFamily family, const CatalogParams& params) {
  // Validate hypotheses first so graph and formula always agree on scope.
  if (family != CatalogFamily::p2x_bipartite) catalog_value(family, params);
  auto path = [](int k) { return build_family({Family::path, k}); };
  auto cycle = [](int k) { return build_family({Family::cycle, k}); };
  switch (family) {
    case CatalogFamily::path: return path(params.n);
    case CatalogFamily::cycle: return cycle(params.n);
    case CatalogFamily::strong_strip: return strong_product(path(params.rows), path(params.m)).graph;
    case CatalogFamily::c3xcm: return cardinal_product(cycle(3), cycle(params.m)).graph;
    case CatalogFamily::p2xpn: return cardinal_product(path(2), path(params.n)).graph;
    case CatalogFamily::p2x_bipartite: {
      const Graph& g = require_graph(params.g, "g");
      return cardinal_product(path(2), g).graph;
    }
    case CatalogFamily::p2x_odd_cycle:
      return cardinal_product(path(2), cycle(2 * params.n + 1)).graph;
    case CatalogFamily::corona_general: return corona(*params.g, *params.h).graph;
    case CatalogFamily::corona_kn: return corona_k1(build_family({Family::complete, params.n}));
    case CatalogFamily::corona_cn: return corona_k1(cycle(params.n));
    case CatalogFamily::corona_pn: return corona_k1(path(params.n));
    case CatalogFamily::corona_kpq: {
      FamilySpec spec{Family::complete_bipartite};
      spec.p = params.p;
      spec.q = params.q;
      return corona_k1(build_family(spec));
    }
    case CatalogFamily::corona_double: return corona_k1(corona_k1(*params.g));
    case CatalogFamily::wounded_spider: {
      FamilySpec spec{Family::wounded_spider, params.q};
      spec.t = params.q - 1;
      return build_family(spec);
    }
  }
  throw InapplicableError("unknown family");
}

std::string_view bound_name(BoundId id) {
  switch (id) {
    case BoundId::connected_upper: return "connected_upper";
    case BoundId::strong_ob1: return "strong_ob1";
    case BoundId::strong_str4: return "strong_str4";
    case BoundId::cardinal: return "cardinal";
    case BoundId::corona_k1: return "corona_k1";
  }
  return "unknown";
}

BoundId parse_bound_id(std::string_view name) {
  for (BoundId id : {BoundId::connected_upper, BoundId::strong_ob1, BoundId::strong_str4,
                     BoundId::cardinal, BoundId::corona_k1}) {
    if (bound_name(id) == name) return id;
  }
  throw ValidationError("unknown bound '" + std::string(name) + "'");
}

BoundsResult catalog_bounds(BoundId id, const Graph& g, const std::optional<Graph>& h) {
  BoundsResult r;
  r.id = id;
  const int n = g.order();
  auto need_h = [&]() -> const Graph& {
    if (!h) throw InapplicableError("bound inapplicable: requires a second factor h");
    return *h;
  };
  switch (id) {
    case BoundId::connected_upper:
      require(is_connected(g) && n >= 3, "connected G of order >= 3");
      r.upper = 2 * n - 2;
      r.citation = "gamma_rdR(G) <= 2n - 2 for connected G, n >= 3";
      r.ingredients = {{"n", n}};
      return r;

    case BoundId::strong_ob1: {
      const Graph& hh = need_h();
      const int m = hh.order();
      require(is_connected(g) && is_connected(hh), "connected G and H");
      const int gamma_g = domination_number(g);
      const int gamma_h = domination_number(hh);
      const int pack_g = two_packing_number(g);
      const int pack_h = two_packing_number(hh);
      r.lower = 2 * std::max(pack_g * gamma_h, gamma_g * pack_h);
      if (n * m >= 3) r.upper = 2 * n * m - 2;
      r.citation = "2 max{P2(G) gamma(H), gamma(G) P2(H)} <= gamma_rdR(G ⊠ H) <= 2nm - 2";
      r.ingredients = {{"n", n},          {"m", m},           {"gamma_g", gamma_g},
                       {"gamma_h", gamma_h}, {"packing_g", pack_g}, {"packing_h", pack_h}};
      return r;
    }

    case BoundId::strong_str4: {
      const Graph& hh = need_h();
      const int m = hh.order();
      require(is_connected(g) && is_connected(hh), "connected G and H");
      require(n >= 3 && m >= 3, "orders of G and H >= 3");
      const int rg = rdrd_number(g);
      const int rh = rdrd_number(hh);
      r.upper = rg * rh - 6;
      r.citation = "gamma_rdR(G ⊠ H) <= gamma_rdR(G) gamma_rdR(H) - 6 for orders >= 3";
      r.ingredients = {{"n", n}, {"m", m}, {"rdrd_g", rg}, {"rdrd_h", rh}};
      return r;
    }

    case BoundId::cardinal: {
      const Graph& hh = need_h();
      const int m = hh.order();
      const int dg = graph_stats(g).max_degree;
      const int dh = graph_stats(hh).max_degree;
      require(n >= 1 && m >= 1, "nonempty factors");
      require(dg >= 1 && dh >= 1, "Delta(G) Delta(H) >= 1");
      r.lower = ceil_div(3 * n * m, dg * dh + 1);
      const bool connected = is_connected(cardinal_product(g, hh).graph);
      if (connected && n * m >= 3) r.upper = 2 * n * m - 2;
      r.citation = "ceil(3nm / (Delta(G) Delta(H) + 1)) <= gamma_rdR(G × H) <= 2nm - 2 (connected product)";
      r.ingredients = {{"n", n},
                       {"m", m},
                       {"max_degree_g", dg},
                       {"max_degree_h", dh},
                       {"product_connected", connected ? 1 : 0}};
      return r;
    }

    case BoundId::corona_k1:
      require(n >= 1 && is_connected(g), "connected G");
      r.lower = 2 * n + 1;
      r.upper = 3 * n;
      r.citation = "2n + 1 <= gamma_rdR(G ⊙ K_1) <= 3n";
      r.ingredients = {{"n", n}};
      return r;
  }
  throw InapplicableError("unknown bound");
}

CrosscheckReport catalog_crosscheck(CatalogFamily family, const std::vector<CatalogParams>& instances,
                                    const CrosscheckBudget& budget) {
  CrosscheckReport report;
  report.family = family;
  for (const auto& params : instances) {
    CrosscheckRow row;
    row.params = params;
    try {
      const auto formula = catalog_value(family, params);
      row.formula = formula.value;
      row.param_values = formula.params;
      row.published_value = formula.published_value;
      const Graph g = catalog_graph(family, params);
      if (g.order() > budget.max_order) {
        row.skipped = true;
        row.note = "order " + std::to_string(g.order()) + " above budget";
      } else {
        BnbOptions options;
        options.timeout_seconds = budget.timeout_seconds;
        options.threads = budget.threads;
        const auto solved = solve_rdrd_bnb(g, options);
        if (!solved.optimal) {
          row.skipped = true;
          row.note = "solver timed out (best " + std::to_string(solved.value) + ", bound " +
                     std::to_string(solved.lower_bound) + ")";
        } else {
          row.solver = solved.value;
          row.match = solved.value == formula.value;
          if (row.published_value && *row.published_value != solved.value) {
            row.note = "published value " + std::to_string(*row.published_value) +
                       " disagrees with the exact value";
          }
        }
      }
    } catch (const InapplicableError& e) {
      row.skipped = true;
      row.note = e.what();
    }
    if (row.skipped) {
      ++report.skipped;
    } else if (row.match) {
      ++report.matches;
    } else {
      ++report.mismatches;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

ChainReport domination_chain(const Graph& g) {
  require(is_connected(g) && g.order() >= 3, "connected G of order >= 3");
  ChainReport r;
  r.n = g.order();
  r.gamma = domination_number(g);
  r.drd = drd_number(g);
  r.rdrd = rdrd_number(g);
  r.holds = 2 * r.gamma <= r.drd && r.drd <= r.rdrd && r.rdrd <= 2 * r.n - 2;
  return r;
}

}  // namespace rdrd
