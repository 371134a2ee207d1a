#include "rdrd/constructions.hpp"

#include <algorithm>

#include "rdrd/error.hpp"
#include "rdrd/products.hpp"
#include "rdrd/solver.hpp"

namespace rdrd {

namespace {

// Optimal path labelings. For n >= 4 the 3s sit every third vertex; the
// residue decides the ends (n = 0 mod 3 closes both ends with 1s, n = 2 mod 3
// closes the right end with a 1).
std::vector<int> path_labels(int n) {
  switch (n) {
    case 1: return {2};
    case 2: return {2, 1};
    case 3: return {1, 2, 1};
    default: break;
  }
  std::vector<int> f(static_cast<std::size_t>(n), 0);
  if (n % 3 == 0) {
    f.front() = 1;
    f.back() = 1;
    for (int i = 1; i <= n - 2; i += 3) f[i] = 3;
  } else {
    for (int i = 0; i < n; i += 3) f[i] = 3;
    if (n % 3 == 2) f.back() = 1;
  }
  return f;
}

// Optimal cycle labelings: 3 on every third vertex; n = 2 (mod 3) needs one
// extra 1 on the last vertex.
std::vector<int> cycle_labels(int n) {
  std::vector<int> f(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; i += 3) f[i] = 3;
  if (n % 3 == 2) f.back() = 1;
  return f;
}

Labeling to_labeling(const std::vector<int>& f) { return Labeling(std::span<const int>(f)); }

// G ⊙ K1 labeling from 1-based assignments on u_i (base) and u'_i (pendant).
class CoronaK1Labels {
public:
  explicit CoronaK1Labels(int n) : n_(n), f_(static_cast<std::size_t>(2 * n), 0) {}
  void base(int i, int label) { f_.at(static_cast<std::size_t>(i - 1)) = label; }
  void leaf(int i, int label) { f_.at(static_cast<std::size_t>(n_ + i - 1)) = label; }
  [[nodiscard]] Labeling labeling() const { return to_labeling(f_); }

private:
  int n_;
  std::vector<int> f_;
};

Labeling corona_cycle_labels(int n) {
  CoronaK1Labels f(n);
  for (int k = 0; 3 * k + 3 <= n; ++k) {
    f.base(3 * k + 3, 2);
    f.leaf(3 * k + 1, 2);
    f.leaf(3 * k + 2, 2);
    f.leaf(3 * k + 3, 1);
  }
  if (n % 3 == 1) {
    f.base(n, 2);
    f.leaf(n, 1);
  } else if (n % 3 == 2) {
    f.base(n, 2);
    f.leaf(n - 1, 2);
    f.base(n - 1, 1);
    f.leaf(n, 1);
  }
  return f.labeling();
}

Labeling corona_path_labels(int n) {
  CoronaK1Labels f(n);
  const int blocks = n / 3;
  switch (n % 3) {
    case 0:
      for (int k = 0; k <= blocks - 1; ++k) {
        f.base(3 * k + 1, 2);
        f.leaf(3 * k + 2, 2);
        f.leaf(3 * k + 1, 1);
      }
      for (int k = 0; k <= blocks - 2; ++k) f.leaf(3 * k + 3, 2);
      f.leaf(n, 3);
      break;
    case 1:
      for (int k = 0; k <= blocks; ++k) {
        f.base(3 * k + 1, 2);
        f.leaf(3 * k + 1, 1);
      }
      for (int k = 0; k <= blocks - 1; ++k) {
        f.leaf(3 * k + 2, 2);
        f.leaf(3 * k + 3, 2);
      }
      break;
    default:
      for (int k = 0; k <= blocks; ++k) {
        f.base(3 * k + 1, 2);
        f.leaf(3 * k + 2, 2);
        f.leaf(3 * k + 1, 1);
      }
      for (int k = 0; k <= blocks - 1; ++k) f.leaf(3 * k + 3, 2);
      f.base(n, 1);
      break;
  }
  return f.labeling();
}

// 3 on every pendant, 0 on the base: feasible for any G ⊙ K1 with G != K1.
Labeling corona_k1_pendant_threes(int n) {
  std::vector<int> f(static_cast<std::size_t>(2 * n), 0);
  std::fill(f.begin() + n, f.end(), 3);
  return to_labeling(f);
}

Labeling strip_labels(int rows, int m) {
  if (m == 1) return to_labeling(path_labels(rows));
  std::vector<int> f(static_cast<std::size_t>(rows * m), 0);
  auto put = [&](int col) { f[static_cast<std::size_t>(m + col)] = 3; };  // row 1
  for (int k = 0; k < m / 3; ++k) put(3 * k + 1);
  if (m % 3 != 0) put(m - 2);
  return to_labeling(f);
}

}  // namespace

Certificate construct_certificate(CatalogFamily family, const CatalogParams& params) {
  FormulaResult formula;
  try {
    formula = catalog_value(family, params);
  } catch (const InapplicableError& e) {
    std::string why = e.what();
    if (auto pos = why.find("formula inapplicable"); pos == 0) why.replace(0, 20, "construction inapplicable");
    throw InapplicableError(why);
  }
  Certificate cert;
  cert.graph = catalog_graph(family, params);
  cert.claimed_weight = formula.value;
  const int n = params.n;
  const int m = params.m;

  switch (family) {
    case CatalogFamily::path:
      cert.labeling = to_labeling(path_labels(n));
      cert.citation = "period-3 pattern 3,0,0 with residue-dependent ends";
      break;
    case CatalogFamily::cycle:
      cert.labeling = to_labeling(cycle_labels(n));
      cert.citation = "period-3 pattern 3,0,0 with a 3 or 3,1 tail";
      break;
    case CatalogFamily::strong_strip:
      cert.labeling = strip_labels(params.rows, m);
      cert.citation = "3 on v_{1,3k+1} (and v_{1,m-2} when m != 0 mod 3)";
      break;
    case CatalogFamily::c3xcm: {
      std::vector<int> f(static_cast<std::size_t>(3 * m), 0);
      for (int j = 0; j < m; ++j) f[static_cast<std::size_t>(m + j)] = 2;
      cert.labeling = to_labeling(f);
      cert.citation = "2 on every v_{1,j}";
      break;
    }
    case CatalogFamily::p2xpn: {
      // Components are {(j mod 2, j)} and {(j+1 mod 2, j)}, each a path in j.
      const auto path = path_labels(n);
      std::vector<int> f(static_cast<std::size_t>(2 * n), 0);
      for (int j = 0; j < n; ++j) {
        f[static_cast<std::size_t>((j % 2) * n + j)] = path[j];
        f[static_cast<std::size_t>(((j + 1) % 2) * n + j)] = path[j];
      }
      cert.labeling = to_labeling(f);
      cert.citation = "path labeling on each of the two path components";
      break;
    }
    case CatalogFamily::p2x_bipartite: {
      const Graph& g = *params.g;
      const auto factor = solve_rdrd_bnb(g).certificate;
      const auto color = *graph_stats(g).two_coloring;
      const int k = g.order();
      std::vector<int> f(static_cast<std::size_t>(2 * k), 0);
      // Copy c holds (c + color(v)) mod 2, v) for every v.
      for (int c = 0; c < 2; ++c)
        for (Vertex v = 0; v < k; ++v) f[static_cast<std::size_t>(((c + color[v]) % 2) * k + v)] = factor[v];
      cert.labeling = to_labeling(f);
      cert.claimed_weight = 2 * factor.weight();
      cert.citation = "optimal factor labeling on both copies of G";
      break;
    }
    case CatalogFamily::p2x_odd_cycle: {
      // Cycle position k maps to (k mod 2, k mod (2n+1)).
      const int len = 2 * n + 1;
      const auto cyc = cycle_labels(2 * len);
      std::vector<int> f(static_cast<std::size_t>(2 * len), 0);
      for (int k = 0; k < 2 * len; ++k) f[static_cast<std::size_t>((k % 2) * len + k % len)] = cyc[k];
      cert.labeling = to_labeling(f);
      cert.citation = "cycle labeling of C_{4n+2} transported along the isomorphism";
      break;
    }
    case CatalogFamily::corona_general: {
      std::vector<int> f(static_cast<std::size_t>(cert.graph.order()), 0);
      std::fill(f.begin(), f.begin() + params.g->order(), 3);
      cert.labeling = to_labeling(f);
      cert.citation = "3 on every vertex of G";
      break;
    }
    case CatalogFamily::corona_kn:
      if (n == 2) {
        cert.labeling = corona_k1_pendant_threes(n);
        cert.citation = "3 on both pendants";
      } else {
        CoronaK1Labels f(n);
        f.leaf(1, 1);
        f.base(1, 2);
        for (int i = 2; i <= n; ++i) f.leaf(i, 2);
        cert.labeling = f.labeling();
        cert.citation = "1 on one pendant, 2 on its neighbor and on the other pendants";
      }
      break;
    case CatalogFamily::corona_cn:
      cert.labeling = corona_cycle_labels(n);
      cert.citation = "2 on u_{3k+3}, u'_{3k+1}, u'_{3k+2}; 1 on u'_{3k+3}; residue tail";
      break;
    case CatalogFamily::corona_pn:
      cert.labeling = corona_path_labels(n);
      cert.citation = "2 on u_{3k+1}, u'_{3k+2}; 1 on u'_{3k+1}; residue tail";
      break;
    case CatalogFamily::corona_kpq: {
      const int p = params.p;
      const int q = params.q;
      if (std::min(p, q) == 1) {
        cert.labeling = corona_k1_pendant_threes(p + q);
        cert.citation = "3 on every pendant";
      } else {
        // Base: u_i = i - 1, v_j = p + j - 1; pendant of base b is p + q + b.
        const int order = p + q;
        std::vector<int> f(static_cast<std::size_t>(2 * order), 0);
        f[0] = 2;
        f[static_cast<std::size_t>(p)] = 2;
        f[static_cast<std::size_t>(order)] = 1;
        f[static_cast<std::size_t>(order + p)] = 1;
        for (int i = 2; i <= p; ++i) f[static_cast<std::size_t>(order + i - 1)] = 2;
        for (int j = 2; j <= q; ++j) f[static_cast<std::size_t>(order + p + j - 1)] = 2;
        cert.labeling = to_labeling(f);
        cert.citation = "2 on u_1, v_1 and the other pendants; 1 on u'_1, v'_1";
      }
      break;
    }
    case CatalogFamily::corona_double: {
      // u_i = i, v_i = n + i, u'_i = 2n + i, v'_i = 3n + i.
      const int k = params.g->order();
      std::vector<int> f(static_cast<std::size_t>(4 * k), 0);
      for (int i = 0; i < k; ++i) {
        f[static_cast<std::size_t>(k + i)] = 2;
        f[static_cast<std::size_t>(2 * k + i)] = 2;
        f[static_cast<std::size_t>(3 * k + i)] = 1;
      }
      cert.labeling = to_labeling(f);
      cert.citation = "2 on u'_i and v_i, 1 on v'_i";
      break;
    }
    case CatalogFamily::wounded_spider: {
      // Center 0, legs 1..q, subdivision q + i between the center and leg i < q.
      const int q = params.q;
      std::vector<int> f(static_cast<std::size_t>(2 * q), 0);
      f[0] = 2;
      f[static_cast<std::size_t>(q)] = 1;
      for (int i = 1; i <= q - 1; ++i) {
        f[static_cast<std::size_t>(i)] = 2;
        f[static_cast<std::size_t>(q + i)] = 1;
      }
      cert.labeling = to_labeling(f);
      cert.citation = "2 on the center and long-leg ends, 1 on the short leaf and subdivisions";
      break;
    }
  }
  return cert;
}

int combine_strong_deduction(const Labeling& f1, const Labeling& f2) {
  const auto a = f1.class_sizes();
  const auto b = f2.class_sizes();
  return 6 * a[3] * b[3] + 3 * a[3] * b[2] + 2 * a[3] * b[1] + 3 * a[2] * b[3] + 2 * a[2] * b[2] +
         a[2] * b[1] + a[1] * b[2] + 2 * a[1] * b[3];
}

Labeling combine_strong(const Graph& g, const Graph& h, const Labeling& f1, const Labeling& f2) {
  if (!is_valid(g, f1)) throw ValidationError("combine_strong: f1 is not an RDRD labeling of g");
  if (!is_valid(h, f2)) throw ValidationError("combine_strong: f2 is not an RDRD labeling of h");
  // Indexed [label in g][label in h].
  static constexpr int kTable[4][4] = {
      {0, 0, 0, 0},
      {0, 1, 1, 1},
      {0, 1, 2, 3},
      {0, 1, 3, 3},
  };
  const int n = g.order();
  const int m = h.order();
  Labeling out(n * m);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < m; ++v) out.set(u * m + v, kTable[f1[u]][f2[v]]);
  return out;
}

}  // namespace rdrd
