#include "rdrd/audits.hpp"

#include <algorithm>

#include "rdrd/error.hpp"
#include "rdrd/products.hpp"

namespace rdrd {

StripLayout StripLayout::strong_strip(int rows, int m) {
  if (rows != 2 && rows != 3) throw ValidationError("strong strip needs 2 or 3 rows");
  if (m < 1) throw ValidationError("strong strip needs m >= 1");
  return {LayoutKind::strong_strip, rows, m};
}

StripLayout StripLayout::c3xcm(int m) {
  if (m < 3) throw ValidationError("C3 x Cm needs m >= 3");
  return {LayoutKind::c3xcm, 3, m};
}

StripLayout StripLayout::corona_path(int n) {
  if (n < 1) throw ValidationError("corona path strip needs n >= 1");
  return {LayoutKind::corona_path, 2, n};
}

StripLayout StripLayout::corona_cycle(int n) {
  if (n < 3) throw ValidationError("corona cycle strip needs n >= 3");
  return {LayoutKind::corona_cycle, 2, n};
}

int StripLayout::order() const { return rows * columns; }

std::vector<Vertex> StripLayout::column(int j) const {
  std::vector<Vertex> out;
  if (kind == LayoutKind::corona_path || kind == LayoutKind::corona_cycle) {
    out = {j, columns + j};
  } else {
    for (int i = 0; i < rows; ++i) out.push_back(i * columns + j);
  }
  return out;
}

Graph StripLayout::graph() const {
  switch (kind) {
    case LayoutKind::strong_strip:
      return strong_product(build_family({Family::path, rows}), build_family({Family::path, columns})).graph;
    case LayoutKind::c3xcm:
      return cardinal_product(build_family({Family::cycle, 3}), build_family({Family::cycle, columns})).graph;
    case LayoutKind::corona_path:
      return corona_k1(build_family({Family::path, columns}));
    case LayoutKind::corona_cycle:
      return corona_k1(build_family({Family::cycle, columns}));
  }
  throw ValidationError("unknown layout");
}

std::string layout_name(LayoutKind kind) {
  switch (kind) {
    case LayoutKind::strong_strip: return "strong_strip";
    case LayoutKind::c3xcm: return "c3xcm";
    case LayoutKind::corona_path: return "corona_path";
    case LayoutKind::corona_cycle: return "corona_cycle";
  }
  return "?";
}

LayoutKind parse_layout_kind(std::string_view name) {
  for (auto k : {LayoutKind::strong_strip, LayoutKind::c3xcm, LayoutKind::corona_path, LayoutKind::corona_cycle}) {
    if (layout_name(k) == name) return k;
  }
  throw ValidationError("unknown layout '" + std::string(name) + "'");
}

std::vector<int> column_weights(const StripLayout& layout, const Labeling& f) {
  if (f.size() != layout.order()) {
    throw ValidationError("labeling length " + std::to_string(f.size()) + " does not match layout order " +
                          std::to_string(layout.order()));
  }
  std::vector<int> w(static_cast<std::size_t>(layout.columns), 0);
  for (int j = 0; j < layout.columns; ++j) {
    for (Vertex v : layout.column(j)) w[j] += f[v];
  }
  return w;
}

namespace {

void require_valid(const StripLayout& layout, const Labeling& f) {
  if (f.size() != layout.order()) {
    throw ValidationError("labeling length " + std::to_string(f.size()) + " does not match layout order " +
                          std::to_string(layout.order()));
  }
  if (!is_valid(layout.graph(), f)) throw ValidationError("labeling is not an RDRD labeling of the layout graph");
}

std::string col(int j) { return "f" + std::to_string(j); }

void add_check(LemmaReport& r, std::string name, int column, std::string lhs, int value, int bound) {
  const bool holds = value >= bound;
  r.checks.push_back({std::move(name), column, std::move(lhs), value, bound, holds});
  r.pass = r.pass && holds;
}

void audit_strong(LemmaReport& r) {
  const auto& w = r.column_weights;
  const int m = static_cast<int>(w.size());
  for (int j = 1; j + 1 < m; ++j) {
    add_check(r, "window", j, col(j - 1) + "+" + col(j) + "+" + col(j + 1), w[j - 1] + w[j] + w[j + 1], 3);
  }
  if (m >= 2) {
    add_check(r, "end", 0, col(0) + "+" + col(1), w[0] + w[1], 3);
    add_check(r, "end", m - 2, col(m - 2) + "+" + col(m - 1), w[m - 2] + w[m - 1], 3);
  }
}

void audit_c3xcm(LemmaReport& r) {
  const auto& w = r.column_weights;
  const int m = static_cast<int>(w.size());
  for (int j = 0; j < m; ++j) {
    const int a = (j + m - 1) % m;
    const int b = (j + 1) % m;
    const std::string sum = col(a) + "+" + col(b);
    if (w[j] == 0) add_check(r, "L1", j, sum, w[a] + w[b], 6);
    if (w[j] == 1) add_check(r, "L2", j, sum, w[a] + w[b], 5);
    if (w[j] == 3) add_check(r, "L3", j, sum, w[a] + w[b], 3);
    if (w[j] == 4 || w[j] == 5) {
      // "f_a >= 2 or f_b >= 2" is encoded as max(f_a, f_b) >= 2.
      add_check(r, "L4", j, "max(" + col(a) + "," + col(b) + ")", std::max(w[a], w[b]), 2);
    }
  }
}

void audit_corona(LemmaReport& r, bool cyclic, int weight) {
  const auto& w = r.column_weights;
  const int n = static_cast<int>(w.size());
  const int windows = cyclic ? n : n - 2;
  int ge8 = 0;
  int max_window = 0;
  for (int j = 0; j < windows; ++j) {
    const int a = j, b = (j + 1) % n, c = (j + 2) % n;
    const int s = w[a] + w[b] + w[c];
    add_check(r, "window", j, col(a) + "+" + col(b) + "+" + col(c), s, 7);
    if (s >= 8) ++ge8;
    max_window = std::max(max_window, s);
  }
  r.windows_ge8 = ge8;
  if (cyclic) {
    r.window9_consequence = max_window < 9 || 3 * weight >= 7 * n + 2;
    r.pass = r.pass && *r.window9_consequence;
  }
}

}  // namespace

LemmaReport audit_columns(const StripLayout& layout, const Labeling& f) {
  require_valid(layout, f);
  LemmaReport r;
  r.kind = layout.kind;
  r.column_weights = column_weights(layout, f);
  switch (layout.kind) {
    case LayoutKind::strong_strip: audit_strong(r); break;
    case LayoutKind::c3xcm: audit_c3xcm(r); break;
    case LayoutKind::corona_path: audit_corona(r, false, f.weight()); break;
    case LayoutKind::corona_cycle: audit_corona(r, true, f.weight()); break;
  }
  return r;
}

BagReport bagging_certificate(const StripLayout& layout, const Labeling& f) {
  if (layout.kind != LayoutKind::c3xcm) throw ValidationError("bagging applies to the C3 x Cm layout only");
  require_valid(layout, f);
  BagReport r;
  r.column_weights = column_weights(layout, f);
  const auto& w = r.column_weights;
  const int m = layout.columns;
  std::vector<bool> bagged(static_cast<std::size_t>(m), false);
  auto at = [m](int j) { return ((j % m) + m) % m; };

  auto open_bag = [&](int stage, int j) {
    bagged[j] = true;
    r.bags.push_back({stage, {j}, w[j]});
  };
  // Absorbs column j into the newest bag unless it is already bagged.
  auto absorb = [&](int j) {
    j = at(j);
    if (bagged[j]) return;
    bagged[j] = true;
    r.bags.back().columns.push_back(j);
    r.bags.back().weight += w[j];
  };

  for (int j = 0; j < m; ++j) {
    if (w[j] < 6 || bagged[j]) continue;
    open_bag(1, j);
    if (w[at(j - 1)] <= 1) absorb(j - 1);
    if (w[at(j + 1)] <= 1) absorb(j + 1);
  }
  for (int j = 0; j < m; ++j) {
    if (w[j] < 4 || w[j] > 5 || bagged[j]) continue;
    open_bag(2, j);
    if (w[at(j - 1)] <= 1) absorb(j - 1);
    if (w[at(j + 1)] <= 1) absorb(j + 1);
  }
  for (int j = 0; j < m; ++j) {
    if (w[j] != 3 || bagged[j]) continue;
    const bool light_left = w[at(j - 1)] == 1 && !bagged[at(j - 1)];
    const bool light_right = w[at(j + 1)] == 1 && !bagged[at(j + 1)];
    if (!light_left && !light_right) continue;
    open_bag(3, j);
    if (w[at(j - 1)] == 1) absorb(j - 1);
    if (w[at(j + 1)] == 1) absorb(j + 1);
  }
  for (int j = 0; j < m; ++j) {
    if (w[j] != 3 || bagged[j]) continue;
    open_bag(4, j);
    if (w[at(j - 1)] == 0) {
      absorb(j - 1);
      absorb(j - 2);
    }
    if (w[at(j + 1)] == 0) {
      absorb(j + 1);
      absorb(j + 2);
    }
  }
  for (int j = 0; j < m; ++j) {
    if (w[j] != 2 || bagged[j]) continue;
    open_bag(5, j);
  }

  for (int j = 0; j < m; ++j) {
    if (!bagged[j]) r.unbagged.push_back(j);
  }
  for (std::size_t b = 0; b < r.bags.size(); ++b) {
    auto& bag = r.bags[b];
    std::sort(bag.columns.begin(), bag.columns.end());
    if (bag.weight < 2 * static_cast<int>(bag.columns.size())) r.light_bags.push_back(static_cast<int>(b));
  }
  if (r.unbagged.empty() && r.light_bags.empty()) r.certified_bound = 2 * m;
  return r;
}

}  // namespace rdrd
