#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rdrd/graph.hpp"
#include "rdrd/labeling.hpp"

namespace rdrd {

enum class LayoutKind { strong_strip, c3xcm, corona_path, corona_cycle };

/**
 * Column structure of a strip-like graph.
 *
 *   strong_strip: P_rows ⊠ P_m, column j = {i * m + j : i < rows}
 *   c3xcm:        C_3 × C_m,   column j = {i * m + j : i < 3}, cyclic
 *   corona_*:     G ⊙ K1 with G = P_n or C_n, column j = {j, n + j}
 */
struct StripLayout {
  LayoutKind kind = LayoutKind::c3xcm;
  int rows = 3;
  int columns = 0;

  static StripLayout strong_strip(int rows, int m);
  static StripLayout c3xcm(int m);
  static StripLayout corona_path(int n);
  static StripLayout corona_cycle(int n);

  [[nodiscard]] int order() const;
  [[nodiscard]] bool cyclic() const { return kind == LayoutKind::c3xcm || kind == LayoutKind::corona_cycle; }
  [[nodiscard]] std::vector<Vertex> column(int j) const;
  /// Graph the layout describes, with the numbering above.
  [[nodiscard]] Graph graph() const;
};

std::string layout_name(LayoutKind kind);
/// "strong_strip", "c3xcm", "corona_path", "corona_cycle".
LayoutKind parse_layout_kind(std::string_view name);

std::vector<int> column_weights(const StripLayout& layout, const Labeling& f);

struct InequalityCheck {
  std::string name;      // e.g. "window", "end", "L1"
  int column = 0;        // anchor column
  std::string lhs;       // evaluated expression
  int value = 0;
  int bound = 0;
  bool holds = true;
};

struct LemmaReport {
  LayoutKind kind = LayoutKind::c3xcm;
  std::vector<int> column_weights;
  std::vector<InequalityCheck> checks;
  bool pass = true;
  /// Corona strips only: number of three-column windows summing to at least 8.
  std::optional<int> windows_ge8;
  /// Corona cycles only: a window of sum >= 9 implies 3 w(f) >= 7n + 2.
  std::optional<bool> window9_consequence;
};

/// Throws ValidationError if f is not an RDRD labeling of layout.graph().
LemmaReport audit_columns(const StripLayout& layout, const Labeling& f);

struct Bag {
  int stage = 0;  // 1..5
  std::vector<int> columns;
  int weight = 0;
};

struct BagReport {
  std::vector<int> column_weights;
  std::vector<Bag> bags;
  std::vector<int> unbagged;
  /// Bags whose weight is below twice their column count.
  std::vector<int> light_bags;
  std::optional<int> certified_bound;  // 2m on success
};

/// Runs the five bagging stages on a C_3 × C_m labeling; layout must be c3xcm.
/// Throws ValidationError if f is not an RDRD labeling.
BagReport bagging_certificate(const StripLayout& layout, const Labeling& f);

}  // namespace rdrd
