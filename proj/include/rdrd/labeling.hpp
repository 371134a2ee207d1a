#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rdrd/graph.hpp"

namespace rdrd {

/// Per-vertex label in {0, 1, 2, 3}.
class Labeling {
public:
  using Label = std::uint8_t;

  Labeling() = default;
  /// All vertices labeled `fill`.
  explicit Labeling(int n, int fill = 0);
  Labeling(std::initializer_list<int> labels);
  /// Throws ValidationError on a label outside {0,1,2,3}.
  explicit Labeling(std::span<const int> labels);

  [[nodiscard]] int size() const noexcept { return static_cast<int>(labels_.size()); }
  [[nodiscard]] int operator[](Vertex v) const { return labels_[v]; }
  void set(Vertex v, int label);

  [[nodiscard]] int weight() const noexcept;
  /// Preimages V0..V3, each sorted ascending.
  [[nodiscard]] std::array<std::vector<Vertex>, 4> partition() const;
  /// |V0|, |V1|, |V2|, |V3|.
  [[nodiscard]] std::array<int, 4> class_sizes() const;
  [[nodiscard]] std::vector<int> to_vector() const;

  friend bool operator==(const Labeling&, const Labeling&) = default;
  friend auto operator<=>(const Labeling&, const Labeling&) = default;

private:
  std::vector<Label> labels_;
};

int weight(const Labeling& f);

enum class Variant { rdrd, drd };

enum class Rule { zero_needs_defense, one_needs_strong_neighbor, zero_isolated_in_v0 };

std::string_view rule_name(Rule rule);

struct Violation {
  Vertex vertex = 0;
  Rule rule = Rule::zero_needs_defense;
  std::string detail;
};

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

/**
 * Checks every vertex against the defining rules and reports every violated
 * rule (no short-circuit):
 *  - label 0 needs a neighbor labeled 3 or two neighbors labeled 2;
 *  - label 1 needs a neighbor labeled >= 2;
 *  - RDRD only: label 0 needs a neighbor labeled 0.
 *
 * Throws ValidationError when the labeling length differs from the order.
 */
ValidationReport validate(const Graph& g, const Labeling& f, Variant variant = Variant::rdrd);

/// Shorthand for validate(...).valid.
bool is_valid(const Graph& g, const Labeling& f, Variant variant = Variant::rdrd);

/// Accepts `{"labels":[...]}` or whitespace-separated integers.
Labeling parse_labeling(std::string_view text);
Labeling load_labeling_file(const std::string& path);

}  // namespace rdrd
