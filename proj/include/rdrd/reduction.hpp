#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rdrd/graph.hpp"
#include "rdrd/labeling.hpp"

namespace rdrd {

/// Exact cover by 3-sets over the universe 0..3q-1.
struct X3CInstance {
  int q = 0;
  std::vector<std::array<int, 3>> triples;
};

/// Throws ValidationError unless q >= 1, the list is nonempty and every
/// triple has three distinct in-range elements.
void validate_instance(const X3CInstance& inst);

X3CInstance parse_x3c_json(std::string_view text);
std::string x3c_to_json(const X3CInstance& inst);

enum class RoleKind { x, y, c, c_prime, z, z_aux };

struct Role {
  RoleKind kind = RoleKind::x;
  int index = 0;  // element, triple, or 1..4 for z_aux
};

std::string role_name(const Role& role);

/**
 * Vertex layout (0-based elements i, triples j):
 *   x_i = i, y_i = 3q + i, c_j = 6q + j, c'_j = 6q + t + j,
 *   z = 6q + 2t, z_1..z_4 = 6q + 2t + 1 .. 6q + 2t + 4.
 */
struct Reduction {
  X3CInstance instance;
  Graph graph;
  int k = 0;  // 8q + 3
  std::vector<Role> roles;

  [[nodiscard]] Vertex x(int i) const { return i; }
  [[nodiscard]] Vertex y(int i) const { return 3 * instance.q + i; }
  [[nodiscard]] Vertex c(int j) const { return 6 * instance.q + j; }
  [[nodiscard]] Vertex c_prime(int j) const {
    return 6 * instance.q + static_cast<int>(instance.triples.size()) + j;
  }
  [[nodiscard]] Vertex z() const { return 6 * instance.q + 2 * static_cast<int>(instance.triples.size()); }
  [[nodiscard]] Vertex z_aux(int a) const { return z() + a; }  // a in 1..4
};

Reduction build_reduction(const X3CInstance& inst);

/// 3 on z, 2 on every y_i and on c_j for chosen j, 0 elsewhere.
/// Throws ValidationError naming an uncovered or over-covered element.
Labeling cover_to_labeling(const Reduction& r, const std::vector<int>& cover);

struct CoverExtraction {
  enum class Status { exact_cover, not_normalized };
  Status status = Status::not_normalized;
  /// Candidate {j : f(c_j) >= 2 or f(c'_j) >= 2}, ascending.
  std::vector<int> cover;
};

/// Requires f to be a valid RDRD labeling of weight <= k (else ValidationError).
CoverExtraction labeling_to_cover(const Reduction& r, const Labeling& f);

/// Lexicographically first exact cover (as an ascending index list), if any.
std::optional<std::vector<int>> x3c_brute(const X3CInstance& inst);

}  // namespace rdrd
