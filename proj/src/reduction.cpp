#include "rdrd/reduction.hpp"

#include <algorithm>

#include <json.hpp>

#include "rdrd/error.hpp"

namespace rdrd {

void validate_instance(const X3CInstance& inst) {
  if (inst.q < 1) throw ValidationError("X3C instance needs q >= 1");
  if (inst.triples.empty()) throw ValidationError("X3C instance needs at least one triple");
  const int universe = 3 * inst.q;
  for (std::size_t j = 0; j < inst.triples.size(); ++j) {
    auto t = inst.triples[j];
    for (int e : t) {
      if (e < 0 || e >= universe) {
        throw ValidationError("triple " + std::to_string(j) + " has element " + std::to_string(e) +
                              " outside 0.." + std::to_string(universe - 1));
      }
    }
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2]) {
      throw ValidationError("triple " + std::to_string(j) + " repeats an element");
    }
  }
}

X3CInstance parse_x3c_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("X3C JSON: ") + e.what(), 0);
  }
  X3CInstance inst;
  try {
    inst.q = doc.at("q").get<int>();
    for (const auto& t : doc.at("triples")) {
      if (!t.is_array() || t.size() != 3) throw ParseError("each triple must have 3 elements", 0);
      inst.triples.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("X3C JSON: ") + e.what(), 0);
  }
  validate_instance(inst);
  return inst;
}

std::string x3c_to_json(const X3CInstance& inst) {
  nlohmann::json doc;
  doc["q"] = inst.q;
  doc["triples"] = nlohmann::json::array();
  for (const auto& t : inst.triples) doc["triples"].push_back({t[0], t[1], t[2]});
  return doc.dump();
}

std::string role_name(const Role& role) {
  switch (role.kind) {
    case RoleKind::x: return "x" + std::to_string(role.index);
    case RoleKind::y: return "y" + std::to_string(role.index);
    case RoleKind::c: return "c" + std::to_string(role.index);
    case RoleKind::c_prime: return "c'" + std::to_string(role.index);
    case RoleKind::z: return "z";
    case RoleKind::z_aux: return "z" + std::to_string(role.index);
  }
  return "?";
}

Reduction build_reduction(const X3CInstance& inst) {
  validate_instance(inst);
  Reduction r;
  r.instance = inst;
  const int q = inst.q;
  const int t = static_cast<int>(inst.triples.size());
  const int n = 6 * q + 2 * t + 5;
  r.k = 8 * q + 3;

  r.roles.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < 3 * q; ++i) {
    r.roles[r.x(i)] = {RoleKind::x, i};
    r.roles[r.y(i)] = {RoleKind::y, i};
  }
  for (int j = 0; j < t; ++j) {
    r.roles[r.c(j)] = {RoleKind::c, j};
    r.roles[r.c_prime(j)] = {RoleKind::c_prime, j};
  }
  r.roles[r.z()] = {RoleKind::z, 0};
  for (int a = 1; a <= 4; ++a) r.roles[r.z_aux(a)] = {RoleKind::z_aux, a};

  std::vector<Edge> es;
  for (int i = 0; i < 3 * q; ++i) es.emplace_back(r.x(i), r.y(i));
  for (int j = 0; j < t; ++j) {
    for (int e : inst.triples[j]) {
      es.emplace_back(r.x(e), r.c(j));
      es.emplace_back(r.x(e), r.c_prime(j));
    }
  }
  std::vector<Vertex> clique;
  for (int j = 0; j < t; ++j) clique.push_back(r.c(j));
  for (int j = 0; j < t; ++j) clique.push_back(r.c_prime(j));
  for (std::size_t a = 0; a < clique.size(); ++a) {
    for (std::size_t b = a + 1; b < clique.size(); ++b) es.emplace_back(clique[a], clique[b]);
    es.emplace_back(clique[a], r.z());
  }
  es.emplace_back(r.z(), r.z_aux(1));
  es.emplace_back(r.z(), r.z_aux(2));
  es.emplace_back(r.z_aux(1), r.z_aux(2));
  es.emplace_back(r.z(), r.z_aux(3));
  es.emplace_back(r.z(), r.z_aux(4));
  es.emplace_back(r.z_aux(3), r.z_aux(4));
  r.graph = Graph::from_edges(n, es);
  return r;
}

namespace {

// Empty string when `cover` is an exact cover, else a description of the defect.
std::string cover_defect(const X3CInstance& inst, const std::vector<int>& cover) {
  const int t = static_cast<int>(inst.triples.size());
  std::vector<int> hits(static_cast<std::size_t>(3 * inst.q), 0);
  for (int j : cover) {
    if (j < 0 || j >= t) return "triple index " + std::to_string(j) + " out of range";
    for (int e : inst.triples[j]) ++hits[e];
  }
  for (int e = 0; e < 3 * inst.q; ++e) {
    if (hits[e] == 0) return "element " + std::to_string(e) + " uncovered";
    if (hits[e] > 1) return "element " + std::to_string(e) + " covered " + std::to_string(hits[e]) + " times";
  }
  return {};
}

}  // namespace

Labeling cover_to_labeling(const Reduction& r, const std::vector<int>& cover) {
  if (auto defect = cover_defect(r.instance, cover); !defect.empty()) {
    throw ValidationError("not an exact cover: " + defect);
  }
  Labeling f(r.graph.order());
  f.set(r.z(), 3);
  for (int i = 0; i < 3 * r.instance.q; ++i) f.set(r.y(i), 2);
  for (int j : cover) f.set(r.c(j), 2);
  return f;
}

CoverExtraction labeling_to_cover(const Reduction& r, const Labeling& f) {
  const auto report = validate(r.graph, f);
  if (!report.valid) throw ValidationError("labeling is not an RDRD labeling of the reduction graph");
  if (f.weight() > r.k) {
    throw ValidationError("labeling weight " + std::to_string(f.weight()) + " exceeds k = " +
                          std::to_string(r.k));
  }
  CoverExtraction out;
  const int t = static_cast<int>(r.instance.triples.size());
  for (int j = 0; j < t; ++j) {
    if (f[r.c(j)] >= 2 || f[r.c_prime(j)] >= 2) out.cover.push_back(j);
  }
  out.status = cover_defect(r.instance, out.cover).empty() ? CoverExtraction::Status::exact_cover
                                                           : CoverExtraction::Status::not_normalized;
  return out;
}

namespace {

bool extend_cover(const X3CInstance& inst, int from, std::vector<bool>& used, int covered,
                  std::vector<int>& chosen) {
  if (covered == 3 * inst.q) return true;
  const int t = static_cast<int>(inst.triples.size());
  for (int j = from; j < t; ++j) {
    const auto& tri = inst.triples[j];
    if (used[tri[0]] || used[tri[1]] || used[tri[2]]) continue;
    for (int e : tri) used[e] = true;
    chosen.push_back(j);
    if (extend_cover(inst, j + 1, used, covered + 3, chosen)) return true;
    chosen.pop_back();
    for (int e : tri) used[e] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> x3c_brute(const X3CInstance& inst) {
  validate_instance(inst);
  std::vector<bool> used(static_cast<std::size_t>(3 * inst.q), false);
  std::vector<int> chosen;
  if (extend_cover(inst, 0, used, 0, chosen)) return chosen;
  return std::nullopt;
}

}  // namespace rdrd
