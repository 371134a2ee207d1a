#include "rdrd/json_io.hpp"

namespace rdrd {

namespace {

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"m", g.size()}, {"edges", std::move(edges)}};
}

Json to_json(const GraphStats& s) {
  Json j = {{"n", s.n},
            {"m", s.m},
            {"max_degree", s.max_degree},
            {"min_degree", s.min_degree},
            {"components", s.components},
            {"connected", s.connected},
            {"bipartite", s.bipartite}};
  j["two_coloring"] = s.two_coloring ? Json(*s.two_coloring) : Json(nullptr);
  return j;
}

Json to_json(const ChordalityReport& r) {
  Json j = {{"chordal", r.chordal}};
  if (r.chordal) {
    j["elimination_order"] = r.elimination_order;
  } else {
    j["chordless_cycle"] = r.chordless_cycle;
  }
  return j;
}

Json to_json(const ProductVertexMap& map) {
  static const char* kinds[] = {"strong", "cardinal", "corona"};
  Json coords = Json::array();
  for (auto [a, b] : map.coords) coords.push_back({a, b});
  return {{"kind", kinds[static_cast<int>(map.kind)]},
          {"left_order", map.left_order},
          {"right_order", map.right_order},
          {"coords", std::move(coords)}};
}

Json to_json(const Labeling& f) { return f.to_vector(); }

Json to_json(const ValidationReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"vertex", v.vertex}, {"rule", rule_name(v.rule)}, {"detail", v.detail}});
  }
  return {{"valid", r.valid}, {"violations", std::move(violations)}};
}

Json to_json(const SolveResult& r) {
  Json j = {{"value", r.value}, {"lower_bound", r.lower_bound}, {"optimal", r.optimal}};
  if (r.certificate.size() > 0) {
    j["certificate"] = to_json(r.certificate);
  } else {
    j["certificate"] = r.vertex_set;
  }
  j["nodes"] = r.nodes_explored;
  if (r.optimum_count) j["optimum_count"] = *r.optimum_count;
  return j;
}

Json to_json(const FormulaResult& r) {
  Json j = {{"family", catalog_family_name(r.family)}, {"params", r.params}, {"value", r.value},
            {"citation", r.citation}};
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (r.published_value) j["published_value"] = *r.published_value;
  return j;
}

Json to_json(const BoundsResult& r) {
  return {{"bound", bound_name(r.id)},
          {"lower", optional_int(r.lower)},
          {"upper", optional_int(r.upper)},
          {"citation", r.citation},
          {"ingredients", r.ingredients}};
}

Json to_json(const CrosscheckReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json j = {{"params", row.param_values},
              {"formula", optional_int(row.formula)},
              {"solver", optional_int(row.solver)},
              {"match", row.match},
              {"skipped", row.skipped}};
    if (row.published_value) j["published_value"] = *row.published_value;
    if (!row.note.empty()) j["note"] = row.note;
    rows.push_back(std::move(j));
  }
  return {{"family", catalog_family_name(r.family)},
          {"rows", std::move(rows)},
          {"matches", r.matches},
          {"mismatches", r.mismatches},
          {"skipped", r.skipped}};
}

Json to_json(const LemmaReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"column", c.column},
                      {"lhs", c.lhs},
                      {"value", c.value},
                      {"bound", c.bound},
                      {"holds", c.holds}});
  }
  Json j = {{"layout", layout_name(r.kind)},
            {"column_weights", r.column_weights},
            {"checks", std::move(checks)},
            {"pass", r.pass}};
  if (r.windows_ge8) j["windows_ge8"] = *r.windows_ge8;
  if (r.window9_consequence) j["window9_consequence"] = *r.window9_consequence;
  return j;
}

Json to_json(const BagReport& r) {
  Json bags = Json::array();
  for (const auto& b : r.bags) {
    bags.push_back({{"stage", b.stage}, {"columns", b.columns}, {"weight", b.weight}});
  }
  return {{"column_weights", r.column_weights},
          {"bags", std::move(bags)},
          {"unbagged", r.unbagged},
          {"light_bags", r.light_bags},
          {"certified_bound", optional_int(r.certified_bound)}};
}

Json to_json(const X3CInstance& inst) {
  Json triples = Json::array();
  for (const auto& t : inst.triples) triples.push_back({t[0], t[1], t[2]});
  return {{"q", inst.q}, {"triples", std::move(triples)}};
}

}  // namespace rdrd
