#include "rdrd/labeling.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "rdrd/error.hpp"

namespace rdrd {

namespace {

Labeling::Label checked(int label) {
  if (label < 0 || label > 3) {
    throw ValidationError("label " + std::to_string(label) + " is outside {0,1,2,3}");
  }
  return static_cast<Labeling::Label>(label);
}

}  // namespace

Labeling::Labeling(int n, int fill) : labels_(static_cast<std::size_t>(n), checked(fill)) {}

Labeling::Labeling(std::initializer_list<int> labels) {
  labels_.reserve(labels.size());
  for (int l : labels) labels_.push_back(checked(l));
}

Labeling::Labeling(std::span<const int> labels) {
  labels_.reserve(labels.size());
  for (int l : labels) labels_.push_back(checked(l));
}

void Labeling::set(Vertex v, int label) { labels_.at(static_cast<std::size_t>(v)) = checked(label); }

int Labeling::weight() const noexcept {
  return std::accumulate(labels_.begin(), labels_.end(), 0);
}

std::array<std::vector<Vertex>, 4> Labeling::partition() const {
  std::array<std::vector<Vertex>, 4> parts;
  for (Vertex v = 0; v < size(); ++v) parts[labels_[v]].push_back(v);
  return parts;
}

std::array<int, 4> Labeling::class_sizes() const {
  std::array<int, 4> sizes{};
  for (auto l : labels_) ++sizes[l];
  return sizes;
}

std::vector<int> Labeling::to_vector() const { return {labels_.begin(), labels_.end()}; }

int weight(const Labeling& f) { return f.weight(); }

std::string_view rule_name(Rule rule) {
  switch (rule) {
    case Rule::zero_needs_defense: return "ZERO_NEEDS_DEFENSE";
    case Rule::one_needs_strong_neighbor: return "ONE_NEEDS_STRONG_NEIGHBOR";
    case Rule::zero_isolated_in_v0: return "ZERO_ISOLATED_IN_V0";
  }
  return "UNKNOWN";
}

ValidationReport validate(const Graph& g, const Labeling& f, Variant variant) {
  if (f.size() != g.order()) {
    throw ValidationError("labeling has " + std::to_string(f.size()) + " entries but graph has " +
                          std::to_string(g.order()) + " vertices");
  }
  ValidationReport report;
  for (Vertex v = 0; v < g.order(); ++v) {
    const int label = f[v];
    if (label >= 2) continue;
    int threes = 0;
    int twos = 0;
    int zeros = 0;
    for (Vertex w : g.neighbors(v)) {
      switch (f[w]) {
        case 0: ++zeros; break;
        case 2: ++twos; break;
        case 3: ++threes; break;
        default: break;
      }
    }
    if (label == 0) {
      if (threes == 0 && twos < 2) {
        report.violations.push_back(
            {v, Rule::zero_needs_defense,
             "vertex " + std::to_string(v) + " has label 0 but " + std::to_string(threes) +
                 " neighbor(s) labeled 3 and " + std::to_string(twos) + " labeled 2"});
      }
      if (variant == Variant::rdrd && zeros == 0) {
        report.violations.push_back({v, Rule::zero_isolated_in_v0,
                                     "vertex " + std::to_string(v) +
                                         " has label 0 but no neighbor labeled 0"});
      }
    } else if (threes + twos == 0) {
      report.violations.push_back({v, Rule::one_needs_strong_neighbor,
                                   "vertex " + std::to_string(v) +
                                       " has label 1 but no neighbor labeled 2 or 3"});
    }
  }
  report.valid = report.violations.empty();
  return report;
}

bool is_valid(const Graph& g, const Labeling& f, Variant variant) {
  return validate(g, f, variant).valid;
}

Labeling parse_labeling(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("labeling JSON: ") + e.what(), 0);
    }
    if (!doc.contains("labels") || !doc["labels"].is_array()) {
      throw ParseError("labeling JSON must have a \"labels\" array", 0);
    }
    std::vector<int> values;
    for (const auto& item : doc["labels"]) {
      if (!item.is_number_integer()) throw ParseError("labels must be integers", 0);
      values.push_back(item.get<int>());
    }
    return Labeling(values);
  }
  std::istringstream in{std::string(text)};
  std::vector<int> values;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw ParseError("bad label '" + token + "'", 0);
    values.push_back(value);
  }
  return Labeling(values);
}

Labeling load_labeling_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open labeling file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_labeling(buffer.str());
}

}  // namespace rdrd
