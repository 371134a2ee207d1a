#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "rdrd/error.hpp"
#include "rdrd/graph.hpp"

namespace rdrd {

namespace {

std::string_view strip_comment(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
  return line;
}

// Exactly two non-negative integers separated by whitespace.
bool parse_pair(std::string_view line, long long& a, long long& b) {
  std::istringstream in{std::string(line)};
  std::string extra;
  if (!(in >> a >> b)) return false;
  if (in >> extra) return false;
  return a >= 0 && b >= 0;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  int line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const auto raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    const auto line = strip_comment(raw);
    if (line.empty()) continue;
    long long a = 0;
    long long b = 0;
    if (!parse_pair(line, a, b)) {
      throw ParseError("expected two non-negative integers, got '" + std::string(line) + "'", line_no);
    }
    if (!have_header) {
      if (a > 1'000'000 || b > 100'000'000) throw ParseError("header values too large", line_no);
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) {
      throw ParseError("more edge lines than the declared " + std::to_string(m), line_no);
    }
    if (a >= n || b >= n) {
      throw ParseError("vertex index out of range for n=" + std::to_string(n), line_no);
    }
    if (a == b) throw ParseError("self-loop at vertex " + std::to_string(a), line_no);
    Edge e{static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b))};
    if (!seen.insert(e).second) {
      throw ParseError("duplicate edge " + std::to_string(e.first) + " " + std::to_string(e.second),
                       line_no);
    }
    edges.push_back(e);
  }
  if (!have_header) throw ParseError("missing 'n m' header", 0);
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError("declared " + std::to_string(m) + " edges but found " +
                         std::to_string(edges.size()),
                     line_no);
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

void save_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write graph file '" + path + "'");
  out << serialize_graph(g);
}

}  // namespace rdrd
