#include "nodebal/instance.h"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "nodebal/errors.h"

namespace nodebal {

namespace {

constexpr long long kMaxVertices = 10'000'000;

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

long long parse_integer(std::string_view token, int line) {
  long long value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

Vertex parse_vertex(std::string_view token, int n, int line) {
  const long long v = parse_integer(token, line);
  if (v < 0 || v >= n) {
    throw ParseError(line, "vertex id " + std::string(token) + " outside [0, " +
                               std::to_string(n) + ")");
  }
  return static_cast<Vertex>(v);
}

}  // namespace

Hypergraph Instance::as_hypergraph() const {
  if (is_hypergraph()) return std::get<Hypergraph>(structure);
  return Hypergraph::from_graph(graph());
}

Instance parse_instance(std::string_view text) {
  int n = -1;
  bool hyper = false;
  std::vector<Edge> graph_edges;
  std::set<Edge> seen_edges;
  // Every edge in input order; `e` lines are recorded here too so a mixed
  // file keeps its line order as hyperedge ids.
  std::vector<std::vector<Vertex>> all_edges;
  std::vector<Count> weights;
  std::vector<bool> weight_seen;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find('\n', pos);
    if (next == std::string_view::npos) next = text.size();
    const std::string_view line = text.substr(pos, next - pos);
    pos = next + 1;
    ++line_no;

    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (next == text.size()) break;
      continue;
    }
    const std::string_view directive = tokens.front();

    if (n < 0) {
      if (directive != "graph") {
        throw ParseError(line_no, "first directive must be 'graph <n>'");
      }
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'graph <n>'");
      const long long count = parse_integer(tokens[1], line_no);
      if (count < 0 || count > kMaxVertices) {
        throw ParseError(line_no, "vertex count out of range");
      }
      n = static_cast<int>(count);
      weights.assign(static_cast<std::size_t>(n), 0);
      weight_seen.assign(static_cast<std::size_t>(n), false);
    } else if (directive == "graph") {
      throw ParseError(line_no, "duplicate 'graph' directive");
    } else if (directive == "e") {
      if (tokens.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
      Vertex u = parse_vertex(tokens[1], n, line_no);
      Vertex v = parse_vertex(tokens[2], n, line_no);
      if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
      if (!seen_edges.insert({u, v}).second) {
        throw ParseError(line_no, "duplicate edge {" + std::to_string(u) + "," +
                                      std::to_string(v) + "}");
      }
      graph_edges.push_back({u, v});
      all_edges.push_back({u, v});
    } else if (directive == "h") {
      if (tokens.size() < 2) throw ParseError(line_no, "hyperedge needs at least one vertex");
      std::vector<Vertex> members;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        members.push_back(parse_vertex(tokens[i], n, line_no));
      }
      std::set<Vertex> unique(members.begin(), members.end());
      if (unique.size() != members.size()) {
        throw ParseError(line_no, "hyperedge repeats a vertex");
      }
      hyper = true;
      all_edges.push_back(std::move(members));
    } else if (directive == "w") {
      if (tokens.size() != 3) throw ParseError(line_no, "expected 'w <v> <weight>'");
      const Vertex v = parse_vertex(tokens[1], n, line_no);
      const long long value = parse_integer(tokens[2], line_no);
      if (value < 0) throw ParseError(line_no, "negative weight");
      if (weight_seen[static_cast<std::size_t>(v)]) {
        throw ParseError(line_no, "second weight line for vertex " + std::to_string(v));
      }
      weight_seen[static_cast<std::size_t>(v)] = true;
      weights[static_cast<std::size_t>(v)] = value;
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(directive) + "'");
    }
    if (next == text.size()) break;
  }
  if (n < 0) throw ParseError(0, "missing 'graph <n>' directive");

  Instance out{Graph(), WeightAssignment(std::move(weights))};
  if (hyper) {
    out.structure = Hypergraph(n, std::move(all_edges));
  } else {
    out.structure = Graph(n, std::move(graph_edges));
  }
  return out;
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

std::string serialize_instance(const Instance& instance) {
  std::ostringstream out;
  if (instance.is_hypergraph()) {
    const auto& h = std::get<Hypergraph>(instance.structure);
    out << "graph " << h.num_vertices() << '\n';
    for (const auto& e : h.edges()) {
      out << 'h';
      for (Vertex v : e) out << ' ' << v;
      out << '\n';
    }
  } else {
    const Graph& g = instance.graph();
    out << "graph " << g.num_vertices() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  }
  for (int v = 0; v < instance.weights.size(); ++v) {
    if (instance.weights[v] != 0) out << "w " << v << ' ' << instance.weights[v] << '\n';
  }
  return out.str();
}

}  // namespace nodebal
