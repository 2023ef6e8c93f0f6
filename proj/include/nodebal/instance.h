#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "nodebal/graph.h"
#include "nodebal/hypergraph.h"
#include "nodebal/weights.h"

namespace nodebal {

// A weighted graph or hypergraph as read from an instance file.
//
// Format, one directive per line, `#` starts a comment line:
//   graph <n>            exactly once, first non-comment line
//   e <u> <v>            graph edge
//   h <v1> ... <vk>      hyperedge, k >= 1
//   w <v> <weight>       non-negative weight, default 0, once per vertex
// Any `h` line makes the instance a hypergraph; `e` lines then become
// 2-element hyperedges.
struct Instance {
  std::variant<Graph, Hypergraph> structure;
  WeightAssignment weights;

  bool is_hypergraph() const { return std::holds_alternative<Hypergraph>(structure); }
  const Graph& graph() const { return std::get<Graph>(structure); }
  // The hypergraph view; graphs are converted to their 2-uniform form.
  Hypergraph as_hypergraph() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

Instance parse_instance(std::string_view text);

// Reads and parses a file. Unreadable files raise ParseError with line 0.
Instance read_instance_file(const std::string& path);

// Inverse of parse_instance. Graphs use `e` lines, hypergraphs `h` lines;
// only nonzero weights are written.
std::string serialize_instance(const Instance& instance);

}  // namespace nodebal
