#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "corpex/node.hpp"
#include "corpex/sketch.hpp"

namespace corpex {

struct NetworkEdge {
  std::string collocate;
  std::vector<std::string> relations;  // sorted, unique
  double weight = 0.0;
  std::uint64_t co_f = 0;

  friend bool operator==(const NetworkEdge&, const NetworkEdge&) = default;
};

/// Node-centred word network; edges are sorted by collocate.
struct WordNetwork {
  NodeSpec center;
  std::vector<NetworkEdge> edges;

  friend bool operator==(const WordNetwork&, const WordNetwork&) = default;
};

/// Takes the first `top` rows of every table and merges rows that share a
/// collocate: the edge keeps the largest weight (and that row's co_f) and
/// the union of relation labels. Rows naming the center's own lemmas are
/// dropped.
WordNetwork build_network(const NodeSpec& center,
                          std::span<const RelationTable> tables, std::size_t top);

enum class GraphFormat { Dot, JsonGraph };

/// "dot" or "json" / "json-graph"; throws UnknownFormat otherwise.
GraphFormat parse_graph_format(std::string_view name);

std::string emit_graph(const WordNetwork& network, GraphFormat format);

/// Reads back the JSON-graph form.
WordNetwork parse_json_graph(std::string_view text);

}  // namespace corpex
