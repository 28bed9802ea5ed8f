#include "corpex/network.hpp"

#include <algorithm>
#include <map>

#include <fmt/format.h>
#include "json.hpp"

#include "corpex/error.hpp"
#include "corpex/text.hpp"

namespace corpex {

WordNetwork build_network(const NodeSpec& center,
                          std::span<const RelationTable> tables, std::size_t top) {
  const auto self = node_lemmas(center);
  std::map<std::string, NetworkEdge> merged;
  for (const auto& table : tables) {
    const std::size_t take = std::min(top, table.rows.size());
    for (std::size_t i = 0; i < take; ++i) {
      const CollocateRow& row = table.rows[i];
      if (std::find(self.begin(), self.end(), row.collocate) != self.end()) continue;
      const double w = row.weight();
      auto [it, fresh] = merged.try_emplace(row.collocate);
      NetworkEdge& e = it->second;
      if (fresh) {
        e.collocate = row.collocate;
        e.weight = w;
        e.co_f = row.co_f;
      } else if (w > e.weight) {
        e.weight = w;
        e.co_f = row.co_f;
      }
      if (std::find(e.relations.begin(), e.relations.end(), row.relation) ==
          e.relations.end()) {
        e.relations.push_back(row.relation);
      }
    }
  }
  WordNetwork net;
  net.center = center;
  for (auto& [_, e] : merged) {
    std::sort(e.relations.begin(), e.relations.end());
    net.edges.push_back(std::move(e));
  }
  return net;
}

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "dot") return GraphFormat::Dot;
  if (name == "json" || name == "json-graph") return GraphFormat::JsonGraph;
  throw Error(Errc::UnknownFormat, "graph format '" + std::string(name) + "'");
}

namespace {

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string emit_dot(const WordNetwork& net) {
  const std::string center = to_string(net.center);
  double lo = 0.0, hi = 0.0;
  if (!net.edges.empty()) {
    const auto [mn, mx] = std::minmax_element(
        net.edges.begin(), net.edges.end(),
        [](const NetworkEdge& a, const NetworkEdge& b) { return a.weight < b.weight; });
    lo = mn->weight;
    hi = mx->weight;
  }
  const auto penwidth = [&](double w) {
    if (hi - lo <= 0.0) return 3.0;
    return 1.0 + 4.0 * (w - lo) / (hi - lo);
  };

  std::string out = "graph word_network {\n";
  out += fmt::format("  {} [shape=doublecircle];\n", dot_quote(center));
  for (const auto& e : net.edges) {
    out += fmt::format("  {} [shape=ellipse];\n", dot_quote(e.collocate));
  }
  for (const auto& e : net.edges) {
    out += fmt::format("  {} -- {} [label={}, weight={:.4f}, co_f={}, penwidth={:.2f}];\n",
                       dot_quote(center), dot_quote(e.collocate),
                       dot_quote(join(e.relations, "|")), e.weight, e.co_f,
                       penwidth(e.weight));
  }
  out += "}\n";
  return out;
}

std::string emit_json(const WordNetwork& net) {
  using nlohmann::ordered_json;
  const std::string center = to_string(net.center);
  ordered_json j;
  j["center"] = center;
  ordered_json nodes = ordered_json::array();
  nodes.push_back({{"id", center}, {"label", center}});
  for (const auto& e : net.edges) {
    nodes.push_back({{"id", e.collocate}, {"label", e.collocate}});
  }
  ordered_json links = ordered_json::array();
  for (const auto& e : net.edges) {
    links.push_back({{"source", center},
                     {"target", e.collocate},
                     {"relation", join(e.relations, "|")},
                     {"weight", e.weight},
                     {"co_f", e.co_f}});
  }
  j["nodes"] = std::move(nodes);
  j["links"] = std::move(links);
  return j.dump(2) + "\n";
}

}  // namespace

std::string emit_graph(const WordNetwork& network, GraphFormat format) {
  return format == GraphFormat::Dot ? emit_dot(network) : emit_json(network);
}

WordNetwork parse_json_graph(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    WordNetwork net;
    // The schema carries only the printed center; its kind follows from the
    // printed form (two words, all-uppercase, or a plain lemma).
    const auto center = j.at("center").get<std::string>();
    NodeKind kind = NodeKind::Lemma;
    if (center.find(' ') != std::string::npos) {
      kind = NodeKind::Bigram;
    } else if (text::is_ascii_alpha(center) && text::ascii_upper(center) == center) {
      kind = NodeKind::Initialism;
    }
    net.center = make_node(center, kind);
    for (const auto& l : j.at("links")) {
      NetworkEdge e;
      e.collocate = l.at("target").get<std::string>();
      const auto rel = l.at("relation").get<std::string>();
      for (std::size_t start = 0;;) {
        const auto bar = rel.find('|', start);
        e.relations.push_back(rel.substr(start, bar - start));
        if (bar == std::string::npos) break;
        start = bar + 1;
      }
      e.weight = l.at("weight").get<double>();
      e.co_f = l.at("co_f").get<std::uint64_t>();
      net.edges.push_back(std::move(e));
    }
    return net;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(Errc::UnknownFormat, std::string("bad JSON graph: ") + ex.what());
  }
}

}  // namespace corpex
