#include <functional>
#include <regex>

#include "doctest.h"

#include "corpex/error.hpp"
#include "corpex/network.hpp"
#include "corpex/sketch.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace corpex;

namespace {

CollocateRow row(std::string lemma, std::string rel, double score, std::uint64_t co_f,
                 std::optional<double> share = std::nullopt) {
  CollocateRow r;
  r.collocate = std::move(lemma);
  r.relation = std::move(rel);
  r.log_dice = score;
  r.co_f = co_f;
  r.share = share;
  return r;
}

}  // namespace

TEST_CASE("network merges rows per collocate") {
  const NodeSpec vr = make_node("VR", NodeKind::Initialism);
  const std::vector<RelationTable> tables = {
      {"modifier_of", {row("oculus", "modifier_of", 12.0, 4), row("vr", "modifier_of", 13.0, 9),
                       row("sony", "modifier_of", 11.0, 2), row("cheap", "modifier_of", 5.0, 1)}},
      {"noun_modified_by", {row("headset", "noun_modified_by", 13.5, 8),
                            row("oculus", "noun_modified_by", 12.5, 3)}},
      {"and_or", {row("ar", "and_or", 12.2, 3)}},
      {"prep_phrase", {row("in", "prep_phrase_pre", 0, 3, 30.0), row("in", "prep_phrase_post", 0, 1, 10.0)}},
  };
  const WordNetwork net = build_network(vr, tables, 3);
  CHECK(net.center == vr);
  std::vector<std::string> names;
  for (const auto& e : net.edges) names.push_back(e.collocate);
  CHECK(names == std::vector<std::string>{"ar", "headset", "in", "oculus", "sony"});
  const auto& oculus = net.edges[3];
  CHECK(oculus.relations == std::vector<std::string>{"modifier_of", "noun_modified_by"});
  CHECK(oculus.weight == 12.5);
  CHECK(oculus.co_f == 3);
  const auto& in = net.edges[2];
  CHECK(in.relations == std::vector<std::string>{"prep_phrase_post", "prep_phrase_pre"});
  CHECK(in.weight == 30.0);
  CHECK(in.co_f == 3);
  CHECK(build_network(vr, tables, 0).edges.empty());
}

TEST_CASE("dot output") {
  const Scope focus = support::fixture_focus();
  const NodeSpec vr = make_node("virtual reality", NodeKind::Bigram);
  const Sketch s = sketch(focus, vr, {});
  const WordNetwork net = build_network(vr, s.tables, 15);
  REQUIRE(net.edges.size() >= 2);
  const std::string dot = emit_graph(net, GraphFormat::Dot);
  CHECK(dot.rfind("graph word_network {\n  \"virtual reality\" [shape=doublecircle];\n", 0) == 0);
  CHECK(dot.substr(dot.size() - 2) == "}\n");

  const std::regex edge(R"re(  "virtual reality" -- "([^"]+)" \[label="([a-z_|]+)", weight=([0-9.]+), co_f=([0-9]+), penwidth=([0-9.]+)\];)re");
  std::size_t edges = 0;
  double lo = 10, hi = 0;
  for (auto it = std::sregex_iterator(dot.begin(), dot.end(), edge); it != std::sregex_iterator(); ++it) {
    const double pen = std::stod((*it)[5]);
    lo = std::min(lo, pen);
    hi = std::max(hi, pen);
    CHECK(std::stod((*it)[3]) == doctest::Approx(net.edges[edges].weight).epsilon(1e-4));
    CHECK((*it)[1] == net.edges[edges].collocate);
    ++edges;
  }
  CHECK(edges == net.edges.size());
  CHECK(lo == 1.0);
  CHECK(hi == 5.0);

  WordNetwork flat = net;
  for (auto& e : flat.edges) e.weight = 7.0;
  CHECK(emit_graph(flat, GraphFormat::Dot).find("penwidth=3.00") != std::string::npos);

  WordNetwork quoted;
  quoted.center = make_node("x", NodeKind::Lemma);
  quoted.edges.push_back({"say \"hi\"", {"and_or"}, 10.0, 1});
  CHECK(emit_graph(quoted, GraphFormat::Dot).find(R"("say \"hi\"")") != std::string::npos);
}

TEST_CASE("json graph schema and round trip") {
  const Scope focus = support::fixture_focus();
  for (const NodeSpec& node : {make_node("VR", NodeKind::Initialism),
                               make_node("virtual reality", NodeKind::Bigram),
                               make_node("anxiety", NodeKind::Lemma)}) {
    const WordNetwork net = build_network(node, sketch(focus, node, {}).tables, 15);
    const std::string text = emit_graph(net, GraphFormat::JsonGraph);
    const auto j = nlohmann::ordered_json::parse(text);
    std::vector<std::string> keys;
    for (const auto& [k, _] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"center", "nodes", "links"});
    CHECK(j["nodes"].size() == net.edges.size() + 1);
    CHECK(j["links"].size() == net.edges.size());
    for (const auto& l : j["links"]) {
      std::vector<std::string> lk;
      for (const auto& [k, _] : l.items()) lk.push_back(k);
      CHECK(lk == std::vector<std::string>{"source", "target", "relation", "weight", "co_f"});
    }
    CHECK(parse_json_graph(text) == net);
  }
}

TEST_CASE("graph format names") {
  CHECK(parse_graph_format("dot") == GraphFormat::Dot);
  CHECK(parse_graph_format("json") == GraphFormat::JsonGraph);
  CHECK(parse_graph_format("json-graph") == GraphFormat::JsonGraph);
  try {
    parse_graph_format("graphml");
    FAIL("parsed");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownFormat);
  }
  try {
    parse_json_graph("{\"center\": 1}");
    FAIL("parsed");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownFormat);
  }
}
