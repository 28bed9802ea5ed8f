#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "doctest.h"

#include "corpex/error.hpp"
#include "corpex/sketch.hpp"
#include "corpex/tokenize.hpp"
#include "support.hpp"

using namespace corpex;

namespace {

using Named = std::map<std::pair<std::string, std::string>, std::uint64_t>;

Named named(const Index& index, const RelationMatches& m) {
  Named out;
  for (const auto& c : m.counts) {
    out[{std::string(relation_name(c.relation)), index.lemmas().at(c.lemma)}] = c.count;
  }
  return out;
}

/// Builds a one-document index from "surface/TAG" words; "|" starts a sentence.
Index tagged(const std::string& text) {
  ParsedDocument d;
  d.meta.id = "t";
  std::istringstream in(text);
  std::string word;
  bool start = true;
  while (in >> word) {
    if (word == "|") {
      start = true;
      continue;
    }
    const auto slash = word.rfind('/');
    const std::string surface = word.substr(0, slash);
    if (start) d.sentence_starts.push_back(static_cast<std::uint32_t>(d.tokens.size()));
    start = false;
    d.tokens.push_back({surface, surface, *parse_pos(word.substr(slash + 1)), 0});
  }
  return build_index({d}, 1);
}

}  // namespace

TEST_CASE("relation names and patterns") {
  CHECK(relation_name(Relation::ModifierOf) == "modifier_of");
  CHECK(relation_name(Relation::NounModifiedBy) == "noun_modified_by");
  CHECK(relation_name(Relation::AndOr) == "and_or");
  CHECK(relation_name(Relation::PrepPhrasePre) == "prep_phrase_pre");
  CHECK(relation_name(Relation::PrepPhrasePost) == "prep_phrase_post");
  const auto& p = sketch_patterns();
  CHECK(p.size() == 6);
  for (const auto& pat : p) {
    CHECK(std::count_if(pat.pattern.begin(), pat.pattern.end(),
                        [](const Slot& s) { return s.kind == Slot::Kind::Node; }) == 1);
    REQUIRE(pat.captured_slot < pat.pattern.size());
    CHECK(pat.pattern[pat.captured_slot].kind == Slot::Kind::Token);
  }
  CHECK(closed_prepositions().size() == 10);
}

TEST_CASE("relation matches equal the reference script's table") {
  const Index& index = support::fixture_index();
  std::ifstream in(support::data_path("fixture_relations.tsv"));
  std::map<std::string, Named> expect;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string node, rel, lemma, count;
    std::getline(fields, node, '\t');
    std::getline(fields, rel, '\t');
    std::getline(fields, lemma, '\t');
    std::getline(fields, count, '\t');
    expect[node][{rel, lemma}] = std::stoull(count);
  }
  REQUIRE(expect.size() == 4);
  const std::map<std::string, NodeSpec> nodes = {
      {"virtual reality", make_node("virtual reality", NodeKind::Bigram)},
      {"VR", make_node("VR", NodeKind::Initialism)},
      {"anxiety", make_node("anxiety", NodeKind::Lemma)},
      {"headset", make_node("headset", NodeKind::Lemma)},
  };
  const Scope whole = Scope::whole(index);
  for (const auto& [label, node] : nodes) {
    for (unsigned t : {1u, 2u, 8u}) {
      CHECK_MESSAGE(named(index, match_relations(whole, node, kAllRelations, t)) ==
                        expect[label],
                    label);
    }
  }
}

TEST_CASE("pattern details") {
  SUBCASE("stacked modifiers are each captured") {
    const Index idx = tagged("the/DET new/ADJ immersive/ADJ Sony/PROPN VR/PROPN is/VERB");
    const auto m = named(idx, match_relations(Scope::whole(idx), make_node("VR", NodeKind::Initialism)));
    CHECK(m == Named{{{"modifier_of", "new"}, 1}, {{"modifier_of", "immersive"}, 1},
                     {{"modifier_of", "sony"}, 1}});
  }
  SUBCASE("coordination with and without a comma") {
    const Index idx = tagged(
        "VR/PROPN ,/PUNCT and/CCONJ AR/PROPN | Rift/PROPN or/CCONJ VR/PROPN | "
        "VR/PROPN and/CCONJ big/ADJ | Vive/PROPN ,/PUNCT or/CCONJ VR/PROPN");
    const auto m = named(idx, match_relations(Scope::whole(idx), make_node("VR", NodeKind::Initialism)));
    CHECK(m.at({"and_or", "ar"}) == 1);
    CHECK(m.at({"and_or", "rift"}) == 1);
    CHECK(m.at({"and_or", "vive"}) == 1);
    CHECK_FALSE(m.count({"and_or", "big"}));
  }
  SUBCASE("relations stay inside the sentence") {
    const Index idx = tagged("in/ADP | VR/PROPN | headset/NOUN");
    CHECK(match_relations(Scope::whole(idx), make_node("VR", NodeKind::Initialism)).counts.empty());
  }
  SUBCASE("the node's own lemma is not captured") {
    const Index idx = tagged("VR/PROPN VR/PROPN headset/NOUN");
    const auto m = named(idx, match_relations(Scope::whole(idx), make_node("VR", NodeKind::Initialism)));
    CHECK(m == Named{{{"noun_modified_by", "headset"}, 1}});
  }
  SUBCASE("bigram head is its last word") {
    const NodeSpec vr = make_node("virtual reality", NodeKind::Bigram);
    const Index idx = tagged("virtual/ADJ reality/NOUN and/CCONJ therapy/NOUN of/ADP");
    CHECK(named(idx, match_relations(Scope::whole(idx), vr)) ==
          Named{{{"and_or", "therapy"}, 1}});
    const Index adj = tagged("virtual/ADJ reality/NOUN or/CCONJ immersive/ADJ");
    CHECK(match_relations(Scope::whole(adj), vr).counts.empty());
  }
}

TEST_CASE("untagged scopes") {
  Document meta;
  meta.id = "u";
  const Index idx = build_index(
      {tokenize_plain("Fear of VR, in class. VR for anxiety into VR", meta)}, 1);
  const Scope whole = Scope::whole(idx);
  CHECK(is_untagged(whole));
  CHECK_FALSE(is_untagged(Scope::whole(support::fixture_index())));
  const NodeSpec vr = make_node("VR", NodeKind::Initialism);
  try {
    (void)match_relations(whole, vr);
    FAIL("matched");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UntaggedScope);
  }
  const auto m = named(idx, match_relations(whole, vr, kPrepRelations));
  CHECK(m == Named{{{"prep_phrase_pre", "of"}, 1},
                   {{"prep_phrase_pre", "into"}, 1},
                   {{"prep_phrase_post", "for"}, 1}});
  SketchOptions o;
  o.relations = kPrepRelations;
  const Sketch s = sketch(whole, vr, o);
  CHECK(s.tables[0].rows.empty());
  CHECK(s.tables[3].rows.size() == 3);
}

TEST_CASE("sketch tables") {
  const Scope focus = support::fixture_focus();
  const NodeSpec vr = make_node("VR", NodeKind::Initialism);
  const Sketch s = sketch(focus, vr, {});
  CHECK(s.node == vr);
  CHECK(s.node_f == count_node(focus, vr).f);
  REQUIRE(s.tables.size() == 4);
  CHECK(s.tables[0].name == "modifier_of");
  CHECK(s.tables[1].name == "noun_modified_by");
  CHECK(s.tables[2].name == "and_or");
  CHECK(s.tables[3].name == "prep_phrase");
  for (std::size_t t = 0; t < 3; ++t) {
    const auto& rows = s.tables[t].rows;
    for (const auto& r : rows) {
      CHECK(r.relation == s.tables[t].name);
      CHECK_FALSE(r.share.has_value());
    }
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i - 1].log_dice >= rows[i].log_dice);
  }
  const auto& prep = s.tables[3].rows;
  REQUIRE_FALSE(prep.empty());
  for (const auto& r : prep) {
    REQUIRE(r.share.has_value());
    CHECK(*r.share == doctest::Approx(100.0 * static_cast<double>(r.co_f) /
                                      static_cast<double>(s.node_f)));
    CHECK((r.relation == "prep_phrase_pre" || r.relation == "prep_phrase_post"));
  }
  for (std::size_t i = 1; i < prep.size(); ++i) CHECK(prep[i - 1].co_f >= prep[i].co_f);
  CHECK(prep[0].collocate == "in");
  CHECK(display_collocate(prep[0], vr) == "in \"VR\"");

  CollocateRow post;
  post.collocate = "with";
  post.relation = "prep_phrase_post";
  CHECK(display_collocate(post, make_node("virtual reality", NodeKind::Bigram)) ==
        "\"virtual reality\" with ...");
  CollocateRow plain;
  plain.collocate = "headset";
  plain.relation = "noun_modified_by";
  CHECK(display_collocate(plain, vr) == "headset");

  SketchOptions small;
  small.top = 1;
  for (const auto& t : sketch(focus, vr, small).tables) CHECK(t.rows.size() <= 1);
}
