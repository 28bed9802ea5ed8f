#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "corpex/colloc.hpp"
#include "corpex/scope.hpp"

namespace corpex {

enum class Relation : std::uint8_t {
  ModifierOf,
  NounModifiedBy,
  AndOr,
  PrepPhrasePre,
  PrepPhrasePost,
};

inline constexpr std::size_t kRelationCount = 5;

std::string_view relation_name(Relation r) noexcept;

/// One position constraint in a relation pattern.
struct Slot {
  enum class Kind { Node, Token };

  Kind kind = Kind::Token;
  std::uint16_t pos_mask = 0;        // bit per Pos; 0 accepts any tag
  std::vector<std::string> lemmas;   // empty accepts any lemma
  bool same_pos_as_node = false;     // tag must equal the node head's tag
  bool preposition = false;          // ADP, or the closed list when untagged
  bool optional = false;
  bool repeat = false;               // one or more, each occurrence captured
};

/// A linear pattern around exactly one node anchor. Slots left of the
/// anchor are matched outward from the hit's first token, slots right of it
/// outward from the last, all inside the hit's sentence.
struct RelationPattern {
  Relation name;
  std::vector<Slot> pattern;
  std::size_t captured_slot = 0;
};

const std::vector<RelationPattern>& sketch_patterns();

/// Prepositions recognised in scopes without POS tags.
const std::vector<std::string>& closed_prepositions();

using RelationSet = std::array<bool, kRelationCount>;
inline constexpr RelationSet kAllRelations = {true, true, true, true, true};
inline constexpr RelationSet kPrepRelations = {false, false, false, true, true};

struct RelationCount {
  Relation relation;
  LexId lemma;
  std::uint64_t count;

  friend bool operator==(const RelationCount&, const RelationCount&) = default;
};

struct RelationMatches {
  std::uint64_t node_f = 0;
  std::vector<RelationCount> counts;  // ascending by (relation, lemma)
};

/// True when no token in the scope carries a tag other than X or PUNCT.
bool is_untagged(const Scope& scope);

/// Counts pattern captures per (relation, collocate). The node's own lemmas
/// are never captured. Throws UntaggedScope when the scope is untagged and a
/// relation other than the prepositional ones is requested.
RelationMatches match_relations(const Scope& scope, const NodeSpec& node,
                                const RelationSet& relations = kAllRelations,
                                unsigned threads = 0);

struct RelationTable {
  std::string name;  // modifier_of, noun_modified_by, and_or, prep_phrase
  std::vector<CollocateRow> rows;

  friend bool operator==(const RelationTable&, const RelationTable&) = default;
};

struct Sketch {
  NodeSpec node;
  std::uint64_t node_f = 0;
  std::vector<RelationTable> tables;  // always the four groups, in order
};

struct SketchOptions {
  std::size_t top = 15;
  RelationSet relations = kAllRelations;
  unsigned threads = 0;
};

/// Four ranked tables. Modifier, modified-noun and coordination tables rank
/// by logDice; the prepositional table ranks by frequency and carries each
/// row's share of node hits.
Sketch sketch(const Scope& scope, const NodeSpec& node, const SketchOptions& opts);

/// `of "virtual reality"` or `"virtual reality" in ...`; other relations
/// render as the bare collocate.
std::string display_collocate(const CollocateRow& row, const NodeSpec& node);

}  // namespace corpex
