#include "corpex/sketch.hpp"

#include <algorithm>
#include <map>

#include "corpex/error.hpp"
#include "corpex/parallel.hpp"

namespace corpex {

std::string_view relation_name(Relation r) noexcept {
  switch (r) {
    case Relation::ModifierOf: return "modifier_of";
    case Relation::NounModifiedBy: return "noun_modified_by";
    case Relation::AndOr: return "and_or";
    case Relation::PrepPhrasePre: return "prep_phrase_pre";
    case Relation::PrepPhrasePost: return "prep_phrase_post";
  }
  return "";
}

namespace {

constexpr std::uint16_t bit(Pos p) {
  return static_cast<std::uint16_t>(1u << static_cast<unsigned>(p));
}

Slot node_slot() {
  Slot s;
  s.kind = Slot::Kind::Node;
  return s;
}

Slot tags(std::uint16_t mask, bool repeat = false) {
  Slot s;
  s.pos_mask = mask;
  s.repeat = repeat;
  return s;
}

Slot words(std::vector<std::string> lemmas, bool optional = false) {
  Slot s;
  s.lemmas = std::move(lemmas);
  s.optional = optional;
  return s;
}

Slot same_pos() {
  Slot s;
  s.same_pos_as_node = true;
  return s;
}

Slot preposition() {
  Slot s;
  s.preposition = true;
  return s;
}

}  // namespace

const std::vector<RelationPattern>& sketch_patterns() {
  static const std::vector<RelationPattern> patterns = [] {
    const std::uint16_t nominal = bit(Pos::ADJ) | bit(Pos::NOUN) | bit(Pos::PROPN);
    const std::uint16_t noun = bit(Pos::NOUN) | bit(Pos::PROPN);
    std::vector<RelationPattern> p;
    p.push_back({Relation::ModifierOf, {tags(nominal, true), node_slot()}, 0});
    p.push_back({Relation::NounModifiedBy, {node_slot(), tags(noun)}, 1});
    p.push_back({Relation::AndOr,
                 {node_slot(), words({","}, true), words({"and", "or"}), same_pos()},
                 3});
    p.push_back({Relation::AndOr,
                 {same_pos(), words({","}, true), words({"and", "or"}), node_slot()},
                 0});
    p.push_back({Relation::PrepPhrasePre, {preposition(), node_slot()}, 0});
    p.push_back({Relation::PrepPhrasePost, {node_slot(), preposition()}, 1});
    return p;
  }();
  return patterns;
}

const std::vector<std::string>& closed_prepositions() {
  static const std::vector<std::string> list = {
      "of", "in", "for", "to", "with", "on", "as", "into", "like", "about"};
  return list;
}

bool is_untagged(const Scope& scope) {
  const Index& index = scope.index();
  for (DocOrd d : scope.docs()) {
    const auto range = index.documents()[d].range;
    for (Position p = range.begin; p < range.end; ++p) {
      const Pos t = index.pos_at(p);
      if (t != Pos::X && t != Pos::PUNCT) return false;
    }
  }
  return true;
}

namespace {

class Matcher {
 public:
  Matcher(const Index& index, bool untagged, std::vector<LexId> self,
          const std::vector<RelationPattern>& patterns)
      : index_(index), untagged_(untagged), self_(std::move(self)) {
    for (const auto& p : patterns) {
      Compiled c{&p, {}};
      for (const auto& slot : p.pattern) {
        std::vector<LexId> ids;
        const auto& src = slot.preposition ? closed_prepositions() : slot.lemmas;
        for (const auto& l : src) {
          if (auto id = index.lemmas().find(l)) ids.push_back(*id);
        }
        c.lemma_ids.push_back(std::move(ids));
      }
      compiled_.push_back(std::move(c));
    }
  }

  /// Calls emit(relation, lemma id) for each capture around one hit.
  template <class Emit>
  void run(Position first, Position last, Emit emit) const {
    std::vector<Position> captured;
    for (const auto& c : compiled_) {
      captured.clear();
      if (!match(c, first, last, captured)) continue;
      for (Position q : captured) {
        const LexId id = index_.lemma_at(q);
        if (std::find(self_.begin(), self_.end(), id) == self_.end()) {
          emit(c.pattern->name, id);
        }
      }
    }
  }

 private:
  struct Compiled {
    const RelationPattern* pattern;
    std::vector<std::vector<LexId>> lemma_ids;  // per slot
  };

  bool accepts(const Compiled& c, std::size_t slot_index, Position q,
               Pos head_tag) const {
    const Slot& slot = c.pattern->pattern[slot_index];
    const Pos tag = index_.pos_at(q);
    const auto& ids = c.lemma_ids[slot_index];
    const auto lemma_ok = [&] {
      return std::find(ids.begin(), ids.end(), index_.lemma_at(q)) != ids.end();
    };
    if (slot.preposition) return untagged_ ? lemma_ok() : tag == Pos::ADP;
    if (slot.pos_mask != 0 && (slot.pos_mask & bit(tag)) == 0) return false;
    if (slot.same_pos_as_node && tag != head_tag) return false;
    if (!slot.lemmas.empty() && !lemma_ok()) return false;
    return true;
  }

  bool match(const Compiled& c, Position first, Position last,
             std::vector<Position>& captured) const {
    const auto& slots = c.pattern->pattern;
    const std::size_t anchor = static_cast<std::size_t>(
        std::find_if(slots.begin(), slots.end(),
                     [](const Slot& s) { return s.kind == Slot::Kind::Node; }) -
        slots.begin());
    const Pos head_tag = index_.pos_at(last);
    const Position n = index_.token_count();

    // Right of the anchor.
    Position cur = last;
    for (std::size_t i = anchor + 1; i < slots.size(); ++i) {
      const auto next_ok = [&](Position at) {
        const Position q = at + 1;
        return q < n && !index_.sentence_starts_at(q) && accepts(c, i, q, head_tag);
      };
      std::size_t taken = 0;
      while (next_ok(cur)) {
        ++cur;
        ++taken;
        if (i == c.pattern->captured_slot) captured.push_back(cur);
        if (!slots[i].repeat) break;
      }
      if (taken == 0 && !slots[i].optional) return false;
    }

    // Left of the anchor, outward.
    cur = first;
    for (std::size_t i = anchor; i-- > 0;) {
      const auto prev_ok = [&](Position at) {
        return at > 0 && !index_.sentence_starts_at(at) &&
               accepts(c, i, at - 1, head_tag);
      };
      std::size_t taken = 0;
      while (prev_ok(cur)) {
        --cur;
        ++taken;
        if (i == c.pattern->captured_slot) captured.push_back(cur);
        if (!slots[i].repeat) break;
      }
      if (taken == 0 && !slots[i].optional) return false;
    }
    return true;
  }

  const Index& index_;
  bool untagged_;
  std::vector<LexId> self_;
  std::vector<Compiled> compiled_;
};

}  // namespace

RelationMatches match_relations(const Scope& scope, const NodeSpec& node,
                                const RelationSet& relations, unsigned threads) {
  const Index& index = scope.index();
  const bool untagged = is_untagged(scope);
  if (untagged) {
    for (std::size_t r = 0; r < kRelationCount; ++r) {
      if (relations[r] && !kPrepRelations[r]) {
        throw Error(Errc::UntaggedScope,
                    std::string("relation ") +
                        std::string(relation_name(static_cast<Relation>(r))) +
                        " needs POS tags");
      }
    }
  }

  std::vector<RelationPattern> active;
  for (const auto& p : sketch_patterns()) {
    if (relations[static_cast<std::size_t>(p.name)]) active.push_back(p);
  }
  std::vector<LexId> self;
  for (const auto& l : node_lemmas(node)) {
    if (auto id = index.lemmas().find(l)) self.push_back(*id);
  }
  const Matcher matcher(index, untagged, std::move(self), active);

  const NodeCount hits = count_node(scope, node);
  RelationMatches out;
  out.node_f = hits.f;

  using Key = std::pair<Relation, LexId>;
  std::vector<std::map<Key, std::uint64_t>> parts(
      chunk_count(hits.positions.size(), threads));
  parallel_chunks(hits.positions.size(), threads,
                  [&](std::size_t c, std::size_t begin, std::size_t end) {
                    for (std::size_t h = begin; h < end; ++h) {
                      const Position first = hits.positions[h];
                      matcher.run(first, first + hits.width - 1,
                                  [&](Relation r, LexId id) { ++parts[c][{r, id}]; });
                    }
                  });
  std::map<Key, std::uint64_t> merged;
  for (auto& part : parts) {
    for (const auto& [k, v] : part) merged[k] += v;
  }
  for (const auto& [k, v] : merged) out.counts.push_back({k.first, k.second, v});
  return out;
}

Sketch sketch(const Scope& scope, const NodeSpec& node, const SketchOptions& opts) {
  const Index& index = scope.index();
  Sketch out;
  out.node = node;
  out.tables = {{"modifier_of", {}},
                {"noun_modified_by", {}},
                {"and_or", {}},
                {"prep_phrase", {}}};

  const RelationMatches m = match_relations(scope, node, opts.relations, opts.threads);
  out.node_f = m.node_f;
  if (m.node_f == 0) return out;

  for (const auto& rc : m.counts) {
    CollocateRow row;
    row.collocate = index.lemmas().at(rc.lemma);
    row.relation = std::string(relation_name(rc.relation));
    row.co_f = rc.count;
    row.node_f = m.node_f;
    row.coll_f = scope_frequency(scope, rc.lemma);
    row.log_dice = log_dice(row.co_f, row.node_f, row.coll_f);
    std::size_t table = static_cast<std::size_t>(rc.relation);
    if (rc.relation == Relation::PrepPhrasePre ||
        rc.relation == Relation::PrepPhrasePost) {
      table = 3;
      row.share = 100.0 * static_cast<double>(row.co_f) / static_cast<double>(m.node_f);
    }
    out.tables[table].rows.push_back(std::move(row));
  }

  for (std::size_t t = 0; t < out.tables.size(); ++t) {
    auto& rows = out.tables[t].rows;
    if (t == 3) {
      std::sort(rows.begin(), rows.end(), [](const CollocateRow& a, const CollocateRow& b) {
        if (a.co_f != b.co_f) return a.co_f > b.co_f;
        if (a.relation != b.relation) return a.relation < b.relation;
        return a.collocate < b.collocate;
      });
    } else {
      sort_by_log_dice(rows);
    }
    if (rows.size() > opts.top) rows.resize(opts.top);
  }
  return out;
}

std::string display_collocate(const CollocateRow& row, const NodeSpec& node) {
  const std::string quoted = "\"" + to_string(node) + "\"";
  if (row.relation == relation_name(Relation::PrepPhrasePre)) {
    return row.collocate + " " + quoted;
  }
  if (row.relation == relation_name(Relation::PrepPhrasePost)) {
    return quoted + " " + row.collocate + " ...";
  }
  return row.collocate;
}

}  // namespace corpex
