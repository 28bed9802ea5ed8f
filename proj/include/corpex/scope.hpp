#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "corpex/index.hpp"
#include "corpex/node.hpp"
#include "corpex/query.hpp"

namespace corpex {

/// A subset of an index's documents. Statistics read the scope's own token
/// stream: member documents concatenated in ordinal order, so a position
/// can be mapped to a scope-local offset.
class Scope {
 public:
  /// `docs` need not be sorted; duplicates are ignored.
  Scope(const Index& index, std::vector<DocOrd> docs);

  static Scope whole(const Index& index);

  const Index& index() const noexcept { return *index_; }
  std::span<const DocOrd> docs() const noexcept { return docs_; }
  bool contains(DocOrd d) const noexcept { return member_[d] != 0; }
  bool empty() const noexcept { return docs_.empty(); }

  std::uint64_t token_count() const noexcept { return tokens_; }
  std::size_t doc_count() const noexcept { return docs_.size(); }

  /// Offset of global position `p` (inside a member document) in the scope
  /// stream.
  Position to_local(Position p, DocOrd doc) const noexcept {
    return p - index_->documents()[doc].range.begin + local_start_[doc];
  }

 private:
  const Index* index_;
  std::vector<DocOrd> docs_;
  std::vector<std::uint8_t> member_;
  std::vector<Position> local_start_;
  std::uint64_t tokens_ = 0;
};

/// Documents satisfying `query`, ascending. Never throws for an empty result.
std::vector<DocOrd> evaluate_query(const Index& index, const Query& query);

/// Throws EmptyScope when nothing matches.
Scope select_scope(const Index& index, const Query& query);
Scope select_scope(const Index& index, std::string_view query);

Scope complement_scope(const Index& index, const Scope& focus);

/// Hits of a node inside a scope. For bigrams a hit is an adjacent lemma
/// pair within one sentence and its position is the first word's.
struct NodeCount {
  std::uint64_t f = 0;
  std::uint64_t docf = 0;
  std::vector<Position> positions;  // global, ascending
  std::vector<DocOrd> docs;         // document of each position
  std::size_t width = 1;            // tokens per hit
};

NodeCount count_node(const Scope& scope, const NodeSpec& node);

/// Scope files: `# scope v1` followed by one doc id per line.
void write_scope(std::ostream& out, const Scope& scope);
Scope read_scope(std::istream& in, const Index& index);

}  // namespace corpex
