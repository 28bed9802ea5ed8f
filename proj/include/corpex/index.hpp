#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "corpex/corpus.hpp"

namespace corpex {

using LexId = std::uint32_t;
using DocOrd = std::uint32_t;

/// Dense string ids assigned in byte-lexicographic order, so id order is
/// alphabetical order and identical inputs always yield identical ids.
class Lexicon {
 public:
  Lexicon() = default;
  /// `sorted` must be strictly ascending.
  explicit Lexicon(std::vector<std::string> sorted);

  std::optional<LexId> find(std::string_view s) const noexcept;
  const std::string& at(LexId id) const { return strings_.at(id); }
  std::size_t size() const noexcept { return strings_.size(); }
  std::span<const std::string> strings() const noexcept { return strings_; }

  friend bool operator==(const Lexicon&, const Lexicon&) = default;

 private:
  std::vector<std::string> strings_;
};

/// A run of `count` consecutive entries of `PostingList::positions` that fall
/// in document `doc`.
struct DocRun {
  DocOrd doc = 0;
  std::uint32_t count = 0;

  friend bool operator==(const DocRun&, const DocRun&) = default;
};

struct PostingList {
  std::vector<DocRun> runs;         // ascending doc ordinals
  std::vector<Position> positions;  // ascending, grouped by `runs`

  friend bool operator==(const PostingList&, const PostingList&) = default;
};

/// Everything an index holds. Exposed as a plain aggregate so the builder and
/// the file reader can fill it; `Index` validates it on construction.
struct IndexData {
  Lexicon lemmas;    // lowercased lemmas
  Lexicon surfaces;  // surfaces verbatim, for case-sensitive lookups
  std::vector<Document> documents;

  // Forward store, one entry per corpus position.
  std::vector<LexId> lemma_ids;
  std::vector<LexId> surface_ids;
  std::vector<Pos> tags;
  std::vector<std::uint8_t> sentence_start;  // 1 where a sentence begins

  std::vector<PostingList> lemma_postings;    // by lemma id
  std::vector<PostingList> surface_postings;  // by surface id

  friend bool operator==(const IndexData&, const IndexData&) = default;
};

/// Immutable positional inverted index over a corpus. Safe to share between
/// any number of reader threads.
class Index {
 public:
  /// Throws CorruptFile if the data violates an index invariant.
  explicit Index(IndexData data);

  const Lexicon& lemmas() const noexcept { return d_.lemmas; }
  const Lexicon& surfaces() const noexcept { return d_.surfaces; }
  std::span<const Document> documents() const noexcept { return d_.documents; }
  const PostingList& lemma_postings(LexId id) const {
    return d_.lemma_postings.at(id);
  }
  const PostingList& surface_postings(LexId id) const {
    return d_.surface_postings.at(id);
  }

  std::uint64_t token_count() const noexcept { return d_.lemma_ids.size(); }
  std::size_t doc_count() const noexcept { return d_.documents.size(); }

  LexId lemma_at(Position p) const { return d_.lemma_ids[p]; }
  LexId surface_at(Position p) const { return d_.surface_ids[p]; }
  Pos pos_at(Position p) const { return d_.tags[p]; }
  bool sentence_starts_at(Position p) const { return d_.sentence_start[p] != 0; }

  /// Document containing position `p`.
  DocOrd doc_of(Position p) const;

  const IndexData& data() const noexcept { return d_; }

  friend bool operator==(const Index& a, const Index& b) { return a.d_ == b.d_; }

 private:
  IndexData d_;
};

/// Builds the index. Lemmas are ASCII-lowercased; documents without tokens
/// are dropped; positions are reassigned from 0 in input order. The result
/// is identical for every `threads` value (0 = hardware concurrency).
/// Throws EmptyCorpus if no document has tokens and DuplicateDocId on
/// repeated ids.
Index build_index(std::vector<ParsedDocument> docs, unsigned threads = 0);

void save_index(const Index& index, const std::filesystem::path& path);
Index load_index(const std::filesystem::path& path);

/// In-memory forms of the file codec.
std::string serialize_index(const Index& index);
Index deserialize_index(std::string_view bytes);

}  // namespace corpex
