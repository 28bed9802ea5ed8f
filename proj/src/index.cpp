#include "corpex/index.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "corpex/error.hpp"
#include "corpex/parallel.hpp"
#include "corpex/text.hpp"

namespace corpex {

Lexicon::Lexicon(std::vector<std::string> sorted) : strings_(std::move(sorted)) {
  for (std::size_t i = 1; i < strings_.size(); ++i) {
    if (!(strings_[i - 1] < strings_[i])) {
      throw Error(Errc::CorruptFile, "lexicon is not strictly ascending");
    }
  }
}

std::optional<LexId> Lexicon::find(std::string_view s) const noexcept {
  const auto it = std::lower_bound(
      strings_.begin(), strings_.end(), s,
      [](const std::string& a, std::string_view b) { return a < b; });
  if (it == strings_.end() || *it != s) return std::nullopt;
  return static_cast<LexId>(it - strings_.begin());
}

namespace {

void check(bool ok, const char* what) {
  if (!ok) throw Error(Errc::CorruptFile, what);
}

void check_postings(const std::vector<PostingList>& lists,
                    const std::vector<LexId>& ids,
                    const std::vector<Document>& docs) {
  std::uint64_t total = 0;
  for (LexId id = 0; id < lists.size(); ++id) {
    const auto& pl = lists[id];
    std::size_t at = 0;
    std::optional<DocOrd> prev_doc;
    Position prev = 0;
    for (const auto& run : pl.runs) {
      check(run.doc < docs.size(), "posting run beyond document table");
      check(!prev_doc || run.doc > *prev_doc, "posting runs out of order");
      check(run.count > 0 && at + run.count <= pl.positions.size(),
            "posting run count mismatch");
      for (std::uint32_t k = 0; k < run.count; ++k, ++at) {
        const Position p = pl.positions[at];
        check(docs[run.doc].range.contains(p), "posting outside its document");
        check(at == 0 || p > prev, "postings not ascending");
        check(ids[p] == id, "posting disagrees with forward store");
        prev = p;
      }
      prev_doc = run.doc;
    }
    check(at == pl.positions.size(), "posting positions without a run");
    total += pl.positions.size();
  }
  check(total == ids.size(), "postings do not cover the corpus");
}

}  // namespace

Index::Index(IndexData data) : d_(std::move(data)) {
  const std::size_t n = d_.lemma_ids.size();
  check(d_.surface_ids.size() == n && d_.tags.size() == n &&
            d_.sentence_start.size() == n,
        "forward store columns differ in length");
  check(d_.lemma_postings.size() == d_.lemmas.size(),
        "lemma postings do not match lexicon");
  check(d_.surface_postings.size() == d_.surfaces.size(),
        "surface postings do not match lexicon");

  Position expect = 0;
  std::unordered_set<std::string_view> ids;
  for (const auto& doc : d_.documents) {
    check(doc.range.begin == expect && doc.range.end > doc.range.begin,
          "document ranges are not contiguous and non-empty");
    check(ids.insert(doc.id).second, "duplicate document id");
    check(d_.sentence_start[doc.range.begin] != 0,
          "document does not open a sentence");
    expect = doc.range.end;
  }
  check(expect == n, "document ranges do not cover the corpus");

  for (std::size_t p = 0; p < n; ++p) {
    check(d_.lemma_ids[p] < d_.lemmas.size(), "lemma id out of range");
    check(d_.surface_ids[p] < d_.surfaces.size(), "surface id out of range");
    check(static_cast<std::size_t>(d_.tags[p]) < kPosCount, "bad POS tag");
  }
  check_postings(d_.lemma_postings, d_.lemma_ids, d_.documents);
  check_postings(d_.surface_postings, d_.surface_ids, d_.documents);
}

DocOrd Index::doc_of(Position p) const {
  const auto it = std::upper_bound(
      d_.documents.begin(), d_.documents.end(), p,
      [](Position v, const Document& d) { return v < d.range.end; });
  if (it == d_.documents.end()) {
    throw Error(Errc::CorruptFile, "position beyond corpus");
  }
  return static_cast<DocOrd>(it - d_.documents.begin());
}

namespace {

std::vector<std::string> merge_sorted(std::vector<std::vector<std::string>> parts) {
  std::vector<std::string> all;
  for (auto& p : parts) {
    all.insert(all.end(), std::make_move_iterator(p.begin()),
               std::make_move_iterator(p.end()));
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

std::unordered_map<std::string_view, LexId> id_map(const Lexicon& lex) {
  std::unordered_map<std::string_view, LexId> m;
  m.reserve(lex.size());
  for (LexId i = 0; i < lex.size(); ++i) m.emplace(lex.at(i), i);
  return m;
}

std::vector<PostingList> invert(const std::vector<LexId>& ids, std::size_t vocab,
                                const std::vector<Document>& docs) {
  std::vector<std::uint64_t> counts(vocab, 0);
  for (LexId id : ids) ++counts[id];
  std::vector<PostingList> lists(vocab);
  for (std::size_t i = 0; i < vocab; ++i) lists[i].positions.reserve(counts[i]);
  for (DocOrd d = 0; d < docs.size(); ++d) {
    for (Position p = docs[d].range.begin; p < docs[d].range.end; ++p) {
      auto& pl = lists[ids[p]];
      if (pl.runs.empty() || pl.runs.back().doc != d) {
        pl.runs.push_back({d, 0});
      }
      ++pl.runs.back().count;
      pl.positions.push_back(p);
    }
  }
  return lists;
}

}  // namespace

Index build_index(std::vector<ParsedDocument> docs, unsigned threads) {
  std::erase_if(docs, [](const ParsedDocument& d) { return d.tokens.empty(); });
  if (docs.empty()) throw Error(Errc::EmptyCorpus, "no document has tokens");

  IndexData data;
  data.documents.reserve(docs.size());
  std::vector<Position> starts;
  starts.reserve(docs.size());
  {
    std::unordered_set<std::string> ids;
    Position next = 0;
    for (auto& d : docs) {
      if (!ids.insert(d.meta.id).second) {
        throw Error(Errc::DuplicateDocId, "doc id '" + d.meta.id + "'");
      }
      Document meta = d.meta;
      meta.range = {next, next + d.tokens.size()};
      starts.push_back(next);
      next = meta.range.end;
      data.documents.push_back(std::move(meta));
    }
  }
  const std::size_t n = data.documents.back().range.end;
  const std::size_t chunks = chunk_count(docs.size(), threads);

  // Per-chunk vocabularies, merged into sorted lexicons.
  std::vector<std::vector<std::string>> lemma_parts(chunks), surface_parts(chunks);
  parallel_chunks(docs.size(), threads,
                  [&](std::size_t c, std::size_t begin, std::size_t end) {
                    std::unordered_set<std::string> lemmas, surfaces;
                    for (std::size_t i = begin; i < end; ++i) {
                      for (auto& t : docs[i].tokens) {
                        t.lemma = text::ascii_lower(t.lemma);
                        lemmas.insert(t.lemma);
                        surfaces.insert(t.surface);
                      }
                    }
                    lemma_parts[c].assign(lemmas.begin(), lemmas.end());
                    surface_parts[c].assign(surfaces.begin(), surfaces.end());
                  });
  data.lemmas = Lexicon(merge_sorted(std::move(lemma_parts)));
  data.surfaces = Lexicon(merge_sorted(std::move(surface_parts)));

  // Forward store; each chunk writes its own slice.
  data.lemma_ids.resize(n);
  data.surface_ids.resize(n);
  data.tags.resize(n);
  data.sentence_start.assign(n, 0);
  const auto lemma_map = id_map(data.lemmas);
  const auto surface_map = id_map(data.surfaces);
  parallel_chunks(docs.size(), threads,
                  [&](std::size_t, std::size_t begin, std::size_t end) {
                    for (std::size_t i = begin; i < end; ++i) {
                      const Position base = starts[i];
                      const auto& toks = docs[i].tokens;
                      for (std::size_t k = 0; k < toks.size(); ++k) {
                        data.lemma_ids[base + k] = lemma_map.at(toks[k].lemma);
                        data.surface_ids[base + k] =
                            surface_map.at(toks[k].surface);
                        data.tags[base + k] = toks[k].pos;
                      }
                      data.sentence_start[base] = 1;
                      for (auto s : docs[i].sentence_starts) {
                        if (s < toks.size()) data.sentence_start[base + s] = 1;
                      }
                    }
                  });

  data.lemma_postings = invert(data.lemma_ids, data.lemmas.size(), data.documents);
  data.surface_postings =
      invert(data.surface_ids, data.surfaces.size(), data.documents);
  return Index(std::move(data));
}

}  // namespace corpex
