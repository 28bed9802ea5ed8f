#include "corpex/tokenize.hpp"

#include "corpex/text.hpp"

namespace corpex {

namespace {

struct Piece {
  std::size_t offset;
  std::size_t length;
};

void emit(ParsedDocument& doc, std::string_view surface, Pos pos,
          Position& next) {
  Token t;
  t.surface = std::string(surface);
  t.lemma = pos == Pos::PUNCT ? t.surface : text::ascii_lower(surface);
  t.pos = pos;
  t.position = next++;
  doc.tokens.push_back(std::move(t));
}

void split_chunk(ParsedDocument& doc, std::string_view chunk, Position& next) {
  std::vector<Piece> cps;
  for (std::size_t i = 0; i < chunk.size();) {
    const auto cp = text::decode_utf8(chunk, i);
    cps.push_back({i, cp.length});
    i += cp.length;
  }
  const auto punct = [&](const Piece& p) {
    return text::is_punctuation(text::decode_utf8(chunk, p.offset).value);
  };
  std::size_t lo = 0;
  std::size_t hi = cps.size();
  while (lo < hi && punct(cps[lo])) ++lo;
  while (hi > lo && punct(cps[hi - 1])) --hi;

  for (std::size_t i = 0; i < lo; ++i) {
    emit(doc, chunk.substr(cps[i].offset, cps[i].length), Pos::PUNCT, next);
  }
  if (lo < hi) {
    const std::size_t begin = cps[lo].offset;
    const std::size_t end = cps[hi - 1].offset + cps[hi - 1].length;
    emit(doc, chunk.substr(begin, end - begin), Pos::X, next);
  }
  for (std::size_t i = hi; i < cps.size(); ++i) {
    emit(doc, chunk.substr(cps[i].offset, cps[i].length), Pos::PUNCT, next);
  }
}

}  // namespace

ParsedDocument tokenize_plain(std::string_view text, Document meta,
                              Position first_position) {
  ParsedDocument doc;
  doc.meta = std::move(meta);
  Position next = first_position;

  std::size_t chunk_begin = 0;
  bool in_chunk = false;
  for (std::size_t i = 0; i < text.size();) {
    const auto cp = text::decode_utf8(text, i);
    if (text::is_unicode_space(cp.value)) {
      if (in_chunk) {
        split_chunk(doc, text.substr(chunk_begin, i - chunk_begin), next);
        in_chunk = false;
      }
    } else if (!in_chunk) {
      chunk_begin = i;
      in_chunk = true;
    }
    i += cp.length;
  }
  if (in_chunk) split_chunk(doc, text.substr(chunk_begin), next);

  doc.meta.range = {first_position, next};
  if (!doc.tokens.empty()) doc.sentence_starts.push_back(0);
  return doc;
}

}  // namespace corpex
