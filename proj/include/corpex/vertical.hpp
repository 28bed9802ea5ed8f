#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "corpex/corpus.hpp"

namespace corpex {

/// Streaming reader for one-token-per-line corpora:
///
///     <doc id="d1" source="web" date="2023-04-01">
///     <s>
///     VR<TAB>vr<TAB>PROPN
///     </s>
///     </doc>
///
/// Lines that begin with `<` and end with `>` are structural and consume no
/// positions; `<s>`/`</s>` mark sentence boundaries and any other tag is
/// ignored. Every other line must carry exactly three tab-separated fields.
/// Lemmas are kept verbatim; case folding happens at index time.
class VerticalReader {
 public:
  explicit VerticalReader(std::istream& in, const PosMap& pos_map,
                          Position first_position = 0);

  std::optional<ParsedDocument> next();

  std::uint64_t line_number() const noexcept { return line_no_; }

 private:
  std::istream& in_;
  const PosMap& pos_map_;
  Position next_position_;
  std::uint64_t line_no_ = 0;
  std::set<std::string> seen_ids_;
};

std::vector<ParsedDocument> parse_vertical(std::istream& in,
                                           const PosMap& pos_map);
std::vector<ParsedDocument> parse_vertical(std::istream& in);

/// Writes documents back in vertical format. Sentence tags are emitted only
/// for documents with more than one sentence, so a file made of doc tags and
/// coarse-tagged tokens round-trips byte-for-byte.
void write_vertical(std::ostream& out, const std::vector<ParsedDocument>& docs);

}  // namespace corpex
