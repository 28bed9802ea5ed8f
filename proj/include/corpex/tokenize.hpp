#pragma once

#include <string_view>

#include "corpex/corpus.hpp"

namespace corpex {

/// Fallback for untagged text. Splits on Unicode whitespace, peels leading
/// and trailing punctuation off each chunk as one PUNCT token per code
/// point, and tags everything else X with the lowercased surface as lemma.
/// The whole document is a single sentence.
ParsedDocument tokenize_plain(std::string_view text, Document meta,
                              Position first_position = 0);

}  // namespace corpex
