#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace corpex {

using Position = std::uint64_t;

/// Coarse part-of-speech classes. The numeric order is part of the index
/// file format.
enum class Pos : std::uint8_t {
  NOUN,
  PROPN,
  ADJ,
  VERB,
  ADP,
  CCONJ,
  DET,
  PRON,
  ADV,
  NUM,
  PUNCT,
  X,
};

inline constexpr std::size_t kPosCount = 12;

std::string_view pos_name(Pos pos) noexcept;
std::optional<Pos> parse_pos(std::string_view name) noexcept;

struct Token {
  std::string surface;
  std::string lemma;
  Pos pos = Pos::X;
  Position position = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

/// Half-open interval of corpus positions.
struct TokenRange {
  Position begin = 0;
  Position end = 0;

  Position size() const noexcept { return end - begin; }
  bool empty() const noexcept { return begin == end; }
  bool contains(Position p) const noexcept { return p >= begin && p < end; }

  friend bool operator==(const TokenRange&, const TokenRange&) = default;
};

struct Document {
  std::string id;
  std::string source;
  std::optional<std::string> date;
  TokenRange range;

  friend bool operator==(const Document&, const Document&) = default;
};

/// One document as produced by a reader: metadata, its tokens, and the
/// document-local offsets at which sentences begin (ascending, always
/// starting with 0 when the document has tokens).
struct ParsedDocument {
  Document meta;
  std::vector<Token> tokens;
  std::vector<std::uint32_t> sentence_starts;

  friend bool operator==(const ParsedDocument&, const ParsedDocument&) = default;
};

/// Maps source tagset labels onto the coarse classes. Unknown labels map to
/// X. The standard table covers the coarse labels themselves and the Penn
/// Treebank tagset; `extend` reads `TAG<TAB>COARSE` lines (blank lines and
/// `#` comments skipped) and overrides existing entries.
class PosMap {
 public:
  static PosMap standard();

  void extend(std::istream& in);
  void set(std::string tag, Pos pos);
  Pos map(std::string_view tag) const;

 private:
  std::unordered_map<std::string, Pos> table_;
};

}  // namespace corpex
