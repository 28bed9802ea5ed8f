#include "corpex/corpus.hpp"

#include <array>
#include <istream>

#include "corpex/error.hpp"
#include "corpex/text.hpp"

namespace corpex {

namespace {

constexpr std::array<std::string_view, kPosCount> kNames = {
    "NOUN", "PROPN", "ADJ", "VERB", "ADP", "CCONJ",
    "DET",  "PRON",  "ADV", "NUM",  "PUNCT", "X"};

}  // namespace

std::string_view pos_name(Pos pos) noexcept {
  return kNames[static_cast<std::size_t>(pos)];
}

std::optional<Pos> parse_pos(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<Pos>(i);
  }
  return std::nullopt;
}

PosMap PosMap::standard() {
  PosMap m;
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    m.set(std::string(kNames[i]), static_cast<Pos>(i));
  }
  struct Entry {
    const char* tag;
    Pos pos;
  };
  static constexpr Entry kPenn[] = {
      {"NN", Pos::NOUN},    {"NNS", Pos::NOUN},   {"NNP", Pos::PROPN},
      {"NNPS", Pos::PROPN}, {"JJ", Pos::ADJ},     {"JJR", Pos::ADJ},
      {"JJS", Pos::ADJ},    {"VB", Pos::VERB},    {"VBD", Pos::VERB},
      {"VBG", Pos::VERB},   {"VBN", Pos::VERB},   {"VBP", Pos::VERB},
      {"VBZ", Pos::VERB},   {"MD", Pos::VERB},    {"IN", Pos::ADP},
      {"TO", Pos::ADP},     {"CC", Pos::CCONJ},   {"DT", Pos::DET},
      {"PDT", Pos::DET},    {"WDT", Pos::DET},    {"PRP", Pos::PRON},
      {"PRP$", Pos::PRON},  {"WP", Pos::PRON},    {"WP$", Pos::PRON},
      {"EX", Pos::PRON},    {"RB", Pos::ADV},     {"RBR", Pos::ADV},
      {"RBS", Pos::ADV},    {"WRB", Pos::ADV},    {"RP", Pos::ADV},
      {"CD", Pos::NUM},     {".", Pos::PUNCT},    {",", Pos::PUNCT},
      {":", Pos::PUNCT},    {"``", Pos::PUNCT},   {"''", Pos::PUNCT},
      {"-LRB-", Pos::PUNCT}, {"-RRB-", Pos::PUNCT}, {"HYPH", Pos::PUNCT},
      {"SENT", Pos::PUNCT},
  };
  for (const auto& e : kPenn) m.set(e.tag, e.pos);
  return m;
}

void PosMap::set(std::string tag, Pos pos) { table_[std::move(tag)] = pos; }

Pos PosMap::map(std::string_view tag) const {
  if (auto it = table_.find(std::string(tag)); it != table_.end()) {
    return it->second;
  }
  return Pos::X;
}

void PosMap::extend(std::istream& in) {
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto trimmed = text::trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const auto tab = trimmed.find('\t');
    if (tab == std::string_view::npos) {
      throw Error(Errc::MalformedLine, "POS mapping line needs TAG<TAB>COARSE",
                  line_no);
    }
    const auto coarse = parse_pos(text::trim(trimmed.substr(tab + 1)));
    if (!coarse) {
      throw Error(Errc::MalformedLine,
                  "unknown coarse tag '" +
                      std::string(trimmed.substr(tab + 1)) + "'",
                  line_no);
    }
    set(std::string(trimmed.substr(0, tab)), *coarse);
  }
}

}  // namespace corpex
