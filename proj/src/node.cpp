#include "corpex/node.hpp"

#include <algorithm>
#include <sstream>

#include "corpex/error.hpp"
#include "corpex/text.hpp"

namespace corpex {

std::string_view node_kind_name(NodeKind kind) noexcept {
  switch (kind) {
    case NodeKind::Lemma: return "lemma";
    case NodeKind::Bigram: return "bigram";
    case NodeKind::Initialism: return "initialism";
  }
  return "lemma";
}

NodeKind parse_node_kind(std::string_view name) {
  if (name == "lemma") return NodeKind::Lemma;
  if (name == "bigram") return NodeKind::Bigram;
  if (name == "initialism") return NodeKind::Initialism;
  throw Error(Errc::UnknownFormat, "node kind '" + std::string(name) + "'");
}

NodeSpec make_node(std::string_view spec, NodeKind kind) {
  std::vector<std::string> words;
  {
    std::istringstream in{std::string(spec)};
    std::string w;
    while (in >> w) words.push_back(std::move(w));
  }
  if (words.empty()) throw Error(Errc::BadArity, "empty node");

  NodeSpec node;
  node.kind = kind;
  switch (kind) {
    case NodeKind::Lemma:
      if (words.size() != 1) {
        throw Error(Errc::BadArity, "lemma node takes one form, got " +
                                        std::to_string(words.size()));
      }
      node.forms = {text::ascii_lower(words[0])};
      break;
    case NodeKind::Bigram:
      if (words.size() != 2) {
        throw Error(Errc::BadArity, "bigram node takes two forms, got " +
                                        std::to_string(words.size()));
      }
      node.forms = {text::ascii_lower(words[0]), text::ascii_lower(words[1])};
      break;
    case NodeKind::Initialism:
      if (words.size() != 1) {
        throw Error(Errc::BadArity, "initialism node takes one form");
      }
      if (!text::is_ascii_alpha(words[0])) {
        throw Error(Errc::NonAlphabetic, "initialism '" + words[0] + "'");
      }
      node.forms = {text::ascii_upper(words[0])};
      node.case_sensitive = true;
      break;
  }
  return node;
}

std::string to_string(const NodeSpec& node) {
  std::string out;
  for (const auto& f : node.forms) {
    if (!out.empty()) out += ' ';
    out += f;
  }
  return out;
}

std::vector<std::string> node_lemmas(const NodeSpec& node) {
  std::vector<std::string> out;
  for (const auto& f : node.forms) out.push_back(text::ascii_lower(f));
  return out;
}

}  // namespace corpex
