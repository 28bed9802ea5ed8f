#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace corpex {

/// Boolean document query.
///
///   expr   := and ("OR" and)*
///   and    := unary ("AND" unary)*
///   unary  := "NOT" unary | "(" expr ")" | term
///   term   := bare-word | '"' word [word] '"'
///
/// Operators are uppercase keywords. A bare word or a one-word quote is a
/// lemma term; a two-word quote is a bigram term. Terms are case-folded.
struct Query {
  enum class Op { Term, And, Or, Not };

  Op op = Op::Term;
  std::vector<std::string> forms;  // Term only: 1 (lemma) or 2 (bigram)
  std::vector<Query> args;

  friend bool operator==(const Query&, const Query&) = default;
};

/// Throws QuerySyntax with the 0-based offset of the offending character.
Query parse_query(std::string_view text);

std::string to_string(const Query& q);

/// The query the VR-and-anxiety subcorpus is selected with.
inline constexpr std::string_view kVrAnxietyPreset =
    R"(("virtual reality" OR "VR") AND ("anxiety"))";

}  // namespace corpex
