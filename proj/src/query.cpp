#include "corpex/query.hpp"

#include <cctype>

#include "corpex/error.hpp"
#include "corpex/text.hpp"

namespace corpex {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Query parse() {
    Query q = expr();
    skip_space();
    if (at_ != s_.size()) fail("unexpected input");
    return q;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::QuerySyntax, what + " at offset " + std::to_string(at_),
                at_);
  }

  void skip_space() {
    while (at_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[at_]))) {
      ++at_;
    }
  }

  static bool word_char(char c) {
    return !std::isspace(static_cast<unsigned char>(c)) && c != '(' &&
           c != ')' && c != '"';
  }

  /// Consumes `kw` if it appears as a whole word at the cursor.
  bool keyword(std::string_view kw) {
    skip_space();
    if (s_.substr(at_, kw.size()) != kw) return false;
    const std::size_t end = at_ + kw.size();
    if (end < s_.size() && word_char(s_[end])) return false;
    at_ = end;
    return true;
  }

  Query expr() {
    Query lhs = conj();
    while (keyword("OR")) {
      Query rhs = conj();
      lhs = combine(Query::Op::Or, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Query conj() {
    Query lhs = unary();
    while (keyword("AND")) {
      Query rhs = unary();
      lhs = combine(Query::Op::And, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  static Query combine(Query::Op op, Query lhs, Query rhs) {
    if (lhs.op == op) {
      lhs.args.push_back(std::move(rhs));
      return lhs;
    }
    Query q;
    q.op = op;
    q.args.push_back(std::move(lhs));
    q.args.push_back(std::move(rhs));
    return q;
  }

  Query unary() {
    if (keyword("NOT")) {
      Query q;
      q.op = Query::Op::Not;
      q.args.push_back(unary());
      return q;
    }
    skip_space();
    if (at_ >= s_.size()) fail("expected a term");
    if (s_[at_] == '(') {
      ++at_;
      Query q = expr();
      skip_space();
      if (at_ >= s_.size() || s_[at_] != ')') fail("expected ')'");
      ++at_;
      return q;
    }
    if (s_[at_] == '"') return quoted();
    if (s_[at_] == ')') fail("unexpected ')'");
    return bare();
  }

  Query quoted() {
    const std::size_t open = at_++;
    const std::size_t close = s_.find('"', at_);
    if (close == std::string_view::npos) {
      at_ = open;
      fail("unterminated quote");
    }
    Query q;
    std::string_view body = s_.substr(at_, close - at_);
    std::size_t i = 0;
    while (i < body.size()) {
      while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
      std::size_t j = i;
      while (j < body.size() && !std::isspace(static_cast<unsigned char>(body[j]))) ++j;
      if (j > i) q.forms.push_back(text::ascii_lower(body.substr(i, j - i)));
      i = j;
    }
    if (q.forms.empty() || q.forms.size() > 2) {
      at_ = open;
      fail("quoted term must hold one or two words");
    }
    at_ = close + 1;
    return q;
  }

  Query bare() {
    const std::size_t begin = at_;
    while (at_ < s_.size() && word_char(s_[at_])) ++at_;
    const auto word = s_.substr(begin, at_ - begin);
    if (word == "AND" || word == "OR") {
      at_ = begin;
      fail("operator without left operand");
    }
    Query q;
    q.forms.push_back(text::ascii_lower(word));
    return q;
  }

  std::string_view s_;
  std::size_t at_ = 0;
};

}  // namespace

Query parse_query(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Query& q) {
  switch (q.op) {
    case Query::Op::Term: {
      std::string out = "\"";
      for (std::size_t i = 0; i < q.forms.size(); ++i) {
        if (i) out += ' ';
        out += q.forms[i];
      }
      return out + "\"";
    }
    case Query::Op::Not:
      return "NOT " + to_string(q.args.front());
    case Query::Op::And:
    case Query::Op::Or: {
      std::string out = "(";
      for (std::size_t i = 0; i < q.args.size(); ++i) {
        if (i) out += q.op == Query::Op::And ? " AND " : " OR ";
        out += to_string(q.args[i]);
      }
      return out + ")";
    }
  }
  return {};
}

}  // namespace corpex
