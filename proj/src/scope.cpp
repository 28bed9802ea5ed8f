#include "corpex/scope.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <unordered_map>

#include "corpex/error.hpp"
#include "corpex/text.hpp"

namespace corpex {

Scope::Scope(const Index& index, std::vector<DocOrd> docs)
    : index_(&index),
      member_(index.doc_count(), 0),
      local_start_(index.doc_count(), 0) {
  for (DocOrd d : docs) {
    if (d >= index.doc_count()) {
      throw Error(Errc::CorruptFile, "scope references unknown document");
    }
    member_[d] = 1;
  }
  const auto all = index.documents();
  for (DocOrd d = 0; d < all.size(); ++d) {
    if (!member_[d]) continue;
    docs_.push_back(d);
    local_start_[d] = tokens_;
    tokens_ += all[d].range.size();
  }
}

Scope Scope::whole(const Index& index) {
  std::vector<DocOrd> all(index.doc_count());
  for (DocOrd d = 0; d < all.size(); ++d) all[d] = d;
  return Scope(index, std::move(all));
}

Scope complement_scope(const Index& index, const Scope& focus) {
  if (&focus.index() != &index) {
    throw Error(Errc::CorruptFile, "focus scope belongs to another index");
  }
  std::vector<DocOrd> rest;
  for (DocOrd d = 0; d < index.doc_count(); ++d) {
    if (!focus.contains(d)) rest.push_back(d);
  }
  return Scope(index, std::move(rest));
}

namespace {

/// Calls `fn(position, doc)` for every hit of the lemma pair (a, b) with b
/// immediately following a inside one sentence, restricted to documents
/// accepted by `keep`.
template <class Keep, class Fn>
void join_adjacent(const Index& index, LexId a, LexId b, Keep keep, Fn fn) {
  const PostingList& la = index.lemma_postings(a);
  const PostingList& lb = index.lemma_postings(b);
  std::size_t ra = 0, rb = 0;
  std::size_t pa = 0, pb = 0;  // offsets of the current runs
  while (ra < la.runs.size() && rb < lb.runs.size()) {
    const DocRun& x = la.runs[ra];
    const DocRun& y = lb.runs[rb];
    if (x.doc < y.doc) {
      pa += x.count;
      ++ra;
      continue;
    }
    if (y.doc < x.doc) {
      pb += y.count;
      ++rb;
      continue;
    }
    if (keep(x.doc)) {
      std::size_t i = pa, j = pb;
      const std::size_t i_end = pa + x.count, j_end = pb + y.count;
      while (i < i_end && j < j_end) {
        const Position first = la.positions[i];
        const Position second = lb.positions[j];
        if (second <= first) {
          ++j;
        } else if (second > first + 1) {
          ++i;
        } else {
          if (!index.sentence_starts_at(second)) fn(first, x.doc);
          ++i;
          ++j;
        }
      }
    }
    pa += x.count;
    pb += y.count;
    ++ra;
    ++rb;
  }
}

template <class Keep, class Fn>
void for_each_posting(const PostingList& pl, Keep keep, Fn fn) {
  std::size_t at = 0;
  for (const auto& run : pl.runs) {
    if (keep(run.doc)) {
      for (std::uint32_t k = 0; k < run.count; ++k) fn(pl.positions[at + k], run.doc);
    }
    at += run.count;
  }
}

std::vector<std::uint8_t> term_docs(const Index& index,
                                    const std::vector<std::string>& forms) {
  std::vector<std::uint8_t> hit(index.doc_count(), 0);
  const auto mark = [&](Position, DocOrd d) { hit[d] = 1; };
  const auto any = [](DocOrd) { return true; };
  if (forms.size() == 1) {
    if (auto id = index.lemmas().find(forms[0])) {
      for (const auto& run : index.lemma_postings(*id).runs) hit[run.doc] = 1;
    }
  } else {
    const auto a = index.lemmas().find(forms[0]);
    const auto b = index.lemmas().find(forms[1]);
    if (a && b) join_adjacent(index, *a, *b, any, mark);
  }
  return hit;
}

std::vector<std::uint8_t> eval(const Index& index, const Query& q) {
  switch (q.op) {
    case Query::Op::Term:
      return term_docs(index, q.forms);
    case Query::Op::Not: {
      auto v = eval(index, q.args.front());
      for (auto& b : v) b = !b;
      return v;
    }
    case Query::Op::And:
    case Query::Op::Or: {
      auto acc = eval(index, q.args.front());
      for (std::size_t i = 1; i < q.args.size(); ++i) {
        const auto rhs = eval(index, q.args[i]);
        for (std::size_t d = 0; d < acc.size(); ++d) {
          acc[d] = q.op == Query::Op::And ? (acc[d] && rhs[d]) : (acc[d] || rhs[d]);
        }
      }
      return acc;
    }
  }
  return {};
}

}  // namespace

std::vector<DocOrd> evaluate_query(const Index& index, const Query& query) {
  const auto hit = eval(index, query);
  std::vector<DocOrd> out;
  for (DocOrd d = 0; d < hit.size(); ++d) {
    if (hit[d]) out.push_back(d);
  }
  return out;
}

Scope select_scope(const Index& index, const Query& query) {
  auto docs = evaluate_query(index, query);
  if (docs.empty()) {
    throw Error(Errc::EmptyScope, "no document matches " + to_string(query));
  }
  return Scope(index, std::move(docs));
}

Scope select_scope(const Index& index, std::string_view query) {
  return select_scope(index, parse_query(query));
}

NodeCount count_node(const Scope& scope, const NodeSpec& node) {
  const Index& index = scope.index();
  NodeCount out;
  out.width = node.forms.size();
  std::optional<DocOrd> last_doc;
  const auto keep = [&](DocOrd d) { return scope.contains(d); };
  const auto add = [&](Position p, DocOrd d) {
    out.positions.push_back(p);
    out.docs.push_back(d);
    if (last_doc != d) {
      ++out.docf;
      last_doc = d;
    }
  };

  switch (node.kind) {
    case NodeKind::Lemma:
      if (auto id = index.lemmas().find(node.forms.at(0))) {
        for_each_posting(index.lemma_postings(*id), keep, add);
      }
      break;
    case NodeKind::Initialism:
      if (auto id = index.surfaces().find(node.forms.at(0))) {
        for_each_posting(index.surface_postings(*id), keep, add);
      }
      break;
    case NodeKind::Bigram: {
      const auto a = index.lemmas().find(node.forms.at(0));
      const auto b = index.lemmas().find(node.forms.at(1));
      if (a && b) join_adjacent(index, *a, *b, keep, add);
      break;
    }
  }
  out.f = out.positions.size();
  return out;
}

void write_scope(std::ostream& out, const Scope& scope) {
  out << "# scope v1\n";
  const auto docs = scope.index().documents();
  for (DocOrd d : scope.docs()) out << docs[d].id << '\n';
}

Scope read_scope(std::istream& in, const Index& index) {
  std::string line;
  if (!std::getline(in, line) || text::trim(line) != "# scope v1") {
    throw Error(Errc::MalformedLine, "missing '# scope v1' header", 1);
  }
  std::unordered_map<std::string_view, DocOrd> by_id;
  const auto docs = index.documents();
  for (DocOrd d = 0; d < docs.size(); ++d) by_id.emplace(docs[d].id, d);

  std::vector<DocOrd> members;
  std::uint64_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto id = text::trim(line);
    if (id.empty() || id.front() == '#') continue;
    const auto it = by_id.find(id);
    if (it == by_id.end()) {
      throw Error(Errc::MalformedLine,
                  "scope names unknown document '" + std::string(id) + "'", line_no);
    }
    members.push_back(it->second);
  }
  return Scope(index, std::move(members));
}

}  // namespace corpex
