#include "corpex/vertical.hpp"

#include <istream>
#include <ostream>
#include <string_view>

#include "corpex/error.hpp"

namespace corpex {

namespace {

bool is_structural(std::string_view line) {
  return line.size() >= 2 && line.front() == '<' && line.back() == '>';
}

bool valid_date(std::string_view d) {
  // YYYY-MM-DD, optionally followed by a time part.
  if (d.size() < 10) return false;
  for (std::size_t i = 0; i < 10; ++i) {
    const bool dash = i == 4 || i == 7;
    if (dash ? d[i] != '-' : (d[i] < '0' || d[i] > '9')) return false;
  }
  return d.size() == 10 || d[10] == 'T';
}

Document parse_doc_open(std::string_view line, std::uint64_t line_no) {
  // line is `<doc ...>`; parse name="value" pairs.
  std::string_view body = line.substr(4, line.size() - 5);
  Document doc;
  bool have_id = false;
  while (true) {
    while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
    if (body.empty()) break;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos || eq + 1 >= body.size() ||
        body[eq + 1] != '"') {
      throw Error(Errc::MalformedLine, "bad attribute in doc tag", line_no);
    }
    const auto name = body.substr(0, eq);
    const auto close = body.find('"', eq + 2);
    if (close == std::string_view::npos) {
      throw Error(Errc::MalformedLine, "unterminated attribute value", line_no);
    }
    std::string value(body.substr(eq + 2, close - eq - 2));
    if (name == "id") {
      doc.id = std::move(value);
      have_id = true;
    } else if (name == "source") {
      doc.source = std::move(value);
    } else if (name == "date") {
      if (!valid_date(value)) {
        throw Error(Errc::MalformedLine, "date is not ISO-8601: " + value,
                    line_no);
      }
      doc.date = std::move(value);
    }
    body.remove_prefix(close + 1);
  }
  if (!have_id || doc.id.empty()) {
    throw Error(Errc::MalformedLine, "doc tag without id", line_no);
  }
  return doc;
}

}  // namespace

VerticalReader::VerticalReader(std::istream& in, const PosMap& pos_map,
                               Position first_position)
    : in_(in), pos_map_(pos_map), next_position_(first_position) {}

std::optional<ParsedDocument> VerticalReader::next() {
  std::optional<ParsedDocument> doc;
  bool sentence_break = true;
  std::string line;
  while (std::getline(in_, line)) {
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view view(line);

    if (is_structural(view)) {
      if (view.starts_with("<doc ") || view == "<doc>") {
        if (doc) {
          throw Error(Errc::UnclosedDoc,
                      "document '" + doc->meta.id + "' opened inside another",
                      line_no_);
        }
        if (view == "<doc>") {
          throw Error(Errc::MalformedLine, "doc tag without id", line_no_);
        }
        doc.emplace();
        doc->meta = parse_doc_open(view, line_no_);
        if (!seen_ids_.insert(doc->meta.id).second) {
          throw Error(Errc::DuplicateDocId, "doc id '" + doc->meta.id + "'",
                      line_no_);
        }
        doc->meta.range = {next_position_, next_position_};
        sentence_break = true;
      } else if (view == "</doc>") {
        if (!doc) {
          throw Error(Errc::MalformedLine, "</doc> without open document",
                      line_no_);
        }
        doc->meta.range.end = next_position_;
        return doc;
      } else if (view == "<s>" || view.starts_with("<s ") || view == "</s>") {
        sentence_break = true;
      }
      continue;
    }

    if (!doc) {
      throw Error(Errc::MalformedLine, "token outside of a document", line_no_);
    }
    const auto t1 = view.find('\t');
    const auto t2 = t1 == std::string_view::npos ? t1 : view.find('\t', t1 + 1);
    if (t2 == std::string_view::npos ||
        view.find('\t', t2 + 1) != std::string_view::npos) {
      throw Error(Errc::MalformedLine, "expected 3 tab-separated fields",
                  line_no_);
    }
    Token tok;
    tok.surface = std::string(view.substr(0, t1));
    tok.lemma = std::string(view.substr(t1 + 1, t2 - t1 - 1));
    if (tok.surface.empty() || tok.lemma.empty()) {
      throw Error(Errc::MalformedLine, "empty surface or lemma", line_no_);
    }
    tok.pos = pos_map_.map(view.substr(t2 + 1));
    tok.position = next_position_++;
    if (sentence_break) {
      doc->sentence_starts.push_back(
          static_cast<std::uint32_t>(doc->tokens.size()));
      sentence_break = false;
    }
    doc->tokens.push_back(std::move(tok));
  }
  if (in_.bad()) throw Error(Errc::Io, "read failure");
  if (doc) {
    throw Error(Errc::UnclosedDoc,
                "end of input inside document '" + doc->meta.id + "'",
                line_no_);
  }
  return std::nullopt;
}

std::vector<ParsedDocument> parse_vertical(std::istream& in,
                                           const PosMap& pos_map) {
  VerticalReader reader(in, pos_map);
  std::vector<ParsedDocument> docs;
  while (auto d = reader.next()) docs.push_back(std::move(*d));
  return docs;
}

std::vector<ParsedDocument> parse_vertical(std::istream& in) {
  const PosMap map = PosMap::standard();
  return parse_vertical(in, map);
}

void write_vertical(std::ostream& out,
                    const std::vector<ParsedDocument>& docs) {
  for (const auto& d : docs) {
    out << "<doc id=\"" << d.meta.id << '"';
    if (!d.meta.source.empty()) out << " source=\"" << d.meta.source << '"';
    if (d.meta.date) out << " date=\"" << *d.meta.date << '"';
    out << ">\n";
    const bool tag_sentences = d.sentence_starts.size() > 1;
    std::size_t next_sentence = 0;
    for (std::size_t i = 0; i < d.tokens.size(); ++i) {
      if (tag_sentences && next_sentence < d.sentence_starts.size() &&
          d.sentence_starts[next_sentence] == i) {
        if (next_sentence > 0) out << "</s>\n";
        out << "<s>\n";
        ++next_sentence;
      }
      const auto& t = d.tokens[i];
      out << t.surface << '\t' << t.lemma << '\t' << pos_name(t.pos) << '\n';
    }
    if (tag_sentences) out << "</s>\n";
    out << "</doc>\n";
  }
}

}  // namespace corpex
