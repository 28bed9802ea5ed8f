#include "corpex/report.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "corpex/error.hpp"
#include "json.hpp"

namespace corpex {

using nlohmann::ordered_json;

ReportFormat parse_report_format(std::string_view name) {
  if (name == "tsv") return ReportFormat::Tsv;
  if (name == "text") return ReportFormat::Text;
  if (name == "json") return ReportFormat::Json;
  throw Error(Errc::UnknownFormat, "report format '" + std::string(name) + "'");
}

std::string group_digits(double value, int decimals) {
  std::string s = fmt::format("{:.{}f}", value, decimals);
  const bool negative = !s.empty() && s.front() == '-';
  const std::size_t int_begin = negative ? 1 : 0;
  std::size_t int_end = s.find('.');
  if (int_end == std::string::npos) int_end = s.size();
  for (std::size_t at = int_end; at > int_begin + 3; at -= 3) {
    s.insert(at - 3, ",");
  }
  return s;
}

namespace {

std::string comment_header(const ReportHeader& h) {
  std::string out = fmt::format("# corpex {}\n# command: {}\n# config: {}\n",
                                kToolVersion, h.command, h.config_json);
  for (const auto& in : h.inputs) {
    out += fmt::format("# input: {} sha256:{}\n", in.name, in.sha256);
  }
  return out;
}

ordered_json json_header(const ReportHeader& h) {
  ordered_json j;
  j["tool"] = "corpex";
  j["version"] = std::string(kToolVersion);
  j["command"] = h.command;
  j["config"] = ordered_json::parse(h.config_json.empty() ? "{}" : h.config_json);
  ordered_json inputs = ordered_json::array();
  for (const auto& in : h.inputs) {
    inputs.push_back({{"name", in.name}, {"sha256", in.sha256}});
  }
  j["inputs"] = std::move(inputs);
  return j;
}

std::string json_report(const ReportHeader& h, ordered_json body) {
  ordered_json j;
  j["header"] = json_header(h);
  for (auto& [k, v] : body.items()) j[k] = v;
  return j.dump(2) + "\n";
}

/// Left-aligns the first column, right-aligns the rest.
std::string aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) line += "  ";
      line += i == 0 ? fmt::format("{:<{}}", r[i], width[i])
                     : fmt::format("{:>{}}", r[i], width[i]);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string tsv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += '\t';
    out += cells[i];
  }
  return out + "\n";
}

ordered_json profile_json(const FreqProfile& p) {
  return {{"f", p.f},       {"fpm", p.fpm},   {"docf", p.docf},
          {"rel_docf", p.rel_docf}, {"arf", p.arf}, {"aldf", p.aldf},
          {"aldf_clamped", p.aldf_clamped}};
}

}  // namespace

std::string render_keywords(const std::vector<KeynessRow>& rows,
                            ReportFormat format, const ReportHeader& header) {
  if (format == ReportFormat::Json) {
    ordered_json list = ordered_json::array();
    for (const auto& r : rows) {
      list.push_back({{"rank", r.rank},
                      {"lemma", r.lemma},
                      {"focus", profile_json(r.focus)},
                      {"reference", profile_json(r.reference)},
                      {"score", r.score}});
    }
    return json_report(header, {{"keywords", std::move(list)}});
  }

  std::string out = comment_header(header);
  if (format == ReportFormat::Tsv) {
    out += tsv_line({std::begin(kKeywordColumns), std::end(kKeywordColumns)});
    for (const auto& r : rows) {
      out += tsv_line({r.lemma, std::to_string(r.focus.f), std::to_string(r.reference.f),
                       format_fixed(r.focus.fpm, 2), format_fixed(r.reference.fpm, 2),
                       std::to_string(r.focus.docf), std::to_string(r.reference.docf),
                       format_rel_docf(r.focus.rel_docf),
                       format_rel_docf(r.reference.rel_docf),
                       format_fixed(r.focus.arf, 2), format_fixed(r.reference.arf, 2),
                       format_fixed(r.focus.aldf, 2), format_fixed(r.reference.aldf, 2),
                       format_fixed(r.score, 2)});
    }
    return out;
  }

  std::vector<std::vector<std::string>> table;
  table.push_back({"Lemma", "Freq", "", "Freq/M", "", "DOCF", "", "Rel DOCF", "",
                   "ARF", "", "ALDF", "", "Score"});
  table.push_back({"", "Focus", "Ref", "Focus", "Ref", "Focus", "Ref", "Focus",
                   "Ref", "Focus", "Ref", "Focus", "Ref", ""});
  for (const auto& r : rows) {
    table.push_back({fmt::format("{} {}", r.rank, r.lemma),
                     group_digits(static_cast<double>(r.focus.f), 0),
                     group_digits(static_cast<double>(r.reference.f), 0),
                     group_digits(r.focus.fpm, 2), group_digits(r.reference.fpm, 2),
                     group_digits(static_cast<double>(r.focus.docf), 0),
                     group_digits(static_cast<double>(r.reference.docf), 0),
                     format_rel_docf(r.focus.rel_docf),
                     format_rel_docf(r.reference.rel_docf),
                     group_digits(r.focus.arf, 2), group_digits(r.reference.arf, 2),
                     group_digits(r.focus.aldf, 2), group_digits(r.reference.aldf, 2),
                     group_digits(r.score, 1)});
  }
  return out + aligned(table);
}

std::string render_collocates(const std::vector<CollocateRow>& rows,
                              const NodeSpec& node, ReportFormat format,
                              const ReportHeader& header) {
  if (format == ReportFormat::Json) {
    ordered_json list = ordered_json::array();
    for (const auto& r : rows) {
      list.push_back({{"collocate", r.collocate},
                      {"co_f", r.co_f},
                      {"log_dice", r.log_dice},
                      {"relation", r.relation},
                      {"node_f", r.node_f},
                      {"coll_f", r.coll_f}});
    }
    return json_report(header, {{"node", to_string(node)}, {"collocates", std::move(list)}});
  }
  std::string out = comment_header(header);
  if (format == ReportFormat::Tsv) {
    out += tsv_line({"collocate", "co_f", "log_dice", "relation", "node_f", "coll_f"});
    for (const auto& r : rows) {
      out += tsv_line({r.collocate, std::to_string(r.co_f), format_fixed(r.log_dice, 2),
                       r.relation, std::to_string(r.node_f), std::to_string(r.coll_f)});
    }
    return out;
  }
  std::vector<std::vector<std::string>> table;
  table.push_back({fmt::format("collocates of \"{}\"", to_string(node)), "co_f", "logDice"});
  for (const auto& r : rows) {
    table.push_back({r.collocate, group_digits(static_cast<double>(r.co_f), 0),
                     format_fixed(r.log_dice, 1)});
  }
  return out + aligned(table);
}

namespace {

std::string score_cell(const CollocateRow& r, int decimals) {
  return r.share ? fmt::format("{:.{}f}%", *r.share, decimals)
                 : format_fixed(r.log_dice, decimals);
}

std::string group_title(const std::string& table, const NodeSpec& node) {
  const std::string q = "\"" + to_string(node) + "\"";
  if (table == "modifier_of") return "modifiers of " + q;
  if (table == "noun_modified_by") return "nouns modified by " + q;
  if (table == "and_or") return q + " and/or ...";
  return "prepositional phrases";
}

}  // namespace

std::string render_sketch(const Sketch& sk, ReportFormat format,
                          const ReportHeader& header) {
  if (format == ReportFormat::Json) {
    ordered_json tables = ordered_json::array();
    for (const auto& t : sk.tables) {
      ordered_json rows = ordered_json::array();
      for (const auto& r : t.rows) {
        ordered_json row = {{"collocate", r.collocate},
                            {"relation", r.relation},
                            {"display", display_collocate(r, sk.node)},
                            {"co_f", r.co_f},
                            {"coll_f", r.coll_f},
                            {"log_dice", r.log_dice}};
        if (r.share) row["share"] = *r.share;
        rows.push_back(std::move(row));
      }
      tables.push_back({{"name", t.name}, {"rows", std::move(rows)}});
    }
    return json_report(header, {{"node", to_string(sk.node)},
                                {"node_f", sk.node_f},
                                {"tables", std::move(tables)}});
  }

  std::string out = comment_header(header);
  if (format == ReportFormat::Tsv) {
    out += fmt::format("# node: {} f={}\n", to_string(sk.node), sk.node_f);
    out += tsv_line({"table", "relation", "collocate", "display", "co_f", "score"});
    for (const auto& t : sk.tables) {
      for (const auto& r : t.rows) {
        out += tsv_line({t.name, r.relation, r.collocate, display_collocate(r, sk.node),
                         std::to_string(r.co_f), score_cell(r, 2)});
      }
    }
    return out;
  }

  // Side-by-side column groups, one per relation table.
  out += fmt::format("{} {}\n\n", to_string(sk.node),
                     group_digits(static_cast<double>(sk.node_f), 0));
  std::size_t depth = 0;
  for (const auto& t : sk.tables) depth = std::max(depth, t.rows.size());
  std::vector<std::vector<std::string>> cells(depth + 1);
  for (const auto& t : sk.tables) {
    std::vector<std::string> column;
    column.push_back(group_title(t.name, sk.node));
    for (const auto& r : t.rows) {
      column.push_back(fmt::format("{} {} {}", display_collocate(r, sk.node),
                                   group_digits(static_cast<double>(r.co_f), 0),
                                   score_cell(r, 1)));
    }
    std::size_t w = 0;
    for (const auto& c : column) w = std::max(w, c.size());
    column.resize(depth + 1);
    for (std::size_t i = 0; i <= depth; ++i) {
      cells[i].push_back(fmt::format("{:<{}}", column[i], w));
    }
  }
  for (const auto& line : cells) {
    std::string s;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) s += " | ";
      s += line[i];
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out += s + "\n";
  }
  return out;
}

std::string render_profiles(
    const NodeSpec& node,
    const std::vector<std::pair<std::string, FreqProfile>>& profiles,
    ReportFormat format, const ReportHeader& header) {
  if (format == ReportFormat::Json) {
    ordered_json list = ordered_json::array();
    for (const auto& [scope, p] : profiles) {
      ordered_json row = {{"scope", scope}};
      for (auto& [k, v] : profile_json(p).items()) row[k] = v;
      list.push_back(std::move(row));
    }
    return json_report(header, {{"node", to_string(node)}, {"profiles", std::move(list)}});
  }
  std::string out = comment_header(header);
  if (format == ReportFormat::Tsv) {
    out += tsv_line({"scope", "node", "f", "fpm", "docf", "reldocf", "arf", "aldf",
                     "aldf_clamped"});
    for (const auto& [scope, p] : profiles) {
      out += tsv_line({scope, to_string(node), std::to_string(p.f), format_fixed(p.fpm, 2),
                       std::to_string(p.docf), format_rel_docf(p.rel_docf),
                       format_fixed(p.arf, 2), format_fixed(p.aldf, 2),
                       p.aldf_clamped ? "yes" : "no"});
    }
    return out;
  }
  std::vector<std::vector<std::string>> table;
  table.push_back({"scope", "f", "Freq/M", "DOCF", "Rel DOCF", "ARF", "ALDF"});
  for (const auto& [scope, p] : profiles) {
    table.push_back({scope, group_digits(static_cast<double>(p.f), 0),
                     group_digits(p.fpm, 2),
                     group_digits(static_cast<double>(p.docf), 0),
                     format_rel_docf(p.rel_docf), group_digits(p.arf, 2),
                     group_digits(p.aldf, 2) + (p.aldf_clamped ? "*" : "")});
  }
  return out + aligned(table);
}

}  // namespace corpex
