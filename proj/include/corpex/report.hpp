#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "corpex/colloc.hpp"
#include "corpex/freq_stats.hpp"
#include "corpex/keyness.hpp"
#include "corpex/sketch.hpp"

namespace corpex {

enum class ReportFormat { Tsv, Text, Json };

/// "tsv", "text" or "json"; throws UnknownFormat otherwise.
ReportFormat parse_report_format(std::string_view name);

struct InputDigest {
  std::string name;
  std::string sha256;
};

/// Provenance block written at the top of every report: tool version,
/// command, effective configuration (compact JSON) and input digests.
struct ReportHeader {
  std::string command;
  std::string config_json;
  std::vector<InputDigest> inputs;
};

inline constexpr std::string_view kToolVersion = CORPEX_VERSION;

/// Column order of keyword reports.
inline constexpr std::string_view kKeywordColumns[] = {
    "lemma",         "f_focus",      "f_ref",     "fpm_focus", "fpm_ref",
    "docf_focus",    "docf_ref",     "reldocf_focus", "reldocf_ref",
    "arf_focus",     "arf_ref",      "aldf_focus", "aldf_ref",  "score"};

std::string render_keywords(const std::vector<KeynessRow>& rows,
                            ReportFormat format, const ReportHeader& header);

std::string render_collocates(const std::vector<CollocateRow>& rows,
                              const NodeSpec& node, ReportFormat format,
                              const ReportHeader& header);

std::string render_sketch(const Sketch& sketch, ReportFormat format,
                          const ReportHeader& header);

/// One profile per named scope (e.g. focus and reference).
std::string render_profiles(
    const NodeSpec& node,
    const std::vector<std::pair<std::string, FreqProfile>>& profiles,
    ReportFormat format, const ReportHeader& header);

/// 1234567.891 -> "1,234,567.89" with the given number of decimals.
std::string group_digits(double value, int decimals);

}  // namespace corpex
