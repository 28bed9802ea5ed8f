#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "corpex/freq_stats.hpp"
#include "corpex/scope.hpp"

namespace corpex {

/// Simple Maths keyness: (fpm_focus + k) / (fpm_ref + k).
/// Throws BadSmoothing unless k > 0.
double simple_maths(double fpm_focus, double fpm_ref, double k);

struct KeynessRow {
  std::string lemma;
  FreqProfile focus;
  FreqProfile reference;
  double score = 0.0;
  std::size_t rank = 0;  // 1-based
};

struct KeywordOptions {
  double smoothing = 1.0;
  std::size_t top = 15;
  std::uint64_t min_f = 5;
  unsigned threads = 0;
};

/// Scores every lemma with focus frequency >= min_f against the complement
/// of `focus`, ordered by score desc, focus f desc, lemma asc. Throws
/// EmptyScope for an empty focus.
std::vector<KeynessRow> keywords(const Scope& focus, const KeywordOptions& opts);

}  // namespace corpex
