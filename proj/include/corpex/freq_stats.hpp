#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "corpex/corpus.hpp"
#include "corpex/scope.hpp"

namespace corpex {

/// Frequency and dispersion of one node in one scope.
struct FreqProfile {
  std::uint64_t f = 0;
  double fpm = 0.0;
  std::uint64_t docf = 0;
  double rel_docf = 0.0;  // fraction in [0, 1]
  double arf = 0.0;
  double aldf = 0.0;
  bool aldf_clamped = false;

  friend bool operator==(const FreqProfile&, const FreqProfile&) = default;
};

/// f * 1e6 / n. Throws ZeroCorpus when n == 0.
double per_million(std::uint64_t f, std::uint64_t n);

/// docf / d. Throws ZeroCorpus when d == 0.
double rel_docf(std::uint64_t docf, std::uint64_t d);

/// Average reduced frequency over circular gaps: with v = n / f,
/// (1 / v) * sum(min(gap, v)). Positions must be strictly ascending and < n.
double arf(std::span<const Position> positions, std::uint64_t n);

struct AldfResult {
  double value = 0.0;
  bool clamped = false;
};

/// Average logarithmic distance frequency, exp(-sum (g/n) ln (g/n)) over the
/// circular gaps g. Equals f for perfectly even spacing and 1 for a single
/// hit; the value is clamped to f (and flagged) against rounding excess.
AldfResult aldf_checked(std::span<const Position> positions, std::uint64_t n);
double aldf(std::span<const Position> positions, std::uint64_t n);

/// All statistics from already-counted hits; positions are mapped to the
/// scope's own stream before computing dispersion.
FreqProfile profile(const Scope& scope, const NodeCount& hits);
FreqProfile profile(const Scope& scope, const NodeSpec& node);

/// Render helpers: fixed two decimals, and relative DOCF as a percentage
/// with "< 0.01 %" for non-zero fractions below 0.0001.
std::string format_fixed(double value, int decimals);
std::string format_rel_docf(double fraction);

}  // namespace corpex
