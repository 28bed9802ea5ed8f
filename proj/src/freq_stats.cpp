#include "corpex/freq_stats.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "corpex/error.hpp"

namespace corpex {

double per_million(std::uint64_t f, std::uint64_t n) {
  if (n == 0) throw Error(Errc::ZeroCorpus, "per-million over an empty scope");
  return static_cast<double>(f) * 1e6 / static_cast<double>(n);
}

double rel_docf(std::uint64_t docf, std::uint64_t d) {
  if (d == 0) throw Error(Errc::ZeroCorpus, "document frequency over no documents");
  return static_cast<double>(docf) / static_cast<double>(d);
}

namespace {

/// Calls fn(gap) for each circular gap; the last one wraps to the first hit.
template <class Fn>
void circular_gaps(std::span<const Position> positions, std::uint64_t n, Fn fn) {
  for (std::size_t i = 1; i < positions.size(); ++i) {
    fn(static_cast<double>(positions[i] - positions[i - 1]));
  }
  fn(static_cast<double>(n - positions.back() + positions.front()));
}

}  // namespace

double arf(std::span<const Position> positions, std::uint64_t n) {
  if (positions.empty()) return 0.0;
  const double v = static_cast<double>(n) / static_cast<double>(positions.size());
  double sum = 0.0;
  circular_gaps(positions, n, [&](double gap) { sum += std::min(gap, v); });
  return sum / v;
}

AldfResult aldf_checked(std::span<const Position> positions, std::uint64_t n) {
  if (positions.empty()) return {};
  const double total = static_cast<double>(n);
  double entropy = 0.0;
  circular_gaps(positions, n, [&](double gap) {
    const double share = gap / total;
    entropy -= share * std::log(share);
  });
  const double f = static_cast<double>(positions.size());
  const double value = std::exp(entropy);
  if (value > f) return {f, value > f * (1.0 + 1e-9)};
  return {value, false};
}

double aldf(std::span<const Position> positions, std::uint64_t n) {
  return aldf_checked(positions, n).value;
}

FreqProfile profile(const Scope& scope, const NodeCount& hits) {
  FreqProfile p;
  p.f = hits.f;
  p.docf = hits.docf;
  if (hits.f == 0) return p;
  p.fpm = per_million(hits.f, scope.token_count());
  p.rel_docf = rel_docf(hits.docf, scope.doc_count());

  std::vector<Position> local(hits.positions.size());
  for (std::size_t i = 0; i < local.size(); ++i) {
    local[i] = scope.to_local(hits.positions[i], hits.docs[i]);
  }
  p.arf = arf(local, scope.token_count());
  const auto a = aldf_checked(local, scope.token_count());
  p.aldf = a.value;
  p.aldf_clamped = a.clamped;
  return p;
}

FreqProfile profile(const Scope& scope, const NodeSpec& node) {
  return profile(scope, count_node(scope, node));
}

std::string format_fixed(double value, int decimals) {
  return fmt::format("{:.{}f}", value, decimals);
}

std::string format_rel_docf(double fraction) {
  if (fraction > 0.0 && fraction < 0.0001) return "< 0.01 %";
  return fmt::format("{:.2f} %", fraction * 100.0);
}

}  // namespace corpex
