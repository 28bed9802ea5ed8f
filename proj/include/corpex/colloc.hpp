#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "corpex/scope.hpp"

namespace corpex {

/// logDice = 14 + log2(2 f_xy / (f_x + f_y)). Throws ZeroCooccurrence when
/// f_xy == 0.
double log_dice(std::uint64_t f_xy, std::uint64_t f_x, std::uint64_t f_y);

struct CollocateRow {
  std::string collocate;
  std::string relation;  // "window" or a relation name
  std::uint64_t co_f = 0;
  std::uint64_t node_f = 0;
  std::uint64_t coll_f = 0;
  double log_dice = 0.0;
  /// Share of node hits in percent; set only for prepositional-phrase rows,
  /// which rank by frequency instead of logDice.
  std::optional<double> share;

  double weight() const noexcept { return share ? *share : log_dice; }

  friend bool operator==(const CollocateRow&, const CollocateRow&) = default;
};

/// Co-occurrence counts by lemma id, ascending by id.
using CoCounts = std::vector<std::pair<LexId, std::uint64_t>>;

struct WindowOptions {
  unsigned window = 5;
  bool include_punct = false;
  bool include_num = true;
  unsigned threads = 0;
};

/// For every node hit, counts each lemma within `window` tokens of the hit's
/// outer edges and inside the same sentence, once per (hit, position).
CoCounts cooccurrences(const Scope& scope, const NodeSpec& node,
                       const WindowOptions& opts);
CoCounts cooccurrences(const Scope& scope, const NodeCount& hits,
                       const WindowOptions& opts);

/// Frequency of a lemma inside the scope.
std::uint64_t scope_frequency(const Scope& scope, LexId lemma);

enum class RelationSource { Window, Sketch };

struct CollocateOptions {
  RelationSource source = RelationSource::Window;
  unsigned window = 5;
  std::uint64_t min_cof = 5;
  std::size_t top = 15;
  bool include_punct = false;
  bool include_num = false;
  unsigned threads = 0;
};

/// Collocates of `node` scored by logDice with scope-wide marginals, sorted
/// (logDice desc, co_f desc, lemma asc) and truncated to `top`. The node's
/// own lemmas are never candidates. Throws NodeAbsent when the node does
/// not occur in the scope.
std::vector<CollocateRow> collocates(const Scope& scope, const NodeSpec& node,
                                     const CollocateOptions& opts);

/// Orders rows by logDice desc, co_f desc, collocate asc, relation asc.
void sort_by_log_dice(std::vector<CollocateRow>& rows);

}  // namespace corpex
