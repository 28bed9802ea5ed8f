#include "corpex/colloc.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "corpex/error.hpp"
#include "corpex/parallel.hpp"
#include "corpex/sketch.hpp"

namespace corpex {

double log_dice(std::uint64_t f_xy, std::uint64_t f_x, std::uint64_t f_y) {
  if (f_xy == 0) throw Error(Errc::ZeroCooccurrence, "logDice of zero co-occurrence");
  return 14.0 + std::log2(2.0 * static_cast<double>(f_xy) /
                          (static_cast<double>(f_x) + static_cast<double>(f_y)));
}

std::uint64_t scope_frequency(const Scope& scope, LexId lemma) {
  const PostingList& pl = scope.index().lemma_postings(lemma);
  if (scope.doc_count() == scope.index().doc_count()) return pl.positions.size();
  std::uint64_t f = 0;
  for (const auto& run : pl.runs) {
    if (scope.contains(run.doc)) f += run.count;
  }
  return f;
}

CoCounts cooccurrences(const Scope& scope, const NodeCount& hits,
                       const WindowOptions& opts) {
  const Index& index = scope.index();
  const Position n = index.token_count();
  const auto counted = [&](Position q) {
    const Pos tag = index.pos_at(q);
    if (tag == Pos::PUNCT) return opts.include_punct;
    if (tag == Pos::NUM) return opts.include_num;
    return true;
  };

  const std::size_t chunks = chunk_count(hits.positions.size(), opts.threads);
  std::vector<std::unordered_map<LexId, std::uint64_t>> parts(chunks);
  parallel_chunks(
      hits.positions.size(), opts.threads,
      [&](std::size_t c, std::size_t begin, std::size_t end) {
        auto& counts = parts[c];
        for (std::size_t h = begin; h < end; ++h) {
          const Position first = hits.positions[h];
          const Position last = first + hits.width - 1;
          // Leftwards: stop once the token to our right opens a sentence.
          for (Position k = 1; k <= opts.window && k <= first; ++k) {
            const Position q = first - k;
            if (index.sentence_starts_at(q + 1)) break;
            if (counted(q)) ++counts[index.lemma_at(q)];
          }
          for (Position k = 1; k <= opts.window; ++k) {
            const Position q = last + k;
            if (q >= n || index.sentence_starts_at(q)) break;
            if (counted(q)) ++counts[index.lemma_at(q)];
          }
        }
      });

  std::unordered_map<LexId, std::uint64_t> merged;
  for (auto& part : parts) {
    for (const auto& [id, c] : part) merged[id] += c;
  }
  CoCounts out(merged.begin(), merged.end());
  std::sort(out.begin(), out.end());
  return out;
}

CoCounts cooccurrences(const Scope& scope, const NodeSpec& node,
                       const WindowOptions& opts) {
  return cooccurrences(scope, count_node(scope, node), opts);
}

void sort_by_log_dice(std::vector<CollocateRow>& rows) {
  std::sort(rows.begin(), rows.end(), [](const CollocateRow& a, const CollocateRow& b) {
    if (a.log_dice != b.log_dice) return a.log_dice > b.log_dice;
    if (a.co_f != b.co_f) return a.co_f > b.co_f;
    if (a.collocate != b.collocate) return a.collocate < b.collocate;
    return a.relation < b.relation;
  });
}

std::vector<CollocateRow> collocates(const Scope& scope, const NodeSpec& node,
                                     const CollocateOptions& opts) {
  const Index& index = scope.index();
  const NodeCount hits = count_node(scope, node);
  if (hits.f == 0) {
    throw Error(Errc::NodeAbsent, "'" + to_string(node) + "' does not occur in scope");
  }
  const auto self = node_lemmas(node);
  const auto is_self = [&](const std::string& lemma) {
    return std::find(self.begin(), self.end(), lemma) != self.end();
  };

  std::vector<CollocateRow> rows;
  const auto add = [&](LexId id, std::uint64_t co_f, std::string relation) {
    const std::string& lemma = index.lemmas().at(id);
    if (co_f < opts.min_cof || co_f == 0 || is_self(lemma)) return;
    CollocateRow row;
    row.collocate = lemma;
    row.relation = std::move(relation);
    row.co_f = co_f;
    row.node_f = hits.f;
    row.coll_f = scope_frequency(scope, id);
    row.log_dice = log_dice(co_f, row.node_f, row.coll_f);
    rows.push_back(std::move(row));
  };

  if (opts.source == RelationSource::Window) {
    WindowOptions w;
    w.window = opts.window;
    w.include_punct = opts.include_punct;
    w.include_num = opts.include_num;
    w.threads = opts.threads;
    for (const auto& [id, c] : cooccurrences(scope, hits, w)) add(id, c, "window");
  } else {
    const auto matches = match_relations(scope, node, kAllRelations, opts.threads);
    for (const auto& m : matches.counts) {
      add(m.lemma, m.count, std::string(relation_name(m.relation)));
    }
  }

  sort_by_log_dice(rows);
  if (rows.size() > opts.top) rows.resize(opts.top);
  return rows;
}

}  // namespace corpex
