#include "corpex/keyness.hpp"

#include <algorithm>
#include <numeric>

#include "corpex/error.hpp"
#include "corpex/parallel.hpp"

namespace corpex {

double simple_maths(double fpm_focus, double fpm_ref, double k) {
  if (!(k > 0.0)) {
    throw Error(Errc::BadSmoothing, "smoothing constant must be positive");
  }
  return (fpm_focus + k) / (fpm_ref + k);
}

namespace {

std::vector<std::uint64_t> focus_counts(const Scope& focus, unsigned threads) {
  const Index& index = focus.index();
  const auto docs = focus.docs();
  const std::size_t vocab = index.lemmas().size();
  std::vector<std::vector<std::uint64_t>> parts(chunk_count(docs.size(), threads));
  parallel_chunks(docs.size(), threads,
                  [&](std::size_t c, std::size_t begin, std::size_t end) {
                    auto& counts = parts[c];
                    counts.assign(vocab, 0);
                    for (std::size_t i = begin; i < end; ++i) {
                      const auto range = index.documents()[docs[i]].range;
                      for (Position p = range.begin; p < range.end; ++p) {
                        ++counts[index.lemma_at(p)];
                      }
                    }
                  });
  std::vector<std::uint64_t> total = std::move(parts.front());
  for (std::size_t c = 1; c < parts.size(); ++c) {
    for (std::size_t i = 0; i < vocab; ++i) total[i] += parts[c][i];
  }
  return total;
}

}  // namespace

std::vector<KeynessRow> keywords(const Scope& focus, const KeywordOptions& opts) {
  if (focus.empty() || focus.token_count() == 0) {
    throw Error(Errc::EmptyScope, "keyness needs a non-empty focus scope");
  }
  if (!(opts.smoothing > 0.0)) {
    throw Error(Errc::BadSmoothing, "smoothing constant must be positive");
  }
  const Index& index = focus.index();
  const Scope reference = complement_scope(index, focus);
  const auto counts = focus_counts(focus, opts.threads);

  struct Candidate {
    LexId lemma;
    std::uint64_t f_focus;
    double score;
  };
  std::vector<Candidate> candidates;
  for (LexId id = 0; id < counts.size(); ++id) {
    const std::uint64_t f = counts[id];
    if (f == 0 || f < opts.min_f) continue;
    const std::uint64_t f_ref = index.lemma_postings(id).positions.size() - f;
    const double fpm_focus = per_million(f, focus.token_count());
    const double fpm_ref = reference.token_count() == 0
                               ? 0.0
                               : per_million(f_ref, reference.token_count());
    candidates.push_back({id, f, simple_maths(fpm_focus, fpm_ref, opts.smoothing)});
  }

  // Lexicon ids are in alphabetical order, so the id breaks remaining ties.
  const auto better = [](const Candidate& a, const Candidate& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.f_focus != b.f_focus) return a.f_focus > b.f_focus;
    return a.lemma < b.lemma;
  };
  const std::size_t keep = std::min(opts.top, candidates.size());
  std::partial_sort(candidates.begin(), candidates.begin() + keep,
                    candidates.end(), better);
  candidates.resize(keep);

  std::vector<KeynessRow> rows(keep);
  parallel_chunks(keep, opts.threads,
                  [&](std::size_t, std::size_t begin, std::size_t end) {
                    for (std::size_t i = begin; i < end; ++i) {
                      const auto& c = candidates[i];
                      NodeSpec node;
                      node.forms = {index.lemmas().at(c.lemma)};
                      KeynessRow& row = rows[i];
                      row.lemma = node.forms[0];
                      row.focus = profile(focus, node);
                      row.reference = profile(reference, node);
                      row.score = c.score;
                      row.rank = i + 1;
                    }
                  });
  return rows;
}

}  // namespace corpex
