// core/include/captrade/ngram_metrics.hpp

// Copyright 2026  The captrade authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef CAPTRADE_NGRAM_METRICS_HPP_
#define CAPTRADE_NGRAM_METRICS_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "captrade/corpus.hpp"

namespace captrade {

inline constexpr int kMaxNgramOrder = 4;

/// Sliding-window n-gram counts of one token sequence. Keys are the
/// n-gram tokens joined with a single space (tokens never contain
/// whitespace, so the encoding is unambiguous).
struct NGramProfile {
  int n = 1;
  std::unordered_map<std::string, int> counts;
  int total = 0;  // max(0, len - n + 1)
};

NGramProfile ngram_profile(std::span<const std::string> tokens, int n);

/// Corpus document frequencies for orders 1..4: doc_freq[n-1][g] is the
/// number of reference images whose references contain g at least once.
struct DfStats {
  std::array<std::unordered_map<std::string, int>, kMaxNgramOrder> doc_freq;
  std::size_t num_images = 0;

  /// log(num_images / df), with unseen n-grams clamped to df = 1.
  double idf(int n, const std::string& key) const;
};

DfStats compute_df(const std::vector<ReferenceSet>& references);

/// Per-order TF-IDF weights of one caption, entries sorted by n-gram key
/// so pairwise scoring is deterministic. Reused across pairwise calls
/// when building similarity kernels.
struct CiderVector {
  std::array<std::vector<std::pair<std::string, double>>, kMaxNgramOrder> weights;
  std::array<double, kMaxNgramOrder> norm_sq{};
  int length = 0;  // token count
};

CiderVector cider_vector(const Caption& caption, const DfStats& df);

/// Pairwise CIDEr-D similarity in [0, 1]: per order, the ref-clipped
/// TF-IDF cosine times the Gaussian length penalty exp(-d^2/(2*6^2)),
/// averaged over the four orders.
double cider_sim(const CiderVector& candidate, const CiderVector& reference);

/// CIDEr-D in [0, 10]: 10 x mean of cider_sim over the references.
double cider(const Caption& candidate, const ReferenceSet& refs, const DfStats& df);

/// Corpus BLEU accumulator: clipped n-gram matches and totals plus the
/// brevity-penalty lengths, mergeable across shards.
struct BleuStats {
  std::array<std::int64_t, kMaxNgramOrder> matches{};
  std::array<std::int64_t, kMaxNgramOrder> totals{};
  std::int64_t candidate_len = 0;
  std::int64_t reference_len = 0;  // sum of closest reference lengths

  void add(const Caption& candidate, const std::vector<Caption>& references,
           int max_n = kMaxNgramOrder);
  void merge(const BleuStats& other);

  /// Geometric mean of clipped precisions x brevity penalty, scaled to
  /// [0, 100]. With `smooth`, zero match counts for orders >= 2 are
  /// add-one smoothed ((m+1)/(t+1)); order-1 misses still give 0.
  double score(int max_n = kMaxNgramOrder, bool smooth = false) const;
};

/// Corpus BLEU in [0, 100]; candidates[i] is scored against refs[i].
double bleu(const std::vector<Caption>& candidates,
            const std::vector<ReferenceSet>& refs, int max_n = kMaxNgramOrder);

/// Smoothed single-sentence BLEU in [0, 100] (used by mbleu).
double sentence_bleu(const Caption& candidate,
                     const std::vector<Caption>& references,
                     int max_n = kMaxNgramOrder);

/// ROUGE-L in [0, 100]: max over references of the LCS F-measure with
/// beta = 1.2 weighting of recall.
double rouge_l(const Caption& candidate, const ReferenceSet& refs);

/// Distinct n-grams across the K captions divided by the total word
/// count across the K captions (words, not n-grams, by definition).
double div_n(const CaptionSet& set, int n);

/// Mean sentence BLEU-n of each caption against the other K-1. Lower
/// means more diverse. Requires K >= 2.
double mbleu(const CaptionSet& set, int n = kMaxNgramOrder);

/// Mean over images of (distinct raw captions / K).
double uniqueness(const std::vector<CaptionSet>& sets);

}  // namespace captrade

#endif  // CAPTRADE_NGRAM_METRICS_HPP_
