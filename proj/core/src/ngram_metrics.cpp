// core/src/ngram_metrics.cpp

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

#include "captrade/ngram_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <unordered_set>

namespace captrade {
namespace {

constexpr double kCiderSigma = 6.0;
constexpr double kRougeBeta = 1.2;

std::string join_ngram(std::span<const std::string> tokens, std::size_t start, int n) {
  std::string key = tokens[start];
  for (int i = 1; i < n; ++i) {
    key += ' ';
    key += tokens[start + static_cast<std::size_t>(i)];
  }
  return key;
}

// Closest reference length; ties broken toward the shorter reference.
std::int64_t closest_ref_len(std::size_t candidate_len,
                             const std::vector<Caption>& references) {
  std::int64_t best = 0;
  std::int64_t best_dist = -1;
  for (const auto& r : references) {
    const auto len = static_cast<std::int64_t>(r.tokens.size());
    const std::int64_t dist =
        std::llabs(len - static_cast<std::int64_t>(candidate_len));
    if (best_dist < 0 || dist < best_dist || (dist == best_dist && len < best)) {
      best = len;
      best_dist = dist;
    }
  }
  return best;
}

int lcs_length(std::span<const std::string> a, std::span<const std::string> b) {
  if (a.empty() || b.empty()) return 0;
  std::vector<int> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      if (a[i - 1] == b[j - 1]) {
        cur[j] = prev[j - 1] + 1;
      } else {
        cur[j] = std::max(prev[j], cur[j - 1]);
      }
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

}  // namespace

NGramProfile ngram_profile(std::span<const std::string> tokens, int n) {
  if (n < 1 || n > kMaxNgramOrder) {
    throw std::invalid_argument("ngram_profile: order must be in [1, 4]");
  }
  NGramProfile profile;
  profile.n = n;
  if (tokens.size() + 1 > static_cast<std::size_t>(n)) {
    const std::size_t windows = tokens.size() - static_cast<std::size_t>(n) + 1;
    for (std::size_t s = 0; s < windows; ++s) {
      ++profile.counts[join_ngram(tokens, s, n)];
    }
    profile.total = static_cast<int>(windows);
  }
  return profile;
}

double DfStats::idf(int n, const std::string& key) const {
  const auto& freq = doc_freq[static_cast<std::size_t>(n - 1)];
  const auto it = freq.find(key);
  const double df = it == freq.end() ? 1.0 : std::max(1.0, static_cast<double>(it->second));
  return std::log(static_cast<double>(num_images)) - std::log(df);
}

DfStats compute_df(const std::vector<ReferenceSet>& references) {
  if (references.empty()) {
    throw std::invalid_argument("compute_df: empty reference corpus");
  }
  DfStats df;
  df.num_images = references.size();
  for (const auto& set : references) {
    std::array<std::unordered_set<std::string>, kMaxNgramOrder> image_ngrams;
    for (const auto& ref : set.references) {
      for (int n = 1; n <= kMaxNgramOrder; ++n) {
        const auto profile = ngram_profile(ref.tokens, n);
        for (const auto& [key, count] : profile.counts) {
          image_ngrams[static_cast<std::size_t>(n - 1)].insert(key);
        }
      }
    }
    for (int n = 0; n < kMaxNgramOrder; ++n) {
      for (const auto& key : image_ngrams[static_cast<std::size_t>(n)]) {
        ++df.doc_freq[static_cast<std::size_t>(n)][key];
      }
    }
  }
  return df;
}

CiderVector cider_vector(const Caption& caption, const DfStats& df) {
  if (df.num_images == 0) {
    throw std::invalid_argument("cider_vector: df has no images");
  }
  CiderVector vec;
  vec.length = static_cast<int>(caption.tokens.size());
  for (int n = 1; n <= kMaxNgramOrder; ++n) {
    const auto profile = ngram_profile(caption.tokens, n);
    auto& entries = vec.weights[static_cast<std::size_t>(n - 1)];
    entries.reserve(profile.counts.size());
    for (const auto& [key, count] : profile.counts) {
      entries.emplace_back(key, static_cast<double>(count));
    }
    // Sorted entries give an order-independent accumulation sequence.
    std::sort(entries.begin(), entries.end());
    double norm_sq = 0.0;
    for (auto& [key, w] : entries) {
      w *= df.idf(n, key);
      norm_sq += w * w;
    }
    vec.norm_sq[static_cast<std::size_t>(n - 1)] = norm_sq;
  }
  return vec;
}

double cider_sim(const CiderVector& candidate, const CiderVector& reference) {
  const double delta = static_cast<double>(candidate.length - reference.length);
  const double penalty = std::exp(-(delta * delta) / (2.0 * kCiderSigma * kCiderSigma));
  double acc = 0.0;
  for (std::size_t n = 0; n < kMaxNgramOrder; ++n) {
    const auto& cw = candidate.weights[n];
    const auto& rw = reference.weights[n];
    double num = 0.0;
    for (std::size_t i = 0, j = 0; i < cw.size() && j < rw.size();) {
      if (cw[i].first < rw[j].first) {
        ++i;
      } else if (rw[j].first < cw[i].first) {
        ++j;
      } else {
        num += std::min(cw[i].second, rw[j].second) * rw[j].second;
        ++i;
        ++j;
      }
    }
    const double cs = candidate.norm_sq[n];
    const double rs = reference.norm_sq[n];
    double val = 0.0;
    if (num == cs && num == rs) {
      // Bitwise-identical vectors: the cosine is 1 by definition. Going
      // through the norm product here costs a final ulp.
      val = num > 0.0 ? 1.0 : 0.0;
    } else if (cs > 0.0 && rs > 0.0) {
      val = num / (std::sqrt(cs) * std::sqrt(rs));
    }
    acc += val * penalty;
  }
  return acc / static_cast<double>(kMaxNgramOrder);
}

double cider(const Caption& candidate, const ReferenceSet& refs, const DfStats& df) {
  if (refs.references.empty()) {
    throw std::invalid_argument("cider: empty reference set");
  }
  const CiderVector cand = cider_vector(candidate, df);
  double acc = 0.0;
  for (const auto& ref : refs.references) {
    acc += cider_sim(cand, cider_vector(ref, df));
  }
  return 10.0 * acc / static_cast<double>(refs.references.size());
}

void BleuStats::add(const Caption& candidate, const std::vector<Caption>& references,
                    int max_n) {
  if (references.empty()) {
    throw std::invalid_argument("BleuStats::add: empty reference list");
  }
  for (int n = 1; n <= max_n; ++n) {
    const auto cand_profile = ngram_profile(candidate.tokens, n);
    std::int64_t matched = 0;
    for (const auto& [key, count] : cand_profile.counts) {
      int best = 0;
      for (const auto& ref : references) {
        const auto ref_profile = ngram_profile(ref.tokens, n);
        const auto it = ref_profile.counts.find(key);
        if (it != ref_profile.counts.end()) best = std::max(best, it->second);
      }
      matched += std::min(count, best);
    }
    matches[static_cast<std::size_t>(n - 1)] += matched;
    totals[static_cast<std::size_t>(n - 1)] += cand_profile.total;
  }
  candidate_len += static_cast<std::int64_t>(candidate.tokens.size());
  reference_len += closest_ref_len(candidate.tokens.size(), references);
}

void BleuStats::merge(const BleuStats& other) {
  for (std::size_t n = 0; n < kMaxNgramOrder; ++n) {
    matches[n] += other.matches[n];
    totals[n] += other.totals[n];
  }
  candidate_len += other.candidate_len;
  reference_len += other.reference_len;
}

double BleuStats::score(int max_n, bool smooth) const {
  if (max_n < 1 || max_n > kMaxNgramOrder) {
    throw std::invalid_argument("BleuStats::score: max_n must be in [1, 4]");
  }
  double log_precision_sum = 0.0;
  for (int n = 1; n <= max_n; ++n) {
    const auto m = matches[static_cast<std::size_t>(n - 1)];
    const auto t = totals[static_cast<std::size_t>(n - 1)];
    double p;
    if (m > 0) {
      p = static_cast<double>(m) / static_cast<double>(t);
    } else if (smooth && n >= 2) {
      p = 1.0 / static_cast<double>(t + 1);
    } else {
      return 0.0;
    }
    log_precision_sum += std::log(p);
  }
  double bp = 1.0;
  if (candidate_len == 0) return 0.0;
  if (candidate_len < reference_len) {
    bp = std::exp(1.0 - static_cast<double>(reference_len) /
                            static_cast<double>(candidate_len));
  }
  return 100.0 * bp * std::exp(log_precision_sum / static_cast<double>(max_n));
}

double bleu(const std::vector<Caption>& candidates,
            const std::vector<ReferenceSet>& refs, int max_n) {
  if (candidates.size() != refs.size()) {
    throw std::invalid_argument("bleu: candidates and refs differ in length");
  }
  if (candidates.empty()) {
    throw std::invalid_argument("bleu: empty corpus");
  }
  BleuStats stats;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    stats.add(candidates[i], refs[i].references, max_n);
  }
  return stats.score(max_n, /*smooth=*/false);
}

double sentence_bleu(const Caption& candidate,
                     const std::vector<Caption>& references, int max_n) {
  BleuStats stats;
  stats.add(candidate, references, max_n);
  return stats.score(max_n, /*smooth=*/true);
}

double rouge_l(const Caption& candidate, const ReferenceSet& refs) {
  if (refs.references.empty()) {
    throw std::invalid_argument("rouge_l: empty reference set");
  }
  if (candidate.tokens.empty()) return 0.0;
  const double beta_sq = kRougeBeta * kRougeBeta;
  double best = 0.0;
  for (const auto& ref : refs.references) {
    if (ref.tokens.empty()) continue;
    const int lcs = lcs_length(candidate.tokens, ref.tokens);
    if (lcs == 0) continue;
    const double prec = static_cast<double>(lcs) / static_cast<double>(candidate.tokens.size());
    const double rec = static_cast<double>(lcs) / static_cast<double>(ref.tokens.size());
    const double f = (1.0 + beta_sq) * prec * rec / (rec + beta_sq * prec);
    best = std::max(best, f);
  }
  return 100.0 * best;
}

double div_n(const CaptionSet& set, int n) {
  if (set.captions.empty()) {
    throw std::invalid_argument("div_n: empty caption set");
  }
  std::unordered_set<std::string> distinct;
  std::size_t total_words = 0;
  for (const auto& c : set.captions) {
    total_words += c.tokens.size();
    const auto profile = ngram_profile(c.tokens, n);
    for (const auto& [key, count] : profile.counts) distinct.insert(key);
  }
  if (total_words == 0) {
    throw std::invalid_argument("div_n: caption set has zero total words");
  }
  return static_cast<double>(distinct.size()) / static_cast<double>(total_words);
}

double mbleu(const CaptionSet& set, int n) {
  const std::size_t k = set.captions.size();
  if (k < 2) {
    throw std::invalid_argument("mbleu: needs at least two captions");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Caption> rest;
    rest.reserve(k - 1);
    for (std::size_t j = 0; j < k; ++j) {
      if (j != i) rest.push_back(set.captions[j]);
    }
    acc += sentence_bleu(set.captions[i], rest, n);
  }
  return acc / static_cast<double>(k);
}

double uniqueness(const std::vector<CaptionSet>& sets) {
  if (sets.empty()) {
    throw std::invalid_argument("uniqueness: empty list of caption sets");
  }
  double acc = 0.0;
  for (const auto& set : sets) {
    if (set.captions.empty()) {
      throw std::invalid_argument("uniqueness: empty caption set");
    }
    std::unordered_set<std::string> distinct;
    for (const auto& c : set.captions) distinct.insert(c.raw);
    acc += static_cast<double>(distinct.size()) / static_cast<double>(set.captions.size());
  }
  return acc / static_cast<double>(sets.size());
}

}  // namespace captrade
