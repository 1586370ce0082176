// core/include/captrade/corpus.hpp

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

#ifndef CAPTRADE_CORPUS_HPP_
#define CAPTRADE_CORPUS_HPP_

#include <string>
#include <vector>

namespace captrade {

/// Lowercase, drop characters outside [a-z0-9'], split on whitespace.
/// Deterministic; empty input yields an empty list.
std::vector<std::string> tokenize(const std::string& raw);

/// One sentence: the raw text plus its tokenization. Immutable once built.
struct Caption {
  std::string raw;
  std::vector<std::string> tokens;

  static Caption from_raw(std::string raw);
};

/// One image's K sampled captions (K >= 1). Pairwise diversity metrics
/// additionally need K >= 2.
struct CaptionSet {
  std::string image_id;
  std::vector<Caption> captions;
};

/// Ground-truth captions for one image.
struct ReferenceSet {
  std::string image_id;
  std::vector<Caption> references;
};

// JSONL ingestion, one image per line:
//   {"image_id": "<str>", "captions": ["<str>", ...]}
//   {"image_id": "<str>", "references": ["<str>", ...]}
// Malformed lines raise ParseError naming the line number; duplicate
// image ids raise ValidationError.
std::vector<CaptionSet> load_caption_file(const std::string& path);
std::vector<ReferenceSet> load_reference_file(const std::string& path);

void write_caption_file(const std::string& path, const std::vector<CaptionSet>& sets);
void write_reference_file(const std::string& path, const std::vector<ReferenceSet>& sets);

}  // namespace captrade

#endif  // CAPTRADE_CORPUS_HPP_
