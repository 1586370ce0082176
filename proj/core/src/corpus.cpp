// core/src/corpus.cpp

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

#include "captrade/corpus.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "captrade/errors.hpp"

namespace captrade {
namespace {

using nlohmann::json;

bool is_kept(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '\'';
}

// Shared line-oriented loader; `key` is "captions" or "references".
std::vector<std::pair<std::string, std::vector<Caption>>> load_jsonl(
    const std::string& path, const char* key) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(path + ": cannot open file");
  }
  std::vector<std::pair<std::string, std::vector<Caption>>> out;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(path + ":" + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw fail(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw fail("expected a JSON object");
    if (!j.contains("image_id") || !j["image_id"].is_string()) {
      throw fail("missing string field 'image_id'");
    }
    if (!j.contains(key) || !j[key].is_array()) {
      throw fail(std::string("missing array field '") + key + "'");
    }
    const auto& arr = j[key];
    if (arr.empty()) throw fail(std::string("'") + key + "' must not be empty");
    std::vector<Caption> captions;
    captions.reserve(arr.size());
    for (const auto& item : arr) {
      if (!item.is_string()) throw fail(std::string("'") + key + "' entries must be strings");
      captions.push_back(Caption::from_raw(item.get<std::string>()));
    }
    std::string id = j["image_id"].get<std::string>();
    if (!seen_ids.insert(id).second) {
      throw ValidationError(path + ":" + std::to_string(line_no) +
                            ": duplicate image_id '" + id + "'");
    }
    out.emplace_back(std::move(id), std::move(captions));
  }
  return out;
}

void write_jsonl(const std::string& path, const char* key,
                 const std::vector<std::pair<const std::string*,
                                             const std::vector<Caption>*>>& sets) {
  std::ofstream out(path);
  if (!out) throw ValidationError(path + ": cannot open file for writing");
  for (const auto& [id, captions] : sets) {
    json j;
    j["image_id"] = *id;
    json arr = json::array();
    for (const auto& c : *captions) arr.push_back(c.raw);
    j[key] = std::move(arr);
    out << j.dump() << '\n';
  }
}

}  // namespace

std::vector<std::string> tokenize(const std::string& raw) {
  std::vector<std::string> tokens;
  std::string current;
  for (char raw_c : raw) {
    const unsigned char uc = static_cast<unsigned char>(raw_c);
    const char c = static_cast<char>(std::tolower(uc));
    if (std::isspace(uc)) {
      if (!current.empty()) {
        tokens.push_back(std::move(current));
        current.clear();
      }
    } else if (is_kept(c)) {
      current.push_back(c);
    }
    // anything else (punctuation, non-ASCII bytes) is stripped
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

Caption Caption::from_raw(std::string raw) {
  Caption c;
  c.tokens = tokenize(raw);
  c.raw = std::move(raw);
  return c;
}

std::vector<CaptionSet> load_caption_file(const std::string& path) {
  std::vector<CaptionSet> out;
  for (auto& [id, captions] : load_jsonl(path, "captions")) {
    out.push_back(CaptionSet{std::move(id), std::move(captions)});
  }
  return out;
}

std::vector<ReferenceSet> load_reference_file(const std::string& path) {
  std::vector<ReferenceSet> out;
  for (auto& [id, captions] : load_jsonl(path, "references")) {
    out.push_back(ReferenceSet{std::move(id), std::move(captions)});
  }
  return out;
}

void write_caption_file(const std::string& path, const std::vector<CaptionSet>& sets) {
  std::vector<std::pair<const std::string*, const std::vector<Caption>*>> rows;
  rows.reserve(sets.size());
  for (const auto& s : sets) rows.emplace_back(&s.image_id, &s.captions);
  write_jsonl(path, "captions", rows);
}

void write_reference_file(const std::string& path, const std::vector<ReferenceSet>& sets) {
  std::vector<std::pair<const std::string*, const std::vector<Caption>*>> rows;
  rows.reserve(sets.size());
  for (const auto& s : sets) rows.emplace_back(&s.image_id, &s.references);
  write_jsonl(path, "references", rows);
}

}  // namespace captrade
