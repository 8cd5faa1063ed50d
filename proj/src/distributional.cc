// Copyright 2026 The assocmwe Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "assocmwe/distributional.h"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "assocmwe/csv.h"
#include "assocmwe/error.h"
#include "assocmwe/metrics.h"
#include "assocmwe/normalize.h"

namespace assocmwe {

namespace {

std::vector<std::string_view> SplitWhitespace(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

double Norm(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v) sum += x * x;
  return std::sqrt(sum);
}

long ParseCount(std::string_view text, int line) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("bad integer '" + std::string(text) + "' in header", line);
  }
  return value;
}

}  // namespace

EmbeddingTable::EmbeddingTable(int dimension, Entries entries)
    : dimension_(dimension), entries_(std::move(entries)) {
  if (dimension_ < 1) throw ValidationError("embedding dimension must be positive");
  for (const auto &[token, v] : entries_) {
    if (static_cast<int>(v.size()) != dimension_) {
      throw ValidationError("vector for '" + token + "' has " +
                            std::to_string(v.size()) + " components, expected " +
                            std::to_string(dimension_));
    }
    for (double x : v) {
      if (!std::isfinite(x)) {
        throw ValidationError("non-finite component in vector for '" + token + "'");
      }
    }
    if (Norm(v) == 0.0) throw ValidationError("zero vector for '" + token + "'");
  }
}

const Vector *EmbeddingTable::Find(std::string_view token) const {
  auto it = entries_.find(NormalizeResponse(token));
  return it == entries_.end() ? nullptr : &it->second;
}

EmbeddingTable LoadVectors(std::string_view content,
                           std::vector<std::string> *warnings) {
  auto warn = [warnings](std::string message) {
    if (warnings != nullptr) warnings->push_back(std::move(message));
  };

  long declared_count = -1;
  int dimension = 0;
  long rows = 0;
  EmbeddingTable::Entries entries;

  int line_no = 0;
  size_t pos = 0;
  while (pos < content.size()) {
    size_t end = content.find('\n', pos);
    if (end == std::string_view::npos) end = content.size();
    std::string_view line = content.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::vector<std::string_view> parts = SplitWhitespace(line);
    if (parts.empty()) continue;

    if (declared_count < 0) {
      if (parts.size() != 2) throw ParseError("expected '<count> <dimension>'", line_no);
      declared_count = ParseCount(parts[0], line_no);
      long dim = ParseCount(parts[1], line_no);
      if (declared_count < 0 || dim < 1 || dim > 1'000'000) {
        throw ParseError("bad header values", line_no);
      }
      dimension = static_cast<int>(dim);
      continue;
    }

    if (static_cast<int>(parts.size()) - 1 != dimension) {
      throw ParseError("expected " + std::to_string(dimension) + " values, found " +
                           std::to_string(parts.size() - 1),
                       line_no);
    }
    Vector v(dimension);
    for (int i = 0; i < dimension; ++i) {
      std::string_view text = parts[i + 1];
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v[i]);
      if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v[i])) {
        throw ParseError("bad number '" + std::string(text) + "'", line_no);
      }
    }
    if (Norm(v) == 0.0) {
      throw ValidationError("zero vector for '" + std::string(parts[0]) +
                            "' (line " + std::to_string(line_no) + ")");
    }
    ++rows;
    std::string token = NormalizeResponse(parts[0]);
    if (!entries.emplace(token, std::move(v)).second) {
      warn("line " + std::to_string(line_no) + ": duplicate token '" + token +
           "' ignored");
    }
  }
  if (declared_count < 0) throw ParseError("missing header", 1);
  if (declared_count != rows) {
    warn("header declares " + std::to_string(declared_count) + " vectors, found " +
         std::to_string(rows));
  }
  return EmbeddingTable(dimension, std::move(entries));
}

std::string SerializeVectors(const EmbeddingTable &table) {
  std::string out = std::to_string(table.size()) + " " +
                    std::to_string(table.dimension()) + "\n";
  for (const auto &[token, v] : table.entries()) {
    out += token;
    for (double x : v) {
      out += ' ';
      out += FormatDouble(x);
    }
    out += '\n';
  }
  return out;
}

Vector CompositionalVector(std::span<const double> v1, std::span<const double> v2) {
  if (v1.size() != v2.size()) throw DomainError("vector dimensions differ");
  const double n1 = Norm(v1);
  const double n2 = Norm(v2);
  if (n1 == 0.0 || n2 == 0.0) throw DomainError("zero-norm component vector");
  Vector out(v1.size());
  for (size_t i = 0; i < v1.size(); ++i) out[i] = v1[i] / n1 + v2[i] / n2;
  return out;
}

double Cosine(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DomainError("vector dimensions differ");
  const double na = Norm(a);
  const double nb = Norm(b);
  if (na == 0.0 || nb == 0.0) throw DomainError("cosine of a zero vector");
  double dot = 0.0;
  for (size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
  return std::clamp(dot / (na * nb), -1.0, 1.0);
}

std::string_view ToString(ScoreStatus status) {
  switch (status) {
    case ScoreStatus::kMissingPhraseVector:
      return "missing_phrase_vector";
    case ScoreStatus::kMissingComponentVector:
      return "missing_component_vector";
    case ScoreStatus::kOk:
      break;
  }
  return "ok";
}

std::string PhraseToken(const PhraseEntry &entry, std::string_view joiner) {
  std::string phrase = NormalizeResponse(entry.phrase);
  std::string token;
  for (char c : phrase) {
    if (c == ' ') {
      token += joiner;
    } else {
      token += c;
    }
  }
  return token;
}

CompositionalityScore ScoreCompositionality(const EmbeddingTable &table,
                                            const PhraseEntry &entry,
                                            std::string_view joiner) {
  CompositionalityScore s;
  s.phrase = entry.phrase;
  const Vector *phrase = table.Find(PhraseToken(entry, joiner));
  if (phrase == nullptr) {
    s.status = ScoreStatus::kMissingPhraseVector;
    return s;
  }
  const Vector *w1 = table.Find(entry.word1);
  const Vector *w2 = table.Find(entry.word2);
  if (w1 == nullptr || w2 == nullptr) {
    s.status = ScoreStatus::kMissingComponentVector;
    return s;
  }
  s.score = Cosine(*phrase, CompositionalVector(*w1, *w2));
  return s;
}

std::string SerializeScores(std::span<const CompositionalityScore> scores) {
  std::string out = CsvLine({"phrase", "score", "status"});
  for (const CompositionalityScore &s : scores) {
    out += CsvLine({s.phrase, s.score ? FormatDouble(*s.score) : "",
                    std::string(ToString(s.status))});
  }
  return out;
}

}  // namespace assocmwe
