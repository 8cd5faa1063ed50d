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

#include "assocmwe/csv.h"

#include "assocmwe/error.h"

namespace assocmwe {

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::string Join(const std::vector<std::string> &parts) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ',';
    out += parts[i];
  }
  return out;
}

}  // namespace

std::vector<CsvRow> ParseCsv(std::string_view content, char delimiter) {
  if (content.substr(0, 3) == "\xEF\xBB\xBF") content.remove_prefix(3);

  std::vector<CsvRow> rows;
  size_t pos = 0;
  int line = 1;
  const size_t n = content.size();

  while (pos < n) {
    // Skip blank and comment lines.
    if (content[pos] == '\n' || content[pos] == '\r') {
      if (content[pos] == '\r' && pos + 1 < n && content[pos + 1] == '\n') ++pos;
      ++pos;
      ++line;
      continue;
    }
    if (content[pos] == '#') {
      while (pos < n && content[pos] != '\n') ++pos;
      continue;
    }

    CsvRow row;
    row.line = line;
    std::string field;
    bool in_quotes = false;
    bool was_quoted = false;
    bool done = false;
    while (!done) {
      if (pos >= n) {
        if (in_quotes) throw ParseError("unterminated quoted field", row.line);
        row.fields.push_back(std::move(field));
        break;
      }
      char c = content[pos];
      if (in_quotes) {
        if (c == '"') {
          if (pos + 1 < n && content[pos + 1] == '"') {
            field += '"';
            pos += 2;
          } else {
            in_quotes = false;
            ++pos;
          }
        } else {
          if (c == '\n') ++line;
          field += c;
          ++pos;
        }
        continue;
      }
      if (c == '"' && !was_quoted && Trim(field).empty()) {
        field.clear();
        in_quotes = true;
        was_quoted = true;
        ++pos;
      } else if (c == delimiter) {
        row.fields.push_back(std::move(field));
        field.clear();
        was_quoted = false;
        ++pos;
      } else if (c == '\r' || c == '\n') {
        if (c == '\r' && pos + 1 < n && content[pos + 1] == '\n') ++pos;
        ++pos;
        ++line;
        row.fields.push_back(std::move(field));
        done = true;
      } else {
        field += c;
        ++pos;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string CsvEscape(std::string_view field, char delimiter) {
  if (field.find_first_of(std::string{delimiter, '"', '\n', '\r'}) ==
      std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string CsvLine(const std::vector<std::string> &fields, char delimiter) {
  std::string out;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += delimiter;
    out += CsvEscape(fields[i], delimiter);
  }
  out += '\n';
  return out;
}

void ExpectHeader(const CsvRow &row, const std::vector<std::string> &expected,
                  const std::vector<std::string> &optional) {
  bool ok = row.fields.size() >= expected.size() &&
            row.fields.size() <= expected.size() + optional.size();
  for (size_t i = 0; ok && i < row.fields.size(); ++i) {
    const std::string &want =
        i < expected.size() ? expected[i] : optional[i - expected.size()];
    ok = Trim(row.fields[i]) == want;
  }
  if (!ok) {
    throw ParseError("expected header '" + Join(expected) + "'", row.line);
  }
}

}  // namespace assocmwe
