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

#ifndef ASSOCMWE_CSV_H_
#define ASSOCMWE_CSV_H_

#include <string>
#include <string_view>
#include <vector>

namespace assocmwe {

struct CsvRow {
  int line = 0;  // 1-based line where the row starts
  std::vector<std::string> fields;
};

// Minimal RFC 4180 reader. Handles quoted fields (with embedded delimiters,
// doubled quotes and newlines), CRLF line ends and a leading UTF-8 BOM.
// Blank lines and lines whose first character is '#' are skipped.
std::vector<CsvRow> ParseCsv(std::string_view content, char delimiter = ',');

// Quotes a field only if it contains the delimiter, a quote, or a line break.
std::string CsvEscape(std::string_view field, char delimiter = ',');

// Joins escaped fields and appends '\n'.
std::string CsvLine(const std::vector<std::string> &fields,
                    char delimiter = ',');

// Throws ParseError unless `row` equals `expected` (ignoring surrounding
// whitespace). Trailing optional columns listed in `optional` may be present.
void ExpectHeader(const CsvRow &row, const std::vector<std::string> &expected,
                  const std::vector<std::string> &optional = {});

}  // namespace assocmwe

#endif  // ASSOCMWE_CSV_H_
