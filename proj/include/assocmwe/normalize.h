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

#ifndef ASSOCMWE_NORMALIZE_H_
#define ASSOCMWE_NORMALIZE_H_

#include <string>
#include <string_view>

namespace assocmwe {

// Canonical form of a survey string: NFC, full Unicode case folding, trimmed,
// with every internal run of Unicode whitespace replaced by one ASCII space.
// Returns an empty string when nothing remains. Invalid UTF-8 sequences are
// replaced with U+FFFD. Idempotent.
std::string NormalizeResponse(std::string_view raw);

// Number of code points shared at the start of two UTF-8 strings.
size_t CommonPrefixLength(std::string_view a, std::string_view b);

}  // namespace assocmwe

#endif  // ASSOCMWE_NORMALIZE_H_
