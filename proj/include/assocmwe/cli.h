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

#ifndef ASSOCMWE_CLI_H_
#define ASSOCMWE_CLI_H_

#include <optional>
#include <ostream>
#include <span>
#include <string>

#include "assocmwe/classifier.h"
#include "assocmwe/corpus.h"
#include "assocmwe/metrics.h"
#include "assocmwe/report.h"

namespace assocmwe {

enum class MissingPolicy { kSkip, kWorst };

// Everything a command needs. Built from the JSON config file (if any) with
// command-line flags taking precedence.
struct RunConfig {
  std::optional<std::string> associations;
  std::optional<std::string> metadata;
  std::optional<std::string> registry;
  std::optional<std::string> fixture;
  std::optional<std::string> vectors;
  TableFormat table_format = TableFormat::kCsv;
  Thresholds thresholds;
  MatcherMode matcher = MatcherMode::Exact();
  OutputFormat format = OutputFormat::kTsv;
  MissingPolicy missing = MissingPolicy::kSkip;
  std::string joiner = "_";
  std::optional<int> first_k;
};

// Raised for bad flags or config; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Environment variable naming a default config file.
inline constexpr const char *kConfigEnvVar = "ASSOCMWE_CONFIG";

// Applies the keys of a JSON config object to `config`. Relative paths are
// resolved against `base_dir`. Throws UsageError on unknown keys or bad
// values.
void ApplyConfigJson(std::string_view content, const std::string &base_dir,
                     RunConfig *config);

// Entry point of the `assocmwe` tool. `args` includes the program name.
// Returns 0 on success, 1 on invalid input data, 2 on a usage error.
int Run(std::span<const std::string> args, std::ostream &out, std::ostream &err);

}  // namespace assocmwe

#endif  // ASSOCMWE_CLI_H_
