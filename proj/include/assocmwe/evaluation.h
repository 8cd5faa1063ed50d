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

#ifndef ASSOCMWE_EVALUATION_H_
#define ASSOCMWE_EVALUATION_H_

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace assocmwe {

enum class Direction { kAscending, kDescending };

std::string_view ToString(Direction direction);

struct RankedItem {
  std::string phrase;
  std::optional<double> key;  // unset for items ranked last without a score
};

// Phrases ordered by key; equal keys in phrase (byte) order. Unscored items,
// if any, follow all scored ones, again in phrase order.
struct RankedList {
  Direction direction = Direction::kAscending;
  std::vector<RankedItem> items;
};

using ScoreMap = std::map<std::string, double, std::less<>>;

// Throws DomainError if `scores` is empty or holds a non-finite key, and
// ConsistencyError if an unscored phrase also has a score.
RankedList RankPhrases(const ScoreMap &scores, Direction direction,
                       std::span<const std::string> unscored = {});

// Mean of precision@rank over the ranks of relevant items. Throws DomainError
// if `relevant` is empty, ConsistencyError if a relevant phrase is not ranked.
double AveragePrecision(const RankedList &ranked,
                        const std::set<std::string, std::less<>> &relevant);

// CSV `rank,phrase,key,relevant` (1-based rank, key empty when unscored,
// relevant as 0/1).
std::string SerializeRanking(const RankedList &ranked,
                             const std::set<std::string, std::less<>> &relevant);

}  // namespace assocmwe

#endif  // ASSOCMWE_EVALUATION_H_
