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

#include "assocmwe/normalize.h"

#include <gtest/gtest.h>

#include <random>

namespace assocmwe {
namespace {

TEST(NormalizeTest, CaseFoldAndTrim) {
  EXPECT_EQ(NormalizeResponse("  Инфляция "), "инфляция");
}

TEST(NormalizeTest, IdentityOnNormalInput) {
  EXPECT_EQ(NormalizeResponse("дача"), "дача");
}

TEST(NormalizeTest, CollapsesWhitespace) {
  EXPECT_EQ(NormalizeResponse("Лента   Новостей"), "лента новостей");
  EXPECT_EQ(NormalizeResponse("a\t  b\n"), "a b");
}

TEST(NormalizeTest, EmptyResult) {
  EXPECT_EQ(NormalizeResponse(""), "");
  EXPECT_EQ(NormalizeResponse(" \t 　"), "");
}

TEST(NormalizeTest, CanonicalComposition) {
  // "й" as и + combining breve composes to U+0439.
  EXPECT_EQ(NormalizeResponse("й"), "й");
  // Ё folds and stays composed.
  EXPECT_EQ(NormalizeResponse("ЁЛКА"), "ёлка");
}

TEST(NormalizeTest, Idempotent) {
  const std::vector<std::string> alphabet = {
      "A", "я", "Я", " ", "\t", "́", "ß", "İ", "ǅ", "e", "̈",
      "Ω", " ", "-", "ё", "\xff"};
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    std::string s;
    int len = rng() % 12;
    for (int i = 0; i < len; ++i) s += alphabet[rng() % alphabet.size()];
    const std::string once = NormalizeResponse(s);
    EXPECT_EQ(NormalizeResponse(once), once) << "input: " << s;
  }
}

TEST(NormalizeTest, CommonPrefixCountsCodePoints) {
  EXPECT_EQ(CommonPrefixLength("земля", "земельный"), 3u);
  EXPECT_EQ(CommonPrefixLength("цена", "ценник"), 3u);
  EXPECT_EQ(CommonPrefixLength("abc", "abc"), 3u);
  EXPECT_EQ(CommonPrefixLength("", "abc"), 0u);
}

}  // namespace
}  // namespace assocmwe
