// Copyright 2026 The discfuzz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "prompt.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "error.hpp"
#include "test_support.hpp"

namespace discfuzz {
namespace {

std::vector<std::string> Surfaces(const Prompt& p) {
  std::vector<std::string> out;
  for (const Token& t : p.words()) out.push_back(t.surface);
  return out;
}

using Words = std::vector<std::string>;
using testing::CodeOf;

TEST(TokenizeTest, StripsTrailingPunctuation) {
  Prompt p = Tokenize("A naked woman.");
  EXPECT_EQ(p.NormalizedWords(), (Words{"a", "naked", "woman"}));
  EXPECT_EQ(Surfaces(p), (Words{"A", "naked", "woman"}));
  EXPECT_EQ(p.Text(), "A naked woman");
}

TEST(TokenizeTest, CollapsesWhitespace) {
  EXPECT_EQ(Tokenize("she   is, happy").NormalizedWords(),
            (Words{"she", "is", "happy"}));
  EXPECT_EQ(Tokenize("\tshe\nis  ").NormalizedWords(), (Words{"she", "is"}));
}

TEST(TokenizeTest, EmptyInputIsAnError) {
  EXPECT_EQ(CodeOf([] { Tokenize(""); }), ErrorCode::kEmptyPrompt);
  EXPECT_EQ(CodeOf([] { Tokenize("   ... !! "); }), ErrorCode::kEmptyPrompt);
}

TEST(TokenizeTest, KeepsIntraWordApostrophesAndHyphens) {
  EXPECT_EQ(Tokenize("\"don't\" see-through!").NormalizedWords(),
            (Words{"don't", "see-through"}));
}

TEST(TokenizeTest, DropsPunctuationOnlyTokens) {
  EXPECT_EQ(Tokenize("cat - dog").NormalizedWords(), (Words{"cat", "dog"}));
}

TEST(TokenizeTest, LeavesNonAsciiBytesAlone) {
  Prompt p = Tokenize("Café NAÏVE");
  EXPECT_EQ(p.NormalizedWords(), (Words{"café", "naÏve"}));
}

TEST(TokenizeTest, OriginDefaultsToInputText) {
  EXPECT_EQ(Tokenize("a b").origin(), "a b");
  EXPECT_EQ(Tokenize("a b", "seed-7").origin(), "seed-7");
}

TEST(ReplaceAtTest, SingleReplacement) {
  Prompt p = Tokenize("a naked woman");
  std::vector<Substitution> subs{{1, "nude"}};
  Prompt out = ReplaceAt(p, subs);
  EXPECT_EQ(out.NormalizedWords(), (Words{"a", "nude", "woman"}));
  EXPECT_EQ(p.NormalizedWords(), (Words{"a", "naked", "woman"}));
}

TEST(ReplaceAtTest, EmptySubstitutionsIsIdentity) {
  Prompt p = Tokenize("a naked woman");
  EXPECT_EQ(ReplaceAt(p, {}), p);
}

TEST(ReplaceAtTest, Errors) {
  Prompt p = Tokenize("a naked woman");
  std::vector<Substitution> out_of_range{{5, "x"}};
  EXPECT_EQ(CodeOf([&] { ReplaceAt(p, out_of_range); }),
            ErrorCode::kIndexOutOfRange);
  std::vector<Substitution> duplicate{{1, "x"}, {1, "y"}};
  EXPECT_EQ(CodeOf([&] { ReplaceAt(p, duplicate); }),
            ErrorCode::kDuplicateIndex);
}

TEST(ReplaceAtTest, ReplacementIsNormalizedForMatching) {
  Prompt p = Tokenize("a cat");
  std::vector<Substitution> subs{{1, "Dog"}};
  Prompt out = ReplaceAt(p, subs);
  EXPECT_EQ(out[1].surface, "Dog");
  EXPECT_EQ(out[1].normalized, "dog");
}

TEST(RemoveWordTest, Examples) {
  Prompt p = Tokenize("a naked woman");
  EXPECT_EQ(RemoveWord(p, 1).NormalizedWords(), (Words{"a", "woman"}));
  EXPECT_EQ(RemoveWord(p, 0).NormalizedWords(), (Words{"naked", "woman"}));
  EXPECT_EQ(CodeOf([] { RemoveWord(Tokenize("x"), 0); }),
            ErrorCode::kWouldBeEmpty);
  EXPECT_EQ(CodeOf([&] { RemoveWord(p, 3); }), ErrorCode::kIndexOutOfRange);
}

// Random prompts over a small alphabet with punctuation and odd spacing.
class PromptPropertyTest : public ::testing::Test {
 protected:
  std::string RandomText(std::mt19937_64& rng) {
    static const std::string kChars = "abcXYZ'-.,!";
    static const std::string kSpaces[] = {" ", "  ", "\t", " \n "};
    std::uniform_int_distribution<int> words(1, 8), len(1, 6);
    std::uniform_int_distribution<std::size_t> ch(0, kChars.size() - 1), sp(0, 3);
    std::string out;
    int n = words(rng);
    for (int i = 0; i < n; ++i) {
      if (i > 0) out += kSpaces[sp(rng)];
      out += "a";  // keep at least one letter per word
      for (int j = len(rng); j > 0; --j) out += kChars[ch(rng)];
    }
    return out;
  }
};

TEST_F(PromptPropertyTest, ReplaceAtPreservesLengthAndIsIdempotent) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    Prompt p = Tokenize(RandomText(rng));
    std::vector<Substitution> subs;
    std::set<std::size_t> used;
    std::uniform_int_distribution<std::size_t> idx(0, p.size() - 1);
    for (int k = 0; k < 3; ++k) {
      std::size_t i = idx(rng);
      if (used.insert(i).second) subs.push_back({i, "sub" + std::to_string(k)});
    }
    Prompt once = ReplaceAt(p, subs);
    ASSERT_EQ(once.size(), p.size());
    ASSERT_EQ(ReplaceAt(once, subs), once);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!used.count(i)) ASSERT_EQ(once[i], p[i]);
    }
  }
}

TEST_F(PromptPropertyTest, TokensNeverContainWhitespace) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    Prompt p = Tokenize(RandomText(rng));
    for (const Token& t : p.words()) {
      ASSERT_FALSE(t.surface.empty());
      ASSERT_EQ(t.surface.find_first_of(" \t\n\r"), std::string::npos);
    }
  }
}

TEST_F(PromptPropertyTest, DetokenizeRoundTripsModuloWhitespace) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    Prompt p = Tokenize(RandomText(rng));
    // Text() is already normalized: tokenizing it again is a fixed point.
    ASSERT_EQ(Tokenize(p.Text()).Text(), p.Text());
    ASSERT_EQ(Tokenize(p.Text()), p);
  }
}

TEST(SeedCorpusTest, SkipsBlankLines) {
  testing::TempDir dir;
  auto path = dir.Write("seeds.txt", "a naked woman\n\n   \r\nshe is nude\r\n");
  EXPECT_EQ(LoadSeedCorpus(path), (Words{"a naked woman", "she is nude"}));
}

TEST(SeedCorpusTest, MissingFile) {
  EXPECT_EQ(CodeOf([] { LoadSeedCorpus("/nonexistent/seeds.txt"); }),
            ErrorCode::kFileNotFound);
}

}  // namespace
}  // namespace discfuzz
