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

#include "checkers.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "evaluator.hpp"
#include "test_support.hpp"

namespace discfuzz {
namespace {

using testing::CodeOf;
using testing::StoreFrom;

TEST(SafetyScoreTest, RangeIsEnforced) {
  EXPECT_EQ(SafetyScore(0.0).value(), 0.0);
  EXPECT_EQ(SafetyScore(1.0).value(), 1.0);
  EXPECT_EQ(CodeOf([] { SafetyScore(1.3); }), ErrorCode::kOutOfRangeScore);
  EXPECT_EQ(CodeOf([] { SafetyScore(-0.01); }), ErrorCode::kOutOfRangeScore);
  EXPECT_EQ(CodeOf([] {
              SafetyScore(std::numeric_limits<double>::quiet_NaN());
            }),
            ErrorCode::kOutOfRangeScore);
}

TEST(GeneratedSampleTest, KindsAndAccessors) {
  EXPECT_EQ(GeneratedSample::None().kind(), SampleKind::kNone);
  auto fv = GeneratedSample::FeatureVector({1, 2});
  EXPECT_EQ(fv.kind(), SampleKind::kFeatureVector);
  EXPECT_EQ(fv.features(), (Vector{1, 2}));
  EXPECT_EQ(CodeOf([&] { fv.bytes(); }), ErrorCode::kIncompatibleSample);
  auto img = GeneratedSample::ImageBytes("PNG");
  EXPECT_EQ(img.bytes(), "PNG");
  EXPECT_EQ(CodeOf([&] { img.features(); }), ErrorCode::kIncompatibleSample);
}

TEST(WordListCheckerTest, FlagsAnyListedWord) {
  WordListChecker checker(WordSet{"naked", "nude"});
  auto none = GeneratedSample::None();
  EXPECT_EQ(checker.Score(Tokenize("a Naked woman"), none).value(), 1.0);
  EXPECT_EQ(checker.Score(Tokenize("a clothed woman"), none).value(), 0.0);
  EXPECT_EQ(checker.modality(), Modality::kText);
}

TEST(LinearCheckerTest, SigmoidOfWeightedMean) {
  auto store = StoreFrom({{"a", {1, 0}}, {"b", {0, 1}}, {"c", {4, 4}}});
  LinearModel model{{2.0, 2.0}, 2.0};
  LinearChecker checker(model, store, LinearInput::kPromptEmbedding);
  auto none = GeneratedSample::None();
  // mean([1,0],[0,1]) = [0.5,0.5]; z = 2*0.5 + 2*0.5 + 2 = 4.
  EXPECT_NEAR(checker.Score(Tokenize("a b"), none).value(), 0.98201379003790845,
              1e-12);
  // Unknown words are skipped.
  EXPECT_NEAR(checker.Score(Tokenize("a zzz b"), none).value(),
              0.98201379003790845, 1e-12);
  EXPECT_EQ(checker.Score(Tokenize("zzz yyy"), none).value(), 0.5);
}

TEST(LinearCheckerTest, ExtremeLogitsStayFinite) {
  auto store = StoreFrom({{"big", {1000}}, {"small", {-1000}}});
  LinearChecker checker(LinearModel{{1.0}, 0.0}, store,
                        LinearInput::kPromptEmbedding);
  auto none = GeneratedSample::None();
  EXPECT_EQ(checker.Score(Tokenize("big"), none).value(), 1.0);
  EXPECT_EQ(checker.Score(Tokenize("small"), none).value(), 0.0);
}

TEST(LinearCheckerTest, SampleModeReadsFeatures) {
  LinearChecker checker(LinearModel{{1.0, -1.0}, 0.0}, nullptr,
                        LinearInput::kSampleFeatures);
  EXPECT_EQ(checker.modality(), Modality::kImage);
  auto sample = GeneratedSample::FeatureVector({1.0, 1.0});
  EXPECT_NEAR(checker.Score(Tokenize("x"), sample).value(), 0.5, 1e-15);
  EXPECT_EQ(CodeOf([&] {
              checker.Score(Tokenize("x"), GeneratedSample::None());
            }),
            ErrorCode::kIncompatibleSample);
  EXPECT_EQ(CodeOf([&] {
              checker.Score(Tokenize("x"), GeneratedSample::FeatureVector({1}));
            }),
            ErrorCode::kDimensionMismatch);
}

TEST(LinearCheckerTest, DimensionMustMatchStore) {
  auto store = StoreFrom({{"a", {1, 0, 0}}});
  EXPECT_EQ(CodeOf([&] {
              LinearChecker(LinearModel{{1, 1}, 0}, store,
                            LinearInput::kPromptEmbedding);
            }),
            ErrorCode::kDimensionMismatch);
}

TEST(LinearCheckerTest, ScoresAlwaysInUnitInterval) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> normal(0, 10);
  for (int trial = 0; trial < 500; ++trial) {
    auto store = std::make_shared<EmbeddingStore>();
    for (int i = 0; i < 5; ++i) {
      store->Insert("w" + std::to_string(i), {normal(rng), normal(rng)});
    }
    LinearChecker checker(LinearModel{{normal(rng), normal(rng)}, normal(rng)},
                          store, LinearInput::kPromptEmbedding);
    double s =
        checker.Score(Tokenize("w1 w3 w4"), GeneratedSample::None()).value();
    ASSERT_GE(s, 0.0);
    ASSERT_LE(s, 1.0);
  }
}

TEST(LoadLinearModelTest, Format) {
  testing::TempDir dir;
  auto good = dir.Write("m.txt", "2\n-0.5\n1.5 2\n");
  LinearModel m = LoadLinearModel(good);
  EXPECT_EQ(m.bias, -0.5);
  EXPECT_EQ(m.weights, (Vector{1.5, 2}));
  auto short_w = dir.Write("s.txt", "3\n0\n1 2\n");
  EXPECT_EQ(CodeOf([&] { LoadLinearModel(short_w); }),
            ErrorCode::kDimensionMismatch);
  auto junk = dir.Write("j.txt", "2\n0\n1 x\n");
  EXPECT_EQ(CodeOf([&] { LoadLinearModel(junk); }), ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([&] { LoadLinearModel(dir.path() / "none"); }),
            ErrorCode::kFileNotFound);
}

TEST(StubGeneratorTest, MeanEmbedding) {
  auto store = StoreFrom({{"a", {1, 0}}, {"b", {0, 1}}});
  StubGenerator gen(store);
  EXPECT_EQ(gen.Generate(Tokenize("a b")).features(), (Vector{0.5, 0.5}));
  EXPECT_EQ(gen.Generate(Tokenize("zzz")).features(), (Vector{0, 0}));
}

TEST(FactoryTest, Descriptors) {
  testing::TempDir dir;
  auto list = dir.Write("list.txt", "nude\n");
  auto model = dir.Write("m.txt", "2\n0\n1 1\n");
  auto store = StoreFrom({{"a", {1, 0}}});
  EXPECT_EQ(MakeChecker("wordlist:" + list.string(), store)->modality(),
            Modality::kText);
  EXPECT_EQ(MakeChecker("linear:" + model.string(), store)->Describe(),
            "linear");
  EXPECT_EQ(MakeChecker("linear-sample:" + model.string(), store)->Describe(),
            "linear-sample");
  EXPECT_EQ(MakeChecker("remote:http://127.0.0.1:1", store)->modality(),
            Modality::kTextImage);
  EXPECT_EQ(CodeOf([&] { MakeChecker("magic:xyz", store); }),
            ErrorCode::kUnknownBackendKind);
  EXPECT_EQ(CodeOf([&] { MakeChecker("wordlist:/does/not/exist", store); }),
            ErrorCode::kFileNotFound);
  EXPECT_EQ(MakeGenerator("null", store)->Describe(), "null");
  EXPECT_EQ(MakeGenerator("stub", store)->Describe(), "stub");
  EXPECT_EQ(MakeGenerator("remote:http://h:1#seed=42", store)->Describe(),
            "remote:http://h:1");
  EXPECT_EQ(CodeOf([&] { MakeGenerator("remote:http://h:1#seed=x", store); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([&] { MakeGenerator("dalle", store); }),
            ErrorCode::kUnknownBackendKind);
}

class CountingGenerator final : public Generator {
 public:
  GeneratedSample Generate(const Prompt&) const override {
    ++calls;
    return GeneratedSample::None();
  }
  std::string Describe() const override { return "counting"; }
  mutable int calls = 0;
};

class ThrowingChecker final : public Checker {
 public:
  SafetyScore Score(const Prompt&, const GeneratedSample&) const override {
    throw Error(ErrorCode::kBackendUnavailable, "down");
  }
  Modality modality() const override { return Modality::kText; }
  std::string Describe() const override { return "down"; }
};

TEST(EvaluatorTest, CachesSamplesButNotScores) {
  WordListChecker target(WordSet{"naked"});
  WordListChecker surrogate(WordSet{"naked", "nude"});
  CountingGenerator gen;
  Evaluator eval(target, surrogate, gen);
  PairScores s = eval.Evaluate(Tokenize("a nude woman"));
  EXPECT_EQ(s.target, 0.0);
  EXPECT_EQ(s.surrogate, 1.0);
  EXPECT_EQ(s.fitness(), 1.0);
  eval.Evaluate(Tokenize("a nude woman"));
  eval.Evaluate(Tokenize("a naked woman"));
  EXPECT_EQ(gen.calls, 2);
  EXPECT_EQ(eval.ledger().generator_queries, 2u);
  EXPECT_EQ(eval.ledger().target_queries, 3u);
  EXPECT_EQ(eval.ledger().surrogate_queries, 3u);
  EXPECT_EQ(eval.ledger().total(), 8u);
}

TEST(EvaluatorTest, FailedQueriesAreStillCharged) {
  ThrowingChecker down;
  WordListChecker ok(WordSet{"x"});
  NullGenerator gen;
  Evaluator eval(down, ok, gen);
  EXPECT_EQ(CodeOf([&] { eval.Evaluate(Tokenize("a b")); }),
            ErrorCode::kBackendUnavailable);
  EXPECT_EQ(eval.ledger().target_queries, 1u);
  EXPECT_EQ(eval.ledger().surrogate_queries, 0u);
  EXPECT_EQ(eval.ledger().generator_queries, 1u);
}

}  // namespace
}  // namespace discfuzz
