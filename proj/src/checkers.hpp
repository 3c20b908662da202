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

#ifndef DISCFUZZ_CHECKERS_HPP_
#define DISCFUZZ_CHECKERS_HPP_

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>

#include "embeddings.hpp"
#include "prompt.hpp"
#include "word_list.hpp"

namespace discfuzz {

// Probability that the content is NSFW. Higher means more NSFW for every
// backend; constructing one outside [0, 1] throws kOutOfRangeScore.
class SafetyScore {
 public:
  explicit SafetyScore(double value);
  double value() const { return value_; }

 private:
  double value_;
};

enum class SampleKind { kNone, kFeatureVector, kImageBytes };

// What the generator produced for a prompt (the synthesized image I, or a
// stand-in for it).
class GeneratedSample {
 public:
  GeneratedSample() = default;
  static GeneratedSample None() { return {}; }
  static GeneratedSample FeatureVector(Vector features);
  static GeneratedSample ImageBytes(std::string bytes);

  SampleKind kind() const;
  // Throws kIncompatibleSample when the kind does not match.
  const Vector& features() const;
  const std::string& bytes() const;

 private:
  std::variant<std::monostate, Vector, std::string> payload_;
};

enum class CheckerRole { kTarget, kSurrogate };

// Which inputs a checker looks at.
enum class Modality { kText, kImage, kTextImage };

class Checker {
 public:
  virtual ~Checker() = default;

  // Must be safe to call concurrently from several campaigns.
  virtual SafetyScore Score(const Prompt& prompt,
                            const GeneratedSample& sample) const = 0;
  virtual Modality modality() const = 0;
  virtual std::string Describe() const = 0;
};

class Generator {
 public:
  virtual ~Generator() = default;
  virtual GeneratedSample Generate(const Prompt& prompt) const = 0;
  virtual std::string Describe() const = 0;
};

struct QueryLedger {
  std::uint64_t target_queries = 0;
  std::uint64_t surrogate_queries = 0;
  std::uint64_t generator_queries = 0;

  std::uint64_t checker_queries() const {
    return target_queries + surrogate_queries;
  }
  // Queries to the checkers and the generator together.
  std::uint64_t total() const { return checker_queries() + generator_queries; }

  friend bool operator==(const QueryLedger&, const QueryLedger&) = default;
};

// Scores through `checker` and charges one query to `role`. The query is
// charged even if the backend fails.
SafetyScore ScoreMetered(const Checker& checker, CheckerRole role,
                         const Prompt& prompt, const GeneratedSample& sample,
                         QueryLedger& ledger);

GeneratedSample GenerateMetered(const Generator& generator,
                                const Prompt& prompt, QueryLedger& ledger);

// Per-campaign memo of generated samples keyed by exact prompt text, so the
// target and surrogate always see the same sample for a prompt and repeated
// evaluations do not re-invoke the generator.
class SampleCache {
 public:
  SampleCache(const Generator& generator, QueryLedger& ledger)
      : generator_(generator), ledger_(ledger) {}

  const GeneratedSample& Get(const Prompt& prompt);
  std::size_t size() const { return samples_.size(); }

 private:
  const Generator& generator_;
  QueryLedger& ledger_;
  std::unordered_map<std::string, GeneratedSample> samples_;
};

// ---- Word-list (Text-Match style) backend ----

// 1.0 if any normalized token is in `list`, else 0.0.
SafetyScore WordListScore(const WordSet& list, const Prompt& prompt);

class WordListChecker final : public Checker {
 public:
  explicit WordListChecker(WordSet list) : list_(std::move(list)) {}

  SafetyScore Score(const Prompt& prompt,
                    const GeneratedSample& sample) const override;
  Modality modality() const override { return Modality::kText; }
  std::string Describe() const override;

 private:
  WordSet list_;
};

// ---- Linear head backend ----

struct LinearModel {
  Vector weights;
  double bias = 0.0;
};

// Line 1: dim; line 2: bias; line 3: dim space-separated weights.
LinearModel LoadLinearModel(const std::filesystem::path& path);

enum class LinearInput {
  kPromptEmbedding,  // mean of in-vocabulary token embeddings
  kSampleFeatures,   // the sample's feature vector
};

// sigmoid(dot(features, weights) + bias). In prompt mode a prompt with no
// in-vocabulary tokens scores exactly 0.5. Throws kDimensionMismatch, or
// kIncompatibleSample in sample mode without a feature vector.
SafetyScore LinearEmbeddingScore(const LinearModel& model,
                                 const EmbeddingStore& store,
                                 const Prompt& prompt,
                                 const GeneratedSample& sample,
                                 LinearInput input);

class LinearChecker final : public Checker {
 public:
  // Validates the weight dimension against the store in prompt mode.
  LinearChecker(LinearModel model, std::shared_ptr<const EmbeddingStore> store,
                LinearInput input);

  SafetyScore Score(const Prompt& prompt,
                    const GeneratedSample& sample) const override;
  Modality modality() const override;
  std::string Describe() const override;

 private:
  LinearModel model_;
  std::shared_ptr<const EmbeddingStore> store_;
  LinearInput input_;
};

// ---- Remote (HTTP sidecar) backends ----

struct RemoteOptions {
  std::chrono::milliseconds connect_timeout{5000};
  std::chrono::milliseconds read_timeout{120000};
};

// POST {endpoint}/score with {"prompt": ..., "sample_b64": ...}. Throws
// kBackendUnavailable (transport failure, non-2xx), kMalformedResponse or
// kOutOfRangeScore. Feature-vector samples are kIncompatibleSample.
SafetyScore RemoteScore(const std::string& endpoint, const Prompt& prompt,
                        const GeneratedSample& sample,
                        const RemoteOptions& options = {});

class RemoteChecker final : public Checker {
 public:
  explicit RemoteChecker(std::string endpoint, RemoteOptions options = {});

  SafetyScore Score(const Prompt& prompt,
                    const GeneratedSample& sample) const override;
  Modality modality() const override { return Modality::kTextImage; }
  std::string Describe() const override { return "remote:" + endpoint_; }

 private:
  std::string endpoint_;
  RemoteOptions options_;
};

// ---- Generators ----

// Text-only pipelines: always an empty sample.
class NullGenerator final : public Generator {
 public:
  GeneratedSample Generate(const Prompt& prompt) const override;
  std::string Describe() const override { return "null"; }
};

// Deterministic offline stand-in for a text-to-image model: the mean of the
// prompt's in-vocabulary token embeddings (zeros if none).
class StubGenerator final : public Generator {
 public:
  explicit StubGenerator(std::shared_ptr<const EmbeddingStore> store);

  GeneratedSample Generate(const Prompt& prompt) const override;
  std::string Describe() const override { return "stub"; }

 private:
  std::shared_ptr<const EmbeddingStore> store_;
};

// POST {endpoint}/generate with {"prompt": ..., "seed": ...}.
class RemoteGenerator final : public Generator {
 public:
  RemoteGenerator(std::string endpoint, std::int64_t seed,
                  RemoteOptions options = {});

  GeneratedSample Generate(const Prompt& prompt) const override;
  std::string Describe() const override { return "remote:" + endpoint_; }

 private:
  std::string endpoint_;
  std::int64_t seed_;
  RemoteOptions options_;
};

// ---- Descriptors ----

// "wordlist:PATH", "linear:PATH", "linear-sample:PATH" or "remote:URL".
// Throws kUnknownBackendKind, kFileNotFound, and loader errors.
std::unique_ptr<Checker> MakeChecker(
    std::string_view descriptor, std::shared_ptr<const EmbeddingStore> store);

// "null", "stub" or "remote:URL[#seed=N]".
std::unique_ptr<Generator> MakeGenerator(
    std::string_view descriptor, std::shared_ptr<const EmbeddingStore> store);

}  // namespace discfuzz

#endif  // DISCFUZZ_CHECKERS_HPP_
