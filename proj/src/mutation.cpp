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

#include "mutation.hpp"

#include <algorithm>
#include <limits>

#include "error.hpp"

namespace discfuzz {
namespace {

std::vector<MutationOutcome> MutateRanked(
    std::span<const Prompt> bases, const Prompt& seed,
    std::span<const std::size_t> indices, const EmbeddingStore& store,
    std::span<const std::string> lexicon, SimilarityOrder order,
    double select_probability, Rng& rng) {
  Selection selection = RandSelect(indices, select_probability, rng);

  std::vector<MutationOutcome> outcomes(bases.size());
  for (std::size_t j = 0; j < bases.size(); ++j) {
    outcomes[j].prompt = bases[j];
  }
  if (bases.empty()) return outcomes;

  for (std::size_t index : selection.indices) {
    if (index >= seed.size()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "mutation index " + std::to_string(index) +
                      " outside the seed prompt");
    }
    std::vector<std::string> ranked;
    try {
      ranked = RankBySimilarity(store, seed[index].normalized, lexicon, order,
                                bases.size());
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kUnknownWord ||
          e.code() == ErrorCode::kNoEmbeddable ||
          e.code() == ErrorCode::kEmptyStore) {
        continue;
      }
      throw;
    }
    for (std::size_t j = 0; j < bases.size(); ++j) {
      outcomes[j].applied.push_back(
          Substitution{index, ranked[std::min(j, ranked.size() - 1)]});
    }
  }
  for (MutationOutcome& outcome : outcomes) {
    outcome.prompt = ReplaceAt(outcome.prompt, outcome.applied);
  }
  return outcomes;
}

}  // namespace

double Rng::NextUnit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t Rng::UniformIndex(std::size_t n) {
  const std::uint64_t bound = n;
  // Rejection sampling over the largest multiple of n.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<std::size_t>(x % bound);
}

void MutationConfig::Validate() const {
  if (dir_lexicon.empty() || dis_lexicon.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "substitution lexicons must be non-empty");
  }
  if (!(select_probability > 0.0 && select_probability <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "select probability must be in (0, 1]");
  }
}

Selection RandSelect(std::span<const std::size_t> indices, double p,
                     Rng& rng) {
  Selection selection;
  for (std::size_t index : indices) {
    if (rng.Bernoulli(p)) selection.indices.push_back(index);
  }
  if (selection.indices.empty() && !indices.empty()) {
    selection.indices.push_back(indices[rng.UniformIndex(indices.size())]);
    selection.forced = true;
  }
  return selection;
}

MutationOutcome DirtinessPreservingMutation(
    const Prompt& current, const Prompt& seed,
    std::span<const std::size_t> dirty_indices, const EmbeddingStore& store,
    const MutationConfig& config, Rng& rng) {
  return std::move(DirtinessPreservingMutations(current, seed, dirty_indices,
                                                store, config, rng, 1)
                       .front());
}

MutationOutcome DiscrepancyAwayMutation(
    const Prompt& current, const Prompt& seed,
    std::span<const std::size_t> discrepant_indices,
    const EmbeddingStore& store, const MutationConfig& config, Rng& rng) {
  return std::move(DiscrepancyAwayMutations(std::span(&current, 1), seed,
                                            discrepant_indices, store, config,
                                            rng)
                       .front());
}

std::vector<MutationOutcome> DirtinessPreservingMutations(
    const Prompt& current, const Prompt& seed,
    std::span<const std::size_t> dirty_indices, const EmbeddingStore& store,
    const MutationConfig& config, Rng& rng, std::size_t fanout) {
  if (fanout == 0) {
    throw Error(ErrorCode::kInvalidArgument, "fan-out must be at least 1");
  }
  std::vector<Prompt> bases(fanout, current);
  return MutateRanked(bases, seed, dirty_indices, store, config.dir_lexicon,
                      SimilarityOrder::kMostSimilar, config.select_probability,
                      rng);
}

std::vector<MutationOutcome> DiscrepancyAwayMutations(
    std::span<const Prompt> bases, const Prompt& seed,
    std::span<const std::size_t> discrepant_indices,
    const EmbeddingStore& store, const MutationConfig& config, Rng& rng) {
  return MutateRanked(bases, seed, discrepant_indices, store,
                      config.dis_lexicon, SimilarityOrder::kLeastSimilar,
                      config.select_probability, rng);
}

}  // namespace discfuzz
