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

#ifndef DISCFUZZ_MUTATION_HPP_
#define DISCFUZZ_MUTATION_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "embeddings.hpp"
#include "prompt.hpp"

namespace discfuzz {

// Deterministic random source. Draws are built directly on the engine's
// output (std distributions are implementation-defined), so a seed yields the
// same sequence with every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }
  // Uniform in [0, 1) with 53 random bits.
  double NextUnit();
  // Uniform in [0, n), unbiased. n must be positive.
  std::size_t UniformIndex(std::size_t n);
  bool Bernoulli(double p) { return NextUnit() < p; }

 private:
  std::mt19937_64 engine_;
};

struct MutationConfig {
  std::vector<std::string> dir_lexicon;  // substitutes for dirty words
  std::vector<std::string> dis_lexicon;  // substitutes for discrepant words
  double select_probability = 0.5;
  std::uint64_t rng_seed = 0;

  // Throws kInvalidArgument on empty lexicons or a probability outside (0, 1].
  void Validate() const;
};

struct Selection {
  std::vector<std::size_t> indices;
  // True when no index survived the Bernoulli draws and one was forced in.
  bool forced = false;
};

// Keeps each index independently with probability p (input order preserved).
// A non-empty input never yields an empty selection: if every draw fails, one
// index is picked uniformly.
Selection RandSelect(std::span<const std::size_t> indices, double p, Rng& rng);

struct MutationOutcome {
  Prompt prompt;
  std::vector<Substitution> applied;
};

// Replaces a random subset of the dirty slots of `current` with the DirLis word
// closest to the seed's original word at that slot. Seed words without an
// embedding are skipped.
MutationOutcome DirtinessPreservingMutation(
    const Prompt& current, const Prompt& seed,
    std::span<const std::size_t> dirty_indices, const EmbeddingStore& store,
    const MutationConfig& config, Rng& rng);

// Replaces a random subset of the discrepant slots of `current` with the
// DisLis word farthest from the seed's original word at that slot.
MutationOutcome DiscrepancyAwayMutation(
    const Prompt& current, const Prompt& seed,
    std::span<const std::size_t> discrepant_indices,
    const EmbeddingStore& store, const MutationConfig& config, Rng& rng);

// N-best forms used when more than one candidate is kept per mutation. One
// subset is drawn; candidate j uses the j-th ranked substitute at every
// selected slot (the last available rank when the lexicon runs out).
std::vector<MutationOutcome> DirtinessPreservingMutations(
    const Prompt& current, const Prompt& seed,
    std::span<const std::size_t> dirty_indices, const EmbeddingStore& store,
    const MutationConfig& config, Rng& rng, std::size_t fanout);

// Candidate j is built on bases[j].
std::vector<MutationOutcome> DiscrepancyAwayMutations(
    std::span<const Prompt> bases, const Prompt& seed,
    std::span<const std::size_t> discrepant_indices,
    const EmbeddingStore& store, const MutationConfig& config, Rng& rng);

}  // namespace discfuzz

#endif  // DISCFUZZ_MUTATION_HPP_
