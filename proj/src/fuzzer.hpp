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

#ifndef DISCFUZZ_FUZZER_HPP_
#define DISCFUZZ_FUZZER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "checkers.hpp"
#include "error.hpp"
#include "evaluator.hpp"
#include "mutation.hpp"
#include "prompt.hpp"
#include "sensitivity.hpp"
#include "word_list.hpp"

namespace discfuzz {

struct CampaignConfig {
  std::size_t budget = 60;           // T: maximum iterations
  std::size_t k_discrepant = 1;      // K
  std::size_t candidate_fanout = 1;  // N: candidates kept per mutation
  double target_threshold = 0.5;
  double surrogate_threshold = 0.5;
  MutationConfig mutation;

  // Throws kInvalidArgument.
  void Validate() const;
};

// Cross-check oracle: the target lets the prompt through while the surrogate
// flags it. Both comparisons are strict.
bool IsAdversarial(const PairScores& scores, double target_threshold,
                   double surrogate_threshold);
bool IsAdversarial(const PairScores& scores, const CampaignConfig& config);

// Surrogate minus target.
double Fitness(const PairScores& scores);

enum class CampaignStatus { kAdversarialFound, kBudgetExhausted };
std::string_view CampaignStatusName(CampaignStatus status);

enum class CandidateKind { kDiscrepancyAway, kDirtinessPreserving };

struct CandidateRecord {
  CandidateKind kind = CandidateKind::kDiscrepancyAway;
  std::size_t rank = 0;  // position in the N-best fan-out
  std::string prompt;
  // For discrepancy-away candidates only the discrepant-slot substitutions;
  // the dirty-slot ones are on the matching dirtiness-preserving record.
  std::vector<Substitution> applied;
  PairScores scores;
  bool adversarial = false;
  // Adopted as the new current prompt (strict fitness improvement).
  bool accepted = false;
  // Returned as the campaign's adversarial prompt.
  bool returned = false;
};

struct IterationRecord {
  std::size_t iteration = 0;  // 1-based
  std::vector<CandidateRecord> candidates;
  double best_fit_before = 0.0;
  double best_fit_after = 0.0;
  std::uint64_t checker_queries = 0;
  std::uint64_t generator_queries = 0;
};

struct CampaignTrace {
  SensitivityReport sensitivity;
  // The hoisted fitness evaluation of the seed.
  PairScores seed_scores;
  std::uint64_t initial_checker_queries = 0;
  std::uint64_t initial_generator_queries = 0;
  std::vector<IterationRecord> iterations;
};

struct CampaignResult {
  CampaignStatus status = CampaignStatus::kBudgetExhausted;
  Prompt seed;
  // The adversarial prompt on success, otherwise the best current prompt.
  Prompt final_prompt;
  std::size_t iterations_used = 0;
  double best_fit = 0.0;
  QueryLedger ledger;
  double wall_time_s = 0.0;
  CampaignTrace trace;
};

// Greedy differential search over one seed. Analysis runs once on the seed,
// then each iteration builds the dirtiness-preserving candidate(s) from the
// current prompt and the discrepancy-away candidate(s) on top of those,
// scores all of them (4N checker queries), and walks them discrepancy-away
// first: an adversarial candidate ends the campaign, a fitter one becomes the
// current prompt.
//
// Throws kEmptySeed for an empty seed and kWouldBeEmpty for a one-word seed;
// backend errors propagate.
CampaignResult RunCampaign(const Prompt& seed, const Checker& target,
                           const Checker& surrogate, const Generator& generator,
                           const WordSet& nsfw_list,
                           const EmbeddingStore& store,
                           const CampaignConfig& config);

struct CorpusBackends {
  const Checker& target;
  const Checker& surrogate;
  const Generator& generator;
  const WordSet& nsfw_list;
  const EmbeddingStore& store;
};

struct SeedOutcome {
  std::string seed_text;
  std::optional<CampaignResult> result;  // empty when the campaign failed
  ErrorCode error_code = ErrorCode::kOk;
  std::string error;

  bool found() const {
    return result.has_value() &&
           result->status == CampaignStatus::kAdversarialFound;
  }
};

struct CorpusReport {
  std::vector<SeedOutcome> seeds;  // in input order
  double bypass_rate = 0.0;
  // Means over successful campaigns; empty when none succeeded.
  std::optional<double> mean_queries_success;
  std::optional<double> mean_time_success;
};

// Campaign RNG seed for one seed prompt; independent of corpus order.
std::uint64_t DeriveCampaignSeed(std::uint64_t global_seed,
                                 std::string_view seed_text);

// Runs one campaign per seed on `workers` threads. A failing campaign is
// recorded on its seed and counts as not bypassed. Throws kInvalidArgument
// for an empty seed list.
CorpusReport RunCorpus(std::span<const std::string> seeds,
                       const CorpusBackends& backends,
                       const CampaignConfig& config, std::uint64_t global_seed,
                       std::size_t workers);

}  // namespace discfuzz

#endif  // DISCFUZZ_FUZZER_HPP_
