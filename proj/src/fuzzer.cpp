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

#include "fuzzer.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>
#include <utility>

namespace discfuzz {
namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t Fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

CandidateRecord MakeRecord(CandidateKind kind, std::size_t rank,
                           MutationOutcome outcome) {
  CandidateRecord record;
  record.kind = kind;
  record.rank = rank;
  record.prompt = outcome.prompt.Text();
  record.applied = std::move(outcome.applied);
  return record;
}

}  // namespace

void CampaignConfig::Validate() const {
  if (budget < 1 || k_discrepant < 1 || candidate_fanout < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "budget, K and N must each be at least 1");
  }
  auto in_open_unit = [](double x) { return x > 0.0 && x < 1.0; };
  if (!in_open_unit(target_threshold) || !in_open_unit(surrogate_threshold)) {
    throw Error(ErrorCode::kInvalidArgument, "thresholds must be in (0, 1)");
  }
  mutation.Validate();
}

bool IsAdversarial(const PairScores& scores, double target_threshold,
                   double surrogate_threshold) {
  return scores.target < target_threshold &&
         scores.surrogate > surrogate_threshold;
}

bool IsAdversarial(const PairScores& scores, const CampaignConfig& config) {
  return IsAdversarial(scores, config.target_threshold,
                       config.surrogate_threshold);
}

double Fitness(const PairScores& scores) { return scores.fitness(); }

std::string_view CampaignStatusName(CampaignStatus status) {
  return status == CampaignStatus::kAdversarialFound ? "adversarial_found"
                                                     : "budget_exhausted";
}

CampaignResult RunCampaign(const Prompt& seed, const Checker& target,
                           const Checker& surrogate, const Generator& generator,
                           const WordSet& nsfw_list,
                           const EmbeddingStore& store,
                           const CampaignConfig& config) {
  if (seed.empty()) throw Error(ErrorCode::kEmptySeed, "seed prompt is empty");
  config.Validate();

  const auto start = std::chrono::steady_clock::now();
  Evaluator evaluator(target, surrogate, generator);
  Rng rng(config.mutation.rng_seed);

  CampaignResult result;
  result.seed = seed;
  CampaignTrace& trace = result.trace;
  trace.sensitivity =
      AnalyzeSensitivity(seed, nsfw_list, config.k_discrepant, evaluator);
  const std::vector<std::size_t>& dirty = trace.sensitivity.dirty_indices;
  const std::vector<std::size_t>& discrepant =
      trace.sensitivity.top_k_discrepant;

  QueryLedger mark = evaluator.ledger();
  trace.seed_scores = evaluator.Evaluate(seed);
  trace.initial_checker_queries =
      evaluator.ledger().checker_queries() - mark.checker_queries();
  trace.initial_generator_queries =
      evaluator.ledger().generator_queries - mark.generator_queries;

  Prompt current = seed;
  double best_fit = Fitness(trace.seed_scores);
  const std::size_t fanout = config.candidate_fanout;

  auto finish = [&](CampaignStatus status, Prompt final_prompt) {
    result.status = status;
    result.final_prompt = std::move(final_prompt);
    result.best_fit = best_fit;
    result.ledger = evaluator.ledger();
    result.wall_time_s = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    return std::move(result);
  };

  for (std::size_t t = 0; t < config.budget; ++t) {
    mark = evaluator.ledger();
    IterationRecord iteration;
    iteration.iteration = t + 1;
    iteration.best_fit_before = best_fit;

    std::vector<MutationOutcome> dir_outcomes = DirtinessPreservingMutations(
        current, seed, dirty, store, config.mutation, rng, fanout);
    std::vector<Prompt> dir_prompts;
    dir_prompts.reserve(fanout);
    for (const MutationOutcome& o : dir_outcomes) dir_prompts.push_back(o.prompt);
    std::vector<MutationOutcome> dis_outcomes = DiscrepancyAwayMutations(
        dir_prompts, seed, discrepant, store, config.mutation, rng);

    // Walk order: every discrepancy-away candidate, then every
    // dirtiness-preserving one.
    std::vector<Prompt> prompts;
    prompts.reserve(2 * fanout);
    for (std::size_t j = 0; j < fanout; ++j) {
      prompts.push_back(dis_outcomes[j].prompt);
      iteration.candidates.push_back(MakeRecord(
          CandidateKind::kDiscrepancyAway, j, std::move(dis_outcomes[j])));
    }
    for (std::size_t j = 0; j < fanout; ++j) {
      prompts.push_back(dir_outcomes[j].prompt);
      iteration.candidates.push_back(MakeRecord(
          CandidateKind::kDirtinessPreserving, j, std::move(dir_outcomes[j])));
    }

    for (std::size_t c = 0; c < prompts.size(); ++c) {
      CandidateRecord& record = iteration.candidates[c];
      record.scores = evaluator.Evaluate(prompts[c]);
      record.adversarial = IsAdversarial(record.scores, config);
    }

    std::optional<std::size_t> winner;
    for (std::size_t c = 0; c < prompts.size(); ++c) {
      CandidateRecord& record = iteration.candidates[c];
      if (record.adversarial) {
        record.returned = true;
        winner = c;
        break;
      }
      if (Fitness(record.scores) > best_fit) {
        best_fit = Fitness(record.scores);
        current = prompts[c];
        record.accepted = true;
      }
    }

    iteration.best_fit_after = best_fit;
    iteration.checker_queries =
        evaluator.ledger().checker_queries() - mark.checker_queries();
    iteration.generator_queries =
        evaluator.ledger().generator_queries - mark.generator_queries;
    trace.iterations.push_back(std::move(iteration));
    result.iterations_used = t + 1;

    if (winner.has_value()) {
      return finish(CampaignStatus::kAdversarialFound,
                    std::move(prompts[*winner]));
    }
  }
  return finish(CampaignStatus::kBudgetExhausted, std::move(current));
}

std::uint64_t DeriveCampaignSeed(std::uint64_t global_seed,
                                 std::string_view seed_text) {
  return SplitMix64(global_seed ^ Fnv1a64(seed_text));
}

CorpusReport RunCorpus(std::span<const std::string> seeds,
                       const CorpusBackends& backends,
                       const CampaignConfig& config, std::uint64_t global_seed,
                       std::size_t workers) {
  if (seeds.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "seed corpus is empty");
  }
  config.Validate();

  CorpusReport report;
  report.seeds.resize(seeds.size());
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t i = next++; i < seeds.size(); i = next++) {
      SeedOutcome& outcome = report.seeds[i];
      outcome.seed_text = seeds[i];
      CampaignConfig local = config;
      local.mutation.rng_seed = DeriveCampaignSeed(global_seed, seeds[i]);
      try {
        Prompt seed = Tokenize(seeds[i]);
        outcome.result =
            RunCampaign(seed, backends.target, backends.surrogate,
                        backends.generator, backends.nsfw_list, backends.store,
                        local);
      } catch (const Error& e) {
        outcome.error_code = e.code();
        outcome.error = e.what();
      } catch (const std::exception& e) {
        outcome.error_code = ErrorCode::kInternal;
        outcome.error = e.what();
      }
    }
  };

  std::size_t n_threads = std::max<std::size_t>(1, std::min(workers, seeds.size()));
  if (n_threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_threads);
    for (std::size_t i = 0; i < n_threads; ++i) pool.emplace_back(work);
  }

  std::size_t found = 0;
  double queries = 0.0;
  double seconds = 0.0;
  for (const SeedOutcome& outcome : report.seeds) {
    if (!outcome.found()) continue;
    ++found;
    queries += static_cast<double>(outcome.result->ledger.total());
    seconds += outcome.result->wall_time_s;
  }
  report.bypass_rate =
      static_cast<double>(found) / static_cast<double>(seeds.size());
  if (found > 0) {
    report.mean_queries_success = queries / static_cast<double>(found);
    report.mean_time_success = seconds / static_cast<double>(found);
  }
  return report;
}

}  // namespace discfuzz
