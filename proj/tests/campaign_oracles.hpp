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

#ifndef DISCFUZZ_TESTS_CAMPAIGN_ORACLES_HPP_
#define DISCFUZZ_TESTS_CAMPAIGN_ORACLES_HPP_

// Independent checks of a finished campaign. Each returns an empty string
// when the invariant holds, otherwise a description of the first violation.

#include <set>
#include <sstream>
#include <string>

#include "evaluator.hpp"
#include "fuzzer.hpp"
#include "test_support.hpp"

namespace discfuzz::testing {

// Checker queries follow 2|non-dirty| + 2 + 4N per iteration; generator
// queries equal the number of distinct prompts ever scored.
inline std::string CheckQueryAccounting(const CampaignResult& r,
                                        const World& w,
                                        const CampaignConfig& config) {
  std::ostringstream err;
  const Prompt& seed = r.seed;
  std::size_t non_dirty = 0;
  std::set<std::string> scored;
  for (std::size_t i = 0; i < seed.size(); ++i) {
    if (w.nsfw_list.Contains(seed[i].normalized)) continue;
    ++non_dirty;
    scored.insert(RemoveWord(seed, i).Text());
  }
  scored.insert(seed.Text());
  for (const IterationRecord& it : r.trace.iterations) {
    for (const CandidateRecord& c : it.candidates) scored.insert(c.prompt);
  }
  const std::uint64_t expected_checker =
      2 * non_dirty + 2 +
      4 * config.candidate_fanout * r.iterations_used;
  if (r.ledger.checker_queries() != expected_checker) {
    err << "checker queries " << r.ledger.checker_queries() << " != expected "
        << expected_checker;
    return err.str();
  }
  if (r.ledger.target_queries != r.ledger.surrogate_queries) {
    return "target and surrogate query counts differ";
  }
  if (r.ledger.generator_queries != scored.size()) {
    err << "generator queries " << r.ledger.generator_queries
        << " != distinct prompts " << scored.size();
    return err.str();
  }
  std::uint64_t summed = r.trace.sensitivity.checker_queries +
                         r.trace.initial_checker_queries;
  for (const IterationRecord& it : r.trace.iterations) {
    summed += it.checker_queries;
  }
  if (summed != r.ledger.checker_queries()) {
    return "per-phase checker queries do not sum to the ledger";
  }
  if (r.trace.iterations.size() != r.iterations_used ||
      r.iterations_used > config.budget) {
    return "iteration count inconsistent with trace or budget";
  }
  return {};
}

// A reported adversarial prompt really is one under fresh scoring, and a
// campaign that ran out of budget never saw one.
inline std::string CheckOracleSoundness(const CampaignResult& r,
                                        const World& w,
                                        const CampaignConfig& config) {
  Evaluator fresh(*w.target, *w.surrogate, *w.generator);
  auto adversarial = [&](const PairScores& s) {
    return s.target < config.target_threshold &&
           s.surrogate > config.surrogate_threshold;
  };
  if (r.status == CampaignStatus::kAdversarialFound) {
    PairScores s = fresh.Evaluate(r.final_prompt);
    if (!adversarial(s)) {
      std::ostringstream err;
      err << "returned prompt '" << r.final_prompt.Text()
          << "' rescored to target=" << s.target
          << " surrogate=" << s.surrogate;
      return err.str();
    }
    return {};
  }
  for (const IterationRecord& it : r.trace.iterations) {
    for (const CandidateRecord& c : it.candidates) {
      PairScores s = fresh.Evaluate(Tokenize(c.prompt));
      if (adversarial(s)) {
        return "missed adversarial candidate '" + c.prompt + "'";
      }
    }
  }
  return {};
}

// BestFit starts at the seed's fitness, never decreases, and moves only
// through accepted candidates; the final prompt carries it.
inline std::string CheckMonotonicity(const CampaignResult& r) {
  double best = r.trace.seed_scores.fitness();
  for (const IterationRecord& it : r.trace.iterations) {
    if (it.best_fit_before != best) return "best fit not carried over";
    double expected = best;
    bool returned = false;
    for (const CandidateRecord& c : it.candidates) {
      if (returned) break;
      if (c.returned) {
        returned = true;
        continue;
      }
      double f = c.scores.fitness();
      if (c.accepted != (f > expected)) return "acceptance is not greedy";
      if (c.accepted) expected = f;
    }
    if (it.best_fit_after != expected) return "best fit after mismatch";
    if (it.best_fit_after < it.best_fit_before) return "best fit decreased";
    best = expected;
  }
  if (r.best_fit != best) return "result best fit mismatch";
  if (r.status == CampaignStatus::kBudgetExhausted) {
    std::string last_accepted = r.seed.Text();
    for (const IterationRecord& it : r.trace.iterations) {
      for (const CandidateRecord& c : it.candidates) {
        if (c.accepted) last_accepted = c.prompt;
      }
    }
    if (r.final_prompt.Text() != last_accepted) {
      return "final prompt is not the last accepted candidate";
    }
  }
  return {};
}

}  // namespace discfuzz::testing

#endif  // DISCFUZZ_TESTS_CAMPAIGN_ORACLES_HPP_
