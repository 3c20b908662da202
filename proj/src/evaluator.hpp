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

#ifndef DISCFUZZ_EVALUATOR_HPP_
#define DISCFUZZ_EVALUATOR_HPP_

#include "checkers.hpp"

namespace discfuzz {

// Target and surrogate scores for one prompt, both computed against the same
// generated sample.
struct PairScores {
  double target = 0.0;
  double surrogate = 0.0;

  // Surrogate minus target; positive when the prompt sits in the zone the
  // target misses but the surrogate flags.
  double fitness() const { return surrogate - target; }
};

// Campaign-local scoring context: the checker pair, the generator behind a
// sample cache, and the query ledger they all charge. Not thread-safe; one
// per campaign.
class Evaluator {
 public:
  Evaluator(const Checker& target, const Checker& surrogate,
            const Generator& generator)
      : target_(target), surrogate_(surrogate), cache_(generator, ledger_) {}

  Evaluator(const Evaluator&) = delete;
  Evaluator& operator=(const Evaluator&) = delete;

  // Exactly one target and one surrogate query; at most one generator query.
  PairScores Evaluate(const Prompt& prompt);

  const QueryLedger& ledger() const { return ledger_; }

 private:
  const Checker& target_;
  const Checker& surrogate_;
  QueryLedger ledger_;
  SampleCache cache_;
};

}  // namespace discfuzz

#endif  // DISCFUZZ_EVALUATOR_HPP_
