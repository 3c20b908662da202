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

#include "evaluator.hpp"

namespace discfuzz {

PairScores Evaluator::Evaluate(const Prompt& prompt) {
  const GeneratedSample& sample = cache_.Get(prompt);
  PairScores scores;
  scores.target =
      ScoreMetered(target_, CheckerRole::kTarget, prompt, sample, ledger_)
          .value();
  scores.surrogate =
      ScoreMetered(surrogate_, CheckerRole::kSurrogate, prompt, sample, ledger_)
          .value();
  return scores;
}

}  // namespace discfuzz
