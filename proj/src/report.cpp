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

#include "report.hpp"

#include <cmath>
#include <fstream>

#include "error.hpp"

namespace discfuzz {
namespace {

using nlohmann::json;

json SubstitutionsJson(const std::vector<Substitution>& subs) {
  json out = json::array();
  for (const Substitution& s : subs) {
    out.push_back({{"index", s.index}, {"replacement", s.replacement}});
  }
  return out;
}

// Slots where the final prompt differs from the seed.
json SeedDiffJson(const Prompt& seed, const Prompt& final_prompt) {
  json out = json::array();
  for (std::size_t i = 0; i < seed.size() && i < final_prompt.size(); ++i) {
    if (seed[i].surface != final_prompt[i].surface) {
      out.push_back({{"index", i},
                     {"from", seed[i].surface},
                     {"to", final_prompt[i].surface}});
    }
  }
  return out;
}

json OptionalNumber(const std::optional<double>& value) {
  return value.has_value() ? json(*value) : json(nullptr);
}

// JSON has no infinities.
json FiniteOrNull(double value) {
  return std::isfinite(value) ? json(value) : json(nullptr);
}

}  // namespace

json SeedRecordJson(const SeedOutcome& outcome) {
  json record;
  record["seed"] = outcome.seed_text;
  if (!outcome.result.has_value()) {
    record["status"] = "error";
    record["final_prompt"] = nullptr;
    record["iterations"] = 0;
    record["checker_queries"] = 0;
    record["generator_queries"] = 0;
    record["wall_time_s"] = 0.0;
    record["applied_substitutions"] = json::array();
    record["error"] = std::string(ErrorCodeName(outcome.error_code)) + ": " +
                      outcome.error;
    return record;
  }
  const CampaignResult& r = *outcome.result;
  record["status"] = CampaignStatusName(r.status);
  record["final_prompt"] = r.final_prompt.Text();
  record["iterations"] = r.iterations_used;
  record["checker_queries"] = r.ledger.checker_queries();
  record["generator_queries"] = r.ledger.generator_queries;
  record["wall_time_s"] = r.wall_time_s;
  record["applied_substitutions"] = SeedDiffJson(r.seed, r.final_prompt);
  return record;
}

json SummaryJson(const CorpusReport& report) {
  return {{"bypass_rate", report.bypass_rate},
          {"mean_queries_success", OptionalNumber(report.mean_queries_success)},
          {"mean_time_success", OptionalNumber(report.mean_time_success)}};
}

std::string CorpusReportToJsonl(const CorpusReport& report) {
  std::string out;
  for (const SeedOutcome& outcome : report.seeds) {
    out += SeedRecordJson(outcome).dump();
    out += '\n';
  }
  out += SummaryJson(report).dump();
  out += '\n';
  return out;
}

void WriteCorpusReport(const CorpusReport& report,
                       const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIoError, "cannot write report: " + path.string());
  }
  out << CorpusReportToJsonl(report);
  if (!out.flush()) {
    throw Error(ErrorCode::kIoError, "failed writing report: " + path.string());
  }
}

json CampaignResultJson(const CampaignResult& result) {
  const CampaignTrace& trace = result.trace;
  json discrepancy = json::array();
  for (const auto& [index, dc] : trace.sensitivity.discrepancy) {
    discrepancy.push_back({{"index", index}, {"dc", FiniteOrNull(dc)}});
  }
  json iterations = json::array();
  for (const IterationRecord& it : trace.iterations) {
    json candidates = json::array();
    for (const CandidateRecord& c : it.candidates) {
      candidates.push_back(
          {{"kind", c.kind == CandidateKind::kDiscrepancyAway
                        ? "discrepancy_away"
                        : "dirtiness_preserving"},
           {"rank", c.rank},
           {"prompt", c.prompt},
           {"applied", SubstitutionsJson(c.applied)},
           {"target_score", c.scores.target},
           {"surrogate_score", c.scores.surrogate},
           {"fitness", c.scores.fitness()},
           {"adversarial", c.adversarial},
           {"accepted", c.accepted},
           {"returned", c.returned}});
    }
    iterations.push_back({{"iteration", it.iteration},
                          {"best_fit_before", it.best_fit_before},
                          {"best_fit_after", it.best_fit_after},
                          {"checker_queries", it.checker_queries},
                          {"generator_queries", it.generator_queries},
                          {"candidates", std::move(candidates)}});
  }
  return {
      {"seed", result.seed.Text()},
      {"status", CampaignStatusName(result.status)},
      {"final_prompt", result.final_prompt.Text()},
      {"iterations", result.iterations_used},
      {"best_fit", result.best_fit},
      {"target_queries", result.ledger.target_queries},
      {"surrogate_queries", result.ledger.surrogate_queries},
      {"generator_queries", result.ledger.generator_queries},
      {"wall_time_s", result.wall_time_s},
      {"sensitivity",
       {{"dirty_indices", trace.sensitivity.dirty_indices},
        {"discrepancy", std::move(discrepancy)},
        {"top_k_discrepant", trace.sensitivity.top_k_discrepant},
        {"checker_queries", trace.sensitivity.checker_queries},
        {"generator_queries", trace.sensitivity.generator_queries}}},
      {"seed_scores",
       {{"target", trace.seed_scores.target},
        {"surrogate", trace.seed_scores.surrogate}}},
      {"initial_checker_queries", trace.initial_checker_queries},
      {"initial_generator_queries", trace.initial_generator_queries},
      {"trace", std::move(iterations)},
  };
}

}  // namespace discfuzz
