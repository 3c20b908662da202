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

#ifndef DISCFUZZ_REPORT_HPP_
#define DISCFUZZ_REPORT_HPP_

#include <filesystem>
#include <string>

#include <json.hpp>

#include "fuzzer.hpp"

namespace discfuzz {

// One record per seed plus a trailing summary object:
//   {seed, status, final_prompt, iterations, checker_queries,
//    generator_queries, wall_time_s, applied_substitutions}
//   {bypass_rate, mean_queries_success, mean_time_success}
nlohmann::json SeedRecordJson(const SeedOutcome& outcome);
nlohmann::json SummaryJson(const CorpusReport& report);

// Newline-terminated JSONL text.
std::string CorpusReportToJsonl(const CorpusReport& report);
void WriteCorpusReport(const CorpusReport& report,
                       const std::filesystem::path& path);

// Full campaign including sensitivity report and per-iteration trace.
nlohmann::json CampaignResultJson(const CampaignResult& result);

}  // namespace discfuzz

#endif  // DISCFUZZ_REPORT_HPP_
