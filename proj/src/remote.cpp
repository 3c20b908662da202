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

// HTTP backends speaking the sidecar wire protocol.

#include <httplib.h>

#include <cmath>
#include <json.hpp>
#include <utility>

#include "base64.hpp"
#include "checkers.hpp"
#include "error.hpp"

namespace discfuzz {
namespace {

using nlohmann::json;

struct Endpoint {
  std::string scheme_host_port;
  std::string path_prefix;
};

Endpoint ParseEndpoint(const std::string& url) {
  std::size_t scheme_end = url.find("://");
  std::size_t host_start = scheme_end == std::string::npos ? 0 : scheme_end + 3;
  std::size_t path_start = url.find('/', host_start);
  Endpoint e;
  if (path_start == std::string::npos) {
    e.scheme_host_port = url;
  } else {
    e.scheme_host_port = url.substr(0, path_start);
    e.path_prefix = url.substr(path_start);
    while (!e.path_prefix.empty() && e.path_prefix.back() == '/') {
      e.path_prefix.pop_back();
    }
  }
  if (scheme_end == std::string::npos) {
    e.scheme_host_port = "http://" + e.scheme_host_port;
  }
  return e;
}

json PostJson(const std::string& url, const std::string& route,
              const json& body, const RemoteOptions& options) {
  Endpoint endpoint = ParseEndpoint(url);
  httplib::Client client(endpoint.scheme_host_port);
  if (!client.is_valid()) {
    throw Error(ErrorCode::kBackendUnavailable, "invalid endpoint " + url);
  }
  client.set_connection_timeout(options.connect_timeout);
  client.set_read_timeout(options.read_timeout);
  client.set_write_timeout(options.read_timeout);
  std::string path = endpoint.path_prefix + route;
  httplib::Result res = client.Post(path, body.dump(), "application/json");
  if (!res) {
    throw Error(ErrorCode::kBackendUnavailable,
                "POST " + url + route + " failed: " + httplib::to_string(res.error()));
  }
  if (res->status < 200 || res->status >= 300) {
    throw Error(ErrorCode::kBackendUnavailable,
                "POST " + url + route + " returned HTTP " +
                    std::to_string(res->status));
  }
  json parsed = json::parse(res->body, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded() || !parsed.is_object()) {
    throw Error(ErrorCode::kMalformedResponse,
                "POST " + url + route + ": response is not a JSON object");
  }
  return parsed;
}

}  // namespace

SafetyScore RemoteScore(const std::string& endpoint, const Prompt& prompt,
                        const GeneratedSample& sample,
                        const RemoteOptions& options) {
  json body = {{"prompt", prompt.Text()}};
  switch (sample.kind()) {
    case SampleKind::kNone:
      break;
    case SampleKind::kImageBytes:
      body["sample_b64"] = Base64Encode(sample.bytes());
      break;
    case SampleKind::kFeatureVector:
      throw Error(ErrorCode::kIncompatibleSample,
                  "remote checkers accept image bytes, not feature vectors");
  }
  json response = PostJson(endpoint, "/score", body, options);
  auto it = response.find("score");
  if (it == response.end() || !it->is_number()) {
    throw Error(ErrorCode::kMalformedResponse,
                "score response lacks a numeric 'score'");
  }
  return SafetyScore(it->get<double>());
}

RemoteChecker::RemoteChecker(std::string endpoint, RemoteOptions options)
    : endpoint_(std::move(endpoint)), options_(options) {}

SafetyScore RemoteChecker::Score(const Prompt& prompt,
                                 const GeneratedSample& sample) const {
  return RemoteScore(endpoint_, prompt, sample, options_);
}

RemoteGenerator::RemoteGenerator(std::string endpoint, std::int64_t seed,
                                 RemoteOptions options)
    : endpoint_(std::move(endpoint)), seed_(seed), options_(options) {}

GeneratedSample RemoteGenerator::Generate(const Prompt& prompt) const {
  json body = {{"prompt", prompt.Text()}, {"seed", seed_}};
  json response = PostJson(endpoint_, "/generate", body, options_);
  auto it = response.find("sample_b64");
  if (it == response.end() || !it->is_string()) {
    throw Error(ErrorCode::kMalformedResponse,
                "generate response lacks a string 'sample_b64'");
  }
  return GeneratedSample::ImageBytes(Base64Decode(it->get<std::string>()));
}

}  // namespace discfuzz
