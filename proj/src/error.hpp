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

#ifndef DISCFUZZ_ERROR_HPP_
#define DISCFUZZ_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace discfuzz {

// Numeric values are part of the C ABI (see include/discfuzz/discfuzz.h).
enum class ErrorCode : int {
  kOk = 0,
  kInvalidArgument = 1,
  kEmptyPrompt = 2,
  kIndexOutOfRange = 3,
  kDuplicateIndex = 4,
  kWouldBeEmpty = 5,
  kInconsistentDimension = 6,
  kParseError = 7,
  kEmptyStore = 8,
  kZeroVector = 9,
  kDimensionMismatch = 10,
  kNoEmbeddable = 11,
  kUnknownWord = 12,
  kBackendUnavailable = 13,
  kIncompatibleSample = 14,
  kMalformedResponse = 15,
  kOutOfRangeScore = 16,
  kEmptySeed = 17,
  kUnknownBackendKind = 18,
  kFileNotFound = 19,
  kIoError = 20,
  kInternal = 99,
};

std::string_view ErrorCodeName(ErrorCode code);

// Errors raised by a scoring or generation backend, as opposed to caller
// mistakes. Sensitivity analysis degrades gracefully on these.
bool IsBackendError(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace discfuzz

#endif  // DISCFUZZ_ERROR_HPP_
