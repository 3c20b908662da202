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

#include "error.hpp"

namespace discfuzz {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOk: return "Ok";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kEmptyPrompt: return "EmptyPrompt";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kDuplicateIndex: return "DuplicateIndex";
    case ErrorCode::kWouldBeEmpty: return "WouldBeEmpty";
    case ErrorCode::kInconsistentDimension: return "InconsistentDimension";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kEmptyStore: return "EmptyStore";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNoEmbeddable: return "NoEmbeddable";
    case ErrorCode::kUnknownWord: return "UnknownWord";
    case ErrorCode::kBackendUnavailable: return "BackendUnavailable";
    case ErrorCode::kIncompatibleSample: return "IncompatibleSample";
    case ErrorCode::kMalformedResponse: return "MalformedResponse";
    case ErrorCode::kOutOfRangeScore: return "OutOfRangeScore";
    case ErrorCode::kEmptySeed: return "EmptySeed";
    case ErrorCode::kUnknownBackendKind: return "UnknownBackendKind";
    case ErrorCode::kFileNotFound: return "FileNotFound";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

bool IsBackendError(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBackendUnavailable:
    case ErrorCode::kIncompatibleSample:
    case ErrorCode::kMalformedResponse:
    case ErrorCode::kOutOfRangeScore:
      return true;
    default:
      return false;
  }
}

}  // namespace discfuzz
