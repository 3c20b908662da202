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

#ifndef DISCFUZZ_BASE64_HPP_
#define DISCFUZZ_BASE64_HPP_

#include <string>
#include <string_view>

namespace discfuzz {

std::string Base64Encode(std::string_view bytes);

// Throws kMalformedResponse on invalid input.
std::string Base64Decode(std::string_view text);

}  // namespace discfuzz

#endif  // DISCFUZZ_BASE64_HPP_
