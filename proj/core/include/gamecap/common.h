// Copyright 2026 The gamecap Authors.
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

#ifndef GAMECAP_COMMON_H_
#define GAMECAP_COMMON_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gamecap {

// Malformed input: wrong dimensions, out-of-range indices, bad parameters.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A well-formed object failed a structural check (normalization, game
// channel conditions, winning-box preconditions).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical breakdown: budget exceeded, collapse, complex residue.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Sizes = std::vector<int>;
using Index = std::int64_t;

// Product of sizes; throws on non-positive entries.
Index product(std::span<const int> sizes);

// Mixed-radix encoding with the first digit most significant.
Index encode_mixed_radix(std::span<const int> digits,
                         std::span<const int> radices);
void decode_mixed_radix(Index index, std::span<const int> radices,
                        std::span<int> digits);
std::vector<int> decode_mixed_radix(Index index, std::span<const int> radices);

// Iterates every digit tuple in mixed-radix order (last digit fastest).
// Returns false once the counter wraps around.
bool advance_mixed_radix(std::span<int> digits, std::span<const int> radices);

std::string format_sizes(std::span<const int> sizes);

}  // namespace gamecap

#endif  // GAMECAP_COMMON_H_
