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

#include "gamecap/common.h"

#include <sstream>

namespace gamecap {

Index product(std::span<const int> sizes) {
  Index total = 1;
  for (int s : sizes) {
    if (s <= 0) throw InvalidArgument("alphabet sizes must be positive");
    total *= s;
  }
  return total;
}

Index encode_mixed_radix(std::span<const int> digits,
                         std::span<const int> radices) {
  if (digits.size() != radices.size()) {
    throw InvalidArgument("tuple has " + std::to_string(digits.size()) +
                          " entries, expected " +
                          std::to_string(radices.size()));
  }
  Index index = 0;
  for (std::size_t k = 0; k < digits.size(); ++k) {
    if (digits[k] < 0 || digits[k] >= radices[k]) {
      throw InvalidArgument("index " + std::to_string(digits[k]) +
                            " out of range [0, " + std::to_string(radices[k]) +
                            ") at position " + std::to_string(k));
    }
    index = index * radices[k] + digits[k];
  }
  return index;
}

void decode_mixed_radix(Index index, std::span<const int> radices,
                        std::span<int> digits) {
  for (std::size_t k = radices.size(); k-- > 0;) {
    digits[k] = static_cast<int>(index % radices[k]);
    index /= radices[k];
  }
}

std::vector<int> decode_mixed_radix(Index index,
                                    std::span<const int> radices) {
  std::vector<int> digits(radices.size());
  decode_mixed_radix(index, radices, digits);
  return digits;
}

bool advance_mixed_radix(std::span<int> digits, std::span<const int> radices) {
  for (std::size_t k = digits.size(); k-- > 0;) {
    if (++digits[k] < radices[k]) return true;
    digits[k] = 0;
  }
  return false;
}

std::string format_sizes(std::span<const int> sizes) {
  std::ostringstream out;
  out << '[';
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    if (k) out << ", ";
    out << sizes[k];
  }
  out << ']';
  return out.str();
}

}  // namespace gamecap
