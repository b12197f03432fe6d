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

#ifndef GAMECAP_ENTROPY_H_
#define GAMECAP_ENTROPY_H_

#include <span>

namespace gamecap {

inline constexpr double kLn2 = 0.693147180559945309417232121458;

// Shannon entropy in bits, 0 log 0 = 0.
double entropy_bits(std::span<const double> p);

// Entropy in nats.
double entropy_nats(std::span<const double> p);

// H2(p) in bits.
double binary_entropy(double p);

// Half the L1 distance.
double total_variation(std::span<const double> p, std::span<const double> q);

}  // namespace gamecap

#endif  // GAMECAP_ENTROPY_H_
