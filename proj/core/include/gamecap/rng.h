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

// Portable random numbers. Every randomized routine in the library draws from
// Xoshiro256** seeded through SplitMix64, so results are bit-identical across
// platforms and standard libraries (std distributions are not used).
//
// Streams: a generator is identified by (seed, domain, index). `domain`
// separates independent uses (GBA starts, question draws, box answers,
// channel noise, ...) and `index` is the start / symbol / trial number, so
// work can be split across threads without changing any sampled value.

#ifndef GAMECAP_RNG_H_
#define GAMECAP_RNG_H_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace gamecap {

std::uint64_t splitmix64(std::uint64_t& state);

// Well-known stream domains.
enum class StreamDomain : std::uint64_t {
  kGbaStart = 1,
  kQuestions = 2,
  kBoxAnswers = 3,
  kChannelNoise = 4,
  kMessages = 5,
  kCodebook = 6,
  kStrategies = 7,
  kUser = 100,
};

class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256(std::uint64_t seed);
  static Xoshiro256 for_stream(std::uint64_t seed, StreamDomain domain,
                               std::uint64_t index);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()();

  // Uniform in [0, 1) with 53 random bits.
  double uniform();
  // Uniform integer in [0, n); n > 0. Lemire's method, unbiased.
  std::uint64_t below(std::uint64_t n);
  // Exp(1) variate.
  double exponential();
  // Symmetric Dirichlet(1) sample of the given length (a uniform point of
  // the simplex).
  std::vector<double> dirichlet(std::size_t length);

 private:
  std::array<std::uint64_t, 4> s_;
};

// Samples an index from a cumulative table (nondecreasing, last entry 1).
// Zero-mass entries are never returned.
std::size_t sample_cdf(std::span<const double> cdf, double u);

// Builds the cumulative table of `probs`, zeroing entries below `truncate`
// and renormalizing. The last positive entry maps to exactly 1.
std::vector<double> build_cdf(std::span<const double> probs,
                              double truncate = 0.0);

}  // namespace gamecap

#endif  // GAMECAP_RNG_H_
