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

#include "gamecap/rng.h"

#include <algorithm>
#include <cmath>

#include "gamecap/common.h"

namespace gamecap {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

Xoshiro256::Xoshiro256(std::uint64_t seed) {
  std::uint64_t sm = seed;
  for (auto& word : s_) word = splitmix64(sm);
}

Xoshiro256 Xoshiro256::for_stream(std::uint64_t seed, StreamDomain domain,
                                  std::uint64_t index) {
  // Hash (seed, domain, index) into a single SplitMix64 seed.
  std::uint64_t h = seed;
  std::uint64_t mixed = splitmix64(h);
  h = mixed ^ (static_cast<std::uint64_t>(domain) * 0xD1B54A32D192ED03ULL);
  mixed = splitmix64(h);
  h = mixed ^ (index * 0xAEF17502108EF2D9ULL + 0x632BE59BD9B4E019ULL);
  return Xoshiro256(splitmix64(h));
}

Xoshiro256::result_type Xoshiro256::operator()() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Xoshiro256::uniform() {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

std::uint64_t Xoshiro256::below(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("Xoshiro256::below: n must be positive");
  std::uint64_t x = (*this)();
  __uint128_t m = static_cast<__uint128_t>(x) * n;
  auto low = static_cast<std::uint64_t>(m);
  if (low < n) {
    const std::uint64_t threshold = (0 - n) % n;
    while (low < threshold) {
      x = (*this)();
      m = static_cast<__uint128_t>(x) * n;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

double Xoshiro256::exponential() { return -std::log1p(-uniform()); }

std::vector<double> Xoshiro256::dirichlet(std::size_t length) {
  std::vector<double> w(length);
  double total = 0.0;
  for (auto& v : w) {
    v = exponential();
    total += v;
  }
  if (total <= 0.0) {
    std::fill(w.begin(), w.end(), 1.0 / static_cast<double>(length));
    return w;
  }
  for (auto& v : w) v /= total;
  return w;
}

std::size_t sample_cdf(std::span<const double> cdf, double u) {
  auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  if (it == cdf.end()) --it;
  return static_cast<std::size_t>(it - cdf.begin());
}

std::vector<double> build_cdf(std::span<const double> probs, double truncate) {
  std::vector<double> cdf(probs.size());
  double total = 0.0;
  std::size_t last_positive = probs.size();
  for (std::size_t k = 0; k < probs.size(); ++k) {
    const double p = probs[k] < truncate ? 0.0 : std::max(probs[k], 0.0);
    if (p > 0.0) last_positive = k;
    total += p;
    cdf[k] = total;
  }
  if (last_positive == probs.size()) {
    throw InvalidArgument("build_cdf: distribution has no positive mass");
  }
  for (auto& c : cdf) c /= total;
  for (std::size_t k = last_positive; k < cdf.size(); ++k) cdf[k] = 1.0;
  return cdf;
}

}  // namespace gamecap
