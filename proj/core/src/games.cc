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

#include "gamecap/games.h"

#include <algorithm>
#include <bit>
#include <utility>

namespace gamecap {

Game::Game(std::string name, Sizes question_sizes, Sizes answer_sizes,
           std::vector<std::uint8_t> winning)
    : name_(std::move(name)),
      question_sizes_(std::move(question_sizes)),
      answer_sizes_(std::move(answer_sizes)),
      winning_(std::move(winning)) {
  if (question_sizes_.size() < 2) {
    throw InvalidArgument("a game needs at least two parties");
  }
  if (answer_sizes_.size() != question_sizes_.size()) {
    throw InvalidArgument("question_sizes and answer_sizes differ in length");
  }
  num_questions_ = product(question_sizes_);
  num_answers_ = product(answer_sizes_);
  if (static_cast<Index>(winning_.size()) != num_questions_ * num_answers_) {
    throw InvalidArgument("winning tensor has " +
                          std::to_string(winning_.size()) +
                          " entries, expected " +
                          std::to_string(num_questions_ * num_answers_));
  }
  for (auto& w : winning_) w = w ? 1 : 0;
}

Index Game::question_index(std::span<const int> q) const {
  return encode_mixed_radix(q, question_sizes_);
}

Index Game::answer_index(std::span<const int> a) const {
  return encode_mixed_radix(a, answer_sizes_);
}

bool Game::is_winning(std::span<const int> q, std::span<const int> a) const {
  return is_winning(question_index(q), answer_index(a));
}

Index Game::num_winning() const {
  return std::count(winning_.begin(), winning_.end(), std::uint8_t{1});
}

namespace {

// Fills the dense tensor from a predicate over per-party tuples.
template <typename Pred>
std::vector<std::uint8_t> tabulate(const Sizes& qs, const Sizes& as,
                                   Pred&& wins) {
  const Index nq = product(qs);
  const Index na = product(as);
  std::vector<std::uint8_t> out(nq * na);
  std::vector<int> q(qs.size(), 0);
  std::vector<int> a(as.size(), 0);
  for (Index qi = 0; qi < nq; ++qi) {
    decode_mixed_radix(qi, qs, q);
    for (Index ai = 0; ai < na; ++ai) {
      decode_mixed_radix(ai, as, a);
      out[qi * na + ai] = wins(q, a) ? 1 : 0;
    }
  }
  return out;
}

}  // namespace

Game make_chsh() {
  Sizes two = {2, 2};
  auto w = tabulate(two, two, [](const auto& q, const auto& a) {
    return (a[0] ^ a[1]) == (q[0] & q[1]);
  });
  return Game("chsh", two, two, std::move(w));
}

Game make_magic_square() {
  Sizes qs = {3, 3};
  Sizes as = {8, 8};
  auto w = tabulate(qs, as, [](const auto& q, const auto& a) {
    const auto a1 = static_cast<unsigned>(a[0]);
    const auto a2 = static_cast<unsigned>(a[1]);
    const bool even1 = std::popcount(a1) % 2 == 0;
    const bool odd2 = std::popcount(a2) % 2 == 1;
    const bool agree = ((a1 >> q[1]) & 1u) == ((a2 >> q[0]) & 1u);
    return even1 && odd2 && agree;
  });
  return Game("magic-square", qs, as, std::move(w));
}

Game make_parity(int num_parties) {
  if (num_parties < 3) {
    throw InvalidArgument("parity game needs K >= 3, got " +
                          std::to_string(num_parties));
  }
  // 2^K * 2^K entries.
  if (num_parties > 12) {
    throw InvalidArgument("parity game limited to K <= 12");
  }
  Sizes bits(num_parties, 2);
  auto w = tabulate(bits, bits, [](const auto& q, const auto& a) {
    int sq = 0;
    int sa = 0;
    for (int v : q) sq += v;
    for (int v : a) sa += v;
    if (sq % 2 == 1) return true;
    return sa % 2 == (sq / 2) % 2;
  });
  return Game(std::to_string(num_parties) + "-parity", bits, bits,
              std::move(w));
}

Game make_builtin(const std::string& name, int num_parties) {
  if (name == "chsh") return make_chsh();
  if (name == "magic-square" || name == "ms") return make_magic_square();
  if (name == "parity" || name == "pp") return make_parity(num_parties);
  throw InvalidArgument("unknown built-in game '" + name + "'");
}

}  // namespace gamecap
