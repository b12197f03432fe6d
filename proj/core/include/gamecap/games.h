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

// K-party non-local games with a dense winning tensor.
//
// Questions and answers are 0-based indices. The winning tensor is stored
// flat in row-major order over (q_1..q_K, a_1..a_K) with party 1 most
// significant, i.e. entry `q_index * num_answer_tuples + a_index` where both
// indices are mixed-radix over the per-party alphabet sizes. Correlation
// tables share this layout.

#ifndef GAMECAP_GAMES_H_
#define GAMECAP_GAMES_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gamecap/common.h"

namespace gamecap {

class Game {
 public:
  // Builds from an explicit dense tensor. Throws InvalidArgument if K < 2,
  // any size is non-positive, or the tensor has the wrong length.
  Game(std::string name, Sizes question_sizes, Sizes answer_sizes,
       std::vector<std::uint8_t> winning);

  const std::string& name() const { return name_; }
  int num_parties() const { return static_cast<int>(question_sizes_.size()); }
  const Sizes& question_sizes() const { return question_sizes_; }
  const Sizes& answer_sizes() const { return answer_sizes_; }
  Index num_question_tuples() const { return num_questions_; }
  Index num_answer_tuples() const { return num_answers_; }
  std::span<const std::uint8_t> winning() const { return winning_; }

  // Lookup by flat question / answer tuple indices.
  bool is_winning(Index q_index, Index a_index) const {
    return winning_[q_index * num_answers_ + a_index] != 0;
  }
  // Lookup by per-party tuples; range-checked.
  bool is_winning(std::span<const int> q, std::span<const int> a) const;

  Index question_index(std::span<const int> q) const;
  Index answer_index(std::span<const int> a) const;

  Index num_winning() const;

  friend bool operator==(const Game&, const Game&) = default;

 private:
  std::string name_;
  Sizes question_sizes_;
  Sizes answer_sizes_;
  Index num_questions_;
  Index num_answers_;
  std::vector<std::uint8_t> winning_;
};

// a_1 xor a_2 == q_1 q_2 over binary alphabets.
Game make_chsh();

// Mermin-Peres magic square. Questions {0,1,2} (row / column), answers are
// 3-bit integers where bit j holds the entry of cell j. Party 1 must answer
// with even parity, party 2 with odd parity, and bit q_2 of a_1 must equal
// bit q_1 of a_2.
Game make_magic_square();

// Promise-free K-party parity game (K >= 3): wins on odd question sum, and
// on even question sum iff sum(a) == sum(q)/2 mod 2.
Game make_parity(int num_parties);

// Built-in by name: "chsh", "magic-square", "parity" (needs num_parties).
Game make_builtin(const std::string& name, int num_parties = 0);

}  // namespace gamecap

#endif  // GAMECAP_GAMES_H_
