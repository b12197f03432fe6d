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

// Cooperation boxes P(a | q) and the classical / no-signaling machinery
// around them.

#ifndef GAMECAP_CORRELATIONS_H_
#define GAMECAP_CORRELATIONS_H_

#include <cstdint>
#include <span>
#include <vector>

#include "gamecap/common.h"
#include "gamecap/games.h"

namespace gamecap {

class Xoshiro256;

inline constexpr double kNormalizationTol = 1e-10;
inline constexpr double kNoSignalingTol = 1e-9;

// Dense conditional distribution P(a_[K] | q_[K]), laid out like the game
// winning tensor (question tuple outer, answer tuple inner).
class CorrelationTable {
 public:
  // Validates nonnegativity (entries in [0, 1 + 1e-12], tiny negative
  // roundoff clamped) and per-question normalization within `tol`.
  CorrelationTable(Sizes question_sizes, Sizes answer_sizes,
                   std::vector<double> probs,
                   double tol = kNormalizationTol);

  int num_parties() const { return static_cast<int>(question_sizes_.size()); }
  const Sizes& question_sizes() const { return question_sizes_; }
  const Sizes& answer_sizes() const { return answer_sizes_; }
  Index num_question_tuples() const { return num_questions_; }
  Index num_answer_tuples() const { return num_answers_; }
  std::span<const double> probs() const { return probs_; }

  double operator()(Index q_index, Index a_index) const {
    return probs_[q_index * num_answers_ + a_index];
  }
  // Answer distribution for one question tuple.
  std::span<const double> row(Index q_index) const {
    return std::span<const double>(probs_).subspan(q_index * num_answers_,
                                                   num_answers_);
  }

  bool same_alphabets(const Game& game) const;

 private:
  Sizes question_sizes_;
  Sizes answer_sizes_;
  Index num_questions_;
  Index num_answers_;
  std::vector<double> probs_;
};

// A local response table P(a_i | q_i), row-major |Q_i| x |A_i|.
struct ResponseTable {
  int num_questions = 0;
  int num_answers = 0;
  std::vector<double> probs;

  double operator()(int q, int a) const { return probs[q * num_answers + a]; }
};

// Shared randomness: weights P_V(v) and per-latent, per-party responses.
struct SharedRandomnessStrategy {
  std::vector<double> weights;
  // responses[v][i] is party i's table given latent value v.
  std::vector<std::vector<ResponseTable>> responses;

  void validate() const;
};

// Per-party answer functions f_i: Q_i -> A_i.
struct DeterministicStrategy {
  Sizes answer_sizes;
  std::vector<std::vector<int>> answers;  // answers[i][q_i]

  void validate() const;
  friend bool operator==(const DeterministicStrategy&,
                         const DeterministicStrategy&) = default;
};

CorrelationTable table_from_shared_randomness(
    const SharedRandomnessStrategy& strategy);

CorrelationTable table_from_deterministic(const DeterministicStrategy& strategy);

struct NoSignalingReport {
  bool no_signaling = true;
  double max_deviation = 0.0;
  // Location of the largest deviation (meaningful when max_deviation > 0).
  int party = -1;
  int question = -1;
  int answer = -1;
};

// Checks that every single-party marginal P(a_i | q) depends on q_i only.
NoSignalingReport is_no_signaling(const CorrelationTable& table,
                                  double tol = kNoSignalingTol);

// Uniform-question winning probability. Throws InvalidArgument on an
// alphabet mismatch.
double winning_probability(const Game& game, const CorrelationTable& table);

// Winning probability conditioned on one question tuple.
double winning_probability_given(const Game& game,
                                 const CorrelationTable& table, Index q_index);

struct ClassicalOptimum {
  double value = 0.0;
  // Exact count of won question tuples for the maximizer.
  Index wins = 0;
  DeterministicStrategy strategy;
};

inline constexpr double kDefaultEnumerationBudget = 1e8;

// Exhaustive maximum over deterministic strategies, enumerated in
// mixed-radix order of (f_1(0), .., f_1(|Q_1|-1), f_2(0), ...); the first
// maximizer in that order is returned. Throws NumericError when the
// strategy count exceeds `budget`.
ClassicalOptimum classical_max_win(const Game& game,
                                   double budget = kDefaultEnumerationBudget);

// The PR box: P(a|q) = 1/2 iff a_1 xor a_2 == q_1 q_2.
CorrelationTable make_pr_box();

// Every party answers uniformly at random, independently.
CorrelationTable make_uniform_box(const Sizes& question_sizes,
                                  const Sizes& answer_sizes);

// Random shared-randomness strategy: `num_latent` latent values with
// Dirichlet(1) weights and Dirichlet(1) response rows.
SharedRandomnessStrategy random_shared_randomness(const Sizes& question_sizes,
                                                  const Sizes& answer_sizes,
                                                  int num_latent,
                                                  Xoshiro256& rng);

}  // namespace gamecap

#endif  // GAMECAP_CORRELATIONS_H_
