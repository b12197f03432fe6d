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

// Game channels: discrete memoryless K-transmitter channels whose inputs are
// (question, answer) pairs of a non-local game.
//
// Layout: transmitter i's input symbol is x_i = q_i * |A_i| + a_i. The joint
// input index is mixed-radix over |X_i| = |Q_i||A_i| and the joint output
// index mixed-radix over |Y_i|, transmitter / receiver 1 most significant.
// probs[x * |Y| + y] = P(y | x).

#ifndef GAMECAP_CHANNELS_H_
#define GAMECAP_CHANNELS_H_

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gamecap/common.h"
#include "gamecap/games.h"

namespace gamecap {

inline constexpr double kChannelTol = 1e-10;
inline constexpr double kStrictnessMargin = 1e-9;

// How receivers are grouped. kPerReceiver is an interference channel with K
// receivers. kGlobal stores the product output of a single receiver that sees
// all of y_[K] (a multiple-access channel); validation then treats the joint
// output as one receiver.
enum class ChannelMode { kPerReceiver, kGlobal };

const char* to_string(ChannelMode mode);
ChannelMode channel_mode_from_string(const std::string& text);

class Channel {
 public:
  // Throws InvalidArgument on dimension errors, ValidationError if a row is
  // not a distribution within `tol`.
  Channel(Sizes question_sizes, Sizes answer_sizes, Sizes output_sizes,
          std::vector<double> probs,
          ChannelMode mode = ChannelMode::kPerReceiver,
          double tol = kChannelTol);

  int num_tx() const { return static_cast<int>(question_sizes_.size()); }
  const Sizes& question_sizes() const { return question_sizes_; }
  const Sizes& answer_sizes() const { return answer_sizes_; }
  const Sizes& input_sizes() const { return input_sizes_; }
  const Sizes& output_sizes() const { return output_sizes_; }
  ChannelMode mode() const { return mode_; }
  Index num_inputs() const { return num_inputs_; }
  Index num_outputs() const { return num_outputs_; }
  std::span<const double> probs() const { return probs_; }

  std::span<const double> row(Index x) const {
    return std::span<const double>(probs_).subspan(x * num_outputs_,
                                                   num_outputs_);
  }

  // Joint input index of per-transmitter (q_i, a_i) pairs.
  Index input_index(std::span<const int> q, std::span<const int> a) const;
  // Splits a joint input index into question and answer tuples.
  void split_input(Index x, std::span<int> q, std::span<int> a) const;

  // Flat question / answer tuple indices (game layout) of a joint input.
  Index question_tuple(Index x) const;
  Index answer_tuple(Index x) const;

  // Same tensor, different receiver grouping.
  Channel with_mode(ChannelMode mode) const;

 private:
  Sizes question_sizes_;
  Sizes answer_sizes_;
  Sizes input_sizes_;
  Sizes output_sizes_;
  ChannelMode mode_;
  Index num_inputs_;
  Index num_outputs_;
  std::vector<double> probs_;
};

struct ChannelParams {
  double eta_w = 1.0;
  double eta_l = 0.0;
  ChannelMode mode = ChannelMode::kPerReceiver;

  // eta_w = 1 - eta, eta_l = eta.
  static ChannelParams from_eta(double eta,
                                ChannelMode mode = ChannelMode::kPerReceiver);
  // Throws InvalidArgument unless 0 <= eta_l < eta_w <= 1.
  void validate() const;
};

// Per-receiver mode: P(y|x) = prod_i [eta_c d(y_i,q_i) + (1-eta_c)/|Q_i|].
// Global mode: eta_c prod_i d(y_i,q_i) + (1-eta_c)/prod_i |Q_i|.
// c = w on winning inputs and l otherwise. Output sizes must equal question
// sizes; pass an empty vector to use them.
Channel build_game_channel(const Game& game, const ChannelParams& params,
                           Sizes output_sizes = {});

// A point-to-point channel P(y|q), row-major.
struct SubChannel {
  int num_inputs = 0;
  int num_outputs = 0;
  std::vector<double> probs;

  std::span<const double> row(int q) const {
    return std::span<const double>(probs).subspan(
        static_cast<std::size_t>(q) * num_outputs, num_outputs);
  }
  double operator()(int q, int y) const { return probs[q * num_outputs + y]; }
  void validate(double tol = kChannelTol) const;
};

// Constant column sums and rows that are permutations of each other (sorted
// rows agree within tol).
bool is_weakly_symmetric(const SubChannel& sub, double tol = 1e-9);

// log2 |Y| - H(row). Throws ValidationError if not weakly symmetric.
double weakly_symmetric_capacity(const SubChannel& sub, double tol = 1e-9);

// Entropy (bits) of one channel row.
double conditional_output_entropy(const Channel& channel, Index x);
double conditional_output_entropy(const Channel& channel,
                                  std::span<const int> q,
                                  std::span<const int> a);

enum class GameChannelClause {
  kAlphabets,
  kFactorization,
  kWeakSymmetry,
  kLessNoisy,
};

const char* to_string(GameChannelClause clause);

struct GameChannelFailure {
  GameChannelClause clause;
  std::string detail;
};

struct ReceiverReport {
  int num_questions = 0;
  int num_outputs = 0;
  SubChannel winning_subchannel;
  double h_w = 0.0;  // bits
  bool weakly_symmetric = false;
};

struct GameChannelReport {
  ChannelMode identification = ChannelMode::kPerReceiver;
  std::vector<ReceiverReport> receivers;
  double factorization_residual = 0.0;
  double max_winning_entropy = 0.0;
  double min_losing_entropy = std::numeric_limits<double>::infinity();
  // min_losing_entropy - max_winning_entropy; +inf without losing inputs.
  double strictness_margin = std::numeric_limits<double>::infinity();
  std::optional<GameChannelFailure> failure;

  bool passed() const { return !failure.has_value(); }
};

// Checks the game-channel conditions: factorization of winning rows into
// per-receiver factors that ignore answers and other questions, weak
// symmetry of each factor, and strictly lower output entropy on every
// winning input than on every losing one (by at least kStrictnessMargin).
// The identification defaults to the channel's own mode; kGlobal treats the
// joint output as a single receiver of the joint question.
GameChannelReport validate_game_channel(const Channel& channel,
                                        const Game& game,
                                        double tol = 1e-9);
GameChannelReport validate_game_channel(const Channel& channel,
                                        const Game& game, double tol,
                                        ChannelMode identification);

// sum_i (log2 |Y_i| - h_i^w). Throws ValidationError on a failed report.
double closed_form_sum_capacity(const GameChannelReport& report);

// One line per receiver:
// receiver,num_questions,num_outputs,h_w_bits,weakly_symmetric
std::string report_to_csv(const GameChannelReport& report);

}  // namespace gamecap

#endif  // GAMECAP_CHANNELS_H_
