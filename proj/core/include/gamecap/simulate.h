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

// Monte Carlo realization of the cooperative coding scheme: transmitters
// feed their codeword symbols as questions into a shared box, send the
// (question, answer) pairs through the channel, and each receiver decodes
// its own message from the winning sub-channel.
//
// Random streams (see rng.h): symbol j of a block draws its box answers from
// stream (kBoxAnswers, j) and its channel noise from (kChannelNoise, j).
// Trial t of end_to_end draws its messages and a per-trial symbol seed from
// (kMessages, t), so trials may run on any worker.

#ifndef GAMECAP_SIMULATE_H_
#define GAMECAP_SIMULATE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "gamecap/channels.h"
#include "gamecap/correlations.h"
#include "gamecap/games.h"

namespace gamecap {

inline constexpr double kBoxTruncation = 1e-12;

// Precomputed per-question answer samplers for a box, with entries below
// kBoxTruncation removed.
class BoxSampler {
 public:
  explicit BoxSampler(const CorrelationTable& box);
  Index sample(Index q_index, double u) const;
  const CorrelationTable& box() const { return box_; }

 private:
  CorrelationTable box_;
  std::vector<std::vector<double>> cdfs_;
};

class ChannelSampler {
 public:
  explicit ChannelSampler(const Channel& channel);
  Index sample(Index x, double u) const;
  const Channel& channel() const { return channel_; }

 private:
  Channel channel_;
  std::vector<std::vector<double>> cdfs_;
};

// Per symbol j: a ~ box(.|q_j), x_i = (q_i, a_i). q_block holds flat
// question-tuple indices; the result holds joint channel input indices.
std::vector<Index> cooperative_transmit(std::span<const Index> q_block,
                                        const BoxSampler& box,
                                        const Channel& channel,
                                        std::uint64_t seed);
std::vector<Index> cooperative_transmit(std::span<const Index> q_block,
                                        const CorrelationTable& box,
                                        const Channel& channel,
                                        std::uint64_t seed);

// i.i.d. per-symbol outputs (joint output indices).
std::vector<Index> channel_sample(const ChannelSampler& channel,
                                  std::span<const Index> x_block,
                                  std::uint64_t seed);
std::vector<Index> channel_sample(const Channel& channel,
                                  std::span<const Index> x_block,
                                  std::uint64_t seed);

// Fraction of x_block inputs whose (q, a) is in the winning set.
double winning_fraction(const Game& game, const Channel& channel,
                        std::span<const Index> x_block);

struct DecompositionReport {
  Index samples = 0;
  double winning_fraction = 0.0;
  std::vector<double> tv_distances;   // per receiver
  // sum_i H(Y_i|Q) - H(Y|Q) of the empirical law; equals I(Y_1;Y_2|Q_1,Q_2)
  // for two receivers.
  double conditional_dependence_bits = 0.0;
  // Empirical P(y_i = q_i) per receiver, meaningful when |Y_i| = |Q_i|.
  std::vector<double> relay_accuracy;
};

// Throws ValidationError unless the box wins the game with probability 1
// (within 1e-9) and the channel passes per-receiver validation.
DecompositionReport empirical_decomposition_test(const Channel& channel,
                                                 const Game& game,
                                                 const CorrelationTable& box,
                                                 Index samples,
                                                 std::uint64_t seed);

struct Codebook {
  int alphabet_size = 0;  // |Q_i|
  int block_length = 0;
  std::vector<std::vector<int>> codewords;  // one per message

  int num_messages() const { return static_cast<int>(codewords.size()); }
  void validate() const;
};

// Message m -> (m, m, ..., m). Requires num_messages <= alphabet_size.
Codebook repetition_codebook(int alphabet_size, int num_messages,
                             int block_length);
// Message m -> base-|Q| digits of m, most significant first.
Codebook enumerative_codebook(int alphabet_size, int num_messages,
                              int block_length);
// ceil(2^(n R)) codewords with i.i.d. uniform symbols.
Codebook random_codebook(int alphabet_size, double rate, int block_length,
                         std::uint64_t seed);

struct SimConfig {
  int block_length = 1;
  Index trials = 1;
  std::uint64_t rng_seed = 0;
  int workers = 0;

  void validate() const;
};

struct EndToEndReport {
  Index trials = 0;
  std::vector<double> receiver_error_rates;
  double message_error_rate = 0.0;  // P(any receiver wrong)
  double winning_fraction = 0.0;
};

// Uniform messages -> codewords -> box -> channel -> per-receiver ML decoding
// under the analytic winning sub-channel (ties to the lowest message).
EndToEndReport end_to_end(const Channel& channel, const Game& game,
                          const CorrelationTable& box,
                          const std::vector<Codebook>& codebooks,
                          const SimConfig& cfg);

struct DominanceReport {
  bool passed = true;
  int trials = 0;
  double classical_max = 0.0;
  double max_observed = 0.0;
};

// Random shared-randomness strategies (1..4 latent values) never beat the
// deterministic optimum by more than 1e-9. Every 10th trial is a single
// latent value with one-hot responses, i.e. a random deterministic strategy.
DominanceReport mixture_dominance_test(const Game& game, int trials,
                                       std::uint64_t seed);

int resolve_workers(int requested);

}  // namespace gamecap

#endif  // GAMECAP_SIMULATE_H_
