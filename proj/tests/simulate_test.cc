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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "gamecap/channels.h"
#include "gamecap/correlations.h"
#include "gamecap/entropy.h"
#include "gamecap/games.h"
#include "gamecap/quantum.h"
#include "gamecap/rng.h"
#include "gamecap/simulate.h"

namespace gamecap {
namespace {

std::vector<Index> uniform_questions(Index n, Index num_q, std::uint64_t seed) {
  Xoshiro256 rng(seed);
  std::vector<Index> q(n);
  for (auto& v : q) v = static_cast<Index>(rng.below(num_q));
  return q;
}

double three_sigma(double p, Index n) {
  return 3 * std::sqrt(p * (1 - p) / static_cast<double>(n));
}

TEST(CooperativeTransmit, WinningFractions) {
  const Game g = make_chsh();
  const Channel ch = build_game_channel(g, ChannelParams::from_eta(0.2));
  const Index n = 100000;
  const auto q = uniform_questions(n, 4, 1);

  const auto pr = cooperative_transmit(q, make_pr_box(), ch, 7);
  EXPECT_EQ(winning_fraction(g, ch, pr), 1.0);

  const auto det = cooperative_transmit(
      q, table_from_deterministic(classical_max_win(g).strategy), ch, 7);
  EXPECT_NEAR(winning_fraction(g, ch, det), 0.75, three_sigma(0.75, n));

  const auto uni =
      cooperative_transmit(q, make_uniform_box({2, 2}, {2, 2}), ch, 7);
  EXPECT_NEAR(winning_fraction(g, ch, uni), 0.5, three_sigma(0.5, n));
}

TEST(CooperativeTransmit, PreservesQuestions) {
  const Game g = make_magic_square();
  const Channel ch = build_game_channel(g, ChannelParams::from_eta(0));
  const auto q = uniform_questions(1000, 9, 2);
  const auto x =
      cooperative_transmit(q, born_table(make_mermin_peres()), ch, 3);
  for (std::size_t j = 0; j < q.size(); ++j) {
    EXPECT_EQ(ch.question_tuple(x[j]), q[j]);
  }
  EXPECT_EQ(winning_fraction(g, ch, x), 1.0);
}

TEST(CooperativeTransmit, AlphabetMismatchThrows) {
  const Channel ch =
      build_game_channel(make_magic_square(), ChannelParams::from_eta(0));
  const std::vector<Index> q = {0};
  EXPECT_THROW(cooperative_transmit(q, make_pr_box(), ch, 1), InvalidArgument);
}

TEST(ChannelSample, DeterministicChannelIsItsImage) {
  const Game g = make_chsh();
  const Channel ch = build_game_channel(g, ChannelParams::from_eta(0));
  std::vector<Index> x;
  for (int q1 = 0; q1 < 2; ++q1)
    for (int q2 = 0; q2 < 2; ++q2)
      x.push_back(ch.input_index(std::vector{q1, q2},
                                 std::vector{0, q1 * q2}));
  const auto y = channel_sample(ch, x, 5);
  for (std::size_t j = 0; j < x.size(); ++j) {
    EXPECT_EQ(y[j], ch.question_tuple(x[j]));
  }
}

TEST(ChannelSample, EmpiricalRowsConverge) {
  const Channel ch =
      build_game_channel(make_chsh(), ChannelParams::from_eta(0.3));
  for (Index x0 : {Index{0}, Index{5}, Index{15}}) {
    const std::vector<Index> x(100000, x0);
    const auto y = channel_sample(ch, x, 11 + static_cast<std::uint64_t>(x0));
    std::vector<double> freq(ch.num_outputs(), 0.0);
    for (Index v : y) freq[v] += 1.0 / static_cast<double>(y.size());
    EXPECT_LT(total_variation(freq, ch.row(x0)), 0.01);
  }
}

TEST(ChannelSample, SeededRunsAreIdentical) {
  const Channel ch =
      build_game_channel(make_parity(3), ChannelParams::from_eta(0.2));
  const auto x = uniform_questions(5000, ch.num_inputs(), 3);
  EXPECT_EQ(channel_sample(ch, x, 99), channel_sample(ch, x, 99));
  EXPECT_NE(channel_sample(ch, x, 99), channel_sample(ch, x, 100));
}

TEST(Decomposition, ChshPrBox) {
  const Game g = make_chsh();
  const Channel ch = build_game_channel(g, ChannelParams::from_eta(0.2));
  const auto r = empirical_decomposition_test(ch, g, make_pr_box(), 100000, 1);
  EXPECT_EQ(r.winning_fraction, 1.0);
  ASSERT_EQ(r.tv_distances.size(), 2u);
  for (double tv : r.tv_distances) EXPECT_LT(tv, 0.01);
  EXPECT_LT(r.conditional_dependence_bits, 0.01);
  for (double acc : r.relay_accuracy) EXPECT_NEAR(acc, 0.9, 0.01);
}

TEST(Decomposition, MagicSquareNoiselessRelay) {
  const Game g = make_magic_square();
  const Channel ch = build_game_channel(g, ChannelParams::from_eta(0));
  const auto r = empirical_decomposition_test(
      ch, g, born_table(make_mermin_peres()), 20000, 2);
  EXPECT_EQ(r.winning_fraction, 1.0);
  for (double acc : r.relay_accuracy) EXPECT_EQ(acc, 1.0);
  for (double tv : r.tv_distances) EXPECT_EQ(tv, 0.0);
}

TEST(Decomposition, RejectsNonWinningBox) {
  const Game g = make_chsh();
  const Channel ch = build_game_channel(g, ChannelParams::from_eta(0.2));
  EXPECT_THROW(empirical_decomposition_test(
                   ch, g, born_table(make_tsirelson_chsh()), 100, 1),
               ValidationError);
}

TEST(Codebooks, Construction) {
  const Codebook rep = repetition_codebook(2, 2, 5);
  EXPECT_EQ(rep.codewords[1], (std::vector<int>{1, 1, 1, 1, 1}));
  const Codebook en = enumerative_codebook(3, 9, 2);
  EXPECT_EQ(en.codewords[5], (std::vector<int>{1, 2}));
  EXPECT_THROW(repetition_codebook(2, 3, 5), InvalidArgument);
  EXPECT_THROW(enumerative_codebook(2, 5, 2), InvalidArgument);
  const Codebook rnd = random_codebook(2, 0.5, 8, 1);
  EXPECT_EQ(rnd.num_messages(), 16);
  EXPECT_EQ(random_codebook(2, 0.5, 8, 1).codewords, rnd.codewords);
}

SimConfig sim(int n, Index trials, std::uint64_t seed) {
  SimConfig cfg;
  cfg.block_length = n;
  cfg.trials = trials;
  cfg.rng_seed = seed;
  return cfg;
}

TEST(EndToEnd, NoiselessChannelIsErrorFree) {
  const Game g = make_magic_square();
  const Channel ch = build_game_channel(g, ChannelParams::from_eta(0));
  const std::vector<Codebook> books = {enumerative_codebook(3, 81, 8),
                                       enumerative_codebook(3, 81, 8)};
  const auto r =
      end_to_end(ch, g, born_table(make_mermin_peres()), books, sim(8, 2000, 1));
  EXPECT_EQ(r.message_error_rate, 0.0);
  EXPECT_EQ(r.winning_fraction, 1.0);
}

TEST(EndToEnd, RepetitionCodeBelowCapacity) {
  const Game g = make_chsh();
  const Channel ch = build_game_channel(g, ChannelParams::from_eta(0.2));
  const std::vector<Codebook> books = {repetition_codebook(2, 2, 15),
                                       repetition_codebook(2, 2, 15)};
  const auto r = end_to_end(ch, g, make_pr_box(), books, sim(15, 10000, 4));
  EXPECT_LE(r.message_error_rate, 0.01);
}

TEST(EndToEnd, RateAboveCapacityFails) {
  const Game g = make_chsh();
  const Channel ch = build_game_channel(g, ChannelParams::from_eta(0.2));
  const std::vector<Codebook> books = {random_codebook(2, 1.0, 8, 1),
                                       random_codebook(2, 1.0, 8, 2)};
  const auto r = end_to_end(ch, g, make_pr_box(), books, sim(8, 2000, 5));
  EXPECT_GT(r.message_error_rate, 0.1);
}

TEST(EndToEnd, RepetitionErrorDecreasesWithLength) {
  const Game g = make_chsh();
  const Channel ch = build_game_channel(g, ChannelParams::from_eta(0.4));
  const Index trials = 4000;
  double prev = 1.0;
  for (int n : {5, 15, 45}) {
    const std::vector<Codebook> books = {repetition_codebook(2, 2, n),
                                         repetition_codebook(2, 2, n)};
    const double e =
        end_to_end(ch, g, make_pr_box(), books, sim(n, trials, 6))
            .message_error_rate;
    const double slack = 2 * std::sqrt(prev * (1 - prev) / trials);
    EXPECT_LE(e, prev + slack) << "n=" << n;
    prev = e;
  }
}

TEST(EndToEnd, ReproducibleAcrossWorkers) {
  const Game g = make_parity(3);
  const Channel ch = build_game_channel(g, ChannelParams::from_eta(0.25));
  const std::vector<Codebook> books(3, repetition_codebook(2, 2, 7));
  SimConfig cfg = sim(7, 3000, 8);
  cfg.workers = 1;
  const auto a = end_to_end(ch, g, born_table(make_ghz_parity(3)), books, cfg);
  cfg.workers = 4;
  const auto b = end_to_end(ch, g, born_table(make_ghz_parity(3)), books, cfg);
  EXPECT_EQ(a.receiver_error_rates, b.receiver_error_rates);
  EXPECT_EQ(a.message_error_rate, b.message_error_rate);
}

TEST(EndToEnd, CodebookMismatchThrows) {
  const Game g = make_chsh();
  const Channel ch = build_game_channel(g, ChannelParams::from_eta(0.2));
  const std::vector<Codebook> books = {repetition_codebook(2, 2, 5)};
  EXPECT_THROW(end_to_end(ch, g, make_pr_box(), books, sim(5, 10, 1)),
               InvalidArgument);
}

TEST(MixtureDominance, BuiltinGames) {
  for (const Game& g : {make_chsh(), make_magic_square(), make_parity(3)}) {
    const auto r = mixture_dominance_test(g, 200, 3);
    EXPECT_TRUE(r.passed) << g.name();
    EXPECT_EQ(r.trials, 200);
    EXPECT_LE(r.max_observed, r.classical_max + 1e-9);
  }
}

}  // namespace
}  // namespace gamecap
