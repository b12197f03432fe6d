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

#include "gamecap/correlations.h"
#include "gamecap/games.h"
#include "gamecap/rng.h"
#include "oracles.h"

namespace gamecap {
namespace {

SharedRandomnessStrategy deterministic_as_shared(
    const std::vector<std::vector<int>>& f, int num_answers) {
  SharedRandomnessStrategy s;
  s.weights = {1.0};
  s.responses.resize(1);
  for (const auto& fi : f) {
    ResponseTable r{static_cast<int>(fi.size()), num_answers,
                    std::vector<double>(fi.size() * num_answers, 0.0)};
    for (std::size_t q = 0; q < fi.size(); ++q) r.probs[q * num_answers + fi[q]] = 1.0;
    s.responses[0].push_back(r);
  }
  return s;
}

TEST(CorrelationTable, RejectsUnnormalizedRows) {
  EXPECT_THROW(CorrelationTable({2}, {2}, {0.5, 0.5, 0.5, 0.6}),
               ValidationError);
  EXPECT_THROW(CorrelationTable({2}, {2}, {0.5, 0.5, 1.5, -0.5}),
               ValidationError);
  EXPECT_THROW(CorrelationTable({2}, {2}, {0.5, 0.5, 1.0}), InvalidArgument);
}

TEST(SharedRandomness, SingleLatentIsDeterministicTable) {
  const std::vector<std::vector<int>> f = {{1, 0}, {0, 1}};
  const CorrelationTable shared =
      table_from_shared_randomness(deterministic_as_shared(f, 2));
  const CorrelationTable det =
      table_from_deterministic(DeterministicStrategy{{2, 2}, f});
  ASSERT_EQ(shared.probs().size(), det.probs().size());
  for (std::size_t i = 0; i < det.probs().size(); ++i) {
    EXPECT_DOUBLE_EQ(shared.probs()[i], det.probs()[i]);
  }
}

TEST(SharedRandomness, MixtureOfOptimalChshStrategies) {
  SharedRandomnessStrategy s;
  s.weights = {0.5, 0.5};
  s.responses = {deterministic_as_shared({{0, 0}, {0, 0}}, 2).responses[0],
                 deterministic_as_shared({{1, 1}, {1, 1}}, 2).responses[0]};
  const CorrelationTable t = table_from_shared_randomness(s);
  EXPECT_NEAR(winning_probability(make_chsh(), t), 0.75, 1e-15);
  EXPECT_TRUE(is_no_signaling(t).no_signaling);
}

TEST(SharedRandomness, RandomStrategiesAreNoSignaling) {
  Xoshiro256 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = random_shared_randomness({3, 3}, {8, 8}, 1 + trial % 4, rng);
    const auto report = is_no_signaling(table_from_shared_randomness(s));
    EXPECT_TRUE(report.no_signaling) << report.max_deviation;
  }
}

TEST(Deterministic, ChshAllZeros) {
  const DeterministicStrategy d{{2, 2}, {{0, 0}, {0, 0}}};
  const CorrelationTable t = table_from_deterministic(d);
  EXPECT_DOUBLE_EQ(winning_probability(make_chsh(), t), 0.75);
  // Loses exactly on q = (1, 1).
  EXPECT_DOUBLE_EQ(winning_probability_given(make_chsh(), t, 3), 0.0);
}

TEST(Deterministic, ParityIdentityAnswers) {
  const Game g = make_parity(3);
  const DeterministicStrategy d{{2, 2, 2}, {{0, 1}, {0, 1}, {0, 1}}};
  int wins = 0;
  for (int q = 0; q < 8; ++q) {
    const std::vector<int> qs = {q >> 2 & 1, q >> 1 & 1, q & 1};
    wins += oracle::parity(qs, qs);
  }
  EXPECT_DOUBLE_EQ(winning_probability(g, table_from_deterministic(d)),
                   wins / 8.0);
}

TEST(Deterministic, EmptyGameScoresZero) {
  const Game g("none", {2, 2}, {2, 2}, std::vector<std::uint8_t>(16, 0));
  const DeterministicStrategy d{{2, 2}, {{0, 0}, {0, 0}}};
  EXPECT_DOUBLE_EQ(winning_probability(g, table_from_deterministic(d)), 0.0);
}

TEST(Deterministic, RejectsOutOfRangeAnswer) {
  const DeterministicStrategy d{{2, 2}, {{0, 2}, {0, 0}}};
  EXPECT_THROW(table_from_deterministic(d), InvalidArgument);
}

TEST(NoSignaling, PrBox) {
  const auto report = is_no_signaling(make_pr_box());
  EXPECT_TRUE(report.no_signaling);
  EXPECT_EQ(report.max_deviation, 0.0);
}

TEST(NoSignaling, SignalingTableIsFlagged) {
  // Party 1 outputs party 2's question.
  std::vector<double> p(16, 0.0);
  for (int q1 = 0; q1 < 2; ++q1)
    for (int q2 = 0; q2 < 2; ++q2) p[(q1 * 2 + q2) * 4 + q2 * 2] = 1.0;
  const auto report = is_no_signaling(CorrelationTable({2, 2}, {2, 2}, p));
  EXPECT_FALSE(report.no_signaling);
  EXPECT_DOUBLE_EQ(report.max_deviation, 1.0);
  EXPECT_EQ(report.party, 0);
}

TEST(WinningProbability, ChshReferenceValues) {
  const Game g = make_chsh();
  EXPECT_DOUBLE_EQ(winning_probability(g, make_pr_box()), 1.0);
  for (Index q = 0; q < 4; ++q) {
    EXPECT_DOUBLE_EQ(winning_probability_given(g, make_pr_box(), q), 1.0);
  }
  EXPECT_DOUBLE_EQ(winning_probability(g, make_uniform_box({2, 2}, {2, 2})),
                   0.5);
  const auto best = classical_max_win(g);
  EXPECT_DOUBLE_EQ(
      winning_probability(g, table_from_deterministic(best.strategy)), 0.75);
}

TEST(WinningProbability, AlphabetMismatchThrows) {
  EXPECT_THROW(winning_probability(make_magic_square(), make_pr_box()),
               InvalidArgument);
}

TEST(WinningProbability, AffineInTheTable) {
  Xoshiro256 rng(5);
  const Game g = make_magic_square();
  for (int trial = 0; trial < 10; ++trial) {
    const auto t1 = table_from_shared_randomness(
        random_shared_randomness({3, 3}, {8, 8}, 2, rng));
    const auto t2 = table_from_shared_randomness(
        random_shared_randomness({3, 3}, {8, 8}, 3, rng));
    const double lambda = rng.uniform();
    std::vector<double> mix(t1.probs().size());
    for (std::size_t i = 0; i < mix.size(); ++i) {
      mix[i] = lambda * t1.probs()[i] + (1 - lambda) * t2.probs()[i];
    }
    const CorrelationTable tm({3, 3}, {8, 8}, mix);
    EXPECT_NEAR(winning_probability(g, tm),
                lambda * winning_probability(g, t1) +
                    (1 - lambda) * winning_probability(g, t2),
                1e-12);
  }
}

TEST(ClassicalMax, BuiltinValues) {
  EXPECT_DOUBLE_EQ(classical_max_win(make_chsh()).value, 0.75);
  EXPECT_NEAR(classical_max_win(make_magic_square()).value, 8.0 / 9.0, 1e-12);
  EXPECT_DOUBLE_EQ(classical_max_win(make_parity(3)).value, 0.875);
  EXPECT_DOUBLE_EQ(classical_max_win(make_parity(4)).value, 0.875);
  EXPECT_DOUBLE_EQ(classical_max_win(make_parity(5)).value, 0.8125);
}

TEST(ClassicalMax, ParityClosedForm) {
  for (int k = 3; k <= 6; ++k) {
    const double expected =
        0.75 + std::ldexp(1.0, -(static_cast<int>(std::ceil(k / 2.0)) + 1));
    EXPECT_DOUBLE_EQ(classical_max_win(make_parity(k)).value, expected) << k;
  }
}

TEST(ClassicalMax, FirstMaximizerInEnumerationOrder) {
  // The all-zero strategy already attains 3/4 and comes first.
  const auto best = classical_max_win(make_chsh());
  EXPECT_EQ(best.strategy.answers,
            (std::vector<std::vector<int>>{{0, 0}, {0, 0}}));
  EXPECT_EQ(best.wins, 3);
}

TEST(ClassicalMax, BudgetExceededThrows) {
  EXPECT_THROW(classical_max_win(make_magic_square(), 1000), NumericError);
}

TEST(ClassicalMax, AgreesWithHillClimb) {
  EXPECT_DOUBLE_EQ(classical_max_win(make_chsh()).value,
                   oracle::hill_climb(
                       2, 2, 2,
                       [](const auto& q, const auto& a) {
                         return oracle::chsh(q[0], q[1], a[0], a[1]);
                       },
                       30, 1));
  EXPECT_DOUBLE_EQ(classical_max_win(make_magic_square()).value,
                   oracle::hill_climb(
                       2, 3, 8,
                       [](const auto& q, const auto& a) {
                         return oracle::magic_square(q[0], q[1], a[0], a[1]);
                       },
                       60, 2));
  for (int k = 3; k <= 5; ++k) {
    EXPECT_DOUBLE_EQ(
        classical_max_win(make_parity(k)).value,
        oracle::hill_climb(k, 2, 2,
                           [](const auto& q, const auto& a) {
                             return oracle::parity(q, a);
                           },
                           60, 3))
        << k;
  }
}

TEST(ClassicalMax, DominatesRandomMixtures) {
  Xoshiro256 rng(99);
  for (const Game& g : {make_chsh(), make_magic_square(), make_parity(3)}) {
    const double best = classical_max_win(g).value;
    for (int trial = 0; trial < 100; ++trial) {
      const auto s = random_shared_randomness(
          g.question_sizes(), g.answer_sizes(), 1 + trial % 4, rng);
      EXPECT_LE(winning_probability(g, table_from_shared_randomness(s)),
                best + 1e-9);
    }
  }
}

}  // namespace
}  // namespace gamecap
