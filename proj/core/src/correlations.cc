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

#include "gamecap/correlations.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "gamecap/rng.h"

namespace gamecap {

CorrelationTable::CorrelationTable(Sizes question_sizes, Sizes answer_sizes,
                                   std::vector<double> probs, double tol)
    : question_sizes_(std::move(question_sizes)),
      answer_sizes_(std::move(answer_sizes)),
      probs_(std::move(probs)) {
  if (question_sizes_.empty() ||
      question_sizes_.size() != answer_sizes_.size()) {
    throw InvalidArgument("correlation table: inconsistent party count");
  }
  num_questions_ = product(question_sizes_);
  num_answers_ = product(answer_sizes_);
  if (static_cast<Index>(probs_.size()) != num_questions_ * num_answers_) {
    throw InvalidArgument("correlation table has " +
                          std::to_string(probs_.size()) +
                          " entries, expected " +
                          std::to_string(num_questions_ * num_answers_));
  }
  for (Index q = 0; q < num_questions_; ++q) {
    double total = 0.0;
    for (Index a = 0; a < num_answers_; ++a) {
      double& p = probs_[q * num_answers_ + a];
      if (!std::isfinite(p) || p < -tol || p > 1.0 + 1e-12) {
        throw ValidationError("correlation table entry out of [0, 1] at "
                              "question " + std::to_string(q));
      }
      if (p < 0.0) p = 0.0;
      total += p;
    }
    if (std::abs(total - 1.0) > tol) {
      throw ValidationError("correlation table row for question " +
                            std::to_string(q) + " sums to " +
                            std::to_string(total));
    }
  }
}

bool CorrelationTable::same_alphabets(const Game& game) const {
  return question_sizes_ == game.question_sizes() &&
         answer_sizes_ == game.answer_sizes();
}

void SharedRandomnessStrategy::validate() const {
  if (weights.empty() || weights.size() != responses.size()) {
    throw InvalidArgument("shared randomness: weights / responses mismatch");
  }
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw InvalidArgument("shared randomness: negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > kNormalizationTol) {
    throw InvalidArgument("shared randomness: weights sum to " +
                          std::to_string(total));
  }
  const auto& first = responses.front();
  if (first.size() < 2) {
    throw InvalidArgument("shared randomness: need at least two parties");
  }
  for (const auto& per_latent : responses) {
    if (per_latent.size() != first.size()) {
      throw InvalidArgument("shared randomness: party count varies with v");
    }
    for (std::size_t i = 0; i < per_latent.size(); ++i) {
      const ResponseTable& t = per_latent[i];
      if (t.num_questions != first[i].num_questions ||
          t.num_answers != first[i].num_answers ||
          t.num_questions <= 0 || t.num_answers <= 0 ||
          static_cast<int>(t.probs.size()) != t.num_questions * t.num_answers) {
        throw InvalidArgument("shared randomness: response table dimension "
                              "mismatch for party " + std::to_string(i));
      }
      for (int q = 0; q < t.num_questions; ++q) {
        double row = 0.0;
        for (int a = 0; a < t.num_answers; ++a) {
          if (t(q, a) < 0.0) {
            throw InvalidArgument("shared randomness: negative response");
          }
          row += t(q, a);
        }
        if (std::abs(row - 1.0) > kNormalizationTol) {
          throw InvalidArgument("shared randomness: response row not "
                                "normalized for party " + std::to_string(i));
        }
      }
    }
  }
}

void DeterministicStrategy::validate() const {
  if (answers.size() != answer_sizes.size() || answers.size() < 2) {
    throw InvalidArgument("deterministic strategy: party count mismatch");
  }
  for (std::size_t i = 0; i < answers.size(); ++i) {
    if (answers[i].empty()) {
      throw InvalidArgument("deterministic strategy: empty question set");
    }
    for (int a : answers[i]) {
      if (a < 0 || a >= answer_sizes[i]) {
        throw InvalidArgument("deterministic strategy: answer out of range "
                              "for party " + std::to_string(i));
      }
    }
  }
}

CorrelationTable table_from_shared_randomness(
    const SharedRandomnessStrategy& strategy) {
  strategy.validate();
  const auto& proto = strategy.responses.front();
  const int k = static_cast<int>(proto.size());
  Sizes qs(k);
  Sizes as(k);
  for (int i = 0; i < k; ++i) {
    qs[i] = proto[i].num_questions;
    as[i] = proto[i].num_answers;
  }
  const Index nq = product(qs);
  const Index na = product(as);
  std::vector<double> probs(nq * na, 0.0);
  std::vector<int> q(k);
  std::vector<int> a(k);
  for (std::size_t v = 0; v < strategy.weights.size(); ++v) {
    const double w = strategy.weights[v];
    if (w == 0.0) continue;
    const auto& tables = strategy.responses[v];
    for (Index qi = 0; qi < nq; ++qi) {
      decode_mixed_radix(qi, qs, q);
      std::fill(a.begin(), a.end(), 0);
      Index ai = 0;
      do {
        double p = w;
        for (int i = 0; i < k && p != 0.0; ++i) p *= tables[i](q[i], a[i]);
        probs[qi * na + ai] += p;
        ++ai;
      } while (advance_mixed_radix(a, as));
    }
  }
  return CorrelationTable(std::move(qs), std::move(as), std::move(probs));
}

CorrelationTable table_from_deterministic(
    const DeterministicStrategy& strategy) {
  strategy.validate();
  const int k = static_cast<int>(strategy.answers.size());
  Sizes qs(k);
  for (int i = 0; i < k; ++i) {
    qs[i] = static_cast<int>(strategy.answers[i].size());
  }
  const Sizes& as = strategy.answer_sizes;
  const Index nq = product(qs);
  const Index na = product(as);
  std::vector<double> probs(nq * na, 0.0);
  std::vector<int> q(k);
  std::vector<int> a(k);
  for (Index qi = 0; qi < nq; ++qi) {
    decode_mixed_radix(qi, qs, q);
    for (int i = 0; i < k; ++i) a[i] = strategy.answers[i][q[i]];
    probs[qi * na + encode_mixed_radix(a, as)] = 1.0;
  }
  return CorrelationTable(std::move(qs), as, std::move(probs));
}

NoSignalingReport is_no_signaling(const CorrelationTable& table, double tol) {
  NoSignalingReport report;
  const Sizes& qs = table.question_sizes();
  const Sizes& as = table.answer_sizes();
  const int k = table.num_parties();
  const Index nq = table.num_question_tuples();
  const Index na = table.num_answer_tuples();
  std::vector<int> q(k);
  std::vector<int> a(k);
  for (int i = 0; i < k; ++i) {
    const int cells = qs[i] * as[i];
    std::vector<double> lo(cells, std::numeric_limits<double>::infinity());
    std::vector<double> hi(cells, -std::numeric_limits<double>::infinity());
    std::vector<double> marginal(as[i]);
    for (Index qi = 0; qi < nq; ++qi) {
      decode_mixed_radix(qi, qs, q);
      std::fill(marginal.begin(), marginal.end(), 0.0);
      for (Index ai = 0; ai < na; ++ai) {
        decode_mixed_radix(ai, as, a);
        marginal[a[i]] += table(qi, ai);
      }
      for (int ai = 0; ai < as[i]; ++ai) {
        const int cell = q[i] * as[i] + ai;
        lo[cell] = std::min(lo[cell], marginal[ai]);
        hi[cell] = std::max(hi[cell], marginal[ai]);
      }
    }
    for (int cell = 0; cell < cells; ++cell) {
      const double dev = hi[cell] - lo[cell];
      if (dev > report.max_deviation) {
        report.max_deviation = dev;
        report.party = i;
        report.question = cell / as[i];
        report.answer = cell % as[i];
      }
    }
  }
  report.no_signaling = report.max_deviation <= tol;
  return report;
}

namespace {

void require_match(const Game& game, const CorrelationTable& table) {
  if (!table.same_alphabets(game)) {
    throw InvalidArgument("alphabet mismatch between game '" + game.name() +
                          "' " + format_sizes(game.question_sizes()) + "x" +
                          format_sizes(game.answer_sizes()) + " and table " +
                          format_sizes(table.question_sizes()) + "x" +
                          format_sizes(table.answer_sizes()));
  }
}

}  // namespace

double winning_probability_given(const Game& game,
                                 const CorrelationTable& table,
                                 Index q_index) {
  require_match(game, table);
  double p = 0.0;
  for (Index a = 0; a < game.num_answer_tuples(); ++a) {
    if (game.is_winning(q_index, a)) p += table(q_index, a);
  }
  return p;
}

double winning_probability(const Game& game, const CorrelationTable& table) {
  require_match(game, table);
  const Index nq = game.num_question_tuples();
  const Index na = game.num_answer_tuples();
  double total = 0.0;
  for (Index q = 0; q < nq; ++q) {
    for (Index a = 0; a < na; ++a) {
      if (game.is_winning(q, a)) total += table(q, a);
    }
  }
  return std::clamp(total / static_cast<double>(nq), 0.0, 1.0);
}

ClassicalOptimum classical_max_win(const Game& game, double budget) {
  const int k = game.num_parties();
  const Sizes& qs = game.question_sizes();
  const Sizes& as = game.answer_sizes();

  // One digit per (party, question), party-major.
  Sizes radices;
  std::vector<int> owner;
  double count = 1.0;
  for (int i = 0; i < k; ++i) {
    for (int q = 0; q < qs[i]; ++q) {
      radices.push_back(as[i]);
      owner.push_back(i);
      count *= as[i];
    }
  }
  if (count > budget) {
    throw NumericError("classical_max_win: " + std::to_string(count) +
                       " deterministic strategies exceed the budget of " +
                       std::to_string(budget));
  }

  // Answer-tuple stride of each party.
  std::vector<Index> stride(k, 1);
  for (int i = k - 2; i >= 0; --i) stride[i] = stride[i + 1] * as[i + 1];
  std::vector<int> offset(k, 0);
  for (int i = 1; i < k; ++i) offset[i] = offset[i - 1] + qs[i - 1];

  const Index nq = game.num_question_tuples();
  std::vector<std::vector<int>> questions(nq);
  for (Index qi = 0; qi < nq; ++qi) questions[qi] = decode_mixed_radix(qi, qs);

  std::vector<int> digits(radices.size(), 0);
  Index best_wins = -1;
  std::vector<int> best_digits;
  do {
    Index wins = 0;
    for (Index qi = 0; qi < nq; ++qi) {
      const auto& q = questions[qi];
      Index ai = 0;
      for (int i = 0; i < k; ++i) ai += stride[i] * digits[offset[i] + q[i]];
      wins += game.is_winning(qi, ai) ? 1 : 0;
    }
    if (wins > best_wins) {
      best_wins = wins;
      best_digits = digits;
      if (best_wins == nq) break;
    }
  } while (advance_mixed_radix(digits, radices));

  ClassicalOptimum out;
  out.wins = best_wins;
  out.value = static_cast<double>(best_wins) / static_cast<double>(nq);
  out.strategy.answer_sizes = as;
  out.strategy.answers.resize(k);
  for (int i = 0; i < k; ++i) {
    out.strategy.answers[i].assign(best_digits.begin() + offset[i],
                                   best_digits.begin() + offset[i] + qs[i]);
  }
  return out;
}

CorrelationTable make_pr_box() {
  std::vector<double> probs(16, 0.0);
  for (int q1 = 0; q1 < 2; ++q1) {
    for (int q2 = 0; q2 < 2; ++q2) {
      for (int a1 = 0; a1 < 2; ++a1) {
        for (int a2 = 0; a2 < 2; ++a2) {
          if ((a1 ^ a2) == (q1 & q2)) {
            probs[(q1 * 2 + q2) * 4 + a1 * 2 + a2] = 0.5;
          }
        }
      }
    }
  }
  return CorrelationTable({2, 2}, {2, 2}, std::move(probs));
}

CorrelationTable make_uniform_box(const Sizes& question_sizes,
                                  const Sizes& answer_sizes) {
  const Index nq = product(question_sizes);
  const Index na = product(answer_sizes);
  return CorrelationTable(question_sizes, answer_sizes,
                          std::vector<double>(nq * na, 1.0 / na));
}

SharedRandomnessStrategy random_shared_randomness(const Sizes& question_sizes,
                                                  const Sizes& answer_sizes,
                                                  int num_latent,
                                                  Xoshiro256& rng) {
  if (num_latent < 1) {
    throw InvalidArgument("random_shared_randomness: need a latent value");
  }
  SharedRandomnessStrategy s;
  s.weights = rng.dirichlet(num_latent);
  s.responses.resize(num_latent);
  for (auto& per_latent : s.responses) {
    for (std::size_t i = 0; i < question_sizes.size(); ++i) {
      ResponseTable t;
      t.num_questions = question_sizes[i];
      t.num_answers = answer_sizes[i];
      for (int q = 0; q < t.num_questions; ++q) {
        auto row = rng.dirichlet(t.num_answers);
        t.probs.insert(t.probs.end(), row.begin(), row.end());
      }
      per_latent.push_back(std::move(t));
    }
  }
  return s;
}

}  // namespace gamecap
