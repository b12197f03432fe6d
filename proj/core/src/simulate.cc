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

#include "gamecap/simulate.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <mutex>
#include <thread>
#include <utility>

#include "gamecap/entropy.h"
#include "gamecap/rng.h"

namespace gamecap {

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("GAMECAP_WORKERS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

BoxSampler::BoxSampler(const CorrelationTable& box) : box_(box) {
  cdfs_.reserve(box.num_question_tuples());
  for (Index q = 0; q < box.num_question_tuples(); ++q) {
    cdfs_.push_back(build_cdf(box.row(q), kBoxTruncation));
  }
}

Index BoxSampler::sample(Index q_index, double u) const {
  return static_cast<Index>(sample_cdf(cdfs_[q_index], u));
}

ChannelSampler::ChannelSampler(const Channel& channel) : channel_(channel) {
  cdfs_.reserve(channel.num_inputs());
  for (Index x = 0; x < channel.num_inputs(); ++x) {
    cdfs_.push_back(build_cdf(channel.row(x)));
  }
}

Index ChannelSampler::sample(Index x, double u) const {
  return static_cast<Index>(sample_cdf(cdfs_[x], u));
}

namespace {

void require_box_matches(const CorrelationTable& box, const Channel& channel) {
  if (box.question_sizes() != channel.question_sizes() ||
      box.answer_sizes() != channel.answer_sizes()) {
    throw InvalidArgument("box alphabets " + format_sizes(box.question_sizes()) +
                          "x" + format_sizes(box.answer_sizes()) +
                          " do not match channel inputs " +
                          format_sizes(channel.question_sizes()) + "x" +
                          format_sizes(channel.answer_sizes()));
  }
}

// Joint channel input of flat question / answer tuple indices.
Index compose_input(const Channel& channel, Index q_index, Index a_index) {
  const Sizes& qs = channel.question_sizes();
  const Sizes& as = channel.answer_sizes();
  const int k = channel.num_tx();
  Index x = 0;
  Index q_scale = product(qs);
  Index a_scale = product(as);
  for (int i = 0; i < k; ++i) {
    q_scale /= qs[i];
    a_scale /= as[i];
    const int qi = static_cast<int>((q_index / q_scale) % qs[i]);
    const int ai = static_cast<int>((a_index / a_scale) % as[i]);
    x = x * (qs[i] * as[i]) + qi * as[i] + ai;
  }
  return x;
}

void require_winning_box(const Game& game, const CorrelationTable& box) {
  const double p = winning_probability(game, box);
  if (p < 1.0 - 1e-9) {
    throw ValidationError("box is not a winning strategy for '" +
                          game.name() + "' (winning probability " +
                          std::to_string(p) + ")");
  }
}

GameChannelReport require_valid_channel(const Channel& channel,
                                        const Game& game) {
  GameChannelReport report =
      validate_game_channel(channel, game, 1e-9, ChannelMode::kPerReceiver);
  if (!report.passed()) {
    throw ValidationError(std::string("channel fails game-channel "
                                      "validation (") +
                          to_string(report.failure->clause) +
                          "): " + report.failure->detail);
  }
  return report;
}

}  // namespace

std::vector<Index> cooperative_transmit(std::span<const Index> q_block,
                                        const BoxSampler& box,
                                        const Channel& channel,
                                        std::uint64_t seed) {
  require_box_matches(box.box(), channel);
  const Index nq = box.box().num_question_tuples();
  std::vector<Index> x_block(q_block.size());
  for (std::size_t j = 0; j < q_block.size(); ++j) {
    if (q_block[j] < 0 || q_block[j] >= nq) {
      throw InvalidArgument("question index out of range at symbol " +
                            std::to_string(j));
    }
    auto rng = Xoshiro256::for_stream(seed, StreamDomain::kBoxAnswers, j);
    const Index a = box.sample(q_block[j], rng.uniform());
    x_block[j] = compose_input(channel, q_block[j], a);
  }
  return x_block;
}

std::vector<Index> cooperative_transmit(std::span<const Index> q_block,
                                        const CorrelationTable& box,
                                        const Channel& channel,
                                        std::uint64_t seed) {
  return cooperative_transmit(q_block, BoxSampler(box), channel, seed);
}

std::vector<Index> channel_sample(const ChannelSampler& channel,
                                  std::span<const Index> x_block,
                                  std::uint64_t seed) {
  const Index nx = channel.channel().num_inputs();
  std::vector<Index> y_block(x_block.size());
  for (std::size_t j = 0; j < x_block.size(); ++j) {
    if (x_block[j] < 0 || x_block[j] >= nx) {
      throw InvalidArgument("channel input out of range at symbol " +
                            std::to_string(j));
    }
    auto rng = Xoshiro256::for_stream(seed, StreamDomain::kChannelNoise, j);
    y_block[j] = channel.sample(x_block[j], rng.uniform());
  }
  return y_block;
}

std::vector<Index> channel_sample(const Channel& channel,
                                  std::span<const Index> x_block,
                                  std::uint64_t seed) {
  return channel_sample(ChannelSampler(channel), x_block, seed);
}

double winning_fraction(const Game& game, const Channel& channel,
                        std::span<const Index> x_block) {
  if (x_block.empty()) return 0.0;
  Index wins = 0;
  for (Index x : x_block) {
    wins += game.is_winning(channel.question_tuple(x), channel.answer_tuple(x))
                ? 1
                : 0;
  }
  return static_cast<double>(wins) / static_cast<double>(x_block.size());
}

DecompositionReport empirical_decomposition_test(const Channel& channel,
                                                 const Game& game,
                                                 const CorrelationTable& box,
                                                 Index samples,
                                                 std::uint64_t seed) {
  if (samples < 1) throw InvalidArgument("need at least one sample");
  require_box_matches(box, channel);
  require_winning_box(game, box);
  const GameChannelReport report = require_valid_channel(channel, game);

  const int k = channel.num_tx();
  const Sizes& qs = channel.question_sizes();
  const Sizes& ys = channel.output_sizes();
  const Index nq = product(qs);
  const Index ny = channel.num_outputs();

  std::vector<Index> q_block(samples);
  for (Index j = 0; j < samples; ++j) {
    auto rng = Xoshiro256::for_stream(seed, StreamDomain::kQuestions, j);
    q_block[j] = static_cast<Index>(rng.below(nq));
  }
  const auto x_block = cooperative_transmit(q_block, box, channel, seed);
  const auto y_block = channel_sample(channel, x_block, seed);

  DecompositionReport out;
  out.samples = samples;
  out.winning_fraction = winning_fraction(game, channel, x_block);

  // counts[i][q_i * |Y_i| + y_i] and joint[q * |Y| + y].
  std::vector<std::vector<double>> counts(k);
  for (int i = 0; i < k; ++i) counts[i].assign(qs[i] * ys[i], 0.0);
  std::vector<double> joint(nq * ny, 0.0);
  std::vector<int> q(k);
  std::vector<int> y(k);
  for (Index j = 0; j < samples; ++j) {
    decode_mixed_radix(q_block[j], qs, q);
    decode_mixed_radix(y_block[j], ys, y);
    for (int i = 0; i < k; ++i) counts[i][q[i] * ys[i] + y[i]] += 1.0;
    joint[q_block[j] * ny + y_block[j]] += 1.0;
  }

  for (int i = 0; i < k; ++i) {
    const SubChannel& sub = report.receivers[i].winning_subchannel;
    double worst = 0.0;
    double hits = 0.0;
    for (int qi = 0; qi < qs[i]; ++qi) {
      std::vector<double> row(counts[i].begin() + qi * ys[i],
                              counts[i].begin() + (qi + 1) * ys[i]);
      double total = 0.0;
      for (double c : row) total += c;
      if (total == 0.0) continue;
      if (qi < ys[i]) hits += row[qi];
      for (double& c : row) c /= total;
      worst = std::max(worst, total_variation(row, sub.row(qi)));
    }
    out.tv_distances.push_back(worst);
    out.relay_accuracy.push_back(qs[i] == ys[i] ? hits / samples : 0.0);
  }

  // sum_q P(q) [sum_i H(Y_i|q) - H(Y|q)] on the empirical law.
  double dependence = 0.0;
  std::vector<std::vector<double>> marg(k);
  for (Index qi = 0; qi < nq; ++qi) {
    const std::span<const double> row(joint.data() + qi * ny, ny);
    double total = 0.0;
    for (double c : row) total += c;
    if (total == 0.0) continue;
    for (int i = 0; i < k; ++i) marg[i].assign(ys[i], 0.0);
    std::vector<double> p(row.begin(), row.end());
    for (Index yi = 0; yi < ny; ++yi) {
      p[yi] /= total;
      decode_mixed_radix(yi, ys, y);
      for (int i = 0; i < k; ++i) marg[i][y[i]] += p[yi];
    }
    double local = -entropy_bits(p);
    for (int i = 0; i < k; ++i) local += entropy_bits(marg[i]);
    dependence += total / samples * local;
  }
  out.conditional_dependence_bits = std::max(dependence, 0.0);
  return out;
}

void Codebook::validate() const {
  if (alphabet_size < 1 || block_length < 1 || codewords.empty()) {
    throw InvalidArgument("codebook needs a positive alphabet, block length "
                          "and at least one codeword");
  }
  for (const auto& word : codewords) {
    if (static_cast<int>(word.size()) != block_length) {
      throw InvalidArgument("codeword length differs from block length");
    }
    for (int s : word) {
      if (s < 0 || s >= alphabet_size) {
        throw InvalidArgument("codeword symbol out of range");
      }
    }
  }
}

Codebook repetition_codebook(int alphabet_size, int num_messages,
                             int block_length) {
  if (num_messages < 1 || num_messages > alphabet_size) {
    throw InvalidArgument("repetition codebook supports 1.." +
                          std::to_string(alphabet_size) + " messages");
  }
  Codebook book{alphabet_size, block_length, {}};
  for (int m = 0; m < num_messages; ++m) {
    book.codewords.emplace_back(block_length, m);
  }
  book.validate();
  return book;
}

Codebook enumerative_codebook(int alphabet_size, int num_messages,
                              int block_length) {
  if (alphabet_size < 1 || block_length < 1 || num_messages < 1) {
    throw InvalidArgument("enumerative codebook: bad parameters");
  }
  double capacity = std::pow(static_cast<double>(alphabet_size), block_length);
  if (num_messages > capacity) {
    throw InvalidArgument("enumerative codebook: " +
                          std::to_string(num_messages) +
                          " messages do not fit in " +
                          std::to_string(block_length) + " symbols");
  }
  Codebook book{alphabet_size, block_length, {}};
  for (int m = 0; m < num_messages; ++m) {
    std::vector<int> word(block_length, 0);
    int v = m;
    for (int j = block_length - 1; j >= 0 && v > 0; --j) {
      word[j] = v % alphabet_size;
      v /= alphabet_size;
    }
    book.codewords.push_back(std::move(word));
  }
  return book;
}

Codebook random_codebook(int alphabet_size, double rate, int block_length,
                         std::uint64_t seed) {
  if (!(rate >= 0.0) || block_length < 1 || alphabet_size < 1) {
    throw InvalidArgument("random codebook: bad parameters");
  }
  const double exact = std::exp2(rate * block_length);
  if (exact > (1 << 20)) {
    throw InvalidArgument("random codebook: more than 2^20 messages");
  }
  const int messages = std::max(1, static_cast<int>(std::ceil(exact - 1e-9)));
  Codebook book{alphabet_size, block_length, {}};
  auto rng = Xoshiro256::for_stream(seed, StreamDomain::kCodebook, 0);
  for (int m = 0; m < messages; ++m) {
    std::vector<int> word(block_length);
    for (auto& s : word) s = static_cast<int>(rng.below(alphabet_size));
    book.codewords.push_back(std::move(word));
  }
  return book;
}

void SimConfig::validate() const {
  if (block_length < 1) throw InvalidArgument("block length must be >= 1");
  if (trials < 1) throw InvalidArgument("need at least one trial");
}

EndToEndReport end_to_end(const Channel& channel, const Game& game,
                          const CorrelationTable& box,
                          const std::vector<Codebook>& codebooks,
                          const SimConfig& cfg) {
  cfg.validate();
  const int k = channel.num_tx();
  if (static_cast<int>(codebooks.size()) != k) {
    throw InvalidArgument("need one codebook per transmitter");
  }
  const Sizes& qs = channel.question_sizes();
  const Sizes& ys = channel.output_sizes();
  for (int i = 0; i < k; ++i) {
    codebooks[i].validate();
    if (codebooks[i].alphabet_size != qs[i]) {
      throw InvalidArgument("codebook " + std::to_string(i) +
                            " alphabet does not match |Q_i|");
    }
    if (codebooks[i].block_length != cfg.block_length) {
      throw InvalidArgument("codebook " + std::to_string(i) +
                            " block length does not match the config");
    }
  }
  require_box_matches(box, channel);
  require_winning_box(game, box);
  const GameChannelReport report = require_valid_channel(channel, game);

  // log P_i(y | q) of each winning sub-channel.
  std::vector<std::vector<double>> log_sub(k);
  for (int i = 0; i < k; ++i) {
    for (double p : report.receivers[i].winning_subchannel.probs) {
      log_sub[i].push_back(p > 0.0 ? std::log(p)
                                   : -std::numeric_limits<double>::infinity());
    }
  }

  const BoxSampler box_sampler(box);
  const ChannelSampler channel_sampler(channel);
  const int n = cfg.block_length;

  struct Tally {
    std::vector<Index> receiver_errors;
    Index tuple_errors = 0;
    Index wins = 0;
  };

  auto run_trial = [&](Index t, Tally& tally) {
    auto rng = Xoshiro256::for_stream(cfg.rng_seed, StreamDomain::kMessages,
                                      static_cast<std::uint64_t>(t));
    std::vector<int> messages(k);
    for (int i = 0; i < k; ++i) {
      messages[i] = static_cast<int>(rng.below(codebooks[i].num_messages()));
    }
    const std::uint64_t symbol_seed = rng();
    std::vector<Index> q_block(n);
    std::vector<int> q(k);
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < k; ++i) q[i] = codebooks[i].codewords[messages[i]][j];
      q_block[j] = encode_mixed_radix(q, qs);
    }
    const auto x_block =
        cooperative_transmit(q_block, box_sampler, channel, symbol_seed);
    const auto y_block = channel_sample(channel_sampler, x_block, symbol_seed);
    for (Index x : x_block) {
      tally.wins += game.is_winning(channel.question_tuple(x),
                                    channel.answer_tuple(x))
                        ? 1
                        : 0;
    }

    std::vector<std::vector<int>> received(k, std::vector<int>(n));
    std::vector<int> y(k);
    for (int j = 0; j < n; ++j) {
      decode_mixed_radix(y_block[j], ys, y);
      for (int i = 0; i < k; ++i) received[i][j] = y[i];
    }
    bool any_wrong = false;
    for (int i = 0; i < k; ++i) {
      const auto& book = codebooks[i];
      double best = -std::numeric_limits<double>::infinity();
      int decoded = 0;
      for (int m = 0; m < book.num_messages(); ++m) {
        double score = 0.0;
        const auto& word = book.codewords[m];
        for (int j = 0; j < n && score > best; ++j) {
          score += log_sub[i][word[j] * ys[i] + received[i][j]];
        }
        if (score > best) {
          best = score;
          decoded = m;
        }
      }
      if (decoded != messages[i]) {
        ++tally.receiver_errors[i];
        any_wrong = true;
      }
    }
    if (any_wrong) ++tally.tuple_errors;
  };

  Tally total{std::vector<Index>(k, 0), 0, 0};
  std::mutex merge;
  std::atomic<Index> next{0};
  constexpr Index kChunk = 256;
  auto worker = [&] {
    Tally local{std::vector<Index>(k, 0), 0, 0};
    for (Index begin = next.fetch_add(kChunk); begin < cfg.trials;
         begin = next.fetch_add(kChunk)) {
      const Index end = std::min(cfg.trials, begin + kChunk);
      for (Index t = begin; t < end; ++t) run_trial(t, local);
    }
    std::lock_guard<std::mutex> lock(merge);
    for (int i = 0; i < k; ++i) total.receiver_errors[i] += local.receiver_errors[i];
    total.tuple_errors += local.tuple_errors;
    total.wins += local.wins;
  };
  const int workers = static_cast<int>(
      std::min<Index>(resolve_workers(cfg.workers), (cfg.trials + kChunk - 1) / kChunk));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  EndToEndReport out;
  out.trials = cfg.trials;
  const double trials = static_cast<double>(cfg.trials);
  for (int i = 0; i < k; ++i) {
    out.receiver_error_rates.push_back(total.receiver_errors[i] / trials);
  }
  out.message_error_rate = total.tuple_errors / trials;
  out.winning_fraction = total.wins / (trials * n);
  return out;
}

DominanceReport mixture_dominance_test(const Game& game, int trials,
                                       std::uint64_t seed) {
  const ClassicalOptimum best = classical_max_win(game);
  DominanceReport out;
  out.trials = trials;
  out.classical_max = best.value;
  out.max_observed = 0.0;
  const Sizes& qs = game.question_sizes();
  const Sizes& as = game.answer_sizes();
  for (int t = 0; t < trials; ++t) {
    auto rng = Xoshiro256::for_stream(seed, StreamDomain::kStrategies,
                                      static_cast<std::uint64_t>(t));
    SharedRandomnessStrategy s;
    if (t % 10 == 0) {
      s.weights = {1.0};
      s.responses.resize(1);
      for (std::size_t i = 0; i < qs.size(); ++i) {
        ResponseTable r{qs[i], as[i],
                        std::vector<double>(qs[i] * as[i], 0.0)};
        for (int q = 0; q < qs[i]; ++q) {
          r.probs[q * as[i] + static_cast<int>(rng.below(as[i]))] = 1.0;
        }
        s.responses[0].push_back(std::move(r));
      }
    } else {
      const int latent = 1 + static_cast<int>(rng.below(4));
      s = random_shared_randomness(qs, as, latent, rng);
    }
    const double p =
        winning_probability(game, table_from_shared_randomness(s));
    out.max_observed = std::max(out.max_observed, p);
  }
  out.passed = out.max_observed <= out.classical_max + 1e-9;
  return out;
}

}  // namespace gamecap
