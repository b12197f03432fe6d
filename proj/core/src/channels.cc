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

#include "gamecap/channels.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "gamecap/entropy.h"

namespace gamecap {

const char* to_string(ChannelMode mode) {
  switch (mode) {
    case ChannelMode::kPerReceiver:
      return "per-receiver";
    case ChannelMode::kGlobal:
      return "global";
  }
  return "?";
}

ChannelMode channel_mode_from_string(const std::string& text) {
  if (text == "per-receiver") return ChannelMode::kPerReceiver;
  if (text == "global") return ChannelMode::kGlobal;
  throw InvalidArgument("unknown channel mode '" + text +
                        "' (expected per-receiver or global)");
}

const char* to_string(GameChannelClause clause) {
  switch (clause) {
    case GameChannelClause::kAlphabets:
      return "alphabets";
    case GameChannelClause::kFactorization:
      return "factorization";
    case GameChannelClause::kWeakSymmetry:
      return "weak-symmetry";
    case GameChannelClause::kLessNoisy:
      return "less-noisy";
  }
  return "?";
}

Channel::Channel(Sizes question_sizes, Sizes answer_sizes, Sizes output_sizes,
                 std::vector<double> probs, ChannelMode mode, double tol)
    : question_sizes_(std::move(question_sizes)),
      answer_sizes_(std::move(answer_sizes)),
      output_sizes_(std::move(output_sizes)),
      mode_(mode),
      probs_(std::move(probs)) {
  const std::size_t k = question_sizes_.size();
  if (k == 0 || answer_sizes_.size() != k || output_sizes_.size() != k) {
    throw InvalidArgument("channel: question, answer and output size lists "
                          "must have one entry per transmitter");
  }
  input_sizes_.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (question_sizes_[i] <= 0 || answer_sizes_[i] <= 0) {
      throw InvalidArgument("channel: alphabet sizes must be positive");
    }
    input_sizes_[i] = question_sizes_[i] * answer_sizes_[i];
  }
  num_inputs_ = product(input_sizes_);
  num_outputs_ = product(output_sizes_);
  if (static_cast<Index>(probs_.size()) != num_inputs_ * num_outputs_) {
    throw InvalidArgument("channel tensor has " +
                          std::to_string(probs_.size()) +
                          " entries, expected " +
                          std::to_string(num_inputs_ * num_outputs_));
  }
  for (Index x = 0; x < num_inputs_; ++x) {
    double total = 0.0;
    for (Index y = 0; y < num_outputs_; ++y) {
      double& p = probs_[x * num_outputs_ + y];
      if (!std::isfinite(p) || p < -tol) {
        throw ValidationError("channel entry negative or non-finite at "
                              "input " + std::to_string(x));
      }
      if (p < 0.0) p = 0.0;
      total += p;
    }
    if (std::abs(total - 1.0) > tol) {
      throw ValidationError("channel row for input " + std::to_string(x) +
                            " sums to " + std::to_string(total));
    }
  }
}

Index Channel::input_index(std::span<const int> q,
                           std::span<const int> a) const {
  if (q.size() != question_sizes_.size() || a.size() != answer_sizes_.size()) {
    throw InvalidArgument("input tuple length does not match transmitters");
  }
  Index x = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] < 0 || q[i] >= question_sizes_[i] || a[i] < 0 ||
        a[i] >= answer_sizes_[i]) {
      throw InvalidArgument("input symbol out of range for transmitter " +
                            std::to_string(i));
    }
    x = x * input_sizes_[i] + q[i] * answer_sizes_[i] + a[i];
  }
  return x;
}

void Channel::split_input(Index x, std::span<int> q, std::span<int> a) const {
  if (x < 0 || x >= num_inputs_) {
    throw InvalidArgument("input index " + std::to_string(x) +
                          " out of range");
  }
  for (std::size_t i = input_sizes_.size(); i-- > 0;) {
    const int xi = static_cast<int>(x % input_sizes_[i]);
    x /= input_sizes_[i];
    q[i] = xi / answer_sizes_[i];
    a[i] = xi % answer_sizes_[i];
  }
}

Index Channel::question_tuple(Index x) const {
  Index q = 0;
  Index scale = 1;
  for (std::size_t i = input_sizes_.size(); i-- > 0;) {
    const int xi = static_cast<int>(x % input_sizes_[i]);
    x /= input_sizes_[i];
    q += scale * (xi / answer_sizes_[i]);
    scale *= question_sizes_[i];
  }
  return q;
}

Index Channel::answer_tuple(Index x) const {
  Index a = 0;
  Index scale = 1;
  for (std::size_t i = input_sizes_.size(); i-- > 0;) {
    const int xi = static_cast<int>(x % input_sizes_[i]);
    x /= input_sizes_[i];
    a += scale * (xi % answer_sizes_[i]);
    scale *= answer_sizes_[i];
  }
  return a;
}

Channel Channel::with_mode(ChannelMode mode) const {
  Channel copy = *this;
  copy.mode_ = mode;
  return copy;
}

ChannelParams ChannelParams::from_eta(double eta, ChannelMode mode) {
  return ChannelParams{1.0 - eta, eta, mode};
}

void ChannelParams::validate() const {
  if (!(eta_l >= 0.0 && eta_l < eta_w && eta_w <= 1.0)) {
    throw InvalidArgument("channel parameters need 0 <= eta_l < eta_w <= 1 "
                          "(got eta_w=" + std::to_string(eta_w) +
                          ", eta_l=" + std::to_string(eta_l) + ")");
  }
}

Channel build_game_channel(const Game& game, const ChannelParams& params,
                           Sizes output_sizes) {
  params.validate();
  const Sizes& qs = game.question_sizes();
  if (output_sizes.empty()) output_sizes = qs;
  if (output_sizes != qs) {
    throw InvalidArgument("game channel output sizes " +
                          format_sizes(output_sizes) +
                          " must equal the question sizes " + format_sizes(qs));
  }
  const int k = game.num_parties();
  const Sizes& as = game.answer_sizes();
  Sizes inputs(k);
  for (int i = 0; i < k; ++i) inputs[i] = qs[i] * as[i];
  const Index nx = product(inputs);
  const Index ny = product(output_sizes);
  const double total_q = static_cast<double>(product(qs));

  std::vector<double> probs(nx * ny);
  std::vector<int> xd(k);
  std::vector<int> q(k);
  std::vector<int> a(k);
  std::vector<int> y(k);
  for (Index x = 0; x < nx; ++x) {
    decode_mixed_radix(x, inputs, xd);
    for (int i = 0; i < k; ++i) {
      q[i] = xd[i] / as[i];
      a[i] = xd[i] % as[i];
    }
    const bool win = game.is_winning(q, a);
    const double eta = win ? params.eta_w : params.eta_l;
    std::fill(y.begin(), y.end(), 0);
    Index yi = 0;
    do {
      double p;
      if (params.mode == ChannelMode::kPerReceiver) {
        p = 1.0;
        for (int i = 0; i < k; ++i) {
          p *= eta * (y[i] == q[i] ? 1.0 : 0.0) + (1.0 - eta) / qs[i];
        }
      } else {
        const bool relay = std::equal(y.begin(), y.end(), q.begin());
        p = eta * (relay ? 1.0 : 0.0) + (1.0 - eta) / total_q;
      }
      probs[x * ny + yi] = p;
      ++yi;
    } while (advance_mixed_radix(y, output_sizes));
  }
  return Channel(qs, as, std::move(output_sizes), std::move(probs),
                 params.mode);
}

void SubChannel::validate(double tol) const {
  if (num_inputs <= 0 || num_outputs <= 0 ||
      static_cast<Index>(probs.size()) != Index{num_inputs} * num_outputs) {
    throw InvalidArgument("sub-channel dimensions inconsistent");
  }
  for (int q = 0; q < num_inputs; ++q) {
    double total = 0.0;
    for (double p : row(q)) {
      if (p < -tol) throw ValidationError("sub-channel entry negative");
      total += p;
    }
    if (std::abs(total - 1.0) > tol) {
      throw ValidationError("sub-channel row " + std::to_string(q) +
                            " sums to " + std::to_string(total));
    }
  }
}

bool is_weakly_symmetric(const SubChannel& sub, double tol) {
  if (sub.num_inputs <= 0 || sub.num_outputs <= 0 ||
      static_cast<Index>(sub.probs.size()) !=
          Index{sub.num_inputs} * sub.num_outputs) {
    throw InvalidArgument("sub-channel dimensions inconsistent");
  }
  std::vector<double> column(sub.num_outputs, 0.0);
  for (int q = 0; q < sub.num_inputs; ++q) {
    for (int y = 0; y < sub.num_outputs; ++y) column[y] += sub(q, y);
  }
  const auto [lo, hi] = std::minmax_element(column.begin(), column.end());
  if (*hi - *lo > tol) return false;

  std::vector<double> reference(sub.row(0).begin(), sub.row(0).end());
  std::sort(reference.begin(), reference.end());
  std::vector<double> sorted(sub.num_outputs);
  for (int q = 1; q < sub.num_inputs; ++q) {
    std::copy(sub.row(q).begin(), sub.row(q).end(), sorted.begin());
    std::sort(sorted.begin(), sorted.end());
    for (int y = 0; y < sub.num_outputs; ++y) {
      if (std::abs(sorted[y] - reference[y]) > tol) return false;
    }
  }
  return true;
}

double weakly_symmetric_capacity(const SubChannel& sub, double tol) {
  if (!is_weakly_symmetric(sub, tol)) {
    throw ValidationError("sub-channel is not weakly symmetric");
  }
  return std::log2(static_cast<double>(sub.num_outputs)) -
         entropy_bits(sub.row(0));
}

double conditional_output_entropy(const Channel& channel, Index x) {
  if (x < 0 || x >= channel.num_inputs()) {
    throw InvalidArgument("input index " + std::to_string(x) +
                          " out of range");
  }
  return entropy_bits(channel.row(x));
}

double conditional_output_entropy(const Channel& channel,
                                  std::span<const int> q,
                                  std::span<const int> a) {
  return conditional_output_entropy(channel, channel.input_index(q, a));
}

GameChannelReport validate_game_channel(const Channel& channel,
                                        const Game& game, double tol) {
  return validate_game_channel(channel, game, tol, channel.mode());
}

namespace {

std::string describe_input(const Channel& channel, Index x) {
  std::vector<int> q(channel.num_tx());
  std::vector<int> a(channel.num_tx());
  channel.split_input(x, q, a);
  return "input q=" + format_sizes(q) + " a=" + format_sizes(a);
}

}  // namespace

GameChannelReport validate_game_channel(const Channel& channel,
                                        const Game& game, double tol,
                                        ChannelMode identification) {
  GameChannelReport report;
  report.identification = identification;
  auto fail = [&report](GameChannelClause clause, std::string detail) {
    if (!report.failure) report.failure = GameChannelFailure{clause, detail};
  };

  if (channel.question_sizes() != game.question_sizes() ||
      channel.answer_sizes() != game.answer_sizes()) {
    fail(GameChannelClause::kAlphabets,
         "channel alphabets " + format_sizes(channel.question_sizes()) + "x" +
             format_sizes(channel.answer_sizes()) + " do not match game '" +
             game.name() + "' " + format_sizes(game.question_sizes()) + "x" +
             format_sizes(game.answer_sizes()));
    return report;
  }

  const int k = channel.num_tx();
  const Sizes& ys = channel.output_sizes();
  const Index nx = channel.num_inputs();
  const Index ny = channel.num_outputs();

  // Receiver groups: one per transmitter, or a single group seeing y_[K]
  // for the joint question q_[K].
  const int groups = identification == ChannelMode::kPerReceiver ? k : 1;
  std::vector<int> group_questions(groups);
  std::vector<int> group_outputs(groups);
  if (identification == ChannelMode::kPerReceiver) {
    for (int i = 0; i < k; ++i) {
      group_questions[i] = channel.question_sizes()[i];
      group_outputs[i] = ys[i];
    }
  } else {
    group_questions[0] = static_cast<int>(product(channel.question_sizes()));
    group_outputs[0] = static_cast<int>(ny);
  }

  // Per joint output: the group-local output index.
  std::vector<std::vector<int>> y_local(ny, std::vector<int>(groups));
  {
    std::vector<int> y(k);
    for (Index yi = 0; yi < ny; ++yi) {
      decode_mixed_radix(yi, ys, y);
      if (identification == ChannelMode::kPerReceiver) {
        y_local[yi] = y;
      } else {
        y_local[yi][0] = static_cast<int>(yi);
      }
    }
  }

  std::vector<std::vector<double>> factors(groups);
  std::vector<std::vector<char>> seen(groups);
  for (int g = 0; g < groups; ++g) {
    factors[g].assign(
        static_cast<std::size_t>(group_questions[g]) * group_outputs[g], 0.0);
    seen[g].assign(group_questions[g], 0);
  }

  std::vector<int> q(k);
  std::vector<int> a(k);
  std::vector<std::vector<double>> marginals(groups);
  Index num_winning = 0;
  double residual = 0.0;
  std::string residual_where;
  report.max_winning_entropy = 0.0;

  for (Index x = 0; x < nx; ++x) {
    channel.split_input(x, q, a);
    const bool win =
        game.is_winning(channel.question_tuple(x), channel.answer_tuple(x));
    const double h = entropy_bits(channel.row(x));
    if (!win) {
      report.min_losing_entropy = std::min(report.min_losing_entropy, h);
      continue;
    }
    if (num_winning == 0 || h > report.max_winning_entropy) {
      report.max_winning_entropy = h;
    }
    ++num_winning;

    for (int g = 0; g < groups; ++g) marginals[g].assign(group_outputs[g], 0.0);
    const auto row = channel.row(x);
    for (Index yi = 0; yi < ny; ++yi) {
      for (int g = 0; g < groups; ++g) marginals[g][y_local[yi][g]] += row[yi];
    }

    for (int g = 0; g < groups; ++g) {
      const int gq = identification == ChannelMode::kPerReceiver
                         ? q[g]
                         : static_cast<int>(channel.question_tuple(x));
      double* ref = &factors[g][static_cast<std::size_t>(gq) *
                                group_outputs[g]];
      if (!seen[g][gq]) {
        std::copy(marginals[g].begin(), marginals[g].end(), ref);
        seen[g][gq] = 1;
        continue;
      }
      for (int y = 0; y < group_outputs[g]; ++y) {
        const double d = std::abs(marginals[g][y] - ref[y]);
        if (d > residual) {
          residual = d;
          residual_where = describe_input(channel, x) + ", receiver " +
                           std::to_string(g) + " factor depends on answers "
                           "or other questions";
        }
      }
    }

    if (groups > 1) {
      for (Index yi = 0; yi < ny; ++yi) {
        double prod = 1.0;
        for (int g = 0; g < groups; ++g) prod *= marginals[g][y_local[yi][g]];
        const double d = std::abs(row[yi] - prod);
        if (d > residual) {
          residual = d;
          residual_where = describe_input(channel, x) +
                           ", output does not factor across receivers";
        }
      }
    }
  }
  report.factorization_residual = residual;

  if (num_winning == 0) {
    fail(GameChannelClause::kFactorization, "game has no winning inputs");
  }
  for (int g = 0; g < groups && num_winning > 0; ++g) {
    for (int gq = 0; gq < group_questions[g]; ++gq) {
      if (!seen[g][gq]) {
        fail(GameChannelClause::kFactorization,
             "receiver " + std::to_string(g) + " question " +
                 std::to_string(gq) + " never occurs in a winning input");
      }
    }
  }
  if (residual > tol) {
    fail(GameChannelClause::kFactorization,
         residual_where + " (residual " + std::to_string(residual) + ")");
  }

  for (int g = 0; g < groups; ++g) {
    ReceiverReport r;
    r.num_questions = group_questions[g];
    r.num_outputs = group_outputs[g];
    r.winning_subchannel =
        SubChannel{group_questions[g], group_outputs[g], factors[g]};
    if (num_winning > 0) {
      r.weakly_symmetric = is_weakly_symmetric(r.winning_subchannel, tol);
      r.h_w = entropy_bits(r.winning_subchannel.row(0));
    }
    if (num_winning > 0 && !r.weakly_symmetric) {
      fail(GameChannelClause::kWeakSymmetry,
           "winning sub-channel of receiver " + std::to_string(g) +
               " is not weakly symmetric");
    }
    report.receivers.push_back(std::move(r));
  }

  report.strictness_margin =
      report.min_losing_entropy - report.max_winning_entropy;
  if (num_winning > 0 && report.strictness_margin < kStrictnessMargin) {
    fail(GameChannelClause::kLessNoisy,
         "max winning output entropy " +
             std::to_string(report.max_winning_entropy) +
             " bits is not strictly below min losing output entropy " +
             std::to_string(report.min_losing_entropy) + " bits");
  }
  return report;
}

double closed_form_sum_capacity(const GameChannelReport& report) {
  if (!report.passed()) {
    throw ValidationError(std::string("game channel validation failed (") +
                          to_string(report.failure->clause) +
                          "): " + report.failure->detail);
  }
  double total = 0.0;
  for (const auto& r : report.receivers) {
    total += std::log2(static_cast<double>(r.num_outputs)) - r.h_w;
  }
  return total;
}

std::string report_to_csv(const GameChannelReport& report) {
  std::ostringstream out;
  out.precision(10);
  out << "receiver,num_questions,num_outputs,h_w_bits,weakly_symmetric\n";
  for (std::size_t i = 0; i < report.receivers.size(); ++i) {
    const auto& r = report.receivers[i];
    out << i + 1 << ',' << r.num_questions << ',' << r.num_outputs << ','
        << r.h_w << ',' << (r.weakly_symmetric ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace gamecap
